#include "mcone/linalg.hpp"
#include "mcone/rational.hpp"

#include <doctest.h>

using namespace mcone;

TEST_CASE("parse_rational") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-7") == -7);
  CHECK(parse_rational("2/4") == Rational(1, 2));
  CHECK(parse_rational("-3/9") == Rational(-1, 3));
  CHECK(parse_rational("+5") == 5);
  CHECK_THROWS_AS(parse_rational(""), InputError);
  CHECK_THROWS_AS(parse_rational("1.5"), InputError);
  CHECK_THROWS_AS(parse_rational("1e3"), InputError);
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational("1/-2"), InputError);
  CHECK_THROWS_AS(parse_rational("abc"), InputError);
}

TEST_CASE("parse_vector and to_string round trip") {
  const RVector v = parse_vector("1/2,-1,0");
  REQUIRE(v.size() == 3);
  CHECK(v[0] == Rational(1, 2));
  CHECK(to_string(v) == "1/2,-1,0");
  CHECK(parse_vector(to_string(v)) == v);
  CHECK(to_string(Rational(-6, 4)) == "-3/2");
  CHECK_THROWS_AS(parse_vector("1,,2"), InputError);
}

TEST_CASE("exact_root") {
  CHECK(exact_root(Rational(9, 4), 2) == Rational(3, 2));
  CHECK(exact_root(Rational(27), 3) == Rational(3));
  CHECK_FALSE(exact_root(Rational(2), 2).has_value());
  CHECK(exact_root(Rational(0), 5) == Rational(0));
  CHECK(pow(Rational(2, 3), 3) == Rational(8, 27));
  CHECK(pow(Rational(5), 0) == 1);
}

TEST_CASE("intervals") {
  const RationalInterval i{Rational(1, 3), Rational(1, 2)};
  CHECK(i.width() == Rational(1, 6));
  CHECK(i.contains(Rational(2, 5)));
  CHECK_FALSE(i.contains(Rational(1)));
  CHECK(RationalInterval::point(3).is_point());
}

TEST_CASE("matrix basics") {
  const Matrix m = Matrix::from_rows({{1, 2}, {3, 4}});
  CHECK(m * RVector{1, 1} == RVector{3, 7});
  CHECK(m.transpose() == Matrix::from_columns({{1, 2}, {3, 4}}));
  CHECK(m * Matrix::identity(2) == m);
  CHECK(rank(m) == 2);
  CHECK(rank(Matrix::from_rows({{1, 2}, {2, 4}})) == 1);
  CHECK(rank(std::vector<RVector>{{1, 0, 0}, {0, 1, 0}, {1, 1, 0}}) == 2);
  CHECK(dot(RVector{1, 2}, RVector{3, 4}) == 11);
  CHECK(is_zero(zeros(3)));
  CHECK(RVector{1, 2} - RVector{1, 2} == zeros(2));
  CHECK(Rational(2) * RVector{1, -1} == RVector{2, -2});
}
