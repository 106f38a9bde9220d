#pragma once

#include "mcone/cone.hpp"
#include "mcone/linalg.hpp"

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mcone {

/// Line-oriented cone description:
///
///   # comment
///   DIM 3
///   GEN
///   1 1 1
///   -1 -1 1
///   CHARGE
///   0 0 1
///   VEC z
///   1 0 0
///   MAP phi
///   1 0 0
///   0 1 0
///   0 0 1
///
/// Entries are integers or p/q. GEN takes one or more rows, CHARGE and VEC
/// exactly one, MAP exactly DIM rows.
struct ConeDocument {
  std::size_t dimension = 0;
  std::vector<RVector> generators;
  RVector charge;
  std::vector<std::pair<std::string, RVector>> vectors;
  std::vector<std::pair<std::string, Matrix>> maps;

  PolyhedralCone cone() const { return PolyhedralCone(generators, charge); }
  const RVector* find_vector(std::string_view name) const;
  const Matrix* find_map(std::string_view name) const;

  friend bool operator==(const ConeDocument&, const ConeDocument&) = default;
};

class ParseError : public InputError {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  /// The diagnostic without the position prefix.
  const std::string& message() const { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

ConeDocument parse_document(std::string_view text);
ConeDocument load_document(const std::filesystem::path& path);
std::string serialize(const ConeDocument& doc);

ConeDocument document_from_cone(const PolyhedralCone& cone);

}  // namespace mcone
