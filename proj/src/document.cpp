#include "mcone/document.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>

namespace mcone {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) && line[i] != '#') ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

bool is_word(std::string_view s) {
  return !s.empty() && std::isalpha(static_cast<unsigned char>(s.front()));
}

bool valid_name(std::string_view s) {
  if (!is_word(s)) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-' && c != '\'') return false;
  return true;
}

enum class Section { None, Gen, Charge, Vec, Map };

class Parser {
 public:
  ConeDocument run(std::string_view text) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const auto end = text.find('\n', pos);
      std::string_view line = text.substr(pos, end == std::string_view::npos ? text.size() - pos : end - pos);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      ++line_no_;
      handle_line(tokenize(line));
      if (end == std::string_view::npos) break;
      pos = end + 1;
    }
    close_section();
    if (doc_.dimension == 0) fail(1, "missing DIM");
    if (doc_.generators.empty()) fail_at(line_no_, 1, "missing GEN section");
    if (doc_.charge.empty()) fail_at(line_no_, 1, "missing CHARGE section");
    return std::move(doc_);
  }

 private:
  [[noreturn]] void fail(std::size_t column, const std::string& msg) const {
    throw ParseError(line_no_, column, msg);
  }
  [[noreturn]] void fail_at(std::size_t line, std::size_t column, const std::string& msg) const {
    throw ParseError(line, column, msg);
  }

  void handle_line(const std::vector<Token>& tokens) {
    if (tokens.empty()) return;
    if (is_word(tokens.front().text)) {
      keyword(tokens);
    } else {
      data_row(tokens);
    }
  }

  void keyword(const std::vector<Token>& tokens) {
    const auto& kw = tokens.front();
    close_section();
    section_line_ = line_no_;
    if (kw.text == "DIM") {
      if (tokens.size() != 2) fail(kw.column, "expected 'DIM <n>'");
      if (doc_.dimension != 0) fail(kw.column, "duplicate DIM");
      Rational n;
      try {
        n = parse_rational(tokens[1].text);
      } catch (const InputError&) {
        fail(tokens[1].column, "DIM must be a positive integer");
      }
      if (denominator(n) != 1 || n < 1) fail(tokens[1].column, "DIM must be a positive integer");
      doc_.dimension = numerator(n).convert_to<std::size_t>();
      return;
    }
    if (doc_.dimension == 0) fail(kw.column, "DIM must precede " + std::string(kw.text));
    if (kw.text == "GEN" || kw.text == "CHARGE") {
      if (tokens.size() != 1) fail(tokens[1].column, "unexpected text after " + std::string(kw.text));
      if (kw.text == "GEN") {
        if (!doc_.generators.empty()) fail(kw.column, "duplicate GEN section");
        section_ = Section::Gen;
      } else {
        if (!doc_.charge.empty()) fail(kw.column, "duplicate CHARGE section");
        section_ = Section::Charge;
      }
      return;
    }
    if (kw.text == "VEC" || kw.text == "MAP") {
      if (tokens.size() != 2) fail(kw.column, "expected '" + std::string(kw.text) + " <name>'");
      const std::string name(tokens[1].text);
      if (!valid_name(name)) fail(tokens[1].column, "invalid name '" + name + "'");
      if (doc_.find_vector(name) || doc_.find_map(name)) fail(tokens[1].column, "duplicate name '" + name + "'");
      name_ = name;
      section_ = kw.text == "VEC" ? Section::Vec : Section::Map;
      return;
    }
    fail(kw.column, "unknown section '" + std::string(kw.text) + "'");
  }

  void data_row(const std::vector<Token>& tokens) {
    if (section_ == Section::None) fail(tokens.front().column, "data outside of a section");
    if (tokens.size() != doc_.dimension)
      fail(tokens.front().column, "expected " + std::to_string(doc_.dimension) + " entries, got " +
                                      std::to_string(tokens.size()));
    RVector row;
    for (const auto& t : tokens) {
      try {
        row.push_back(parse_rational(t.text));
      } catch (const InputError&) {
        fail(t.column, "invalid rational '" + std::string(t.text) + "'");
      }
    }
    rows_.push_back(std::move(row));
    if ((section_ == Section::Charge || section_ == Section::Vec) && rows_.size() > 1)
      fail(tokens.front().column, "section takes a single row");
    if (section_ == Section::Map && rows_.size() > doc_.dimension)
      fail(tokens.front().column, "MAP takes exactly " + std::to_string(doc_.dimension) + " rows");
  }

  void close_section() {
    const std::size_t count = rows_.size();
    auto need = [&](bool ok, const std::string& msg) {
      if (!ok) fail_at(section_line_, 1, msg);
    };
    switch (section_) {
      case Section::None: break;
      case Section::Gen:
        need(count >= 1, "GEN needs at least one row");
        doc_.generators = std::move(rows_);
        break;
      case Section::Charge:
        need(count == 1, "CHARGE needs exactly one row");
        doc_.charge = std::move(rows_.front());
        break;
      case Section::Vec:
        need(count == 1, "VEC needs exactly one row");
        doc_.vectors.emplace_back(name_, std::move(rows_.front()));
        break;
      case Section::Map:
        need(count == doc_.dimension, "MAP needs exactly " + std::to_string(doc_.dimension) + " rows");
        doc_.maps.emplace_back(name_, Matrix::from_rows(rows_));
        break;
    }
    rows_.clear();
    section_ = Section::None;
  }

  ConeDocument doc_;
  Section section_ = Section::None;
  std::vector<RVector> rows_;
  std::string name_;
  std::size_t line_no_ = 0;
  std::size_t section_line_ = 0;
};

void write_row(std::ostringstream& os, const RVector& row) {
  for (std::size_t i = 0; i < row.size(); ++i) os << (i ? " " : "") << row[i].str();
  os << "\n";
}

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      message_(message) {}

const RVector* ConeDocument::find_vector(std::string_view name) const {
  for (const auto& [n, v] : vectors)
    if (n == name) return &v;
  return nullptr;
}

const Matrix* ConeDocument::find_map(std::string_view name) const {
  for (const auto& [n, m] : maps)
    if (n == name) return &m;
  return nullptr;
}

ConeDocument parse_document(std::string_view text) { return Parser().run(text); }

ConeDocument load_document(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_document(buffer.str());
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.column(), path.string() + ": " + e.message());
  }
}

std::string serialize(const ConeDocument& doc) {
  std::ostringstream os;
  os << "DIM " << doc.dimension << "\nGEN\n";
  for (const auto& g : doc.generators) write_row(os, g);
  os << "CHARGE\n";
  write_row(os, doc.charge);
  for (const auto& [name, v] : doc.vectors) {
    os << "VEC " << name << "\n";
    write_row(os, v);
  }
  for (const auto& [name, m] : doc.maps) {
    os << "MAP " << name << "\n";
    for (std::size_t r = 0; r < m.rows(); ++r) write_row(os, m.row(r));
  }
  return os.str();
}

ConeDocument document_from_cone(const PolyhedralCone& cone) {
  ConeDocument doc;
  doc.dimension = cone.dimension();
  doc.generators = cone.generators();
  doc.charge = cone.charge();
  return doc;
}

}  // namespace mcone
