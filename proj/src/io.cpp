#include "tropsolve/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

#include "tropsolve/errors.hpp"

namespace tropsolve {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;  // 1-based
  std::vector<Token> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    Line parsed{number, {}};
    std::size_t pos = 0;
    while (pos < line.size()) {
      while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
      if (pos >= line.size()) break;
      if (parsed.tokens.empty() && line[pos] == '#') break;
      std::size_t start = pos;
      while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
      parsed.tokens.push_back({line.substr(start, pos - start), start + 1});
    }
    if (!parsed.tokens.empty()) lines.push_back(std::move(parsed));
  }
  return lines;
}

Scalar parse_token(const Line& line, const Token& tok) {
  try {
    return parse_scalar(tok.text);
  } catch (const ParseError& e) {
    throw ParseError(e.what(), line.number, tok.column);
  }
}

}  // namespace

Matrix parse_matrix(std::string_view text) {
  auto lines = tokenize(text);
  if (lines.empty()) throw ParseError("matrix input has no rows");
  std::vector<Vector> rows;
  rows.reserve(lines.size());
  const std::size_t width = lines.front().tokens.size();
  for (const auto& line : lines) {
    if (line.tokens.size() != width)
      throw ParseError("ragged matrix row: " + std::to_string(line.tokens.size()) +
                           " entries, expected " + std::to_string(width),
                       line.number);
    Vector r;
    r.reserve(width);
    for (const auto& tok : line.tokens) r.push_back(parse_token(line, tok));
    rows.push_back(std::move(r));
  }
  return Matrix::from_rows(rows);
}

Vector parse_vector(std::string_view text) {
  auto lines = tokenize(text);
  if (lines.empty()) throw ParseError("vector input has no entries");
  Vector out;
  if (lines.size() == 1) {
    for (const auto& tok : lines.front().tokens) out.push_back(parse_token(lines.front(), tok));
    return out;
  }
  for (const auto& line : lines) {
    if (line.tokens.size() != 1)
      throw ParseError("vector file must hold one scalar per line or a single line",
                       line.number, line.tokens[1].column);
    out.push_back(parse_token(line, line.tokens.front()));
  }
  return out;
}

std::string format_matrix(const Matrix& a) {
  std::string out;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j) out += ' ';
      out += to_string(a(i, j));
    }
    out += '\n';
  }
  return out;
}

std::string format_vector(const Vector& v) {
  std::string out;
  for (const auto& s : v) {
    out += to_string(s);
    out += '\n';
  }
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Matrix load_matrix(const std::filesystem::path& path) {
  try {
    return parse_matrix(read_text_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

Vector load_vector(const std::filesystem::path& path) {
  try {
    return parse_vector(read_text_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

}  // namespace tropsolve
