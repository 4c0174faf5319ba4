#include "braidpbw/json_io.hpp"

#include "braidpbw/errors.hpp"
#include "braidpbw/qcomb.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace braidpbw {

namespace {

SourcePos position_of(std::string_view text, std::size_t offset) {
  SourcePos p;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++p.line;
      p.column = 1;
    } else {
      ++p.column;
    }
  }
  return p;
}

struct Token {
  std::size_t begin = 0;
  std::string text;  // unescaped for strings
  bool is_string = false;
  bool is_key = false;
};

// Value and key tokens in document order. Escapes other than \" and \\ are
// kept verbatim, which is enough to compare plain ASCII keys.
std::vector<Token> scan_tokens(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char ch = s[i];
    if (ch == '"') {
      Token t{i, {}, true, false};
      ++i;
      while (i < s.size() && s[i] != '"') {
        if (s[i] == '\\' && i + 1 < s.size()) ++i;
        t.text += s[i++];
      }
      ++i;
      std::size_t j = i;
      while (j < s.size() && std::isspace(static_cast<unsigned char>(s[j]))) ++j;
      t.is_key = j < s.size() && s[j] == ':';
      out.push_back(std::move(t));
    } else if (ch == '-' || std::isalnum(static_cast<unsigned char>(ch))) {
      Token t{i, {}, false, false};
      while (i < s.size() && (s[i] == '-' || s[i] == '+' || s[i] == '.' || std::isalnum(static_cast<unsigned char>(s[i]))))
        t.text += s[i++];
      out.push_back(std::move(t));
    } else {
      ++i;
    }
  }
  return out;
}

} // namespace

Json parse_json_text(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    SourcePos p = position_of(text, e.byte == 0 ? 0 : e.byte - 1);
    std::string msg = e.what();
    if (auto k = msg.find("syntax error"); k != std::string::npos) msg = msg.substr(k);
    throw ParseError("invalid JSON: " + msg, p.line, p.column);
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'", 0, 0);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SourcePos locate_value(std::string_view text, std::string_view key, std::size_t occurrence,
                       std::size_t offset) {
  auto tokens = scan_tokens(text);
  std::size_t seen = 0;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (!tokens[i].is_key || tokens[i].text != key) continue;
    if (seen++ != occurrence) continue;
    std::size_t values = 0;
    for (std::size_t j = i + 1; j < tokens.size(); ++j) {
      if (tokens[j].is_key) continue;
      if (values++ == offset) return position_of(text, tokens[j].begin);
    }
    break;
  }
  return {};
}

Scalar scalar_from_json(const Json& v, FieldSpec field, SourcePos at) {
  if (v.is_number_integer()) return Scalar::from_int(field, v.get<long>());
  if (!v.is_string()) throw ParseError("scalar must be a string literal or an integer", at.line, at.column);
  try {
    return parse_scalar(v.get<std::string>(), field);
  } catch (const ParseError& e) {
    throw ParseError("bad scalar literal '" + v.get<std::string>() + "'", at.line,
                     at.column + e.column());
  }
}

std::string scalar_to_json_literal(const Scalar& s) { return s.to_string(); }

} // namespace braidpbw
