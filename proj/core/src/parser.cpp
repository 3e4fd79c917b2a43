#include "mjsing/parser.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace mjsing::cli {

ParseError::ParseError(int line, int column, const std::string& message)
    : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      message_(message) {}

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Parser {
 public:
  Parser(std::string_view text, const VarListPtr& vars, int line, int column)
      : s_(text), vars_(vars), line_(line), col0_(column) {}

  Polynomial parse() {
    skip();
    if (pos_ == s_.size()) fail("empty expression");
    Polynomial p = expr();
    skip();
    if (pos_ < s_.size()) {
      if (s_[pos_] == ')') fail("unbalanced ')'");
      if (starts_operand()) fail("implicit multiplication is not allowed");
      fail(std::string("unexpected '") + s_[pos_] + "'");
    }
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
    throw ParseError(line_, col0_ + static_cast<int>(at), msg);
  }
  [[noreturn]] void fail(const std::string& msg) const { fail(msg, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool starts_operand() const {
    return pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || ident_start(s_[pos_]) || s_[pos_] == '(');
  }

  Polynomial expr() {
    Polynomial acc = term();
    while (true) {
      skip();
      if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
        char op = s_[pos_++];
        Polynomial rhs = term();
        if (op == '+') acc += rhs;
        else acc -= rhs;
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    while (true) {
      skip();
      if (pos_ < s_.size() && (s_[pos_] == '*' || s_[pos_] == '/')) {
        char op = s_[pos_];
        std::size_t at = pos_++;
        Polynomial rhs = unary();
        if (op == '*') {
          acc = acc * rhs;
        } else {
          if (!rhs.is_constant()) fail("division by a non-constant", at);
          if (rhs.is_zero()) fail("division by zero", at);
          acc *= Rational(1) / rhs.constant_term();
        }
      } else {
        skip();
        if (starts_operand()) fail("implicit multiplication is not allowed");
        return acc;
      }
    }
  }

  Polynomial unary() {
    skip();
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      char op = s_[pos_++];
      Polynomial p = unary();
      return op == '-' ? -p : p;
    }
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    skip();
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      skip();
      std::size_t at = pos_;
      if (pos_ < s_.size() && s_[pos_] == '-') fail("negative exponent");
      if (pos_ == s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("non-integer exponent");
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ < s_.size() && (s_[pos_] == '.' || s_[pos_] == '/' || ident_char(s_[pos_])))
        fail("non-integer exponent", at);
      std::string digits(s_.substr(at, pos_ - at));
      if (digits.size() > 4 || std::stoul(digits) > 1000) fail("exponent too large", at);
      base = base.pow(static_cast<unsigned>(std::stoul(digits)));
      skip();
      if (pos_ < s_.size() && s_[pos_] == '^') fail("chained exponent needs parentheses");
    }
    return base;
  }

  Polynomial primary() {
    skip();
    if (pos_ == s_.size()) fail("unexpected end of expression");
    char c = s_[pos_];
    if (c == '(') {
      std::size_t open = pos_++;
      Polynomial p = expr();
      skip();
      if (pos_ == s_.size() || s_[pos_] != ')') fail("missing ')'", open);
      ++pos_;
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t at = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ < s_.size() && (s_[pos_] == '.' || ident_char(s_[pos_]))) fail("malformed literal", at);
      return Polynomial::constant(vars_, Rational(Integer(std::string(s_.substr(at, pos_ - at)))));
    }
    if (ident_start(c)) {
      std::size_t at = pos_;
      while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
      std::string name(s_.substr(at, pos_ - at));
      auto it = std::find(vars_->begin(), vars_->end(), name);
      if (it == vars_->end()) fail("unknown variable '" + name + "'", at);
      return Polynomial::variable(vars_, std::size_t(it - vars_->begin()));
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view s_;
  const VarListPtr& vars_;
  int line_;
  int col0_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view v, int line, int column) {
  if (v.empty() || !std::all_of(v.begin(), v.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
      v.size() > 6)
    throw ParseError(line, column, "expected a non-negative integer");
  return std::stoi(std::string(v));
}

}  // namespace

Polynomial parse_poly(std::string_view text, const VarListPtr& vars, int line, int column) {
  return Parser(text, vars, line, column).parse();
}

InputDocument parse_document(std::string_view text) {
  InputDocument doc;
  struct Pending {
    std::string key;
    std::string value;
    int line, column;
  };
  std::vector<Pending> exprs;
  int lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    start = end + 1;
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    if (trim(raw).empty()) {
      if (end == text.size()) break;
      continue;
    }
    std::size_t colon = raw.find(':');
    std::size_t lead = raw.find_first_not_of(" \t\r");
    if (colon == std::string_view::npos) throw ParseError(lineno, int(lead) + 1, "expected 'key: value'");
    std::string key(trim(raw.substr(0, colon)));
    std::string_view rest = raw.substr(colon + 1);
    std::size_t vstart = colon + 1;
    while (vstart < raw.size() && std::isspace(static_cast<unsigned char>(raw[vstart]))) ++vstart;
    int vcol = int(vstart) + 1;
    std::string_view value = trim(rest);
    if (key == "vars") {
      if (doc.vars) throw ParseError(lineno, int(lead) + 1, "duplicate 'vars' line");
      VarList names;
      std::size_t p = 0;
      std::string v(value);
      while (p <= v.size()) {
        std::size_t comma = v.find(',', p);
        if (comma == std::string::npos) comma = v.size();
        std::string name(trim(std::string_view(v).substr(p, comma - p)));
        int col = vcol + int(p);
        if (name.empty() || !ident_start(name[0]) || !std::all_of(name.begin(), name.end(), ident_char))
          throw ParseError(lineno, col, "invalid variable name '" + name + "'");
        if (std::find(names.begin(), names.end(), name) != names.end())
          throw ParseError(lineno, col, "duplicate variable '" + name + "'");
        names.push_back(name);
        p = comma + 1;
      }
      if (names.size() > kMaxVars) throw ParseError(lineno, vcol, "too many variables");
      doc.vars = make_vars(std::move(names));
    } else if (key == "gen" || key == "ideal_a") {
      exprs.push_back({key, std::string(value), lineno, vcol});
    } else if (key == "t") {
      try {
        Rational t{std::string(value)};
        t.canonicalize();
        if (t < 0) throw ParseError(lineno, vcol, "t must be non-negative");
        doc.t = t;
      } catch (const std::invalid_argument&) {
        throw ParseError(lineno, vcol, "malformed rational");
      }
    } else if (key == "levels") {
      doc.levels = parse_int(value, lineno, vcol);
    } else if (key == "order") {
      doc.order = parse_int(value, lineno, vcol);
    } else {
      throw ParseError(lineno, int(lead) + 1, "unknown key '" + key + "'");
    }
    if (end == text.size()) break;
  }
  if (!doc.vars) throw ParseError(1, 1, "missing 'vars' line");
  for (const auto& e : exprs) {
    Polynomial p = parse_poly(e.value, doc.vars, e.line, e.column);
    (e.key == "gen" ? doc.generators : doc.ideal_a).push_back(std::move(p));
  }
  if (doc.generators.empty()) throw ParseError(lineno, 1, "no 'gen' lines");
  return doc;
}

InputDocument load_document(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

}  // namespace mjsing::cli
