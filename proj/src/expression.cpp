#include "liemod/expression.hpp"

#include "liemod/error.hpp"

#include <algorithm>
#include <cctype>

namespace liemod {

namespace {

class Parser {
public:
  Parser(std::string_view text, const std::vector<std::string>& params, int line, int column)
      : s_(text), params_(params), line_(line), column_(column) {}

  Scalar run() {
    skip();
    if (pos_ == s_.size()) fail("empty expression");
    Scalar v = expr();
    skip();
    if (pos_ != s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
    return v;
  }

private:
  [[noreturn]] void fail(const std::string& what) const {
    throw SyntaxError(what, line_, column_ + static_cast<int>(pos_));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool starts_factor() {
    skip();
    if (pos_ >= s_.size()) return false;
    const unsigned char c = s_[pos_];
    return std::isalnum(c) || c == '_' || c == '(';
  }

  Scalar expr() {
    Scalar acc;
    bool neg = false;
    if (peek('-')) { ++pos_; neg = true; }
    else if (peek('+')) ++pos_;
    acc = term();
    if (neg) acc = -acc;
    for (;;) {
      if (peek('+')) { ++pos_; acc += term(); }
      else if (peek('-')) { ++pos_; acc -= term(); }
      else return acc;
    }
  }

  Scalar term() {
    Scalar acc = factor();
    for (;;) {
      if (peek('*')) { ++pos_; acc *= factor(); }
      else if (peek('/')) {
        ++pos_;
        const auto at = pos_;
        Scalar den = factor();
        if (den.is_zero()) { pos_ = at; fail("division by zero"); }
        acc /= den;
      }
      else if (starts_factor()) acc *= factor();
      else return acc;
    }
  }

  Scalar factor() {
    skip();
    if (pos_ >= s_.size()) fail("expected a number, name or '('");
    Scalar base;
    const unsigned char c = s_[pos_];
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (std::isdigit(c)) {
      const auto start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      base = Scalar(Integer(std::string(s_.substr(start, pos_ - start))));
    } else if (std::isalpha(c) || c == '_') {
      const auto start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      const std::string name(s_.substr(start, pos_ - start));
      if (!params_.empty()) {
        if (std::find(params_.begin(), params_.end(), name) == params_.end()) {
          pos_ = start;
          fail("undeclared parameter '" + name + "'");
        }
        base = Scalar(Polynomial::variable(name, params_));
      } else {
        base = Scalar::parameter(name);
      }
    } else if (c == '(') {
      ++pos_;
      base = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
    } else {
      fail(std::string("unexpected '") + s_[pos_] + "'");
    }
    while (peek('^')) {
      ++pos_;
      skip();
      const auto start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected an integer exponent");
      const int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
      Scalar r(1);
      for (int i = 0; i < e; ++i) r *= base;
      base = r;
    }
    return base;
  }

  std::string_view s_;
  const std::vector<std::string>& params_;
  int line_;
  int column_;
  std::size_t pos_ = 0;
};

} // namespace

Scalar parse_scalar(std::string_view text, const std::vector<std::string>& params, int line,
                    int column) {
  return Parser(text, params, line, column).run();
}

} // namespace liemod
