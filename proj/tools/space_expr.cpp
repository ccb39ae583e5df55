#include "space_expr.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace streamcert::tools {

namespace {

class Parser {
 public:
  Parser(const std::string& text, double n) : s_(text), n_(n) {}

  double parse() {
    double v = sum();
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("space expression: " + what + " at offset " + std::to_string(i_));
  }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }

  double sum() {
    double v = product();
    while (true) {
      if (eat('+')) v += product();
      else if (eat('-')) v -= product();
      else return v;
    }
  }

  double product() {
    double v = power();
    while (true) {
      if (eat('*')) v *= power();
      else if (eat('/')) v /= power();
      else return v;
    }
  }

  double power() {
    double base = unary();
    if (eat('^')) return std::pow(base, power());
    return base;
  }

  double unary() {
    if (eat('-')) return -unary();
    return atom();
  }

  double atom() {
    skip();
    if (eat('(')) {
      double v = sum();
      if (!eat(')')) fail("missing ')'");
      return v;
    }
    if (i_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[i_])) || s_[i_] == '.')) {
      std::size_t used = 0;
      double v = std::stod(s_.substr(i_), &used);
      i_ += used;
      return v;
    }
    std::string word;
    while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) {
      word += s_[i_++];
    }
    if (word == "n") return n_;
    if (word == "log2" || word == "ln" || word == "sqrt") {
      if (!eat('(')) fail("expected '(' after " + word);
      double x = sum();
      if (!eat(')')) fail("missing ')'");
      if (word == "log2") return std::log2(x);
      if (word == "ln") return std::log(x);
      return std::sqrt(x);
    }
    fail(word.empty() ? "expected a value" : "unknown name '" + word + "'");
  }

  const std::string& s_;
  double n_;
  std::size_t i_ = 0;
};

}  // namespace

double eval_space_expr(const std::string& expr, double n) { return Parser(expr, n).parse(); }

}  // namespace streamcert::tools
