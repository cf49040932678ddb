#include "tfg/expr.hpp"

#include <cctype>

namespace tfg {

namespace {

class Parser {
 public:
  Parser(const std::string& text, const Presentation& p) : s_(text), p_(p) {}

  FullGroupElement parse_all() {
    auto v = expr();
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error("expression \"" + s_ + "\" at column " + std::to_string(i_ + 1) + ": " + why);
  }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  bool accept(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string name() {
    skip();
    const auto start = i_;
    while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_' || s_[i_] == '\''))
      ++i_;
    if (start == i_) fail("expected a name");
    return s_.substr(start, i_ - start);
  }

  FullGroupElement expr() {
    auto v = term();
    while (accept('*')) v = multiply(v, term());
    return v;
  }

  FullGroupElement term() {
    auto v = atom();
    if (!accept('^')) return v;
    const bool neg = accept('-');
    skip();
    const auto start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) fail("expected an exponent");
    const long n = std::stol(s_.substr(start, i_ - start));
    const auto base = neg ? invert(v) : v;
    auto out = FullGroupElement::identity(p_.groupoid);
    for (long k = 0; k < n; ++k) out = multiply(out, base);
    return out;
  }

  FullGroupElement atom() {
    if (accept('(')) {
      auto v = expr();
      expect(')');
      return v;
    }
    if (accept('[')) {
      auto g = expr();
      expect(',');
      auto h = expr();
      expect(']');
      return commutator(g, h);
    }
    const auto n = name();
    if (n == "tau") {
      expect('(');
      const auto f = name();
      expect(')');
      const auto* b = p_.bisection(f);
      if (!b) fail("unknown bisection '" + f + "'");
      return tau(*b);
    }
    if (n == "id" || n == "1") return FullGroupElement::identity(p_.groupoid);
    if (const auto* e = p_.element(n)) return *e;
    if (const auto* b = p_.bisection(n)) {
      if (!b->source().is_whole() || !b->range().is_whole())
        fail("bisection '" + n + "' is not a full group element");
      return FullGroupElement(*b);
    }
    fail("unknown name '" + n + "'");
  }

  std::string s_;
  const Presentation& p_;
  std::size_t i_ = 0;
};

}  // namespace

FullGroupElement evaluate(const std::string& text, const Presentation& p) { return Parser(text, p).parse_all(); }

Evaluation eval(const std::string& text, const Presentation& p) {
  Evaluation out;
  for (const std::string op : {"==", "!="}) {
    const auto k = text.find(op);
    if (k == std::string::npos) continue;
    const auto a = evaluate(text.substr(0, k), p);
    const auto b = evaluate(text.substr(k + 2), p);
    const bool eq = a.table().equals(b.table());
    out.truth = op == "==" ? eq : !eq;
    return out;
  }
  out.element = evaluate(text, p);
  return out;
}

}  // namespace tfg
