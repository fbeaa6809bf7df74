#include <cctype>

#include "mrees/error.hpp"
#include "mrees/poly.hpp"

namespace mrees {

namespace {

// expr   := [sign] term (sign term)*
// term   := atom ('*' atom)*
// atom   := integer | var ['^' posint]
class Parser {
 public:
  Parser(std::string_view text, const PolyRingPtr& ring) : text_(text), ring_(ring) {}

  Polynomial parse() {
    std::vector<Term> terms;
    skip_ws();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    terms.push_back(parse_term(negative));
    skip_ws();
    while (!at_end()) {
      char c = peek();
      if (c != '+' && c != '-') throw ParseError(std::string("unexpected '") + c + "'", pos_);
      ++pos_;
      terms.push_back(parse_term(c == '-'));
      skip_ws();
    }
    return Polynomial(ring_, std::move(terms));
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  Term parse_term(bool negative) {
    Term t{Monomial(ring_->vars.size()), Int(negative ? -1 : 1)};
    parse_atom(t);
    skip_ws();
    while (!at_end() && peek() == '*') {
      ++pos_;
      parse_atom(t);
      skip_ws();
    }
    return t;
  }

  void parse_atom(Term& t) {
    skip_ws();
    if (at_end()) throw ParseError("expected a number or variable", pos_);
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      t.coeff *= Int(std::string(text_.substr(start, pos_ - start)));
      return;
    }
    if (!std::isalpha(static_cast<unsigned char>(c)))
      throw ParseError(std::string("unexpected '") + c + "'", pos_);
    std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    std::string_view name = text_.substr(start, pos_ - start);
    auto idx = ring_->vars.find(name);
    if (!idx) throw ParseError("unknown variable '" + std::string(name) + "'", start);
    Exponent e = 1;
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_ws();
      std::size_t estart = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (estart == pos_) throw ParseError("expected exponent", pos_);
      unsigned long v = std::stoul(std::string(text_.substr(estart, pos_ - estart)));
      if (v == 0) throw ParseError("exponent must be positive", estart);
      e = static_cast<Exponent>(v);
    }
    t.mono[*idx] += e;
  }

  std::string_view text_;
  const PolyRingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const PolyRingPtr& ring) {
  return Parser(text, ring).parse();
}

std::string render_monomial(const Monomial& m, const VariableSet& vars) {
  // x-variables first, then y, then T-variables, each in ring order.
  std::string out;
  for (VarKind kind : {VarKind::X, VarKind::Y, VarKind::T}) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0 || vars[i].kind != kind) continue;
      if (!out.empty()) out += '*';
      out += vars[i].name;
      if (m[i] > 1) out += "^" + std::to_string(m[i]);
    }
  }
  return out.empty() ? "1" : out;
}

std::string render(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    Int c = f.coeffs().symmetric(t.coeff);
    bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t.mono.is_one()) {
      out += c.get_str();
    } else if (c == 1) {
      out += render_monomial(t.mono, f.vars());
    } else {
      out += c.get_str() + "*" + render_monomial(t.mono, f.vars());
    }
  }
  return out;
}

}  // namespace mrees
