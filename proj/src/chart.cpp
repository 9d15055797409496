#include "algebroid/chart.hpp"

#include <bit>
#include <cctype>
#include <set>
#include <sstream>

namespace algebroid {

Chart::Chart(std::vector<std::string> names) : names_(std::move(names)) {
  if (static_cast<int>(names_.size()) > Monomial::kBaseSlots)
    throw std::invalid_argument("at most six base coordinates are supported");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty() || !(std::isalpha(static_cast<unsigned char>(n[0])) || n[0] == '_'))
      throw std::invalid_argument("bad coordinate name '" + n + "'");
    for (char c : n)
      if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
        throw std::invalid_argument("bad coordinate name '" + n + "'");
    if (n == "t" || n == "exp") throw std::invalid_argument("'" + n + "' is reserved");
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate coordinate '" + n + "'");
  }
}

Chart Chart::with_line() const {
  Chart c = *this;
  c.has_line_ = true;
  return c;
}

std::optional<int> Chart::slot_of(std::string_view name) const {
  if (name == "t") return Monomial::kLineSlot;
  for (int i = 0; i < base_dimension(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::string Chart::slot_name(int slot) const {
  if (slot == Monomial::kLineSlot) return "t";
  if (slot < base_dimension()) return names_[slot];
  return "_s" + std::to_string(slot);
}

unsigned Chart::allowed_slots() const {
  return ((1u << base_dimension()) - 1) | (1u << Monomial::kLineSlot);
}

ParseError::ParseError(int line, int column, const std::string& what)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

// ---- parsing -------------------------------------------------------------

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Chart& chart, int line, int offset)
      : s_(text), chart_(chart), line_(line), offset_(offset) {}

  Scalar run() {
    Scalar v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(line_, offset_ + static_cast<int>(pos_) + 1, msg);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool at_digit() {
    skip();
    return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
  }
  std::string integer_token() {
    if (!at_digit()) fail("expected integer");
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }
  std::string identifier() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  Scalar expr() {
    Scalar v = term();
    for (;;) {
      if (accept('+')) {
        v += term();
      } else if (accept('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  Scalar term() {
    Scalar v = unary();
    for (;;) {
      if (accept('*')) {
        v *= unary();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        Scalar d = unary();
        try {
          v = v / d;
        } catch (const std::domain_error& e) {
          pos_ = at;
          fail(e.what());
        }
      } else {
        return v;
      }
    }
  }

  Scalar unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Scalar power() {
    Scalar base = atom();
    if (!accept('^')) return base;
    const std::string digits = integer_token();
    if (digits.size() > 3 || std::stoi(digits) > Monomial::kMaxDegree) fail("exponent too large");
    const int n = std::stoi(digits);
    Scalar r(1);
    try {
      for (int i = 0; i < n; ++i) r *= base;
    } catch (const std::overflow_error& e) {
      fail(e.what());
    }
    return r;
  }

  Scalar atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    if (accept('(')) {
      Scalar v = expr();
      expect(')');
      return v;
    }
    if (at_digit()) return Scalar(mpq_class(integer_token()));
    const char c = s_[pos_];
    if (!(std::isalpha(static_cast<unsigned char>(c)) || c == '_')) fail(std::string("unexpected '") + c + "'");
    const std::size_t at = pos_;
    const std::string id = identifier();
    if (id == "exp") return exponential();
    auto slot = chart_.slot_of(id);
    if (!slot) {
      pos_ = at;
      fail("unknown variable '" + id + "'");
    }
    return Scalar::variable(*slot);
  }

  // exp(t), exp(-t), exp(k*t), exp(-k*t)
  Scalar exponential() {
    expect('(');
    long k = 1;
    if (accept('-')) k = -1;
    skip();
    if (at_digit()) {
      const std::string digits = integer_token();
      if (digits.size() > 6) fail("exponent literal too large");
      k *= std::stol(digits);
      expect('*');
    }
    skip();
    const std::size_t at = pos_;
    if (identifier() != "t") {
      pos_ = at;
      fail("exp accepts only integer multiples of t");
    }
    expect(')');
    return Scalar::exp_line(static_cast<int>(k));
  }

  std::string_view s_;
  const Chart& chart_;
  int line_;
  int offset_;
  std::size_t pos_ = 0;
};

std::string format_monomial(Monomial m, const Chart& chart) {
  std::string out;
  for (int s = 0; s < Monomial::kSlots; ++s) {
    const int e = m.exponent(s);
    if (e == 0) continue;
    if (!out.empty()) out += "*";
    out += chart.slot_name(s);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

// Appends one signed term c * m * exp(k t).
void append_term(std::string& out, const mpq_class& c, Monomial m, int k, const Chart& chart) {
  const bool neg = sgn(c) < 0;
  const mpq_class a = abs(c);
  if (out.empty()) {
    if (neg) out += "-";
  } else {
    out += neg ? " - " : " + ";
  }
  std::vector<std::string> factors;
  const std::string mono = format_monomial(m, chart);
  if (a != 1 || (mono.empty() && k == 0)) factors.push_back(a.get_str());
  if (!mono.empty()) factors.push_back(mono);
  if (k != 0) factors.push_back("exp(" + std::to_string(k) + "*t)");
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out += "*";
    out += factors[i];
  }
}

std::string format_exp(const ExpPoly& e, const Chart& chart) {
  if (e.is_zero()) return "0";
  std::string out;
  // Highest band first reads naturally for e^{-t} scalings.
  for (auto it = e.bands().rbegin(); it != e.bands().rend(); ++it)
    for (const auto& [m, c] : it->second.terms()) append_term(out, c, m, it->first, chart);
  return out;
}

bool is_single_term(const ExpPoly& e) { return e.bands().size() == 1 && e.bands()[0].second.terms().size() == 1; }

}  // namespace

Scalar parse_scalar(std::string_view text, const Chart& chart, int line, int column_offset) {
  return Parser(text, chart, line, column_offset).run();
}

std::string format(const Poly& p, const Chart& chart) { return format_exp(ExpPoly(p), chart); }

std::string format(const Scalar& s, const Chart& chart) {
  std::string num = format_exp(s.numerator(), chart);
  if (s.is_polynomial()) return num;
  if (!is_single_term(s.numerator())) num = "(" + num + ")";
  const Poly& d = s.denominator();
  std::string den = format(d, chart);
  const bool bare = d.terms().size() == 1 && d.terms()[0].second == 1 && std::popcount(d.support()) == 1;
  if (!bare) den = "(" + den + ")";
  return num + "/" + den;
}

}  // namespace algebroid
