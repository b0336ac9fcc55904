#include "eqc/error.hpp"
#include "eqc/graded.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace eqc {

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

Polynomial Polynomial::monomial(Exponent exps, const Rational& c) {
  Polynomial p(exps.size());
  p.add_term(exps, c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
  Exponent e(nvars, 0);
  e.at(index) = 1;
  return monomial(std::move(e));
}

Rational Polynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Exponent& e, const Rational& c) {
  if (e.size() != nvars_) throw AlgebraError("exponent length does not match variable count");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.nvars_ != nvars_) throw AlgebraError("adding polynomials over different rings");
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.nvars_ != nvars_) throw AlgebraError("subtracting polynomials over different rings");
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_) throw AlgebraError("multiplying polynomials over different rings");
  Polynomial out(a.nvars_);
  Exponent e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Polynomial Polynomial::pow(int k) const {
  if (k < 0) throw AlgebraError("negative exponent");
  Polynomial result = constant(nvars_, 1);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

std::string format_rational(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Polynomial& p, const GradedRing& ring) {
  if (p.nvars() != ring.size()) throw AlgebraError("polynomial does not belong to ring");
  if (p.is_zero()) return "0";
  std::vector<std::pair<Exponent, Rational>> terms(p.terms().begin(), p.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
    const int da = ring.degree_of(a.first);
    const int db = ring.degree_of(b.first);
    if (da != db) return da > db;
    return a.first > b.first;
  });

  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms) {
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << "-";
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    const bool unit_monomial = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    if (mag != 1 || unit_monomial) {
      out << format_rational(mag);
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) out << "*";
      out << ring.generators()[i].name;
      if (e[i] > 1) out << "^" << e[i];
      wrote = true;
    }
  }
  return out.str();
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const GradedRing& ring) : text_(text), ring_(ring) {}

  Polynomial parse() {
    Polynomial out = ring_.zero();
    skip_ws();
    if (at_end()) throw ParseError("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        throw ParseError("expected '+' or '-' in polynomial '" + std::string(text_) + "'");
      }
      first = false;
      Polynomial term = parse_term();
      if (sign < 0) term *= Rational(-1);
      out += term;
      skip_ws();
    }
    return out;
  }

 private:
  Polynomial parse_term() {
    Polynomial term = ring_.one();
    term = term * parse_factor();
    skip_ws();
    while (!at_end() && peek() == '*') {
      ++pos_;
      skip_ws();
      term = term * parse_factor();
      skip_ws();
    }
    return term;
  }

  Polynomial parse_factor() {
    if (at_end()) throw ParseError("unexpected end of polynomial '" + std::string(text_) + "'");
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string num = digits();
      skip_ws();
      if (!at_end() && peek() == '/') {
        ++pos_;
        skip_ws();
        std::string den = digits();
        if (den.empty()) throw ParseError("missing denominator in '" + std::string(text_) + "'");
        Rational q(num + "/" + den);
        if (q.get_den() == 0) throw ParseError("zero denominator");
        q.canonicalize();
        return Polynomial::constant(ring_.size(), q);
      }
      return Polynomial::constant(ring_.size(), Rational(num));
    }
    std::string name = identifier();
    if (name.empty()) {
      throw ParseError("unexpected character '" + std::string(1, peek()) + "' in polynomial '" +
                       std::string(text_) + "'");
    }
    auto idx = ring_.index_of(name);
    if (!idx) throw ParseError("unknown generator '" + name + "'");
    Polynomial base = ring_.gen(*idx);
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_ws();
      std::string exp = digits();
      if (exp.empty()) throw ParseError("missing exponent after '" + name + "^'");
      return base.pow(std::stoi(exp));
    }
    return base;
  }

  std::string digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string identifier() {
    std::size_t start = pos_;
    if (at_end() || !(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_')) return {};
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  std::string_view text_;
  const GradedRing& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const GradedRing& ring) {
  return PolyParser(text, ring).parse();
}

}  // namespace eqc
