#pragma once

#include "eqc/linalg.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace eqc {

using Exponent = std::vector<int>;

struct Generator {
  std::string name;
  int degree = 0;
  bool operator==(const Generator&) const = default;
};

// Sparse polynomial: exponent vector -> nonzero rational coefficient.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial monomial(Exponent exps, const Rational& c = 1);
  static Polynomial variable(std::size_t nvars, std::size_t index);

  std::size_t nvars() const { return nvars_; }
  const std::map<Exponent, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Exponent& e) const;

  // Adds c * x^e, dropping the term if the coefficient cancels.
  void add_term(const Exponent& e, const Rational& c);

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial pow(int k) const;

  bool operator==(const Polynomial&) const = default;

 private:
  std::size_t nvars_ = 0;
  std::map<Exponent, Rational> terms_;
};

struct MonomialSlice {
  std::vector<Exponent> monomials;  // grlex descending
  std::map<Exponent, std::size_t> index;
};

// Free commutative polynomial algebra over Q on generators of positive even degree.
// Degree slices are built lazily and shared between copies of the ring.
class GradedRing {
 public:
  GradedRing();
  explicit GradedRing(std::vector<Generator> generators);

  const std::vector<Generator>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  std::optional<std::size_t> index_of(std::string_view name) const;

  int degree_of(const Exponent& e) const;
  // Degree of a homogeneous nonzero polynomial; nullopt for zero or inhomogeneous input.
  std::optional<int> homogeneous_degree(const Polynomial& p) const;

  const MonomialSlice& slice(int d) const;
  std::size_t slice_dim(int d) const { return slice(d).monomials.size(); }

  Polynomial zero() const { return Polynomial(size()); }
  Polynomial one() const { return Polynomial::constant(size(), 1); }
  Polynomial gen(std::size_t i) const { return Polynomial::variable(size(), i); }
  Polynomial gen(std::string_view name) const;

  // Coordinates of a homogeneous degree-d polynomial in slice(d).
  Vector coordinates(const Polynomial& p, int d) const;
  Polynomial from_coordinates(const Vector& v, int d) const;

  bool operator==(const GradedRing& other) const { return gens_ == other.gens_; }

 private:
  struct SliceCache;
  std::vector<Generator> gens_;
  std::shared_ptr<SliceCache> cache_;
};

std::vector<Exponent> slice_basis(const GradedRing& ring, int d);

// Degree-preserving homomorphism source -> target given by generator images.
class RingMap {
 public:
  RingMap() = default;
  RingMap(GradedRing source, GradedRing target, std::vector<Polynomial> images);

  static RingMap identity(const GradedRing& ring);
  // Every positive-degree generator goes to zero.
  static RingMap zero_map(const GradedRing& source, const GradedRing& target);

  const GradedRing& source() const { return source_; }
  const GradedRing& target() const { return target_; }
  const std::vector<Polynomial>& images() const { return images_; }

  Polynomial apply(const Polynomial& p) const;
  // Columns indexed by slice(source, d), rows by slice(target, d).
  Matrix matrix(int d) const;

  bool operator==(const RingMap&) const = default;

 private:
  GradedRing source_;
  GradedRing target_;
  std::vector<Polynomial> images_;
};

inline Polynomial apply_map(const RingMap& m, const Polynomial& p) { return m.apply(p); }
inline Matrix map_matrix(const RingMap& m, int d) { return m.matrix(d); }

// outer o inner; requires inner.target() == outer.source().
RingMap compose(const RingMap& outer, const RingMap& inner);

struct HilbertSeries {
  struct ClosedForm {
    std::vector<std::int64_t> numerator;  // coefficient of t^i
    std::vector<int> denominator;         // degrees d_i of prod (1 - t^{d_i})
    bool operator==(const ClosedForm&) const = default;
  };
  std::vector<std::int64_t> truncated;  // c_0 .. c_D
  std::optional<ClosedForm> closed_form;

  int max_degree() const { return static_cast<int>(truncated.size()) - 1; }
};

std::vector<std::int64_t> expand(const HilbertSeries::ClosedForm& form, int max_degree);
HilbertSeries hilbert_series_ring(const GradedRing& ring, int max_degree);
// e.g. "(1 + t^6) / (1-t^4)^2"
std::string format_closed_form(const HilbertSeries::ClosedForm& form);

struct SurjectivityCheck {
  std::vector<std::pair<int, bool>> per_degree;  // even degrees only
  bool surjective = true;
};

SurjectivityCheck surjectivity_check(const RingMap& m, int max_degree);

// `coeff*gen1^a1*gen2^a2 + ...` in grlex-descending order.
std::string to_string(const Polynomial& p, const GradedRing& ring);
Polynomial parse_polynomial(std::string_view text, const GradedRing& ring);
std::string format_rational(const Rational& q);

}  // namespace eqc
