#include "eqc/error.hpp"
#include "eqc/graded.hpp"

#include <mutex>
#include <set>

namespace eqc {

struct GradedRing::SliceCache {
  std::mutex mutex;
  std::map<int, std::unique_ptr<MonomialSlice>> slices;
};

GradedRing::GradedRing() : cache_(std::make_shared<SliceCache>()) {}

GradedRing::GradedRing(std::vector<Generator> generators)
    : gens_(std::move(generators)), cache_(std::make_shared<SliceCache>()) {
  std::set<std::string> seen;
  for (const auto& g : gens_) {
    if (g.degree <= 0 || g.degree % 2 != 0) {
      throw AlgebraError("generator '" + g.name + "' has degree " + std::to_string(g.degree) +
                         "; degrees must be positive and even");
    }
    if (g.name.empty()) throw AlgebraError("generator with empty name");
    if (!seen.insert(g.name).second) throw AlgebraError("duplicate generator name '" + g.name + "'");
  }
}

std::optional<std::size_t> GradedRing::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (gens_[i].name == name) return i;
  }
  return std::nullopt;
}

int GradedRing::degree_of(const Exponent& e) const {
  int d = 0;
  for (std::size_t i = 0; i < gens_.size(); ++i) d += e[i] * gens_[i].degree;
  return d;
}

std::optional<int> GradedRing::homogeneous_degree(const Polynomial& p) const {
  if (p.is_zero()) return std::nullopt;
  std::optional<int> deg;
  for (const auto& [e, c] : p.terms()) {
    const int d = degree_of(e);
    if (deg && *deg != d) return std::nullopt;
    deg = d;
  }
  return deg;
}

Polynomial GradedRing::gen(std::string_view name) const {
  auto idx = index_of(name);
  if (!idx) throw AlgebraError("unknown generator '" + std::string(name) + "'");
  return gen(*idx);
}

namespace {

// Lex-descending enumeration of exponent vectors with weighted degree `remaining`.
void enumerate(const std::vector<Generator>& gens, std::size_t var, int remaining, Exponent& current,
               std::vector<Exponent>& out) {
  if (var == gens.size()) {
    if (remaining == 0) out.push_back(current);
    return;
  }
  const int deg = gens[var].degree;
  for (int k = remaining / deg; k >= 0; --k) {
    current[var] = k;
    enumerate(gens, var + 1, remaining - k * deg, current, out);
  }
  current[var] = 0;
}

}  // namespace

const MonomialSlice& GradedRing::slice(int d) const {
  std::lock_guard lock(cache_->mutex);
  auto it = cache_->slices.find(d);
  if (it != cache_->slices.end()) return *it->second;

  auto s = std::make_unique<MonomialSlice>();
  if (d >= 0) {
    Exponent current(gens_.size(), 0);
    enumerate(gens_, 0, d, current, s->monomials);
  }
  for (std::size_t i = 0; i < s->monomials.size(); ++i) s->index.emplace(s->monomials[i], i);
  return *cache_->slices.emplace(d, std::move(s)).first->second;
}

Vector GradedRing::coordinates(const Polynomial& p, int d) const {
  const MonomialSlice& s = slice(d);
  Vector v(s.monomials.size());
  for (const auto& [e, c] : p.terms()) {
    auto it = s.index.find(e);
    if (it == s.index.end()) {
      throw AlgebraError("polynomial has a term outside degree " + std::to_string(d));
    }
    v[it->second] = c;
  }
  return v;
}

Polynomial GradedRing::from_coordinates(const Vector& v, int d) const {
  const MonomialSlice& s = slice(d);
  if (v.size() != s.monomials.size()) throw AlgebraError("coordinate vector has wrong length");
  Polynomial p(size());
  for (std::size_t i = 0; i < v.size(); ++i) p.add_term(s.monomials[i], v[i]);
  return p;
}

std::vector<Exponent> slice_basis(const GradedRing& ring, int d) { return ring.slice(d).monomials; }

}  // namespace eqc
