#include "eqc/error.hpp"
#include "eqc/graded.hpp"

namespace eqc {

RingMap::RingMap(GradedRing source, GradedRing target, std::vector<Polynomial> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (images_.size() != source_.size()) {
    throw AlgebraError("ring map needs " + std::to_string(source_.size()) + " generator images, got " +
                       std::to_string(images_.size()));
  }
  for (std::size_t i = 0; i < images_.size(); ++i) {
    const Polynomial& img = images_[i];
    const Generator& g = source_.generators()[i];
    if (img.nvars() != target_.size()) {
      throw AlgebraError("image of '" + g.name + "' does not live in the target ring");
    }
    if (img.is_zero()) continue;
    auto deg = target_.homogeneous_degree(img);
    if (!deg || *deg != g.degree) {
      throw AlgebraError("image of '" + g.name + "' (degree " + std::to_string(g.degree) +
                         ") is not homogeneous of that degree: " + to_string(img, target_));
    }
  }
}

RingMap RingMap::identity(const GradedRing& ring) {
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < ring.size(); ++i) images.push_back(ring.gen(i));
  return RingMap(ring, ring, std::move(images));
}

RingMap RingMap::zero_map(const GradedRing& source, const GradedRing& target) {
  return RingMap(source, target, std::vector<Polynomial>(source.size(), target.zero()));
}

Polynomial RingMap::apply(const Polynomial& p) const {
  if (p.nvars() != source_.size()) throw AlgebraError("polynomial does not belong to the map's source");
  // Powers of generator images, filled on demand.
  std::vector<std::vector<Polynomial>> powers(images_.size());
  auto power = [&](std::size_t i, int k) -> const Polynomial& {
    auto& table = powers[i];
    if (table.empty()) table.push_back(target_.one());
    while (static_cast<int>(table.size()) <= k) table.push_back(table.back() * images_[i]);
    return table[static_cast<std::size_t>(k)];
  };

  Polynomial out = target_.zero();
  for (const auto& [e, c] : p.terms()) {
    Polynomial term = Polynomial::constant(target_.size(), c);
    for (std::size_t i = 0; i < e.size() && !term.is_zero(); ++i) {
      if (e[i] > 0) term = term * power(i, e[i]);
    }
    out += term;
  }
  return out;
}

Matrix RingMap::matrix(int d) const {
  const MonomialSlice& src = source_.slice(d);
  const MonomialSlice& dst = target_.slice(d);
  Matrix m(dst.monomials.size(), src.monomials.size());
  for (std::size_t col = 0; col < src.monomials.size(); ++col) {
    const Polynomial image = apply(Polynomial::monomial(src.monomials[col]));
    for (const auto& [e, c] : image.terms()) m(dst.index.at(e), col) = c;
  }
  return m;
}

RingMap compose(const RingMap& outer, const RingMap& inner) {
  if (!(inner.target() == outer.source())) throw AlgebraError("cannot compose: ring mismatch");
  std::vector<Polynomial> images;
  images.reserve(inner.images().size());
  for (const auto& img : inner.images()) images.push_back(outer.apply(img));
  return RingMap(inner.source(), outer.target(), std::move(images));
}

SurjectivityCheck surjectivity_check(const RingMap& m, int max_degree) {
  SurjectivityCheck out;
  for (int d = 0; d <= max_degree; d += 2) {
    const bool ok = rank(m.matrix(d)) == m.target().slice_dim(d);
    out.per_degree.emplace_back(d, ok);
    out.surjective = out.surjective && ok;
  }
  return out;
}

}  // namespace eqc
