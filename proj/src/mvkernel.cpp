#include "eqc/mvkernel.hpp"

#include "eqc/error.hpp"

#include <future>

namespace eqc {

ModuleSetup make_setup(RingMap pi1, RingMap pi2, RingMap rho_minus, RingMap rho_plus) {
  ModuleSetup setup{rho_minus.source(), pi1.source(), pi2.source(), pi1.target(),
                    std::move(pi1), std::move(pi2), std::move(rho_minus), std::move(rho_plus)};
  check_setup(setup);
  return setup;
}

void check_setup(const ModuleSetup& s) {
  if (!(s.pi1.source() == s.left) || !(s.pi1.target() == s.bottom)) {
    throw IncompatibleSetup("pi1 must map left -> bottom");
  }
  if (!(s.pi2.source() == s.right) || !(s.pi2.target() == s.bottom)) {
    throw IncompatibleSetup("pi2 must map right -> bottom");
  }
  if (!(s.rho_minus.source() == s.base) || !(s.rho_minus.target() == s.left)) {
    throw IncompatibleSetup("rho_minus must map base -> left");
  }
  if (!(s.rho_plus.source() == s.base) || !(s.rho_plus.target() == s.right)) {
    throw IncompatibleSetup("rho_plus must map base -> right");
  }
  const RingMap via_minus = compose(s.pi1, s.rho_minus);
  const RingMap via_plus = compose(s.pi2, s.rho_plus);
  for (std::size_t i = 0; i < s.base.size(); ++i) {
    if (!(via_minus.images()[i] == via_plus.images()[i])) {
      const auto& name = s.base.generators()[i].name;
      throw IncompatibleSetup("square does not commute on '" + name + "': " +
                              to_string(via_minus.images()[i], s.bottom) + " vs " +
                              to_string(via_plus.images()[i], s.bottom));
    }
  }
}

std::string to_string(const KernelElement& v, const ModuleSetup& setup) {
  return "(" + to_string(v.left, setup.left) + ", " + to_string(v.right, setup.right) + ")";
}

Matrix difference_matrix(const ModuleSetup& s, int d) {
  const Matrix a = s.pi1.matrix(d);
  const Matrix b = s.pi2.matrix(d);
  Matrix m(s.bottom.slice_dim(d), a.cols() + b.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) m(r, a.cols() + c) = -b(r, c);
  }
  return m;
}

Matrix action_matrix(const ModuleSetup& s, const Polynomial& z, int d) {
  auto delta = s.base.homogeneous_degree(z);
  if (!delta) throw AlgebraError("base element must be homogeneous and nonzero");
  const int e = d + *delta;
  const Polynomial zl = s.rho_minus.apply(z);
  const Polynomial zr = s.rho_plus.apply(z);
  const MonomialSlice& ls = s.left.slice(d);
  const MonomialSlice& rs = s.right.slice(d);
  const std::size_t out_left = s.left.slice_dim(e);
  Matrix m(out_left + s.right.slice_dim(e), ls.monomials.size() + rs.monomials.size());
  for (std::size_t c = 0; c < ls.monomials.size(); ++c) {
    const Vector col = s.left.coordinates(zl * Polynomial::monomial(ls.monomials[c]), e);
    for (std::size_t r = 0; r < col.size(); ++r) m(r, c) = col[r];
  }
  for (std::size_t c = 0; c < rs.monomials.size(); ++c) {
    const Vector col = s.right.coordinates(zr * Polynomial::monomial(rs.monomials[c]), e);
    for (std::size_t r = 0; r < col.size(); ++r) m(out_left + r, ls.monomials.size() + c) = col[r];
  }
  return m;
}

KernelModule::KernelModule(ModuleSetup setup, int max_degree, std::vector<std::vector<Vector>> slices,
                           std::vector<std::size_t> difference_ranks)
    : setup_(std::move(setup)),
      max_degree_(max_degree),
      slices_(std::move(slices)),
      ranks_(std::move(difference_ranks)) {}

const std::vector<Vector>& KernelModule::slice(int d) const {
  if (d < 0 || d > max_degree_) throw DegreeOverflow("degree " + std::to_string(d) + " outside 0.." +
                                                     std::to_string(max_degree_));
  return slices_[static_cast<std::size_t>(d)];
}

std::size_t KernelModule::ambient_dim(int d) const {
  return setup_.left.slice_dim(d) + setup_.right.slice_dim(d);
}

std::size_t KernelModule::difference_rank(int d) const {
  slice(d);
  return ranks_[static_cast<std::size_t>(d)];
}

KernelElement KernelModule::element(int d, const Vector& coords) const {
  const std::size_t nl = setup_.left.slice_dim(d);
  if (coords.size() != ambient_dim(d)) throw AlgebraError("coordinate vector has wrong length");
  Vector lv(coords.begin(), coords.begin() + static_cast<std::ptrdiff_t>(nl));
  Vector rv(coords.begin() + static_cast<std::ptrdiff_t>(nl), coords.end());
  return {d, setup_.left.from_coordinates(lv, d), setup_.right.from_coordinates(rv, d)};
}

Vector KernelModule::coordinates(const KernelElement& v) const {
  Vector out = setup_.left.coordinates(v.left, v.degree);
  const Vector r = setup_.right.coordinates(v.right, v.degree);
  out.insert(out.end(), r.begin(), r.end());
  return out;
}

std::vector<KernelElement> KernelModule::slice_elements(int d) const {
  std::vector<KernelElement> out;
  for (const auto& v : slice(d)) out.push_back(element(d, v));
  return out;
}

KernelModule kernel_slices(const ModuleSetup& setup, int max_degree) {
  check_setup(setup);
  if (max_degree < 0) throw DegreeOverflow("negative truncation degree");

  struct SliceResult {
    std::vector<Vector> basis;
    std::size_t rank = 0;
  };
  // Warm the slice caches so workers only read.
  for (int d = 0; d <= max_degree; ++d) {
    setup.left.slice(d);
    setup.right.slice(d);
    setup.bottom.slice(d);
  }
  std::vector<std::future<SliceResult>> jobs;
  for (int d = 0; d <= max_degree; ++d) {
    jobs.push_back(std::async(std::launch::async, [&setup, d] {
      SliceResult r;
      if (d % 2 != 0) return r;
      const Matrix m = difference_matrix(setup, d);
      if (m.cols() == 0) return r;
      r.rank = rank(m);
      r.basis = nullspace(m);
      return r;
    }));
  }
  std::vector<std::vector<Vector>> slices;
  std::vector<std::size_t> ranks;
  for (auto& job : jobs) {
    SliceResult r = job.get();
    slices.push_back(std::move(r.basis));
    ranks.push_back(r.rank);
  }
  return KernelModule(setup, max_degree, std::move(slices), std::move(ranks));
}

KernelElement base_action(const KernelModule& km, const Polynomial& z, const KernelElement& v) {
  const ModuleSetup& s = km.setup();
  auto delta = s.base.homogeneous_degree(z);
  if (!delta) throw AlgebraError("base element must be homogeneous and nonzero");
  const int d = v.degree + *delta;
  if (d > km.max_degree()) {
    throw DegreeOverflow("action lands in degree " + std::to_string(d) + " beyond truncation " +
                         std::to_string(km.max_degree()));
  }
  return {d, s.rho_minus.apply(z) * v.left, s.rho_plus.apply(z) * v.right};
}

std::vector<KernelElement> module_generators(const KernelModule& km) {
  const ModuleSetup& s = km.setup();
  std::vector<KernelElement> gens;
  for (int d = 0; d <= km.max_degree(); d += 2) {
    Subspace reached(km.ambient_dim(d));
    for (std::size_t i = 0; i < s.base.size(); ++i) {
      const int lower = d - s.base.generators()[i].degree;
      if (lower < 0 || km.slice_dim(lower) == 0) continue;
      const Matrix act = action_matrix(s, s.base.gen(i), lower);
      for (const auto& v : km.slice(lower)) reached.insert(act * v);
    }
    for (const auto& v : km.slice(d)) {
      if (reached.insert(v)) gens.push_back(km.element(d, v));
    }
  }
  return gens;
}

std::string_view verdict_name(FreenessVerdict v) {
  switch (v) {
    case FreenessVerdict::Free: return "FREE";
    case FreenessVerdict::NotFree: return "NOT FREE";
    case FreenessVerdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

namespace {

Matrix slice_columns(const KernelModule& km, int d) {
  return Matrix::from_columns(km.ambient_dim(d), km.slice(d));
}

std::optional<TorsionWitness> find_torsion(const KernelModule& km, const std::vector<KernelElement>& gens) {
  const ModuleSetup& s = km.setup();
  // Annihilators of generators by base generators first.
  for (const auto& g : gens) {
    for (std::size_t i = 0; i < s.base.size(); ++i) {
      const Polynomial z = s.base.gen(i);
      if (g.degree + s.base.generators()[i].degree > km.max_degree()) continue;
      if (base_action(km, z, g).is_zero()) return TorsionWitness{g, z};
    }
  }
  for (int d = 0; d <= km.max_degree(); d += 2) {
    if (km.slice_dim(d) == 0) continue;
    const Matrix basis = slice_columns(km, d);
    for (std::size_t i = 0; i < s.base.size(); ++i) {
      if (d + s.base.generators()[i].degree > km.max_degree()) continue;
      const Matrix restricted = action_matrix(s, s.base.gen(i), d) * basis;
      const auto kernel = nullspace(restricted);
      if (!kernel.empty()) return TorsionWitness{km.element(d, basis * kernel.front()), s.base.gen(i)};
    }
  }
  return std::nullopt;
}

}  // namespace

FreenessResult free_basis_search(const KernelModule& km, const std::vector<KernelElement>& generators) {
  const ModuleSetup& s = km.setup();
  FreenessResult result;
  result.max_degree = km.max_degree();

  for (int d = 0; d <= km.max_degree() && !result.first_mismatch; d += 2) {
    std::vector<Vector> columns;
    for (const auto& g : generators) {
      const int rest = d - g.degree;
      if (rest < 0) continue;
      for (const auto& mono : s.base.slice(rest).monomials) {
        const Polynomial z = Polynomial::monomial(mono);
        const KernelElement image{d, s.rho_minus.apply(z) * g.left, s.rho_plus.apply(z) * g.right};
        columns.push_back(km.coordinates(image));
      }
    }
    const bool counts_match = columns.size() == km.slice_dim(d);
    const bool injective = columns.empty() || rank(Matrix::from_columns(km.ambient_dim(d), columns)) == columns.size();
    if (!counts_match || !injective) result.first_mismatch = d;
  }

  if (!result.first_mismatch) {
    result.verdict = FreenessVerdict::Free;
    result.basis = generators;
    return result;
  }
  result.witness = find_torsion(km, generators);
  result.verdict = result.witness ? FreenessVerdict::NotFree : FreenessVerdict::Inconclusive;
  return result;
}

RegularSequenceResult regular_sequence_check(const KernelModule& km, const std::vector<Polynomial>& hsop) {
  const ModuleSetup& s = km.setup();
  const int top = km.max_degree();
  std::vector<int> degrees;
  for (std::size_t k = 0; k < hsop.size(); ++k) {
    if (hsop[k].nvars() != s.base.size()) {
      throw HsopError("sequence element " + std::to_string(k + 1) + " is not in the base ring");
    }
    auto deg = s.base.homogeneous_degree(hsop[k]);
    if (!deg) throw HsopError("sequence element " + std::to_string(k + 1) + " is not homogeneous");
    if (*deg == 0) throw HsopError("sequence element " + std::to_string(k + 1) + " has degree 0");
    degrees.push_back(*deg);
  }

  RegularSequenceResult result;
  result.length = hsop.size();
  result.horizon = top;
  for (int deg : degrees) result.horizon -= deg;

  // submodule[d]: the degree-d part of (z_1, ..., z_k) M.
  std::vector<Subspace> submodule;
  for (int d = 0; d <= top; ++d) submodule.emplace_back(km.ambient_dim(d));

  for (std::size_t k = 0; k < hsop.size(); ++k) {
    const int delta = degrees[k];
    for (int d = 0; d + delta <= top; d += 2) {
      const std::size_t m = km.slice_dim(d);
      if (m == 0) continue;
      const Matrix basis = slice_columns(km, d);
      const Matrix image = action_matrix(s, hsop[k], d) * basis;
      const auto target_sub = submodule[static_cast<std::size_t>(d + delta)].basis();
      // Solve z·(B c) ∈ (z_1..z_k)M: nullspace of [zB | N].
      Matrix joint(image.rows(), m + target_sub.size());
      for (std::size_t r = 0; r < image.rows(); ++r) {
        for (std::size_t c = 0; c < m; ++c) joint(r, c) = image(r, c);
        for (std::size_t c = 0; c < target_sub.size(); ++c) joint(r, m + c) = target_sub[c][r];
      }
      for (const auto& sol : nullspace(joint)) {
        const Vector coeffs(sol.begin(), sol.begin() + static_cast<std::ptrdiff_t>(m));
        const Vector x = basis * coeffs;
        if (!submodule[static_cast<std::size_t>(d)].contains(x)) {
          result.failure = RegularSequenceFailure{k, d, km.element(d, x)};
          return result;
        }
      }
    }
    for (int d = delta; d <= top; d += 2) {
      const int lower = d - delta;
      if (km.slice_dim(lower) == 0) continue;
      const Matrix act = action_matrix(s, hsop[k], lower);
      for (const auto& v : km.slice(lower)) submodule[static_cast<std::size_t>(d)].insert(act * v);
    }
  }
  result.verified = true;
  return result;
}

HilbertSeries hilbert_series_module(const KernelModule& km, const FreenessResult* freeness) {
  HilbertSeries hs;
  for (int d = 0; d <= km.max_degree(); ++d) hs.truncated.push_back(static_cast<std::int64_t>(km.slice_dim(d)));
  if (freeness && freeness->verdict == FreenessVerdict::Free) {
    HilbertSeries::ClosedForm form;
    for (const auto& g : freeness->basis) {
      if (form.numerator.size() <= static_cast<std::size_t>(g.degree)) form.numerator.resize(g.degree + 1, 0);
      ++form.numerator[static_cast<std::size_t>(g.degree)];
    }
    if (form.numerator.empty()) form.numerator.push_back(0);
    for (const auto& g : km.setup().base.generators()) form.denominator.push_back(g.degree);
    hs.closed_form = std::move(form);
  }
  return hs;
}

SplittingCheck splitting_check(const KernelModule& km) {
  const ModuleSetup& s = km.setup();
  SplittingCheck out;
  for (int d = 0; d <= km.max_degree(); d += 2) {
    SplittingCheck::Degree row;
    row.degree = d;
    row.left = s.left.slice_dim(d);
    row.right = s.right.slice_dim(d);
    row.bottom = s.bottom.slice_dim(d);
    row.kernel = km.slice_dim(d);
    row.surjective = km.difference_rank(d) == row.bottom;
    row.dimension_identity = row.kernel + row.bottom == row.left + row.right;
    out.surjective = out.surjective && row.surjective;
    out.dimension_identity = out.dimension_identity && row.dimension_identity;
    out.degrees.push_back(row);
  }
  return out;
}

}  // namespace eqc
