#include "eqc/analysis.hpp"

#include "eqc/error.hpp"
#include "eqc/oracle.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <numeric>
#include <random>

namespace eqc {

std::string to_string(const Quotient& q) {
  return q.kind == Quotient::Kind::Poincare ? "P3" : "S^" + std::to_string(q.sphere_dim);
}

Quotient parse_quotient(std::string_view text) {
  std::string t;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  }
  if (t == "P3" || t == "P^3") return Quotient::poincare();
  if (t.size() > 2 && t.starts_with("S^") &&
      std::all_of(t.begin() + 2, t.end(), [](unsigned char c) { return std::isdigit(c); })) {
    return Quotient::sphere(std::stoi(t.substr(2)));
  }
  throw ParseError("unknown quotient '" + std::string(text) + "' (expected S^k or P3)");
}

Embedding standard_embedding(const GroupExpr& sub, const GroupExpr& sup) {
  InclusionSpec spec = standard_inclusion(sub, sup);
  RingMap map = restriction_map(sub, sup, spec);
  return {Embedding::Source::Standard, std::move(spec), std::move(map)};
}

Embedding identity_embedding(const GroupExpr& sub, const GroupExpr& sup) {
  if (!(sub == sup)) throw InclusionError("id embedding needs equal groups: " + to_string(sub) + " vs " + to_string(sup));
  InclusionSpec spec{std::vector<InclusionKind>(sub.factors.size(), InclusionKind::Identity)};
  RingMap map = restriction_map(sub, sup, spec);
  return {Embedding::Source::Identity, std::move(spec), std::move(map)};
}

Embedding kinds_embedding(const GroupExpr& sub, const GroupExpr& sup, InclusionSpec spec) {
  RingMap map = restriction_map(sub, sup, spec);
  return {Embedding::Source::Kinds, std::move(spec), std::move(map)};
}

Embedding explicit_embedding(const GroupExpr& sub, const GroupExpr& sup, std::vector<Polynomial> images) {
  return {Embedding::Source::Explicit, std::nullopt,
          RingMap(invariant_ring(sup), invariant_ring(sub), std::move(images))};
}

GroupDiagram make_diagram(GroupExpr G, GroupExpr H, GroupExpr Kminus, GroupExpr Kplus, Quotient minus_quotient,
                          Quotient plus_quotient) {
  Embedding hm = standard_embedding(H, Kminus);
  Embedding hp = standard_embedding(H, Kplus);
  Embedding mg = standard_embedding(Kminus, G);
  Embedding pg = standard_embedding(Kplus, G);
  return {std::move(G), std::move(H), std::move(Kminus), std::move(Kplus), std::move(hm), std::move(hp),
          std::move(mg), std::move(pg), minus_quotient, plus_quotient};
}

namespace {

void check_embedding(const char* label, const Embedding& e, const GroupExpr& sub, const GroupExpr& sup,
                     std::vector<std::string>& problems) {
  if (!(e.map.source() == invariant_ring(sup)) || !(e.map.target() == invariant_ring(sub))) {
    problems.push_back(std::string(label) + ": map is not H*(B" + to_string(sup) + ") -> H*(B" + to_string(sub) + ")");
  }
}

void check_quotient(const char* label, const GroupExpr& K, const GroupExpr& H, const Quotient& q,
                    std::vector<std::string>& problems) {
  const int rk = rank(K);
  const int rh = rank(H);
  const int dq = dim(K) - dim(H);
  if (dq != q.dimension()) {
    problems.push_back(std::string(label) + " annotated " + to_string(q) + " (dimension " +
                       std::to_string(q.dimension()) + ") but dim K - dim H = " + std::to_string(dq));
  }
  if (rh > rk) {
    problems.push_back(std::string(label) + ": rank H = " + std::to_string(rh) + " exceeds rank K = " +
                       std::to_string(rk));
  } else if (rk - rh > 1) {
    problems.push_back(std::string(label) + ": rank K - rank H = " + std::to_string(rk - rh) +
                       "; a sphere quotient allows at most 1");
  }
  if (q.kind != Quotient::Kind::Poincare) return;
  if (rh != rk - 1) {
    problems.push_back(std::string(label) + " = P3 requires rank H = rank K - 1, got rank H = " +
                       std::to_string(rh) + ", rank K = " + std::to_string(rk));
  }
  if (K.factors.size() != H.factors.size()) return;
  std::vector<std::size_t> differing;
  for (std::size_t i = 0; i < K.factors.size(); ++i) {
    if (!(K.factors[i] == H.factors[i])) differing.push_back(i);
  }
  if (differing.size() != 1 || !is_poincare_pair(K.factors[differing[0]], H.factors[differing[0]])) {
    problems.push_back(std::string(label) + " = P3 but the effective quotient is not (SU(2), I*) or (SO(3), I)");
  }
}

}  // namespace

ValidatedDiagram validate(const GroupDiagram& d) {
  std::vector<std::string> problems;
  check_embedding("H in K-", d.h_in_kminus, d.H, d.Kminus, problems);
  check_embedding("H in K+", d.h_in_kplus, d.H, d.Kplus, problems);
  check_embedding("K- in G", d.kminus_in_g, d.Kminus, d.G, problems);
  check_embedding("K+ in G", d.kplus_in_g, d.Kplus, d.G, problems);

  check_quotient("K-/H", d.Kminus, d.H, d.minus_quotient, problems);
  check_quotient("K+/H", d.Kplus, d.H, d.plus_quotient, problems);

  const int rg = rank(d.G);
  for (const auto& [label, K] : {std::pair{"K-", &d.Kminus}, std::pair{"K+", &d.Kplus}}) {
    if (rank(*K) > rg) {
      problems.push_back(std::string("rank ") + label + " = " + std::to_string(rank(*K)) + " exceeds rank G = " +
                         std::to_string(rg));
    }
  }

  if (problems.empty()) {
    const RingMap via_minus = compose(d.h_in_kminus.map, d.kminus_in_g.map);
    const RingMap via_plus = compose(d.h_in_kplus.map, d.kplus_in_g.map);
    if (!(via_minus == via_plus)) {
      problems.push_back("inclusions H in K- in G and H in K+ in G induce different maps H*(BG) -> H*(BH)");
    }
  }
  if (!problems.empty()) throw ValidationError(std::move(problems));

  ValidatedDiagram v;
  v.diagram = d;
  v.rank_g = rg;
  v.rank_h = rank(d.H);
  v.rank_kminus = rank(d.Kminus);
  v.rank_kplus = rank(d.Kplus);
  if (v.rank_kplus > v.rank_kminus) {
    std::swap(v.rank_kplus, v.rank_kminus);
    v.swapped = true;
  }
  return v;
}

std::string_view case_name(CaseLabel c) {
  switch (c) {
    case CaseLabel::EqualRank: return "equal-rank";
    case CaseLabel::RankDropCase1: return "rank-drop case 1";
    case CaseLabel::RankDropCase2: return "rank-drop case 2";
  }
  return "?";
}

CaseLabel classify(const ValidatedDiagram& v) {
  if (v.rank_h > v.rank_kplus) {
    throw ValidationError({"rank H = " + std::to_string(v.rank_h) + " exceeds rank K+ = " +
                           std::to_string(v.rank_kplus) + " after normalization"});
  }
  if (v.rank_h == v.rank_kminus && v.rank_h == v.rank_kplus) return CaseLabel::EqualRank;
  const int b = v.rank_kminus;
  if (v.rank_kplus == b) return CaseLabel::RankDropCase1;
  if (v.rank_kplus == b - 1) return CaseLabel::RankDropCase2;
  throw ValidationError({"rank K+ = " + std::to_string(v.rank_kplus) + " is below b - 1 = " + std::to_string(b - 1)});
}

Formality formality_and_dimension(const ValidatedDiagram& v) {
  Formality f;
  f.rank_g = v.rank_g;
  f.max_isotropy_rank = std::max({v.rank_h, v.rank_kminus, v.rank_kplus});
  f.krull_dimension = f.max_isotropy_rank;
  f.formal = f.max_isotropy_rank == v.rank_g;
  return f;
}

ModuleSetup module_setup(const GroupDiagram& d) {
  return make_setup(d.h_in_kminus.map, d.h_in_kplus.map, d.kminus_in_g.map, d.kplus_in_g.map);
}

std::vector<Polynomial> generic_hsop(const GradedRing& base, std::size_t length, std::uint64_t seed, int attempt) {
  int l = 1;
  for (const auto& g : base.generators()) l = std::lcm(l, g.degree);
  // Raw engine output only: the distribution classes are implementation-defined.
  std::mt19937_64 rng(seed * 1000003ULL + static_cast<std::uint64_t>(attempt));
  std::vector<Polynomial> out;
  for (std::size_t k = 0; k < length; ++k) {
    Polynomial z = base.zero();
    for (std::size_t i = 0; i < base.size(); ++i) {
      long c = 0;
      while (c == 0) c = static_cast<long>(rng() % 41) - 20;
      z += base.gen(i).pow(l / base.generators()[i].degree) * Rational(c);
    }
    out.push_back(std::move(z));
  }
  return out;
}

bool verify_witness(const ModuleSetup& s, const TorsionWitness& w) {
  if (w.element.is_zero()) return false;
  const Polynomial boundary = s.pi1.apply(w.element.left) - s.pi2.apply(w.element.right);
  if (!boundary.is_zero()) return false;
  return (s.rho_minus.apply(w.annihilator) * w.element.left).is_zero() &&
         (s.rho_plus.apply(w.annihilator) * w.element.right).is_zero();
}

namespace {

oracle::MapData to_oracle(const RingMap& m) {
  oracle::MapData data;
  for (const auto& g : m.source().generators()) data.source_degrees.push_back(g.degree);
  for (const auto& g : m.target().generators()) data.target_degrees.push_back(g.degree);
  for (const auto& img : m.images()) data.images.push_back(img.terms());
  return data;
}

}  // namespace

OracleComparison compare_with_oracle(const KernelModule& km, int max_degree) {
  OracleComparison cmp;
  cmp.max_degree = std::min(max_degree, km.max_degree());
  const auto pi1 = to_oracle(km.setup().pi1);
  const auto pi2 = to_oracle(km.setup().pi2);
  for (int d = 0; d <= cmp.max_degree; ++d) {
    const oracle::KernelSlice slice = oracle::brute_force_kernel(pi1, pi2, d);
    std::vector<std::pair<oracle::Terms, oracle::Terms>> ours;
    for (const auto& e : km.slice_elements(d)) ours.emplace_back(e.left.terms(), e.right.terms());
    if (slice.basis.size() != km.slice_dim(d) || !oracle::same_span(slice, ours)) {
      cmp.agrees = false;
      cmp.mismatched_degrees.push_back(d);
    }
  }
  return cmp;
}

AnalysisReport analyze(const GroupDiagram& d, const AnalysisOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  if (options.max_degree < 0 || options.max_degree % 2 != 0) {
    throw ValidationError({"max degree must be a nonnegative even integer, got " + std::to_string(options.max_degree)});
  }

  AnalysisReport report;
  report.options = options;
  report.validated = validate(d);
  report.case_label = classify(report.validated);
  report.formality = formality_and_dimension(report.validated);

  for (const auto& [label, K, emb, q] :
       {std::tuple{"K-/H", &d.Kminus, &d.h_in_kminus, &d.minus_quotient},
        std::tuple{"K+/H", &d.Kplus, &d.h_in_kplus, &d.plus_quotient}}) {
    if (q->kind != Quotient::Kind::Poincare) continue;
    PoincareCheck pc;
    pc.label = label;
    pc.rank_drop = rank(d.H) == rank(*K) - 1;
    pc.surjectivity = surjectivity_check(emb->map, options.max_degree);
    if (!pc.rank_drop || !pc.surjectivity.surjective) {
      report.issues.push_back(std::string(label) + ": restriction to H is not surjective or ranks do not drop by one");
    }
    report.poincare_checks.push_back(std::move(pc));
  }

  if (!options.kernel) {
    report.kernel_note = "not computed";
  } else if (report.case_label == CaseLabel::EqualRank) {
    report.kernel_note =
        "not applicable: rank H = rank K- = rank K+; the kernel description needs rank H < max(rank K-, rank K+). "
        "Cohen-Macaulay property asserted by the general theorem, not independently checked";
  } else {
    const ModuleSetup setup = module_setup(d);
    KernelModule km = kernel_slices(setup, options.max_degree);
    SplittingCheck splitting = splitting_check(km);
    if (!splitting.surjective) {
      report.issues.push_back("difference map onto H*(BH) is not surjective in a rank-drop case; check the embeddings");
    }
    if (!splitting.dimension_identity) report.issues.push_back("kernel dimensions violate the split sequence count");

    KernelAnalysis ka{std::move(km), std::move(splitting), {}, std::nullopt, std::nullopt, {}, {}, std::nullopt};
    if (options.generators || options.freeness) ka.generators = module_generators(ka.module);
    if (options.freeness) {
      ka.freeness = free_basis_search(ka.module, ka.generators);
      const bool free = ka.freeness->verdict == FreenessVerdict::Free;
      if (free != report.formality.formal) {
        report.issues.push_back(std::string("freeness search says ") + std::string(verdict_name(ka.freeness->verdict)) +
                                " but the rank criterion says " + (report.formality.formal ? "formal" : "not formal"));
      }
      if (ka.freeness->witness) {
        ka.witness_verified = verify_witness(setup, *ka.freeness->witness);
        if (!*ka.witness_verified) report.issues.push_back("torsion witness failed re-verification by substitution");
      }
    }
    ka.hilbert = hilbert_series_module(ka.module, ka.freeness ? &*ka.freeness : nullptr);
    if (ka.hilbert.closed_form &&
        expand(*ka.hilbert.closed_form, options.max_degree) != ka.hilbert.truncated) {
      report.issues.push_back("closed-form Hilbert series disagrees with slice dimensions");
    }

    if (options.cohen_macaulay) {
      const auto length = static_cast<std::size_t>(report.formality.krull_dimension);
      std::vector<Polynomial> first;
      if (options.hsop) {
        first = *options.hsop;
      } else {
        for (std::size_t i = 0; i < length && i < setup.base.size(); ++i) first.push_back(setup.base.gen(i));
      }
      constexpr int kAttempts = 8;
      for (int attempt = 0; attempt <= kAttempts; ++attempt) {
        HsopAttempt a;
        a.attempt = attempt;
        a.elements = attempt == 0 ? first : generic_hsop(setup.base, length, options.seed, attempt);
        a.result = regular_sequence_check(ka.module, a.elements);
        const bool ok = a.result.verified;
        ka.cm_attempts.push_back(std::move(a));
        if (ok) break;
      }
      const auto& last = ka.cm_attempts.back();
      if (!last.result.verified) {
        report.issues.push_back("no regular sequence of length " + std::to_string(length) + " found");
      } else if (last.result.length != length) {
        report.issues.push_back("regular sequence length " + std::to_string(last.result.length) +
                                " differs from the Krull dimension " + std::to_string(length));
      }
    }

    if (options.oracle) {
      ka.oracle = compare_with_oracle(ka.module, options.max_degree);
      if (!ka.oracle->agrees) report.issues.push_back("brute-force oracle disagrees with the kernel slices");
    }
    report.kernel = std::move(ka);
  }

  if (options.timings) {
    report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  return report;
}

}  // namespace eqc
