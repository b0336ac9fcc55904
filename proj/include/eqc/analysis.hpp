#pragma once

#include "eqc/groups.hpp"
#include "eqc/mvkernel.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace eqc {

// K/H annotation: a sphere S^k or the Poincaré homology sphere.
struct Quotient {
  enum class Kind { Sphere, Poincare };
  Kind kind = Kind::Sphere;
  int sphere_dim = 0;

  static Quotient sphere(int k) { return {Kind::Sphere, k}; }
  static Quotient poincare() { return {Kind::Poincare, 3}; }
  int dimension() const { return kind == Kind::Poincare ? 3 : sphere_dim; }
  bool operator==(const Quotient&) const = default;
};

std::string to_string(const Quotient& q);
Quotient parse_quotient(std::string_view text);

// An inclusion sub ⊂ sup together with the induced map H*(B sup) -> H*(B sub).
struct Embedding {
  enum class Source { Standard, Identity, Kinds, Explicit };
  Source source = Source::Standard;
  std::optional<InclusionSpec> inclusion;
  RingMap map;

  bool operator==(const Embedding&) const = default;
};

Embedding standard_embedding(const GroupExpr& sub, const GroupExpr& sup);
Embedding identity_embedding(const GroupExpr& sub, const GroupExpr& sup);
Embedding kinds_embedding(const GroupExpr& sub, const GroupExpr& sup, InclusionSpec spec);
Embedding explicit_embedding(const GroupExpr& sub, const GroupExpr& sup, std::vector<Polynomial> images);

struct GroupDiagram {
  GroupExpr G;
  GroupExpr H;
  GroupExpr Kminus;
  GroupExpr Kplus;
  Embedding h_in_kminus;
  Embedding h_in_kplus;
  Embedding kminus_in_g;
  Embedding kplus_in_g;
  Quotient minus_quotient;  // K-/H
  Quotient plus_quotient;   // K+/H

  bool operator==(const GroupDiagram&) const = default;
};

// Diagram built from standard embeddings.
GroupDiagram make_diagram(GroupExpr G, GroupExpr H, GroupExpr Kminus, GroupExpr Kplus, Quotient minus_quotient,
                          Quotient plus_quotient);

struct ValidatedDiagram {
  GroupDiagram diagram;  // orientation as given
  bool swapped = false;  // K- and K+ exchanged so that rank K+ <= rank K-
  int rank_g = 0;
  int rank_h = 0;
  int rank_kminus = 0;  // after normalization; this is b
  int rank_kplus = 0;
};

// Throws ValidationError listing every violated condition.
ValidatedDiagram validate(const GroupDiagram& d);

enum class CaseLabel { EqualRank, RankDropCase1, RankDropCase2 };
std::string_view case_name(CaseLabel c);
CaseLabel classify(const ValidatedDiagram& v);

struct Formality {
  bool formal = false;
  int krull_dimension = 0;
  int max_isotropy_rank = 0;
  int rank_g = 0;
};

Formality formality_and_dimension(const ValidatedDiagram& v);

// left = H*(BK-), right = H*(BK+), bottom = H*(BH), base = H*(BG) in the diagram's own orientation.
ModuleSetup module_setup(const GroupDiagram& d);

struct AnalysisOptions {
  int max_degree = 40;
  std::uint64_t seed = 1;
  std::optional<std::vector<Polynomial>> hsop;
  bool oracle = false;
  bool timings = false;
  bool kernel = true;
  bool generators = true;
  bool freeness = true;
  bool cohen_macaulay = true;
};

struct PoincareCheck {
  std::string label;  // "K-/H" or "K+/H"
  bool rank_drop = false;
  SurjectivityCheck surjectivity;
};

struct HsopAttempt {
  int attempt = 0;  // 0 = catalog order or user override, then generic combinations
  std::vector<Polynomial> elements;
  RegularSequenceResult result;
};

struct OracleComparison {
  int max_degree = 0;
  bool agrees = true;
  std::vector<int> mismatched_degrees;
};

struct KernelAnalysis {
  KernelModule module;
  SplittingCheck splitting;
  std::vector<KernelElement> generators;
  std::optional<FreenessResult> freeness;
  std::optional<bool> witness_verified;
  HilbertSeries hilbert;
  std::vector<HsopAttempt> cm_attempts;
  std::optional<OracleComparison> oracle;
};

struct AnalysisReport {
  ValidatedDiagram validated;
  CaseLabel case_label = CaseLabel::EqualRank;
  Formality formality;
  std::vector<PoincareCheck> poincare_checks;
  AnalysisOptions options;
  std::optional<KernelAnalysis> kernel;
  std::string kernel_note;
  std::vector<std::string> issues;  // failed internal cross-checks
  std::optional<double> elapsed_ms;
};

std::vector<Polynomial> generic_hsop(const GradedRing& base, std::size_t length, std::uint64_t seed, int attempt);

// Verifies z·m = 0 and that m lies in the kernel by direct substitution.
bool verify_witness(const ModuleSetup& setup, const TorsionWitness& w);

OracleComparison compare_with_oracle(const KernelModule& km, int max_degree);

// Throws ValidationError for invalid diagrams; cross-check failures go to `issues`.
AnalysisReport analyze(const GroupDiagram& d, const AnalysisOptions& options);

}  // namespace eqc
