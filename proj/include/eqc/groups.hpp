#pragma once

#include "eqc/graded.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace eqc {

enum class Family { SU, SO, Sp, U, Torus, Finite };

std::string_view family_name(Family f);

// A compact Lie group from the classical catalog, or a named finite group.
struct GroupAtom {
  Family family = Family::Finite;
  int size = 0;              // n in SU(n), SO(n), ...; k in T(k); unused for Finite
  std::string finite_name;   // only for Finite
  int rank = 0;
  int dim = 0;
  std::vector<int> generator_degrees;
  std::vector<std::string> generator_names;

  bool operator==(const GroupAtom&) const = default;
};

GroupAtom atom(Family family, int size);
GroupAtom finite_atom(std::string name);

// Product of atoms; the empty product is the trivial group.
struct GroupExpr {
  std::vector<GroupAtom> factors;
  bool operator==(const GroupExpr&) const = default;
};

int rank(const GroupExpr& g);
int dim(const GroupExpr& g);

// `ATOM [x ATOM]*`; ATOM one of SU(n) SO(n) Sp(n) U(n) T(k) S3 I* I Finite(name).
GroupExpr parse_group(std::string_view text);
std::string to_string(const GroupAtom& a);
std::string to_string(const GroupExpr& g);

// Generator names carry a `_<factor index>` suffix (1-based) when there is more than one factor.
GradedRing invariant_ring(const GroupExpr& g);

enum class InclusionKind { Identity, Chain, FiniteIntoAtom };

std::string_view kind_name(InclusionKind k);

struct InclusionSpec {
  std::vector<InclusionKind> kinds;  // one per factor
  bool operator==(const InclusionSpec&) const = default;
};

// Throws InclusionError when a kind does not apply to its factor pair.
void check_inclusion(const GroupExpr& sub, const GroupExpr& sup, const InclusionSpec& inc);
// Picks identity for equal atoms, chain within a family, finite-into-atom for finite factors.
InclusionSpec standard_inclusion(const GroupExpr& sub, const GroupExpr& sup);

// H*(B sup) -> H*(B sub) induced by sub ⊂ sup.
RingMap restriction_map(const GroupExpr& sub, const GroupExpr& sup, const InclusionSpec& inc);
RingMap restriction_map(const GroupAtom& sub, const GroupAtom& sup, InclusionKind kind);

// Transitive actions on the Poincaré homology sphere known to the catalog:
// (SU(2), I*) and (SO(3), I).
bool is_poincare_pair(const GroupAtom& sup, const GroupAtom& sub);

}  // namespace eqc
