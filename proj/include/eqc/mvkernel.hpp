#pragma once

#include "eqc/graded.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace eqc {

// The data of the short exact sequence
//   0 -> M -> left ⊕ right -> bottom -> 0,   (f, g) -> pi1(f) - pi2(g)
// together with the base ring acting on left and right through rho_minus, rho_plus.
struct ModuleSetup {
  GradedRing base;
  GradedRing left;
  GradedRing right;
  GradedRing bottom;
  RingMap pi1;
  RingMap pi2;
  RingMap rho_minus;
  RingMap rho_plus;
};

// Derives the four rings from the maps. Throws IncompatibleSetup if the rings do not
// line up or pi1 o rho_minus != pi2 o rho_plus.
ModuleSetup make_setup(RingMap pi1, RingMap pi2, RingMap rho_minus, RingMap rho_plus);
void check_setup(const ModuleSetup& setup);

struct KernelElement {
  int degree = 0;
  Polynomial left;
  Polynomial right;
  bool is_zero() const { return left.is_zero() && right.is_zero(); }
  bool operator==(const KernelElement&) const = default;
};

std::string to_string(const KernelElement& v, const ModuleSetup& setup);

// [matrix(pi1, d) | -matrix(pi2, d)]
Matrix difference_matrix(const ModuleSetup& setup, int d);
// Multiplication by a homogeneous base element on left_d ⊕ right_d.
Matrix action_matrix(const ModuleSetup& setup, const Polynomial& z, int d);

// Degree-truncated kernel of the difference map. Slice vectors are coordinates over
// slice(left, d) followed by slice(right, d).
class KernelModule {
 public:
  KernelModule(ModuleSetup setup, int max_degree, std::vector<std::vector<Vector>> slices,
               std::vector<std::size_t> difference_ranks);

  const ModuleSetup& setup() const { return setup_; }
  int max_degree() const { return max_degree_; }

  const std::vector<Vector>& slice(int d) const;
  std::size_t slice_dim(int d) const { return slice(d).size(); }
  std::size_t ambient_dim(int d) const;
  std::size_t difference_rank(int d) const;

  KernelElement element(int d, const Vector& coords) const;
  Vector coordinates(const KernelElement& v) const;
  std::vector<KernelElement> slice_elements(int d) const;

 private:
  ModuleSetup setup_;
  int max_degree_;
  std::vector<std::vector<Vector>> slices_;
  std::vector<std::size_t> ranks_;
};

KernelModule kernel_slices(const ModuleSetup& setup, int max_degree);

// (rho_minus(z) v_left, rho_plus(z) v_right). Throws DegreeOverflow past the truncation.
KernelElement base_action(const KernelModule& km, const Polynomial& z, const KernelElement& v);

// Degree-ascending minimal generators up to the truncation degree.
std::vector<KernelElement> module_generators(const KernelModule& km);

enum class FreenessVerdict { Free, NotFree, Inconclusive };

std::string_view verdict_name(FreenessVerdict v);

struct TorsionWitness {
  KernelElement element;
  Polynomial annihilator;  // base element z with z·element = 0
};

struct FreenessResult {
  FreenessVerdict verdict = FreenessVerdict::Inconclusive;
  int max_degree = 0;
  std::vector<KernelElement> basis;       // Free only
  std::optional<TorsionWitness> witness;  // NotFree only
  std::optional<int> first_mismatch;      // first degree where the free prediction fails
};

FreenessResult free_basis_search(const KernelModule& km, const std::vector<KernelElement>& generators);

struct RegularSequenceFailure {
  std::size_t index = 0;
  int degree = 0;
  KernelElement element;
};

struct RegularSequenceResult {
  bool verified = false;
  std::size_t length = 0;
  int horizon = 0;  // truncation minus the sum of the sequence degrees
  std::optional<RegularSequenceFailure> failure;
};

RegularSequenceResult regular_sequence_check(const KernelModule& km, const std::vector<Polynomial>& hsop);

HilbertSeries hilbert_series_module(const KernelModule& km, const FreenessResult* freeness = nullptr);

struct SplittingCheck {
  struct Degree {
    int degree = 0;
    std::size_t left = 0;
    std::size_t right = 0;
    std::size_t bottom = 0;
    std::size_t kernel = 0;
    bool surjective = false;
    bool dimension_identity = false;
  };
  std::vector<Degree> degrees;
  bool surjective = true;
  bool dimension_identity = true;
};

SplittingCheck splitting_check(const KernelModule& km);

}  // namespace eqc
