#pragma once

// Brute-force kernel solver used to cross-check the elimination path in mvkernel.
// It shares no code with the graded/linalg modules: monomials are enumerated by an
// exponent-box odometer, images are expanded term by term, and the nullspace comes
// from reducing the transposed system augmented with the identity.

#include <gmpxx.h>

#include <map>
#include <vector>

namespace eqc::oracle {

using Monomial = std::vector<int>;
using Terms = std::map<Monomial, mpq_class>;

struct MapData {
  std::vector<int> source_degrees;
  std::vector<int> target_degrees;
  std::vector<Terms> images;  // one per source generator
};

struct KernelSlice {
  std::vector<Monomial> left_monomials;
  std::vector<Monomial> right_monomials;
  std::vector<Monomial> bottom_monomials;
  std::vector<std::vector<mpq_class>> basis;  // over left_monomials ++ right_monomials
};

std::vector<Monomial> monomials_of_degree(const std::vector<int>& degrees, int d);
Terms substitute(const MapData& map, const Monomial& m);

// ker (f, g) -> pi1(f) - pi2(g) at degree d.
KernelSlice brute_force_kernel(const MapData& pi1, const MapData& pi2, int d);

// Whether the given (left terms, right terms) pairs span exactly the oracle slice.
bool same_span(const KernelSlice& slice, const std::vector<std::pair<Terms, Terms>>& elements);

std::size_t rank_of(std::vector<std::vector<mpq_class>> rows);

}  // namespace eqc::oracle
