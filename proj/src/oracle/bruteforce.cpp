#include "eqc/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace eqc::oracle {

std::vector<Monomial> monomials_of_degree(const std::vector<int>& degrees, int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  const std::size_t n = degrees.size();
  Monomial bound(n);
  for (std::size_t i = 0; i < n; ++i) bound[i] = d / degrees[i];
  Monomial e(n, 0);
  while (true) {
    int total = 0;
    for (std::size_t i = 0; i < n; ++i) total += e[i] * degrees[i];
    if (total == d) out.push_back(e);
    std::size_t i = 0;
    while (i < n && e[i] == bound[i]) e[i++] = 0;
    if (i == n) break;
    ++e[i];
  }
  return out;
}

namespace {

Terms multiply(const Terms& a, const Terms& b) {
  Terms out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      Monomial e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out[e] += ca * cb;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

}  // namespace

Terms substitute(const MapData& map, const Monomial& m) {
  Terms acc{{Monomial(map.target_degrees.size(), 0), mpq_class(1)}};
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (int k = 0; k < m[i]; ++k) acc = multiply(acc, map.images[i]);
  }
  return acc;
}

namespace {

// Reduces rows in place; returns number of nonzero rows left at the top.
std::size_t eliminate(std::vector<std::vector<mpq_class>>& rows, std::size_t cols) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    auto it = std::find_if(rows.begin() + static_cast<std::ptrdiff_t>(r), rows.end(),
                           [c](const auto& row) { return row[c] != 0; });
    if (it == rows.end()) continue;
    std::iter_swap(rows.begin() + static_cast<std::ptrdiff_t>(r), it);
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k == r || rows[k][c] == 0) continue;
      const mpq_class f = rows[k][c] / rows[r][c];
      for (std::size_t j = 0; j < rows[k].size(); ++j) rows[k][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace

std::size_t rank_of(std::vector<std::vector<mpq_class>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  return eliminate(rows, cols);
}

KernelSlice brute_force_kernel(const MapData& pi1, const MapData& pi2, int d) {
  KernelSlice out;
  out.left_monomials = monomials_of_degree(pi1.source_degrees, d);
  out.right_monomials = monomials_of_degree(pi2.source_degrees, d);
  out.bottom_monomials = monomials_of_degree(pi1.target_degrees, d);
  const std::size_t nl = out.left_monomials.size();
  const std::size_t n = nl + out.right_monomials.size();
  const std::size_t nb = out.bottom_monomials.size();

  auto bottom_index = [&](const Monomial& m) {
    auto it = std::find(out.bottom_monomials.begin(), out.bottom_monomials.end(), m);
    if (it == out.bottom_monomials.end()) throw std::logic_error("image outside degree slice");
    return static_cast<std::size_t>(it - out.bottom_monomials.begin());
  };

  // Row j of [A^T | I]: image of the j-th unknown, then the unit vector e_j.
  std::vector<std::vector<mpq_class>> rows(n, std::vector<mpq_class>(nb + n));
  for (std::size_t j = 0; j < n; ++j) {
    const bool left = j < nl;
    const Terms image = left ? substitute(pi1, out.left_monomials[j]) : substitute(pi2, out.right_monomials[j - nl]);
    for (const auto& [m, c] : image) rows[j][bottom_index(m)] += left ? c : mpq_class(-c);
    rows[j][nb + j] = 1;
  }
  const std::size_t r = eliminate(rows, nb);
  for (std::size_t k = r; k < rows.size(); ++k) {
    out.basis.emplace_back(rows[k].begin() + static_cast<std::ptrdiff_t>(nb), rows[k].end());
  }
  return out;
}

bool same_span(const KernelSlice& slice, const std::vector<std::pair<Terms, Terms>>& elements) {
  const std::size_t nl = slice.left_monomials.size();
  const std::size_t n = nl + slice.right_monomials.size();
  std::vector<std::vector<mpq_class>> other;
  for (const auto& [lt, rt] : elements) {
    std::vector<mpq_class> v(n);
    for (const auto& [m, c] : lt) {
      auto it = std::find(slice.left_monomials.begin(), slice.left_monomials.end(), m);
      if (it == slice.left_monomials.end()) return false;
      v[static_cast<std::size_t>(it - slice.left_monomials.begin())] = c;
    }
    for (const auto& [m, c] : rt) {
      auto it = std::find(slice.right_monomials.begin(), slice.right_monomials.end(), m);
      if (it == slice.right_monomials.end()) return false;
      v[nl + static_cast<std::size_t>(it - slice.right_monomials.begin())] = c;
    }
    other.push_back(std::move(v));
  }
  const std::size_t a = rank_of(slice.basis);
  const std::size_t b = rank_of(other);
  auto joint = slice.basis;
  joint.insert(joint.end(), other.begin(), other.end());
  return a == slice.basis.size() && b == other.size() && a == b && rank_of(joint) == a;
}

}  // namespace eqc::oracle
