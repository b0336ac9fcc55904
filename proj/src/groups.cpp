#include "eqc/groups.hpp"

#include "eqc/error.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace eqc {

std::string_view family_name(Family f) {
  switch (f) {
    case Family::SU: return "SU";
    case Family::SO: return "SO";
    case Family::Sp: return "Sp";
    case Family::U: return "U";
    case Family::Torus: return "T";
    case Family::Finite: return "Finite";
  }
  return "?";
}

std::string_view kind_name(InclusionKind k) {
  switch (k) {
    case InclusionKind::Identity: return "id";
    case InclusionKind::Chain: return "chain";
    case InclusionKind::FiniteIntoAtom: return "finite";
  }
  return "?";
}

GroupAtom atom(Family family, int n) {
  if (family == Family::Finite) throw GroupError("finite atoms are named; use finite_atom");
  const int min_size = family == Family::Torus ? 0 : 1;
  if (n < min_size) {
    throw GroupError("invalid size " + std::to_string(n) + " for " + std::string(family_name(family)));
  }
  GroupAtom a;
  a.family = family;
  a.size = n;
  auto add = [&](std::string name, int degree) {
    a.generator_names.push_back(std::move(name));
    a.generator_degrees.push_back(degree);
  };
  switch (family) {
    case Family::SU:
      a.rank = n - 1;
      a.dim = n * n - 1;
      for (int i = 2; i <= n; ++i) add("c" + std::to_string(i), 2 * i);
      break;
    case Family::U:
      a.rank = n;
      a.dim = n * n;
      for (int i = 1; i <= n; ++i) add("c" + std::to_string(i), 2 * i);
      break;
    case Family::Sp:
      a.rank = n;
      a.dim = n * (2 * n + 1);
      for (int i = 1; i <= n; ++i) add("q" + std::to_string(i), 4 * i);
      break;
    case Family::SO: {
      const int m = n / 2;
      a.rank = m;
      a.dim = n * (n - 1) / 2;
      if (n % 2 == 1) {
        for (int i = 1; i <= m; ++i) add("p" + std::to_string(i), 4 * i);
      } else {
        for (int i = 1; i < m; ++i) add("p" + std::to_string(i), 4 * i);
        add("e", 2 * m);
      }
      break;
    }
    case Family::Torus:
      a.rank = n;
      a.dim = n;
      for (int i = 1; i <= n; ++i) add("t" + std::to_string(i), 2);
      break;
    case Family::Finite:
      break;
  }
  return a;
}

GroupAtom finite_atom(std::string name) {
  if (name.empty()) throw GroupError("finite group needs a name");
  GroupAtom a;
  a.family = Family::Finite;
  a.finite_name = std::move(name);
  return a;
}

int rank(const GroupExpr& g) {
  return std::accumulate(g.factors.begin(), g.factors.end(), 0,
                         [](int acc, const GroupAtom& a) { return acc + a.rank; });
}

int dim(const GroupExpr& g) {
  return std::accumulate(g.factors.begin(), g.factors.end(), 0,
                         [](int acc, const GroupAtom& a) { return acc + a.dim; });
}

namespace {

GroupAtom parse_atom(const std::string& token) {
  if (token == "S3") return atom(Family::SU, 2);
  if (token == "I*" || token == "I") return finite_atom(token);

  const auto open = token.find('(');
  if (open == std::string::npos || token.back() != ')') {
    throw GroupError("unknown group atom '" + token + "'");
  }
  const std::string head = token.substr(0, open);
  const std::string arg = token.substr(open + 1, token.size() - open - 2);
  if (head == "Finite") return finite_atom(arg);

  Family family;
  if (head == "SU") family = Family::SU;
  else if (head == "SO") family = Family::SO;
  else if (head == "Sp") family = Family::Sp;
  else if (head == "U") family = Family::U;
  else if (head == "T") family = Family::Torus;
  else throw GroupError("unknown group family '" + head + "'");

  if (arg.empty() || !std::all_of(arg.begin(), arg.end(), [](unsigned char c) { return std::isdigit(c); })) {
    throw GroupError("invalid size '" + arg + "' in '" + token + "'");
  }
  return atom(family, std::stoi(arg));
}

}  // namespace

GroupExpr parse_group(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  }
  if (compact.empty()) throw GroupError("empty group expression");

  GroupExpr g;
  std::string token;
  int depth = 0;
  for (char c : compact) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == 'x' && depth == 0) {
      if (token.empty()) throw GroupError("missing factor in '" + std::string(text) + "'");
      g.factors.push_back(parse_atom(token));
      token.clear();
      continue;
    }
    token += c;
  }
  if (token.empty()) throw GroupError("missing factor in '" + std::string(text) + "'");
  g.factors.push_back(parse_atom(token));
  return g;
}

std::string to_string(const GroupAtom& a) {
  if (a.family == Family::Finite) {
    if (a.finite_name == "I*" || a.finite_name == "I") return a.finite_name;
    return "Finite(" + a.finite_name + ")";
  }
  return std::string(family_name(a.family)) + "(" + std::to_string(a.size) + ")";
}

std::string to_string(const GroupExpr& g) {
  std::string out;
  for (const auto& f : g.factors) {
    if (!out.empty()) out += " x ";
    out += to_string(f);
  }
  return out.empty() ? "1" : out;
}

namespace {

GradedRing atom_ring(const GroupAtom& a) {
  std::vector<Generator> gens;
  for (std::size_t i = 0; i < a.generator_names.size(); ++i) {
    gens.push_back({a.generator_names[i], a.generator_degrees[i]});
  }
  return GradedRing(std::move(gens));
}

// H*(B family(n+1)) -> H*(B family(n)) for the standard inclusion.
RingMap one_step(const GroupAtom& big, const GroupAtom& small) {
  const GradedRing src = atom_ring(big);
  const GradedRing dst = atom_ring(small);
  std::vector<Polynomial> images;
  if (big.family == Family::SO && big.size % 2 == 1) {
    // SO(2m+1) -> SO(2m): p_i -> p_i (i < m), p_m -> e^2.
    const int m = big.size / 2;
    for (int i = 1; i <= m; ++i) {
      images.push_back(i < m ? dst.gen("p" + std::to_string(i)) : dst.gen("e").pow(2));
    }
  } else {
    // Generators shared by name are fixed, the rest (top class) vanish.
    for (const auto& name : big.generator_names) {
      auto idx = dst.index_of(name);
      images.push_back(idx ? dst.gen(*idx) : dst.zero());
    }
  }
  return RingMap(src, dst, std::move(images));
}

}  // namespace

RingMap restriction_map(const GroupAtom& sub, const GroupAtom& sup, InclusionKind kind) {
  const GradedRing src = atom_ring(sup);
  const GradedRing dst = atom_ring(sub);
  switch (kind) {
    case InclusionKind::Identity:
      if (!(sub == sup)) {
        throw InclusionError("identity inclusion needs equal factors, got " + to_string(sub) + " and " +
                             to_string(sup));
      }
      return RingMap::identity(src);
    case InclusionKind::FiniteIntoAtom:
      if (sub.family != Family::Finite) {
        throw InclusionError("finite-into-atom inclusion needs a finite subgroup, got " + to_string(sub));
      }
      return RingMap::zero_map(src, dst);
    case InclusionKind::Chain: {
      if (sub.family != sup.family || sub.family == Family::Finite || sub.size > sup.size) {
        throw InclusionError("no chain inclusion " + to_string(sub) + " in " + to_string(sup));
      }
      RingMap acc = RingMap::identity(src);
      GroupAtom current = sup;
      while (current.size > sub.size) {
        GroupAtom next = atom(current.family, current.size - 1);
        acc = compose(one_step(current, next), acc);
        current = std::move(next);
      }
      return acc;
    }
  }
  throw InclusionError("unknown inclusion kind");
}

void check_inclusion(const GroupExpr& sub, const GroupExpr& sup, const InclusionSpec& inc) {
  if (sub.factors.size() != sup.factors.size()) {
    throw InclusionError("factor count mismatch: " + to_string(sub) + " has " +
                         std::to_string(sub.factors.size()) + ", " + to_string(sup) + " has " +
                         std::to_string(sup.factors.size()));
  }
  if (inc.kinds.size() != sub.factors.size()) {
    throw InclusionError("inclusion spec lists " + std::to_string(inc.kinds.size()) + " kinds for " +
                         std::to_string(sub.factors.size()) + " factors");
  }
  for (std::size_t i = 0; i < inc.kinds.size(); ++i) {
    const GroupAtom& a = sub.factors[i];
    const GroupAtom& b = sup.factors[i];
    bool ok = false;
    switch (inc.kinds[i]) {
      case InclusionKind::Identity: ok = a == b; break;
      case InclusionKind::Chain:
        ok = a.family == b.family && a.family != Family::Finite && a.size <= b.size;
        break;
      case InclusionKind::FiniteIntoAtom: ok = a.family == Family::Finite; break;
    }
    if (!ok) {
      throw InclusionError("factor " + std::to_string(i + 1) + ": " + std::string(kind_name(inc.kinds[i])) +
                           " does not apply to " + to_string(a) + " in " + to_string(b));
    }
  }
}

InclusionSpec standard_inclusion(const GroupExpr& sub, const GroupExpr& sup) {
  if (sub.factors.size() != sup.factors.size()) {
    throw InclusionError("factor count mismatch between " + to_string(sub) + " and " + to_string(sup));
  }
  InclusionSpec inc;
  for (std::size_t i = 0; i < sub.factors.size(); ++i) {
    const GroupAtom& a = sub.factors[i];
    const GroupAtom& b = sup.factors[i];
    if (a == b) inc.kinds.push_back(InclusionKind::Identity);
    else if (a.family == Family::Finite) inc.kinds.push_back(InclusionKind::FiniteIntoAtom);
    else if (a.family == b.family && a.size <= b.size) inc.kinds.push_back(InclusionKind::Chain);
    else throw InclusionError("no standard inclusion of " + to_string(a) + " in " + to_string(b));
  }
  return inc;
}

GradedRing invariant_ring(const GroupExpr& g) {
  const bool suffix = g.factors.size() > 1;
  std::vector<Generator> gens;
  for (std::size_t f = 0; f < g.factors.size(); ++f) {
    const GroupAtom& a = g.factors[f];
    for (std::size_t i = 0; i < a.generator_names.size(); ++i) {
      std::string name = a.generator_names[i];
      if (suffix) name += "_" + std::to_string(f + 1);
      gens.push_back({std::move(name), a.generator_degrees[i]});
    }
  }
  return GradedRing(std::move(gens));
}

RingMap restriction_map(const GroupExpr& sub, const GroupExpr& sup, const InclusionSpec& inc) {
  check_inclusion(sub, sup, inc);
  const GradedRing src = invariant_ring(sup);
  const GradedRing dst = invariant_ring(sub);

  std::vector<Polynomial> images;
  std::size_t dst_offset = 0;
  for (std::size_t f = 0; f < sup.factors.size(); ++f) {
    const RingMap local = restriction_map(sub.factors[f], sup.factors[f], inc.kinds[f]);
    for (const auto& img : local.images()) {
      Polynomial lifted(dst.size());
      for (const auto& [e, c] : img.terms()) {
        Exponent full(dst.size(), 0);
        std::copy(e.begin(), e.end(), full.begin() + static_cast<std::ptrdiff_t>(dst_offset));
        lifted.add_term(full, c);
      }
      images.push_back(std::move(lifted));
    }
    dst_offset += sub.factors[f].generator_names.size();
  }
  return RingMap(src, dst, std::move(images));
}

bool is_poincare_pair(const GroupAtom& sup, const GroupAtom& sub) {
  if (sub.family != Family::Finite) return false;
  if (sup == atom(Family::SU, 2)) return sub.finite_name == "I*";
  if (sup == atom(Family::SO, 3)) return sub.finite_name == "I";
  return false;
}

}  // namespace eqc
