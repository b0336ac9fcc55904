#include "eqc/graded.hpp"

#include <map>
#include <sstream>

namespace eqc {

std::vector<std::int64_t> expand(const HilbertSeries::ClosedForm& form, int max_degree) {
  if (max_degree < 0) return {};
  std::vector<std::int64_t> c(static_cast<std::size_t>(max_degree) + 1, 0);
  for (std::size_t i = 0; i < form.numerator.size() && i < c.size(); ++i) c[i] = form.numerator[i];
  // Multiply by 1/(1 - t^d) = running sum with stride d.
  for (int d : form.denominator) {
    for (std::size_t i = static_cast<std::size_t>(d); i < c.size(); ++i) c[i] += c[i - static_cast<std::size_t>(d)];
  }
  return c;
}

HilbertSeries hilbert_series_ring(const GradedRing& ring, int max_degree) {
  HilbertSeries hs;
  HilbertSeries::ClosedForm form{{1}, {}};
  for (const auto& g : ring.generators()) form.denominator.push_back(g.degree);
  hs.truncated = expand(form, max_degree);
  hs.closed_form = std::move(form);
  return hs;
}

std::string format_closed_form(const HilbertSeries::ClosedForm& form) {
  std::ostringstream num;
  int terms = 0;
  for (std::size_t i = 0; i < form.numerator.size(); ++i) {
    std::int64_t c = form.numerator[i];
    if (c == 0) continue;
    if (terms > 0) num << (c < 0 ? " - " : " + ");
    else if (c < 0) num << "-";
    std::int64_t mag = c < 0 ? -c : c;
    if (i == 0) {
      num << mag;
    } else {
      if (mag != 1) num << mag << "*";
      num << "t";
      if (i > 1) num << "^" << i;
    }
    ++terms;
  }
  if (terms == 0) num << "0";

  std::map<int, int> multiplicity;
  for (int d : form.denominator) ++multiplicity[d];
  std::ostringstream den;
  for (const auto& [d, k] : multiplicity) {
    den << "(1-t";
    if (d != 1) den << "^" << d;
    den << ")";
    if (k > 1) den << "^" << k;
  }

  std::string n = num.str();
  if (terms > 1) n = "(" + n + ")";
  if (multiplicity.empty()) return n;
  return n + " / " + den.str();
}

}  // namespace eqc
