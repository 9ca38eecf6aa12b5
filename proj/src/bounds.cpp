#include "sumsets/bounds.hpp"

#include <algorithm>

#include "sumsets/errors.hpp"
#include "sumsets/sigma.hpp"
#include "sumsets/sumset.hpp"

namespace sumsets {

namespace {

BoundCheck make_check(std::string name, Int lhs, Int rhs, std::string op) {
  const bool pass = op == ">=" ? lhs >= rhs : op == ">" ? lhs > rhs : lhs <= rhs;
  return BoundCheck{std::move(name), std::move(lhs), std::move(rhs), std::move(op), pass};
}

}  // namespace

std::string theorem_name(Theorem theorem) {
  switch (theorem) {
    case Theorem::T1:
      return "T1";
    case Theorem::T2:
      return "T2";
    case Theorem::T3:
      return "T3";
    case Theorem::T4:
      return "T4";
  }
  return "?";
}

bool BoundReport::all_checks_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const BoundCheck& check) { return check.pass; });
}

bool theorem1_main_holds(const Int& m, const Int& k, const Int& l) {
  return 9 * m * m >= k * k * l;
}

bool theorem1_sharper_holds(const Int& m, const Int& k, const Int& l) {
  const Int lhs = 2 * m + k - 1;
  return lhs * lhs > 2 * l * (k - 1) * (k - 1);
}

bool theorem3_bound_holds(const Int& m, const Int& m_prime, const Int& k, const Int& l,
                          const Int& l_prime) {
  const Int mm = m * m_prime;
  return 8 * mm * mm >= k * k * k * l * l_prime;
}

bool theorem4_bound_holds(const Int& m_max, const Int& n) {
  const Int m2 = m_max * m_max;
  const Int n2 = n * n;
  return 8 * m2 * m2 >= n2 * n2 * n;
}

BoundReport check_theorem1(const SortedSet& a, const SortedSet& b) {
  if (a.empty() || b.empty()) throw TooSmall("needs nonempty A and B");
  BoundReport report;
  report.theorem = Theorem::T1;
  report.hypothesis_ok = has_distinct_consecutive_differences(a);
  const std::size_t m = sumset(a, b).size();
  report.sizes.k = a.size();
  report.sizes.l = b.size();
  report.sizes.m = m;
  const Int ki(a.size()), li(b.size()), mi(m);
  report.checks.push_back(make_check("main", 9 * mi * mi, ki * ki * li, ">="));
  if (a.size() >= 3 && b.size() >= 3) {
    const Int lhs = 2 * mi + ki - 1;
    report.checks.push_back(
        make_check("sharper", lhs * lhs, 2 * li * (ki - 1) * (ki - 1), ">"));
  }
  return report;
}

BoundReport check_theorem2(const SortedSet& a, const SortedSet& b) {
  if (b.empty()) throw TooSmall("needs nonempty B");
  BoundReport report;
  report.theorem = Theorem::T2;
  report.delta = delta_ratio(a);  // also enforces |A| >= 2
  report.hypothesis_ok = true;    // delta is measured, so |D| >= delta*|A| by definition
  const std::size_t m = sumset(a, b).size();
  report.sizes.k = a.size();
  report.sizes.l = b.size();
  report.sizes.m = m;
  const Int ki(a.size()), li(b.size()), mi(m);
  report.empirical = std::make_pair(mi * mi, ki * li * li);
  return report;
}

BoundReport check_theorem3(const SortedSet& a, const SortedSet& a_prime,
                           const SortedSet& b, const SortedSet& b_prime) {
  if (a.size() != a_prime.size()) {
    throw SizeMismatch("|A| = " + std::to_string(a.size()) +
                       " but |A'| = " + std::to_string(a_prime.size()));
  }
  if (a.size() < 2) throw TooSmall("needs k >= 2");
  if (b.empty() || b_prime.empty()) throw TooSmall("needs nonempty B and B'");
  BoundReport report;
  report.theorem = Theorem::T3;
  report.hypothesis_ok = find_sigma(a, a_prime).has_value();
  const std::size_t m = sumset(a, b).size();
  const std::size_t m2 = sumset(a_prime, b_prime).size();
  report.sizes.k = a.size();
  report.sizes.l = b.size();
  report.sizes.l2 = b_prime.size();
  report.sizes.m = m;
  report.sizes.m2 = m2;
  const Int ki(a.size()), li(b.size()), l2i(b_prime.size());
  const Int mm = Int(m) * Int(m2);
  report.checks.push_back(
      make_check("product", 8 * mm * mm, ki * ki * ki * li * l2i, ">="));
  return report;
}

BoundReport check_theorem4(const SortedSet& a, const SortedSet& b, const SortedSet& c,
                           const PointMap& f) {
  if (a.size() != b.size() || a.size() != c.size()) {
    throw SizeMismatch("|A| = " + std::to_string(a.size()) + ", |B| = " +
                       std::to_string(b.size()) + ", |C| = " + std::to_string(c.size()));
  }
  if (a.empty()) throw TooSmall("needs nonempty sets");
  BoundReport report;
  report.theorem = Theorem::T4;
  const SortedSet image = apply_map(a, f);
  try {
    identity_sigma_for_convex_map(a, f);
    report.hypothesis_ok = true;
  } catch (const HypothesisError&) {
    report.hypothesis_ok = false;
  }
  const std::size_t m = sumset(a, b).size();
  const std::size_t m2 = sumset(image, c).size();
  report.self_case = (b == image && c == a);
  report.sizes.k = a.size();
  report.sizes.l = b.size();
  report.sizes.l2 = c.size();
  report.sizes.m = m;
  report.sizes.m2 = m2;
  const Int ni(a.size());
  const Int m_max(std::max(m, m2));
  const Int m_sq = m_max * m_max;
  const Int n_sq = ni * ni;
  report.checks.push_back(
      make_check("max_power", 8 * m_sq * m_sq, n_sq * n_sq * ni, ">="));
  report.empirical = std::make_pair(m_sq * m_sq, n_sq * n_sq * ni);
  return report;
}

}  // namespace sumsets
