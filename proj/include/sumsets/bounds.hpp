#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sumsets/point_map.hpp"
#include "sumsets/rational.hpp"
#include "sumsets/sorted_set.hpp"

namespace sumsets {

enum class Theorem { T1, T2, T3, T4 };

std::string theorem_name(Theorem theorem);

// One exact integer comparison. Nothing in a report is ever rounded; every
// square root in a stated bound is squared away before comparing.
struct BoundCheck {
  std::string name;
  Int lhs;
  Int rhs;
  std::string op;  // ">=", ">", "<="
  bool pass = false;
};

struct BoundSizes {
  std::optional<std::size_t> k;
  std::optional<std::size_t> l;
  std::optional<std::size_t> l2;
  std::optional<std::size_t> m;
  std::optional<std::size_t> m2;
};

struct BoundReport {
  Theorem theorem = Theorem::T1;
  bool hypothesis_ok = false;
  BoundSizes sizes;
  std::vector<BoundCheck> checks;
  std::optional<std::pair<Int, Int>> empirical;  // squared-ratio pair
  std::optional<Rational> delta;                 // T2 measurement
  bool self_case = false;                        // T4 with B = F(A), C = A

  bool all_checks_pass() const;
};

// Raw comparators, exposed so near-tie inputs can be audited directly.
bool theorem1_main_holds(const Int& m, const Int& k, const Int& l);          // 9m^2 >= k^2*l
bool theorem1_sharper_holds(const Int& m, const Int& k, const Int& l);       // (2m+k-1)^2 > 2l(k-1)^2
bool theorem3_bound_holds(const Int& m, const Int& m_prime, const Int& k,
                          const Int& l, const Int& l_prime);                 // 8(mm')^2 >= k^3*l*l'
bool theorem4_bound_holds(const Int& m_max, const Int& n);                   // 8*m_max^4 >= n^5

// 9m^2 >= k^2*l, plus the sharper proof bound when k, l >= 3. A failed
// hypothesis still produces the report, flagged as non-guaranteed.
BoundReport check_theorem1(const SortedSet& a, const SortedSet& b);

// Pure measurement: delta and the squared empirical constant (m^2, k*l^2).
// No constant is asserted.
BoundReport check_theorem2(const SortedSet& a, const SortedSet& b);

// 8*(m*m')^2 >= k^3*l*l'; hypothesis is sigma-feasibility of (A, A').
BoundReport check_theorem3(const SortedSet& a, const SortedSet& a_prime,
                           const SortedSet& b, const SortedSet& b_prime);

// 8*max(m, m')^4 >= n^5 with A' = F(A) and the identity sigma hypothesis.
BoundReport check_theorem4(const SortedSet& a, const SortedSet& b, const SortedSet& c,
                           const PointMap& f);

}  // namespace sumsets
