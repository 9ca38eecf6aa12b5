#pragma once

#include <map>
#include <string>
#include <vector>

#include "sumsets/rational.hpp"
#include "sumsets/sorted_set.hpp"

namespace sumsets {

// Closed family of maps (no arbitrary code) so that runs are reproducible
// and maps serialize into reports.
class PointMap {
 public:
  // x^p with p >= 2.
  static PointMap power(unsigned exponent);

  // Coefficients in ascending degree order; affine polynomials are allowed,
  // degeneracy surfaces later as a failed hypothesis.
  static PointMap polynomial(std::vector<Rational> coefficients);

  static PointMap table(std::map<Rational, Rational> values);

  // Table lookups throw IncompleteMap when the point is missing.
  Rational operator()(const Rational& x) const;

  std::string describe() const;

 private:
  enum class Kind { Power, Polynomial, Table };

  PointMap(Kind kind) : kind_(kind) {}

  Kind kind_;
  unsigned exponent_ = 0;
  std::vector<Rational> coefficients_;
  std::map<Rational, Rational> table_;
};

// Image {F(a) : a in A} as a set. A non-injective map on A throws
// DuplicateElement. Convexity of F is never assumed; downstream hypotheses
// are verified directly on the image.
SortedSet apply_map(const SortedSet& a, const PointMap& f);

}  // namespace sumsets
