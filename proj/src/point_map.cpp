#include "sumsets/point_map.hpp"

#include <utility>

#include "sumsets/errors.hpp"

namespace sumsets {

PointMap PointMap::power(unsigned exponent) {
  if (exponent < 2) {
    throw TooSmall("power map needs exponent >= 2, got " +
                   std::to_string(exponent));
  }
  PointMap map(Kind::Power);
  map.exponent_ = exponent;
  return map;
}

PointMap PointMap::polynomial(std::vector<Rational> coefficients) {
  PointMap map(Kind::Polynomial);
  map.coefficients_ = std::move(coefficients);
  return map;
}

PointMap PointMap::table(std::map<Rational, Rational> values) {
  PointMap map(Kind::Table);
  map.table_ = std::move(values);
  return map;
}

Rational PointMap::operator()(const Rational& x) const {
  switch (kind_) {
    case Kind::Power:
      return rational_power(x, exponent_);
    case Kind::Polynomial: {
      // Horner, coefficients stored ascending by degree.
      Rational value = 0;
      for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
        value = value * x + *it;
      }
      return value;
    }
    case Kind::Table: {
      const auto it = table_.find(x);
      if (it == table_.end()) {
        throw IncompleteMap("no table entry for " + format_rational(x));
      }
      return it->second;
    }
  }
  throw Error("unreachable point map kind");
}

std::string PointMap::describe() const {
  switch (kind_) {
    case Kind::Power:
      return "x^" + std::to_string(exponent_);
    case Kind::Polynomial: {
      std::string text = "poly[";
      for (std::size_t i = 0; i < coefficients_.size(); ++i) {
        if (i > 0) text += ", ";
        text += format_rational(coefficients_[i]);
      }
      return text + "]";
    }
    case Kind::Table:
      return "table(" + std::to_string(table_.size()) + " entries)";
  }
  return "unknown";
}

SortedSet apply_map(const SortedSet& set, const PointMap& map) {
  std::vector<Rational> images;
  images.reserve(set.size());
  for (const Rational& x : set) images.push_back(map(x));
  return SortedSet::from_values(std::move(images));
}

}  // namespace sumsets
