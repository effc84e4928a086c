#pragma once

#include <vector>

#include "uniformize/distance.hpp"

namespace uniformize {

/// (x|y)_p = (d(x,p) + d(y,p) - d(x,y)) / 2, clamped at 0 against rounding.
inline double gromov_product(const DistanceTable& dist, NodeId x, NodeId y, NodeId p) {
  const double value = 0.5 * (dist(x, p) + dist(y, p) - dist(x, y));
  return value > 0.0 ? value : 0.0;
}

/// All products (x|y)_base for a fixed base point.
class GromovProductTable {
 public:
  GromovProductTable(const DistanceTable& dist, NodeId base);

  NodeId base() const { return base_; }
  std::size_t size() const { return n_; }
  double operator()(NodeId x, NodeId y) const { return values_[static_cast<std::size_t>(x) * n_ + y]; }

 private:
  NodeId base_;
  std::size_t n_;
  std::vector<double> values_;
};

inline GromovProductTable gromov_products(const DistanceTable& dist, NodeId base) { return {dist, base}; }

}  // namespace uniformize
