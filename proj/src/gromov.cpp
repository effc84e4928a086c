#include "uniformize/gromov.hpp"

#include "uniformize/error.hpp"

namespace uniformize {

GromovProductTable::GromovProductTable(const DistanceTable& dist, NodeId base)
    : base_(base), n_(dist.size()), values_(n_ * n_) {
  if (base >= n_) throw Error("gromov_products: base is not a node");
  for (NodeId x = 0; x < n_; ++x) {
    values_[static_cast<std::size_t>(x) * n_ + x] = dist(x, base);
    for (NodeId y = x + 1; y < n_; ++y) {
      const double v = gromov_product(dist, x, y, base);
      values_[static_cast<std::size_t>(x) * n_ + y] = v;
      values_[static_cast<std::size_t>(y) * n_ + x] = v;
    }
  }
}

}  // namespace uniformize
