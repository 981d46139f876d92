#pragma once

#include <map>
#include <vector>

#include <gmpxx.h>

#include "ktrees/partitions.hpp"
#include "ktrees/series.hpp"

namespace ktrees {

// Class-indexed generating functions of Y-rooted k-coding trees.
//
// For each cycle type lambda of k, cty(lambda) counts the unlabeled Y-rooted
// coding trees fixed by an orientation permutation of that type:
//
//   C_Y(lambda)(x) = exp( sum_{n>=1} x^n/n * prod_{i in lambda^n} C_Y(lambda^{ni})(x^{ni}) )
//
// All p(k) series are built together, one degree at a time: the coefficient
// of x^d in every series depends only on coefficients below d of the others.
// Construction runs in integer arithmetic and checks every exp division is
// exact. The cache is immutable afterwards.
class GammaGfCache {
 public:
  // Requires k >= 1 and order >= 0.
  GammaGfCache(int k, int order);

  int k() const { return k_; }
  int order() const { return order_; }

  // lambda must be a partition of k.
  const Series& cty(const Partition& lambda) const;
  const std::map<Partition, Series>& cty_table() const { return table_y_; }

 private:
  int k_;
  int order_;
  std::map<Partition, Series> table_y_;
};

// Every C_Y(lambda), lambda |- k, truncated at `order`.
std::map<Partition, Series> compute_cty_all(int k, int order);

// Edge-rooted series for a cycle type lambda of k+1:
//   C_XY(lambda)(x) = x * prod_{i in lambda} C_Y(lambda^i - {1})(x^i).
// Throws std::invalid_argument if lambda is not a partition of k+1, or if
// `order` is given and differs from the cache's truncation order.
Series compute_ctxy(const GammaGfCache& cache, const Partition& lambda);
Series compute_ctxy(const GammaGfCache& cache, const Partition& lambda, int order);

// Number of unlabeled k-trees with n hedra for n = 0..order, from
//   sum_{l |- k+1} C_XY(l)/z_l + sum_{l |- k} C_Y(l)/z_l - sum_{l |- k} C_XY(l + {1})/z_l.
// Throws InvariantViolation if the combination is not a nonnegative integer
// series with constant term 1.
std::vector<mpz_class> unlabeled_ktree_gf(int k, int order);
std::vector<mpz_class> unlabeled_ktree_gf(const GammaGfCache& cache);

// The same combination before the integrality check.
Series unlabeled_ktree_series(const GammaGfCache& cache);

}  // namespace ktrees
