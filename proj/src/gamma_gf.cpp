#include "ktrees/gamma_gf.hpp"

#include <stdexcept>
#include <string>

#include "ktrees/errors.hpp"

namespace ktrees {

namespace {

using Coefficients = std::vector<mpz_class>;

struct Factor {
  std::size_t source;  // index of the C_Y series
  int stretch;         // evaluated at x^stretch
};

}  // namespace

GammaGfCache::GammaGfCache(int k, int order) : k_(k), order_(order) {
  if (k < 1) throw std::invalid_argument("k must be at least 1, got " + std::to_string(k));
  if (order < 0) throw std::invalid_argument("truncation order must be nonnegative");

  const auto classes = partitions_of(k);
  const std::size_t count = classes.size();
  std::map<Partition, std::size_t> index;
  for (std::size_t c = 0; c < count; ++c) index.emplace(classes[c], c);

  // power_of[c][m] = index of classes[c]^m, for 1 <= m <= order.
  std::vector<std::vector<std::size_t>> power_of(count, std::vector<std::size_t>(static_cast<std::size_t>(order) + 1));
  for (std::size_t c = 0; c < count; ++c) {
    for (int m = 1; m <= order; ++m) {
      power_of[c][static_cast<std::size_t>(m)] = index.at(partition_power(classes[c], m));
    }
  }

  // Q_mu(y) = prod_{i in mu} C_Y(mu^i)(y^i); the n-th summand for lambda is
  // x^n/n * Q_{lambda^n}(x^n). prefix[mu][j] holds the product of the first
  // j+1 factors, grown one degree per step.
  std::vector<std::vector<Factor>> factors(count);
  for (std::size_t c = 0; c < count; ++c) {
    for (int i : classes[c].parts()) {
      factors[c].push_back({index.at(partition_power(classes[c], i)), i});
    }
  }

  const auto slots = static_cast<std::size_t>(order) + 1;
  std::vector<Coefficients> series(count, Coefficients(slots));
  for (auto& s : series) s[0] = 1;
  std::vector<std::vector<Coefficients>> prefix(count);
  for (std::size_t c = 0; c < count; ++c) prefix[c].assign(factors[c].size(), Coefficients(slots));
  std::vector<Coefficients> weighted(count, Coefficients(slots));  // d * [x^d] of the exp argument

  for (int d = 1; d <= order; ++d) {
    const int m = d - 1;
    const auto mu_slot = static_cast<std::size_t>(m);
    for (std::size_t c = 0; c < count; ++c) {
      for (std::size_t j = 0; j < factors[c].size(); ++j) {
        const auto& f = factors[c][j];
        const auto& src = series[f.source];
        mpz_class acc = 0;
        if (j == 0) {
          if (m % f.stretch == 0) acc = src[static_cast<std::size_t>(m / f.stretch)];
        } else {
          const auto& prev = prefix[c][j - 1];
          for (int t = 0; t * f.stretch <= m; ++t) {
            acc += src[static_cast<std::size_t>(t)] * prev[static_cast<std::size_t>(m - t * f.stretch)];
          }
        }
        prefix[c][j][mu_slot] = std::move(acc);
      }
    }

    for (std::size_t c = 0; c < count; ++c) {
      mpz_class h = 0;
      for (int n = 1; n <= d; ++n) {
        if (d % n != 0) continue;
        const auto& q = prefix[power_of[c][static_cast<std::size_t>(n)]].back();
        h += (d / n) * q[static_cast<std::size_t>(d / n - 1)];
      }
      weighted[c][static_cast<std::size_t>(d)] = std::move(h);
    }

    for (std::size_t c = 0; c < count; ++c) {
      mpz_class acc = 0;
      for (int t = 1; t <= d; ++t) {
        acc += weighted[c][static_cast<std::size_t>(t)] * series[c][static_cast<std::size_t>(d - t)];
      }
      if (!mpz_divisible_ui_p(acc.get_mpz_t(), static_cast<unsigned long>(d))) {
        throw InvariantViolation("C_Y({" + classes[c].to_string() + "}) coefficient " + std::to_string(d) +
                                 " is not an integer");
      }
      mpz_divexact_ui(acc.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(d));
      if (sgn(acc) < 0) {
        throw InvariantViolation("C_Y({" + classes[c].to_string() + "}) coefficient " + std::to_string(d) +
                                 " is negative");
      }
      series[c][static_cast<std::size_t>(d)] = std::move(acc);
    }
  }

  for (std::size_t c = 0; c < count; ++c) {
    table_y_.emplace(classes[c], Series::from_integers(order, series[c]));
  }
}

const Series& GammaGfCache::cty(const Partition& lambda) const {
  auto it = table_y_.find(lambda);
  if (it == table_y_.end()) {
    throw std::invalid_argument("{" + lambda.to_string() + "} is not a partition of k = " + std::to_string(k_));
  }
  return it->second;
}

std::map<Partition, Series> compute_cty_all(int k, int order) { return GammaGfCache(k, order).cty_table(); }

Series compute_ctxy(const GammaGfCache& cache, const Partition& lambda, int order) {
  if (order != cache.order()) {
    throw std::invalid_argument("truncation order " + std::to_string(order) + " does not match cache order " +
                                std::to_string(cache.order()));
  }
  return compute_ctxy(cache, lambda);
}

Series compute_ctxy(const GammaGfCache& cache, const Partition& lambda) {
  if (lambda.weight() != cache.k() + 1) {
    throw std::invalid_argument("{" + lambda.to_string() + "} is not a partition of k+1 = " +
                                std::to_string(cache.k() + 1));
  }
  const int order = cache.order();
  Series product = Series::one(order);
  for (int i : lambda.parts()) {
    // lambda^i fixes the parent position, so it always has a part 1.
    const Partition power = partition_power(lambda, i);
    if (!power.contains(1)) {
      throw InvariantViolation("{" + power.to_string() + "} has no fixed point");
    }
    product = mul(product, substitute_power(cache.cty(remove_one_part(power, 1)), i));
  }
  Series result = shift(product, 1);
  if (order >= 1 && (sgn(result[0]) != 0 || result[1] != 1)) {
    throw InvariantViolation("C_XY({" + lambda.to_string() + "}) does not start with x");
  }
  return result;
}

Series unlabeled_ktree_series(const GammaGfCache& cache) {
  const int k = cache.k();
  const int order = cache.order();
  Series total(order);
  for (const auto& lambda : partitions_of(k + 1)) {
    total = add(total, scale(compute_ctxy(cache, lambda), mpq_class(1, z_normalizer(lambda))));
  }
  for (const auto& lambda : partitions_of(k)) {
    const mpq_class weight(1, z_normalizer(lambda));
    total = add(total, scale(cache.cty(lambda), weight));
    total = subtract(total, scale(compute_ctxy(cache, add_one_part(lambda, 1)), weight));
  }
  return total;
}

std::vector<mpz_class> unlabeled_ktree_gf(const GammaGfCache& cache) {
  auto counts = assert_nonneg_integers(unlabeled_ktree_series(cache));
  if (counts.front() != 1) {
    throw InvariantViolation("constant term of the k-tree series is " + counts.front().get_str() + ", expected 1");
  }
  return counts;
}

std::vector<mpz_class> unlabeled_ktree_gf(int k, int order) { return unlabeled_ktree_gf(GammaGfCache(k, order)); }

}  // namespace ktrees
