#pragma once

#include <compare>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ktrees/partitions.hpp"
#include "ktrees/series.hpp"

namespace ktrees {

// The monomial p_x[x] p_y[y] of a two-sort cycle index: x records the cycle
// type on hedron (X) labels, y on front (Y) labels. Ordered by x-weight, then
// x, then y.
struct Monomial {
  Partition x;
  Partition y;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.x.weight() <=> b.x.weight(); c != 0) return c;
    if (auto c = a.x <=> b.x; c != 0) return c;
    return a.y <=> b.y;
  }
};

// Sparse two-sort cycle index truncated at x-weight D: terms with |x| > D are
// dropped on insertion, zero coefficients are never stored.
class CycleIndex {
 public:
  explicit CycleIndex(int max_x_weight);

  static CycleIndex unit(int max_x_weight);
  // The single monomial coefficient * p_x[x] p_y[y].
  static CycleIndex term(int max_x_weight, Partition x, Partition y, const mpq_class& coefficient = 1);

  int max_x_weight() const { return max_x_weight_; }
  const std::map<Monomial, mpq_class>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  mpq_class coefficient(const Partition& x, const Partition& y) const;
  void add_term(const Monomial& m, const mpq_class& coefficient);

  CycleIndex truncated(int max_x_weight) const;
  // Terms of x-weight exactly w.
  CycleIndex component(int w) const;

  // One line per term, sorted by (x-weight, x, y): "x{2,1} y{5,1,1} 1/2".
  std::string dump() const;

  friend bool operator==(const CycleIndex& a, const CycleIndex& b) {
    return a.max_x_weight_ == b.max_x_weight_ && a.terms_ == b.terms_;
  }

 private:
  int max_x_weight_;
  std::map<Monomial, mpq_class> terms_;
};

// Ring operations; both operands must share the same truncation bound.
CycleIndex ci_add(const CycleIndex& a, const CycleIndex& b);
CycleIndex ci_subtract(const CycleIndex& a, const CycleIndex& b);
CycleIndex ci_mul(const CycleIndex& a, const CycleIndex& b);
CycleIndex ci_scale(const CycleIndex& a, const mpq_class& q);

// p_j -> p_{jm} in both sorts.
CycleIndex stretch(const CycleIndex& a, int m);

// Sets of structures whose orientation permutation has structure index g_m
// at its m-th power: exp( sum_{m>=1} stretch(g_m, m) / m ). `family(m)` must
// return g_m; its x-weight-zero part must vanish (std::domain_error
// otherwise).
CycleIndex set_plethysm_exp(const std::function<CycleIndex(int)>& family, int max_x_weight);

// Trivial-action case, g_m = g for all m: the composition Z_E o g.
CycleIndex set_plethysm_exp(const CycleIndex& g);

// p_i[x] -> x^i, p_i[y] -> 1.
Series specialize_to_unlabeled(const CycleIndex& a);

// |x|! |y|! times the coefficient of p_1[x]^{nx} p_1[y]^{ny}.
mpq_class labeled_count(const CycleIndex& a, int hedra, int fronts);

// Hedron-labeled, front-unlabeled counts: n! * sum over y of the
// coefficient of p_1[x]^n p_y[y], for n = 0..D.
std::vector<mpq_class> hedron_labeled_counts(const CycleIndex& a);

struct CycleIndexLimits {
  int max_k = 3;
  int max_degree = 8;
};

// One visited argument of a C_XY product: the factor for a cycle of length
// `cycle_length` of a permutation of type `lambda` uses C_Y(argument).
struct ArgumentVisit {
  Partition lambda;
  int cycle_length;
  Partition argument;
};

// Class-indexed Gamma-cycle indices of Y-rooted coding trees for one k,
// truncated at x-weight D:
//
//   Z_Y(lambda) = p_1[y] * exp( sum_m stretch(Z_F(lambda^m), m) / m )
//   Z_F(mu)     = p_1[x] * prod_{i in mu} stretch(Z_Y(mu^i), i)
//
// Each round raises the truncation by one, so round t fixes the x-weight-t
// terms of every class at once. Throws BoundsExceeded outside `limits`.
class GammaCycleIndexSystem {
 public:
  GammaCycleIndexSystem(int k, int max_x_weight, CycleIndexLimits limits = {});

  int k() const { return k_; }
  int max_x_weight() const { return max_x_weight_; }

  const CycleIndex& cty(const Partition& lambda) const;

  // p_1[x] * prod_{i in lambda} stretch(Z_Y(lambda^i - {1}), i) for lambda |- k+1.
  CycleIndex ctxy(const Partition& lambda, std::vector<ArgumentVisit>* trace = nullptr) const;

  // sum_{l |- k+1} Z_XY(l)/z_l + sum_{l |- k} (Z_Y(l) - Z_XY(l + {1}))/z_l.
  CycleIndex ktree() const;

 private:
  int k_;
  int max_x_weight_;
  std::map<Partition, CycleIndex> table_y_;
};

CycleIndex gamma_ci_cty(int k, const Partition& lambda, int max_x_weight, CycleIndexLimits limits = {});
CycleIndex gamma_ci_ctxy(int k, const Partition& lambda, int max_x_weight, CycleIndexLimits limits = {});
CycleIndex ktree_cycle_index(int k, int max_x_weight, CycleIndexLimits limits = {});

}  // namespace ktrees
