#include "ktrees/cycle_index.hpp"

#include <algorithm>
#include <stdexcept>

#include "ktrees/errors.hpp"

namespace ktrees {

namespace {

Partition merged(const Partition& a, const Partition& b) {
  std::vector<int> parts;
  parts.reserve(a.length() + b.length());
  std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(), b.parts().end(), std::back_inserter(parts),
             std::greater<>());
  return Partition(std::move(parts));
}

Partition stretched(const Partition& a, int m) {
  std::vector<int> parts(a.parts().begin(), a.parts().end());
  for (int& p : parts) p *= m;
  return Partition(std::move(parts));
}

void require_same_bound(const CycleIndex& a, const CycleIndex& b) {
  if (a.max_x_weight() != b.max_x_weight()) {
    throw std::invalid_argument("cycle indices truncated at different x-weights");
  }
}

mpz_class factorial(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

void check_bounds(int k, int max_x_weight, const CycleIndexLimits& limits) {
  if (k < 1) throw std::invalid_argument("k must be at least 1, got " + std::to_string(k));
  if (max_x_weight < 0) throw std::invalid_argument("x-weight bound must be nonnegative");
  if (k > limits.max_k) {
    throw BoundsExceeded("cycle-index engine: k = " + std::to_string(k) + " exceeds bound " +
                         std::to_string(limits.max_k));
  }
  if (max_x_weight > limits.max_degree) {
    throw BoundsExceeded("cycle-index engine: degree " + std::to_string(max_x_weight) + " exceeds bound " +
                         std::to_string(limits.max_degree));
  }
}

// Every Y-rooted or edge-rooted coding tree with n hedra has kn+1 fronts.
void check_front_count(const CycleIndex& a, int k, const std::string& what) {
  for (const auto& [m, q] : a.terms()) {
    if (m.y.weight() != k * m.x.weight() + 1) {
      throw InvariantViolation(what + ": term x{" + m.x.to_string() + "} y{" + m.y.to_string() +
                               "} breaks the kn+1 front count");
    }
  }
}

}  // namespace

CycleIndex::CycleIndex(int max_x_weight) : max_x_weight_(max_x_weight) {
  if (max_x_weight < 0) throw std::invalid_argument("CycleIndex: x-weight bound must be nonnegative");
}

CycleIndex CycleIndex::unit(int max_x_weight) { return term(max_x_weight, Partition(), Partition()); }

CycleIndex CycleIndex::term(int max_x_weight, Partition x, Partition y, const mpq_class& coefficient) {
  CycleIndex c(max_x_weight);
  c.add_term({std::move(x), std::move(y)}, coefficient);
  return c;
}

mpq_class CycleIndex::coefficient(const Partition& x, const Partition& y) const {
  auto it = terms_.find({x, y});
  return it == terms_.end() ? mpq_class(0) : it->second;
}

void CycleIndex::add_term(const Monomial& m, const mpq_class& coefficient) {
  if (m.x.weight() > max_x_weight_ || sgn(coefficient) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

CycleIndex CycleIndex::truncated(int max_x_weight) const {
  CycleIndex out(max_x_weight);
  for (const auto& [m, q] : terms_) {
    if (m.x.weight() <= max_x_weight) out.terms_.emplace_hint(out.terms_.end(), m, q);
  }
  return out;
}

CycleIndex CycleIndex::component(int w) const {
  CycleIndex out(max_x_weight_);
  for (const auto& [m, q] : terms_) {
    if (m.x.weight() == w) out.terms_.emplace_hint(out.terms_.end(), m, q);
  }
  return out;
}

std::string CycleIndex::dump() const {
  std::string out;
  for (const auto& [m, q] : terms_) {
    out += "x{" + m.x.to_string() + "} y{" + m.y.to_string() + "} " + q.get_num().get_str() + "/" +
           q.get_den().get_str() + "\n";
  }
  return out;
}

CycleIndex ci_add(const CycleIndex& a, const CycleIndex& b) {
  require_same_bound(a, b);
  CycleIndex out = a;
  for (const auto& [m, q] : b.terms()) out.add_term(m, q);
  return out;
}

CycleIndex ci_subtract(const CycleIndex& a, const CycleIndex& b) {
  require_same_bound(a, b);
  CycleIndex out = a;
  for (const auto& [m, q] : b.terms()) out.add_term(m, -q);
  return out;
}

CycleIndex ci_mul(const CycleIndex& a, const CycleIndex& b) {
  require_same_bound(a, b);
  const int bound = a.max_x_weight();
  CycleIndex out(bound);
  for (const auto& [ma, qa] : a.terms()) {
    const int room = bound - ma.x.weight();
    for (const auto& [mb, qb] : b.terms()) {
      // Terms are ordered by x-weight first.
      if (mb.x.weight() > room) break;
      out.add_term({merged(ma.x, mb.x), merged(ma.y, mb.y)}, qa * qb);
    }
  }
  return out;
}

CycleIndex ci_scale(const CycleIndex& a, const mpq_class& q) {
  CycleIndex out(a.max_x_weight());
  for (const auto& [m, c] : a.terms()) out.add_term(m, c * q);
  return out;
}

CycleIndex stretch(const CycleIndex& a, int m) {
  if (m < 1) throw std::invalid_argument("stretch: m must be positive");
  CycleIndex out(a.max_x_weight());
  for (const auto& [mono, q] : a.terms()) {
    if (mono.x.weight() * m > a.max_x_weight()) break;
    out.add_term({stretched(mono.x, m), stretched(mono.y, m)}, q);
  }
  return out;
}

CycleIndex set_plethysm_exp(const std::function<CycleIndex(int)>& family, int max_x_weight) {
  // G = sum_m stretch(g_m, m)/m, graded by x-weight.
  CycleIndex argument(max_x_weight);
  for (int m = 1; m <= max_x_weight; ++m) {
    const CycleIndex g = family(m).truncated(max_x_weight);
    for (const auto& [mono, q] : g.terms()) {
      if (mono.x.weight() == 0) throw std::domain_error("set_plethysm_exp: argument has x-weight-zero terms");
    }
    argument = ci_add(argument, ci_scale(stretch(g, m), mpq_class(1, m)));
  }

  // exp by the x-weight derivation: d F_d = sum_{m=1..d} m G_m F_{d-m}.
  std::vector<CycleIndex> grade_g;
  std::vector<CycleIndex> grade_f;
  for (int d = 0; d <= max_x_weight; ++d) grade_g.push_back(argument.component(d));
  grade_f.push_back(CycleIndex::unit(max_x_weight));
  for (int d = 1; d <= max_x_weight; ++d) {
    CycleIndex acc(max_x_weight);
    for (int m = 1; m <= d; ++m) {
      if (grade_g[static_cast<std::size_t>(m)].is_zero()) continue;
      acc = ci_add(acc, ci_scale(ci_mul(grade_g[static_cast<std::size_t>(m)], grade_f[static_cast<std::size_t>(d - m)]),
                                 mpq_class(m)));
    }
    grade_f.push_back(ci_scale(acc, mpq_class(1, d)));
  }
  CycleIndex result(max_x_weight);
  for (const auto& f : grade_f) result = ci_add(result, f);
  return result;
}

CycleIndex set_plethysm_exp(const CycleIndex& g) {
  if (!g.component(0).is_zero()) throw std::domain_error("set_plethysm_exp: argument has x-weight-zero terms");
  return set_plethysm_exp([&g](int) { return g; }, g.max_x_weight());
}

Series specialize_to_unlabeled(const CycleIndex& a) {
  std::vector<mpq_class> c(static_cast<std::size_t>(a.max_x_weight()) + 1);
  for (const auto& [m, q] : a.terms()) c[static_cast<std::size_t>(m.x.weight())] += q;
  return Series(a.max_x_weight(), std::move(c));
}

mpq_class labeled_count(const CycleIndex& a, int hedra, int fronts) {
  const Partition x(std::vector<int>(static_cast<std::size_t>(hedra), 1));
  const Partition y(std::vector<int>(static_cast<std::size_t>(fronts), 1));
  return a.coefficient(x, y) * factorial(hedra) * factorial(fronts);
}

std::vector<mpq_class> hedron_labeled_counts(const CycleIndex& a) {
  std::vector<mpq_class> out(static_cast<std::size_t>(a.max_x_weight()) + 1);
  for (const auto& [m, q] : a.terms()) {
    if (static_cast<int>(m.x.length()) == m.x.weight()) out[static_cast<std::size_t>(m.x.weight())] += q;
  }
  for (std::size_t n = 0; n < out.size(); ++n) out[n] *= factorial(static_cast<int>(n));
  return out;
}

GammaCycleIndexSystem::GammaCycleIndexSystem(int k, int max_x_weight, CycleIndexLimits limits)
    : k_(k), max_x_weight_(max_x_weight) {
  check_bounds(k, max_x_weight, limits);
  const auto classes = partitions_of(k);
  const CycleIndex root_front = CycleIndex::term(0, Partition(), Partition({1}));
  for (const auto& lambda : classes) table_y_.emplace(lambda, root_front);

  for (int t = 1; t <= max_x_weight; ++t) {
    // Z_F(mu) at bound t only reads Z_Y terms of x-weight <= t-1, all final.
    std::map<Partition, CycleIndex> forests;
    for (const auto& mu : classes) {
      CycleIndex f = CycleIndex::term(t, Partition({1}), Partition());
      for (int i : mu.parts()) f = ci_mul(f, stretch(table_y_.at(partition_power(mu, i)).truncated(t), i));
      forests.emplace(mu, std::move(f));
    }
    std::map<Partition, CycleIndex> next;
    for (const auto& lambda : classes) {
      auto family = [&](int m) { return forests.at(partition_power(lambda, m)); };
      next.emplace(lambda, ci_mul(CycleIndex::term(t, Partition(), Partition({1})), set_plethysm_exp(family, t)));
    }
    table_y_ = std::move(next);
  }

  for (auto& [lambda, z] : table_y_) {
    z = z.truncated(max_x_weight);
    check_front_count(z, k, "Z_Y({" + lambda.to_string() + "})");
  }
}

const CycleIndex& GammaCycleIndexSystem::cty(const Partition& lambda) const {
  auto it = table_y_.find(lambda);
  if (it == table_y_.end()) {
    throw std::invalid_argument("{" + lambda.to_string() + "} is not a partition of k = " + std::to_string(k_));
  }
  return it->second;
}

CycleIndex GammaCycleIndexSystem::ctxy(const Partition& lambda, std::vector<ArgumentVisit>* trace) const {
  if (lambda.weight() != k_ + 1) {
    throw std::invalid_argument("{" + lambda.to_string() + "} is not a partition of k+1 = " + std::to_string(k_ + 1));
  }
  CycleIndex product = CycleIndex::term(max_x_weight_, Partition({1}), Partition());
  for (int i : lambda.parts()) {
    const Partition power = partition_power(lambda, i);
    if (!power.contains(1)) throw InvariantViolation("{" + power.to_string() + "} has no fixed point");
    Partition argument = remove_one_part(power, 1);
    product = ci_mul(product, stretch(cty(argument), i));
    if (trace) trace->push_back({lambda, i, std::move(argument)});
  }
  check_front_count(product, k_, "Z_XY({" + lambda.to_string() + "})");
  return product;
}

CycleIndex GammaCycleIndexSystem::ktree() const {
  CycleIndex total(max_x_weight_);
  for (const auto& lambda : partitions_of(k_ + 1)) {
    total = ci_add(total, ci_scale(ctxy(lambda), mpq_class(1, z_normalizer(lambda))));
  }
  for (const auto& lambda : partitions_of(k_)) {
    const mpq_class weight(1, z_normalizer(lambda));
    total = ci_add(total, ci_scale(ci_subtract(cty(lambda), ctxy(add_one_part(lambda, 1))), weight));
  }
  return total;
}

CycleIndex gamma_ci_cty(int k, const Partition& lambda, int max_x_weight, CycleIndexLimits limits) {
  return GammaCycleIndexSystem(k, max_x_weight, limits).cty(lambda);
}

CycleIndex gamma_ci_ctxy(int k, const Partition& lambda, int max_x_weight, CycleIndexLimits limits) {
  return GammaCycleIndexSystem(k, max_x_weight, limits).ctxy(lambda);
}

CycleIndex ktree_cycle_index(int k, int max_x_weight, CycleIndexLimits limits) {
  return GammaCycleIndexSystem(k, max_x_weight, limits).ktree();
}

}  // namespace ktrees
