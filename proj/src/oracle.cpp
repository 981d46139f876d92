#include "ktrees/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "ktrees/errors.hpp"

namespace ktrees::oracle {

SmallGraph::SmallGraph(int vertex_count) : vertex_count_(vertex_count) {
  if (vertex_count < 0 || vertex_count > kMaxVertices) {
    throw BoundsExceeded("SmallGraph: at most " + std::to_string(kMaxVertices) + " vertices");
  }
}

SmallGraph SmallGraph::complete(int vertex_count) {
  SmallGraph g(vertex_count);
  for (int u = 0; u < vertex_count; ++u) {
    for (int v = u + 1; v < vertex_count; ++v) g.add_edge(u, v);
  }
  return g;
}

void SmallGraph::add_edge(int u, int v) {
  if (u == v || u < 0 || v < 0 || u >= vertex_count_ || v >= vertex_count_) {
    throw std::invalid_argument("SmallGraph::add_edge: bad endpoints");
  }
  rows_[static_cast<std::size_t>(u)] |= static_cast<std::uint16_t>(1u << v);
  rows_[static_cast<std::size_t>(v)] |= static_cast<std::uint16_t>(1u << u);
}

int SmallGraph::add_vertex(const std::vector<int>& attach) {
  if (vertex_count_ == kMaxVertices) throw BoundsExceeded("SmallGraph: vertex limit reached");
  const int v = vertex_count_++;
  for (int u : attach) add_edge(u, v);
  return v;
}

namespace {

// Upper-triangle bits of g under relabeling `order` (new index -> old vertex).
std::vector<bool> encode(const SmallGraph& g, const std::vector<int>& order) {
  std::vector<bool> bits;
  const int n = g.vertex_count();
  bits.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) bits.push_back(g.adjacent(order[static_cast<std::size_t>(i)],
                                                             order[static_cast<std::size_t>(j)]));
  }
  return bits;
}

}  // namespace

CanonicalForm canonical_form(const SmallGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::vector<bool> best = encode(g, order);
  while (std::next_permutation(order.begin(), order.end())) {
    auto candidate = encode(g, order);
    if (candidate < best) best = std::move(candidate);
  }
  CanonicalForm form(1, static_cast<char>(n));
  for (std::size_t i = 0; i < best.size(); i += 8) {
    unsigned char byte = 0;
    for (std::size_t b = 0; b < 8; ++b) {
      byte = static_cast<unsigned char>(byte << 1);
      if (i + b < best.size() && best[i + b]) byte |= 1u;
    }
    form.push_back(static_cast<char>(byte));
  }
  return form;
}

SmallGraph from_canonical(const CanonicalForm& form) {
  if (form.empty()) throw std::invalid_argument("from_canonical: empty form");
  const int n = static_cast<unsigned char>(form[0]);
  SmallGraph g(n);
  std::size_t bit = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++bit) {
      const std::size_t byte = 1 + bit / 8;
      if (byte >= form.size()) throw std::invalid_argument("from_canonical: truncated form");
      if ((static_cast<unsigned char>(form[byte]) >> (7 - bit % 8)) & 1u) g.add_edge(i, j);
    }
  }
  return g;
}

std::string to_hex(const CanonicalForm& form) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  for (unsigned char c : form) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 0xf]);
  }
  return out;
}

std::vector<std::vector<int>> enumerate_kcliques(const SmallGraph& g, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0) return out;
  std::vector<int> current;
  // Extend `current` with vertices >= next adjacent to all chosen so far.
  auto extend = [&](auto&& self, int next, std::uint16_t candidates) -> void {
    if (static_cast<int>(current.size()) == k) {
      out.push_back(current);
      return;
    }
    for (int v = next; v < g.vertex_count(); ++v) {
      if (!((candidates >> v) & 1u)) continue;
      current.push_back(v);
      self(self, v + 1, static_cast<std::uint16_t>(candidates & g.neighbours(v)));
      current.pop_back();
    }
  };
  extend(extend, 0, static_cast<std::uint16_t>((1u << g.vertex_count()) - 1));
  return out;
}

namespace {

void check_oracle_bounds(int k, int n) {
  if (k < 1 || k > kMaxK || n < 0 || n > kMaxHedra) {
    throw BoundsExceeded("oracle: (k, n) = (" + std::to_string(k) + ", " + std::to_string(n) +
                         ") outside 1 <= k <= " + std::to_string(kMaxK) + ", 0 <= n <= " + std::to_string(kMaxHedra));
  }
}

std::set<CanonicalForm> next_level(const std::set<CanonicalForm>& level, int k) {
  std::set<CanonicalForm> next;
  for (const auto& form : level) {
    const SmallGraph g = from_canonical(form);
    for (const auto& front : enumerate_kcliques(g, k)) {
      SmallGraph grown = g;
      grown.add_vertex(front);
      next.insert(canonical_form(grown));
    }
  }
  return next;
}

}  // namespace

std::vector<mpz_class> brute_counts(int k, int n) {
  check_oracle_bounds(k, n);
  std::set<CanonicalForm> level{canonical_form(SmallGraph::complete(k))};
  std::vector<mpz_class> counts{mpz_class(1)};
  for (int h = 1; h <= n; ++h) {
    level = next_level(level, k);
    counts.emplace_back(static_cast<unsigned long>(level.size()));
  }
  return counts;
}

std::set<CanonicalForm> grow_ktrees(int k, int n) {
  check_oracle_bounds(k, n);
  std::set<CanonicalForm> level{canonical_form(SmallGraph::complete(k))};
  for (int h = 1; h <= n; ++h) level = next_level(level, k);
  return level;
}

mpz_class brute_count(int k, int n) { return mpz_class(static_cast<unsigned long>(grow_ktrees(k, n).size())); }

}  // namespace ktrees::oracle
