#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

namespace ktrees::testing {

std::vector<mpz_class> partition_counts(int max_n) {
  std::vector<mpz_class> p(static_cast<std::size_t>(max_n) + 1);
  p[0] = 1;
  for (int n = 1; n <= max_n; ++n) {
    mpz_class total = 0;
    for (int j = 1;; ++j) {
      const int g1 = j * (3 * j - 1) / 2;
      const int g2 = j * (3 * j + 1) / 2;
      if (g1 > n) break;
      const int sign = (j % 2 == 1) ? 1 : -1;
      total += sign * p[static_cast<std::size_t>(n - g1)];
      if (g2 <= n) total += sign * p[static_cast<std::size_t>(n - g2)];
    }
    p[static_cast<std::size_t>(n)] = total;
  }
  return p;
}

namespace {

// A rooted tree as nested children; canonical string is "(" + sorted child
// strings + ")".
struct Rooted {
  std::vector<Rooted> children;
};

std::string canonical(const Rooted& t) {
  std::vector<std::string> parts;
  for (const auto& c : t.children) parts.push_back(canonical(c));
  std::sort(parts.begin(), parts.end());
  std::string out = "(";
  for (const auto& p : parts) out += p;
  return out + ")";
}

Rooted parse(const std::string& s, std::size_t& pos) {
  Rooted t;
  ++pos;  // '('
  while (s[pos] == '(') t.children.push_back(parse(s, pos));
  ++pos;  // ')'
  return t;
}

// Every tree obtained by hanging a new leaf below one vertex of t.
void add_leaf_everywhere(Rooted& node, const Rooted& root, std::set<std::string>& out) {
  node.children.push_back(Rooted{});
  out.insert(canonical(root));
  node.children.pop_back();
  for (auto& c : node.children) add_leaf_everywhere(c, root, out);
}

std::vector<int> labels_for(const oracle::SmallGraph& g, int u, int v) {
  std::vector<int> rest;
  for (int w = 0; w < g.vertex_count(); ++w) {
    if (w != u && w != v) rest.push_back(w);
  }
  return rest;
}

// Minimal adjacency encoding over relabelings sending u -> 0 and v -> 1.
std::vector<bool> rooted_code(const oracle::SmallGraph& g, int u, int v) {
  std::vector<int> rest = labels_for(g, u, v);
  std::vector<bool> best;
  bool first = true;
  do {
    std::vector<int> order{u, v};
    order.insert(order.end(), rest.begin(), rest.end());
    std::vector<bool> bits;
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (std::size_t j = i + 1; j < order.size(); ++j) bits.push_back(g.adjacent(order[i], order[j]));
    }
    if (first || bits < best) best = std::move(bits);
    first = false;
  } while (std::next_permutation(rest.begin(), rest.end()));
  return best;
}

// Minimal adjacency encoding over all relabelings.
std::vector<bool> free_code(const oracle::SmallGraph& g) {
  std::vector<int> order(static_cast<std::size_t>(g.vertex_count()));
  std::iota(order.begin(), order.end(), 0);
  std::vector<bool> best;
  bool first = true;
  do {
    std::vector<bool> bits;
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (std::size_t j = i + 1; j < order.size(); ++j) bits.push_back(g.adjacent(order[i], order[j]));
    }
    if (first || bits < best) best = std::move(bits);
    first = false;
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

// One representative of every free tree with `edges` edges, grown leaf by leaf.
std::vector<oracle::SmallGraph> free_trees(int edges) {
  std::map<std::vector<bool>, oracle::SmallGraph> level;
  oracle::SmallGraph edge(2);
  edge.add_edge(0, 1);
  level.emplace(free_code(edge), edge);
  for (int e = 2; e <= edges; ++e) {
    std::map<std::vector<bool>, oracle::SmallGraph> next;
    for (const auto& [code, g] : level) {
      for (int v = 0; v < g.vertex_count(); ++v) {
        oracle::SmallGraph h = g;
        h.add_vertex({v});
        next.emplace(free_code(h), h);
      }
    }
    level = std::move(next);
  }
  std::vector<oracle::SmallGraph> out;
  for (auto& [code, g] : level) out.push_back(std::move(g));
  return out;
}

std::vector<mpz_class> edge_rooted(int max_edges, bool symmetric_only) {
  std::vector<mpz_class> out(static_cast<std::size_t>(max_edges) + 1);
  for (int n = 1; n <= max_edges; ++n) {
    std::set<std::vector<bool>> classes;
    for (const auto& g : free_trees(n)) {
      for (int u = 0; u < g.vertex_count(); ++u) {
        for (int v = 0; v < g.vertex_count(); ++v) {
          if (!g.adjacent(u, v)) continue;
          auto code = rooted_code(g, u, v);
          if (symmetric_only && code != rooted_code(g, v, u)) continue;
          classes.insert(std::move(code));
        }
      }
    }
    out[static_cast<std::size_t>(n)] = static_cast<unsigned long>(classes.size());
  }
  return out;
}

}  // namespace

std::vector<mpz_class> rooted_tree_counts(int max_edges) {
  std::vector<mpz_class> out;
  std::set<std::string> level{"()"};
  out.emplace_back(1);
  for (int e = 1; e <= max_edges; ++e) {
    std::set<std::string> next;
    for (const auto& s : level) {
      std::size_t pos = 0;
      Rooted t = parse(s, pos);
      add_leaf_everywhere(t, t, next);
    }
    level = std::move(next);
    out.emplace_back(static_cast<unsigned long>(level.size()));
  }
  return out;
}

std::vector<mpz_class> directed_edge_rooted_counts(int max_edges) { return edge_rooted(max_edges, false); }

std::vector<mpz_class> reversal_symmetric_edge_rooted_counts(int max_edges) { return edge_rooted(max_edges, true); }

Permutation permutation_of_type(const Partition& lambda) {
  std::vector<int> images(static_cast<std::size_t>(lambda.weight()));
  int start = 1;
  for (int part : lambda.parts()) {
    for (int j = 0; j < part; ++j) {
      images[static_cast<std::size_t>(start + j - 1)] = start + (j + 1) % part;
    }
    start += part;
  }
  return Permutation(std::move(images));
}

oracle::SmallGraph cone(const oracle::SmallGraph& g) {
  oracle::SmallGraph out = g;
  std::vector<int> all(static_cast<std::size_t>(g.vertex_count()));
  std::iota(all.begin(), all.end(), 0);
  out.add_vertex(all);
  return out;
}

mpq_class Random::rational(int magnitude, int max_den) {
  mpq_class q(uniform(-magnitude, magnitude), uniform(1, max_den));
  q.canonicalize();
  return q;
}

Partition Random::partition(int weight) {
  std::vector<int> parts;
  while (weight > 0) {
    const int p = uniform(1, weight);
    parts.push_back(p);
    weight -= p;
  }
  return Partition(std::move(parts));
}

Series Random::series(int order, bool zero_constant) {
  std::vector<mpq_class> c(static_cast<std::size_t>(order) + 1);
  for (int d = 0; d <= order; ++d) {
    if (uniform(0, 3) == 0) continue;
    c[static_cast<std::size_t>(d)] = rational();
  }
  if (zero_constant) c[0] = 0;
  return Series(order, std::move(c));
}

CycleIndex Random::cycle_index(int max_x_weight, int terms, int min_x_weight) {
  CycleIndex c(max_x_weight);
  if (min_x_weight > max_x_weight) return c;
  for (int t = 0; t < terms; ++t) {
    const int xw = uniform(min_x_weight, max_x_weight);
    const int yw = uniform(0, 4);
    c.add_term({partition(xw), partition(yw)}, rational());
  }
  return c;
}

}  // namespace ktrees::testing
