#pragma once

#include <array>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace ktrees::oracle {

// Brute-force enumeration of unlabeled k-trees, sharing no code with the
// generating-function engines. Tiny (k, n) only.

inline constexpr int kMaxVertices = 12;
inline constexpr int kMaxK = 3;
inline constexpr int kMaxHedra = 5;

// Simple undirected graph on at most kMaxVertices vertices.
class SmallGraph {
 public:
  explicit SmallGraph(int vertex_count);

  static SmallGraph complete(int vertex_count);

  int vertex_count() const { return vertex_count_; }
  bool adjacent(int u, int v) const { return (rows_[static_cast<std::size_t>(u)] >> v) & 1u; }
  std::uint16_t neighbours(int v) const { return rows_[static_cast<std::size_t>(v)]; }

  void add_edge(int u, int v);
  // Appends a vertex joined to every vertex in `attach`, returning its index.
  int add_vertex(const std::vector<int>& attach);

  friend bool operator==(const SmallGraph&, const SmallGraph&) = default;

 private:
  int vertex_count_;
  std::array<std::uint16_t, kMaxVertices> rows_{};
};

// Vertex count followed by the upper-triangle adjacency bits, packed
// most-significant first, minimized over every vertex relabeling.
using CanonicalForm = std::string;

CanonicalForm canonical_form(const SmallGraph& g);
SmallGraph from_canonical(const CanonicalForm& form);
std::string to_hex(const CanonicalForm& form);

// All k-subsets of vertices that induce complete subgraphs, each sorted, in
// lexicographic order.
std::vector<std::vector<int>> enumerate_kcliques(const SmallGraph& g, int k);

// Isomorphism classes of k-trees with n hedra, grown breadth-first from K_k
// by joining a new vertex to every k-clique of every class of the previous
// level. Throws BoundsExceeded unless 1 <= k <= kMaxK and 0 <= n <= kMaxHedra.
std::set<CanonicalForm> grow_ktrees(int k, int n);

// Class counts for 0..n hedra from a single breadth-first run.
std::vector<mpz_class> brute_counts(int k, int n);
mpz_class brute_count(int k, int n);

}  // namespace ktrees::oracle
