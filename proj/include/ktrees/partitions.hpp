#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace ktrees {

// An integer partition, kept with its parts sorted in descending order.
// Partitions double as cycle types of permutations.
class Partition {
 public:
  Partition() = default;

  // Parts may be given in any order; every part must be positive.
  explicit Partition(std::vector<int> parts);

  // Parses a comma-separated list of positive integers ("2,1,1"). Whitespace
  // around parts is ignored; an empty string is the empty partition.
  static Partition parse(std::string_view text);

  std::span<const int> parts() const { return parts_; }
  int weight() const { return weight_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int multiplicity(int part) const;
  bool contains(int part) const { return multiplicity(part) > 0; }

  // "3,1,1"; the empty partition renders as "".
  std::string to_string() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

// All partitions of n, in reverse-lexicographic order: {n}, {n-1,1}, ...,
// {1,...,1}.
std::vector<Partition> partitions_of(int n);

// Order of the centralizer of a permutation of cycle type lambda, i.e.
// prod_i i^{m_i} m_i!.
mpz_class z_normalizer(const Partition& lambda);

// Cycle type of sigma^i for any sigma of cycle type lambda.
Partition partition_power(const Partition& lambda, int i);

// Throws std::invalid_argument if `part` does not occur in lambda.
Partition remove_one_part(const Partition& lambda, int part);
Partition add_one_part(const Partition& lambda, int part);

// A bijection on {1, ..., m}.
class Permutation {
 public:
  // images[a-1] is the image of a. Throws std::invalid_argument if the images
  // are not a bijection on {1..m}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int m);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int a) const { return images_[static_cast<std::size_t>(a - 1)]; }
  std::span<const int> images() const { return images_; }

  Permutation power(int exponent) const;

  // Disjoint cycles, each listed from its smallest element in the order
  // a, sigma(a), sigma^2(a), ...; cycles sorted by leading element.
  std::vector<std::vector<int>> cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

// (outer * inner)(a) = outer(inner(a)).
Permutation compose(const Permutation& outer, const Permutation& inner);

// All m! permutations of {1..m} in lexicographic order of their image lists.
std::vector<Permutation> all_permutations(int m);

Partition cycle_type(const Permutation& sigma);

// Orientation transport to the child hedron attached at position i:
//   a -> sigma(i + a) - sigma(i),
// with every sum and difference reduced into {1, ..., k+1} (k+1 = size).
Permutation rho(const Permutation& sigma, int i);

}  // namespace ktrees
