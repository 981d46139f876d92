#include "ktrees/partitions.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace ktrees {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 1) throw std::invalid_argument("partition parts must be positive, got " + std::to_string(p));
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  if (trim(text).empty()) return Partition();
  while (true) {
    auto comma = text.find(',');
    auto token = trim(text.substr(0, comma));
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw std::invalid_argument("malformed partition '" + std::string(text) + "'");
    }
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return Partition(std::move(parts));
}

int Partition::multiplicity(int part) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

namespace {

void generate(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    generate(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: n must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> prefix;
  generate(n, n, prefix, out);
  return out;
}

mpz_class z_normalizer(const Partition& lambda) {
  mpz_class z = 1;
  auto parts = lambda.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    const auto m = static_cast<unsigned long>(j - i);
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), m);
    mpz_class power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(parts[i]), m);
    z *= power * fact;
    i = j;
  }
  return z;
}

Partition partition_power(const Partition& lambda, int i) {
  if (i < 1) throw std::invalid_argument("partition_power: exponent must be positive");
  std::vector<int> parts;
  parts.reserve(lambda.length());
  for (int p : lambda.parts()) {
    const int g = std::gcd(p, i);
    parts.insert(parts.end(), static_cast<std::size_t>(g), p / g);
  }
  return Partition(std::move(parts));
}

Partition remove_one_part(const Partition& lambda, int part) {
  std::vector<int> parts(lambda.parts().begin(), lambda.parts().end());
  auto it = std::find(parts.begin(), parts.end(), part);
  if (it == parts.end()) {
    throw std::invalid_argument("remove_one_part: part " + std::to_string(part) + " not in {" +
                                lambda.to_string() + "}");
  }
  parts.erase(it);
  return Partition(std::move(parts));
}

Partition add_one_part(const Partition& lambda, int part) {
  std::vector<int> parts(lambda.parts().begin(), lambda.parts().end());
  parts.push_back(part);
  return Partition(std::move(parts));
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (int v : images_) {
    if (v < 1 || v > size() || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("Permutation: images are not a bijection");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int m) {
  std::vector<int> images(static_cast<std::size_t>(m));
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::power(int exponent) const {
  if (exponent < 0) throw std::invalid_argument("Permutation::power: negative exponent");
  Permutation result = identity(size());
  for (int e = 0; e < exponent; ++e) result = compose(*this, result);
  return result;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size() + 1, false);
  for (int start = 1; start <= size(); ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> cycle;
    for (int a = start; !seen[static_cast<std::size_t>(a)]; a = (*this)(a)) {
      seen[static_cast<std::size_t>(a)] = true;
      cycle.push_back(a);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  if (outer.size() != inner.size()) throw std::invalid_argument("compose: size mismatch");
  std::vector<int> images(static_cast<std::size_t>(inner.size()));
  for (int a = 1; a <= inner.size(); ++a) images[static_cast<std::size_t>(a - 1)] = outer(inner(a));
  return Permutation(std::move(images));
}

std::vector<Permutation> all_permutations(int m) {
  std::vector<int> images(static_cast<std::size_t>(m));
  std::iota(images.begin(), images.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

Partition cycle_type(const Permutation& sigma) {
  std::vector<int> lengths;
  for (const auto& c : sigma.cycles()) lengths.push_back(static_cast<int>(c.size()));
  return Partition(std::move(lengths));
}

Permutation rho(const Permutation& sigma, int i) {
  const int m = sigma.size();
  if (i < 1 || i > m) throw std::invalid_argument("rho: position out of range");
  // Representatives modulo m live in {1..m}; 0 maps to m.
  auto reduce = [m](int v) { return ((v - 1) % m + m) % m + 1; };
  std::vector<int> images(static_cast<std::size_t>(m));
  for (int a = 1; a <= m; ++a) {
    images[static_cast<std::size_t>(a - 1)] = reduce(sigma(reduce(i + a)) - sigma(i));
  }
  return Permutation(std::move(images));
}

}  // namespace ktrees
