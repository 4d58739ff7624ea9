#pragma once

// Symmetric-group combinatorics in one-line notation: w(i) = images[i-1],
// values 1..n. Composition is (u*v)(i) = u(v(i)).

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace yoklab {

// c = (c_1, ..., c_n) with entries in {1..r}; also used for exponent tuples.
using ColorVector = std::vector<int>;

class Permutation {
 public:
  Permutation() = default;
  // Throws UsageError unless `images` is a bijection of {1..n}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  // The adjacent transposition s_i = (i, i+1), 1 <= i < n.
  static Permutation simple(int n, int i);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i - 1]; }
  const std::vector<int>& images() const { return images_; }

  // Number of inversions.
  int length() const;
  bool is_identity() const;
  // l(w s_i) < l(w)
  bool has_right_descent(int i) const { return images_[i - 1] > images_[i]; }
  // l(s_i w) < l(w)
  bool has_left_descent(int i) const;

  Permutation inverse() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

Permutation compose(const Permutation& u, const Permutation& v);
inline Permutation operator*(const Permutation& u, const Permutation& v) { return compose(u, v); }

// Leftmost-descent rule: strip s_i on the right for the smallest i with
// w(i) > w(i+1), until the identity is reached.
std::vector<int> reduced_word(const Permutation& w);
// s_{i_1} * ... * s_{i_k}; the word need not be reduced.
Permutation from_word(int n, std::span<const int> word);

Permutation longest_element(int n);

// All of S_n ordered by (length, one-line notation lexicographically).
std::vector<Permutation> permutations_by_length(int n);

bool length_lex_less(const Permutation& a, const Permutation& b);

class Composition {
 public:
  Composition() = default;
  // Throws UsageError on an empty list or a non-positive part.
  explicit Composition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int total() const;
  // Proper partial sums {j_1, j_1 + j_2, ...}, a subset of [1, total - 1].
  std::vector<int> descent_set() const;

  static Composition from_descent_set(int total, std::span<const int> descents);

  auto operator<=>(const Composition&) const = default;

 private:
  std::vector<int> parts_;
};

// All compositions of `total`, ordered by their descent sets read as
// bitmasks (bit k-1 set iff k is a descent).
std::vector<Composition> compositions(int total);

Composition concatenate(std::span<const Composition> blocks);

// Longest element of the Young subgroup W_J: reverses each block of J.
Permutation young_longest(const Composition& j);

// w(chi)(t_i) = chi(t_{w^{-1}(i)}), i.e. result[i] = c[w^{-1}(i)].
ColorVector act_on_colors(const Permutation& w, const ColorVector& c);

std::string to_string(const Permutation& w);

}  // namespace yoklab
