#pragma once

// Indexing shared by every algebra in the library. A basis key is a pair
// (w, label) with w in S_n and label an n-tuple of digits 0..r-1, read either
// as a color vector (c_i = digit + 1) or as an exponent vector (a_i = digit).
//
// key = perm_index * r^n + label_index, where permutations are ranked by
// (length, one-line notation) and labels lexicographically. Integer order on
// keys is therefore the cell order (l(w), w, label).

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "yoklab/symgroup.hpp"

namespace yoklab {

using Index = std::uint32_t;

class BasisIndex {
 public:
  BasisIndex(int r, int n);

  int r() const { return r_; }
  int n() const { return n_; }
  std::size_t num_perms() const { return perms_.size(); }
  std::size_t num_labels() const { return num_labels_; }
  std::size_t dimension() const { return perms_.size() * num_labels_; }

  const Permutation& perm(std::size_t w) const { return perms_[w]; }
  std::size_t perm_index(const Permutation& w) const;
  std::size_t identity_index() const { return 0; }
  std::size_t longest_index() const { return perms_.size() - 1; }
  int length(std::size_t w) const { return lengths_[w]; }
  const std::vector<int>& word(std::size_t w) const { return words_[w]; }
  // w s_i and s_i w.
  std::size_t right_simple(std::size_t w, int i) const { return right_[w * slots() + (i - 1)]; }
  std::size_t left_simple(std::size_t w, int i) const { return left_[w * slots() + (i - 1)]; }
  std::size_t compose(std::size_t u, std::size_t v) const { return compose_[u * perms_.size() + v]; }
  std::size_t inverse(std::size_t w) const { return inverse_[w]; }

  // Digit i (0-based position) of a label.
  int digit(std::size_t label, int i) const { return digits_[label * n_ + i]; }
  ColorVector colors(std::size_t label) const;
  std::vector<int> exponents(std::size_t label) const;
  std::size_t color_index(const ColorVector& c) const;
  std::size_t exponent_index(const std::vector<int>& a) const;
  // Label of w(chi) for the permutation action on positions.
  std::size_t act(std::size_t w, std::size_t label) const { return act_[w * num_labels_ + label]; }
  // Digit-wise sum mod r.
  std::size_t add_labels(std::size_t a, std::size_t b) const;
  // Digit-wise negation mod r.
  std::size_t negate_label(std::size_t a) const;
  // Exponent of zeta in chi_c(t^a), i.e. Sum_i a_i c_i mod r.
  long pairing(std::size_t exponent_label, std::size_t color_label) const;

  Index key(std::size_t w, std::size_t label) const {
    return static_cast<Index>(w * num_labels_ + label);
  }
  std::size_t perm_of(Index key) const { return key / num_labels_; }
  std::size_t label_of(Index key) const { return key % num_labels_; }

 private:
  int slots() const { return n_ > 1 ? n_ - 1 : 1; }

  int r_;
  int n_;
  std::size_t num_labels_;
  std::vector<Permutation> perms_;
  std::map<std::vector<int>, std::size_t> perm_lookup_;
  std::vector<int> lengths_;
  std::vector<std::vector<int>> words_;
  std::vector<std::size_t> right_;
  std::vector<std::size_t> left_;
  std::vector<std::size_t> compose_;
  std::vector<std::size_t> inverse_;
  std::vector<int> digits_;
  std::vector<std::size_t> act_;
};

}  // namespace yoklab
