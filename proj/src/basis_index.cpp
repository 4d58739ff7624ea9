#include "yoklab/basis_index.hpp"

#include <limits>

#include "yoklab/error.hpp"

namespace yoklab {

BasisIndex::BasisIndex(int r, int n) : r_(r), n_(n) {
  if (r < 1 || n < 1) throw UsageError("basis: r and n must be at least 1");
  if (n > 7) throw UsageError("basis: n > 7 is not supported");
  std::size_t labels = 1;
  for (int i = 0; i < n; ++i) {
    labels *= static_cast<std::size_t>(r);
    if (labels > (1u << 20)) throw UsageError("basis: r^n too large");
  }
  num_labels_ = labels;

  perms_ = permutations_by_length(n);
  if (perms_.size() * num_labels_ > std::numeric_limits<Index>::max())
    throw UsageError("basis: dimension too large");
  for (std::size_t k = 0; k < perms_.size(); ++k) {
    perm_lookup_[perms_[k].images()] = k;
    lengths_.push_back(perms_[k].length());
    words_.push_back(reduced_word(perms_[k]));
  }
  const std::size_t np = perms_.size();
  right_.resize(np * slots());
  left_.resize(np * slots());
  for (std::size_t k = 0; k < np; ++k) {
    for (int i = 1; i < n; ++i) {
      Permutation s = Permutation::simple(n, i);
      right_[k * slots() + (i - 1)] = perm_index(perms_[k] * s);
      left_[k * slots() + (i - 1)] = perm_index(s * perms_[k]);
    }
    inverse_.push_back(perm_index(perms_[k].inverse()));
  }
  compose_.resize(np * np);
  for (std::size_t u = 0; u < np; ++u)
    for (std::size_t v = 0; v < np; ++v) compose_[u * np + v] = perm_index(perms_[u] * perms_[v]);

  digits_.resize(num_labels_ * n);
  for (std::size_t l = 0; l < num_labels_; ++l) {
    std::size_t rest = l;
    for (int i = n - 1; i >= 0; --i) {
      digits_[l * n + i] = static_cast<int>(rest % r);
      rest /= r;
    }
  }
  act_.resize(np * num_labels_);
  for (std::size_t w = 0; w < np; ++w)
    for (std::size_t l = 0; l < num_labels_; ++l)
      act_[w * num_labels_ + l] = color_index(act_on_colors(perms_[w], colors(l)));
}

std::size_t BasisIndex::perm_index(const Permutation& w) const {
  auto it = perm_lookup_.find(w.images());
  if (it == perm_lookup_.end()) throw UsageError("basis: permutation " + to_string(w) + " has the wrong size");
  return it->second;
}

ColorVector BasisIndex::colors(std::size_t label) const {
  ColorVector c(n_);
  for (int i = 0; i < n_; ++i) c[i] = digit(label, i) + 1;
  return c;
}

std::vector<int> BasisIndex::exponents(std::size_t label) const {
  std::vector<int> a(n_);
  for (int i = 0; i < n_; ++i) a[i] = digit(label, i);
  return a;
}

std::size_t BasisIndex::color_index(const ColorVector& c) const {
  if (static_cast<int>(c.size()) != n_) throw UsageError("basis: color vector has wrong length");
  std::size_t idx = 0;
  for (int ci : c) {
    if (ci < 1 || ci > r_) throw UsageError("basis: color " + std::to_string(ci) + " outside 1..r");
    idx = idx * r_ + static_cast<std::size_t>(ci - 1);
  }
  return idx;
}

std::size_t BasisIndex::exponent_index(const std::vector<int>& a) const {
  if (static_cast<int>(a.size()) != n_) throw UsageError("basis: exponent vector has wrong length");
  std::size_t idx = 0;
  for (int ai : a) {
    if (ai < 0 || ai >= r_) throw UsageError("basis: exponent " + std::to_string(ai) + " outside 0..r-1");
    idx = idx * r_ + static_cast<std::size_t>(ai);
  }
  return idx;
}

std::size_t BasisIndex::add_labels(std::size_t a, std::size_t b) const {
  std::size_t idx = 0;
  for (int i = 0; i < n_; ++i) idx = idx * r_ + static_cast<std::size_t>((digit(a, i) + digit(b, i)) % r_);
  return idx;
}

std::size_t BasisIndex::negate_label(std::size_t a) const {
  std::size_t idx = 0;
  for (int i = 0; i < n_; ++i) idx = idx * r_ + static_cast<std::size_t>((r_ - digit(a, i)) % r_);
  return idx;
}

long BasisIndex::pairing(std::size_t exponent_label, std::size_t color_label) const {
  long s = 0;
  for (int i = 0; i < n_; ++i) s += static_cast<long>(digit(exponent_label, i)) * (digit(color_label, i) + 1);
  return s % r_;
}

}  // namespace yoklab
