#include "yoklab/symgroup.hpp"

#include <algorithm>
#include <numeric>

#include "yoklab/error.hpp"

namespace yoklab {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = size();
  std::vector<bool> seen(n + 1, false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[v]) throw UsageError("permutation: images are not a bijection of 1..n");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw UsageError("permutation: negative size");
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 1);
  return Permutation(std::move(im));
}

Permutation Permutation::simple(int n, int i) {
  if (i < 1 || i >= n) throw UsageError("permutation: s_" + std::to_string(i) + " out of range for n = " + std::to_string(n));
  Permutation s = identity(n);
  std::swap(s.images_[i - 1], s.images_[i]);
  return s;
}

int Permutation::length() const {
  int inv = 0;
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (images_[i] > images_[j]) ++inv;
  return inv;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (images_[i] != i + 1) return false;
  return true;
}

bool Permutation::has_left_descent(int i) const {
  // w^{-1}(i) > w^{-1}(i+1)
  int pos_i = 0, pos_next = 0;
  for (int k = 0; k < size(); ++k) {
    if (images_[k] == i) pos_i = k;
    if (images_[k] == i + 1) pos_next = k;
  }
  return pos_i > pos_next;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < size(); ++i) inv[images_[i] - 1] = i + 1;
  Permutation out;
  out.images_ = std::move(inv);
  return out;
}

Permutation compose(const Permutation& u, const Permutation& v) {
  if (u.size() != v.size()) throw UsageError("compose: size mismatch");
  std::vector<int> im(u.size());
  for (int i = 1; i <= u.size(); ++i) im[i - 1] = u(v(i));
  return Permutation(std::move(im));
}

std::vector<int> reduced_word(const Permutation& w) {
  std::vector<int> im = w.images();
  std::vector<int> word;
  for (;;) {
    int i = 1;
    while (i < static_cast<int>(im.size()) && im[i - 1] < im[i]) ++i;
    if (i >= static_cast<int>(im.size())) break;
    std::swap(im[i - 1], im[i]);  // w <- w s_i
    word.push_back(i);
  }
  std::reverse(word.begin(), word.end());
  return word;
}

Permutation from_word(int n, std::span<const int> word) {
  Permutation w = Permutation::identity(n);
  for (int i : word) w = w * Permutation::simple(n, i);
  return w;
}

Permutation longest_element(int n) {
  std::vector<int> im(n);
  for (int i = 0; i < n; ++i) im[i] = n - i;
  return Permutation(std::move(im));
}

bool length_lex_less(const Permutation& a, const Permutation& b) {
  int la = a.length(), lb = b.length();
  if (la != lb) return la < lb;
  return a.images() < b.images();
}

std::vector<Permutation> permutations_by_length(int n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 1);
  std::vector<Permutation> all;
  do {
    all.emplace_back(im);
  } while (std::next_permutation(im.begin(), im.end()));
  std::stable_sort(all.begin(), all.end(), length_lex_less);
  return all;
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw UsageError("composition: no parts");
  for (int p : parts_)
    if (p < 1) throw UsageError("composition: parts must be positive");
}

int Composition::total() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::vector<int> Composition::descent_set() const {
  std::vector<int> d;
  int sum = 0;
  for (std::size_t k = 0; k + 1 < parts_.size(); ++k) {
    sum += parts_[k];
    d.push_back(sum);
  }
  return d;
}

Composition Composition::from_descent_set(int total, std::span<const int> descents) {
  std::vector<int> parts;
  int prev = 0;
  for (int d : descents) {
    if (d <= prev || d >= total) throw UsageError("composition: descent set not increasing inside [1, total-1]");
    parts.push_back(d - prev);
    prev = d;
  }
  parts.push_back(total - prev);
  return Composition(std::move(parts));
}

std::vector<Composition> compositions(int total) {
  if (total < 1) throw UsageError("compositions: total must be positive");
  std::vector<Composition> out;
  const unsigned long count = 1ul << (total - 1);
  for (unsigned long mask = 0; mask < count; ++mask) {
    std::vector<int> descents;
    for (int k = 1; k < total; ++k)
      if (mask & (1ul << (k - 1))) descents.push_back(k);
    out.push_back(Composition::from_descent_set(total, descents));
  }
  return out;
}

Composition concatenate(std::span<const Composition> blocks) {
  std::vector<int> parts;
  for (const auto& b : blocks) parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  return Composition(std::move(parts));
}

Permutation young_longest(const Composition& j) {
  std::vector<int> im;
  int offset = 0;
  for (int part : j.parts()) {
    for (int k = part; k >= 1; --k) im.push_back(offset + k);
    offset += part;
  }
  return Permutation(std::move(im));
}

ColorVector act_on_colors(const Permutation& w, const ColorVector& c) {
  if (static_cast<int>(c.size()) != w.size()) throw UsageError("act_on_colors: size mismatch");
  ColorVector out(c.size());
  for (int i = 1; i <= w.size(); ++i) out[w(i) - 1] = c[i - 1];
  return out;
}

std::string to_string(const Permutation& w) {
  std::string s = "[";
  for (int i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w.images()[i]);
  }
  return s + "]";
}

}  // namespace yoklab
