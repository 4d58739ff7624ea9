#include "yoklab/labels.hpp"

#include "yoklab/error.hpp"

namespace yoklab {

RunDecomposition runs(const ColorVector& c) {
  RunDecomposition d;
  d.boundaries.push_back(0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (d.runs.empty() || d.runs.back().color != c[i]) {
      if (!d.runs.empty()) d.boundaries.push_back(static_cast<int>(i));
      d.runs.push_back({c[i], 0});
    }
    ++d.runs.back().length;
  }
  if (!c.empty()) d.boundaries.push_back(static_cast<int>(c.size()));
  return d;
}

Composition SimpleLabel::flattened() const { return concatenate(J); }

std::vector<int> SimpleLabel::descent_positions() const {
  std::vector<int> out;
  int offset = 0;
  for (const auto& block : J) {
    for (int d : block.descent_set()) out.push_back(offset + d);
    offset += block.total();
  }
  return out;
}

void validate_label(const SimpleLabel& label, int r) {
  for (int ci : label.c)
    if (ci < 1 || ci > r) throw UsageError("label: color outside 1..r");
  auto d = runs(label.c);
  if (d.runs.size() != label.J.size())
    throw UsageError("label: expected " + std::to_string(d.runs.size()) + " compositions, got " +
                     std::to_string(label.J.size()));
  for (std::size_t j = 0; j < d.runs.size(); ++j)
    if (label.J[j].total() != d.runs[j].length) throw UsageError("label: composition does not match run length");
}

std::vector<ColorVector> all_color_vectors(int r, int n) {
  if (r < 1 || n < 1) throw UsageError("color vectors: r and n must be at least 1");
  std::vector<ColorVector> out;
  ColorVector c(n, 1);
  for (;;) {
    out.push_back(c);
    int pos = n - 1;
    while (pos >= 0 && c[pos] == r) c[pos--] = 1;
    if (pos < 0) break;
    ++c[pos];
  }
  return out;
}

std::vector<SimpleLabel> enumerate_labels(int r, int n) {
  std::vector<SimpleLabel> out;
  for (const auto& c : all_color_vectors(r, n)) {
    auto d = runs(c);
    // Odometer over the per-run composition lists.
    std::vector<std::vector<Composition>> choices;
    for (const auto& run : d.runs) choices.push_back(compositions(run.length));
    std::vector<std::size_t> pick(choices.size(), 0);
    for (;;) {
      SimpleLabel label{c, {}};
      for (std::size_t j = 0; j < choices.size(); ++j) label.J.push_back(choices[j][pick[j]]);
      out.push_back(std::move(label));
      std::size_t j = choices.size();
      while (j > 0 && pick[j - 1] + 1 == choices[j - 1].size()) pick[--j] = 0;
      if (j == 0) break;
      ++pick[j - 1];
    }
  }
  return out;
}

std::uint64_t count_labels(int r, int n) {
  std::uint64_t total = 0;
  for (const auto& c : all_color_vectors(r, n))
    total += std::uint64_t{1} << (n - static_cast<int>(runs(c).runs.size()));
  return total;
}

}  // namespace yoklab
