#pragma once

// Run decompositions of color vectors and the (c, J) labels of simple
// modules at q = 0.

#include <cstdint>
#include <vector>

#include "yoklab/symgroup.hpp"

namespace yoklab {

struct Run {
  int color = 0;
  int length = 0;
};

// Maximal constant blocks, left to right; boundaries are i_0 = 0 < ... < i_k = n.
struct RunDecomposition {
  std::vector<Run> runs;
  std::vector<int> boundaries;
};

RunDecomposition runs(const ColorVector& c);

struct SimpleLabel {
  ColorVector c;
  std::vector<Composition> J;  // J[j] is a composition of the j-th run length

  // Concatenation of the per-run compositions: a composition of n refining
  // the runs of c.
  Composition flattened() const;
  // Positions k in [1, n-1] with g_k -> -1: run offset plus the descent set
  // of that run's composition.
  std::vector<int> descent_positions() const;

  auto operator<=>(const SimpleLabel&) const = default;
};

// Throws UsageError unless |J| equals the number of runs and every J_j sums
// to its run length.
void validate_label(const SimpleLabel& label, int r);

// Every (c, J) with c in {1..r}^n, c in lexicographic order.
std::vector<SimpleLabel> enumerate_labels(int r, int n);

// Sum over c of 2^(n - k(c)), k(c) the number of runs.
std::uint64_t count_labels(int r, int n);

// All color vectors of length n over {1..r}, lexicographic.
std::vector<ColorVector> all_color_vectors(int r, int n);

}  // namespace yoklab
