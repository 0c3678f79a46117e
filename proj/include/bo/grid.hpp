// Truncation and collocation parameters shared by all discrete computations.
#pragma once

#include "bo/errors.hpp"

namespace bo {

// mode_cutoff  M: potential modes |n| <= M
// hardy_dim    N: Hardy-space truncation, indices 0..N-1, must exceed M
// num_points   P: collocation points, P >= 2(N+M) so products of truncated
//                 factors are alias-free
struct GridSpec {
  int mode_cutoff = 0;
  int hardy_dim = 0;
  int num_points = 0;

  // Picks the smallest power of two >= 2(N+M) for the collocation grid.
  static GridSpec make(int mode_cutoff, int hardy_dim) {
    GridSpec g;
    g.mode_cutoff = mode_cutoff;
    g.hardy_dim = hardy_dim;
    int p = 1;
    while (p < 2 * (hardy_dim + mode_cutoff)) p *= 2;
    g.num_points = p;
    g.validate();
    return g;
  }

  void validate() const {
    if (mode_cutoff < 1 || hardy_dim < 1 || num_points < 1)
      throw DimensionError("GridSpec: all dimensions must be positive");
    if (hardy_dim <= mode_cutoff)
      throw DimensionError("GridSpec: hardy_dim must exceed mode_cutoff");
    if (num_points < 2 * (hardy_dim + mode_cutoff))
      throw DimensionError("GridSpec: num_points < 2(N+M) allows aliasing");
  }
};

}  // namespace bo
