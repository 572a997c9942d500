#pragma once

#include <cstdint>
#include <vector>

#include "cyclotome/check.hpp"
#include "cyclotome/cyclic_set.hpp"

namespace cyclotome {

/// Degenerate parts of level n.  Subsets S of {0..n} are bit masks.
struct LatchingData {
  struct CubeEntry {
    std::uint32_t subset = 0;
    std::vector<ElementId> elements;  // X_S as a sorted subset of X_n
  };

  int n = 0;
  std::vector<ElementId> simplicial;   // L_n: images of s_0..s_{n-1}
  std::vector<ElementId> cyclic;       // L_n^cyc: also the extra degeneracy
  std::vector<ElementId> x_minus_one;  // X_{-1} inside X_0
  std::vector<CubeEntry> cube;         // all proper subsets, in increasing mask order
};

/// Rounding down to the nearest element of S, as a degree-1 map [n] -> [|S|-1].
/// Points below min S go to -1, the last element of the previous period.
LambdaMor rounding_down(int n, std::uint32_t subset);

/// The map [n] -> [n] sending i to i - 1 and fixing every other point.
LambdaMor collapse_onto_predecessor(int n, int i);

/// Elements of X_0 on which s_0 and the extra degeneracy agree.
std::vector<ElementId> x_minus_one(const CyclicSet& X);

LatchingData latching(const CyclicSet& X, int n);

/// L_n within L_n^cyc; L_n^cyc is the t-closure of L_n; the cube satisfies
/// X_S cap X_T = X_{S cap T}; its colimit (computed by gluing) has the size of
/// the union, which equals L_n^cyc (all proper S) and L_n (proper S containing
/// 0); X_S is the set fixed by the collapse maps for i outside S.
CheckResult check_latching(const CyclicSet& X, int n);

}  // namespace cyclotome
