#pragma once

#include <cstdint>
#include <vector>

#include "radio/labeling.hpp"
#include "radio/torus.hpp"

namespace radio {

/// Which construction applies to C_n [] C_n. Exactly one case per supported
/// order; n == 2 maps to none.
enum class ParityCase {
  TrivialOne,  // n = 1
  Even,        // n = 2k, k >= 2
  OddKOdd,     // n = 2k+1, k odd
  OddKEven,    // n = 2k+1, k even >= 2
};

/// Throws UnsupportedOrderError for n == 2.
ParityCase parity_case(CycleOrder n);

/// Position function for even n: the vertex receiving the i-th smallest
/// label, from the four-case formula on r = floor(i/2n) and
/// s = floor(i/4) mod k. A bijection over 0 <= i < n^2.
TorusVertex position_even(CycleOrder n, std::int64_t i);

/// 1 + (i/2)(k+2) for even i, 2 + ((i-1)/2)(k+2) for odd i.
std::int64_t label_even(CycleOrder n, std::int64_t i);

/// Position function for n = 2k+1 with k odd (includes n = 3):
/// (ik, r + i(k+1)/2) mod n with r = floor(i/n).
TorusVertex position_odd_k_odd(CycleOrder n, std::int64_t i);

/// 1 + i(k+1)/2.
std::int64_t label_odd_k_odd(CycleOrder n, std::int64_t i);

/// Position function for n = 2k+1 with k even >= 2. Defined recursively:
/// diagonal pairs D_0 u D_1 are walked in steps of (k/2, k/2) from the seeds
/// (0,0) and (k+1, k), shifted by (k+2, k) onto each later diagonal pair,
/// and the last diagonal D_{n-1} is filled with alternating step sizes.
/// Evaluated by a forward pass; coordinates reduce mod n at every step.
TorusVertex position_odd_k_even(CycleOrder n, std::int64_t i);

/// Companion labels: increments alternate +1/+k up to the last diagonal,
/// then +(2j+1)/+(k-2j) along it. Strictly increasing in i.
std::int64_t label_odd_k_even(CycleOrder n, std::int64_t i);

/// A certified-optimal labeling together with its label order.
struct OrderedLabeling {
  CycleOrder n;
  std::vector<TorusVertex> order;  // order[i] = x_i, i-th smallest label
  Labeling labeling;               // keyed by row-major vertex id

  std::int64_t span() const { return labeling.span(); }
};

/// Dispatches on the parity case and materializes x_i and c(x_i) for all i.
/// Throws UnsupportedOrderError for n == 2.
OrderedLabeling build_labeling(CycleOrder n);

/// The radio number of C_n [] C_n in closed form:
/// (n^2-2)/2 (k+2) + 2 for n = 2k, (n^2-1)/2 (k+1) + 1 for n = 2k+1,
/// and 1 for n = 1. Throws UnsupportedOrderError for n == 2.
std::int64_t rn_formula(CycleOrder n);

/// Forced difference between the i-th and (i+2)-nd smallest labels of any
/// radio labeling: k+2 for even n, k+1 for odd n. Requires n >= 3.
std::int64_t min_gap(CycleOrder n);

/// Lower bound for the span, evaluated from the per-index minima
/// c(x_i) >= 1 + (i-1)/2 gap (i odd) / 2 + (i-2)/2 gap (i even) at i = n^2.
/// Agrees with rn_formula for every supported n.
std::int64_t lower_bound(CycleOrder n);

}  // namespace radio
