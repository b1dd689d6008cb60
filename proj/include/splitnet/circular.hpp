#pragma once

#include <optional>

#include "splitnet/pc_tree.hpp"
#include "splitnet/split.hpp"

namespace splitnet {

// A split system together with one order realizing it on a circle.
struct CircularSystem {
    SplitSystem base;
    CircularOrder witness;
};

// First canonical order in which every split is contiguous, if any.
std::optional<CircularOrder> is_circular(const SplitSystem& s);

// Throws input_error when no order fits.
CircularSystem make_circular(const SplitSystem& s);

// Splits contiguous in every consistent order; contains s, idempotent, and
// equals the split system displayed by ell(s).
SplitSystem closure(const CircularSystem& s);

// Lower adjoint of displayed_splits: the smallest 1-nested class displaying
// all of s. Realized combinatorially from the closure.
PCTree ell(const CircularSystem& s);

// True when every leaf pair has a path in ell(s) crossing exactly the splits
// of s separating the pair, once each; equivalently the weighted network of
// any weighting of s reproduces the split metric.
bool is_outer_path(const CircularSystem& s);

// Systems with all trivial splits admitting a consistent order. n <= 6.
BigInt count_circular_systems(int n);

}  // namespace splitnet
