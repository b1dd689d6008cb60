#pragma once

#include <utility>
#include <vector>

#include "splitnet/metrics.hpp"
#include "splitnet/pc_tree.hpp"
#include "splitnet/rational.hpp"
#include "splitnet/split.hpp"

namespace splitnet {

// Integer vector indexed by unordered taxon pairs in lexicographic order.
struct PolytopeVector {
    int n = 0;
    std::vector<BigInt> x;

    BigInt& at(int i, int j) { return x[DistanceVector::pair_index(n, i, j)]; }
    const BigInt& at(int i, int j) const { return x[DistanceVector::pair_index(n, i, j)]; }

    bool operator==(const PolytopeVector&) const = default;
    auto operator<=>(const PolytopeVector&) const = default;
};

PolytopeVector incidence_vector(const CircularOrder& c);

// Sum of the incidence vectors of all consistent orders.
PolytopeVector network_vector(const PCTree& t);

// 2^(k - b_ij) when i and j can sit adjacent in a consistent order, 0
// otherwise; k and b_ij count internal edges (nontrivial bridges).
PolytopeVector binary_vector_closed_form(const PCTree& t);

const std::vector<std::pair<PCTree, PolytopeVector>>& bme_vertices(int n, int k);

Rat dot(const PolytopeVector& x, const DistanceVector& d);

struct MinimizeResult {
    std::vector<PCTree> argmin;
    Rat value;
};

MinimizeResult minimize(const DistanceVector& d, int n, int k);

// Vertices of the face below a 1-nested class: the binary k-bridge classes
// lying above it in the poset.
std::vector<PCTree> face_vertices(const PCTree& t, int k);

// Binary k-bridge classes whose splits cover the support of s_w of the
// network; whenever nonempty this is the argmin of minimize over its metric.
std::vector<PCTree> predicted_minimizers(const WeightedNetwork& wn, int k);

}  // namespace splitnet
