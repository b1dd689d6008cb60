#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "splitnet/network.hpp"
#include "splitnet/rational.hpp"
#include "splitnet/split.hpp"

namespace splitnet {

// Pairwise distances, entries over unordered pairs in lexicographic order:
// (1,2), (1,3), ..., (1,n), (2,3), ...
struct DistanceVector {
    int n = 0;
    std::vector<Rat> entries;

    static int pair_index(int n, int i, int j);
    Rat& at(int i, int j);
    const Rat& at(int i, int j) const;

    bool operator==(const DistanceVector&) const = default;
};

DistanceVector zero_distance(int n);

// Strictly positive weights; a split of weight zero is simply absent.
struct WeightedSplitSystem {
    int n = 0;
    std::map<Split, Rat> weights;

    SplitSystem support() const;
    bool has_all_trivial() const;

    bool operator==(const WeightedSplitSystem&) const = default;
};

struct WeightedNetwork {
    PhyloNetwork net;
    std::map<Edge, Rat> weights;
};

// Checks every edge carries a nonnegative weight.
WeightedNetwork weighted(const PhyloNetwork& net, const std::map<Edge, Rat>& weights);
WeightedNetwork unit_weighted(const PhyloNetwork& net);

Rat total_weight(const WeightedSplitSystem& ws);

DistanceVector distance_from_splits(const WeightedSplitSystem& ws);
DistanceVector distance_from_network(const WeightedNetwork& wn);

bool is_additive(const DistanceVector& d);

bool is_kalmanson(const DistanceVector& d, const CircularOrder& c);
// Taxa of a violating quadruple, listed in their circular position.
std::optional<std::array<int, 4>> kalmanson_violation(const DistanceVector& d,
                                                      const CircularOrder& c);
std::vector<CircularOrder> find_kalmanson_orders(const DistanceVector& d);

WeightedSplitSystem circular_decompose(const DistanceVector& d, const CircularOrder& c);

WeightedSplitSystem s_w(const WeightedNetwork& wn);
WeightedNetwork l_w(const WeightedSplitSystem& ws);

// Incomparable unless the distance vectors agree exactly.
PosetRelation weighted_network_compare(const WeightedNetwork& a, const WeightedNetwork& b);

int nontrivial_bridge_count(const WeightedSplitSystem& ws);

}  // namespace splitnet
