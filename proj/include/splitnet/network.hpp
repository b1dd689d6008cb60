#pragma once

#include <map>
#include <utility>
#include <vector>

#include "splitnet/split.hpp"

namespace splitnet {

using Edge = std::pair<int, int>;  // node indices, first < second

// Unrooted phylogenetic network: simple, connected, leaves are exactly the
// labeled degree-1 nodes, unlabeled nodes have degree >= 3.
struct PhyloNetwork {
    int n = 0;
    std::vector<std::vector<int>> adj;  // node -> sorted neighbors
    std::vector<int> node_taxon;        // node -> taxon, 0 for unlabeled
    std::vector<int> taxon_node;        // taxon -> node, slot 0 unused
    std::vector<Edge> edges;            // sorted

    int node_count() const { return static_cast<int>(adj.size()); }
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
};

// Nodes carry arbitrary caller ids; they are compressed to 0..V-1 in id order.
// labels maps node id -> taxon.
PhyloNetwork validate_network(int n, const std::vector<std::pair<int, int>>& raw_edges,
                              const std::map<int, int>& labels);

struct NetworkStats {
    std::vector<Edge> bridges;
    std::vector<Edge> nontrivial_bridges;
    std::vector<int> cut_point_nodes;
    std::vector<std::vector<int>> cycles;  // node lists in cyclic order
    bool is_one_nested = false;
    bool is_binary = false;
};

NetworkStats classify(const PhyloNetwork& net);

// Leaves on the side of the edge cut containing `side_node` after removing
// the listed edges; general helper behind split extraction.
Mask leaf_side_mask(const PhyloNetwork& net, const std::vector<Edge>& removed, int side_node);

// The split system displayed by the minimal cuts of a 1-nested network:
// every bridge plus every pair of edges of one cycle.
SplitSystem displayed_splits(const PhyloNetwork& net);

std::vector<CircularOrder> consistent_orders_network(const PhyloNetwork& net);

// Order on 1-nested classes: inclusion of displayed split systems.
PosetRelation network_poset_compare(const PhyloNetwork& a, const PhyloNetwork& b);

// Minimal cut realizing each split of the system inside net: one bridge, or a
// pair of edges of one cycle when no bridge displays it. Errors when some
// split is not displayed by net.
std::map<Split, std::vector<Edge>> assign_splits_to_cuts(const PhyloNetwork& net,
                                                         const SplitSystem& splits);

}  // namespace splitnet
