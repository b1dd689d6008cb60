#pragma once

#include <functional>
#include <string>
#include <vector>

#include "splitnet/network.hpp"
#include "splitnet/split.hpp"

namespace splitnet {

// Canonical representative of a 1-nested equivalence class: a tree whose
// internal nodes are either unordered (P) or carry a cyclic order of their
// incident edges up to rotation and reflection (C). Equality of classes is
// string equality of the canonical serialization, e.g. "1 (P 2 (C 3 4 5))".
class PCTree {
  public:
    enum class Kind { Leaf, P, C };
    struct Node {
        Kind kind = Kind::Leaf;
        int taxon = 0;          // leaves only
        std::vector<int> nbrs;  // C: full cyclic order; stable canonical order otherwise
    };

    // Canonicalizes, validates, and renumbers nodes into serialization order.
    // Node requirements: tree; leaves are exactly taxa 1..n and have degree 1;
    // P degree >= 3; C degree >= 4.
    static PCTree from_parts(std::vector<Node> nodes);
    static PCTree parse(const std::string& text);

    int n() const { return n_; }
    const std::string& str() const { return canon_; }
    const std::vector<Node>& nodes() const { return nodes_; }
    int node_of_taxon(int taxon) const { return taxon_node_[taxon]; }

    // Splits displayed by the class: one per tree edge plus one per cyclic
    // arc of each C-node; all trivial splits included.
    SplitSystem splits() const;

    // A consistent circular order, read off by planar traversal.
    CircularOrder witness_order() const;

    // Edges joining two internal nodes; these are the nontrivial bridges.
    int internal_edge_count() const;

    // Every P-node has degree 3, so the expanded network is binary.
    bool is_binary() const;

    bool operator==(const PCTree& o) const { return canon_ == o.canon_; }
    bool operator!=(const PCTree& o) const { return canon_ != o.canon_; }
    bool operator<(const PCTree& o) const { return canon_ < o.canon_; }

  private:
    int n_ = 0;
    std::string canon_;
    std::vector<Node> nodes_;
    std::vector<int> taxon_node_;
};

PCTree to_pc_tree(const PhyloNetwork& net);
PhyloNetwork from_pc_tree(const PCTree& t);
PosetRelation pc_poset_compare(const PCTree& a, const PCTree& b);

// All classes whose expanded network is binary with k nontrivial bridges,
// streamed in generation order (not sorted). n <= 9, 0 <= k <= n-3.
void for_each_binary_one_nested(int n, int k, const std::function<void(const PCTree&)>& visit);

// Materialized and sorted by canonical string.
std::vector<PCTree> binary_one_nested(int n, int k);

// C(n-3,k) * (n+k-1)! / (2k+2)!!
BigInt binary_one_nested_count(int n, int k);

// Every 1-nested class on n taxa, sorted; cached. n <= 6.
const std::vector<PCTree>& one_nested_classes(int n);
BigInt count_one_nested_classes(int n);

}  // namespace splitnet
