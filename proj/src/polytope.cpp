#include "splitnet/polytope.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "splitnet/circular.hpp"
#include "splitnet/errors.hpp"
#include "splitnet/network.hpp"

namespace splitnet {

PolytopeVector incidence_vector(const CircularOrder& c) {
    const int n = c.n();
    PolytopeVector out{n, std::vector<BigInt>(n * (n - 1) / 2, BigInt(0))};
    for (int p = 0; p < n; ++p) out.at(c.seq[p], c.seq[(p + 1) % n]) = 1;
    return out;
}

PolytopeVector network_vector(const PCTree& t) {
    const int n = t.n();
    PolytopeVector out{n, std::vector<BigInt>(n * (n - 1) / 2, BigInt(0))};
    for (const CircularOrder& c : consistent_orders_network(from_pc_tree(t)))
        for (int p = 0; p < n; ++p) out.at(c.seq[p], c.seq[(p + 1) % n]) += 1;
    return out;
}

namespace {

// Unique path between two nodes of the tree underlying the class.
std::vector<int> pc_path(const PCTree& t, int from, int to) {
    const auto& nodes = t.nodes();
    std::vector<int> prev(nodes.size(), -1);
    std::vector<int> stack{from};
    prev[from] = from;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        if (v == to) break;
        for (int w : nodes[v].nbrs)
            if (prev[w] == -1) {
                prev[w] = v;
                stack.push_back(w);
            }
    }
    std::vector<int> path;
    for (int v = to; v != from; v = prev[v]) path.push_back(v);
    path.push_back(from);
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace

PolytopeVector binary_vector_closed_form(const PCTree& t) {
    if (!t.is_binary()) throw input_error("closed form needs a binary class");
    const int n = t.n();
    const int k = t.internal_edge_count();
    const auto& nodes = t.nodes();
    PolytopeVector out{n, std::vector<BigInt>(n * (n - 1) / 2, BigInt(0))};
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            const auto path = pc_path(t, t.node_of_taxon(i), t.node_of_taxon(j));
            int crossed = 0;
            bool adjacent_possible = true;
            for (std::size_t p = 0; p + 1 < path.size(); ++p)
                if (nodes[path[p]].kind != PCTree::Kind::Leaf &&
                    nodes[path[p + 1]].kind != PCTree::Kind::Leaf)
                    ++crossed;
            // A C-node pins its ports in cyclic position: the entry and exit
            // must be neighbors there, or some subtree separates i from j in
            // every consistent order.
            for (std::size_t p = 1; p + 1 < path.size(); ++p) {
                const auto& node = nodes[path[p]];
                if (node.kind != PCTree::Kind::C) continue;
                const int d = static_cast<int>(node.nbrs.size());
                int in_pos = -1, out_pos = -1;
                for (int q = 0; q < d; ++q) {
                    if (node.nbrs[q] == path[p - 1]) in_pos = q;
                    if (node.nbrs[q] == path[p + 1]) out_pos = q;
                }
                const int gap = (in_pos - out_pos + d) % d;
                if (gap != 1 && gap != d - 1) adjacent_possible = false;
            }
            if (adjacent_possible) out.at(i, j) = BigInt(1) << (k - crossed);
        }
    return out;
}

const std::vector<std::pair<PCTree, PolytopeVector>>& bme_vertices(int n, int k) {
    check_taxa(n);
    if (n > 8) throw bound_error("vertex enumeration supported up to n=8, got " + std::to_string(n));
    if (k < 0 || k > n - 3)
        throw input_error("bridge count k must lie in 0.." + std::to_string(n - 3) + ", got " +
                          std::to_string(k));
    static std::map<std::pair<int, int>, std::vector<std::pair<PCTree, PolytopeVector>>> cache;
    auto [it, fresh] = cache.try_emplace({n, k});
    if (fresh)
        for (const PCTree& t : binary_one_nested(n, k))
            it->second.emplace_back(t, network_vector(t));
    return it->second;
}

Rat dot(const PolytopeVector& x, const DistanceVector& d) {
    if (x.n != d.n) throw input_error("vector and metric disagree on the number of taxa");
    Rat sum = 0;
    for (std::size_t p = 0; p < x.x.size(); ++p) sum += Rat(x.x[p]) * d.entries[p];
    return sum;
}

MinimizeResult minimize(const DistanceVector& d, int n, int k) {
    if (d.n != n) throw input_error("metric has wrong number of taxa");
    MinimizeResult res;
    for (const auto& [t, x] : bme_vertices(n, k)) {
        const Rat value = dot(x, d);
        if (res.argmin.empty() || value < res.value) {
            res.argmin = {t};
            res.value = value;
        } else if (value == res.value) {
            res.argmin.push_back(t);
        }
    }
    return res;
}

std::vector<PCTree> face_vertices(const PCTree& t, int k) {
    const int m = t.internal_edge_count();
    if (k > m)
        throw input_error("face index k=" + std::to_string(k) +
                          " exceeds the class's nontrivial bridge count " + std::to_string(m));
    std::vector<PCTree> out;
    for (const auto& [cand, x] : bme_vertices(t.n(), k)) {
        const PosetRelation rel = pc_poset_compare(t, cand);
        if (rel == PosetRelation::LessThan || rel == PosetRelation::Equal) out.push_back(cand);
    }
    return out;
}

std::vector<PCTree> predicted_minimizers(const WeightedNetwork& wn, int k) {
    const SplitSystem support = s_w(wn).support();
    std::vector<PCTree> out;
    for (const auto& [cand, x] : bme_vertices(wn.net.n, k)) {
        const PosetRelation rel = poset_compare(support, cand.splits());
        if (rel == PosetRelation::LessThan || rel == PosetRelation::Equal) out.push_back(cand);
    }
    return out;
}

}  // namespace splitnet
