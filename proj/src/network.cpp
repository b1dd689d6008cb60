#include "splitnet/network.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "splitnet/errors.hpp"

namespace splitnet {

namespace {

std::vector<bool> reach(const PhyloNetwork& net, int start, const std::set<Edge>& removed,
                        int skip_node = -1) {
    std::vector<bool> seen(net.node_count(), false);
    if (start == skip_node) return seen;
    std::vector<int> queue{start};
    seen[start] = true;
    while (!queue.empty()) {
        const int v = queue.back();
        queue.pop_back();
        for (int w : net.adj[v]) {
            if (w == skip_node || seen[w]) continue;
            if (removed.count(Edge{std::min(v, w), std::max(v, w)})) continue;
            seen[w] = true;
            queue.push_back(w);
        }
    }
    return seen;
}

}  // namespace

PhyloNetwork validate_network(int n, const std::vector<std::pair<int, int>>& raw_edges,
                              const std::map<int, int>& labels) {
    check_taxa(n);
    std::set<int> ids;
    for (const auto& [u, v] : raw_edges) {
        if (u == v) throw input_error("self-loop on node " + std::to_string(u));
        ids.insert(u);
        ids.insert(v);
    }
    for (const auto& [id, taxon] : labels) ids.insert(id), (void)taxon;
    std::map<int, int> index;
    for (int id : ids) index.emplace(id, static_cast<int>(index.size()));

    PhyloNetwork net;
    net.n = n;
    net.adj.resize(ids.size());
    net.node_taxon.assign(ids.size(), 0);
    net.taxon_node.assign(n + 1, -1);

    std::set<Edge> edge_set;
    for (const auto& [u, v] : raw_edges) {
        const Edge e{std::min(index.at(u), index.at(v)), std::max(index.at(u), index.at(v))};
        if (!edge_set.insert(e).second)
            throw input_error("multi-edge between " + std::to_string(u) + " and " + std::to_string(v));
    }
    net.edges.assign(edge_set.begin(), edge_set.end());
    for (const auto& [u, v] : net.edges) {
        net.adj[u].push_back(v);
        net.adj[v].push_back(u);
    }
    for (auto& nbrs : net.adj) std::sort(nbrs.begin(), nbrs.end());

    for (const auto& [id, taxon] : labels) {
        if (taxon < 1 || taxon > n) throw input_error("taxon out of range: " + std::to_string(taxon));
        const int v = index.at(id);
        if (net.taxon_node[taxon] != -1) throw input_error("taxon labeled twice: " + std::to_string(taxon));
        if (net.node_taxon[v] != 0) throw input_error("node carries two labels: " + std::to_string(id));
        net.taxon_node[taxon] = v;
        net.node_taxon[v] = taxon;
    }
    for (int t = 1; t <= n; ++t)
        if (net.taxon_node[t] == -1) throw input_error("taxon missing: " + std::to_string(t));

    for (int v = 0; v < net.node_count(); ++v) {
        const int d = net.degree(v);
        if (net.node_taxon[v] != 0) {
            if (d != 1)
                throw input_error("labeled node must be a leaf (taxon " +
                                  std::to_string(net.node_taxon[v]) + " has degree " + std::to_string(d) + ")");
        } else if (d < 3) {
            throw input_error("unlabeled node of degree " + std::to_string(d));
        }
    }

    const auto seen = reach(net, 0, {});
    for (int v = 0; v < net.node_count(); ++v)
        if (!seen[v]) throw input_error("network is disconnected");
    return net;
}

Mask leaf_side_mask(const PhyloNetwork& net, const std::vector<Edge>& removed, int side_node) {
    const std::set<Edge> cut(removed.begin(), removed.end());
    const auto seen = reach(net, side_node, cut);
    Mask leaves = 0;
    for (int v = 0; v < net.node_count(); ++v)
        if (seen[v] && net.node_taxon[v] != 0) leaves |= Mask{1} << (net.node_taxon[v] - 1);
    return leaves;
}

namespace {

// Hopcroft-Tarjan block decomposition; cycles may share nodes but blocks
// separate them, which plain 2-edge-connectivity would not.
struct BlockFinder {
    const PhyloNetwork& net;
    std::vector<int> depth, low;
    std::vector<Edge> stack;
    std::vector<std::vector<Edge>> blocks;

    explicit BlockFinder(const PhyloNetwork& g)
        : net(g), depth(g.node_count(), -1), low(g.node_count(), 0) {
        dfs(0, -1, 0);
    }

    void dfs(int v, int parent, int d) {
        depth[v] = low[v] = d;
        for (int w : net.adj[v]) {
            if (w == parent) continue;
            const Edge e{std::min(v, w), std::max(v, w)};
            if (depth[w] == -1) {
                stack.push_back(e);
                dfs(w, v, d + 1);
                low[v] = std::min(low[v], low[w]);
                if (low[w] >= depth[v]) {
                    std::vector<Edge> block;
                    while (true) {
                        const Edge top = stack.back();
                        stack.pop_back();
                        block.push_back(top);
                        if (top == e) break;
                    }
                    blocks.push_back(std::move(block));
                }
            } else if (depth[w] < depth[v]) {
                stack.push_back(e);
                low[v] = std::min(low[v], depth[w]);
            }
        }
    }
};

}  // namespace

NetworkStats classify(const PhyloNetwork& net) {
    NetworkStats stats;
    stats.is_one_nested = true;
    BlockFinder finder(net);
    for (const auto& block : finder.blocks) {
        if (block.size() == 1) {
            const Edge e = block[0];
            stats.bridges.push_back(e);
            const Mask side = leaf_side_mask(net, {e}, e.first);
            const int small = std::min(std::popcount(side), net.n - std::popcount(side));
            if (small >= 2) stats.nontrivial_bridges.push_back(e);
            continue;
        }
        std::map<int, std::vector<int>> block_adj;
        for (const Edge& e : block) {
            block_adj[e.first].push_back(e.second);
            block_adj[e.second].push_back(e.first);
        }
        // A 2-connected block with as many edges as nodes is a simple cycle.
        if (block.size() != block_adj.size() || block.size() < 4) {
            stats.is_one_nested = false;
            continue;
        }
        const int first = block_adj.begin()->first;
        std::vector<int> cycle{first, std::min(block_adj[first][0], block_adj[first][1])};
        while (true) {
            const int cur = cycle.back();
            const int prev = cycle[cycle.size() - 2];
            const int next = block_adj[cur][0] == prev ? block_adj[cur][1] : block_adj[cur][0];
            if (next == first) break;
            cycle.push_back(next);
        }
        stats.cycles.push_back(std::move(cycle));
    }
    std::sort(stats.bridges.begin(), stats.bridges.end());
    std::sort(stats.nontrivial_bridges.begin(), stats.nontrivial_bridges.end());
    std::sort(stats.cycles.begin(), stats.cycles.end());

    for (int v = 0; v < net.node_count(); ++v) {
        if (net.degree(v) < 2) continue;
        const int start = net.adj[v][0];
        const auto seen = reach(net, start, {}, v);
        bool whole = true;
        for (int w = 0; w < net.node_count(); ++w)
            if (w != v && !seen[w]) whole = false;
        if (!whole) stats.cut_point_nodes.push_back(v);
    }

    stats.is_binary = true;
    for (int v = 0; v < net.node_count(); ++v)
        if (net.node_taxon[v] == 0 && net.degree(v) != 3) stats.is_binary = false;
    return stats;
}

namespace {

// Per cycle position: leaves hanging off that node away from the cycle.
std::vector<Mask> hanging_masks(const PhyloNetwork& net, const std::vector<int>& cycle) {
    std::vector<Edge> cycle_edges;
    const int m = static_cast<int>(cycle.size());
    for (int i = 0; i < m; ++i) {
        const int u = cycle[i], v = cycle[(i + 1) % m];
        cycle_edges.push_back(Edge{std::min(u, v), std::max(u, v)});
    }
    std::vector<Mask> hang(m);
    for (int i = 0; i < m; ++i) hang[i] = leaf_side_mask(net, cycle_edges, cycle[i]);
    return hang;
}

void require_one_nested(const NetworkStats& stats) {
    if (!stats.is_one_nested) throw input_error("network is not 1-nested");
}

}  // namespace

SplitSystem displayed_splits(const PhyloNetwork& net) {
    const NetworkStats stats = classify(net);
    require_one_nested(stats);
    SplitSystem out{net.n, {}};
    for (const Edge& e : stats.bridges)
        out.add(canonical_split(net.n, leaf_side_mask(net, {e}, e.first)));
    for (const auto& cycle : stats.cycles) {
        const int m = static_cast<int>(cycle.size());
        const auto hang = hanging_masks(net, cycle);
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) {
                Mask arc = 0;
                for (int t = i + 1; t <= j; ++t) arc |= hang[t];
                out.add(canonical_split(net.n, arc));
            }
    }
    return out;
}

std::vector<CircularOrder> consistent_orders_network(const PhyloNetwork& net) {
    return consistent_orders(displayed_splits(net));
}

PosetRelation network_poset_compare(const PhyloNetwork& a, const PhyloNetwork& b) {
    return poset_compare(displayed_splits(a), displayed_splits(b));
}

std::map<Split, std::vector<Edge>> assign_splits_to_cuts(const PhyloNetwork& net,
                                                         const SplitSystem& splits) {
    const NetworkStats stats = classify(net);
    require_one_nested(stats);
    std::map<Split, std::vector<Edge>> cuts;
    for (const auto& cycle : stats.cycles) {
        const int m = static_cast<int>(cycle.size());
        const auto hang = hanging_masks(net, cycle);
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) {
                Mask arc = 0;
                for (int t = i + 1; t <= j; ++t) arc |= hang[t];
                const Split s = canonical_split(net.n, arc);
                const int a = std::min(cycle[i], cycle[(i + 1) % m]);
                const int b = std::max(cycle[i], cycle[(i + 1) % m]);
                const int c = std::min(cycle[j], cycle[(j + 1) % m]);
                const int d = std::max(cycle[j], cycle[(j + 1) % m]);
                cuts.emplace(s, std::vector<Edge>{Edge{a, b}, Edge{c, d}});
            }
    }
    for (const Edge& e : stats.bridges) {
        const Split s = canonical_split(net.n, leaf_side_mask(net, {e}, e.first));
        cuts[s] = {e};  // a bridge wins over any cycle pair showing the same split
    }
    std::map<Split, std::vector<Edge>> out;
    for (const Split& s : splits.splits()) {
        const auto it = cuts.find(s);
        if (it == cuts.end())
            throw input_error("split not displayed by the network: " + format_split(s));
        out.emplace(s, it->second);
    }
    return out;
}

}  // namespace splitnet
