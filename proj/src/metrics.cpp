#include "splitnet/metrics.hpp"

#include <algorithm>
#include <string>

#include "splitnet/circular.hpp"
#include "splitnet/errors.hpp"
#include "splitnet/pc_tree.hpp"

namespace splitnet {

int DistanceVector::pair_index(int n, int i, int j) {
    if (i > j) std::swap(i, j);
    if (i < 1 || j > n || i == j) throw error("internal: bad taxon pair");
    return (i - 1) * (2 * n - i) / 2 + (j - i - 1);
}

Rat& DistanceVector::at(int i, int j) { return entries[pair_index(n, i, j)]; }
const Rat& DistanceVector::at(int i, int j) const { return entries[pair_index(n, i, j)]; }

DistanceVector zero_distance(int n) {
    check_taxa(n);
    return DistanceVector{n, std::vector<Rat>(n * (n - 1) / 2, Rat(0))};
}

SplitSystem WeightedSplitSystem::support() const {
    SplitSystem out{n, {}};
    for (const auto& [sp, w] : weights) out.add(sp);
    return out;
}

bool WeightedSplitSystem::has_all_trivial() const { return support().has_all_trivial(); }

WeightedNetwork weighted(const PhyloNetwork& net, const std::map<Edge, Rat>& weights) {
    for (const Edge& e : net.edges) {
        auto it = weights.find(e);
        if (it == weights.end())
            throw input_error("missing weight for edge " + std::to_string(e.first) + "-" +
                              std::to_string(e.second));
        if (it->second < 0)
            throw input_error("negative weight on edge " + std::to_string(e.first) + "-" +
                              std::to_string(e.second));
    }
    if (weights.size() != net.edges.size()) throw input_error("weight given for a non-edge");
    return WeightedNetwork{net, weights};
}

WeightedNetwork unit_weighted(const PhyloNetwork& net) {
    std::map<Edge, Rat> w;
    for (const Edge& e : net.edges) w[e] = 1;
    return WeightedNetwork{net, std::move(w)};
}

Rat total_weight(const WeightedSplitSystem& ws) {
    Rat sum = 0;
    for (const auto& [sp, w] : ws.weights) sum += w;
    return sum;
}

DistanceVector distance_from_splits(const WeightedSplitSystem& ws) {
    DistanceVector d = zero_distance(ws.n);
    for (const auto& [sp, w] : ws.weights)
        for (int i = 1; i <= ws.n; ++i)
            for (int j = i + 1; j <= ws.n; ++j)
                if (separates(sp, i, j)) d.at(i, j) += w;
    return d;
}

DistanceVector distance_from_network(const WeightedNetwork& wn) {
    const int V = wn.net.node_count();
    Rat inf = 1;
    for (const auto& [e, w] : wn.weights) inf += w;
    std::vector<std::vector<Rat>> dist(V, std::vector<Rat>(V, inf));
    for (int v = 0; v < V; ++v) dist[v][v] = 0;
    for (const Edge& e : wn.net.edges) {
        const Rat& w = wn.weights.at(e);
        if (w < dist[e.first][e.second]) {
            dist[e.first][e.second] = w;
            dist[e.second][e.first] = w;
        }
    }
    for (int m = 0; m < V; ++m)
        for (int u = 0; u < V; ++u)
            for (int v = 0; v < V; ++v) {
                const Rat via = dist[u][m] + dist[m][v];
                if (via < dist[u][v]) dist[u][v] = via;
            }
    DistanceVector d = zero_distance(wn.net.n);
    for (int i = 1; i <= wn.net.n; ++i)
        for (int j = i + 1; j <= wn.net.n; ++j)
            d.at(i, j) = dist[wn.net.taxon_node[i]][wn.net.taxon_node[j]];
    return d;
}

bool is_additive(const DistanceVector& d) {
    const int n = d.n;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k)
                for (int l = k + 1; l <= n; ++l) {
                    const Rat s1 = d.at(i, j) + d.at(k, l);
                    const Rat s2 = d.at(i, k) + d.at(j, l);
                    const Rat s3 = d.at(i, l) + d.at(j, k);
                    const Rat top = std::max({s1, s2, s3});
                    int hits = 0;
                    if (s1 == top) ++hits;
                    if (s2 == top) ++hits;
                    if (s3 == top) ++hits;
                    if (hits < 2) return false;
                }
    return true;
}

std::optional<std::array<int, 4>> kalmanson_violation(const DistanceVector& d,
                                                      const CircularOrder& c) {
    const int n = c.n();
    if (d.n != n) throw input_error("metric and order disagree on the number of taxa");
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q)
            for (int r = q + 1; r < n; ++r)
                for (int t = r + 1; t < n; ++t) {
                    const int i = c.seq[p], j = c.seq[q], k = c.seq[r], l = c.seq[t];
                    const Rat cross = d.at(i, k) + d.at(j, l);
                    if (d.at(i, j) + d.at(k, l) > cross || d.at(j, k) + d.at(i, l) > cross)
                        return std::array<int, 4>{i, j, k, l};
                }
    return std::nullopt;
}

bool is_kalmanson(const DistanceVector& d, const CircularOrder& c) {
    return !kalmanson_violation(d, c).has_value();
}

std::vector<CircularOrder> find_kalmanson_orders(const DistanceVector& d) {
    std::vector<CircularOrder> out;
    for (const CircularOrder& c : all_circular_orders(d.n))
        if (is_kalmanson(d, c)) out.push_back(c);
    return out;
}

WeightedSplitSystem circular_decompose(const DistanceVector& d, const CircularOrder& c) {
    const int n = c.n();
    if (d.n != n) throw input_error("metric and order disagree on the number of taxa");
    if (auto v = kalmanson_violation(d, c))
        throw input_error("metric violates the Kalmanson condition on quadruple (" +
                          std::to_string((*v)[0]) + "," + std::to_string((*v)[1]) + "," +
                          std::to_string((*v)[2]) + "," + std::to_string((*v)[3]) + ")");
    auto dd = [&](int a, int b) -> Rat { return a == b ? Rat(0) : d.at(a, b); };
    WeightedSplitSystem out{n, {}};
    for (int start = 0; start < n; ++start)
        for (int len = 1; len <= n - 2; ++len) {
            const Split sp = split_from_arc(c, start, len);
            if (out.weights.count(sp)) continue;
            const int xi = c.seq[start];
            const int xj = c.seq[(start + len - 1) % n];
            const int xprev = c.seq[(start + n - 1) % n];
            const int xnext = c.seq[(start + len) % n];
            const Rat w = (dd(xprev, xj) + dd(xi, xnext) - dd(xprev, xnext) - dd(xi, xj)) / 2;
            if (w < 0) {
                const std::vector<int> side = block_taxa(sp);
                std::string names;
                for (int t : side) names += (names.empty() ? "" : " ") + std::to_string(t);
                throw input_error("metric is not circular along this order: split {" + names +
                                  "} gets negative weight " + format_rational(w));
            }
            if (w != 0) out.weights[sp] = w;
        }
    return out;
}

WeightedSplitSystem s_w(const WeightedNetwork& wn) {
    const auto orders = consistent_orders_network(wn.net);
    if (orders.empty()) throw input_error("network admits no circular order");
    return circular_decompose(distance_from_network(wn), orders[0]);
}

WeightedNetwork l_w(const WeightedSplitSystem& ws) {
    const CircularSystem cs = make_circular(ws.support());
    const PhyloNetwork net = from_pc_tree(ell(cs));
    const auto cuts = assign_splits_to_cuts(net, cs.base);
    std::map<Edge, Rat> weights;
    for (const Edge& e : net.edges) weights[e] = 0;
    for (const auto& [sp, edges] : cuts) {
        const Rat& w = ws.weights.at(sp);
        for (const Edge& e : edges) weights[e] += w;
    }
    return WeightedNetwork{net, std::move(weights)};
}

PosetRelation weighted_network_compare(const WeightedNetwork& a, const WeightedNetwork& b) {
    if (!(distance_from_network(a) == distance_from_network(b)))
        return PosetRelation::Incomparable;
    return poset_compare(displayed_splits(a.net), displayed_splits(b.net));
}

int nontrivial_bridge_count(const WeightedSplitSystem& ws) {
    return ell(make_circular(ws.support())).internal_edge_count();
}

}  // namespace splitnet
