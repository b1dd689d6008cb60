#include "splitnet/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "splitnet/errors.hpp"
#include "splitnet/polytope.hpp"

namespace splitnet {

namespace {

int component_count(const PhyloNetwork& net, const std::vector<Edge>& removed,
                    std::vector<int>& comp) {
    const int V = net.node_count();
    comp.assign(V, -1);
    int comps = 0;
    for (int root = 0; root < V; ++root) {
        if (comp[root] != -1) continue;
        comp[root] = comps;
        std::vector<int> stack{root};
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int w : net.adj[v]) {
                const Edge e{std::min(v, w), std::max(v, w)};
                if (std::find(removed.begin(), removed.end(), e) != removed.end()) continue;
                if (comp[w] == -1) {
                    comp[w] = comps;
                    stack.push_back(w);
                }
            }
        }
        ++comps;
    }
    return comps;
}

// The leaf partition of a two-component edge deletion, if both sides hold
// at least one taxon.
std::optional<Split> cut_split(const PhyloNetwork& net, const std::vector<Edge>& removed) {
    std::vector<int> comp;
    if (component_count(net, removed, comp) != 2) return std::nullopt;
    Mask side = 0;
    bool other = false;
    for (int t = 1; t <= net.n; ++t) {
        if (comp[net.taxon_node[t]] == 0)
            side |= Mask{1} << (t - 1);
        else
            other = true;
    }
    if (side == 0 || !other) return std::nullopt;
    return canonical_split(net.n, side);
}

}  // namespace

SplitSystem oracle_displayed_splits(const PhyloNetwork& net) {
    if (net.n > 8) throw bound_error("cut scan supported up to n=8, got " + std::to_string(net.n));
    const auto& edges = net.edges;
    const int m = static_cast<int>(edges.size());
    SplitSystem out{net.n, {}};
    std::vector<std::vector<Edge>> subsets;
    for (int a = 0; a < m; ++a) {
        subsets.push_back({edges[a]});
        for (int b = a + 1; b < m; ++b) {
            subsets.push_back({edges[a], edges[b]});
            for (int c = b + 1; c < m; ++c) subsets.push_back({edges[a], edges[b], edges[c]});
        }
    }
    for (const auto& sub : subsets) {
        const auto sp = cut_split(net, sub);
        if (!sp) continue;
        bool minimal = true;
        const int size = static_cast<int>(sub.size());
        for (int bits = 1; bits + 1 < (1 << size); ++bits) {
            std::vector<Edge> proper;
            for (int i = 0; i < size; ++i)
                if (bits & (1 << i)) proper.push_back(sub[i]);
            if (cut_split(net, proper) == sp) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.add(*sp);
    }
    return out;
}

WeightedSplitSystem oracle_decompose(const DistanceVector& d, const CircularOrder& c) {
    const int n = c.n();
    if (d.n != n) throw input_error("metric and order disagree on the number of taxa");
    const std::vector<Split> cols = contiguous_splits(c).splits();
    const int dim = n * (n - 1) / 2;
    if (static_cast<int>(cols.size()) != dim) throw error("internal: arc split count is off");
    std::vector<std::vector<Rat>> mat(dim, std::vector<Rat>(dim + 1, Rat(0)));
    int row = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j, ++row) {
            for (int col = 0; col < dim; ++col)
                if (separates(cols[col], i, j)) mat[row][col] = 1;
            mat[row][dim] = d.at(i, j);
        }
    for (int col = 0; col < dim; ++col) {
        int pivot = -1;
        for (int r = col; r < dim; ++r)
            if (mat[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot == -1) throw error("internal: singular arc system");
        std::swap(mat[col], mat[pivot]);
        const Rat lead = mat[col][col];
        for (int q = col; q <= dim; ++q) mat[col][q] /= lead;
        for (int r = 0; r < dim; ++r) {
            if (r == col || mat[r][col] == 0) continue;
            const Rat f = mat[r][col];
            for (int q = col; q <= dim; ++q) mat[r][q] -= f * mat[col][q];
        }
    }
    WeightedSplitSystem out{n, {}};
    for (int col = 0; col < dim; ++col) {
        const Rat& w = mat[col][dim];
        if (w < 0) throw input_error("metric is not circular along this order");
        if (w != 0) out.weights[cols[col]] = w;
    }
    return out;
}

PCTree oracle_min_network(const CircularSystem& s) {
    const auto& classes = one_nested_classes(s.base.n);
    std::vector<const PCTree*> fits;
    for (const PCTree& t : classes) {
        const PosetRelation rel = poset_compare(s.base, t.splits());
        if (rel == PosetRelation::LessThan || rel == PosetRelation::Equal) fits.push_back(&t);
    }
    for (const PCTree* cand : fits) {
        bool least = true;
        for (const PCTree* other : fits) {
            const PosetRelation rel = pc_poset_compare(*cand, *other);
            if (rel != PosetRelation::LessThan && rel != PosetRelation::Equal) {
                least = false;
                break;
            }
        }
        if (least) return *cand;
    }
    throw error("internal: no least displaying class");
}

CheckCounter& OracleReport::counter(const std::string& name) {
    for (auto& c : checks)
        if (c.name == name) return c;
    checks.push_back({name, 0, 0});
    return checks.back();
}

std::uint64_t OracleReport::counter_checked(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return c.checked;
    return 0;
}

bool OracleReport::ok() const {
    for (const auto& c : checks)
        if (c.failed > 0) return false;
    return true;
}

std::string OracleReport::text() const {
    std::string out = title + "\n";
    for (const auto& c : checks)
        out += "  " + c.name + ": checked " + std::to_string(c.checked) + ", failed " +
               std::to_string(c.failed) + "\n";
    out += ok() ? "OK\n" : "FAILED\n";
    return out;
}

namespace {

bool at_most(PosetRelation rel) {
    return rel == PosetRelation::LessThan || rel == PosetRelation::Equal;
}

void galois_pair(OracleReport& report, const SplitSystem& s, const PCTree& ell_s,
                 const PCTree& cls, const SplitSystem& cls_splits) {
    auto& pairs = report.counter("adjunction biconditional");
    ++pairs.checked;
    const bool lhs = at_most(pc_poset_compare(ell_s, cls));
    const bool rhs = at_most(poset_compare(s, cls_splits));
    if (lhs != rhs) ++pairs.failed;
}

}  // namespace

OracleReport oracle_galois_check(int n, std::uint64_t seed) {
    check_taxa(n);
    if (n > 6) throw bound_error("adjunction scan supported up to n=6, got " + std::to_string(n));
    OracleReport report{"adjunction scan, n=" + std::to_string(n), {}};
    const auto& classes = one_nested_classes(n);
    std::vector<SplitSystem> class_splits;
    for (const PCTree& t : classes) class_splits.push_back(t.splits());

    auto& identity = report.counter("reflection identity on classes");
    for (std::size_t i = 0; i < classes.size(); ++i) {
        ++identity.checked;
        if (ell(make_circular(class_splits[i])) != classes[i]) ++identity.failed;
    }

    if (n <= 5) {
        std::vector<SplitSystem> systems;
        std::vector<PCTree> ells;
        for_each_split_system(n, [&](Mask bits) {
            SplitSystem s = system_from_bits(n, bits);
            if (!is_circular(s)) return;
            ells.push_back(ell(make_circular(s)));
            systems.push_back(std::move(s));
        });
        auto& hit = report.counter("surjectivity onto classes");
        std::set<std::string> images;
        for (const PCTree& t : ells) images.insert(t.str());
        hit.checked = classes.size();
        hit.failed = classes.size() - images.size();
        for (std::size_t a = 0; a < systems.size(); ++a)
            for (std::size_t b = 0; b < classes.size(); ++b)
                galois_pair(report, systems[a], ells[a], classes[b], class_splits[b]);
    } else {
        Rng rng(seed);
        const auto& orders = all_circular_orders(n);
        for (int rep = 0; rep < 12000; ++rep) {
            const CircularOrder& c = orders[rng.uniform(orders.size())];
            SplitSystem s{n, {}};
            s = s.with_trivial();
            const std::uint64_t pick = rng.next();
            int idx = 0;
            for (int start = 0; start < n; ++start)
                for (int len = 2; len <= n - 2; ++len) {
                    const Split sp = split_from_arc(c, start, len);
                    if (!s.contains(sp) && ((pick >> idx) & 1)) s.add(sp);
                    ++idx;
                }
            const PCTree ell_s = ell(make_circular(s));
            const std::size_t b = rng.uniform(classes.size());
            galois_pair(report, s, ell_s, classes[b], class_splits[b]);
        }
    }
    return report;
}

PCTree random_one_nested(int n, Rng& rng) {
    check_taxa(n);
    using Node = PCTree::Node;
    std::vector<Node> nodes;
    nodes.push_back({PCTree::Kind::P, 0, {1, 2, 3}});
    for (int t = 1; t <= 3; ++t) nodes.push_back({PCTree::Kind::Leaf, t, {0}});
    for (int t = 4; t <= n; ++t) {
        // Attach the next leaf to an existing internal node or subdivide an
        // edge with a fresh one.
        std::vector<int> internals;
        std::vector<Edge> edges;
        for (std::size_t v = 0; v < nodes.size(); ++v) {
            if (nodes[v].kind != PCTree::Kind::Leaf) internals.push_back(static_cast<int>(v));
            for (int w : nodes[v].nbrs)
                if (static_cast<int>(v) < w) edges.push_back({static_cast<int>(v), w});
        }
        const int leaf = static_cast<int>(nodes.size());
        if (rng.coin()) {
            const int host = internals[rng.uniform(internals.size())];
            nodes.push_back({PCTree::Kind::Leaf, t, {host}});
            nodes[host].nbrs.push_back(leaf);
        } else {
            const Edge e = edges[rng.uniform(edges.size())];
            const int mid = leaf + 1;
            nodes.push_back({PCTree::Kind::Leaf, t, {mid}});
            nodes.push_back({PCTree::Kind::P, 0, {e.first, e.second, leaf}});
            std::replace(nodes[e.first].nbrs.begin(), nodes[e.first].nbrs.end(), e.second, mid);
            std::replace(nodes[e.second].nbrs.begin(), nodes[e.second].nbrs.end(), e.first, mid);
        }
    }
    for (auto& node : nodes) {
        if (node.kind == PCTree::Kind::Leaf || node.nbrs.size() < 4) continue;
        if (rng.coin()) {
            node.kind = PCTree::Kind::C;
            rng.shuffle(node.nbrs);
        }
    }
    return PCTree::from_parts(std::move(nodes));
}

WeightedNetwork random_weighted_network(int n, Rng& rng) {
    const PhyloNetwork net = from_pc_tree(random_one_nested(n, rng));
    std::map<Edge, Rat> w;
    for (const Edge& e : net.edges) w[e] = rng.positive_rational();
    return WeightedNetwork{net, std::move(w)};
}

OracleReport oracle_weighted_suite(int n_lo, int n_hi, int per_n, std::uint64_t seed) {
    check_taxa(n_lo);
    if (n_hi > kOrderScanBound)
        throw bound_error("weighted suite supported up to n=" + std::to_string(kOrderScanBound));
    OracleReport report{"weighted adjunction suite, n=" + std::to_string(n_lo) + ".." +
                            std::to_string(n_hi),
                        {}};
    Rng rng(seed);
    for (int n = n_lo; n <= n_hi; ++n)
        for (int rep = 0; rep < per_n; ++rep) {
            const WeightedNetwork wn = random_weighted_network(n, rng);
            const PCTree input_class = to_pc_tree(wn.net);
            const DistanceVector dn = distance_from_network(wn);
            const WeightedSplitSystem ws = s_w(wn);

            auto& dist = report.counter("distance round trip");
            ++dist.checked;
            if (!(distance_from_splits(ws) == dn)) ++dist.failed;

            auto& outer = report.counter("outer path support");
            ++outer.checked;
            if (!is_outer_path(make_circular(ws.support()))) ++outer.failed;

            auto& below = report.counter("lower adjoint below input");
            ++below.checked;
            const WeightedNetwork back = l_w(ws);
            if (!at_most(pc_poset_compare(to_pc_tree(back.net), input_class))) ++below.failed;

            auto& ident = report.counter("identity on outer-path systems");
            ++ident.checked;
            if (!(s_w(back) == ws)) ++ident.failed;

            auto& bridges = report.counter("bridge weight non-decrease");
            for (const Edge& b : classify(wn.net).bridges) {
                ++bridges.checked;
                const Split sp = canonical_split(wn.net.n, leaf_side_mask(wn.net, {b}, b.first));
                auto it = ws.weights.find(sp);
                if (it == ws.weights.end() || it->second < wn.weights.at(b)) ++bridges.failed;
            }

            const auto net_orders = consistent_orders_network(wn.net);
            auto& orders = report.counter("order independence");
            for (const CircularOrder& c : net_orders) {
                ++orders.checked;
                if (!(circular_decompose(dn, c) == ws)) ++orders.failed;
            }

            auto& solve = report.counter("closed form equals linear solve");
            ++solve.checked;
            if (!(oracle_decompose(dn, net_orders[0]) == ws)) ++solve.failed;
        }
    return report;
}

OracleReport oracle_polytope_suite(int n, int instances, std::uint64_t seed) {
    check_taxa(n);
    if (n > 6) throw bound_error("polytope suite supported up to n=6, got " + std::to_string(n));
    OracleReport report{"vertex minimization suite, n=" + std::to_string(n), {}};
    Rng rng(seed);
    for (int rep = 0; rep < instances; ++rep) {
        const WeightedNetwork wn = random_weighted_network(n, rng);
        const DistanceVector dn = distance_from_network(wn);
        const WeightedSplitSystem ws = s_w(wn);
        const Rat w_total = total_weight(ws);
        const PCTree input_class = to_pc_tree(wn.net);
        const PCTree hull_class = ell(make_circular(ws.support()));
        const int input_bridges = input_class.internal_edge_count();

        int least_unique = -1;
        for (int k = 0; k <= n - 3; ++k) {
            const MinimizeResult res = minimize(dn, n, k);
            const auto predicted = predicted_minimizers(wn, k);

            if (!predicted.empty()) {
                auto& match = report.counter("predicted minimizers match argmin");
                ++match.checked;
                if (!(predicted == res.argmin)) ++match.failed;
                auto& value = report.counter("minimum equals 2^(k+1) W");
                ++value.checked;
                if (res.value != Rat(BigInt(1) << (k + 1)) * w_total) ++value.failed;
            } else {
                auto& value = report.counter("minimum above 2^(k+1) W when unreachable");
                ++value.checked;
                if (!(res.value > Rat(BigInt(1) << (k + 1)) * w_total)) ++value.failed;
            }

            if (least_unique == -1 && res.argmin.size() == 1) least_unique = k;

            if (k <= input_bridges) {
                auto& sub = report.counter("input face inside hull-class face");
                ++sub.checked;
                const auto outer_face = face_vertices(hull_class, k);
                bool contained = true;
                for (const PCTree& t : face_vertices(input_class, k))
                    if (std::count(outer_face.begin(), outer_face.end(), t) == 0) contained = false;
                if (!contained) ++sub.failed;
            }
        }

        const int hull_bridges = hull_class.internal_edge_count();
        if (hull_class.is_binary()) {
            auto& least = report.counter("least unique argmin at bridge count");
            ++least.checked;
            if (least_unique != hull_bridges) ++least.failed;
        } else {
            // A P node of degree >= 4 admits several cyclic resolutions at
            // every level up to the bridge count, so no such face is a
            // single vertex and the smallest-k law cannot apply.
            auto& least = report.counter("no unique argmin up to bridge count for nonbinary exterior");
            ++least.checked;
            if (least_unique != -1 && least_unique <= hull_bridges) ++least.failed;
        }
    }
    return report;
}

}  // namespace splitnet
