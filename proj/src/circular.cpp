#include "splitnet/circular.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>

#include "splitnet/errors.hpp"

namespace splitnet {

std::optional<CircularOrder> is_circular(const SplitSystem& s) {
    for (const CircularOrder& c : all_circular_orders(s.n)) {
        bool ok = true;
        for (Mask b : s.blocks)
            if (!is_contiguous(Split{s.n, b}, c)) {
                ok = false;
                break;
            }
        if (ok) return c;
    }
    return std::nullopt;
}

CircularSystem make_circular(const SplitSystem& s) {
    auto witness = is_circular(s);
    if (!witness) throw input_error("split system is not circular");
    return CircularSystem{s, *witness};
}

SplitSystem closure(const CircularSystem& s) {
    const auto orders = consistent_orders(s.base);
    if (orders.empty()) throw input_error("split system is not circular");
    SplitSystem out = contiguous_splits(orders[0]);
    for (std::size_t i = 1; i < orders.size(); ++i) {
        const SplitSystem next = contiguous_splits(orders[i]);
        std::set<Mask> kept;
        for (Mask b : out.blocks)
            if (next.blocks.count(b)) kept.insert(b);
        out.blocks = std::move(kept);
    }
    return out;
}

namespace {

using LabelSet = std::set<int>;
using Nodes = std::vector<PCTree::Node>;

// Splits over an arbitrary label set, block normalized to the smaller side
// (ties by content) so each split has one spelling.
struct LocalSys {
    std::vector<int> labels;  // sorted
    std::set<LabelSet> blocks;
    std::vector<int> witness;  // labels in cyclic order
};

LabelSet complement_of(const LabelSet& side, const std::vector<int>& labels) {
    LabelSet out;
    for (int x : labels)
        if (!side.count(x)) out.insert(x);
    return out;
}

LabelSet normalize_block(const LabelSet& side, const std::vector<int>& labels) {
    LabelSet comp = complement_of(side, labels);
    if (comp.size() != side.size()) return comp.size() < side.size() ? comp : side;
    return std::min(side, comp);
}

bool compatible_local(const LabelSet& a, const LabelSet& b, const std::vector<int>& labels) {
    int only_a = 0, only_b = 0, both = 0, neither = 0;
    for (int x : labels) {
        const bool in_a = a.count(x) != 0, in_b = b.count(x) != 0;
        if (in_a && in_b)
            ++both;
        else if (in_a)
            ++only_a;
        else if (in_b)
            ++only_b;
        else
            ++neither;
    }
    return only_a == 0 || only_b == 0 || both == 0 || neither == 0;
}

int find_leaf(const Nodes& nodes, int label) {
    for (std::size_t v = 0; v < nodes.size(); ++v)
        if (nodes[v].kind == PCTree::Kind::Leaf && nodes[v].taxon == label)
            return static_cast<int>(v);
    throw error("internal: missing leaf in realization");
}

// Joins two partial trees by deleting one placeholder leaf on each side and
// wiring their attachment points together; C-node slots keep their positions.
Nodes splice(Nodes left, int left_label, Nodes right, int right_label) {
    const int offset = static_cast<int>(left.size());
    for (auto& node : right) {
        for (int& w : node.nbrs) w += offset;
        left.push_back(std::move(node));
    }
    const int lp = find_leaf(left, left_label);
    int rp = -1;
    for (std::size_t v = offset; v < left.size(); ++v)
        if (left[v].kind == PCTree::Kind::Leaf && left[v].taxon == right_label)
            rp = static_cast<int>(v);
    const int a = left[lp].nbrs[0];
    const int b = left[rp].nbrs[0];
    std::replace(left[a].nbrs.begin(), left[a].nbrs.end(), lp, b);
    std::replace(left[b].nbrs.begin(), left[b].nbrs.end(), rp, a);
    std::vector<int> remap(left.size(), -1);
    Nodes out;
    for (std::size_t v = 0; v < left.size(); ++v) {
        if (static_cast<int>(v) == lp || static_cast<int>(v) == rp) continue;
        remap[v] = static_cast<int>(out.size());
        out.push_back(std::move(left[v]));
    }
    for (auto& node : out)
        for (int& w : node.nbrs) w = remap[w];
    return out;
}

Nodes realize(const LocalSys& sys);

// One side of a split compatible with everything becomes its own subproblem;
// the other side shrinks to a placeholder positioned where its arc sat.
LocalSys restrict_system(const LocalSys& sys, const LabelSet& keep, int placeholder) {
    LocalSys out;
    out.labels.assign(keep.begin(), keep.end());
    out.labels.push_back(placeholder);
    std::sort(out.labels.begin(), out.labels.end());
    for (const LabelSet& bl : sys.blocks) {
        LabelSet in_block, in_comp;
        bool removed_touches_block = false;
        for (int x : sys.labels) {
            const bool member = bl.count(x) != 0;
            if (keep.count(x)) {
                (member ? in_block : in_comp).insert(x);
            } else if (member) {
                removed_touches_block = true;
            }
        }
        // Either side empty: the block collapses onto the placeholder.
        if (in_block.empty() || in_comp.empty()) continue;
        // Compatibility with the chosen split puts the removed side wholly
        // inside one side of bl; the placeholder joins that side.
        const LabelSet& free_side = removed_touches_block ? in_comp : in_block;
        if (free_side.size() < 2 || free_side.size() > keep.size() - 1) continue;
        out.blocks.insert(normalize_block(free_side, out.labels));
    }
    // Collapse the removed arc of the witness to the placeholder.
    const int m = static_cast<int>(sys.witness.size());
    int start = -1;
    for (int i = 0; i < m; ++i) {
        const bool cur = keep.count(sys.witness[i]) == 0;
        const bool prev = keep.count(sys.witness[(i + m - 1) % m]) == 0;
        if (cur && !prev) start = i;
    }
    if (start == -1) throw error("internal: removed side is not an arc of the witness");
    out.witness.push_back(placeholder);
    for (int i = 0; i < m; ++i) {
        const int x = sys.witness[(start + i) % m];
        if (keep.count(x)) out.witness.push_back(x);
    }
    return out;
}

Nodes star_of(const std::vector<int>& labels) {
    Nodes nodes;
    nodes.push_back({PCTree::Kind::P, 0, {}});
    for (int x : labels) {
        nodes.push_back({PCTree::Kind::Leaf, x, {0}});
        nodes[0].nbrs.push_back(static_cast<int>(nodes.size()) - 1);
    }
    return nodes;
}

Nodes cycle_of(const LocalSys& sys) {
    // Atoms: labels never separated; each atom must occupy an arc of the
    // witness and becomes one port of a single cycle.
    std::map<int, int> atom;
    {
        std::map<int, int> parent;
        std::function<int(int)> find = [&](int x) {
            return parent[x] == x ? x : parent[x] = find(parent[x]);
        };
        for (int x : sys.labels) parent[x] = x;
        for (int x : sys.labels)
            for (int y : sys.labels) {
                if (x >= y) continue;
                bool separated = false;
                for (const LabelSet& bl : sys.blocks)
                    if ((bl.count(x) != 0) != (bl.count(y) != 0)) {
                        separated = true;
                        break;
                    }
                if (!separated) parent[find(x)] = find(y);
            }
        for (int x : sys.labels) atom[x] = find(x);
    }
    const int m = static_cast<int>(sys.witness.size());
    int first = 0;
    while (first < m && atom[sys.witness[first]] == atom[sys.witness[(first + m - 1) % m]]) ++first;
    if (first == m) throw error("internal: crossing splits need at least 4 ports");
    std::vector<std::vector<int>> ports;
    std::set<int> seen;
    for (int i = 0; i < m; ++i) {
        const int x = sys.witness[(first + i) % m];
        const int a = atom[x];
        if (!ports.empty() && atom[ports.back().front()] == a) {
            ports.back().push_back(x);
            continue;
        }
        if (!seen.insert(a).second)
            throw error("internal: atom is not an arc of the witness");
        ports.push_back({x});
    }
    if (ports.size() < 4) throw error("internal: crossing splits need at least 4 ports");
    Nodes nodes;
    nodes.push_back({PCTree::Kind::C, 0, {}});
    for (const auto& port : ports) {
        int attach;
        if (port.size() == 1) {
            nodes.push_back({PCTree::Kind::Leaf, port[0], {0}});
            attach = static_cast<int>(nodes.size()) - 1;
        } else {
            nodes.push_back({PCTree::Kind::P, 0, {0}});
            attach = static_cast<int>(nodes.size()) - 1;
            for (int x : port) {
                nodes.push_back({PCTree::Kind::Leaf, x, {attach}});
                nodes[attach].nbrs.push_back(static_cast<int>(nodes.size()) - 1);
            }
        }
        nodes[0].nbrs.push_back(attach);
    }
    return nodes;
}

Nodes realize(const LocalSys& sys) {
    if (sys.blocks.empty()) return star_of(sys.labels);
    for (const LabelSet& bl : sys.blocks) {
        bool with_all = true;
        for (const LabelSet& other : sys.blocks)
            if (!compatible_local(bl, other, sys.labels)) {
                with_all = false;
                break;
            }
        if (!with_all) continue;
        const LabelSet comp = complement_of(bl, sys.labels);
        int fresh = sys.labels.back() + 1;
        const LocalSys left = restrict_system(sys, bl, fresh);
        const LocalSys right = restrict_system(sys, comp, fresh + 1);
        return splice(realize(left), fresh, realize(right), fresh + 1);
    }
    return cycle_of(sys);
}

}  // namespace

PCTree ell(const CircularSystem& s) {
    const SplitSystem closed = closure(s);
    LocalSys sys;
    for (int t = 1; t <= closed.n; ++t) sys.labels.push_back(t);
    for (const Split& sp : closed.splits()) {
        if (sp.trivial()) continue;
        const std::vector<int> taxa = block_taxa(sp);
        const LabelSet side(taxa.begin(), taxa.end());
        sys.blocks.insert(normalize_block(side, sys.labels));
    }
    sys.witness = s.witness.seq;
    const PCTree t = PCTree::from_parts(realize(sys));
    if (t.splits() != closed) throw error("internal: realization does not display the closure");
    return t;
}

bool is_outer_path(const CircularSystem& s) {
    const PCTree t = ell(s);
    const PhyloNetwork net = from_pc_tree(t);
    const auto cuts = assign_splits_to_cuts(net, s.base);

    const int V = net.node_count();
    std::map<Edge, int> load;
    for (const auto& [split, edges] : cuts)
        for (const Edge& e : edges) ++load[e];
    const int inf = 1 << 28;
    std::vector<std::vector<int>> dist(V, std::vector<int>(V, inf));
    for (int v = 0; v < V; ++v) dist[v][v] = 0;
    for (const Edge& e : net.edges) {
        const int w = load.count(e) ? load.at(e) : 0;
        dist[e.first][e.second] = std::min(dist[e.first][e.second], w);
        dist[e.second][e.first] = dist[e.first][e.second];
    }
    for (int m = 0; m < V; ++m)
        for (int u = 0; u < V; ++u)
            for (int v = 0; v < V; ++v)
                dist[u][v] = std::min(dist[u][v], dist[u][m] + dist[m][v]);

    for (int i = 1; i <= s.base.n; ++i)
        for (int j = i + 1; j <= s.base.n; ++j) {
            int separating = 0;
            for (Mask b : s.base.blocks)
                if (separates(Split{s.base.n, b}, i, j)) ++separating;
            if (dist[net.taxon_node[i]][net.taxon_node[j]] != separating) return false;
        }
    return true;
}

BigInt count_circular_systems(int n) {
    check_taxa(n);
    if (n > kSystemScanBound)
        throw bound_error("circular system count supported up to n=6, got " + std::to_string(n));
    std::vector<Mask> order_masks;
    for (const CircularOrder& c : all_circular_orders(n))
        order_masks.push_back(contiguous_nontrivial_mask(c));
    const int bits = (1 << (n - 1)) - n - 1;
    const std::uint64_t total = std::uint64_t{1} << bits;
    std::uint64_t count = 0;
    for (std::uint64_t sys = 0; sys < total; ++sys) {
        const Mask bitsys = static_cast<Mask>(sys);
        for (const Mask m : order_masks)
            if ((bitsys & ~m) == 0) {
                ++count;
                break;
            }
    }
    return BigInt(count);
}

}  // namespace splitnet
