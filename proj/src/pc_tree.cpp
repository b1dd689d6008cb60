#include "splitnet/pc_tree.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "splitnet/errors.hpp"

namespace splitnet {

namespace {

// Numeric-friendly total order on serialized fragments: "9" < "10".
bool shortlex_less(const std::string& a, const std::string& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
}

using Nodes = std::vector<PCTree::Node>;

int find_pos(const std::vector<int>& list, int value) {
    for (std::size_t i = 0; i < list.size(); ++i)
        if (list[i] == value) return static_cast<int>(i);
    throw error("internal: neighbor not found");
}

std::string canon_rec(const Nodes& nodes, int v, int parent) {
    const PCTree::Node& node = nodes[v];
    if (node.kind == PCTree::Kind::Leaf) return std::to_string(node.taxon);
    std::map<int, std::string> kid;
    for (int w : node.nbrs)
        if (w != parent) kid.emplace(w, canon_rec(nodes, w, v));
    std::string out = node.kind == PCTree::Kind::P ? "(P" : "(C";
    if (node.kind == PCTree::Kind::P) {
        std::vector<std::string> parts;
        for (auto& [w, s] : kid) parts.push_back(std::move(s));
        std::sort(parts.begin(), parts.end(), shortlex_less);
        for (const auto& s : parts) out += ' ' + s;
    } else {
        const int d = static_cast<int>(node.nbrs.size());
        const int p = find_pos(node.nbrs, parent);
        std::string fwd, rev;
        for (int i = 1; i < d; ++i) {
            fwd += ' ' + kid.at(node.nbrs[(p + i) % d]);
            rev += ' ' + kid.at(node.nbrs[(p - i + d) % d]);
        }
        out += fwd < rev ? fwd : rev;  // equal lengths, plain compare is fine
    }
    return out + ")";
}

struct Parser {
    const std::string& text;
    std::size_t at = 0;

    void skip_ws() {
        while (at < text.size() && text[at] == ' ') ++at;
    }
    int read_taxon() {
        skip_ws();
        std::size_t end = at;
        while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
        if (end == at) throw input_error("expected a taxon number in: " + text);
        const int t = std::stoi(text.substr(at, end - at));
        at = end;
        return t;
    }
    int parse_subtree(Nodes& nodes, int parent) {
        skip_ws();
        if (at >= text.size()) throw input_error("truncated tree text: " + text);
        if (text[at] != '(') {
            const int taxon = read_taxon();
            nodes.push_back({PCTree::Kind::Leaf, taxon, {parent}});
            return static_cast<int>(nodes.size()) - 1;
        }
        ++at;
        skip_ws();
        if (at >= text.size() || (text[at] != 'P' && text[at] != 'C'))
            throw input_error("expected P or C tag in: " + text);
        const auto kind = text[at] == 'P' ? PCTree::Kind::P : PCTree::Kind::C;
        ++at;
        nodes.push_back({kind, 0, {parent}});
        const int id = static_cast<int>(nodes.size()) - 1;
        while (true) {
            skip_ws();
            if (at >= text.size()) throw input_error("missing ')' in: " + text);
            if (text[at] == ')') {
                ++at;
                break;
            }
            const int child = parse_subtree(nodes, id);
            nodes[id].nbrs.push_back(child);
        }
        return id;
    }
};

Nodes parse_nodes(const std::string& text) {
    Parser parser{text};
    Nodes nodes;
    const int root_taxon = parser.read_taxon();
    nodes.push_back({PCTree::Kind::Leaf, root_taxon, {}});
    const int top = parser.parse_subtree(nodes, 0);
    nodes[0].nbrs.push_back(top);
    parser.skip_ws();
    if (parser.at != text.size()) throw input_error("trailing text in tree: " + text);
    return nodes;
}

void validate_nodes(const Nodes& nodes) {
    if (nodes.empty()) throw input_error("empty tree");
    std::set<int> taxa;
    int edge_count = 0;
    for (std::size_t v = 0; v < nodes.size(); ++v) {
        const auto& node = nodes[v];
        std::set<int> distinct(node.nbrs.begin(), node.nbrs.end());
        if (distinct.size() != node.nbrs.size()) throw input_error("repeated neighbor entry");
        for (int w : node.nbrs) {
            if (w < 0 || w >= static_cast<int>(nodes.size()) || w == static_cast<int>(v))
                throw input_error("bad neighbor index");
            if (std::count(nodes[w].nbrs.begin(), nodes[w].nbrs.end(), static_cast<int>(v)) != 1)
                throw input_error("asymmetric adjacency");
        }
        edge_count += static_cast<int>(node.nbrs.size());
        switch (node.kind) {
            case PCTree::Kind::Leaf:
                if (node.nbrs.size() != 1) throw input_error("leaf of degree != 1");
                if (!taxa.insert(node.taxon).second) throw input_error("repeated taxon");
                break;
            case PCTree::Kind::P:
                if (node.nbrs.size() < 3) throw input_error("P node of degree < 3");
                break;
            case PCTree::Kind::C:
                if (node.nbrs.size() < 4) throw input_error("C node of degree < 4");
                break;
        }
    }
    edge_count /= 2;
    if (edge_count != static_cast<int>(nodes.size()) - 1) throw input_error("not a tree");
    const int n = static_cast<int>(taxa.size());
    check_taxa(n);
    for (int t = 1; t <= n; ++t)
        if (!taxa.count(t)) throw input_error("taxa must be exactly 1..n");
    // A tree with the right edge count is connected iff it has no cycle;
    // walk once to confirm.
    std::vector<bool> seen(nodes.size(), false);
    std::vector<int> queue{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!queue.empty()) {
        const int v = queue.back();
        queue.pop_back();
        for (int w : nodes[v].nbrs)
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                queue.push_back(w);
            }
    }
    if (reached != nodes.size()) throw input_error("tree is disconnected");
}

Mask leafmask_rec(const Nodes& nodes, int v, int parent, int n) {
    const auto& node = nodes[v];
    if (node.kind == PCTree::Kind::Leaf) return Mask{1} << (node.taxon - 1);
    Mask m = 0;
    for (int w : node.nbrs)
        if (w != parent) m |= leafmask_rec(nodes, w, v, n);
    return m;
}

}  // namespace

PCTree PCTree::from_parts(std::vector<Node> raw) {
    validate_nodes(raw);
    int leaf1 = -1, n = 0;
    for (std::size_t v = 0; v < raw.size(); ++v)
        if (raw[v].kind == Kind::Leaf) {
            ++n;
            if (raw[v].taxon == 1) leaf1 = static_cast<int>(v);
        }
    PCTree t;
    t.n_ = n;
    t.canon_ = "1 " + canon_rec(raw, raw[leaf1].nbrs[0], leaf1);
    t.nodes_ = parse_nodes(t.canon_);
    t.taxon_node_.assign(n + 1, -1);
    for (std::size_t v = 0; v < t.nodes_.size(); ++v)
        if (t.nodes_[v].kind == Kind::Leaf) t.taxon_node_[t.nodes_[v].taxon] = static_cast<int>(v);
    return t;
}

PCTree PCTree::parse(const std::string& text) { return from_parts(parse_nodes(text)); }

SplitSystem PCTree::splits() const {
    SplitSystem out{n_, {}};
    for (std::size_t v = 0; v < nodes_.size(); ++v)
        for (int w : nodes_[v].nbrs) {
            if (w < static_cast<int>(v)) continue;
            out.add(canonical_split(n_, leafmask_rec(nodes_, w, static_cast<int>(v), n_)));
        }
    for (std::size_t v = 0; v < nodes_.size(); ++v) {
        if (nodes_[v].kind != Kind::C) continue;
        const int d = static_cast<int>(nodes_[v].nbrs.size());
        std::vector<Mask> port(d);
        for (int i = 0; i < d; ++i)
            port[i] = leafmask_rec(nodes_, nodes_[v].nbrs[i], static_cast<int>(v), n_);
        for (int start = 0; start < d; ++start)
            for (int len = 2; len <= d - 2; ++len) {
                Mask arc = 0;
                for (int i = 0; i < len; ++i) arc |= port[(start + i) % d];
                out.add(canonical_split(n_, arc));
            }
    }
    return out;
}

namespace {

void planar_leaves(const Nodes& nodes, int v, int parent, std::vector<int>& out) {
    const auto& node = nodes[v];
    if (node.kind == PCTree::Kind::Leaf) {
        out.push_back(node.taxon);
        return;
    }
    const int d = static_cast<int>(node.nbrs.size());
    const int p = find_pos(node.nbrs, parent);
    for (int i = 1; i < d; ++i) planar_leaves(nodes, node.nbrs[(p + i) % d], v, out);
}

}  // namespace

CircularOrder PCTree::witness_order() const {
    std::vector<int> seq{1};
    const int leaf1 = taxon_node_[1];
    planar_leaves(nodes_, nodes_[leaf1].nbrs[0], leaf1, seq);
    return canonical_order(std::move(seq));
}

int PCTree::internal_edge_count() const {
    int count = 0;
    for (std::size_t v = 0; v < nodes_.size(); ++v) {
        if (nodes_[v].kind == Kind::Leaf) continue;
        for (int w : nodes_[v].nbrs)
            if (w > static_cast<int>(v) && nodes_[w].kind != Kind::Leaf) ++count;
    }
    return count;
}

bool PCTree::is_binary() const {
    for (const auto& node : nodes_)
        if (node.kind == Kind::P && node.nbrs.size() != 3) return false;
    return true;
}

PCTree to_pc_tree(const PhyloNetwork& net) {
    const NetworkStats stats = classify(net);
    if (!stats.is_one_nested) throw input_error("network is not 1-nested");

    Nodes nodes;
    const int V = net.node_count();
    std::vector<int> pc_of(V, -1);
    std::vector<bool> on_cycle(V, false);
    for (const auto& cycle : stats.cycles)
        for (int v : cycle) on_cycle[v] = true;
    for (int v = 0; v < V; ++v) {
        if (net.node_taxon[v] != 0)
            nodes.push_back({PCTree::Kind::Leaf, net.node_taxon[v], {}});
        else
            nodes.push_back({PCTree::Kind::P, 0, {}});
        pc_of[v] = static_cast<int>(nodes.size()) - 1;
    }
    std::vector<int> pc_of_cycle;
    std::set<Edge> cycle_edges;
    for (const auto& cycle : stats.cycles) {
        nodes.push_back({PCTree::Kind::C, 0, {}});
        pc_of_cycle.push_back(static_cast<int>(nodes.size()) - 1);
        const int m = static_cast<int>(cycle.size());
        for (int i = 0; i < m; ++i) {
            const int u = cycle[i], w = cycle[(i + 1) % m];
            cycle_edges.insert(Edge{std::min(u, w), std::max(u, w)});
        }
    }
    auto link = [&](int a, int b) {
        nodes[a].nbrs.push_back(b);
        nodes[b].nbrs.push_back(a);
    };
    for (const Edge& e : net.edges)
        if (!cycle_edges.count(e)) link(pc_of[e.first], pc_of[e.second]);
    for (std::size_t ci = 0; ci < stats.cycles.size(); ++ci)
        for (int v : stats.cycles[ci]) link(pc_of_cycle[ci], pc_of[v]);

    // A cycle vertex whose only other incidence is a single subtree or a
    // second cycle disappears; its two neighbors join directly, keeping the
    // C-node cyclic positions intact.
    std::vector<bool> dead(nodes.size(), false);
    for (int v = 0; v < V; ++v) {
        const int id = pc_of[v];
        if (!on_cycle[v] || nodes[id].nbrs.size() != 2) continue;
        const int a = nodes[id].nbrs[0], b = nodes[id].nbrs[1];
        nodes[a].nbrs[find_pos(nodes[a].nbrs, id)] = b;
        nodes[b].nbrs[find_pos(nodes[b].nbrs, id)] = a;
        dead[id] = true;
    }
    std::vector<int> remap(nodes.size(), -1);
    Nodes live;
    for (std::size_t v = 0; v < nodes.size(); ++v)
        if (!dead[v]) {
            remap[v] = static_cast<int>(live.size());
            live.push_back(std::move(nodes[v]));
        }
    for (auto& node : live)
        for (int& w : node.nbrs) w = remap[w];
    return PCTree::from_parts(std::move(live));
}

PhyloNetwork from_pc_tree(const PCTree& t) {
    const auto& nodes = t.nodes();
    std::vector<std::vector<int>> net_ids(nodes.size());
    int next = 0;
    for (std::size_t v = 0; v < nodes.size(); ++v) {
        const int ports = nodes[v].kind == PCTree::Kind::C ? static_cast<int>(nodes[v].nbrs.size()) : 1;
        for (int i = 0; i < ports; ++i) net_ids[v].push_back(next++);
    }
    auto port_id = [&](int v, int facing) {
        if (nodes[v].kind != PCTree::Kind::C) return net_ids[v][0];
        return net_ids[v][find_pos(nodes[v].nbrs, facing)];
    };
    std::vector<std::pair<int, int>> edges;
    for (std::size_t v = 0; v < nodes.size(); ++v) {
        for (int w : nodes[v].nbrs)
            if (w > static_cast<int>(v))
                edges.emplace_back(port_id(static_cast<int>(v), w), port_id(w, static_cast<int>(v)));
        if (nodes[v].kind == PCTree::Kind::C) {
            const int d = static_cast<int>(nodes[v].nbrs.size());
            for (int i = 0; i < d; ++i) edges.emplace_back(net_ids[v][i], net_ids[v][(i + 1) % d]);
        }
    }
    std::map<int, int> labels;
    for (std::size_t v = 0; v < nodes.size(); ++v)
        if (nodes[v].kind == PCTree::Kind::Leaf) labels.emplace(net_ids[v][0], nodes[v].taxon);
    return validate_network(t.n(), edges, labels);
}

PosetRelation pc_poset_compare(const PCTree& a, const PCTree& b) {
    return poset_compare(a.splits(), b.splits());
}

namespace {

// Leaf-labeled trees with all internal degrees >= 3, leaves 0..n-1 holding
// taxa 1..n, internal nodes after the leaves. Removing the last leaf gives a
// unique predecessor, so the recursion emits every shape exactly once.
void gen_shapes(int n, const std::function<void(const Nodes&)>& visit) {
    if (n == 3) {
        Nodes star(4);
        for (int t = 1; t <= 3; ++t) star[t - 1] = {PCTree::Kind::Leaf, t, {3}};
        star[3] = {PCTree::Kind::P, 0, {0, 1, 2}};
        visit(star);
        return;
    }
    gen_shapes(n - 1, [&](const Nodes& prev) {
        // Shift internal ids up by one to make room for leaf n at id n-1.
        Nodes base(prev.size() + 1);
        auto shift = [n](int id) { return id >= n - 1 ? id + 1 : id; };
        for (std::size_t v = 0; v < prev.size(); ++v) {
            base[shift(static_cast<int>(v))] = prev[v];
            for (int& w : base[shift(static_cast<int>(v))].nbrs) w = shift(w);
        }
        base[n - 1] = {PCTree::Kind::Leaf, n, {}};

        for (std::size_t v = n; v < base.size(); ++v) {
            Nodes grown = base;
            grown[n - 1].nbrs = {static_cast<int>(v)};
            grown[v].nbrs.push_back(n - 1);
            visit(grown);
        }
        for (std::size_t v = 0; v < base.size(); ++v)
            for (int w : base[v].nbrs) {
                if (w < static_cast<int>(v) || v == static_cast<std::size_t>(n - 1)) continue;
                Nodes grown = base;
                const int mid = static_cast<int>(grown.size());
                grown.push_back({PCTree::Kind::P, 0, {static_cast<int>(v), w, n - 1}});
                grown[v].nbrs[find_pos(grown[v].nbrs, w)] = mid;
                grown[w].nbrs[find_pos(grown[w].nbrs, static_cast<int>(v))] = mid;
                grown[n - 1].nbrs = {mid};
                visit(grown);
            }
    });
}

// All cyclic arrangements of d ports up to rotation and reflection, as
// permuted neighbor lists anchored at the first entry.
std::vector<std::vector<int>> cyclic_arrangements(const std::vector<int>& nbrs) {
    const int d = static_cast<int>(nbrs.size());
    std::vector<int> idx;
    for (int i = 1; i < d; ++i) idx.push_back(i);
    std::vector<std::vector<int>> out;
    do {
        if (idx.front() > idx.back()) continue;
        std::vector<int> arranged{nbrs[0]};
        for (int i : idx) arranged.push_back(nbrs[i]);
        out.push_back(std::move(arranged));
    } while (std::next_permutation(idx.begin(), idx.end()));
    return out;
}

void expand_tags(Nodes& shape, const std::vector<int>& internals, std::size_t at, bool allow_p_high,
                 const std::function<void(const PCTree&)>& visit) {
    if (at == internals.size()) {
        visit(PCTree::from_parts(shape));
        return;
    }
    const int v = internals[at];
    const int d = static_cast<int>(shape[v].nbrs.size());
    if (d == 3 || allow_p_high) {
        shape[v].kind = PCTree::Kind::P;
        expand_tags(shape, internals, at + 1, allow_p_high, visit);
    }
    if (d >= 4) {
        const std::vector<int> original = shape[v].nbrs;
        shape[v].kind = PCTree::Kind::C;
        for (auto& arrangement : cyclic_arrangements(original)) {
            shape[v].nbrs = arrangement;
            expand_tags(shape, internals, at + 1, allow_p_high, visit);
        }
        shape[v].kind = PCTree::Kind::P;
        shape[v].nbrs = original;
    }
}

}  // namespace

void for_each_binary_one_nested(int n, int k, const std::function<void(const PCTree&)>& visit) {
    check_taxa(n);
    if (n > 9) throw bound_error("binary enumeration supported up to n=9, got " + std::to_string(n));
    if (k < 0 || k > n - 3)
        throw input_error("bridge count must lie in 0..n-3, got " + std::to_string(k));
    gen_shapes(n, [&](const Nodes& shape) {
        std::vector<int> internals;
        for (std::size_t v = 0; v < shape.size(); ++v)
            if (shape[v].kind != PCTree::Kind::Leaf) internals.push_back(static_cast<int>(v));
        if (static_cast<int>(internals.size()) != k + 1) return;
        Nodes work = shape;
        expand_tags(work, internals, 0, false, visit);
    });
}

std::vector<PCTree> binary_one_nested(int n, int k) {
    std::vector<PCTree> out;
    for_each_binary_one_nested(n, k, [&](const PCTree& t) { out.push_back(t); });
    std::sort(out.begin(), out.end());
    return out;
}

BigInt binary_one_nested_count(int n, int k) {
    check_taxa(n);
    if (k < 0 || k > n - 3)
        throw input_error("bridge count must lie in 0..n-3, got " + std::to_string(k));
    BigInt binom = 1;
    for (int i = 0; i < k; ++i) binom = binom * (n - 3 - i) / (i + 1);
    BigInt numerator = 1;
    for (int i = 2; i <= n + k - 1; ++i) numerator *= i;
    BigInt denominator = 1;
    for (int i = 2; i <= 2 * k + 2; i += 2) denominator *= i;
    return binom * numerator / denominator;
}

const std::vector<PCTree>& one_nested_classes(int n) {
    check_taxa(n);
    if (n > kSystemScanBound)
        throw bound_error("class enumeration supported up to n=6, got " + std::to_string(n));
    static std::map<int, std::vector<PCTree>> cache;
    auto [it, fresh] = cache.try_emplace(n);
    if (fresh) {
        gen_shapes(n, [&](const Nodes& shape) {
            std::vector<int> internals;
            for (std::size_t v = 0; v < shape.size(); ++v)
                if (shape[v].kind != PCTree::Kind::Leaf) internals.push_back(static_cast<int>(v));
            Nodes work = shape;
            expand_tags(work, internals, 0, true,
                        [&](const PCTree& t) { it->second.push_back(t); });
        });
        std::sort(it->second.begin(), it->second.end());
    }
    return it->second;
}

BigInt count_one_nested_classes(int n) { return BigInt(one_nested_classes(n).size()); }

}  // namespace splitnet
