#include "splitnet/io.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <vector>

#include "splitnet/errors.hpp"

namespace splitnet {

namespace {

// Lines with comments stripped and whitespace trimmed; blanks skipped.
std::vector<std::string> content_lines(std::istream& in) {
    std::vector<std::string> lines;
    std::string raw;
    while (std::getline(in, raw)) {
        const auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        const auto first = raw.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto last = raw.find_last_not_of(" \t\r");
        lines.push_back(raw.substr(first, last - first + 1));
    }
    return lines;
}

int parse_header(const std::vector<std::string>& lines) {
    if (lines.empty() || lines[0].rfind("n=", 0) != 0)
        throw input_error("expected header line n=<taxa>");
    try {
        const int n = std::stoi(lines[0].substr(2));
        check_taxa(n);
        return n;
    } catch (const std::invalid_argument&) {
        throw input_error("bad taxon count in header: " + lines[0]);
    } catch (const std::out_of_range&) {
        throw input_error("bad taxon count in header: " + lines[0]);
    }
}

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> toks;
    std::string t;
    while (ss >> t) toks.push_back(t);
    return toks;
}

int parse_int(const std::string& tok, const std::string& what) {
    try {
        size_t used = 0;
        const int value = std::stoi(tok, &used);
        if (used != tok.size()) throw input_error("bad " + what + ": " + tok);
        return value;
    } catch (const std::invalid_argument&) {
        throw input_error("bad " + what + ": " + tok);
    } catch (const std::out_of_range&) {
        throw input_error("bad " + what + ": " + tok);
    }
}

struct SplitLine {
    Split split;
    std::optional<Rat> weight;
};

struct SplitsFile {
    int n = 0;
    bool trivial_implied = true;
    std::vector<SplitLine> listed;
};

SplitsFile parse_splits_file(std::istream& in) {
    const std::vector<std::string> lines = content_lines(in);
    SplitsFile file;
    file.n = parse_header(lines);
    size_t at = 1;
    if (at < lines.size() && lines[at] == "trivial=absent") {
        file.trivial_implied = false;
        ++at;
    }
    std::set<Mask> seen;
    for (; at < lines.size(); ++at) {
        const auto toks = tokens_of(lines[at]);
        if (toks.empty() || toks[0] != "split:")
            throw input_error("unrecognized line: " + lines[at]);
        std::vector<int> taxa;
        std::optional<Rat> weight;
        for (size_t i = 1; i < toks.size(); ++i) {
            if (toks[i] == ":") {
                if (i + 1 != toks.size() - 1) throw input_error("bad weight on: " + lines[at]);
                weight = parse_rational(toks[i + 1]);
                break;
            }
            taxa.push_back(parse_int(toks[i], "taxon"));
        }
        const Split sp = canonical_split(file.n, taxa);
        if (!seen.insert(sp.block).second)
            throw input_error("split listed twice: " + lines[at]);
        file.listed.push_back({sp, weight});
    }
    return file;
}

}  // namespace

SplitSystem read_split_system(std::istream& in) {
    const SplitsFile file = parse_splits_file(in);
    SplitSystem s{file.n, {}};
    if (file.trivial_implied) s = s.with_trivial();
    for (const SplitLine& line : file.listed) {
        if (line.weight && *line.weight == 0) continue;
        if (line.weight && *line.weight < 0)
            throw input_error("negative split weight on " + format_split(line.split));
        s.add(line.split);
    }
    return s;
}

WeightedSplitSystem read_weighted_splits(std::istream& in) {
    const SplitsFile file = parse_splits_file(in);
    WeightedSplitSystem ws{file.n, {}};
    for (const SplitLine& line : file.listed) {
        const Rat w = line.weight.value_or(Rat(1));
        if (w < 0) throw input_error("negative split weight on " + format_split(line.split));
        if (w > 0) ws.weights.emplace(line.split, w);
    }
    if (file.trivial_implied)
        for (int t = 1; t <= file.n; ++t)
            ws.weights.try_emplace(canonical_split(file.n, Mask{1} << (t - 1)), 1);
    return ws;
}

void write_split_system(std::ostream& out, const SplitSystem& s) {
    out << "n=" << s.n << '\n';
    const bool implied = s.has_all_trivial();
    if (!implied) out << "trivial=absent\n";
    for (const Split& sp : s.splits()) {
        if (implied && sp.trivial()) continue;
        out << "split:";
        for (int t : block_taxa(sp)) out << ' ' << t;
        out << '\n';
    }
}

void write_weighted_splits(std::ostream& out, const WeightedSplitSystem& ws) {
    out << "n=" << ws.n << '\n';
    out << "trivial=absent\n";
    for (const auto& [sp, w] : ws.weights) {
        out << "split:";
        for (int t : block_taxa(sp)) out << ' ' << t;
        out << " : " << format_rational(w) << '\n';
    }
}

namespace {

struct NetworkFile {
    int n = 0;
    std::set<int> declared;
    std::vector<std::pair<int, int>> raw_edges;
    std::map<int, int> labels;
    std::map<std::pair<int, int>, Rat> raw_weights;
};

NetworkFile parse_network_file(std::istream& in) {
    const std::vector<std::string> lines = content_lines(in);
    NetworkFile file;
    file.n = parse_header(lines);
    for (size_t at = 1; at < lines.size(); ++at) {
        const auto toks = tokens_of(lines[at]);
        if (toks[0] == "node" && toks.size() == 2) {
            file.declared.insert(parse_int(toks[1], "node id"));
        } else if (toks[0] == "leaf" && toks.size() == 3) {
            const int id = parse_int(toks[1], "node id");
            const int taxon = parse_int(toks[2], "taxon");
            file.declared.insert(id);
            if (!file.labels.emplace(id, taxon).second)
                throw input_error("node labeled twice: " + lines[at]);
        } else if (toks[0] == "edge" && (toks.size() == 3 || toks.size() == 5)) {
            const int u = parse_int(toks[1], "node id");
            const int v = parse_int(toks[2], "node id");
            Rat w = 1;
            if (toks.size() == 5) {
                if (toks[3] != ":") throw input_error("unrecognized line: " + lines[at]);
                w = parse_rational(toks[4]);
            }
            file.declared.insert(u);
            file.declared.insert(v);
            file.raw_edges.emplace_back(u, v);
            const std::pair<int, int> key{std::min(u, v), std::max(u, v)};
            if (!file.raw_weights.emplace(key, w).second)
                throw input_error("edge listed twice: " + lines[at]);
        } else {
            throw input_error("unrecognized line: " + lines[at]);
        }
    }
    return file;
}

// validate_network compresses caller ids in increasing order; replicate that
// to key edge weights by compressed endpoints.
std::map<int, int> id_index(const NetworkFile& file) {
    std::set<int> ids;
    for (const auto& [u, v] : file.raw_edges) {
        ids.insert(u);
        ids.insert(v);
    }
    for (int id : file.declared)
        if (ids.count(id) == 0)
            throw input_error("node " + std::to_string(id) + " has no incident edges");
    std::map<int, int> index;
    for (int id : ids) index.emplace(id, static_cast<int>(index.size()));
    return index;
}

}  // namespace

PhyloNetwork read_network(std::istream& in) {
    const NetworkFile file = parse_network_file(in);
    id_index(file);
    return validate_network(file.n, file.raw_edges, file.labels);
}

WeightedNetwork read_weighted_network(std::istream& in) {
    const NetworkFile file = parse_network_file(in);
    const std::map<int, int> index = id_index(file);
    const PhyloNetwork net = validate_network(file.n, file.raw_edges, file.labels);
    std::map<Edge, Rat> weights;
    for (const auto& [key, w] : file.raw_weights) {
        int lo = index.at(key.first), hi = index.at(key.second);
        if (lo > hi) std::swap(lo, hi);
        weights.emplace(Edge{lo, hi}, w);
    }
    return weighted(net, weights);
}

void write_network(std::ostream& out, const PhyloNetwork& net) {
    out << "n=" << net.n << '\n';
    for (int v = 0; v < net.node_count(); ++v) {
        if (net.node_taxon[v] != 0)
            out << "leaf " << v << ' ' << net.node_taxon[v] << '\n';
        else
            out << "node " << v << '\n';
    }
    for (const Edge& e : net.edges) out << "edge " << e.first << ' ' << e.second << '\n';
}

void write_weighted_network(std::ostream& out, const WeightedNetwork& wn) {
    out << "n=" << wn.net.n << '\n';
    for (int v = 0; v < wn.net.node_count(); ++v) {
        if (wn.net.node_taxon[v] != 0)
            out << "leaf " << v << ' ' << wn.net.node_taxon[v] << '\n';
        else
            out << "node " << v << '\n';
    }
    for (const Edge& e : wn.net.edges)
        out << "edge " << e.first << ' ' << e.second << " : "
            << format_rational(wn.weights.at(e)) << '\n';
}

DistanceVector read_metric(std::istream& in) {
    const std::vector<std::string> lines = content_lines(in);
    const int n = parse_header(lines);
    std::vector<std::string> toks;
    for (size_t at = 1; at < lines.size(); ++at)
        for (const std::string& t : tokens_of(lines[at])) toks.push_back(t);
    const size_t want = static_cast<size_t>(n) * (n - 1) / 2;
    if (toks.size() != want)
        throw input_error("expected " + std::to_string(want) + " distances, got " +
                          std::to_string(toks.size()));
    DistanceVector d = zero_distance(n);
    size_t at = 0;
    for (int i = 2; i <= n; ++i)
        for (int j = 1; j < i; ++j) d.at(j, i) = parse_rational(toks[at++]);
    return d;
}

void write_metric(std::ostream& out, const DistanceVector& d) {
    out << "n=" << d.n << '\n';
    for (int i = 2; i <= d.n; ++i) {
        for (int j = 1; j < i; ++j) out << (j > 1 ? " " : "") << format_rational(d.at(j, i));
        out << '\n';
    }
}

namespace {

std::string dot_text(const PhyloNetwork& net, const std::map<Edge, Rat>* weights) {
    std::ostringstream out;
    out << "graph splitnet {\n";
    for (int v = 0; v < net.node_count(); ++v) {
        if (net.node_taxon[v] != 0)
            out << "  v" << v << " [shape=box, label=\"" << net.node_taxon[v] << "\"];\n";
        else
            out << "  v" << v << " [shape=point];\n";
    }
    for (const Edge& e : net.edges) {
        out << "  v" << e.first << " -- v" << e.second;
        if (weights) out << " [label=\"" << format_rational(weights->at(e)) << "\"]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace

std::string to_dot(const PhyloNetwork& net) { return dot_text(net, nullptr); }

std::string to_dot(const WeightedNetwork& wn) { return dot_text(wn.net, &wn.weights); }

}  // namespace splitnet
