#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "splitnet/circular.hpp"
#include "splitnet/errors.hpp"
#include "splitnet/io.hpp"
#include "splitnet/metrics.hpp"
#include "splitnet/network.hpp"
#include "splitnet/oracle.hpp"
#include "splitnet/pc_tree.hpp"
#include "splitnet/polytope.hpp"

namespace {

using namespace splitnet;

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path);
    if (!f) throw input_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

PhyloNetwork net_from(const std::string& text) {
    std::istringstream in(text);
    return read_network(in);
}

WeightedNetwork wnet_from(const std::string& text) {
    std::istringstream in(text);
    return read_weighted_network(in);
}

SplitSystem splits_from(const std::string& text) {
    std::istringstream in(text);
    return read_split_system(in);
}

WeightedSplitSystem wsplits_from(const std::string& text) {
    std::istringstream in(text);
    return read_weighted_splits(in);
}

DistanceVector metric_from(const std::string& text) {
    std::istringstream in(text);
    return read_metric(in);
}

bool looks_like_splits(const std::string& text) {
    return text.find("split:") != std::string::npos ||
           text.find("trivial=") != std::string::npos;
}

// An edge line with a colon means the file carries weights.
bool looks_weighted(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (line.rfind("edge", 0) == 0 && line.find(':') != std::string::npos) return true;
    return false;
}

CircularOrder order_from(const std::vector<int>& taxa) { return canonical_order(taxa); }

int run_validate(const std::string& text) {
    const PhyloNetwork net = looks_weighted(text) ? wnet_from(text).net : net_from(text);
    const NetworkStats stats = classify(net);
    std::cout << "nodes: " << net.node_count() << '\n';
    std::cout << "edges: " << net.edges.size() << '\n';
    std::cout << "one-nested: " << (stats.is_one_nested ? "yes" : "no") << '\n';
    std::cout << "binary: " << (stats.is_binary ? "yes" : "no") << '\n';
    std::cout << "bridges: " << stats.bridges.size() << " (nontrivial "
              << stats.nontrivial_bridges.size() << ")\n";
    std::cout << "cycles: " << stats.cycles.size() << '\n';
    if (!stats.is_one_nested) return 1;
    std::cout << "class: " << to_pc_tree(net).str() << '\n';
    return 0;
}

int run_check_kalmanson(const DistanceVector& d, const std::vector<int>& order) {
    if (!order.empty()) {
        const CircularOrder c = order_from(order);
        if (const auto bad = kalmanson_violation(d, c)) {
            const auto& q = *bad;
            std::cout << "kalmanson: no\n";
            std::cout << "violated on quadruple (" << q[0] << "," << q[1] << "," << q[2] << ","
                      << q[3] << ")\n";
            return 1;
        }
        std::cout << "kalmanson: yes\n";
        return 0;
    }
    const std::vector<CircularOrder> orders = find_kalmanson_orders(d);
    if (orders.empty()) {
        std::cout << "kalmanson: no\n";
        return 1;
    }
    std::cout << "kalmanson: yes\n";
    for (const CircularOrder& c : orders) std::cout << "order: " << format_order(c) << '\n';
    return 0;
}

int run_decompose(const DistanceVector& d, const std::vector<int>& order) {
    CircularOrder c{{}};
    if (!order.empty()) {
        c = order_from(order);
    } else {
        const std::vector<CircularOrder> orders = find_kalmanson_orders(d);
        if (orders.empty()) throw input_error("metric is not Kalmanson for any circular order");
        c = orders.front();
    }
    const WeightedSplitSystem ws = circular_decompose(d, c);
    std::cout << "# order: " << format_order(c) << '\n';
    write_weighted_splits(std::cout, ws);
    return 0;
}

void print_vector_row(const PCTree& t, const PolytopeVector& x, bool csv) {
    if (csv) {
        std::cout << '"' << t.str() << '"';
        for (const BigInt& v : x.x) std::cout << ',' << v;
    } else {
        std::cout << t.str() << " :";
        for (const BigInt& v : x.x) std::cout << ' ' << v;
    }
    std::cout << '\n';
}

void print_vector_header(int n, bool csv) {
    if (!csv) return;
    std::cout << "class";
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) std::cout << ",x" << i << j;
    std::cout << '\n';
}

int run_minimize(const DistanceVector& d, int k, bool csv) {
    const MinimizeResult res = minimize(d, d.n, k);
    if (csv) {
        std::cout << "class,value\n";
        for (const PCTree& t : res.argmin)
            std::cout << '"' << t.str() << "\"," << format_rational(res.value) << '\n';
    } else {
        std::cout << "value: " << format_rational(res.value) << '\n';
        for (const PCTree& t : res.argmin) std::cout << "class: " << t.str() << '\n';
    }
    return 0;
}

int run_verify(const std::string& suite, int n, std::uint64_t seed, int instances, bool csv) {
    OracleReport report;
    if (suite == "galois")
        report = oracle_galois_check(n, seed);
    else if (suite == "wgalois")
        report = oracle_weighted_suite(n, n, instances, seed);
    else
        report = oracle_polytope_suite(n, instances, seed);
    if (csv) {
        std::cout << "check,checked,failed\n";
        for (const CheckCounter& c : report.checks)
            std::cout << '"' << c.name << "\"," << c.checked << ',' << c.failed << '\n';
    } else {
        std::cout << report.text();
    }
    return report.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"circular split systems and 1-nested phylogenetic networks"};
    app.require_subcommand(1);

    auto* validate = app.add_subcommand("validate", "check a network file and classify it");
    std::string validate_file;
    validate->add_option("file", validate_file, "network file or -")->required();

    auto* sigma = app.add_subcommand("sigma", "split system displayed by a network");
    std::string sigma_file;
    sigma->add_option("file", sigma_file, "network file or -")->required();

    auto* ell = app.add_subcommand("ell", "smallest network displaying a split system");
    std::string ell_file;
    ell->add_option("file", ell_file, "split system file or -")->required();

    auto* ellw = app.add_subcommand("ellw", "weighted network fitted below a weighted system");
    std::string ellw_file;
    ellw->add_option("file", ellw_file, "weighted split system file or -")->required();

    auto* sw = app.add_subcommand("sw", "weighted split decomposition of a network's metric");
    std::string sw_file;
    sw->add_option("file", sw_file, "weighted network file or -")->required();

    auto* dist = app.add_subcommand("dist", "pairwise distances of a network or split system");
    std::string dist_file;
    dist->add_option("file", dist_file, "network or split system file, or -")->required();

    auto* additive = app.add_subcommand("check-additive", "test the four-point condition");
    std::string additive_file;
    additive->add_option("file", additive_file, "metric file or -")->required();

    auto* kal = app.add_subcommand("check-kalmanson", "test the circular quadruple condition");
    std::string kal_file;
    std::vector<int> kal_order;
    kal->add_option("file", kal_file, "metric file or -")->required();
    kal->add_option("--order", kal_order, "circular order as a taxa list");

    auto* dec = app.add_subcommand("decompose", "weighted circular split decomposition");
    std::string dec_file;
    std::vector<int> dec_order;
    dec->add_option("file", dec_file, "metric file or -")->required();
    dec->add_option("--order", dec_order, "circular order as a taxa list");

    auto* enumerate = app.add_subcommand("enumerate", "list 1-nested classes");
    int enum_n = 0, enum_k = -1;
    enumerate->add_option("-n", enum_n, "taxa")->required();
    enumerate->add_option("-k", enum_k, "restrict to binary classes with k nontrivial bridges");

    auto* count = app.add_subcommand("count", "sequence values");
    std::string count_what;
    int count_n = 0;
    count->add_option("what", count_what, "networks, circular, or systems")
        ->required()
        ->check(CLI::IsMember({"networks", "circular", "systems"}));
    count->add_option("-n", count_n, "taxa")->required();

    auto* vertices = app.add_subcommand("bme-vertices", "vertex vectors of the polytope");
    int vert_n = 0, vert_k = 0;
    bool vert_csv = false;
    vertices->add_option("-n", vert_n, "taxa")->required();
    vertices->add_option("-k", vert_k, "nontrivial bridges")->required();
    vertices->add_flag("--csv", vert_csv, "emit CSV");

    auto* minimize_cmd = app.add_subcommand("bme-minimize", "minimize x.d over the polytope");
    std::string min_file;
    int min_n = 0, min_k = 0;
    bool min_csv = false;
    minimize_cmd->add_option("file", min_file, "metric file or -")->required();
    minimize_cmd->add_option("-n", min_n, "taxa (cross-checked against the file)");
    minimize_cmd->add_option("-k", min_k, "nontrivial bridges")->required();
    minimize_cmd->add_flag("--csv", min_csv, "emit CSV");

    auto* face = app.add_subcommand("face", "vertices of a network's face");
    std::string face_file;
    int face_k = 0;
    face->add_option("file", face_file, "network file or -")->required();
    face->add_option("-k", face_k, "nontrivial bridges")->required();

    auto* verify = app.add_subcommand("verify", "run an oracle suite");
    std::string verify_suite;
    int verify_n = 0, verify_instances = 20;
    std::uint64_t verify_seed = 1;
    bool verify_csv = false;
    verify->add_option("suite", verify_suite, "galois, wgalois, or polytope")
        ->required()
        ->check(CLI::IsMember({"galois", "wgalois", "polytope"}));
    verify->add_option("-n", verify_n, "taxa")->required();
    verify->add_option("--seed", verify_seed, "random seed");
    verify->add_option("--instances", verify_instances, "random instances per suite");
    verify->add_flag("--csv", verify_csv, "emit CSV");

    auto* dot = app.add_subcommand("export-dot", "DOT drawing of a network");
    std::string dot_file;
    dot->add_option("file", dot_file, "network file or -")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*validate) return run_validate(slurp(validate_file));
        if (*sigma) write_split_system(std::cout, displayed_splits(net_from(slurp(sigma_file))));
        if (*ell) {
            const PCTree t = splitnet::ell(make_circular(splits_from(slurp(ell_file))));
            std::cout << "# class: " << t.str() << '\n';
            write_network(std::cout, from_pc_tree(t));
        }
        if (*ellw) {
            const WeightedNetwork wn = l_w(wsplits_from(slurp(ellw_file)));
            std::cout << "# class: " << to_pc_tree(wn.net).str() << '\n';
            write_weighted_network(std::cout, wn);
        }
        if (*sw) write_weighted_splits(std::cout, s_w(wnet_from(slurp(sw_file))));
        if (*dist) {
            const std::string text = slurp(dist_file);
            const DistanceVector d = looks_like_splits(text)
                                         ? distance_from_splits(wsplits_from(text))
                                         : distance_from_network(wnet_from(text));
            write_metric(std::cout, d);
        }
        if (*additive) {
            const bool yes = is_additive(metric_from(slurp(additive_file)));
            std::cout << "additive: " << (yes ? "yes" : "no") << '\n';
            return yes ? 0 : 1;
        }
        if (*kal) return run_check_kalmanson(metric_from(slurp(kal_file)), kal_order);
        if (*dec) return run_decompose(metric_from(slurp(dec_file)), dec_order);
        if (*enumerate) {
            if (enum_k >= 0)
                for (const PCTree& t : binary_one_nested(enum_n, enum_k))
                    std::cout << t.str() << '\n';
            else
                for (const PCTree& t : one_nested_classes(enum_n)) std::cout << t.str() << '\n';
        }
        if (*count) {
            if (count_what == "networks")
                std::cout << count_one_nested_classes(count_n) << '\n';
            else if (count_what == "circular")
                std::cout << count_circular_systems(count_n) << '\n';
            else
                std::cout << split_system_count(count_n) << '\n';
        }
        if (*vertices) {
            print_vector_header(vert_n, vert_csv);
            for (const auto& [t, x] : bme_vertices(vert_n, vert_k))
                print_vector_row(t, x, vert_csv);
        }
        if (*minimize_cmd) {
            const DistanceVector d = metric_from(slurp(min_file));
            if (min_n != 0 && min_n != d.n)
                throw input_error("metric file has n=" + std::to_string(d.n) + " but -n " +
                                  std::to_string(min_n) + " was given");
            return run_minimize(d, min_k, min_csv);
        }
        if (*face) {
            const std::string text = slurp(face_file);
            const PhyloNetwork net = looks_weighted(text) ? wnet_from(text).net : net_from(text);
            for (const PCTree& t : face_vertices(to_pc_tree(net), face_k))
                std::cout << t.str() << '\n';
        }
        if (*verify)
            return run_verify(verify_suite, verify_n, verify_seed, verify_instances, verify_csv);
        if (*dot) {
            const std::string text = slurp(dot_file);
            std::cout << (looks_weighted(text) ? to_dot(wnet_from(text)) : to_dot(net_from(text)));
        }
        return 0;
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const bound_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
