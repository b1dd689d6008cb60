#include "splitnet/io.hpp"

#include <doctest.h>

#include <sstream>

#include "splitnet/errors.hpp"
#include "splitnet/pc_tree.hpp"

using namespace splitnet;

namespace {

SplitSystem splits_of(const char* s) {
    std::istringstream in(s);
    return read_split_system(in);
}

WeightedSplitSystem weighted_splits_of(const char* s) {
    std::istringstream in(s);
    return read_weighted_splits(in);
}

PhyloNetwork network_of(const std::string& s) {
    std::istringstream in(s);
    return read_network(in);
}

WeightedNetwork weighted_network_of(const std::string& s) {
    std::istringstream in(s);
    return read_weighted_network(in);
}

DistanceVector metric_of(const std::string& s) {
    std::istringstream in(s);
    return read_metric(in);
}

template <typename T, typename W>
std::string written(const T& value, W writer) {
    std::ostringstream out;
    writer(out, value);
    return out.str();
}

}  // namespace

TEST_CASE("split system files") {
    const SplitSystem s = splits_of("n=4\nsplit: 1 2\n");
    CHECK(s.size() == 5);
    CHECK(s.has_all_trivial());
    CHECK(s.contains(canonical_split(4, std::vector<int>{1, 2})));
    CHECK(written(s, write_split_system) == "n=4\nsplit: 1 2\n");

    // Canonicalization flips a block containing taxon n.
    CHECK(splits_of("n=4\nsplit: 3 4\n") == s);

    const SplitSystem partial = splits_of("n=4\ntrivial=absent\nsplit: 1\nsplit: 1 2\n");
    CHECK(partial.size() == 2);
    CHECK_FALSE(partial.has_all_trivial());
    CHECK(written(partial, write_split_system) == "n=4\ntrivial=absent\nsplit: 1\nsplit: 1 2\n");

    const WeightedSplitSystem ws = weighted_splits_of("n=4\nsplit: 1 2 : 3/2\nsplit: 1 3 : 0\n");
    CHECK(ws.weights.size() == 5);
    CHECK(ws.weights.at(canonical_split(4, std::vector<int>{1, 2})) == Rat(3) / 2);
    CHECK(ws.weights.at(canonical_split(4, std::vector<int>{1})) == 1);
    // Zero-weight lines vanish; rereading the written form round-trips.
    CHECK(weighted_splits_of(written(ws, write_weighted_splits).c_str()) == ws);

    CHECK(weighted_splits_of("n=4\nsplit: 1 2 : 21.5\n")
              .weights.at(canonical_split(4, std::vector<int>{1, 2})) == Rat(43) / 2);

    CHECK_THROWS_AS(splits_of("split: 1 2\n"), input_error);
    CHECK_THROWS_AS(splits_of("n=4\nsplit: 1 5\n"), input_error);
    CHECK_THROWS_AS(splits_of("n=4\nsplit: 1 2 3 4\n"), input_error);
    CHECK_THROWS_AS(splits_of("n=4\nsplit: 1 2\nsplit: 3 4\n"), input_error);
    CHECK_THROWS_AS(splits_of("n=4\nsplit: 1 2 : -1\n"), input_error);
    CHECK_THROWS_AS(splits_of("n=4\nwat: 1\n"), input_error);
    CHECK_THROWS_AS(splits_of("n=99\nsplit: 1 2\n"), bound_error);
}

TEST_CASE("network files") {
    const std::string quartet =
        "n=4\n"
        "leaf 1 1\nleaf 2 2\nleaf 3 3\nleaf 4 4\n"
        "node 10\nnode 20\n"
        "edge 10 20\nedge 10 1\nedge 10 2\nedge 20 3\nedge 20 4\n";
    const PhyloNetwork net = network_of(quartet);
    CHECK(to_pc_tree(net).str() == "1 (P 2 (P 3 4))");

    // Comments and blank lines are ignored.
    CHECK(to_pc_tree(network_of("n=4  # taxa\n\nleaf 1 1\nleaf 2 2\nleaf 3 3\nleaf 4 4\n"
                                "node 10\nnode 20\nedge 10 20\nedge 10 1\nedge 10 2\n"
                                "edge 20 3\nedge 20 4\n"))
              .str() == "1 (P 2 (P 3 4))");

    CHECK(network_of(written(net, write_network)).edges == net.edges);

    const WeightedNetwork wn =
        weighted_network_of("n=4\nleaf 1 1\nleaf 2 2\nleaf 3 3\nleaf 4 4\n"
                            "node 10\nnode 20\nedge 10 20 : 5/2\nedge 10 1\nedge 10 2\n"
                            "edge 20 3\nedge 20 4 : 0.5\n");
    CHECK(total_weight(s_w(wn)) == 6);
    CHECK(s_w(wn).weights.at(canonical_split(4, std::vector<int>{1, 2})) == Rat(5) / 2);
    CHECK(s_w(wn).weights.at(canonical_split(4, std::vector<int>{4})) == Rat(1) / 2);
    const WeightedNetwork back = weighted_network_of(written(wn, write_weighted_network));
    CHECK(back.weights == wn.weights);
    CHECK(distance_from_network(back) == distance_from_network(wn));

    CHECK_THROWS_AS(network_of("n=4\nnode 9\nleaf 1 1\nleaf 2 2\nleaf 3 3\nleaf 4 4\n"
                               "node 10\nedge 10 1\nedge 10 2\nedge 10 3\nedge 10 4\n"),
                    input_error);
    CHECK_THROWS_AS(network_of("n=4\nedge 1 2\nedge 1 2\n"), input_error);
    CHECK_THROWS_AS(network_of("n=4\nleaf 1 1\nleaf 1 2\n"), input_error);
    CHECK_THROWS_AS(network_of("n=4\nedge 1 two\n"), input_error);
}

TEST_CASE("metric files") {
    const DistanceVector d = metric_of("n=4\n1\n2 3\n3 4 1/2\n");
    CHECK(d.at(1, 2) == 1);
    CHECK(d.at(2, 3) == 3);
    CHECK(d.at(3, 4) == Rat(1) / 2);
    CHECK(written(d, write_metric) == "n=4\n1\n2 3\n3 4 1/2\n");

    // Row structure is free-form; only the count and order matter.
    CHECK(metric_of("n=4\n1 2 3 3 4 1/2\n") == d);

    CHECK_THROWS_AS(metric_of("n=4\n1\n2 3\n"), input_error);
    CHECK_THROWS_AS(metric_of("n=4\n1\n2 3\n3 4 1/2 9\n"), input_error);
    CHECK_THROWS_AS(metric_of("n=4\n1\n2 x\n3 4 1/2\n"), input_error);
}

TEST_CASE("dot export") {
    const PhyloNetwork net = from_pc_tree(PCTree::parse("1 (C 2 3 4)"));
    const std::string dot = to_dot(net);
    CHECK(dot.find("graph splitnet {") == 0);
    CHECK(dot.find("[shape=box, label=\"1\"]") != std::string::npos);
    CHECK(dot.find("[shape=point]") != std::string::npos);
    CHECK(dot.find(" -- ") != std::string::npos);
    CHECK(dot.find("label=\"1/2\"") == std::string::npos);

    std::map<Edge, Rat> w;
    for (const Edge& e : net.edges) w[e] = Rat(1) / 2;
    const std::string wdot = to_dot(weighted(net, w));
    CHECK(wdot.find("label=\"1/2\"") != std::string::npos);
    CHECK(wdot == to_dot(weighted(net, w)));
}
