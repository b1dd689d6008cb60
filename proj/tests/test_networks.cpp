#include <doctest.h>

#include <set>

#include "splitnet/errors.hpp"
#include "splitnet/network.hpp"
#include "splitnet/pc_tree.hpp"

using namespace splitnet;

namespace {

PhyloNetwork quartet_12_34() {
    return validate_network(4, {{1, 5}, {2, 5}, {5, 6}, {6, 3}, {6, 4}},
                            {{1, 1}, {2, 2}, {3, 3}, {4, 4}});
}

PhyloNetwork square(std::vector<int> taxa_in_order) {
    // 4-cycle 10-20-30-40 with pendant leaves in the given cyclic arrangement.
    std::vector<std::pair<int, int>> edges{{10, 20}, {20, 30}, {30, 40}, {40, 10}};
    std::map<int, int> labels;
    const int ports[4] = {10, 20, 30, 40};
    for (int i = 0; i < 4; ++i) {
        edges.emplace_back(ports[i], i + 1);
        labels.emplace(i + 1, taxa_in_order[i]);
    }
    return validate_network(4, edges, labels);
}

PhyloNetwork shared_node_double_square() {
    // Two 4-cycles meeting at node 100; taxa 1,2,6 around the first,
    // 3,4,5 around the second.
    std::vector<std::pair<int, int>> edges{{100, 12}, {12, 11}, {11, 16}, {16, 100},
                                           {100, 23}, {23, 24}, {24, 25}, {25, 100},
                                           {11, 1},   {12, 2},  {16, 6},  {23, 3},
                                           {24, 4},   {25, 5}};
    return validate_network(6, edges, {{1, 1}, {2, 2}, {3, 3}, {4, 4}, {5, 5}, {6, 6}});
}

PhyloNetwork bridged_double_square() {
    // Same classes as above with the meeting point pulled apart into a bridge.
    std::vector<std::pair<int, int>> edges{{101, 12}, {12, 11}, {11, 16}, {16, 101},
                                           {102, 23}, {23, 24}, {24, 25}, {25, 102},
                                           {101, 102}, {11, 1},  {12, 2},  {16, 6},
                                           {23, 3},   {24, 4},  {25, 5}};
    return validate_network(6, edges, {{1, 1}, {2, 2}, {3, 3}, {4, 4}, {5, 5}, {6, 6}});
}

}  // namespace

TEST_CASE("network validation") {
    CHECK_NOTHROW(validate_network(4, {{1, 5}, {2, 5}, {3, 5}, {4, 5}},
                                   {{1, 1}, {2, 2}, {3, 3}, {4, 4}}));
    CHECK_THROWS_AS(validate_network(3, {{1, 4}, {4, 5}, {5, 2}, {5, 3}},
                                     {{1, 1}, {2, 2}, {3, 3}}),
                    input_error);  // node 4 has degree 2
    CHECK_THROWS_AS(validate_network(4, {{1, 2}, {3, 4}}, {{1, 1}, {2, 2}, {3, 3}, {4, 4}}),
                    input_error);  // disconnected
    CHECK_THROWS_AS(validate_network(3, {{1, 4}, {2, 4}, {3, 4}, {3, 4}},
                                     {{1, 1}, {2, 2}, {3, 3}}),
                    input_error);  // multi-edge
    CHECK_THROWS_AS(validate_network(3, {{1, 2}, {2, 3}, {2, 4}, {4, 5}, {4, 6}},
                                     {{1, 1}, {2, 2}, {3, 3}}),
                    input_error);  // labeled node with degree > 1
}

TEST_CASE("classification of small networks") {
    const auto quartet = quartet_12_34();
    const auto qs = classify(quartet);
    CHECK(qs.bridges.size() == 5);
    CHECK(qs.nontrivial_bridges.size() == 1);
    CHECK(qs.cycles.empty());
    CHECK(qs.is_one_nested);
    CHECK(qs.is_binary);

    const auto box = square({1, 2, 3, 4});
    const auto bs = classify(box);
    CHECK(bs.bridges.size() == 4);
    CHECK(bs.nontrivial_bridges.empty());
    REQUIRE(bs.cycles.size() == 1);
    CHECK(bs.cycles[0].size() == 4);
    CHECK(bs.is_one_nested);
    CHECK(bs.is_binary);

    const auto triangle = validate_network(3, {{10, 20}, {20, 30}, {30, 10}, {10, 1}, {20, 2}, {30, 3}},
                                           {{1, 1}, {2, 2}, {3, 3}});
    CHECK_FALSE(classify(triangle).is_one_nested);
    CHECK_THROWS_AS(displayed_splits(triangle), input_error);

    const auto star = validate_network(4, {{1, 5}, {2, 5}, {3, 5}, {4, 5}},
                                       {{1, 1}, {2, 2}, {3, 3}, {4, 4}});
    CHECK_FALSE(classify(star).is_binary);
    CHECK(classify(star).is_one_nested);
}

TEST_CASE("displayed splits and consistent orders") {
    const auto quartet = quartet_12_34();
    SplitSystem qsplits = displayed_splits(quartet);
    CHECK(qsplits.size() == 5);
    CHECK(qsplits.has_all_trivial());
    CHECK(qsplits.contains(canonical_split(4, std::vector<int>{1, 2})));
    CHECK(consistent_orders_network(quartet).size() == 2);

    const auto box = square({1, 2, 3, 4});
    SplitSystem bsplits = displayed_splits(box);
    CHECK(bsplits.size() == 6);
    CHECK(bsplits.contains(canonical_split(4, std::vector<int>{1, 2})));
    CHECK(bsplits.contains(canonical_split(4, std::vector<int>{2, 3})));
    const auto orders = consistent_orders_network(box);
    REQUIRE(orders.size() == 1);
    CHECK(orders[0].seq == std::vector<int>{1, 2, 3, 4});

    const auto star = validate_network(4, {{1, 5}, {2, 5}, {3, 5}, {4, 5}},
                                       {{1, 1}, {2, 2}, {3, 3}, {4, 4}});
    CHECK(displayed_splits(star).size() == 4);
    CHECK(consistent_orders_network(star).size() == 3);

    CHECK(network_poset_compare(star, quartet) == PosetRelation::LessThan);
    CHECK(network_poset_compare(box, quartet) == PosetRelation::GreaterThan);
    const auto other = validate_network(4, {{1, 5}, {3, 5}, {5, 6}, {6, 2}, {6, 4}},
                                        {{1, 1}, {2, 2}, {3, 3}, {4, 4}});
    CHECK(network_poset_compare(quartet, other) == PosetRelation::Incomparable);
}

TEST_CASE("pc tree canonical forms") {
    CHECK(to_pc_tree(quartet_12_34()).str() == "1 (P 2 (P 3 4))");
    CHECK(to_pc_tree(square({1, 2, 3, 4})).str() == "1 (C 2 3 4)");
    const auto star5 = validate_network(5, {{1, 9}, {2, 9}, {3, 9}, {4, 9}, {5, 9}},
                                        {{1, 1}, {2, 2}, {3, 3}, {4, 4}, {5, 5}});
    CHECK(to_pc_tree(star5).str() == "1 (P 2 3 4 5)");

    CHECK(PCTree::parse("1 (P 3 2)").str() == "1 (P 2 3)");
    CHECK(PCTree::parse("1 (C 4 3 2)") == PCTree::parse("1 (C 2 3 4)"));
    CHECK_THROWS_AS(PCTree::parse("1 (C 2 3)"), input_error);
    CHECK_THROWS_AS(PCTree::parse("1 (P 2)"), input_error);
    CHECK_THROWS_AS(PCTree::parse("1 (P 2 3"), input_error);

    const PCTree box = to_pc_tree(square({1, 2, 3, 4}));
    CHECK(box.internal_edge_count() == 0);
    CHECK(box.is_binary());
    CHECK(box.witness_order().seq == std::vector<int>{1, 2, 3, 4});
    CHECK(box.splits() == displayed_splits(square({1, 2, 3, 4})));

    const PCTree quartet = to_pc_tree(quartet_12_34());
    CHECK(quartet.internal_edge_count() == 1);
    CHECK(quartet.splits() == displayed_splits(quartet_12_34()));
    CHECK(pc_poset_compare(box, quartet) == PosetRelation::GreaterThan);
}

TEST_CASE("shared cycle node matches its bridged form") {
    const auto shared = shared_node_double_square();
    const auto bridged = bridged_double_square();
    CHECK(classify(shared).is_one_nested);
    CHECK(classify(shared).cycles.size() == 2);
    CHECK(displayed_splits(shared) == displayed_splits(bridged));
    const PCTree t = to_pc_tree(shared);
    CHECK(t == to_pc_tree(bridged));
    CHECK(t.str() == "1 (C 2 (C 3 4 5) 6)");
    CHECK(displayed_splits(shared).contains(canonical_split(6, std::vector<int>{3, 4, 5})));
    CHECK(t.internal_edge_count() == 1);
}

TEST_CASE("pc tree round trips through networks") {
    for (const char* text : {"1 (P 2 (P 3 4))", "1 (C 2 3 4)", "1 (P 2 3 4 5)",
                             "1 (C 2 (C 3 4 5) 6)", "1 (C 2 (P 3 4) (C 5 6 7))"}) {
        const PCTree t = PCTree::parse(text);
        const PhyloNetwork net = from_pc_tree(t);
        CHECK(to_pc_tree(net) == t);
        CHECK(displayed_splits(net) == t.splits());
    }
}

TEST_CASE("binary enumeration counts") {
    CHECK(binary_one_nested_count(4, 0) == 3);
    CHECK(binary_one_nested_count(4, 1) == 3);
    CHECK(binary_one_nested_count(5, 0) == 12);
    CHECK(binary_one_nested_count(5, 1) == 30);
    CHECK(binary_one_nested_count(5, 2) == 15);
    CHECK(binary_one_nested_count(3, 0) == 1);
    for (int n = 3; n <= 6; ++n)
        for (int k = 0; k <= n - 3; ++k) {
            const auto all = binary_one_nested(n, k);
            CHECK(BigInt(all.size()) == binary_one_nested_count(n, k));
            std::set<std::string> distinct;
            for (const PCTree& t : all) {
                distinct.insert(t.str());
                CHECK(t.is_binary());
                CHECK(t.internal_edge_count() == k);
            }
            CHECK(distinct.size() == all.size());
        }
    CHECK_THROWS_AS(binary_one_nested(5, 3), input_error);
    CHECK_THROWS_AS(binary_one_nested(10, 0), bound_error);
}

TEST_CASE("class enumeration counts") {
    CHECK(count_one_nested_classes(3) == 1);
    CHECK(count_one_nested_classes(4) == 7);
    CHECK(count_one_nested_classes(5) == 68);
    std::set<std::string> distinct;
    std::set<SplitSystem> systems;
    for (const PCTree& t : one_nested_classes(5)) {
        distinct.insert(t.str());
        systems.insert(t.splits());
    }
    CHECK(distinct.size() == 68);
    CHECK(systems.size() == 68);
}

TEST_CASE("consistent order count doubles per bridge") {
    for (int k = 0; k <= 2; ++k)
        for (const PCTree& t : binary_one_nested(5, k)) {
            const auto orders = consistent_orders_network(from_pc_tree(t));
            CHECK(orders.size() == (std::size_t{1} << k));
        }
}
