#include "splitnet/polytope.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

#include "splitnet/errors.hpp"

using namespace splitnet;

namespace {

WeightedNetwork unit_net(const std::string& canon) {
    return unit_weighted(from_pc_tree(PCTree::parse(canon)));
}

std::vector<BigInt> big(std::vector<int> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("incidence and network vectors") {
    CHECK(incidence_vector(canonical_order({1, 2, 3, 4})).x == big({1, 0, 1, 1, 0, 1}));
    CHECK(incidence_vector(canonical_order({1, 2, 4, 3})).x == big({1, 1, 0, 0, 1, 1}));
    for (const CircularOrder& c : all_circular_orders(5)) {
        BigInt sum = 0;
        for (const BigInt& v : incidence_vector(c).x) sum += v;
        CHECK(sum == 5);
    }

    CHECK(network_vector(PCTree::parse("1 (P 2 (P 3 4))")).x == big({2, 1, 1, 1, 1, 2}));
    CHECK(network_vector(PCTree::parse("1 (C 2 3 4)")).x == big({1, 0, 1, 1, 0, 1}));
    CHECK(network_vector(PCTree::parse("1 (P 2 3 4)")).x == big({2, 2, 2, 2, 2, 2}));
}

TEST_CASE("closed form vector for binary classes") {
    const PolytopeVector q = binary_vector_closed_form(PCTree::parse("1 (P 2 (P 3 4))"));
    CHECK(q.at(1, 2) == 2);
    CHECK(q.at(1, 3) == 1);
    CHECK(q == network_vector(PCTree::parse("1 (P 2 (P 3 4))")));

    CHECK(binary_vector_closed_form(PCTree::parse("1 (C 2 3 4)")).x == big({1, 0, 1, 1, 0, 1}));

    CHECK_THROWS_AS(binary_vector_closed_form(PCTree::parse("1 (P 2 3 4)")), input_error);

    // Against the order-sum definition on every vertex, all bridge counts.
    for (int n = 4; n <= 6; ++n)
        for (int k = 0; k <= n - 3; ++k)
            for (const auto& [t, x] : bme_vertices(n, k))
                CHECK(binary_vector_closed_form(t) == x);
}

TEST_CASE("vertex enumeration") {
    CHECK(bme_vertices(4, 1).size() == 3);
    CHECK(bme_vertices(5, 0).size() == 12);
    CHECK(bme_vertices(5, 1).size() == 30);
    CHECK(bme_vertices(5, 2).size() == 15);
    for (int k = 0; k <= 2; ++k) {
        std::set<PolytopeVector> seen;
        for (const auto& [t, x] : bme_vertices(5, k)) seen.insert(x);
        CHECK(seen.size() == bme_vertices(5, k).size());
    }
    CHECK_THROWS_AS(bme_vertices(9, 0), bound_error);
    CHECK_THROWS_AS(bme_vertices(5, 3), input_error);
}

TEST_CASE("linear minimization over vertices") {
    const DistanceVector dq = distance_from_network(unit_net("1 (P 2 (P 3 4))"));
    const MinimizeResult rq = minimize(dq, 4, 1);
    CHECK(rq.value == 20);
    REQUIRE(rq.argmin.size() == 1);
    CHECK(rq.argmin[0].str() == "1 (P 2 (P 3 4))");

    const DistanceVector db = distance_from_network(unit_net("1 (C 2 3 4)"));
    const MinimizeResult rb = minimize(db, 4, 0);
    CHECK(rb.value == 12);
    REQUIRE(rb.argmin.size() == 1);
    CHECK(rb.argmin[0].str() == "1 (C 2 3 4)");

    CHECK(minimize(zero_distance(4), 4, 0).argmin.size() == 3);
    CHECK(minimize(zero_distance(4), 4, 0).value == 0);
    CHECK_THROWS_AS(minimize(zero_distance(5), 4, 0), input_error);
}

TEST_CASE("faces of the poset") {
    const PCTree quartet = PCTree::parse("1 (P 2 (P 3 4))");
    const auto f1 = face_vertices(quartet, 1);
    REQUIRE(f1.size() == 1);
    CHECK(f1[0] == quartet);

    const auto f0s = face_vertices(PCTree::parse("1 (P 2 3 4)"), 0);
    CHECK(f0s.size() == 3);

    const auto f0q = face_vertices(quartet, 0);
    REQUIRE(f0q.size() == 2);
    CHECK(f0q[0].str() == "1 (C 2 3 4)");
    CHECK(f0q[1].str() == "1 (C 2 4 3)");

    CHECK_THROWS_AS(face_vertices(PCTree::parse("1 (P 2 3 4)"), 1), input_error);

    // Larger classes have smaller faces.
    const PCTree star5 = PCTree::parse("1 (P 2 3 4 5)");
    const PCTree mid = PCTree::parse("1 (P 2 (P 3 4) 5)");
    REQUIRE(pc_poset_compare(star5, mid) == PosetRelation::LessThan);
    const auto wide = face_vertices(star5, 0);
    const auto narrow = face_vertices(mid, 0);
    for (const PCTree& t : narrow) CHECK(std::count(wide.begin(), wide.end(), t) == 1);
    CHECK(narrow.size() < wide.size());

    const PCTree cat = PCTree::parse("1 (P 2 (P 5 (P 3 4)))");
    REQUIRE(pc_poset_compare(mid, cat) == PosetRelation::LessThan);
    const auto w1 = face_vertices(mid, 1);
    const auto n1 = face_vertices(cat, 1);
    REQUIRE(!n1.empty());
    for (const PCTree& t : n1) CHECK(std::count(w1.begin(), w1.end(), t) == 1);
}

TEST_CASE("predicted minimizers match linear minimization") {
    const MinimizeResult rq = minimize(distance_from_network(unit_net("1 (P 2 (P 3 4))")), 4, 1);
    CHECK(predicted_minimizers(unit_net("1 (P 2 (P 3 4))"), 1) == rq.argmin);

    const MinimizeResult rb = minimize(distance_from_network(unit_net("1 (C 2 3 4)")), 4, 0);
    CHECK(predicted_minimizers(unit_net("1 (C 2 3 4)"), 0) == rb.argmin);

    // The pentagon's 2-arcs pin down the single consistent hexagon... order.
    const auto p5 = predicted_minimizers(unit_net("1 (C 2 3 4 5)"), 0);
    REQUIRE(p5.size() == 1);
    CHECK(p5[0].str() == "1 (C 2 3 4 5)");

    // No binary 1-bridge class displays all five 2-arcs: prediction is empty
    // and the minimum stays strictly above 2^(k+1) W.
    const DistanceVector d5 = distance_from_network(unit_net("1 (C 2 3 4 5)"));
    CHECK(predicted_minimizers(unit_net("1 (C 2 3 4 5)"), 1).empty());
    const MinimizeResult r51 = minimize(d5, 5, 1);
    CHECK(r51.value == 32);
    CHECK(r51.value > Rat(2 * 2) * total_weight(s_w(unit_net("1 (C 2 3 4 5)"))));

    // Two squares joined by a length-0 bridge: ties at k=0, unique at k=1.
    const WeightedNetwork dbl = unit_net("1 (C 2 (C 3 4 5) 6)");
    const auto bridges = classify(dbl.net).nontrivial_bridges;
    REQUIRE(bridges.size() == 1);
    std::map<Edge, Rat> w = dbl.weights;
    w[bridges[0]] = 0;
    const WeightedNetwork shared = weighted(dbl.net, w);
    const DistanceVector ds = distance_from_network(shared);
    const MinimizeResult r0 = minimize(ds, 6, 0);
    CHECK(r0.value == 20);
    CHECK(r0.argmin.size() == 2);
    CHECK(predicted_minimizers(shared, 0) == r0.argmin);
    const MinimizeResult r1 = minimize(ds, 6, 1);
    CHECK(r1.value == 40);
    REQUIRE(r1.argmin.size() == 1);
    CHECK(r1.argmin[0].str() == "1 (C 2 (C 3 4 5) 6)");
    CHECK(predicted_minimizers(shared, 1) == r1.argmin);
}
