#pragma once

#include <cstdint>
#include <deque>
#include <string>

#include "splitnet/circular.hpp"
#include "splitnet/metrics.hpp"
#include "splitnet/network.hpp"
#include "splitnet/pc_tree.hpp"
#include "splitnet/rng.hpp"

namespace splitnet {

// Definition-literal reference implementations. Deliberately slow; the test
// suite holds the fast paths to these.

// Splits produced by minimal edge cuts, found by scanning all edge subsets
// of size <= 3.
SplitSystem oracle_displayed_splits(const PhyloNetwork& net);

// Split weights along an order, solved as the full linear system from pair
// distances instead of the closed form.
WeightedSplitSystem oracle_decompose(const DistanceVector& d, const CircularOrder& c);

// Global scan for the least class displaying the system.
PCTree oracle_min_network(const CircularSystem& s);

struct CheckCounter {
    std::string name;
    std::uint64_t checked = 0;
    std::uint64_t failed = 0;
};

struct OracleReport {
    std::string title;
    // Deque keeps counter references stable while new checks register.
    std::deque<CheckCounter> checks;

    CheckCounter& counter(const std::string& name);
    std::uint64_t counter_checked(const std::string& name) const;
    bool ok() const;
    std::string text() const;
};

// Adjunction scan: exhaustive for n <= 5, seeded sampling at n = 6.
OracleReport oracle_galois_check(int n, std::uint64_t seed = 1);

// Random weighted instances checking the weighted pair of maps.
OracleReport oracle_weighted_suite(int n_lo, int n_hi, int per_n, std::uint64_t seed = 1);

// Random weighted instances checking vertex minimization predictions.
OracleReport oracle_polytope_suite(int n, int instances, std::uint64_t seed = 1);

PCTree random_one_nested(int n, Rng& rng);
WeightedNetwork random_weighted_network(int n, Rng& rng);

}  // namespace splitnet
