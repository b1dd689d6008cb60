#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "splitnet/rational.hpp"

namespace splitnet {

inline constexpr int kMinTaxa = 3;
inline constexpr int kMaxTaxa = 16;
inline constexpr int kOrderScanBound = 10;   // (n-1)!/2 orders materialized
inline constexpr int kSystemScanBound = 6;   // 2^(2^(n-1)-n-1) systems scanned

// Taxon i occupies bit i-1.
using Mask = std::uint32_t;

inline Mask full_mask(int n) { return (Mask{1} << n) - 1; }

// Bipartition A|B of {1..n}; the stored block is the side without taxon n,
// which makes representation unique and ordering total.
struct Split {
    int n = 0;
    Mask block = 0;

    bool trivial() const;
    auto operator<=>(const Split&) const = default;
};

Split canonical_split(int n, Mask side);
Split canonical_split(int n, const std::vector<int>& side);
std::vector<int> block_taxa(const Split& s);
std::string format_split(const Split& s);

bool separates(const Split& s, int i, int j);
bool compatible(const Split& a, const Split& b);

// All nontrivial splits on n taxa in increasing block-mask order; index into
// this list is the bit position used by the system bitmask representation.
const std::vector<Split>& nontrivial_splits_lex(int n);

// Cyclic arrangement of {1..n} up to rotation and reflection.
// Canonical: starts at 1, second element smaller than last.
struct CircularOrder {
    std::vector<int> seq;

    int n() const { return static_cast<int>(seq.size()); }
    auto operator<=>(const CircularOrder&) const = default;
};

CircularOrder canonical_order(std::vector<int> seq);
std::string format_order(const CircularOrder& c);
const std::vector<CircularOrder>& all_circular_orders(int n);

bool is_contiguous(const Split& s, const CircularOrder& c);

// Split whose block is the arc of len taxa starting at position start.
Split split_from_arc(const CircularOrder& c, int start, int len);

// Bitmask over nontrivial_splits_lex of the splits contiguous in c.
Mask contiguous_nontrivial_mask(const CircularOrder& c);

struct SplitSystem {
    int n = 0;
    std::set<Mask> blocks;

    bool contains(const Split& s) const { return blocks.count(s.block) != 0; }
    void add(const Split& s);
    int size() const { return static_cast<int>(blocks.size()); }
    std::vector<Split> splits() const;
    bool has_all_trivial() const;
    SplitSystem with_trivial() const;
    SplitSystem nontrivial_only() const;
    auto operator<=>(const SplitSystem&) const = default;
};

SplitSystem make_system(int n, const std::vector<Split>& splits);

// Every split of c, trivial ones included: n(n-1)/2 - n + ... exactly
// n trivial plus n(n-3)/2 nontrivial arcs.
SplitSystem contiguous_splits(const CircularOrder& c);

enum class PosetRelation { LessThan, GreaterThan, Equal, Incomparable };

// Inclusion order on split systems.
PosetRelation poset_compare(const SplitSystem& a, const SplitSystem& b);

std::vector<CircularOrder> consistent_orders(const SplitSystem& s);

// 2^(2^(n-1)-n-1), the number of systems containing all trivial splits.
BigInt split_system_count(int n);

// Visits every system as a bitmask over nontrivial_splits_lex(n).
void for_each_split_system(int n, const std::function<void(Mask)>& visit);
SplitSystem system_from_bits(int n, Mask bits);

void check_taxa(int n);

}  // namespace splitnet
