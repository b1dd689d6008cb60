#include "splitnet/split.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "splitnet/errors.hpp"

namespace splitnet {

void check_taxa(int n) {
    if (n < kMinTaxa) throw input_error("need at least 3 taxa, got " + std::to_string(n));
    if (n > kMaxTaxa) throw bound_error("at most 16 taxa supported, got " + std::to_string(n));
}

bool Split::trivial() const {
    const int size = std::popcount(block);
    return size == 1 || size == n - 1;
}

Split canonical_split(int n, Mask side) {
    check_taxa(n);
    const Mask full = full_mask(n);
    if (side == 0 || side == full) throw input_error("split side must be a proper nonempty subset");
    if ((side & ~full) != 0) throw input_error("split side mentions a taxon beyond n");
    if (side & (Mask{1} << (n - 1))) side ^= full;
    return Split{n, side};
}

Split canonical_split(int n, const std::vector<int>& side) {
    Mask mask = 0;
    for (int t : side) {
        if (t < 1 || t > n) throw input_error("taxon out of range: " + std::to_string(t));
        mask |= Mask{1} << (t - 1);
    }
    return canonical_split(n, mask);
}

std::vector<int> block_taxa(const Split& s) {
    std::vector<int> taxa;
    for (int t = 1; t <= s.n; ++t)
        if (s.block & (Mask{1} << (t - 1))) taxa.push_back(t);
    return taxa;
}

std::string format_split(const Split& s) {
    std::string out;
    for (int t : block_taxa(s)) {
        if (!out.empty()) out += ' ';
        out += std::to_string(t);
    }
    out += " |";
    for (int t = 1; t <= s.n; ++t)
        if (!(s.block & (Mask{1} << (t - 1)))) out += ' ' + std::to_string(t);
    return out;
}

bool separates(const Split& s, int i, int j) {
    if (i == j) throw input_error("separates needs two distinct taxa");
    if (i < 1 || i > s.n || j < 1 || j > s.n) throw input_error("taxon out of range");
    const bool in_i = (s.block >> (i - 1)) & 1;
    const bool in_j = (s.block >> (j - 1)) & 1;
    return in_i != in_j;
}

bool compatible(const Split& a, const Split& b) {
    if (a.n != b.n) throw input_error("compatible: mismatched taxon counts");
    const Mask full = full_mask(a.n);
    const Mask ac = full & ~a.block;
    const Mask bc = full & ~b.block;
    return (a.block & b.block) == 0 || (a.block & bc) == 0 || (ac & b.block) == 0 ||
           (ac & bc) == 0;
}

const std::vector<Split>& nontrivial_splits_lex(int n) {
    check_taxa(n);
    static std::map<int, std::vector<Split>> cache;
    auto [it, fresh] = cache.try_emplace(n);
    if (fresh) {
        for (Mask m = 1; m < full_mask(n - 1); ++m) {
            const int size = std::popcount(m);
            if (size >= 2 && size <= n - 2) it->second.push_back(Split{n, m});
        }
    }
    return it->second;
}

CircularOrder canonical_order(std::vector<int> seq) {
    const int n = static_cast<int>(seq.size());
    check_taxa(n);
    std::vector<bool> seen(n + 1, false);
    for (int t : seq) {
        if (t < 1 || t > n || seen[t]) throw input_error("order is not a permutation of 1..n");
        seen[t] = true;
    }
    const auto one = std::find(seq.begin(), seq.end(), 1);
    std::rotate(seq.begin(), one, seq.end());
    if (seq[1] > seq[n - 1]) std::reverse(seq.begin() + 1, seq.end());
    return CircularOrder{std::move(seq)};
}

std::string format_order(const CircularOrder& c) {
    std::string out = "(";
    for (int i = 0; i < c.n(); ++i) {
        if (i) out += ',';
        out += std::to_string(c.seq[i]);
    }
    return out + ")";
}

const std::vector<CircularOrder>& all_circular_orders(int n) {
    check_taxa(n);
    if (n > kOrderScanBound)
        throw bound_error("order enumeration supported up to n=10, got " + std::to_string(n));
    static std::map<int, std::vector<CircularOrder>> cache;
    auto [it, fresh] = cache.try_emplace(n);
    if (fresh) {
        std::vector<int> rest;
        for (int t = 2; t <= n; ++t) rest.push_back(t);
        do {
            if (rest.front() > rest.back()) continue;
            std::vector<int> seq{1};
            seq.insert(seq.end(), rest.begin(), rest.end());
            it->second.push_back(CircularOrder{std::move(seq)});
        } while (std::next_permutation(rest.begin(), rest.end()));
    }
    return it->second;
}

bool is_contiguous(const Split& s, const CircularOrder& c) {
    if (s.n != c.n()) throw input_error("is_contiguous: mismatched taxon counts");
    const int n = s.n;
    Mask positions = 0;
    for (int i = 0; i < n; ++i)
        if (s.block & (Mask{1} << (c.seq[i] - 1))) positions |= Mask{1} << i;
    const Mask rotated = ((positions << 1) | (positions >> (n - 1))) & full_mask(n);
    return std::popcount(positions ^ rotated) == 2;
}

Split split_from_arc(const CircularOrder& c, int start, int len) {
    const int n = c.n();
    if (len < 1 || len > n - 1) throw input_error("arc length must be in 1..n-1");
    Mask side = 0;
    for (int i = 0; i < len; ++i) side |= Mask{1} << (c.seq[(start + i) % n] - 1);
    return canonical_split(n, side);
}

Mask contiguous_nontrivial_mask(const CircularOrder& c) {
    const auto& lex = nontrivial_splits_lex(c.n());
    Mask bits = 0;
    for (std::size_t i = 0; i < lex.size(); ++i)
        if (is_contiguous(lex[i], c)) bits |= Mask{1} << i;
    return bits;
}

void SplitSystem::add(const Split& s) {
    if (s.n != n) throw input_error("split system: mismatched taxon counts");
    blocks.insert(s.block);
}

std::vector<Split> SplitSystem::splits() const {
    std::vector<Split> out;
    for (Mask b : blocks) out.push_back(Split{n, b});
    return out;
}

bool SplitSystem::has_all_trivial() const {
    for (int t = 1; t < n; ++t)
        if (!blocks.count(Mask{1} << (t - 1))) return false;
    return blocks.count(full_mask(n - 1)) != 0;
}

SplitSystem SplitSystem::with_trivial() const {
    SplitSystem out = *this;
    for (int t = 1; t < n; ++t) out.blocks.insert(Mask{1} << (t - 1));
    out.blocks.insert(full_mask(n - 1));
    return out;
}

SplitSystem SplitSystem::nontrivial_only() const {
    SplitSystem out{n, {}};
    for (Mask b : blocks)
        if (!Split{n, b}.trivial()) out.blocks.insert(b);
    return out;
}

SplitSystem make_system(int n, const std::vector<Split>& splits) {
    check_taxa(n);
    SplitSystem s{n, {}};
    for (const Split& x : splits) s.add(x);
    return s;
}

SplitSystem contiguous_splits(const CircularOrder& c) {
    SplitSystem s{c.n(), {}};
    for (int start = 0; start < c.n(); ++start)
        for (int len = 1; len < c.n(); ++len) s.add(split_from_arc(c, start, len));
    return s;
}

PosetRelation poset_compare(const SplitSystem& a, const SplitSystem& b) {
    if (a.n != b.n) throw input_error("poset_compare: mismatched taxon counts");
    const bool a_in_b = std::includes(b.blocks.begin(), b.blocks.end(), a.blocks.begin(), a.blocks.end());
    const bool b_in_a = std::includes(a.blocks.begin(), a.blocks.end(), b.blocks.begin(), b.blocks.end());
    if (a_in_b && b_in_a) return PosetRelation::Equal;
    if (a_in_b) return PosetRelation::LessThan;
    if (b_in_a) return PosetRelation::GreaterThan;
    return PosetRelation::Incomparable;
}

std::vector<CircularOrder> consistent_orders(const SplitSystem& s) {
    std::vector<CircularOrder> out;
    for (const CircularOrder& c : all_circular_orders(s.n)) {
        bool ok = true;
        for (Mask b : s.blocks)
            if (!is_contiguous(Split{s.n, b}, c)) {
                ok = false;
                break;
            }
        if (ok) out.push_back(c);
    }
    return out;
}

BigInt split_system_count(int n) {
    check_taxa(n);
    return BigInt(1) << ((std::size_t{1} << (n - 1)) - n - 1);
}

void for_each_split_system(int n, const std::function<void(Mask)>& visit) {
    check_taxa(n);
    if (n > kSystemScanBound)
        throw bound_error("system enumeration supported up to n=6, got " + std::to_string(n));
    const int bits = (1 << (n - 1)) - n - 1;
    const std::uint64_t total = std::uint64_t{1} << bits;
    for (std::uint64_t sys = 0; sys < total; ++sys) visit(static_cast<Mask>(sys));
}

SplitSystem system_from_bits(int n, Mask bits) {
    const auto& lex = nontrivial_splits_lex(n);
    SplitSystem s{n, {}};
    for (std::size_t i = 0; i < lex.size(); ++i)
        if (bits & (Mask{1} << i)) s.blocks.insert(lex[i].block);
    return s.with_trivial();
}

}  // namespace splitnet
