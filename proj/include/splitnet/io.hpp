#pragma once

#include <iosfwd>
#include <string>

#include "splitnet/metrics.hpp"
#include "splitnet/network.hpp"

namespace splitnet {

// Split system text: `n=<int>`, optional `trivial=absent` header, then one
// `split: t1 t2 ... [: w]` line per listed block. Without the header all
// trivial splits are implied; they carry weight 1 when read weighted.
// Zero-weight lines are dropped, so the support is always positive.
SplitSystem read_split_system(std::istream& in);
WeightedSplitSystem read_weighted_splits(std::istream& in);
void write_split_system(std::ostream& out, const SplitSystem& s);
void write_weighted_splits(std::ostream& out, const WeightedSplitSystem& ws);

// Network text: `n=<int>`, then `node <id>`, `leaf <id> <taxon>`, and
// `edge <id> <id> [: w]` lines. Ids are arbitrary; output uses 0..V-1.
// Edges without a weight read as weight 1.
PhyloNetwork read_network(std::istream& in);
WeightedNetwork read_weighted_network(std::istream& in);
void write_network(std::ostream& out, const PhyloNetwork& net);
void write_weighted_network(std::ostream& out, const WeightedNetwork& wn);

// Metric text: `n=<int>`, then the lower triangle row by row
// (row i lists d_i1 .. d_i,i-1), whitespace separated.
DistanceVector read_metric(std::istream& in);
void write_metric(std::ostream& out, const DistanceVector& d);

// Leaves as labeled boxes, internal nodes as points, weights as edge labels.
std::string to_dot(const PhyloNetwork& net);
std::string to_dot(const WeightedNetwork& wn);

}  // namespace splitnet
