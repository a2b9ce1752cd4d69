#pragma once

#include <vector>

#include "blkd/graph.hpp"
#include "blkd/rational.hpp"

// Independent ground truth for the oracle tests: plain adjacency-matrix
// lookups, full odometer enumeration, isomorphism tested per complete tuple.
// Deliberately shares no code with the bitset backtracker.
namespace naive {

blkd::Int count_ordered(const blkd::Blockade& b, const blkd::Pattern& p);
blkd::Int count_transversal(const blkd::Blockade& b, const blkd::Pattern& p);
blkd::Int count_rainbow(const blkd::Blockade& b, const blkd::Pattern& p);

}  // namespace naive
