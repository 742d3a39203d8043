#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hakenlab/euler.hpp"

namespace hakenlab {

/// Closed arc on P^1(R): the points met going positively from s to t.
struct Arc {
    ProjPoint s, t;
};

struct PingPongTable {
    // For generator i: repelling arc 2i, attracting arc 2i + 1.
    std::vector<Arc> arcs;
    int dyadic_level = 0;  // the size 2^-level that certified
};

struct PingPongResult {
    Verdict verdict = Verdict::Unknown;
    std::optional<PingPongTable> table;
    std::string detail;
};

/// Independent free-discreteness oracle: hunts for pairwise-disjoint closed
/// arcs around the attracting/repelling fixed points of the 2n generators
/// such that each generator maps the complement of its repelling arc
/// strictly inside its attracting arc.  All endpoint images are evaluated
/// exactly, so a success certifies a free discrete group of rank 2n; any
/// failure reports Unknown.
///
/// Arcs are grown symmetrically in the cross-ratio coordinate that sends
/// the fixed points to 0 and infinity; sixteen dyadic sizes are tried in
/// order and the first success wins, so the search is deterministic.
PingPongResult pingpong_oracle(const PairSystem& ps);

}  // namespace hakenlab
