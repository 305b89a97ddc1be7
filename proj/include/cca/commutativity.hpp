#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cca/core.hpp"

namespace cca {

/// A concrete disagreement between f_0 f_delta and f_delta f_0 on the finite
/// region N u (N + delta).
struct CommutativityWitness {
    Point delta;
    std::vector<Point> region;          // sorted union of N and N + delta
    std::vector<State> assignment;      // initial states over `region`
    std::vector<State> origin_first;    // f_0, then f_delta
    std::vector<State> delta_first;     // f_delta, then f_0
};

struct CommutativityReport {
    bool ok = true;
    std::optional<CommutativityWitness> witness;
};

std::string describe(const CommutativityWitness& w);

/// Decides whether every pair of translates of `interaction` commutes.
///
/// Only offsets delta at which N and N + delta overlap can disagree, and the
/// pair (0, -delta) is a translate of (delta, 0), so the scan covers the
/// lexicographically positive half of the difference set N - N. Assignments
/// of the union region are visited in lexicographic order; the first
/// disagreement is returned as the witness.
CommutativityReport check_translation_commutative(const RuleTable& interaction, const Neighbourhood& neigh,
                                                  const Alphabet& alphabet);

} // namespace cca
