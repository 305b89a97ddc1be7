#pragma once

// Constructions producing translation-commutative closed automata:
//   ca_to_cca          two registers, compute into the second, swap
//   rca_to_rcca        reversible variant adding forward - reverse
//   partitioned_to_cca block rules selected by a read-only control register
//   coloured_to_cca    one scheduled colour per step, tracked by a clock
// Every function returns a validated ClosedCA.

#include <span>
#include <vector>

#include "cca/automata.hpp"
#include "cca/verify.hpp"

namespace cca {

/// Bijection Sigma -> Z_|Sigma| giving modular addition on states.
class AdditionRelation {
public:
    explicit AdditionRelation(std::vector<State> to_integer);
    static AdditionRelation canonical(State size);

    State size() const { return static_cast<State>(to_int_.size()); }
    State add(State a, State b) const;
    // base + plus - minus
    State shift(State base, State plus, State minus) const;

private:
    std::vector<State> to_int_;
    std::vector<State> from_int_;
};

ClosedCA ca_to_cca(const TraditionalCA& ca);

// forward and reverse must be mutual inverses as global maps; the caller
// asserts this.
ClosedCA rca_to_rcca(const TraditionalCA& forward, const TraditionalCA& reverse, const AdditionRelation& add);

/// A control-register pattern and the block rule it triggers on the first
/// register of the matched cells.
struct PartitionRule {
    RegionConfig config;
    RuleTable block;
};

/// Cells carry (s1, s2) over Sigma1 x Sigma2; Sigma1 comes from
/// `extra_update`, Sigma2 from `control_update`. The interaction at x
/// applies the block of the rule whose pattern matches the control
/// registers at x + R. Control registers are read-only during interaction.
ClosedCA partitioned_to_cca(std::span<const PartitionRule> rules, const RuleTable& control_update,
                            const RuleTable& extra_update);

/// Alternating pair partitions: `u` fires on control pattern 01, `v` on 23,
/// and the control update k -> 3 - k swaps the two partitions every step.
/// Initialise control registers to 0 1 0 1 ... on an even ring.
ClosedCA margolus_cca(const RuleTable& u, const RuleTable& v);

RuleTable pair_swap(const Alphabet& alphabet);

struct ColourRule {
    State colour;
    RuleTable rule; // |neigh| -> 1 over the cell alphabet
};

struct ColourSchedule {
    ColourTile tile;
    Neighbourhood neigh;
    Alphabet cells;
    std::vector<ColourRule> rules; // applied cyclically

    // Throws unless the colouring is valid and the rules are well formed.
    void check() const;
};

/// Composite alphabet cells x colours x clock. A cell changes only when its
/// colour is the one scheduled for its clock and no other cell of its
/// neighbourhood is scheduled; on consistent configurations the second
/// condition always holds.
ClosedCA coloured_to_cca(const ColourSchedule& schedule);

Alphabet coloured_alphabet(const ColourSchedule& schedule);
Configuration coloured_configuration(const ColourSchedule& schedule, const Configuration& cells, State clock = 0);
// Throws on a tile misfit, wrong colours, or clocks that disagree.
void check_coloured_configuration(const ColourSchedule& schedule, const Configuration& c);
Configuration step_coloured(const ClosedCA& cca, const ColourSchedule& schedule, const Configuration& c);

} // namespace cca
