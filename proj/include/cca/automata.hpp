#pragma once

// Traditional and closed cellular automata, their global evolution, and the
// reduction of a closed automaton to a traditional one over its extended
// neighbourhood.

#include <span>
#include <vector>

#include "cca/commutativity.hpp"
#include "cca/core.hpp"

namespace cca {

/// (Sigma, N, f) with f : Sigma^N -> Sigma. The lattice comes with each
/// configuration.
class TraditionalCA {
public:
    TraditionalCA(Alphabet alphabet, Neighbourhood neigh, RuleTable rule);

    const Alphabet& alphabet() const { return alphabet_; }
    const Neighbourhood& neigh() const { return neigh_; }
    const RuleTable& rule() const { return rule_; }

    bool operator==(const TraditionalCA&) const = default;

private:
    Alphabet alphabet_;
    Neighbourhood neigh_;
    RuleTable rule_;
};

class ClosedCA;

class NotCommutative : public Error {
public:
    explicit NotCommutative(CommutativityReport report);
    const CommutativityReport& report() const { return report_; }

private:
    CommutativityReport report_;
};

/// (Sigma, N, f, g) with interaction f : Sigma^N -> Sigma^N and update
/// g : Sigma -> Sigma. Evolution requires the interaction to have passed the
/// translation-commutativity check; `validated()` runs it at construction,
/// `unvalidated()` defers it to an explicit `validate()` call.
class ClosedCA {
public:
    static ClosedCA validated(Alphabet alphabet, Neighbourhood neigh, RuleTable interaction, RuleTable update);
    static ClosedCA unvalidated(Alphabet alphabet, Neighbourhood neigh, RuleTable interaction, RuleTable update);

    // Runs the commutativity check and records a passing verdict.
    CommutativityReport validate();
    bool is_validated() const { return validated_; }

    // Same interaction with another update table. Commutativity depends on
    // the interaction alone, so the validation verdict carries over.
    ClosedCA with_update(RuleTable update) const;

    const Alphabet& alphabet() const { return alphabet_; }
    const Neighbourhood& neigh() const { return neigh_; }
    const RuleTable& interaction() const { return interaction_; }
    const RuleTable& update() const { return update_; }

    // Table equality; the validation flag is not compared.
    bool operator==(const ClosedCA& other) const {
        return alphabet_ == other.alphabet_ && neigh_ == other.neigh_ && interaction_ == other.interaction_ &&
               update_ == other.update_;
    }

private:
    ClosedCA(Alphabet alphabet, Neighbourhood neigh, RuleTable interaction, RuleTable update);

    Alphabet alphabet_;
    Neighbourhood neigh_;
    RuleTable interaction_;
    RuleTable update_;
    bool validated_ = false;
};

// Throws unless every extent strictly exceeds the neighbourhood's diameter on
// that axis, so the wrapped cells of x + N are pairwise distinct.
void check_lattice(const Lattice& lattice, const Neighbourhood& neigh);

std::vector<std::size_t> lexicographic_order(const Lattice& lattice);

Configuration step_ca(const TraditionalCA& ca, const Configuration& c);

/// Applies the interaction at every cell exactly once, in `order`.
Configuration interaction_phase(const ClosedCA& cca, const Configuration& c, std::span<const std::size_t> order);
/// Lexicographic order; runs in parallel when the lattice allows it and the
/// automaton is validated, with bit-identical output.
Configuration interaction_phase(const ClosedCA& cca, const Configuration& c);
Configuration update_phase(const ClosedCA& cca, const Configuration& c);

/// One global step G F. Refuses automata whose interaction has not been
/// validated.
Configuration step_cca(const ClosedCA& cca, const Configuration& c);

/// The set N - N, sorted: every offset o such that some translate of N
/// contains both a cell and the cell + o.
Neighbourhood extended_neighbourhood(const Neighbourhood& neigh);

/// Traditional CA over the extended neighbourhood with the same global map.
TraditionalCA reduce_to_ca(const ClosedCA& cca);

} // namespace cca
