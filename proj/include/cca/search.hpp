#pragma once

// Exhaustive enumeration of small closed automata and search for ones whose
// global map equals a target on a set of finite lattices. A finite-lattice
// search is evidence about the infinite line, never a proof.

#include <chrono>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cca/automata.hpp"

namespace cca {

enum class Execution { serial, parallel };

/// Target global map.
struct TargetMap {
    enum class Kind { identity, shift_right, permutation };
    Kind kind = Kind::identity;
    // For Kind::permutation: image index of every configuration index on
    // `lattice`.
    Lattice lattice;
    std::vector<std::uint64_t> permutation;

    static TargetMap identity() { return {}; }
    static TargetMap shift_right() { return {Kind::shift_right, {}, {}}; }
    static TargetMap from_permutation(Lattice lattice, std::vector<std::uint64_t> image);

    std::string name() const;
};

// sigma(x, t+1) = sigma(x - e_0, t): shift by one along the first axis.
Configuration shift_right(const Configuration& c);

struct SearchSpec {
    State alphabet_size = 2;
    Neighbourhood neigh;
    bool require_reversible = true;
    TargetMap target;
    std::vector<Lattice> lattices;
    double enumeration_ceiling = 1e9;
    std::uint64_t configuration_ceiling = 10'000'000;

    void check() const;
};

struct EnumerationCounts {
    std::uint64_t candidates_examined = 0;
    std::uint64_t commutative_count = 0;
};

struct SearchReport {
    std::uint64_t candidates_examined = 0;
    std::uint64_t commutative_count = 0;
    std::vector<ClosedCA> matches;
    std::chrono::duration<double> elapsed{};
};

// (interaction tables) x (update tables) for the spec, as a double so huge
// spaces compare against the ceiling without overflow.
double enumeration_size(const SearchSpec& spec);

/// Visits every (interaction, update) pair in lexicographic table order,
/// interaction outermost, restricted to bijections when the spec requires
/// reversibility. Only translation-commutative candidates reach `visit`,
/// already validated. Returning false from `visit` stops the enumeration.
EnumerationCounts enumerate_ccas(const SearchSpec& spec, const std::function<bool(const ClosedCA&)>& visit);

bool global_map_equals(const ClosedCA& cca, const TargetMap& target, const Lattice& lattice,
                       std::uint64_t ceiling = 10'000'000);

/// Deterministic for a fixed spec: matches are listed in enumeration order
/// whatever the execution mode.
SearchReport find_global_map(const SearchSpec& spec, Execution exec = Execution::parallel);

} // namespace cca
