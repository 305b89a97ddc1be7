#pragma once

// Precomputed, OpenMP-parallel steppers. The literal serial versions in
// reference.hpp define the semantics these must reproduce bit for bit.

#include <cstdint>
#include <span>
#include <vector>

#include "cca/automata.hpp"

namespace cca {

// Loops over fewer cells than this stay serial.
inline constexpr std::size_t parallel_cell_threshold = 4096;

/// Wrapped cell indices of x + N for every cell x, row-major.
class NeighbourIndex {
public:
    NeighbourIndex(const Lattice& lattice, const Neighbourhood& neigh);

    std::size_t arity() const { return arity_; }
    std::size_t cell_count() const { return cells_; }
    std::span<const std::size_t> at(std::size_t cell) const { return {index_.data() + cell * arity_, arity_}; }

private:
    std::size_t arity_;
    std::size_t cells_;
    std::vector<std::size_t> index_;
};

class CaStepper {
public:
    CaStepper(const TraditionalCA& ca, const Lattice& lattice);

    const Lattice& lattice() const { return lattice_; }
    void step(std::span<const State> in, std::span<State> out) const;
    Configuration step(const Configuration& c) const;

private:
    TraditionalCA ca_;
    Lattice lattice_;
    NeighbourIndex index_;
};

enum class InteractionSchedule { automatic, sequential };

/// Global interaction and update maps of a closed CA on one lattice.
///
/// With the automatic schedule, cells are greedily coloured (lexicographic
/// order) so that the supports of x + N within one colour class are
/// disjoint; classes run one after another, cells inside a class in
/// parallel. This is a valid sequential order, so for a commutative
/// interaction it matches lexicographic application exactly. The coloured
/// schedule is only used when every extent exceeds the diameter of the
/// extended neighbourhood; on smaller lattices overlaps can wrap and the
/// stepper falls back to plain lexicographic order.
class CcaStepper {
public:
    CcaStepper(const ClosedCA& cca, const Lattice& lattice,
               InteractionSchedule schedule = InteractionSchedule::automatic);

    const Lattice& lattice() const { return lattice_; }
    bool coloured() const { return !classes_.empty(); }
    const std::vector<std::vector<std::size_t>>& classes() const { return classes_; }

    void apply_at(std::span<State> cells, std::size_t base) const;
    void interact(std::span<State> cells) const;
    void interact_in_order(std::span<State> cells, std::span<const std::size_t> order) const;
    void update(std::span<State> cells) const;
    void step(std::span<State> cells) const;

private:
    ClosedCA cca_;
    Lattice lattice_;
    NeighbourIndex index_;
    std::vector<std::vector<std::size_t>> classes_;
};

/// Image index of every configuration index under one step, evaluated in
/// parallel over configurations. Throws CeilingExceeded above `ceiling`
/// configurations.
std::vector<std::uint64_t> global_map(const CaStepper& stepper, State alphabet_size,
                                      std::uint64_t ceiling = 10'000'000);
std::vector<std::uint64_t> global_map(const CcaStepper& stepper, State alphabet_size,
                                      std::uint64_t ceiling = 10'000'000);

} // namespace cca
