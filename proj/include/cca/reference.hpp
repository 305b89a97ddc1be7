#pragma once

// Serial reference implementations, written directly against read_region /
// write_region. Slow; kept to pin down the semantics of the kernels.

#include <cstdint>
#include <span>
#include <vector>

#include "cca/automata.hpp"

namespace cca::reference {

Configuration step_ca(const TraditionalCA& ca, const Configuration& c);
Configuration interaction_phase(const ClosedCA& cca, const Configuration& c, std::span<const std::size_t> order);
Configuration step_cca(const ClosedCA& cca, const Configuration& c);

std::vector<std::uint64_t> global_map(const TraditionalCA& ca, const Lattice& lattice);
std::vector<std::uint64_t> global_map(const ClosedCA& cca, const Lattice& lattice);

} // namespace cca::reference
