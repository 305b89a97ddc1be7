#include "cca/reference.hpp"

namespace cca::reference {

Configuration step_ca(const TraditionalCA& ca, const Configuration& c) {
    check_lattice(c.lattice(), ca.neigh());
    Configuration out(c.lattice());
    for (std::size_t x = 0; x < c.size(); ++x) {
        const auto tuple = read_region(c, c.lattice().point_of(x), ca.neigh());
        out[x] = ca.rule()(tuple)[0];
    }
    return out;
}

Configuration interaction_phase(const ClosedCA& cca, const Configuration& c, std::span<const std::size_t> order) {
    check_lattice(c.lattice(), cca.neigh());
    std::vector<bool> seen(c.size(), false);
    if (order.size() != c.size()) throw Error("order is not a permutation of all cells");
    for (std::size_t x : order) {
        if (x >= c.size() || seen[x]) throw Error("order is not a permutation of all cells");
        seen[x] = true;
    }
    Configuration cur = c;
    for (std::size_t x : order) {
        const Point base = c.lattice().point_of(x);
        const auto tuple = read_region(cur, base, cca.neigh());
        const auto out = cca.interaction()(tuple);
        cur = write_region(std::move(cur), base, cca.neigh(), out, cca.alphabet());
    }
    return cur;
}

Configuration step_cca(const ClosedCA& cca, const Configuration& c) {
    if (!cca.is_validated()) throw Error("interaction table has not been validated as translation commutative");
    Configuration cur = reference::interaction_phase(cca, c, lexicographic_order(c.lattice()));
    for (std::size_t x = 0; x < cur.size(); ++x) cur[x] = cca.update().row(cur[x])[0];
    return cur;
}

namespace {

template <class Step>
std::vector<std::uint64_t> map_all(const Lattice& lattice, State n, Step&& step) {
    const auto count = configuration_count(n, lattice.cell_count());
    if (!count || *count > 10'000'000) throw CeilingExceeded("reference global map too large");
    std::vector<std::uint64_t> image(*count);
    Configuration c(lattice);
    for (std::uint64_t i = 0; i < *count; ++i) {
        decode_configuration(i, n, c.cells());
        image[i] = encode_configuration(step(c).cells(), n);
    }
    return image;
}

} // namespace

std::vector<std::uint64_t> global_map(const TraditionalCA& ca, const Lattice& lattice) {
    return map_all(lattice, ca.alphabet().size(), [&](const Configuration& c) { return reference::step_ca(ca, c); });
}

std::vector<std::uint64_t> global_map(const ClosedCA& cca, const Lattice& lattice) {
    return map_all(lattice, cca.alphabet().size(), [&](const Configuration& c) { return reference::step_cca(cca, c); });
}

} // namespace cca::reference
