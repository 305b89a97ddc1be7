#include "cca/kernels.hpp"

#include <algorithm>

namespace cca {

NeighbourIndex::NeighbourIndex(const Lattice& lattice, const Neighbourhood& neigh)
    : arity_(neigh.size()), cells_(lattice.cell_count()), index_(cells_ * arity_) {
    Point q(lattice.dimension());
    for (std::size_t x = 0; x < cells_; ++x) {
        const Point p = lattice.point_of(x);
        for (std::size_t j = 0; j < arity_; ++j) {
            for (std::size_t i = 0; i < q.size(); ++i) q[i] = p[i] + neigh[j][i];
            index_[x * arity_ + j] = lattice.index_of(q);
        }
    }
}

// --- CaStepper ---------------------------------------------------------------

CaStepper::CaStepper(const TraditionalCA& ca, const Lattice& lattice)
    : ca_(ca), lattice_(lattice), index_((check_lattice(lattice, ca.neigh()), lattice), ca.neigh()) {}

void CaStepper::step(std::span<const State> in, std::span<State> out) const {
    if (in.size() != lattice_.cell_count() || out.size() != in.size())
        throw Error("configuration does not match the stepper's lattice");
    const State n = ca_.alphabet().size();
    const State* table = ca_.rule().outputs().data();
    const auto cells = static_cast<std::int64_t>(in.size());
#pragma omp parallel for schedule(static) if (cells >= static_cast<std::int64_t>(parallel_cell_threshold))
    for (std::int64_t x = 0; x < cells; ++x) {
        std::size_t r = 0;
        for (std::size_t idx : index_.at(static_cast<std::size_t>(x))) r = r * n + in[idx];
        out[static_cast<std::size_t>(x)] = table[r];
    }
}

Configuration CaStepper::step(const Configuration& c) const {
    if (c.lattice() != lattice_) throw Error("configuration does not match the stepper's lattice");
    Configuration out(lattice_);
    step(c.cells(), out.cells());
    return out;
}

// --- CcaStepper --------------------------------------------------------------

namespace {

bool extended_fits(const Lattice& lattice, const Neighbourhood& neigh) {
    const auto diam = extended_neighbourhood(neigh).diameter();
    for (std::size_t i = 0; i < diam.size(); ++i)
        if (lattice.extent(i) <= diam[i]) return false;
    return true;
}

std::vector<std::vector<std::size_t>> colour_classes(const Lattice& lattice, const Neighbourhood& neigh) {
    std::vector<Point> conflicts;
    const Neighbourhood ext = extended_neighbourhood(neigh);
    for (const auto& e : ext.offsets())
        if (std::any_of(e.begin(), e.end(), [](int v) { return v != 0; })) conflicts.push_back(e);

    const std::size_t cells = lattice.cell_count();
    std::vector<std::size_t> colour(cells, 0);
    std::vector<char> used(conflicts.size() + 1);
    std::size_t colours = 0;
    Point q(lattice.dimension());
    for (std::size_t x = 0; x < cells; ++x) {
        std::fill(used.begin(), used.end(), 0);
        const Point p = lattice.point_of(x);
        for (const auto& e : conflicts) {
            for (std::size_t i = 0; i < q.size(); ++i) q[i] = p[i] + e[i];
            const std::size_t y = lattice.index_of(q);
            if (y < x) used[colour[y]] = 1;
        }
        std::size_t c = 0;
        while (used[c]) ++c;
        colour[x] = c;
        colours = std::max(colours, c + 1);
    }
    std::vector<std::vector<std::size_t>> classes(colours);
    for (std::size_t x = 0; x < cells; ++x) classes[colour[x]].push_back(x);
    return classes;
}

} // namespace

CcaStepper::CcaStepper(const ClosedCA& cca, const Lattice& lattice, InteractionSchedule schedule)
    : cca_(cca), lattice_(lattice), index_((check_lattice(lattice, cca.neigh()), lattice), cca.neigh()) {
    if (schedule == InteractionSchedule::automatic && cca.is_validated() && extended_fits(lattice, cca.neigh()))
        classes_ = colour_classes(lattice, cca.neigh());
}

void CcaStepper::apply_at(std::span<State> cells, std::size_t base) const {
    const State n = cca_.alphabet().size();
    const auto idx = index_.at(base);
    std::size_t r = 0;
    for (std::size_t i : idx) r = r * n + cells[i];
    const auto row = cca_.interaction().row(r);
    for (std::size_t j = 0; j < idx.size(); ++j) cells[idx[j]] = row[j];
}

void CcaStepper::interact(std::span<State> cells) const {
    if (cells.size() != lattice_.cell_count()) throw Error("configuration does not match the stepper's lattice");
    if (classes_.empty()) {
        for (std::size_t x = 0; x < cells.size(); ++x) apply_at(cells, x);
        return;
    }
    for (const auto& members : classes_) {
        const auto count = static_cast<std::int64_t>(members.size());
#pragma omp parallel for schedule(static) if (count >= static_cast<std::int64_t>(parallel_cell_threshold))
        for (std::int64_t k = 0; k < count; ++k) apply_at(cells, members[static_cast<std::size_t>(k)]);
    }
}

void CcaStepper::interact_in_order(std::span<State> cells, std::span<const std::size_t> order) const {
    if (cells.size() != lattice_.cell_count()) throw Error("configuration does not match the stepper's lattice");
    if (order.size() != cells.size()) throw Error("order is not a permutation of all cells");
    std::vector<char> seen(cells.size(), 0);
    for (std::size_t x : order) {
        if (x >= cells.size() || seen[x]) throw Error("order is not a permutation of all cells");
        seen[x] = 1;
    }
    for (std::size_t x : order) apply_at(cells, x);
}

void CcaStepper::update(std::span<State> cells) const {
    if (cells.size() != lattice_.cell_count()) throw Error("configuration does not match the stepper's lattice");
    const State* table = cca_.update().outputs().data();
    const auto count = static_cast<std::int64_t>(cells.size());
#pragma omp parallel for schedule(static) if (count >= static_cast<std::int64_t>(parallel_cell_threshold))
    for (std::int64_t x = 0; x < count; ++x) cells[static_cast<std::size_t>(x)] = table[cells[static_cast<std::size_t>(x)]];
}

void CcaStepper::step(std::span<State> cells) const {
    interact(cells);
    update(cells);
}

// --- global maps -------------------------------------------------------------

namespace {

std::uint64_t checked_count(State alphabet_size, std::size_t cells, std::uint64_t ceiling) {
    const auto count = configuration_count(alphabet_size, cells);
    if (!count || *count > ceiling)
        throw CeilingExceeded("global map over " + std::to_string(alphabet_size) + "^" + std::to_string(cells) +
                              " configurations exceeds the ceiling of " + std::to_string(ceiling));
    return *count;
}

} // namespace

std::vector<std::uint64_t> global_map(const CaStepper& stepper, State alphabet_size, std::uint64_t ceiling) {
    const std::size_t cells = stepper.lattice().cell_count();
    const std::uint64_t count = checked_count(alphabet_size, cells, ceiling);
    std::vector<std::uint64_t> image(count);
#pragma omp parallel
    {
        std::vector<State> in(cells), out(cells);
#pragma omp for schedule(static)
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i) {
            decode_configuration(static_cast<std::uint64_t>(i), alphabet_size, in);
            stepper.step(in, out);
            image[static_cast<std::size_t>(i)] = encode_configuration(out, alphabet_size);
        }
    }
    return image;
}

std::vector<std::uint64_t> global_map(const CcaStepper& stepper, State alphabet_size, std::uint64_t ceiling) {
    const std::size_t cells = stepper.lattice().cell_count();
    const std::uint64_t count = checked_count(alphabet_size, cells, ceiling);
    std::vector<std::uint64_t> image(count);
#pragma omp parallel
    {
        std::vector<State> buf(cells);
#pragma omp for schedule(static)
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i) {
            decode_configuration(static_cast<std::uint64_t>(i), alphabet_size, buf);
            stepper.step(buf);
            image[static_cast<std::size_t>(i)] = encode_configuration(buf, alphabet_size);
        }
    }
    return image;
}

} // namespace cca
