#include "cca/automata.hpp"

#include <algorithm>
#include <set>

#include "cca/kernels.hpp"

namespace cca {

TraditionalCA::TraditionalCA(Alphabet alphabet, Neighbourhood neigh, RuleTable rule)
    : alphabet_(std::move(alphabet)), neigh_(std::move(neigh)), rule_(std::move(rule)) {
    if (rule_.arity_in() != neigh_.size() || rule_.arity_out() != 1)
        throw Error("CA rule must map " + std::to_string(neigh_.size()) + " states to 1");
    if (rule_.alphabet().size() != alphabet_.size()) throw Error("CA rule alphabet does not match the automaton");
}

NotCommutative::NotCommutative(CommutativityReport report)
    : Error("interaction is not translation commutative" +
            (report.witness ? ": " + describe(*report.witness) : std::string{})),
      report_(std::move(report)) {}

ClosedCA::ClosedCA(Alphabet alphabet, Neighbourhood neigh, RuleTable interaction, RuleTable update)
    : alphabet_(std::move(alphabet)), neigh_(std::move(neigh)), interaction_(std::move(interaction)),
      update_(std::move(update)) {
    if (interaction_.arity_in() != neigh_.size() || interaction_.arity_out() != neigh_.size())
        throw Error("interaction must map " + std::to_string(neigh_.size()) + " states to " +
                    std::to_string(neigh_.size()));
    if (update_.arity_in() != 1 || update_.arity_out() != 1) throw Error("update must map 1 state to 1");
    if (interaction_.alphabet().size() != alphabet_.size() || update_.alphabet().size() != alphabet_.size())
        throw Error("rule table alphabets do not match the automaton");
}

ClosedCA ClosedCA::unvalidated(Alphabet alphabet, Neighbourhood neigh, RuleTable interaction, RuleTable update) {
    return ClosedCA(std::move(alphabet), std::move(neigh), std::move(interaction), std::move(update));
}

ClosedCA ClosedCA::validated(Alphabet alphabet, Neighbourhood neigh, RuleTable interaction, RuleTable update) {
    ClosedCA cca(std::move(alphabet), std::move(neigh), std::move(interaction), std::move(update));
    auto report = cca.validate();
    if (!report.ok) throw NotCommutative(std::move(report));
    return cca;
}

ClosedCA ClosedCA::with_update(RuleTable update) const {
    ClosedCA out(alphabet_, neigh_, interaction_, std::move(update));
    out.validated_ = validated_;
    return out;
}

CommutativityReport ClosedCA::validate() {
    auto report = check_translation_commutative(interaction_, neigh_, alphabet_);
    validated_ = report.ok;
    return report;
}

void check_lattice(const Lattice& lattice, const Neighbourhood& neigh) {
    if (lattice.dimension() != neigh.dimension())
        throw Error("lattice dimension " + std::to_string(lattice.dimension()) +
                    " does not match neighbourhood dimension " + std::to_string(neigh.dimension()));
    const auto diam = neigh.diameter();
    for (std::size_t i = 0; i < diam.size(); ++i)
        if (lattice.extent(i) <= diam[i])
            throw Error("lattice too small relative to neighbourhood: extent " + std::to_string(lattice.extent(i)) +
                        " on axis " + std::to_string(i) + " must exceed " + std::to_string(diam[i]));
}

std::vector<std::size_t> lexicographic_order(const Lattice& lattice) {
    std::vector<std::size_t> order(lattice.cell_count());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    return order;
}

Configuration step_ca(const TraditionalCA& ca, const Configuration& c) {
    c.check_alphabet(ca.alphabet());
    return CaStepper(ca, c.lattice()).step(c);
}

Configuration interaction_phase(const ClosedCA& cca, const Configuration& c, std::span<const std::size_t> order) {
    c.check_alphabet(cca.alphabet());
    CcaStepper stepper(cca, c.lattice(), InteractionSchedule::sequential);
    Configuration out = c;
    stepper.interact_in_order(out.cells(), order);
    return out;
}

Configuration interaction_phase(const ClosedCA& cca, const Configuration& c) {
    c.check_alphabet(cca.alphabet());
    CcaStepper stepper(cca, c.lattice());
    Configuration out = c;
    stepper.interact(out.cells());
    return out;
}

Configuration update_phase(const ClosedCA& cca, const Configuration& c) {
    c.check_alphabet(cca.alphabet());
    CcaStepper stepper(cca, c.lattice(), InteractionSchedule::sequential);
    Configuration out = c;
    stepper.update(out.cells());
    return out;
}

Configuration step_cca(const ClosedCA& cca, const Configuration& c) {
    if (!cca.is_validated()) throw Error("interaction table has not been validated as translation commutative");
    c.check_alphabet(cca.alphabet());
    CcaStepper stepper(cca, c.lattice());
    Configuration out = c;
    stepper.step(out.cells());
    return out;
}

Neighbourhood extended_neighbourhood(const Neighbourhood& neigh) {
    std::set<Point> diffs;
    for (const auto& n : neigh.offsets())
        for (const auto& m : neigh.offsets()) {
            Point d(n.size());
            for (std::size_t i = 0; i < n.size(); ++i) d[i] = n[i] - m[i];
            diffs.insert(std::move(d));
        }
    return Neighbourhood(std::vector<Point>(diffs.begin(), diffs.end()));
}

TraditionalCA reduce_to_ca(const ClosedCA& cca) {
    if (!cca.is_validated()) throw Error("reduce_to_ca requires a validated closed CA");
    const Neighbourhood ext = extended_neighbourhood(cca.neigh());
    const auto diam = ext.diameter();
    std::vector<int> dims(diam.size());
    Point centre(diam.size());
    for (std::size_t i = 0; i < diam.size(); ++i) {
        dims[i] = 4 * diam[i] + 1;
        centre[i] = 2 * diam[i];
    }
    const Lattice scratch(dims);
    const CcaStepper stepper(cca, scratch, InteractionSchedule::sequential);

    std::vector<std::size_t> placed;
    for (const auto& e : ext.offsets()) {
        Point p = centre;
        for (std::size_t i = 0; i < p.size(); ++i) p[i] += e[i];
        placed.push_back(scratch.index_of(p));
    }
    // Only the translates covering the centre can change it. Applying them
    // first is a valid order, and they read nothing outside centre + ext.
    std::vector<std::size_t> bases;
    for (const auto& n : cca.neigh().offsets()) {
        Point p = centre;
        for (std::size_t i = 0; i < p.size(); ++i) p[i] -= n[i];
        bases.push_back(scratch.index_of(p));
    }
    const std::size_t centre_index = scratch.index_of(centre);

    const State n = cca.alphabet().size();
    const std::size_t rows = RuleTable::rows_for(n, ext.size());
    std::vector<State> outputs(rows);
    const auto& update = cca.update();

#pragma omp parallel if (rows >= parallel_cell_threshold)
    {
        std::vector<State> cells(scratch.cell_count(), 0);
        std::vector<State> input(ext.size());
#pragma omp for schedule(static)
        for (std::int64_t r = 0; r < static_cast<std::int64_t>(rows); ++r) {
            std::fill(cells.begin(), cells.end(), 0);
            decode_configuration(static_cast<std::uint64_t>(r), n, input);
            for (std::size_t i = 0; i < placed.size(); ++i) cells[placed[i]] = input[i];
            for (std::size_t b : bases) stepper.apply_at(cells, b);
            outputs[static_cast<std::size_t>(r)] = update.row(cells[centre_index])[0];
        }
    }
    return TraditionalCA(cca.alphabet(), ext, RuleTable(cca.alphabet(), ext.size(), 1, std::move(outputs)));
}

} // namespace cca
