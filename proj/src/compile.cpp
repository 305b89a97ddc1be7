#include "cca/compile.hpp"

#include <algorithm>
#include <set>

namespace cca {

// --- AdditionRelation --------------------------------------------------------

AdditionRelation::AdditionRelation(std::vector<State> to_integer)
    : to_int_(std::move(to_integer)), from_int_(to_int_.size(), 0) {
    if (to_int_.empty()) throw Error("addition relation needs at least one state");
    std::vector<char> seen(to_int_.size(), 0);
    for (std::size_t s = 0; s < to_int_.size(); ++s) {
        const State v = to_int_[s];
        if (v >= to_int_.size() || seen[v]) throw Error("addition relation is not a bijection");
        seen[v] = 1;
        from_int_[v] = static_cast<State>(s);
    }
}

AdditionRelation AdditionRelation::canonical(State size) {
    std::vector<State> ids(size);
    for (State s = 0; s < size; ++s) ids[s] = s;
    return AdditionRelation(std::move(ids));
}

State AdditionRelation::add(State a, State b) const { return from_int_[(to_int_[a] + to_int_[b]) % size()]; }

State AdditionRelation::shift(State base, State plus, State minus) const {
    const State n = size();
    return from_int_[(to_int_[base] + to_int_[plus] + n - to_int_[minus]) % n];
}

namespace {

std::vector<std::size_t> positions_in(const Neighbourhood& merged, const Neighbourhood& part) {
    std::vector<std::size_t> pos;
    for (const auto& o : part.offsets()) pos.push_back(*merged.position_of(o));
    return pos;
}

RuleTable register_swap(const Alphabet& pair) {
    return RuleTable::from_function(pair, 1, 1, [&](std::span<const State> in, std::span<State> out) {
        const auto r = pair.unpack(in[0]);
        out[0] = pair.pack(std::vector<State>{r[1], r[0]});
    });
}

} // namespace

// --- CA -> CCA ---------------------------------------------------------------

ClosedCA ca_to_cca(const TraditionalCA& ca) {
    const State n = ca.alphabet().size();
    const Alphabet pair = Alphabet::product({n, n});
    const Neighbourhood neigh = merge(ca.neigh(), Neighbourhood::origin(ca.neigh().dimension()));
    const auto reads = positions_in(neigh, ca.neigh());
    const std::size_t centre = *neigh.position_of(Point(neigh.dimension(), 0));

    RuleTable interaction = RuleTable::from_function(
        pair, neigh.size(), neigh.size(), [&](std::span<const State> in, std::span<State> out) {
            std::copy(in.begin(), in.end(), out.begin());
            std::vector<State> firsts(reads.size());
            for (std::size_t i = 0; i < reads.size(); ++i) firsts[i] = pair.component(in[reads[i]], 0);
            const State next = ca.rule()(firsts)[0];
            out[centre] = pair.pack(std::vector<State>{pair.component(in[centre], 0), next});
        });
    return ClosedCA::validated(pair, neigh, std::move(interaction), register_swap(pair));
}

ClosedCA rca_to_rcca(const TraditionalCA& forward, const TraditionalCA& reverse, const AdditionRelation& add) {
    const State n = forward.alphabet().size();
    if (reverse.alphabet().size() != n) throw Error("forward and reverse CA have different alphabets");
    if (add.size() != n) throw Error("addition relation does not match the alphabet");
    if (forward.neigh().dimension() != reverse.neigh().dimension())
        throw Error("forward and reverse CA have different dimensions");

    const Alphabet pair = Alphabet::product({n, n});
    const Neighbourhood neigh =
        merge(merge(forward.neigh(), reverse.neigh()), Neighbourhood::origin(forward.neigh().dimension()));
    const auto fwd = positions_in(neigh, forward.neigh());
    const auto rev = positions_in(neigh, reverse.neigh());
    const std::size_t centre = *neigh.position_of(Point(neigh.dimension(), 0));

    RuleTable interaction = RuleTable::from_function(
        pair, neigh.size(), neigh.size(), [&](std::span<const State> in, std::span<State> out) {
            std::copy(in.begin(), in.end(), out.begin());
            std::vector<State> a(fwd.size()), b(rev.size());
            for (std::size_t i = 0; i < fwd.size(); ++i) a[i] = pair.component(in[fwd[i]], 0);
            for (std::size_t i = 0; i < rev.size(); ++i) b[i] = pair.component(in[rev[i]], 0);
            const State next = forward.rule()(a)[0];
            const State prev = reverse.rule()(b)[0];
            const auto regs = pair.unpack(in[centre]);
            out[centre] = pair.pack(std::vector<State>{regs[0], add.shift(regs[1], next, prev)});
        });
    return ClosedCA::validated(pair, neigh, std::move(interaction), register_swap(pair));
}

// --- partitioned construction ------------------------------------------------

ClosedCA partitioned_to_cca(std::span<const PartitionRule> rules, const RuleTable& control_update,
                            const RuleTable& extra_update) {
    if (control_update.arity_in() != 1 || control_update.arity_out() != 1 || extra_update.arity_in() != 1 ||
        extra_update.arity_out() != 1)
        throw Error("register updates must be single-cell tables");
    const State n1 = extra_update.alphabet().size();
    const State n2 = control_update.alphabet().size();

    std::vector<RegionConfig> configs;
    std::set<Point> offsets;
    for (const auto& r : rules) {
        if (r.block.arity_in() != r.config.region.size() || r.block.arity_out() != r.config.region.size())
            throw Error("block rule arity must equal its region size");
        if (r.block.alphabet().size() != n1) throw Error("block rule alphabet does not match the first register");
        for (State s : r.config.states)
            if (s >= n2) throw Error("control pattern state outside the control alphabet");
        configs.push_back(r.config);
        offsets.insert(r.config.region.offsets().begin(), r.config.region.offsets().end());
    }
    const auto compat = check_compatible(configs);
    if (!compat.ok)
        throw Error("control patterns " + std::to_string(compat.first) + " and " + std::to_string(compat.second) +
                    " are intersectable: " + describe(*compat.witness));

    const Neighbourhood neigh = offsets.empty() ? Neighbourhood::origin(1)
                                                : Neighbourhood(std::vector<Point>(offsets.begin(), offsets.end()));
    std::vector<std::vector<std::size_t>> where;
    for (const auto& r : rules) where.push_back(positions_in(neigh, Neighbourhood(r.config.region.offsets())));

    const Alphabet cell = Alphabet::product({n1, n2});
    RuleTable interaction = RuleTable::from_function(
        cell, neigh.size(), neigh.size(), [&](std::span<const State> in, std::span<State> out) {
            std::copy(in.begin(), in.end(), out.begin());
            std::size_t matched = rules.size();
            for (std::size_t k = 0; k < rules.size(); ++k) {
                const auto& pos = where[k];
                bool match = true;
                for (std::size_t i = 0; i < pos.size() && match; ++i)
                    match = cell.component(in[pos[i]], 1) == rules[k].config.states[i];
                if (!match) continue;
                if (matched != rules.size()) throw Error("anchor ambiguity: two control patterns match at one base");
                matched = k;
            }
            if (matched == rules.size()) return;
            const auto& pos = where[matched];
            std::vector<State> block_in(pos.size());
            for (std::size_t i = 0; i < pos.size(); ++i) block_in[i] = cell.component(in[pos[i]], 0);
            const auto block_out = rules[matched].block(block_in);
            for (std::size_t i = 0; i < pos.size(); ++i)
                out[pos[i]] = cell.pack(std::vector<State>{block_out[i], cell.component(in[pos[i]], 1)});
        });
    RuleTable update = RuleTable::from_function(cell, 1, 1, [&](std::span<const State> in, std::span<State> out) {
        const auto r = cell.unpack(in[0]);
        out[0] = cell.pack(std::vector<State>{extra_update.row(r[0])[0], control_update.row(r[1])[0]});
    });
    return ClosedCA::validated(cell, neigh, std::move(interaction), std::move(update));
}

RuleTable pair_swap(const Alphabet& alphabet) {
    return RuleTable::from_function(alphabet, 2, 2, [](std::span<const State> in, std::span<State> out) {
        out[0] = in[1];
        out[1] = in[0];
    });
}

ClosedCA margolus_cca(const RuleTable& u, const RuleTable& v) {
    if (u.arity_in() != 2 || u.arity_out() != 2 || v.arity_in() != 2 || v.arity_out() != 2)
        throw Error("Margolus block rules must act on two cells");
    if (u.alphabet().size() != v.alphabet().size()) throw Error("Margolus block rules use different alphabets");
    const Region pair({{0}, {1}});
    const std::vector<PartitionRule> rules{{RegionConfig(pair, {0, 1}), u}, {RegionConfig(pair, {2, 3}), v}};
    const Alphabet control(4);
    const RuleTable flip =
        RuleTable::from_function(control, 1, 1, [](std::span<const State> in, std::span<State> out) {
            out[0] = 3 - in[0];
        });
    return partitioned_to_cca(rules, flip, RuleTable::identity(u.alphabet(), 1));
}

// --- coloured construction ---------------------------------------------------

void ColourSchedule::check() const {
    if (!check_colouring(tile, neigh)) throw Error("colouring gives some cell the colour of a neighbour");
    if (rules.empty()) throw Error("colour schedule needs at least one rule");
    const std::set<State> present(tile.colours.begin(), tile.colours.end());
    for (const auto& r : rules) {
        if (!present.count(r.colour)) throw Error("scheduled colour " + std::to_string(r.colour) + " is not in the tile");
        if (r.rule.arity_in() != neigh.size() || r.rule.arity_out() != 1)
            throw Error("colour rule must map the neighbourhood to one state");
        if (r.rule.alphabet().size() != cells.size()) throw Error("colour rule alphabet does not match the cells");
    }
}

Alphabet coloured_alphabet(const ColourSchedule& schedule) {
    return Alphabet::product(
        {schedule.cells.size(), schedule.tile.colour_count(), static_cast<State>(schedule.rules.size())});
}

ClosedCA coloured_to_cca(const ColourSchedule& schedule) {
    schedule.check();
    const Alphabet cell = coloured_alphabet(schedule);
    const Neighbourhood neigh = merge(schedule.neigh, Neighbourhood::origin(schedule.neigh.dimension()));
    const auto reads = positions_in(neigh, schedule.neigh);
    const std::size_t centre = *neigh.position_of(Point(neigh.dimension(), 0));
    const auto& rules = schedule.rules;
    auto scheduled = [&](State s) {
        const auto r = cell.unpack(s);
        return r[1] == rules[r[2]].colour;
    };

    RuleTable interaction = RuleTable::from_function(
        cell, neigh.size(), neigh.size(), [&](std::span<const State> in, std::span<State> out) {
            std::copy(in.begin(), in.end(), out.begin());
            if (!scheduled(in[centre])) return;
            for (std::size_t i = 0; i < in.size(); ++i)
                if (i != centre && scheduled(in[i])) return;
            const auto regs = cell.unpack(in[centre]);
            std::vector<State> view(reads.size());
            for (std::size_t i = 0; i < reads.size(); ++i) view[i] = cell.component(in[reads[i]], 0);
            out[centre] = cell.pack(std::vector<State>{rules[regs[2]].rule(view)[0], regs[1], regs[2]});
        });
    const State period = static_cast<State>(rules.size());
    RuleTable update = RuleTable::from_function(cell, 1, 1, [&](std::span<const State> in, std::span<State> out) {
        auto r = cell.unpack(in[0]);
        r[2] = (r[2] + 1) % period;
        out[0] = cell.pack(r);
    });
    return ClosedCA::validated(cell, neigh, std::move(interaction), std::move(update));
}

Configuration coloured_configuration(const ColourSchedule& schedule, const Configuration& cells, State clock) {
    if (!tile_fits(schedule.tile, cells.lattice())) throw Error("lattice extents are not multiples of the colour tile");
    if (clock >= schedule.rules.size()) throw Error("clock value outside the schedule period");
    cells.check_alphabet(schedule.cells);
    const Alphabet cell = coloured_alphabet(schedule);
    Configuration out(cells.lattice());
    for (std::size_t x = 0; x < cells.size(); ++x) {
        const State colour = schedule.tile.colour_at(cells.lattice().point_of(x));
        out[x] = cell.pack(std::vector<State>{cells[x], colour, clock});
    }
    return out;
}

void check_coloured_configuration(const ColourSchedule& schedule, const Configuration& c) {
    if (!tile_fits(schedule.tile, c.lattice())) throw Error("lattice extents are not multiples of the colour tile");
    const Alphabet cell = coloured_alphabet(schedule);
    c.check_alphabet(cell);
    for (std::size_t x = 0; x < c.size(); ++x) {
        const auto r = cell.unpack(c[x]);
        if (r[1] != schedule.tile.colour_at(c.lattice().point_of(x)))
            throw Error("cell " + std::to_string(x) + " carries the wrong colour");
        if (r[2] != cell.component(c[0], 2)) throw Error("clock registers are inconsistent across cells");
    }
}

Configuration step_coloured(const ClosedCA& cca, const ColourSchedule& schedule, const Configuration& c) {
    check_coloured_configuration(schedule, c);
    return step_cca(cca, c);
}

} // namespace cca
