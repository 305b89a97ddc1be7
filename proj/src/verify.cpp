#include "cca/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace cca {

namespace {

// Assignments per commutativity offset beyond which the check gives up.
constexpr std::uint64_t commutativity_ceiling = std::uint64_t{1} << 26;

bool is_zero(const Point& p) {
    return std::all_of(p.begin(), p.end(), [](int v) { return v == 0; });
}

Point plus(const Point& a, const Point& b) {
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Point minus(const Point& a, const Point& b) {
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

void apply_at(const RuleTable& f, std::span<const std::size_t> positions, std::vector<State>& cells) {
    const State n = f.alphabet().size();
    std::size_t r = 0;
    for (std::size_t p : positions) r = r * n + cells[p];
    const auto row = f.row(r);
    for (std::size_t j = 0; j < positions.size(); ++j) cells[positions[j]] = row[j];
}

std::string join(std::span<const State> states) {
    std::ostringstream os;
    for (std::size_t i = 0; i < states.size(); ++i) os << (i ? " " : "") << states[i];
    return os.str();
}

} // namespace

std::string describe(const CommutativityWitness& w) {
    std::ostringstream os;
    os << "offset " << format_point(w.delta) << ", region";
    for (const auto& p : w.region) os << ' ' << format_point(p);
    os << ", states [" << join(w.assignment) << "]: f_0 then f_delta gives [" << join(w.origin_first)
       << "], f_delta then f_0 gives [" << join(w.delta_first) << "]";
    return os.str();
}

CommutativityReport check_translation_commutative(const RuleTable& interaction, const Neighbourhood& neigh,
                                                  const Alphabet& alphabet) {
    if (interaction.arity_in() != neigh.size() || interaction.arity_out() != neigh.size())
        throw Error("interaction arity does not match the neighbourhood size " + std::to_string(neigh.size()));
    if (interaction.alphabet().size() != alphabet.size()) throw Error("interaction alphabet mismatch");

    const State n = alphabet.size();
    const Point zero(neigh.dimension(), 0);
    const Neighbourhood ext = extended_neighbourhood(neigh);
    for (const Point& delta : ext.offsets()) {
        if (!(delta > zero)) continue;

        std::set<Point> cells(neigh.offsets().begin(), neigh.offsets().end());
        for (const auto& o : neigh.offsets()) cells.insert(plus(o, delta));
        std::vector<Point> region(cells.begin(), cells.end());
        auto position = [&](const Point& p) {
            return static_cast<std::size_t>(std::lower_bound(region.begin(), region.end(), p) - region.begin());
        };
        std::vector<std::size_t> at_origin, at_delta;
        for (const auto& o : neigh.offsets()) {
            at_origin.push_back(position(o));
            at_delta.push_back(position(plus(o, delta)));
        }

        const auto count = configuration_count(n, region.size());
        if (!count || *count > commutativity_ceiling)
            throw CeilingExceeded("commutativity check over " + std::to_string(region.size()) +
                                  " cells exceeds the assignment ceiling");
        std::vector<State> start(region.size()), a(region.size()), b(region.size());
        for (std::uint64_t i = 0; i < *count; ++i) {
            decode_configuration(i, n, start);
            a = start;
            apply_at(interaction, at_origin, a);
            apply_at(interaction, at_delta, a);
            b = start;
            apply_at(interaction, at_delta, b);
            apply_at(interaction, at_origin, b);
            if (a != b) return {false, CommutativityWitness{delta, region, start, a, b}};
        }
    }
    return {};
}

bool check_bijection(const RuleTable& table) {
    if (table.arity_in() != table.arity_out()) throw Error("bijection check needs equal input and output arity");
    std::vector<char> hit(table.row_count(), 0);
    for (std::size_t r = 0; r < table.row_count(); ++r) {
        const std::size_t image = table.row_index(table.row(r));
        if (hit[image]) return false;
        hit[image] = 1;
    }
    return true;
}

RuleTable invert_table(const RuleTable& table) {
    if (!check_bijection(table)) throw Error("rule table is not a bijection");
    std::vector<State> outputs(table.outputs().size());
    for (std::size_t r = 0; r < table.row_count(); ++r) {
        const std::size_t image = table.row_index(table.row(r));
        const auto input = table.row_input(r);
        std::copy(input.begin(), input.end(), outputs.begin() + static_cast<std::ptrdiff_t>(image * table.arity_out()));
    }
    return RuleTable(table.alphabet(), table.arity_in(), table.arity_out(), std::move(outputs));
}

ClosedCA invert_cca(const ClosedCA& cca) {
    if (!cca.is_validated()) throw Error("invert_cca requires a validated closed CA");
    if (!check_bijection(cca.interaction()) || !check_bijection(cca.update()))
        throw Error("closed CA is not reversible: interaction and update must both be bijections");
    const RuleTable f_inv = invert_table(cca.interaction());
    const RuleTable g_inv = invert_table(cca.update());
    const RuleTable& g = cca.update();
    RuleTable interaction = RuleTable::from_function(
        cca.alphabet(), cca.neigh().size(), cca.neigh().size(), [&](std::span<const State> in, std::span<State> out) {
            std::vector<State> t(in.size());
            for (std::size_t i = 0; i < in.size(); ++i) t[i] = g_inv.row(in[i])[0];
            const auto back = f_inv(t);
            for (std::size_t i = 0; i < in.size(); ++i) out[i] = g.row(back[i])[0];
        });
    return ClosedCA::validated(cca.alphabet(), cca.neigh(), std::move(interaction), g_inv);
}

// --- regions -----------------------------------------------------------------

Region::Region(std::vector<Point> offsets) : offsets_(std::move(offsets)) {
    if (offsets_.empty()) throw Error("region must be nonempty");
    std::set<Point> seen;
    for (const auto& o : offsets_) {
        if (o.size() != offsets_.front().size() || o.empty()) throw Error("region offsets have mixed dimensions");
        if (!seen.insert(o).second) throw Error("duplicate region offset " + format_point(o));
    }
}

RegionConfig::RegionConfig(Region r, std::vector<State> s) : region(std::move(r)), states(std::move(s)) {
    if (states.size() != region.size()) throw Error("region configuration needs one state per region offset");
}

std::string describe(const IntersectionWitness& w) {
    std::ostringstream os;
    os << "shift " << format_point(w.shift) << ", cells";
    for (const auto& p : w.cells) os << ' ' << format_point(p);
    os << ", merged states [" << join(w.states) << "]";
    return os.str();
}

std::optional<IntersectionWitness> check_intersectable(const RegionConfig& first, const RegionConfig& second) {
    if (first.region.dimension() != second.region.dimension())
        throw Error("region configurations have different dimensions");
    const auto& r1 = first.region.offsets();
    const auto& r2 = second.region.offsets();

    std::set<Point> shifts;
    for (const auto& a : r1)
        for (const auto& b : r2) shifts.insert(minus(a, b));
    const Point zero(first.region.dimension(), 0);
    std::vector<Point> ordered;
    if (shifts.count(zero)) ordered.push_back(zero);
    for (const auto& x : shifts)
        if (x > zero) ordered.push_back(x);
    for (const auto& x : shifts)
        if (x < zero) ordered.push_back(x);

    const std::set<Point> set1(r1.begin(), r1.end());
    for (const auto& x : ordered) {
        std::set<Point> placed;
        for (const auto& b : r2) placed.insert(plus(x, b));
        if (placed == set1) continue; // coinciding regions do not intersect non-trivially

        std::map<Point, State> merged;
        for (std::size_t i = 0; i < r1.size(); ++i) merged[r1[i]] = first.states[i];
        bool consistent = true;
        for (std::size_t i = 0; i < r2.size() && consistent; ++i) {
            const auto [it, inserted] = merged.emplace(plus(x, r2[i]), second.states[i]);
            if (!inserted && it->second != second.states[i]) consistent = false;
        }
        if (!consistent) continue;
        IntersectionWitness w{x, {}, {}};
        for (const auto& [p, s] : merged) {
            w.cells.push_back(p);
            w.states.push_back(s);
        }
        return w;
    }
    return std::nullopt;
}

CompatibilityReport check_compatible(std::span<const RegionConfig> configs) {
    for (std::size_t i = 0; i < configs.size(); ++i)
        for (std::size_t j = 0; j < configs.size(); ++j)
            if (auto w = check_intersectable(configs[i], configs[j])) return {false, i, j, std::move(w)};
    return {};
}

// --- colourings --------------------------------------------------------------

ColourTile::ColourTile(Lattice s, std::vector<State> c) : shape(std::move(s)), colours(std::move(c)) {
    if (colours.size() != shape.cell_count()) throw Error("colour tile needs one colour per tile cell");
}

State ColourTile::colour_count() const { return *std::max_element(colours.begin(), colours.end()) + 1; }

bool check_colouring(const ColourTile& tile, const Neighbourhood& neigh) {
    if (tile.shape.dimension() != neigh.dimension()) throw Error("colour tile and neighbourhood dimensions differ");
    for (std::size_t x = 0; x < tile.shape.cell_count(); ++x) {
        const Point p = tile.shape.point_of(x);
        for (const auto& o : neigh.offsets()) {
            if (is_zero(o)) continue;
            if (tile.colour_at(plus(p, o)) == tile.colours[x]) return false;
        }
    }
    return true;
}

bool tile_fits(const ColourTile& tile, const Lattice& lattice) {
    if (tile.shape.dimension() != lattice.dimension()) return false;
    for (std::size_t i = 0; i < lattice.dimension(); ++i)
        if (lattice.extent(i) % tile.shape.extent(i) != 0) return false;
    return true;
}

} // namespace cca
