#include "cca/core.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

namespace cca {

namespace {

int floor_mod(long long v, int m) {
    const long long r = v % m;
    return static_cast<int>(r < 0 ? r + m : r);
}

} // namespace

std::string format_point(const Point& p) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) os << ',';
        os << p[i];
    }
    os << ')';
    return os.str();
}

// --- Lattice -----------------------------------------------------------------

Lattice::Lattice(std::vector<int> dims) : dims_(std::move(dims)) {
    if (dims_.empty()) throw Error("lattice needs at least one dimension");
    cells_ = 1;
    for (int e : dims_) {
        if (e < 1) throw Error("lattice extents must be positive");
        if (cells_ > std::numeric_limits<std::size_t>::max() / static_cast<std::size_t>(e))
            throw Error("lattice too large");
        cells_ *= static_cast<std::size_t>(e);
    }
}

Point Lattice::wrap(const Point& p) const {
    if (p.size() != dims_.size())
        throw Error("point " + format_point(p) + " does not match lattice dimension " +
                    std::to_string(dims_.size()));
    Point out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[i] = floor_mod(p[i], dims_[i]);
    return out;
}

std::size_t Lattice::index_of(const Point& p) const {
    if (p.size() != dims_.size())
        throw Error("point " + format_point(p) + " does not match lattice dimension " +
                    std::to_string(dims_.size()));
    std::size_t index = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        index = index * static_cast<std::size_t>(dims_[i]) + static_cast<std::size_t>(floor_mod(p[i], dims_[i]));
    return index;
}

Point Lattice::point_of(std::size_t index) const {
    Point p(dims_.size());
    for (std::size_t i = dims_.size(); i-- > 0;) {
        p[i] = static_cast<int>(index % static_cast<std::size_t>(dims_[i]));
        index /= static_cast<std::size_t>(dims_[i]);
    }
    return p;
}

Point wrap(const Point& p, const Lattice& lattice) { return lattice.wrap(p); }

// --- Alphabet ----------------------------------------------------------------

Alphabet::Alphabet(State size) : size_(size), factors_{size} {
    if (size < 1) throw Error("alphabet size must be at least 1");
}

Alphabet Alphabet::product(std::vector<State> factors) {
    if (factors.empty()) throw Error("product alphabet needs at least one factor");
    std::uint64_t total = 1;
    for (State f : factors) {
        if (f < 1) throw Error("alphabet factors must be at least 1");
        total *= f;
        if (total > std::numeric_limits<State>::max()) throw Error("product alphabet too large");
    }
    Alphabet a(static_cast<State>(total));
    a.factors_ = std::move(factors);
    return a;
}

State Alphabet::pack(std::span<const State> parts) const {
    if (parts.size() != factors_.size()) throw Error("wrong number of alphabet components");
    State s = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] >= factors_[i]) throw Error("alphabet component out of range");
        s = s * factors_[i] + parts[i];
    }
    return s;
}

std::vector<State> Alphabet::unpack(State s) const {
    std::vector<State> parts(factors_.size());
    for (std::size_t i = factors_.size(); i-- > 0;) {
        parts[i] = s % factors_[i];
        s /= factors_[i];
    }
    return parts;
}

State Alphabet::component(State s, std::size_t factor) const {
    for (std::size_t i = factors_.size(); i-- > factor + 1;) s /= factors_[i];
    return s % factors_[factor];
}

// --- Neighbourhood -----------------------------------------------------------

Neighbourhood::Neighbourhood(std::vector<Point> offsets) : offsets_(std::move(offsets)) {
    if (offsets_.empty()) throw Error("neighbourhood must be nonempty");
    const std::size_t d = offsets_.front().size();
    if (d == 0) throw Error("neighbourhood offsets must have at least one coordinate");
    std::set<Point> seen;
    for (const auto& o : offsets_) {
        if (o.size() != d) throw Error("neighbourhood offsets have mixed dimensions");
        if (!seen.insert(o).second) throw Error("duplicate neighbourhood offset " + format_point(o));
    }
}

Neighbourhood Neighbourhood::origin(std::size_t dimension) {
    return Neighbourhood({Point(dimension, 0)});
}

std::optional<std::size_t> Neighbourhood::position_of(const Point& offset) const {
    auto it = std::find(offsets_.begin(), offsets_.end(), offset);
    if (it == offsets_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - offsets_.begin());
}

std::vector<int> Neighbourhood::diameter() const {
    std::vector<int> lo(dimension()), hi(dimension());
    for (std::size_t i = 0; i < dimension(); ++i) lo[i] = hi[i] = offsets_.front()[i];
    for (const auto& o : offsets_)
        for (std::size_t i = 0; i < o.size(); ++i) {
            lo[i] = std::min(lo[i], o[i]);
            hi[i] = std::max(hi[i], o[i]);
        }
    for (std::size_t i = 0; i < lo.size(); ++i) hi[i] -= lo[i];
    return hi;
}

Neighbourhood merge(const Neighbourhood& a, const Neighbourhood& b) {
    if (a.dimension() != b.dimension()) throw Error("cannot merge neighbourhoods of different dimension");
    std::set<Point> all(a.offsets().begin(), a.offsets().end());
    all.insert(b.offsets().begin(), b.offsets().end());
    return Neighbourhood(std::vector<Point>(all.begin(), all.end()));
}

// --- Configuration -----------------------------------------------------------

Configuration::Configuration(Lattice lattice, State fill)
    : lattice_(std::move(lattice)), cells_(lattice_.cell_count(), fill) {}

Configuration::Configuration(Lattice lattice, std::vector<State> cells)
    : lattice_(std::move(lattice)), cells_(std::move(cells)) {
    if (cells_.size() != lattice_.cell_count())
        throw Error("configuration has " + std::to_string(cells_.size()) + " cells, lattice has " +
                    std::to_string(lattice_.cell_count()));
}

void Configuration::check_alphabet(const Alphabet& alphabet) const {
    for (std::size_t i = 0; i < cells_.size(); ++i)
        if (!alphabet.contains(cells_[i]))
            throw Error("cell " + std::to_string(i) + " holds state " + std::to_string(cells_[i]) +
                        " outside alphabet of size " + std::to_string(alphabet.size()));
}

namespace {

Point add(const Point& a, const Point& b) {
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

void check_dimensions(const Lattice& lattice, const Point& base, const Neighbourhood& offsets) {
    if (base.size() != lattice.dimension() || offsets.dimension() != lattice.dimension())
        throw Error("dimension mismatch between base/offsets and lattice");
}

} // namespace

std::vector<State> read_region(const Configuration& c, const Point& base, const Neighbourhood& offsets) {
    check_dimensions(c.lattice(), base, offsets);
    std::vector<State> out;
    out.reserve(offsets.size());
    for (const auto& o : offsets.offsets()) out.push_back(c.at(add(base, o)));
    return out;
}

Configuration write_region(Configuration c, const Point& base, const Neighbourhood& offsets,
                           std::span<const State> values, const Alphabet& alphabet) {
    check_dimensions(c.lattice(), base, offsets);
    if (values.size() != offsets.size())
        throw Error("write_region: " + std::to_string(values.size()) + " values for " +
                    std::to_string(offsets.size()) + " offsets");
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!alphabet.contains(values[i])) throw Error("write_region: state out of alphabet range");
        c[c.lattice().index_of(add(base, offsets[i]))] = values[i];
    }
    return c;
}

Configuration project(const Configuration& c, const Alphabet& alphabet, std::size_t factor) {
    if (factor >= alphabet.factors().size()) throw Error("no such alphabet factor");
    Configuration out(c.lattice());
    for (std::size_t i = 0; i < c.size(); ++i) out[i] = alphabet.component(c[i], factor);
    return out;
}

Configuration combine(const Alphabet& alphabet, std::span<const Configuration> parts) {
    if (parts.size() != alphabet.factors().size()) throw Error("wrong number of register configurations");
    Configuration out(parts.front().lattice());
    std::vector<State> tuple(parts.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        for (std::size_t f = 0; f < parts.size(); ++f) {
            if (parts[f].lattice() != out.lattice()) throw Error("register configurations on different lattices");
            tuple[f] = parts[f][i];
        }
        out[i] = alphabet.pack(tuple);
    }
    return out;
}

std::uint64_t encode_configuration(std::span<const State> cells, State alphabet_size) {
    std::uint64_t index = 0;
    for (State s : cells) index = index * alphabet_size + s;
    return index;
}

void decode_configuration(std::uint64_t index, State alphabet_size, std::span<State> cells) {
    for (std::size_t i = cells.size(); i-- > 0;) {
        cells[i] = static_cast<State>(index % alphabet_size);
        index /= alphabet_size;
    }
}

std::optional<std::uint64_t> configuration_count(State alphabet_size, std::size_t cells) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < cells; ++i) {
        if (alphabet_size > 1 && total > std::numeric_limits<std::uint64_t>::max() / alphabet_size)
            return std::nullopt;
        total *= alphabet_size;
    }
    return total;
}

// --- RuleTable ---------------------------------------------------------------

std::size_t RuleTable::rows_for(State alphabet_size, std::size_t arity_in) {
    std::size_t rows = 1;
    for (std::size_t i = 0; i < arity_in; ++i) {
        if (alphabet_size > 1 && rows > max_rows / alphabet_size)
            throw CeilingExceeded("rule table with " + std::to_string(arity_in) + " inputs over " +
                                  std::to_string(alphabet_size) + " states exceeds the row limit");
        rows *= alphabet_size;
    }
    return rows;
}

RuleTable::RuleTable(Alphabet alphabet, std::size_t arity_in, std::size_t arity_out, std::vector<State> outputs)
    : alphabet_(std::move(alphabet)), arity_in_(arity_in), arity_out_(arity_out), outputs_(std::move(outputs)) {
    if (arity_in_ == 0 || arity_out_ == 0) throw Error("rule table arities must be positive");
    rows_ = rows_for(alphabet_.size(), arity_in_);
    if (outputs_.size() != rows_ * arity_out_)
        throw Error("rule table has " + std::to_string(outputs_.size()) + " output entries, expected " +
                    std::to_string(rows_ * arity_out_));
    for (State s : outputs_)
        if (!alphabet_.contains(s)) throw Error("rule table output " + std::to_string(s) + " outside alphabet");
}

RuleTable RuleTable::identity(const Alphabet& alphabet, std::size_t arity) {
    return from_function(alphabet, arity, arity, [](std::span<const State> in, std::span<State> out) {
        std::copy(in.begin(), in.end(), out.begin());
    });
}

std::size_t RuleTable::row_index(std::span<const State> input) const {
    if (input.size() != arity_in_) throw Error("rule table input has wrong arity");
    std::size_t r = 0;
    for (State s : input) {
        if (!alphabet_.contains(s)) throw Error("rule table input state out of range");
        r = r * alphabet_.size() + s;
    }
    return r;
}

std::vector<State> RuleTable::row_input(std::size_t row) const {
    std::vector<State> in(arity_in_);
    for (std::size_t i = arity_in_; i-- > 0;) {
        in[i] = static_cast<State>(row % alphabet_.size());
        row /= alphabet_.size();
    }
    return in;
}

} // namespace cca
