#pragma once

// Shared vocabulary: lattices, alphabets, neighbourhoods, configurations and
// rule tables. Everything here is a value type; no operation mutates its
// inputs.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cca {

using State = std::uint32_t;

// A lattice point or an offset. Offsets are unbounded; points produced by
// Lattice::wrap are canonical (0 <= coord < extent).
using Point = std::vector<int>;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised when an enumeration or exhaustive check would exceed its budget.
class CeilingExceeded : public Error {
public:
    using Error::Error;
};

std::string format_point(const Point& p);

/// Finite periodic lattice (a torus) standing in for Z^d.
class Lattice {
public:
    Lattice() = default;
    explicit Lattice(std::vector<int> dims);

    static Lattice ring(int cells) { return Lattice({cells}); }

    std::size_t dimension() const { return dims_.size(); }
    const std::vector<int>& dims() const { return dims_; }
    int extent(std::size_t axis) const { return dims_[axis]; }
    std::size_t cell_count() const { return cells_; }

    Point wrap(const Point& p) const;
    // Row-major index of wrap(p); the last coordinate varies fastest.
    std::size_t index_of(const Point& p) const;
    Point point_of(std::size_t index) const;

    bool operator==(const Lattice&) const = default;

private:
    std::vector<int> dims_;
    std::size_t cells_ = 0;
};

Point wrap(const Point& p, const Lattice& lattice);

/// States 0..size-1. A product alphabet keeps its factor sizes so composite
/// states can be packed and unpacked (mixed radix, first factor most
/// significant). A plain alphabet has a single factor.
class Alphabet {
public:
    Alphabet() : Alphabet(1) {}
    explicit Alphabet(State size);
    static Alphabet product(std::vector<State> factors);

    State size() const { return size_; }
    const std::vector<State>& factors() const { return factors_; }
    bool is_product() const { return factors_.size() > 1; }
    bool contains(State s) const { return s < size_; }

    State pack(std::span<const State> parts) const;
    std::vector<State> unpack(State s) const;
    State component(State s, std::size_t factor) const;

    bool operator==(const Alphabet&) const = default;

private:
    State size_ = 1;
    std::vector<State> factors_;
};

/// Ordered list of distinct offsets. Order fixes the tuple positions used by
/// rule tables.
class Neighbourhood {
public:
    Neighbourhood() = default;
    explicit Neighbourhood(std::vector<Point> offsets);

    static Neighbourhood origin(std::size_t dimension);

    std::size_t size() const { return offsets_.size(); }
    std::size_t dimension() const { return offsets_.empty() ? 0 : offsets_.front().size(); }
    const std::vector<Point>& offsets() const { return offsets_; }
    const Point& operator[](std::size_t i) const { return offsets_[i]; }

    std::optional<std::size_t> position_of(const Point& offset) const;
    // Per-axis max - min over the offsets.
    std::vector<int> diameter() const;

    bool operator==(const Neighbourhood&) const = default;

private:
    std::vector<Point> offsets_;
};

// Sorted, deduplicated union of the offsets of both schemes.
Neighbourhood merge(const Neighbourhood& a, const Neighbourhood& b);

/// Total assignment of states to the cells of a lattice, row-major.
class Configuration {
public:
    Configuration() = default;
    explicit Configuration(Lattice lattice, State fill = 0);
    Configuration(Lattice lattice, std::vector<State> cells);

    const Lattice& lattice() const { return lattice_; }
    std::size_t size() const { return cells_.size(); }
    std::span<const State> cells() const { return cells_; }
    std::span<State> cells() { return cells_; }

    State operator[](std::size_t i) const { return cells_[i]; }
    State& operator[](std::size_t i) { return cells_[i]; }
    State at(const Point& p) const { return cells_[lattice_.index_of(p)]; }

    // Throws if any entry lies outside the alphabet.
    void check_alphabet(const Alphabet& alphabet) const;

    bool operator==(const Configuration&) const = default;

private:
    Lattice lattice_;
    std::vector<State> cells_;
};

std::vector<State> read_region(const Configuration& c, const Point& base, const Neighbourhood& offsets);

Configuration write_region(Configuration c, const Point& base, const Neighbourhood& offsets,
                           std::span<const State> values, const Alphabet& alphabet);

// Factor `factor` of every cell of a configuration over a product alphabet.
Configuration project(const Configuration& c, const Alphabet& alphabet, std::size_t factor);
// Inverse of project: packs one configuration per factor.
Configuration combine(const Alphabet& alphabet, std::span<const Configuration> parts);

// Configuration <-> index in 0..|alphabet|^cells, first cell most significant.
std::uint64_t encode_configuration(std::span<const State> cells, State alphabet_size);
void decode_configuration(std::uint64_t index, State alphabet_size, std::span<State> cells);
// |alphabet|^cells, or nullopt when it does not fit in 64 bits.
std::optional<std::uint64_t> configuration_count(State alphabet_size, std::size_t cells);

/// Explicit local map from state tuples of length arity_in to tuples of
/// length arity_out. Rows are indexed by the input tuple read as a mixed-radix
/// number, first element most significant.
class RuleTable {
public:
    RuleTable() = default;
    RuleTable(Alphabet alphabet, std::size_t arity_in, std::size_t arity_out, std::vector<State> outputs);

    template <class Fn>
    static RuleTable from_function(const Alphabet& alphabet, std::size_t arity_in, std::size_t arity_out, Fn&& fn);

    static RuleTable identity(const Alphabet& alphabet, std::size_t arity);
    // Hard cap on the number of rows a table may have.
    static constexpr std::size_t max_rows = std::size_t{1} << 24;
    static std::size_t rows_for(State alphabet_size, std::size_t arity_in);

    const Alphabet& alphabet() const { return alphabet_; }
    std::size_t arity_in() const { return arity_in_; }
    std::size_t arity_out() const { return arity_out_; }
    std::size_t row_count() const { return rows_; }
    const std::vector<State>& outputs() const { return outputs_; }

    std::size_t row_index(std::span<const State> input) const;
    std::vector<State> row_input(std::size_t row) const;
    std::span<const State> row(std::size_t index) const {
        return {outputs_.data() + index * arity_out_, arity_out_};
    }
    std::span<const State> operator()(std::span<const State> input) const { return row(row_index(input)); }

    bool operator==(const RuleTable&) const = default;

private:
    Alphabet alphabet_;
    std::size_t arity_in_ = 0;
    std::size_t arity_out_ = 0;
    std::size_t rows_ = 0;
    std::vector<State> outputs_;
};

template <class Fn>
RuleTable RuleTable::from_function(const Alphabet& alphabet, std::size_t arity_in, std::size_t arity_out, Fn&& fn) {
    const std::size_t rows = rows_for(alphabet.size(), arity_in);
    std::vector<State> outputs(rows * arity_out);
    std::vector<State> input(arity_in, 0);
    for (std::size_t r = 0; r < rows; ++r) {
        fn(std::span<const State>(input), std::span<State>(outputs.data() + r * arity_out, arity_out));
        // odometer, last position fastest
        for (std::size_t i = arity_in; i-- > 0;) {
            if (++input[i] < alphabet.size()) break;
            input[i] = 0;
        }
    }
    return RuleTable(alphabet, arity_in, arity_out, std::move(outputs));
}

} // namespace cca
