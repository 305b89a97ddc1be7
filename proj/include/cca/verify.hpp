#pragma once

// Decision procedures with witnesses: commutativity, bijectivity,
// intersectability and compatibility of region configurations, valid
// colourings. Also the inverse of a reversible closed CA.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cca/automata.hpp"
#include "cca/commutativity.hpp"
#include "cca/core.hpp"

namespace cca {

bool check_bijection(const RuleTable& table);
RuleTable invert_table(const RuleTable& table);

/// Closed CA with update g^-1 and interaction g o f^-1 o g^-1 (g applied
/// cell-wise on the neighbourhood). Its step undoes a step of `cca`.
ClosedCA invert_cca(const ClosedCA& cca);

/// A finite set of offsets.
class Region {
public:
    explicit Region(std::vector<Point> offsets);
    const std::vector<Point>& offsets() const { return offsets_; }
    std::size_t size() const { return offsets_.size(); }
    std::size_t dimension() const { return offsets_.front().size(); }
    bool operator==(const Region&) const = default;

private:
    std::vector<Point> offsets_;
};

/// Control states over a region, one per offset.
struct RegionConfig {
    RegionConfig(Region region, std::vector<State> states);
    Region region;
    std::vector<State> states;
};

struct IntersectionWitness {
    Point shift;                    // x in "R1 meets x + R2"
    std::vector<Point> cells;       // sorted R1 u (x + R2)
    std::vector<State> states;      // merged assignment over `cells`
};

std::string describe(const IntersectionWitness& w);

/// Searches every shift x at which R1 and x + R2 meet without coinciding for
/// a consistent merged assignment. Scan order: the zero shift, then forward
/// (lexicographically positive) shifts, then backward ones, each ascending.
std::optional<IntersectionWitness> check_intersectable(const RegionConfig& first, const RegionConfig& second);

struct CompatibilityReport {
    bool ok = true;
    std::size_t first = 0;
    std::size_t second = 0;
    std::optional<IntersectionWitness> witness;
};

/// No ordered pair (self-pairs included) may be intersectable.
CompatibilityReport check_compatible(std::span<const RegionConfig> configs);

/// Periodic colour labelling given by one rectangular period.
struct ColourTile {
    ColourTile(Lattice shape, std::vector<State> colours);
    Lattice shape;
    std::vector<State> colours;   // row-major over `shape`
    State colour_at(const Point& p) const { return colours[shape.index_of(p)]; }
    State colour_count() const;
};

// Every cell differs in colour from the cells at all nonzero offsets of N.
bool check_colouring(const ColourTile& tile, const Neighbourhood& neigh);
// Lattice extents are multiples of the tile extents.
bool tile_fits(const ColourTile& tile, const Lattice& lattice);

} // namespace cca
