#include "cca/search.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "cca/kernels.hpp"

namespace cca {

TargetMap TargetMap::from_permutation(Lattice lattice, std::vector<std::uint64_t> image) {
    std::vector<char> seen(image.size(), 0);
    for (auto v : image) {
        if (v >= image.size() || seen[v]) throw Error("target map is not a permutation of configurations");
        seen[v] = 1;
    }
    return {Kind::permutation, std::move(lattice), std::move(image)};
}

std::string TargetMap::name() const {
    switch (kind) {
    case Kind::identity: return "identity";
    case Kind::shift_right: return "shift-right";
    case Kind::permutation: return "permutation";
    }
    return "?";
}

Configuration shift_right(const Configuration& c) {
    const Lattice& lat = c.lattice();
    Configuration out(lat);
    for (std::size_t x = 0; x < c.size(); ++x) {
        Point p = lat.point_of(x);
        p[0] -= 1;
        out[x] = c.at(p);
    }
    return out;
}

void SearchSpec::check() const {
    if (alphabet_size < 1) throw Error("search alphabet must have at least one state");
    if (lattices.empty()) throw Error("search needs at least one lattice");
    for (const auto& lat : lattices) {
        check_lattice(lat, neigh);
        const auto count = configuration_count(alphabet_size, lat.cell_count());
        if (!count || *count > configuration_ceiling)
            throw CeilingExceeded("lattice with " + std::to_string(lat.cell_count()) +
                                  " cells exceeds the configuration ceiling of " +
                                  std::to_string(configuration_ceiling));
    }
    if (target.kind == TargetMap::Kind::permutation)
        for (const auto& lat : lattices)
            if (lat != target.lattice) throw Error("a permutation target only applies to its own lattice");
}

namespace {

double factorial(double k) {
    double r = 1;
    for (double i = 2; i <= k; ++i) r *= i;
    return r;
}

// Interaction tables in lexicographic order of their output vectors.
class InteractionGenerator {
public:
    InteractionGenerator(const Alphabet& alphabet, std::size_t arity, bool bijective)
        : alphabet_(alphabet), arity_(arity), bijective_(bijective),
          rows_(RuleTable::rows_for(alphabet.size(), arity)) {
        if (bijective_) {
            perm_.resize(rows_);
            std::iota(perm_.begin(), perm_.end(), std::size_t{0});
            RuleTable probe = RuleTable::identity(alphabet_, arity_);
            for (std::size_t r = 0; r < rows_; ++r) tuples_.push_back(probe.row_input(r));
        } else {
            digits_.assign(rows_ * arity_, 0);
        }
    }

    bool next(std::vector<State>& outputs) {
        if (done_) return false;
        if (!started_) {
            started_ = true;
        } else if (bijective_) {
            if (!std::next_permutation(perm_.begin(), perm_.end())) return done_ = true, false;
        } else {
            std::size_t i = digits_.size();
            while (i-- > 0) {
                if (++digits_[i] < alphabet_.size()) break;
                digits_[i] = 0;
            }
            if (i == static_cast<std::size_t>(-1)) return done_ = true, false;
        }
        if (bijective_) {
            outputs.clear();
            for (std::size_t r = 0; r < rows_; ++r)
                outputs.insert(outputs.end(), tuples_[perm_[r]].begin(), tuples_[perm_[r]].end());
        } else {
            outputs = digits_;
        }
        return true;
    }

private:
    Alphabet alphabet_;
    std::size_t arity_;
    bool bijective_;
    std::size_t rows_;
    bool started_ = false;
    bool done_ = false;
    std::vector<std::size_t> perm_;
    std::vector<std::vector<State>> tuples_;
    std::vector<State> digits_;
};

std::vector<RuleTable> update_tables(const Alphabet& alphabet, bool bijective) {
    std::vector<RuleTable> out;
    InteractionGenerator gen(alphabet, 1, bijective);
    std::vector<State> outputs;
    while (gen.next(outputs)) out.emplace_back(alphabet, 1, 1, outputs);
    return out;
}

void check_ceiling(const SearchSpec& spec) {
    const double size = enumeration_size(spec);
    if (!(size <= spec.enumeration_ceiling))
        throw CeilingExceeded("search space of " + std::to_string(size) + " candidates exceeds the ceiling of " +
                              std::to_string(spec.enumeration_ceiling));
}

} // namespace

double enumeration_size(const SearchSpec& spec) {
    const double n = spec.alphabet_size;
    const double rows = std::pow(n, static_cast<double>(spec.neigh.size()));
    if (spec.require_reversible) return factorial(rows) * factorial(n);
    return std::pow(n, rows * static_cast<double>(spec.neigh.size())) * std::pow(n, n);
}

EnumerationCounts enumerate_ccas(const SearchSpec& spec, const std::function<bool(const ClosedCA&)>& visit) {
    check_ceiling(spec);
    const Alphabet alphabet(spec.alphabet_size);
    const auto updates = update_tables(alphabet, spec.require_reversible);
    InteractionGenerator gen(alphabet, spec.neigh.size(), spec.require_reversible);
    EnumerationCounts counts;
    std::vector<State> outputs;
    while (gen.next(outputs)) {
        counts.candidates_examined += updates.size();
        auto cca = ClosedCA::unvalidated(alphabet, spec.neigh,
                                         RuleTable(alphabet, spec.neigh.size(), spec.neigh.size(), outputs),
                                         updates.front());
        if (!cca.validate().ok) continue;
        counts.commutative_count += updates.size();
        for (const auto& g : updates)
            if (!visit(cca.with_update(g))) return counts;
    }
    return counts;
}

bool global_map_equals(const ClosedCA& cca, const TargetMap& target, const Lattice& lattice, std::uint64_t ceiling) {
    if (!cca.is_validated()) throw Error("global_map_equals requires a validated closed CA");
    const State n = cca.alphabet().size();
    const std::size_t cells = lattice.cell_count();
    const auto count = configuration_count(n, cells);
    if (!count || *count > ceiling)
        throw CeilingExceeded("exhaustive comparison over " + std::to_string(n) + "^" + std::to_string(cells) +
                              " configurations exceeds the ceiling of " + std::to_string(ceiling));
    if (target.kind == TargetMap::Kind::permutation &&
        (target.lattice != lattice || target.permutation.size() != *count))
        throw Error("permutation target does not describe this lattice");

    std::vector<std::size_t> source(cells);
    for (std::size_t x = 0; x < cells; ++x) {
        Point p = lattice.point_of(x);
        p[0] -= 1;
        source[x] = lattice.index_of(p);
    }

    const CcaStepper stepper(cca, lattice);
    std::vector<State> in(cells), buf(cells);
    for (std::uint64_t i = 0; i < *count; ++i) {
        decode_configuration(i, n, in);
        buf = in;
        stepper.step(buf);
        switch (target.kind) {
        case TargetMap::Kind::identity:
            if (buf != in) return false;
            break;
        case TargetMap::Kind::shift_right:
            for (std::size_t x = 0; x < cells; ++x)
                if (buf[x] != in[source[x]]) return false;
            break;
        case TargetMap::Kind::permutation:
            if (encode_configuration(buf, n) != target.permutation[i]) return false;
            break;
        }
    }
    return true;
}

namespace {

bool matches_everywhere(const ClosedCA& cca, const SearchSpec& spec) {
    return std::all_of(spec.lattices.begin(), spec.lattices.end(), [&](const Lattice& lat) {
        return global_map_equals(cca, spec.target, lat, spec.configuration_ceiling);
    });
}

// Interaction tables examined per parallel batch.
constexpr std::size_t batch_size = 4096;

} // namespace

SearchReport find_global_map(const SearchSpec& spec, Execution exec) {
    const auto start = std::chrono::steady_clock::now();
    spec.check();
    SearchReport report;

    if (exec == Execution::serial) {
        const auto counts = enumerate_ccas(spec, [&](const ClosedCA& cca) {
            if (matches_everywhere(cca, spec)) report.matches.push_back(cca);
            return true;
        });
        report.candidates_examined = counts.candidates_examined;
        report.commutative_count = counts.commutative_count;
        report.elapsed = std::chrono::steady_clock::now() - start;
        return report;
    }

    check_ceiling(spec);
    const Alphabet alphabet(spec.alphabet_size);
    const auto updates = update_tables(alphabet, spec.require_reversible);
    InteractionGenerator gen(alphabet, spec.neigh.size(), spec.require_reversible);
    const std::size_t arity = spec.neigh.size();

    std::vector<std::vector<State>> batch;
    std::vector<char> commutative;
    std::vector<std::vector<char>> hits;
    bool more = true;
    while (more) {
        batch.clear();
        std::vector<State> outputs;
        while (batch.size() < batch_size && (more = gen.next(outputs))) batch.push_back(outputs);
        const auto count = static_cast<std::int64_t>(batch.size());
        commutative.assign(batch.size(), 0);
        hits.assign(batch.size(), std::vector<char>(updates.size(), 0));

        // Per-slot results, merged below in enumeration order.
#pragma omp parallel for schedule(dynamic, 16)
        for (std::int64_t k = 0; k < count; ++k) {
            const auto i = static_cast<std::size_t>(k);
            auto cca = ClosedCA::unvalidated(alphabet, spec.neigh, RuleTable(alphabet, arity, arity, batch[i]),
                                             updates.front());
            if (!cca.validate().ok) continue;
            commutative[i] = 1;
            for (std::size_t u = 0; u < updates.size(); ++u)
                hits[i][u] = matches_everywhere(cca.with_update(updates[u]), spec) ? 1 : 0;
        }

        for (std::size_t i = 0; i < batch.size(); ++i) {
            report.candidates_examined += updates.size();
            if (!commutative[i]) continue;
            report.commutative_count += updates.size();
            for (std::size_t u = 0; u < updates.size(); ++u) {
                if (!hits[i][u]) continue;
                auto cca = ClosedCA::unvalidated(alphabet, spec.neigh, RuleTable(alphabet, arity, arity, batch[i]),
                                                 updates[u]);
                cca.validate();
                report.matches.push_back(std::move(cca));
            }
        }
    }
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

} // namespace cca
