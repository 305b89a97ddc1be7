#include "doctest.h"

#include "cca/compile.hpp"
#include "cca/kernels.hpp"
#include "cca/reference.hpp"
#include "oracles.hpp"

using namespace cca;
using oracle::Cells;

namespace {

Configuration pairs(const Alphabet& a, const Cells& first, const Cells& second) {
    Cells c(first.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.pack(std::vector<State>{first[i], second[i]});
    return oracle::ring_config(c);
}

Cells reg(const Configuration& c, const Alphabet& a, std::size_t k) { return oracle::cells_of(project(c, a, k)); }

} // namespace

TEST_CASE("compiled shift-right moves the first registers one cell") {
    const auto cc = ca_to_cca(oracle::to_ca(oracle::shift_right_rule(), 2));
    CHECK(cc.is_validated());
    CHECK(cc.neigh().offsets() == std::vector<Point>{{-1}, {0}});
    const auto out = step_cca(cc, pairs(cc.alphabet(), {0, 0, 1, 1}, {0, 0, 0, 0}));
    CHECK(reg(out, cc.alphabet(), 0) == Cells{1, 0, 0, 1});
    CHECK(reg(out, cc.alphabet(), 1) == Cells{0, 0, 1, 1});
}

TEST_CASE("compiled identity keeps the first registers") {
    const auto cc = ca_to_cca(oracle::to_ca(oracle::identity_rule(), 3));
    for (const auto& cells : oracle::all_cells(4, 9)) {
        const auto c = oracle::ring_config(cells);
        CHECK(project(step_cca(cc, c), cc.alphabet(), 0) == project(c, cc.alphabet(), 0));
    }
}

TEST_CASE("compiled majority tracks the CA for ten steps") {
    const auto r = oracle::majority_rule();
    const auto cc = ca_to_cca(oracle::to_ca(r, 2));
    oracle::Rng rng(41);
    for (int i = 0; i < 50; ++i) {
        auto first = oracle::random_cells(12, 2, rng);
        auto c = pairs(cc.alphabet(), first, oracle::random_cells(12, 2, rng));
        for (int t = 0; t < 10; ++t) {
            c = step_cca(cc, c);
            first = oracle::ring_step(r, first);
            CHECK(reg(c, cc.alphabet(), 0) == first);
        }
    }
}

TEST_CASE("compiled CA simulation is exact for three-state rules") {
    oracle::Rng rng(42);
    for (int k = 0; k < 3; ++k) {
        const auto table = oracle::random_cells(27, 3, rng);
        const oracle::RingRule r{{-1, 0, 1}, [table](const std::vector<State>& v) { return table[v[0] * 9 + v[1] * 3 + v[2]]; }};
        const auto cc = ca_to_cca(oracle::to_ca(r, 3));
        for (int n = 4; n <= 5; ++n)
            for (const auto& first : oracle::all_cells(n, 3)) {
                auto c = pairs(cc.alphabet(), first, Cells(n, 0));
                Cells expect = first;
                for (int t = 0; t < 4; ++t) {
                    c = step_cca(cc, c);
                    expect = oracle::ring_step(r, expect);
                }
                CHECK(reg(c, cc.alphabet(), 0) == expect);
            }
    }
}

TEST_CASE("reversible simulation of the shift") {
    const auto cc = oracle::compiled_corpus()[3].cca;
    const auto& a = cc.alphabet();
    const auto out = step_cca(cc, pairs(a, {0, 0, 1, 1}, {0, 1, 1, 0}));
    CHECK(reg(out, a, 0) == Cells{1, 0, 0, 1});
    CHECK(reg(out, a, 1) == Cells{0, 0, 1, 1});
    CHECK(check_bijection(cc.interaction()));
    CHECK(check_bijection(cc.update()));
    CHECK(oracle::is_permutation(global_map(CcaStepper(cc, Lattice::ring(5)), a.size())));
}

TEST_CASE("reversible simulation with equal forward and reverse swaps the registers") {
    const auto id = oracle::to_ca(oracle::identity_rule(), 3);
    const auto cc = rca_to_rcca(id, id, AdditionRelation::canonical(3));
    oracle::Rng rng(43);
    const auto now = oracle::random_cells(5, 3, rng), before = oracle::random_cells(5, 3, rng);
    const auto c = pairs(cc.alphabet(), now, before);
    const auto once = step_cca(cc, c);
    CHECK(reg(once, cc.alphabet(), 0) == before);
    CHECK(reg(once, cc.alphabet(), 1) == now);
    CHECK(step_cca(cc, once) == c);
}

TEST_CASE("addition relations") {
    CHECK_THROWS_AS(AdditionRelation({0, 0}), Error);
    CHECK_THROWS_AS(AdditionRelation({0, 2}), Error);
    const AdditionRelation twisted({2, 0, 1}); // state s stands for integer to[s]
    for (State a = 0; a < 3; ++a)
        for (State b = 0; b < 3; ++b) {
            CHECK(twisted.shift(twisted.add(a, b), b, b) == twisted.add(a, b));
            CHECK(twisted.shift(a, b, b) == a);
        }
    CHECK(twisted.add(1, 1) == 1); // 0 + 0
    CHECK(twisted.add(0, 0) == 2); // 2 + 2 = 1 -> state 2
}

TEST_CASE("reversible simulation with a twisted addition still round-trips") {
    const auto fwd = oracle::to_ca(oracle::shift_right_rule(), 3);
    const auto rev = oracle::to_ca(oracle::shift_left_rule(), 3);
    const auto cc = rca_to_rcca(fwd, rev, AdditionRelation({2, 0, 1}));
    const auto inv = invert_cca(cc);
    oracle::Rng rng(44);
    for (int i = 0; i < 100; ++i) {
        const auto c = oracle::ring_config(oracle::random_cells(5, 9, rng));
        auto cur = c;
        for (int t = 0; t < 4; ++t) cur = step_cca(cc, cur);
        for (int t = 0; t < 4; ++t) cur = step_cca(inv, cur);
        CHECK(cur == c);
    }
}

TEST_CASE("empty partition rule set with identity updates is the identity") {
    const auto cc = partitioned_to_cca({}, RuleTable::identity(Alphabet(3), 1), RuleTable::identity(Alphabet(2), 1));
    oracle::Rng rng(45);
    for (int i = 0; i < 20; ++i) {
        const auto c = oracle::ring_config(oracle::random_cells(5, 6, rng));
        CHECK(step_cca(cc, c) == c);
    }
}

TEST_CASE("a single partition pattern fires only where it matches") {
    const Region pair({{0}, {1}});
    const std::vector<PartitionRule> rules{{RegionConfig(pair, {0, 1}), pair_swap(Alphabet(2))}};
    const auto cc = partitioned_to_cca(rules, RuleTable::identity(Alphabet(2), 1), RuleTable::identity(Alphabet(2), 1));
    const auto c = pairs(cc.alphabet(), {1, 0, 0, 1}, {0, 1, 0, 1});
    const auto out = interaction_phase(cc, c);
    CHECK(reg(out, cc.alphabet(), 0) == Cells{0, 1, 1, 0});
    CHECK(reg(out, cc.alphabet(), 1) == Cells{0, 1, 0, 1});
}

TEST_CASE("intersectable patterns are refused") {
    const Region pair({{0}, {1}});
    const std::vector<PartitionRule> rules{{RegionConfig(pair, {0, 1}), pair_swap(Alphabet(2))},
                                           {RegionConfig(pair, {1, 0}), pair_swap(Alphabet(2))}};
    CHECK_THROWS_AS(
        partitioned_to_cca(rules, RuleTable::identity(Alphabet(2), 1), RuleTable::identity(Alphabet(2), 1)), Error);
}

TEST_CASE("Margolus with identity blocks only cycles the control registers") {
    const auto id = RuleTable::identity(Alphabet(2), 2);
    const auto m = margolus_cca(id, id);
    oracle::Rng rng(46);
    const auto s1 = oracle::random_cells(6, 2, rng);
    auto c = oracle::margolus_config(s1);
    c = step_cca(m, c);
    CHECK(reg(c, m.alphabet(), 0) == s1);
    CHECK(reg(c, m.alphabet(), 1) == Cells{3, 2, 3, 2, 3, 2});
    c = step_cca(m, c);
    CHECK(reg(c, m.alphabet(), 0) == s1);
    CHECK(reg(c, m.alphabet(), 1) == Cells{0, 1, 0, 1, 0, 1});
}

TEST_CASE("Margolus control evolution ignores the first registers") {
    const auto m = oracle::compiled_corpus()[6].cca;
    oracle::Rng rng(47);
    for (int i = 0; i < 50; ++i) {
        const auto control = oracle::random_cells(8, 4, rng);
        const auto a = pairs(m.alphabet(), oracle::random_cells(8, 2, rng), control);
        const auto b = pairs(m.alphabet(), oracle::random_cells(8, 2, rng), control);
        const auto sa = step_cca(m, a), sb = step_cca(m, b);
        CHECK(reg(sa, m.alphabet(), 1) == reg(sb, m.alphabet(), 1));
        CHECK(reg(step_cca(m, sa), m.alphabet(), 1) == control);
    }
}

TEST_CASE("Margolus matches the block simulator for ten steps") {
    oracle::Rng rng(48);
    const auto sw = oracle::swap_block(), id = oracle::identity_block();
    const std::vector<std::pair<oracle::Block, oracle::Block>> blocks{{sw, id}, {id, sw}, {sw, sw}};
    for (const auto& [u, v] : blocks) {
        const auto m = margolus_cca(oracle::block_table(u, 2), oracle::block_table(v, 2));
        for (int i = 0; i < 20; ++i) {
            auto s1 = oracle::random_cells(8, 2, rng);
            auto c = oracle::margolus_config(s1);
            for (std::size_t t = 0; t < 10; ++t) {
                c = step_cca(m, c);
                s1 = oracle::margolus_step(s1, t, u, v);
                CHECK(reg(c, m.alphabet(), 0) == s1);
            }
        }
    }
}

TEST_CASE("Margolus with a non-involutive three-state block") {
    // (a, b) -> (b, a + 1 mod 3): a bijection that is not its own inverse.
    const oracle::Block u = [](State a, State b) { return std::pair<State, State>{b, (a + 1) % 3}; };
    const auto m = margolus_cca(oracle::block_table(u, 3), oracle::block_table(oracle::identity_block(), 3));
    oracle::Rng rng(49);
    for (int i = 0; i < 20; ++i) {
        auto s1 = oracle::random_cells(6, 3, rng);
        Cells packed(6);
        for (std::size_t x = 0; x < 6; ++x) packed[x] = m.alphabet().pack(std::vector<State>{s1[x], State(x % 2)});
        auto c = oracle::ring_config(packed);
        for (std::size_t t = 0; t < 6; ++t) {
            c = step_cca(m, c);
            s1 = oracle::margolus_step(s1, t, u, oracle::identity_block());
            CHECK(reg(c, m.alphabet(), 0) == s1);
        }
    }
}

TEST_CASE("coloured schedule with keep rules only cycles the clocks") {
    auto sched = oracle::xor_schedule();
    sched.rules[0].rule = sched.rules[1].rule;
    const auto cc = coloured_to_cca(sched);
    oracle::Rng rng(50);
    const auto cells = oracle::ring_config(oracle::random_cells(6, 2, rng));
    const auto c = coloured_configuration(sched, cells, 0);
    const auto once = step_coloured(cc, sched, c);
    CHECK(project(once, cc.alphabet(), 0) == cells);
    CHECK(reg(once, cc.alphabet(), 2) == Cells(6, 1));
    CHECK(step_coloured(cc, sched, once) == c);
}

TEST_CASE("coloured XOR schedule matches the alternating simulator") {
    const auto sched = oracle::xor_schedule();
    const auto cc = coloured_to_cca(sched);
    CHECK(check_translation_commutative(cc.interaction(), cc.neigh(), cc.alphabet()).ok);
    for (const auto& cells : oracle::all_cells(6, 2)) {
        auto c = coloured_configuration(sched, oracle::ring_config(cells), 0);
        auto expect = cells;
        for (std::size_t t = 0; t < 4; ++t) {
            const auto before = reg(c, cc.alphabet(), 0);
            c = step_coloured(cc, sched, c);
            expect = oracle::alternating_xor_step(expect, t);
            CHECK(reg(c, cc.alphabet(), 0) == expect);
            // cells of the unscheduled colour keep their state
            const State active = sched.rules[t % 2].colour;
            for (std::size_t x = 0; x < 6; ++x)
                if (sched.tile.colour_at({static_cast<int>(x)}) != active) CHECK(expect[x] == before[x]);
        }
    }
}

TEST_CASE("coloured schedules are checked") {
    auto sched = oracle::xor_schedule();
    sched.tile = ColourTile(Lattice::ring(1), {0});
    CHECK_THROWS_AS(coloured_to_cca(sched), Error);
    sched = oracle::xor_schedule();
    sched.rules[0].colour = 5;
    CHECK_THROWS_AS(coloured_to_cca(sched), Error);
    sched = oracle::xor_schedule();
    CHECK_THROWS_AS(coloured_configuration(sched, oracle::ring_config({0, 1, 0}), 0), Error);
    const auto cc = coloured_to_cca(sched);
    auto c = coloured_configuration(sched, oracle::ring_config({0, 1, 0, 1}), 0);
    c[1] = cc.alphabet().pack(std::vector<State>{1, 1, 1});
    CHECK_THROWS_AS(step_coloured(cc, sched, c), Error);
}
