#include "doctest.h"

#include <sstream>

#include "cca/io.hpp"
#include "oracles.hpp"

using namespace cca;

namespace {

const char* identity_ca_text = "kind ca\nalphabet 2\nneigh (0)\nrule\n0 -> 0\n1 -> 1\n";

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

Neighbourhood random_neigh(oracle::Rng& rng) {
    static const std::vector<std::vector<Point>> choices{
        {{0}}, {{-1}}, {{0}, {1}}, {{-1}, {0}, {1}}, {{1}, {-1}}, {{0, 0}, {0, 1}}, {{0, 0}, {1, 0}, {0, -1}}};
    return Neighbourhood(choices[rng() % choices.size()]);
}

Automaton random_automaton(oracle::Rng& rng) {
    const auto neigh = random_neigh(rng);
    const State n = 1 + static_cast<State>(rng() % 3);
    Alphabet a(n);
    if (rng() % 3 == 0) a = Alphabet::product({n, 2});
    const auto rows = RuleTable::rows_for(a.size(), neigh.size());
    if (rng() % 2 == 0)
        return TraditionalCA(a, neigh, RuleTable(a, neigh.size(), 1, oracle::random_cells(rows, a.size(), rng)));
    RuleTable f(a, neigh.size(), neigh.size(), oracle::random_cells(rows * neigh.size(), a.size(), rng));
    RuleTable g(a, 1, 1, oracle::random_cells(a.size(), a.size(), rng));
    return ClosedCA::unvalidated(a, neigh, std::move(f), std::move(g));
}

bool same(const Automaton& x, const Automaton& y) {
    if (x.index() != y.index()) return false;
    if (const auto* a = std::get_if<TraditionalCA>(&x)) return *a == std::get<TraditionalCA>(y);
    return std::get<ClosedCA>(x) == std::get<ClosedCA>(y);
}

std::string trajectory(const Automaton& a, const Configuration& c, std::size_t steps) {
    std::ostringstream os;
    write_trajectory(os, a, c, steps);
    return os.str();
}

} // namespace

TEST_CASE("minimal identity CA file") {
    const auto a = parse_rule_file(identity_ca_text);
    const auto& ca = std::get<TraditionalCA>(a);
    CHECK(ca.alphabet().size() == 2);
    CHECK(ca.rule() == RuleTable::identity(Alphabet(2), 1));
    CHECK(serialize_rule_file(a) == identity_ca_text);
}

TEST_CASE("comments and blank lines are ignored") {
    const auto a = parse_rule_file("# identity\n\nkind ca   # plain\nalphabet 2\nneigh (0)\nrule\n1 -> 1\n0 -> 0\n");
    CHECK(serialize_rule_file(a) == identity_ca_text);
}

TEST_CASE("shift-right CA file steps 0011 to 1001") {
    const auto a = parse_rule_file("kind ca\nalphabet 2\nneigh (-1)\nrule\n0 -> 0\n1 -> 1\n");
    const auto& ca = std::get<TraditionalCA>(a);
    CHECK(oracle::cells_of(step_ca(ca, oracle::ring_config({0, 0, 1, 1}))) == oracle::Cells{1, 0, 0, 1});
}

TEST_CASE("missing interaction row is reported with its input tuple") {
    const std::string text = "kind cca\nalphabet 2\nneigh (0) (1)\ninteraction\n0 0 -> 0 0\n0 1 -> 0 1\n1 1 -> 1 1\n"
                             "update\n0 -> 0\n1 -> 1\n";
    try {
        parse_rule_file(text);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("table not total") != std::string::npos);
        CHECK(msg.find("(1 0)") != std::string::npos);
    }
}

TEST_CASE("malformed files carry line numbers") {
    try {
        parse_rule_file("kind ca\nalphabet 2\nneigh (0)\nrule\n0 -> 0\n1 -> 7\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 6);
    }
    try {
        parse_rule_file("kind ca\nalphabet two\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(parse_rule_file("kind ca\nalphabet 2\nneigh (0)\nrule\n0 -> 0\n0 -> 1\n1 -> 1\n"), ParseError);
    CHECK_THROWS_AS(parse_rule_file("kind xyz\n"), ParseError);
    CHECK_THROWS_AS(parse_rule_file("0 -> 1\n"), ParseError);
    CHECK_THROWS_AS(parse_rule_file("kind ca\nalphabet 2\nneigh (0) (0)\nrule\n0 -> 0\n1 -> 1\n"), ParseError);
}

TEST_CASE("non-commutative CCA files are refused unless validation is deferred") {
    const Alphabet two(2);
    const auto swap =
        ClosedCA::unvalidated(two, Neighbourhood({{0}, {1}}), pair_swap(two), RuleTable::identity(two, 1));
    const auto text = serialize_rule_file(swap);
    CHECK_THROWS_AS(parse_rule_file(text), NotCommutative);
    const auto loaded = parse_rule_file(text, {false});
    CHECK_FALSE(std::get<ClosedCA>(loaded).is_validated());
    CHECK(std::get<ClosedCA>(loaded) == swap);
}

TEST_CASE("compiled Margolus CCA round-trips") {
    const auto m = oracle::compiled_corpus()[4].cca;
    const auto text = serialize_rule_file(m);
    CHECK(text.find("alphabet 2x4") != std::string::npos);
    CHECK(text.find("0.0 1.1 -> 1.0 0.1") != std::string::npos);
    const auto back = parse_rule_file(text);
    CHECK(std::get<ClosedCA>(back) == m);
    CHECK(std::get<ClosedCA>(back).is_validated());
    CHECK(serialize_rule_file(back) == text);
}

TEST_CASE("parse . serialize . parse = parse on random automata") {
    oracle::Rng rng(61);
    for (int i = 0; i < 50; ++i) {
        const auto a = random_automaton(rng);
        const auto text = serialize_rule_file(a);
        const auto once = parse_rule_file(text, {false});
        CHECK(same(once, a));
        const auto twice = parse_rule_file(serialize_rule_file(once), {false});
        CHECK(same(twice, once));
    }
}

TEST_CASE("block files round-trip") {
    const auto t = pair_swap(Alphabet(3));
    CHECK(parse_block_file(serialize_block_file(t)) == t);
    CHECK_THROWS_AS(parse_block_file("kind block\nalphabet 2\narity 2\nrule\n0 0 -> 0 0\n"), ParseError);
}

TEST_CASE("config files") {
    const auto pair = Alphabet::product({2, 4});
    const auto c = parse_config_file("dims 4\ncells 0.0 1.1 0.2 1.3\n", pair);
    CHECK(c.lattice() == Lattice::ring(4));
    CHECK(c[1] == pair.pack(std::vector<State>{1, 1}));
    CHECK(serialize_config_file(c, pair) == "dims 4\ncells 0.0 1.1 0.2 1.3\n");
    const auto d = parse_config_file("dims 2 3\ncells 0 1 0 1 1 1\n", Alphabet(2));
    CHECK(d.at({1, 0}) == 1);
    CHECK_THROWS_AS(parse_config_file("dims 4\ncells 0 1 0\n", Alphabet(2)), ParseError);
    CHECK_THROWS_AS(parse_config_file("dims 3\ncells 0 1 2\n", Alphabet(2)), ParseError);
}

TEST_CASE("trajectories") {
    const auto shift = parse_rule_file("kind ca\nalphabet 2\nneigh (-1)\nrule\n0 -> 0\n1 -> 1\n");
    const auto c = oracle::ring_config({0, 0, 1, 1});
    const auto lines = lines_of(trajectory(shift, c, 4));
    REQUIRE(lines.size() == 9);
    CHECK(lines[0] == "# kind ca");
    CHECK(lines[1] == "# dims 4");
    CHECK(lines[3] == "# steps 4");
    CHECK(std::vector<std::string>(lines.begin() + 4, lines.end()) ==
          std::vector<std::string>{"0 0 1 1", "1 0 0 1", "1 1 0 0", "0 1 1 0", "0 0 1 1"});

    const auto zero = lines_of(trajectory(shift, c, 0));
    CHECK(zero.size() == 5);
    CHECK(zero.back() == "0 0 1 1");
    CHECK(trajectory(shift, c, 7) == trajectory(shift, c, 7));
}

TEST_CASE("Margolus trajectory matches the block simulator") {
    const auto m = oracle::compiled_corpus()[4].cca;
    oracle::Rng rng(62);
    auto s1 = oracle::random_cells(8, 2, rng);
    const auto lines = lines_of(trajectory(m, oracle::margolus_config(s1), 10));
    REQUIRE(lines.size() == 15);
    for (std::size_t t = 0; t <= 10; ++t) {
        std::istringstream row(lines[4 + t]);
        oracle::Cells first;
        for (std::string tok; row >> tok;) first.push_back(static_cast<State>(std::stoi(tok.substr(0, tok.find('.')))));
        CHECK(first == s1);
        s1 = oracle::margolus_step(s1, t, oracle::swap_block(), oracle::identity_block());
    }
}

TEST_CASE("search specs and reports") {
    const auto spec = parse_search_spec("alphabet 2\nneigh (0) (1)\nreversible yes\ntarget shift-right\nrings 4 5 6\n");
    CHECK(spec.lattices.size() == 3);
    CHECK(spec.require_reversible);
    CHECK(spec.target.kind == TargetMap::Kind::shift_right);
    const auto report = format_search_report(spec, find_global_map(spec));
    CHECK(report.find("matches: 0") != std::string::npos);
    CHECK(report.find("evidence, not proof") != std::string::npos);
    CHECK_THROWS_AS(parse_search_spec("alphabet 2\nneigh (0)\ntarget sideways\nrings 4\n"), ParseError);
}

TEST_CASE("colour schedule files") {
    std::string text = "alphabet 2\nneigh (-1) (0) (1)\ntile 2\ncolours 0 1\nrule 1\n";
    for (State a = 0; a < 2; ++a)
        for (State b = 0; b < 2; ++b)
            for (State c = 0; c < 2; ++c)
                text += std::to_string(a) + " " + std::to_string(b) + " " + std::to_string(c) + " -> " +
                        std::to_string(a ^ c) + "\n";
    text += "rule 0\n";
    for (State a = 0; a < 2; ++a)
        for (State b = 0; b < 2; ++b)
            for (State c = 0; c < 2; ++c)
                text += std::to_string(a) + " " + std::to_string(b) + " " + std::to_string(c) + " -> " +
                        std::to_string(b) + "\n";
    const auto sched = parse_schedule_file(text);
    const auto expect = oracle::xor_schedule();
    CHECK(sched.tile.colours == expect.tile.colours);
    REQUIRE(sched.rules.size() == 2);
    CHECK(sched.rules[0].colour == 1);
    CHECK(sched.rules[0].rule == expect.rules[0].rule);
    CHECK(sched.rules[1].rule == expect.rules[1].rule);
    CHECK_THROWS_AS(parse_schedule_file("alphabet 2\nneigh (-1) (0) (1)\ntile 1\ncolours 0\nrule 0\n"), ParseError);
}
