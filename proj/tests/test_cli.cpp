#include "doctest.h"

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cca/io.hpp"
#include "oracles.hpp"

namespace fs = std::filesystem;

namespace {

struct Workspace {
    fs::path dir;
    Workspace() {
        dir = fs::temp_directory_path() / ("cca_cli_" + std::to_string(::getpid()));
        fs::create_directories(dir);
    }
    ~Workspace() { fs::remove_all(dir); }

    std::string put(const std::string& name, const std::string& text) const {
        std::ofstream(dir / name) << text;
        return (dir / name).string();
    }
    std::string get(const std::string& name) const {
        std::ifstream in(dir / name);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    // Runs the tool; stdout goes to `out`, stderr to `out`.err.
    int run(const std::string& args, const std::string& out = "out.txt") const {
        const std::string cmd = std::string(CCA_TOOL) + " " + args + " > " + (dir / out).string() + " 2> " +
                                (dir / (out + ".err")).string();
        const int status = std::system(cmd.c_str());
        return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    }
};

const char* shift_text = "kind ca\nalphabet 2\nneigh (-1)\nrule\n0 -> 0\n1 -> 1\n";

} // namespace

TEST_CASE("run writes the shift-right trajectory") {
    Workspace w;
    const auto rule = w.put("shift.rule", shift_text);
    const auto cfg = w.put("c.cfg", "dims 4\ncells 0 0 1 1\n");
    REQUIRE(w.run("run " + rule + " " + cfg + " -n 4") == 0);
    CHECK(w.get("out.txt") ==
          "# kind ca\n# dims 4\n# alphabet 2\n# steps 4\n0 0 1 1\n1 0 0 1\n1 1 0 0\n0 1 1 0\n0 0 1 1\n");
    REQUIRE(w.run("run " + rule + " " + cfg + " --steps 0 -o " + (w.dir / "zero.txt").string()) == 0);
    CHECK(w.get("zero.txt") == "# kind ca\n# dims 4\n# alphabet 2\n# steps 0\n0 0 1 1\n");
}

TEST_CASE("check reports commutativity and exits 2 with a witness on failure") {
    Workspace w;
    const cca::Alphabet two(2);
    const auto swap = cca::ClosedCA::unvalidated(two, cca::Neighbourhood({{0}, {1}}), cca::pair_swap(two),
                                                 cca::RuleTable::identity(two, 1));
    const auto bad = w.put("swap.rule", cca::serialize_rule_file(swap));
    CHECK(w.run("check " + bad) == 2);
    CHECK(w.get("out.txt").find("translation commutative: no") != std::string::npos);
    CHECK(w.get("out.txt").find("witness: offset (1)") != std::string::npos);
    CHECK(w.run("run " + bad + " " + w.put("c.cfg", "dims 4\ncells 0 0 1 1\n")) == 2);

    REQUIRE(w.run("compile margolus swap identity -o " + (w.dir / "m.rule").string()) == 0);
    CHECK(w.run("check " + (w.dir / "m.rule").string()) == 0);
    CHECK(w.get("out.txt").find("reversible: yes") != std::string::npos);
}

TEST_CASE("compiled Margolus trajectories are deterministic and match the block simulator") {
    Workspace w;
    REQUIRE(w.run("compile margolus swap identity", "m.rule") == 0);
    const auto cfg = w.put("m.cfg", "dims 8\ncells 1.0 0.1 1.0 1.1 0.0 0.1 1.0 0.1\n");
    const auto rule = (w.dir / "m.rule").string();
    REQUIRE(w.run("run " + rule + " " + cfg + " -n 10", "a.txt") == 0);
    REQUIRE(w.run("run " + rule + " " + cfg + " -n 10", "b.txt") == 0);
    CHECK(w.get("a.txt") == w.get("b.txt"));

    std::istringstream lines(w.get("a.txt"));
    std::string line;
    oracle::Cells s1{1, 0, 1, 1, 0, 0, 1, 0};
    std::size_t t = 0;
    while (std::getline(lines, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream row(line);
        oracle::Cells first;
        for (std::string tok; row >> tok;) first.push_back(static_cast<cca::State>(tok[0] - '0'));
        CHECK(first == s1);
        s1 = oracle::margolus_step(s1, t++, oracle::swap_block(), oracle::identity_block());
    }
    CHECK(t == 11);
}

TEST_CASE("compile, invert and reduce produce loadable automata") {
    Workspace w;
    const auto fwd = w.put("f.rule", shift_text);
    const auto rev = w.put("r.rule", "kind ca\nalphabet 2\nneigh (1)\nrule\n0 -> 0\n1 -> 1\n");
    REQUIRE(w.run("compile ca-to-cca " + fwd, "c2c.rule") == 0);
    CHECK(std::holds_alternative<cca::ClosedCA>(cca::parse_rule_file(w.get("c2c.rule"))));
    REQUIRE(w.run("compile rca-to-rcca " + fwd + " " + rev + " --addition 1 0", "rcca.rule") == 0);
    REQUIRE(w.run("invert " + (w.dir / "rcca.rule").string(), "inv.rule") == 0);
    REQUIRE(w.run("reduce " + (w.dir / "rcca.rule").string(), "red.rule") == 0);

    const auto rcca = std::get<cca::ClosedCA>(cca::parse_rule_file(w.get("rcca.rule")));
    const auto inv = std::get<cca::ClosedCA>(cca::parse_rule_file(w.get("inv.rule")));
    const auto red = std::get<cca::TraditionalCA>(cca::parse_rule_file(w.get("red.rule")));
    oracle::Rng rng(71);
    for (int i = 0; i < 20; ++i) {
        const auto c = oracle::ring_config(oracle::random_cells(6, 4, rng));
        CHECK(cca::step_cca(inv, cca::step_cca(rcca, c)) == c);
        CHECK(cca::step_ca(red, c) == cca::step_cca(rcca, c));
    }

    std::string sched = "alphabet 2\nneigh (-1) (0) (1)\ntile 2\ncolours 0 1\nrule 1\n";
    for (int r = 0; r < 8; ++r)
        sched += std::to_string(r >> 2) + " " + std::to_string((r >> 1) & 1) + " " + std::to_string(r & 1) + " -> " +
                 std::to_string((r >> 2) ^ (r & 1)) + "\n";
    REQUIRE(w.run("compile coloured " + w.put("s.sched", sched), "col.rule") == 0);
    CHECK(w.get("col.rule").find("alphabet 2x2x1") != std::string::npos);
}

TEST_CASE("search report is labelled as evidence") {
    Workspace w;
    const auto spec = w.put("s.spec", "alphabet 2\nneigh (0) (1)\nreversible yes\ntarget shift-right\nrings 4 5 6\n");
    REQUIRE(w.run("search " + spec, "a.txt") == 0);
    REQUIRE(w.run("search --serial " + spec, "b.txt") == 0);
    CHECK(w.get("a.txt").find("matches: 0") != std::string::npos);
    CHECK(w.get("a.txt").find("finite-lattice evidence, not proof") != std::string::npos);
    CHECK(w.get("a.txt").find("candidates examined: 48") != std::string::npos);
    CHECK(w.get("b.txt").find("candidates examined: 48") != std::string::npos);
}

TEST_CASE("exit codes") {
    Workspace w;
    CHECK(w.run("") == 1);
    CHECK(w.run("frobnicate") == 1);
    CHECK(w.run("run") == 1);
    CHECK(w.run("check " + w.put("bad.rule", "kind ca\nalphabet x\n")) == 2);
    CHECK(w.get("out.txt.err").find("line 2") != std::string::npos);
    const auto big = w.put("big.spec", "alphabet 3\nneigh (-1) (0) (1)\nreversible yes\ntarget identity\nrings 4\n");
    CHECK(w.run("search " + big) == 3);
}
