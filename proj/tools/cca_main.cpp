// cca: verify, run, compile, invert, reduce and search closed cellular automata.
//
// Exit codes: 0 success, 1 usage error, 2 validation or parse error,
// 3 search or enumeration ceiling exceeded.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cca/compile.hpp"
#include "cca/io.hpp"
#include "cca/search.hpp"
#include "cca/verify.hpp"

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw cca::Error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw cca::Error("cannot write " + path);
    out << text;
}

cca::TraditionalCA load_ca(const std::string& path) {
    auto a = cca::parse_rule_file(slurp(path));
    if (auto* ca = std::get_if<cca::TraditionalCA>(&a)) return *ca;
    throw cca::Error(path + ": expected a rule file of kind ca");
}

cca::ClosedCA load_cca(const std::string& path, bool validate = true) {
    auto a = cca::parse_rule_file(slurp(path), {validate});
    if (auto* c = std::get_if<cca::ClosedCA>(&a)) return *c;
    throw cca::Error(path + ": expected a rule file of kind cca");
}

cca::RuleTable load_block(const std::string& spec, cca::State states) {
    const cca::Alphabet alphabet(states);
    if (spec == "identity") return cca::RuleTable::identity(alphabet, 2);
    if (spec == "swap") return cca::pair_swap(alphabet);
    return cca::parse_block_file(slurp(spec));
}

int check(const std::string& path) {
    const auto automaton = cca::parse_rule_file(slurp(path), {false});
    if (const auto* ca = std::get_if<cca::TraditionalCA>(&automaton)) {
        std::cout << "kind: ca\nneighbourhood size: " << ca->neigh().size()
                  << "\nalphabet size: " << ca->alphabet().size() << '\n';
        return 0;
    }
    const auto& cca_ = std::get<cca::ClosedCA>(automaton);
    const auto report = cca::check_translation_commutative(cca_.interaction(), cca_.neigh(), cca_.alphabet());
    const bool f_bij = cca::check_bijection(cca_.interaction());
    const bool g_bij = cca::check_bijection(cca_.update());
    std::cout << "kind: cca\n"
              << cca::format_commutativity(report) << "interaction bijective: " << (f_bij ? "yes" : "no")
              << "\nupdate bijective: " << (g_bij ? "yes" : "no")
              << "\nreversible: " << (report.ok && f_bij && g_bij ? "yes" : "no") << '\n';
    return report.ok ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Closed cellular automata toolkit"};
    app.require_subcommand(1);
    std::string output;

    auto* check_cmd = app.add_subcommand("check", "Report translation commutativity and reversibility");
    std::string check_file;
    check_cmd->add_option("rule-file", check_file)->required()->check(CLI::ExistingFile);

    auto* run_cmd = app.add_subcommand("run", "Evolve a configuration and write its trajectory");
    std::string run_rule, run_config;
    std::size_t steps = 1;
    run_cmd->add_option("rule-file", run_rule)->required()->check(CLI::ExistingFile);
    run_cmd->add_option("config-file", run_config)->required()->check(CLI::ExistingFile);
    run_cmd->add_option("-n,--steps", steps, "Number of global steps")->capture_default_str();
    run_cmd->add_option("-o,--output", output, "Output path (default stdout)");

    auto* compile_cmd = app.add_subcommand("compile", "Build a closed CA from a construction");
    compile_cmd->require_subcommand(1);
    compile_cmd->fallthrough();
    compile_cmd->add_option("-o,--output", output, "Output path (default stdout)");

    auto* c2c = compile_cmd->add_subcommand("ca-to-cca", "Two-register simulation of a CA");
    std::string c2c_file;
    c2c->add_option("ca-file", c2c_file)->required()->check(CLI::ExistingFile);

    auto* r2r = compile_cmd->add_subcommand("rca-to-rcca", "Reversible simulation of a reversible CA");
    std::string fwd_file, rev_file;
    std::vector<cca::State> addition;
    r2r->add_option("forward", fwd_file)->required()->check(CLI::ExistingFile);
    r2r->add_option("reverse", rev_file)->required()->check(CLI::ExistingFile);
    r2r->add_option("--addition", addition, "Bijection state -> integer, one value per state");

    auto* marg = compile_cmd->add_subcommand("margolus", "Alternating pair-partition automaton");
    std::string u_spec, v_spec;
    cca::State block_states = 2;
    marg->add_option("u", u_spec, "identity, swap, or a block rule file")->required();
    marg->add_option("v", v_spec, "identity, swap, or a block rule file")->required();
    marg->add_option("--states", block_states, "First-register states for built-in blocks")->capture_default_str();

    auto* col = compile_cmd->add_subcommand("coloured", "Clocked colour-schedule automaton");
    std::string schedule_file;
    col->add_option("schedule-file", schedule_file)->required()->check(CLI::ExistingFile);

    auto* inv_cmd = app.add_subcommand("invert", "Inverse of a reversible closed CA");
    std::string inv_file;
    inv_cmd->add_option("rule-file", inv_file)->required()->check(CLI::ExistingFile);
    inv_cmd->add_option("-o,--output", output, "Output path (default stdout)");

    auto* red_cmd = app.add_subcommand("reduce", "Equivalent traditional CA over the extended neighbourhood");
    std::string red_file;
    red_cmd->add_option("rule-file", red_file)->required()->check(CLI::ExistingFile);
    red_cmd->add_option("-o,--output", output, "Output path (default stdout)");

    auto* search_cmd = app.add_subcommand("search", "Exhaustive search for a target global map");
    std::string search_file;
    bool serial = false;
    search_cmd->add_option("spec-file", search_file)->required()->check(CLI::ExistingFile);
    search_cmd->add_flag("--serial", serial, "Disable the parallel candidate sweep");
    search_cmd->add_option("-o,--output", output, "Output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (*check_cmd) return check(check_file);

        if (*run_cmd) {
            const auto automaton = cca::parse_rule_file(slurp(run_rule));
            const auto config = cca::parse_config_file(slurp(run_config), cca::alphabet_of(automaton));
            std::ostringstream os;
            cca::write_trajectory(os, automaton, config, steps);
            emit(output, os.str());
            return 0;
        }

        if (*compile_cmd) {
            std::optional<cca::ClosedCA> result;
            if (*c2c) {
                result = cca::ca_to_cca(load_ca(c2c_file));
            } else if (*r2r) {
                const auto forward = load_ca(fwd_file);
                const auto add = addition.empty() ? cca::AdditionRelation::canonical(forward.alphabet().size())
                                                  : cca::AdditionRelation(addition);
                result = cca::rca_to_rcca(forward, load_ca(rev_file), add);
            } else if (*marg) {
                result = cca::margolus_cca(load_block(u_spec, block_states), load_block(v_spec, block_states));
            } else {
                result = cca::coloured_to_cca(cca::parse_schedule_file(slurp(schedule_file)));
            }
            emit(output, cca::serialize_rule_file(*result));
            return 0;
        }

        if (*inv_cmd) {
            emit(output, cca::serialize_rule_file(cca::invert_cca(load_cca(inv_file))));
            return 0;
        }

        if (*red_cmd) {
            emit(output, cca::serialize_rule_file(cca::reduce_to_ca(load_cca(red_file))));
            return 0;
        }

        if (*search_cmd) {
            const auto spec = cca::parse_search_spec(slurp(search_file));
            const auto report =
                cca::find_global_map(spec, serial ? cca::Execution::serial : cca::Execution::parallel);
            emit(output, cca::format_search_report(spec, report));
            return 0;
        }
    } catch (const cca::CeilingExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const cca::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 1;
}
