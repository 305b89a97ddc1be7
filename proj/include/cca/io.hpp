#pragma once

// Line-oriented text formats used by the command-line tool.
//
// Rule file ('#' starts a comment):
//   kind ca|cca|block
//   alphabet 2            or   alphabet 2x4   (product; states written a.b)
//   neigh (-1) (0) (1)         d-tuples like (0,1)
//   arity 2                    block tables only
//   rule | interaction         followed by one "s1 s2 ... -> t1 t2 ..." row per input
//   update                     followed by one "s -> t" row per state
//
// Config file:   dims e1 e2 ...   cells s1 s2 ...   (row-major)
// Trajectory:    '#' header lines, then one line of states per time step.

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "cca/automata.hpp"
#include "cca/compile.hpp"
#include "cca/search.hpp"

namespace cca {

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& message);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

using Automaton = std::variant<TraditionalCA, ClosedCA>;

struct ParseOptions {
    // Run the commutativity check on closed automata while loading.
    bool validate = true;
};

std::string format_state(State s, const Alphabet& alphabet);
State parse_state(std::string_view token, const Alphabet& alphabet);

Automaton parse_rule_file(std::string_view text, ParseOptions options = {});
std::string serialize_rule_file(const Automaton& automaton);

// A bare table: "kind block", alphabet, arity, rule rows.
RuleTable parse_block_file(std::string_view text);
std::string serialize_block_file(const RuleTable& table);

Configuration parse_config_file(std::string_view text, const Alphabet& alphabet);
std::string serialize_config_file(const Configuration& c, const Alphabet& alphabet);

const Alphabet& alphabet_of(const Automaton& a);

// Writes steps + 1 state lines, the initial configuration first.
void write_trajectory(std::ostream& os, const Automaton& automaton, const Configuration& initial,
                      std::size_t steps);

/// Search spec file:
///   alphabet 2
///   neigh (0) (1)
///   reversible yes|no
///   target identity|shift-right
///   rings 4 5 6           and/or   lattice 4 4   (repeatable)
///   ceiling 1e9           optional
SearchSpec parse_search_spec(std::string_view text);
std::string format_search_report(const SearchSpec& spec, const SearchReport& report);

/// Colour schedule file:
///   alphabet 2
///   neigh (-1) (0) (1)
///   tile 2                tile extents
///   colours 0 1           row-major colour of each tile cell
///   rule <colour>         followed by |Sigma|^|N| rows "s1 ... -> t"; repeat per step
ColourSchedule parse_schedule_file(std::string_view text);

std::string format_commutativity(const CommutativityReport& report);

} // namespace cca
