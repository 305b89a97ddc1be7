#include "cca/io.hpp"

#include <charconv>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <regex>
#include <sstream>

#include "cca/kernels.hpp"

namespace cca {

ParseError::ParseError(std::size_t line, const std::string& message)
    : Error(line ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string> tokens;
    std::string text; // comment stripped, trimmed
};

std::vector<Line> split_lines(std::string_view text) {
    std::vector<Line> out;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        std::string raw(text.substr(pos, end - pos));
        ++number;
        pos = end + 1;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
        std::istringstream is(raw);
        Line line{number, {}, {}};
        for (std::string tok; is >> tok;) line.tokens.push_back(tok);
        if (line.tokens.empty()) continue;
        const auto first = raw.find_first_not_of(" \t\r");
        const auto last = raw.find_last_not_of(" \t\r");
        line.text = raw.substr(first, last - first + 1);
        out.push_back(std::move(line));
        if (end == text.size()) break;
    }
    return out;
}

long long parse_int(std::string_view s, std::size_t line, const char* what) {
    long long v = 0;
    const auto* b = s.data();
    const auto* e = s.data() + s.size();
    if (!s.empty() && s.front() == '+') ++b;
    const auto [p, ec] = std::from_chars(b, e, v);
    if (ec != std::errc{} || p != e) throw ParseError(line, std::string("invalid ") + what + " '" + std::string(s) + "'");
    return v;
}

Alphabet parse_alphabet(std::string_view token, std::size_t line) {
    std::vector<State> factors;
    std::size_t pos = 0;
    while (true) {
        const auto x = token.find('x', pos);
        const auto part = token.substr(pos, x == std::string_view::npos ? std::string_view::npos : x - pos);
        const long long v = parse_int(part, line, "alphabet size");
        if (v < 1 || v > (1 << 20)) throw ParseError(line, "alphabet size out of range");
        factors.push_back(static_cast<State>(v));
        if (x == std::string_view::npos) break;
        pos = x + 1;
    }
    try {
        return factors.size() == 1 ? Alphabet(factors[0]) : Alphabet::product(factors);
    } catch (const Error& e) {
        throw ParseError(line, e.what());
    }
}

std::string format_alphabet(const Alphabet& a) {
    std::string s;
    for (std::size_t i = 0; i < a.factors().size(); ++i) s += (i ? "x" : "") + std::to_string(a.factors()[i]);
    return s;
}

Point parse_point(const std::string& body, std::size_t line) {
    Point p;
    std::size_t pos = 0;
    while (true) {
        const auto comma = body.find(',', pos);
        std::string part = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        part.erase(0, part.find_first_not_of(" \t"));
        part.erase(part.find_last_not_of(" \t") + 1);
        p.push_back(static_cast<int>(parse_int(part, line, "offset coordinate")));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return p;
}

std::vector<Point> parse_points(const std::string& rest, std::size_t line) {
    static const std::regex tuple(R"(\(([^()]*)\))");
    std::vector<Point> points;
    std::string leftover;
    auto it = std::sregex_iterator(rest.begin(), rest.end(), tuple);
    std::size_t last = 0;
    for (; it != std::sregex_iterator(); ++it) {
        leftover += rest.substr(last, static_cast<std::size_t>(it->position()) - last);
        last = static_cast<std::size_t>(it->position() + it->length());
        points.push_back(parse_point((*it)[1].str(), line));
    }
    leftover += rest.substr(last);
    if (leftover.find_first_not_of(" \t") != std::string::npos)
        throw ParseError(line, "expected offsets like (0) or (0,1), found '" + leftover + "'");
    if (points.empty()) throw ParseError(line, "no offsets given");
    return points;
}

std::string after_directive(const Line& l) {
    const auto sp = l.text.find_first_of(" \t");
    return sp == std::string::npos ? std::string{} : l.text.substr(sp + 1);
}

std::string format_points(const std::vector<Point>& points) {
    std::string s;
    for (std::size_t i = 0; i < points.size(); ++i) s += (i ? " " : "") + format_point(points[i]);
    return s;
}

struct Section {
    std::string name;
    std::size_t line = 0;
    std::vector<const Line*> rows;
};

bool is_row(const Line& l) { return l.text.find("->") != std::string::npos; }

// Collects the table rows of a section into a dense table.
RuleTable build_table(const Section& sec, const Alphabet& alphabet, std::size_t arity_in, std::size_t arity_out) {
    const std::size_t rows = RuleTable::rows_for(alphabet.size(), arity_in);
    std::vector<State> outputs(rows * arity_out);
    std::vector<char> seen(rows, 0);
    for (const Line* l : sec.rows) {
        std::vector<State> in, out;
        bool right = false;
        for (const auto& tok : l->tokens) {
            if (tok == "->") {
                if (right) throw ParseError(l->number, "more than one '->'");
                right = true;
                continue;
            }
            State s;
            try {
                s = parse_state(tok, alphabet);
            } catch (const ParseError&) {
                throw;
            } catch (const Error& e) {
                throw ParseError(l->number, e.what());
            }
            (right ? out : in).push_back(s);
        }
        if (!right) throw ParseError(l->number, "table row needs '->'");
        if (in.size() != arity_in || out.size() != arity_out)
            throw ParseError(l->number, "table row must map " + std::to_string(arity_in) + " states to " +
                                            std::to_string(arity_out));
        std::size_t r = 0;
        for (State s : in) r = r * alphabet.size() + s;
        if (seen[r]) throw ParseError(l->number, "duplicate table row");
        seen[r] = 1;
        std::copy(out.begin(), out.end(), outputs.begin() + static_cast<std::ptrdiff_t>(r * arity_out));
    }
    for (std::size_t r = 0; r < rows; ++r) {
        if (seen[r]) continue;
        std::string missing;
        std::size_t rest = r;
        std::vector<State> in(arity_in);
        for (std::size_t i = arity_in; i-- > 0;) {
            in[i] = static_cast<State>(rest % alphabet.size());
            rest /= alphabet.size();
        }
        for (std::size_t i = 0; i < in.size(); ++i) missing += (i ? " " : "") + format_state(in[i], alphabet);
        throw ParseError(sec.line, "table not total: " + sec.name + " has no row for input (" + missing + ")");
    }
    return RuleTable(alphabet, arity_in, arity_out, std::move(outputs));
}

void write_table(std::ostream& os, const RuleTable& t, const Alphabet& alphabet) {
    for (std::size_t r = 0; r < t.row_count(); ++r) {
        const auto in = t.row_input(r);
        for (std::size_t i = 0; i < in.size(); ++i) os << (i ? " " : "") << format_state(in[i], alphabet);
        os << " ->";
        for (State s : t.row(r)) os << ' ' << format_state(s, alphabet);
        os << '\n';
    }
}

struct RawRuleFile {
    std::optional<std::string> kind;
    std::optional<Alphabet> alphabet;
    std::optional<Neighbourhood> neigh;
    std::optional<std::size_t> arity;
    std::map<std::string, Section> sections;
    std::size_t last_line = 0;
};

template <class T>
const T& require(const std::optional<T>& v, const RawRuleFile& f, const char* what) {
    if (!v) throw ParseError(f.last_line, std::string("missing '") + what + "' directive");
    return *v;
}

} // namespace

std::string format_state(State s, const Alphabet& alphabet) {
    if (!alphabet.is_product()) return std::to_string(s);
    const auto parts = alphabet.unpack(s);
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "." : "") + std::to_string(parts[i]);
    return out;
}

State parse_state(std::string_view token, const Alphabet& alphabet) {
    if (token.find('.') == std::string_view::npos) {
        const long long v = parse_int(token, 0, "state");
        if (v < 0 || v >= alphabet.size())
            throw Error("state " + std::string(token) + " outside alphabet of size " + std::to_string(alphabet.size()));
        return static_cast<State>(v);
    }
    std::vector<State> parts;
    std::size_t pos = 0;
    while (true) {
        const auto dot = token.find('.', pos);
        const auto part = token.substr(pos, dot == std::string_view::npos ? std::string_view::npos : dot - pos);
        const long long v = parse_int(part, 0, "state component");
        if (v < 0) throw Error("negative state component");
        parts.push_back(static_cast<State>(v));
        if (dot == std::string_view::npos) break;
        pos = dot + 1;
    }
    if (parts.size() != alphabet.factors().size())
        throw Error("state '" + std::string(token) + "' does not match alphabet " + format_alphabet(alphabet));
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (parts[i] >= alphabet.factors()[i]) throw Error("state '" + std::string(token) + "' out of range");
    return alphabet.pack(parts);
}

Automaton parse_rule_file(std::string_view text, ParseOptions options) {
    // Sections point into `lines`.
    const auto lines = split_lines(text);

    RawRuleFile f;
    Section* current = nullptr;
    for (const auto& l : lines) {
        f.last_line = l.number;
        if (is_row(l)) {
            if (!current) throw ParseError(l.number, "table row outside of a rule/interaction/update section");
            current->rows.push_back(&l);
            continue;
        }
        current = nullptr;
        const auto& d = l.tokens[0];
        if (d == "kind") {
            if (l.tokens.size() != 2) throw ParseError(l.number, "usage: kind ca|cca");
            f.kind = l.tokens[1];
        } else if (d == "alphabet") {
            if (l.tokens.size() != 2) throw ParseError(l.number, "usage: alphabet <n> or <n1>x<n2>");
            f.alphabet = parse_alphabet(l.tokens[1], l.number);
        } else if (d == "neigh") {
            try {
                f.neigh = Neighbourhood(parse_points(after_directive(l), l.number));
            } catch (const ParseError&) {
                throw;
            } catch (const Error& e) {
                throw ParseError(l.number, e.what());
            }
        } else if (d == "arity") {
            if (l.tokens.size() != 2) throw ParseError(l.number, "usage: arity <k>");
            const long long k = parse_int(l.tokens[1], l.number, "arity");
            if (k < 1) throw ParseError(l.number, "arity must be positive");
            f.arity = static_cast<std::size_t>(k);
        } else if (d == "rule" || d == "interaction" || d == "update") {
            if (l.tokens.size() != 1) throw ParseError(l.number, "section header '" + d + "' takes no arguments");
            if (f.sections.count(d)) throw ParseError(l.number, "duplicate section '" + d + "'");
            current = &f.sections[d];
            current->name = d;
            current->line = l.number;
        } else {
            throw ParseError(l.number, "unknown directive '" + d + "'");
        }
    }

    const std::string& kind = require(f.kind, f, "kind");
    const Alphabet& alphabet = require(f.alphabet, f, "alphabet");
    const Neighbourhood& neigh = require(f.neigh, f, "neigh");
    auto section = [&](const std::string& name) -> const Section& {
        auto it = f.sections.find(name);
        if (it == f.sections.end()) throw ParseError(f.last_line, "missing '" + name + "' section");
        return it->second;
    };
    auto reject = [&](const std::string& name) {
        if (auto it = f.sections.find(name); it != f.sections.end())
            throw ParseError(it->second.line, "section '" + name + "' not allowed for kind " + kind);
    };

    if (kind == "ca") {
        reject("interaction");
        reject("update");
        return TraditionalCA(alphabet, neigh, build_table(section("rule"), alphabet, neigh.size(), 1));
    }
    if (kind == "cca") {
        reject("rule");
        auto interaction = build_table(section("interaction"), alphabet, neigh.size(), neigh.size());
        auto update = build_table(section("update"), alphabet, 1, 1);
        if (options.validate) return ClosedCA::validated(alphabet, neigh, std::move(interaction), std::move(update));
        return ClosedCA::unvalidated(alphabet, neigh, std::move(interaction), std::move(update));
    }
    throw ParseError(f.last_line, "kind must be 'ca' or 'cca', found '" + kind + "'");
}

const Alphabet& alphabet_of(const Automaton& a) {
    return std::visit([](const auto& x) -> const Alphabet& { return x.alphabet(); }, a);
}

std::string serialize_rule_file(const Automaton& automaton) {
    std::ostringstream os;
    const Alphabet& alphabet = alphabet_of(automaton);
    if (const auto* ca = std::get_if<TraditionalCA>(&automaton)) {
        os << "kind ca\n"
           << "alphabet " << format_alphabet(alphabet) << '\n'
           << "neigh " << format_points(ca->neigh().offsets()) << '\n'
           << "rule\n";
        write_table(os, ca->rule(), alphabet);
    } else {
        const auto& cca = std::get<ClosedCA>(automaton);
        os << "kind cca\n"
           << "alphabet " << format_alphabet(alphabet) << '\n'
           << "neigh " << format_points(cca.neigh().offsets()) << '\n'
           << "interaction\n";
        write_table(os, cca.interaction(), alphabet);
        os << "update\n";
        write_table(os, cca.update(), alphabet);
    }
    return os.str();
}

RuleTable parse_block_file(std::string_view text) {
    const auto lines = split_lines(text);
    std::optional<Alphabet> alphabet;
    std::optional<std::size_t> arity;
    Section rows;
    bool in_rule = false;
    std::size_t last = 0;
    for (const auto& l : lines) {
        last = l.number;
        if (is_row(l)) {
            if (!in_rule) throw ParseError(l.number, "table row outside of the rule section");
            rows.rows.push_back(&l);
            continue;
        }
        in_rule = false;
        const auto& d = l.tokens[0];
        if (d == "kind") {
            if (l.tokens.size() != 2 || l.tokens[1] != "block") throw ParseError(l.number, "expected 'kind block'");
        } else if (d == "alphabet" && l.tokens.size() == 2) {
            alphabet = parse_alphabet(l.tokens[1], l.number);
        } else if (d == "arity" && l.tokens.size() == 2) {
            const long long k = parse_int(l.tokens[1], l.number, "arity");
            if (k < 1) throw ParseError(l.number, "arity must be positive");
            arity = static_cast<std::size_t>(k);
        } else if (d == "rule" && l.tokens.size() == 1) {
            in_rule = true;
            rows.name = "rule";
            rows.line = l.number;
        } else {
            throw ParseError(l.number, "unexpected '" + l.text + "' in block file");
        }
    }
    if (!alphabet) throw ParseError(last, "missing 'alphabet' directive");
    if (!arity) throw ParseError(last, "missing 'arity' directive");
    if (!rows.line) throw ParseError(last, "missing 'rule' section");
    return build_table(rows, *alphabet, *arity, *arity);
}

std::string serialize_block_file(const RuleTable& table) {
    std::ostringstream os;
    os << "kind block\nalphabet " << format_alphabet(table.alphabet()) << "\narity " << table.arity_in() << "\nrule\n";
    write_table(os, table, table.alphabet());
    return os.str();
}

Configuration parse_config_file(std::string_view text, const Alphabet& alphabet) {
    std::optional<std::vector<int>> dims;
    std::vector<State> cells;
    bool in_cells = false;
    std::size_t last = 0;
    for (const auto& l : split_lines(text)) {
        last = l.number;
        std::size_t first = 1;
        if (l.tokens[0] == "dims") {
            in_cells = false;
            std::vector<int> d;
            for (std::size_t i = 1; i < l.tokens.size(); ++i) {
                const long long v = parse_int(l.tokens[i], l.number, "extent");
                if (v < 1) throw ParseError(l.number, "extents must be positive");
                d.push_back(static_cast<int>(v));
            }
            if (d.empty()) throw ParseError(l.number, "dims needs at least one extent");
            dims = std::move(d);
            continue;
        }
        if (l.tokens[0] == "cells") {
            in_cells = true;
        } else if (in_cells) {
            first = 0;
        } else {
            throw ParseError(l.number, "unknown directive '" + l.tokens[0] + "'");
        }
        for (std::size_t i = first; i < l.tokens.size(); ++i) {
            try {
                cells.push_back(parse_state(l.tokens[i], alphabet));
            } catch (const Error& e) {
                throw ParseError(l.number, e.what());
            }
        }
    }
    if (!dims) throw ParseError(last, "missing 'dims' directive");
    try {
        return Configuration(Lattice(*dims), std::move(cells));
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(last, e.what());
    }
}

std::string serialize_config_file(const Configuration& c, const Alphabet& alphabet) {
    std::ostringstream os;
    os << "dims";
    for (int e : c.lattice().dims()) os << ' ' << e;
    os << "\ncells";
    for (State s : c.cells()) os << ' ' << format_state(s, alphabet);
    os << '\n';
    return os.str();
}

void write_trajectory(std::ostream& os, const Automaton& automaton, const Configuration& initial, std::size_t steps) {
    const Alphabet& alphabet = alphabet_of(automaton);
    initial.check_alphabet(alphabet);
    const bool closed = std::holds_alternative<ClosedCA>(automaton);
    if (closed && !std::get<ClosedCA>(automaton).is_validated())
        throw Error("interaction table has not been validated as translation commutative");

    os << "# kind " << (closed ? "cca" : "ca") << "\n# dims";
    for (int e : initial.lattice().dims()) os << ' ' << e;
    os << "\n# alphabet " << format_alphabet(alphabet) << "\n# steps " << steps << '\n';

    auto emit = [&](std::span<const State> cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? " " : "") << format_state(cells[i], alphabet);
        os << '\n';
    };
    std::vector<State> cur(initial.cells().begin(), initial.cells().end());
    emit(cur);
    if (closed) {
        const CcaStepper stepper(std::get<ClosedCA>(automaton), initial.lattice());
        for (std::size_t t = 0; t < steps; ++t) {
            stepper.step(cur);
            emit(cur);
        }
    } else {
        const CaStepper stepper(std::get<TraditionalCA>(automaton), initial.lattice());
        std::vector<State> next(cur.size());
        for (std::size_t t = 0; t < steps; ++t) {
            stepper.step(cur, next);
            cur.swap(next);
            emit(cur);
        }
    }
}

SearchSpec parse_search_spec(std::string_view text) {
    SearchSpec spec;
    std::optional<Neighbourhood> neigh;
    std::size_t last = 0;
    bool have_target = false;
    for (const auto& l : split_lines(text)) {
        last = l.number;
        const auto& d = l.tokens[0];
        if (d == "alphabet" && l.tokens.size() == 2) {
            const long long v = parse_int(l.tokens[1], l.number, "alphabet size");
            if (v < 1 || v > 64) throw ParseError(l.number, "search alphabet size out of range");
            spec.alphabet_size = static_cast<State>(v);
        } else if (d == "neigh") {
            try {
                neigh = Neighbourhood(parse_points(after_directive(l), l.number));
            } catch (const ParseError&) {
                throw;
            } catch (const Error& e) {
                throw ParseError(l.number, e.what());
            }
        } else if (d == "reversible" && l.tokens.size() == 2) {
            if (l.tokens[1] == "yes" || l.tokens[1] == "true")
                spec.require_reversible = true;
            else if (l.tokens[1] == "no" || l.tokens[1] == "false")
                spec.require_reversible = false;
            else
                throw ParseError(l.number, "reversible must be yes or no");
        } else if (d == "target" && l.tokens.size() == 2) {
            if (l.tokens[1] == "identity")
                spec.target = TargetMap::identity();
            else if (l.tokens[1] == "shift-right")
                spec.target = TargetMap::shift_right();
            else
                throw ParseError(l.number, "target must be identity or shift-right");
            have_target = true;
        } else if (d == "rings" && l.tokens.size() >= 2) {
            for (std::size_t i = 1; i < l.tokens.size(); ++i) {
                const long long v = parse_int(l.tokens[i], l.number, "ring size");
                if (v < 1) throw ParseError(l.number, "ring size must be positive");
                spec.lattices.push_back(Lattice::ring(static_cast<int>(v)));
            }
        } else if (d == "lattice" && l.tokens.size() >= 2) {
            std::vector<int> dims;
            for (std::size_t i = 1; i < l.tokens.size(); ++i) {
                const long long v = parse_int(l.tokens[i], l.number, "extent");
                if (v < 1) throw ParseError(l.number, "extent must be positive");
                dims.push_back(static_cast<int>(v));
            }
            spec.lattices.emplace_back(std::move(dims));
        } else if (d == "ceiling" && l.tokens.size() == 2) {
            try {
                spec.enumeration_ceiling = std::stod(l.tokens[1]);
            } catch (const std::exception&) {
                throw ParseError(l.number, "invalid ceiling '" + l.tokens[1] + "'");
            }
        } else {
            throw ParseError(l.number, "unexpected '" + l.text + "' in search spec");
        }
    }
    if (!neigh) throw ParseError(last, "missing 'neigh' directive");
    if (!have_target) throw ParseError(last, "missing 'target' directive");
    if (spec.lattices.empty()) throw ParseError(last, "missing 'rings' or 'lattice' directive");
    spec.neigh = *neigh;
    return spec;
}

std::string format_search_report(const SearchSpec& spec, const SearchReport& report) {
    std::ostringstream os;
    os << "target: " << spec.target.name() << '\n'
       << "alphabet: " << spec.alphabet_size << '\n'
       << "neigh: " << format_points(spec.neigh.offsets()) << '\n'
       << "reversible: " << (spec.require_reversible ? "yes" : "no") << '\n'
       << "lattices:";
    for (const auto& lat : spec.lattices) {
        os << ' ';
        for (std::size_t i = 0; i < lat.dims().size(); ++i) os << (i ? "x" : "") << lat.dims()[i];
    }
    os << '\n'
       << "candidates examined: " << report.candidates_examined << '\n'
       << "commutative candidates: " << report.commutative_count << '\n'
       << "matches: " << report.matches.size() << '\n'
       << "elapsed: " << std::fixed << std::setprecision(3) << report.elapsed.count() << " s\n"
       << "note: finite-lattice evidence, not proof. The result covers only the listed lattices and says nothing "
          "conclusive about the infinite lattice.\n";
    for (std::size_t i = 0; i < report.matches.size(); ++i)
        os << "\n# match " << i + 1 << '\n' << serialize_rule_file(report.matches[i]);
    return os.str();
}

ColourSchedule parse_schedule_file(std::string_view text) {
    const auto lines = split_lines(text);
    std::optional<Alphabet> alphabet;
    std::optional<Neighbourhood> neigh;
    std::optional<std::vector<int>> tile_dims;
    std::optional<std::vector<State>> colours;
    std::vector<std::pair<State, Section>> rules;
    Section* current = nullptr;
    std::size_t last = 0;
    for (const auto& l : lines) {
        last = l.number;
        if (is_row(l)) {
            if (!current) throw ParseError(l.number, "table row outside of a rule section");
            current->rows.push_back(&l);
            continue;
        }
        current = nullptr;
        const auto& d = l.tokens[0];
        if (d == "alphabet" && l.tokens.size() == 2) {
            alphabet = parse_alphabet(l.tokens[1], l.number);
        } else if (d == "neigh") {
            try {
                neigh = Neighbourhood(parse_points(after_directive(l), l.number));
            } catch (const ParseError&) {
                throw;
            } catch (const Error& e) {
                throw ParseError(l.number, e.what());
            }
        } else if (d == "tile" && l.tokens.size() >= 2) {
            std::vector<int> dims;
            for (std::size_t i = 1; i < l.tokens.size(); ++i) {
                const long long v = parse_int(l.tokens[i], l.number, "tile extent");
                if (v < 1) throw ParseError(l.number, "tile extents must be positive");
                dims.push_back(static_cast<int>(v));
            }
            tile_dims = std::move(dims);
        } else if (d == "colours" && l.tokens.size() >= 2) {
            std::vector<State> cs;
            for (std::size_t i = 1; i < l.tokens.size(); ++i) {
                const long long v = parse_int(l.tokens[i], l.number, "colour");
                if (v < 0 || v > 1024) throw ParseError(l.number, "colour out of range");
                cs.push_back(static_cast<State>(v));
            }
            colours = std::move(cs);
        } else if (d == "rule" && l.tokens.size() == 2) {
            const long long v = parse_int(l.tokens[1], l.number, "colour");
            if (v < 0) throw ParseError(l.number, "colour out of range");
            rules.emplace_back(static_cast<State>(v), Section{"rule " + l.tokens[1], l.number, {}});
            current = &rules.back().second;
        } else {
            throw ParseError(l.number, "unexpected '" + l.text + "' in colour schedule");
        }
    }
    if (!alphabet) throw ParseError(last, "missing 'alphabet' directive");
    if (!neigh) throw ParseError(last, "missing 'neigh' directive");
    if (!tile_dims) throw ParseError(last, "missing 'tile' directive");
    if (!colours) throw ParseError(last, "missing 'colours' directive");
    if (rules.empty()) throw ParseError(last, "colour schedule needs at least one rule");
    try {
        ColourSchedule sched{ColourTile(Lattice(*tile_dims), *colours), *neigh, *alphabet, {}};
        for (const auto& [colour, sec] : rules)
            sched.rules.push_back({colour, build_table(sec, *alphabet, neigh->size(), 1)});
        sched.check();
        return sched;
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(last, e.what());
    }
}

std::string format_commutativity(const CommutativityReport& report) {
    if (report.ok) return "translation commutative: yes\n";
    return "translation commutative: no\nwitness: " + describe(*report.witness) + '\n';
}

} // namespace cca
