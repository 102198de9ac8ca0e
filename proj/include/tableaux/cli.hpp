#pragma once

// Command-line front end:
//
//   tableaux <command> --mu <seq> --a <seq> [--r <int>] [--json] [--dot]
//            [--trace] [--max-n <int>] [--cap <int>]
//
// Exit status: 0 success, 1 false/empty outcome, 2 invalid input.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tableaux/algorithms.hpp"
#include "tableaux/core.hpp"
#include "tableaux/enumeration.hpp"
#include "tableaux/error.hpp"
#include "tableaux/io.hpp"
#include "tableaux/tableau.hpp"
#include "tableaux/verify.hpp"

namespace tableaux::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitInvalid = 2;

struct CliRequest {
    std::string command;
    std::optional<Partition> mu;
    std::optional<Composition> a;
    std::optional<std::size_t> r;
    bool json = false;
    bool dot = false;
    bool trace = false;
    Part max_n = 7;
    Part cap = kDefaultEnumerationCap;
    std::string help;  // non-empty when help was requested
};

struct CommandInfo {
    const char* name;
    const char* description;
    bool needs_pair;
    bool needs_r;
};

inline const std::vector<CommandInfo>& commands() {
    static const std::vector<CommandInfo> table = {
        {"check", "is STab(mu,a) nonempty? prints lambda(a)", true, false},
        {"greatest", "greatest element of STab(mu,a)", true, false},
        {"least", "least element of STab(mu,a)", true, false},
        {"fill", "tableau with the largest value in row l(mu,a)", true, false},
        {"floor-least", "least element among tableaux whose largest value starts at row >= r",
         true, true},
        {"enumerate", "all elements of STab(mu,a)", true, false},
        {"kostka", "number of elements of STab(mu,a)", true, false},
        {"removable", "R(mu,a), l(mu,a) and s(mu,a)", true, false},
        {"poset", "Hasse diagram and summary of (STab(mu,a), <=)", true, false},
        {"verify", "exhaustive cross-checks for all n <= --max-n", false, false},
    };
    return table;
}

/// Parses arguments (without the program name).
inline CliRequest parse_request(const std::vector<std::string>& args) {
    CLI::App app{"Semistandard tableaux of given shape and weight", "tableaux"};
    app.require_subcommand(1, 1);

    std::optional<std::string> mu_text, a_text;
    std::optional<long long> r_value;
    CliRequest req;
    app.add_option("--mu", mu_text, "shape, e.g. 4,4,1,1");
    app.add_option("--a", a_text, "weight composition, e.g. 1,3,2,2,2");
    app.add_option("--r", r_value, "floor row for floor-least");
    app.add_flag("--json", req.json, "JSON output");
    app.add_flag("--dot", req.dot, "Graphviz output (poset only)");
    app.add_flag("--trace", req.trace, "print the construction table");
    app.add_option("--max-n", req.max_n, "largest n for verify")->check(CLI::PositiveNumber);
    app.add_option("--cap", req.cap, "enumeration size guard")->check(CLI::PositiveNumber);
    for (const CommandInfo& c : commands())
        app.add_subcommand(c.name, c.description)->fallthrough();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        req.help = app.help();
        return req;
    } catch (const CLI::ParseError& e) {
        throw Error(ErrorCode::UsageError, e.what());
    }

    req.command = app.get_subcommands().front()->get_name();
    const auto& info = *std::find_if(commands().begin(), commands().end(),
                                     [&](const CommandInfo& c) { return req.command == c.name; });
    if (info.needs_pair) {
        if (!mu_text || !a_text)
            throw Error(ErrorCode::UsageError, req.command + " requires --mu and --a");
        req.mu = parse_partition(*mu_text);
        req.a = parse_composition(*a_text);
    }
    if (info.needs_r) {
        if (!r_value)
            throw Error(ErrorCode::UsageError, req.command + " requires --r");
        if (*r_value < 1)
            throw Error(ErrorCode::InvalidFloor, "--r must be a positive row index");
        req.r = static_cast<std::size_t>(*r_value);
    }
    if (req.dot && req.command != "poset")
        throw Error(ErrorCode::UsageError, "--dot only applies to poset");
    return req;
}

namespace detail {

inline void print_tableau(std::ostream& out, const CliRequest& req, const TracedTableau& built,
                          TraceStyle style, char name) {
    if (req.json) {
        nlohmann::json j = tableau_to_json(built.tableau);
        if (req.trace)
            j = {{"tableau", j}, {"trace", trace_to_json(built.trace)}};
        out << j.dump() << '\n';
        return;
    }
    if (req.trace)
        out << render_trace(built.trace, style, name) << '\n';
    out << format_tableau_text(built.tableau);
}

inline int run_check(std::ostream& out, const CliRequest& req) {
    const Partition lambda = sort_to_partition(*req.a);
    const bool nonempty = is_nonempty(*req.mu, *req.a);
    if (req.json) {
        out << nlohmann::json{{"nonempty", nonempty}, {"lambda", lambda.parts()}}.dump() << '\n';
    } else if (nonempty) {
        out << "nonempty (mu dominates lambda(a)=" << format_sequence(lambda) << ")\n";
    } else {
        out << "empty (mu does not dominate lambda(a)=" << format_sequence(lambda) << ")\n";
    }
    return nonempty ? kExitOk : kExitFalse;
}

inline int run_enumerate(std::ostream& out, const CliRequest& req) {
    const auto all = enumerate_tableaux(*req.mu, *req.a, req.cap);
    if (req.json) {
        nlohmann::json j = nlohmann::json::array();
        for (const Tableau& t : all)
            j.push_back(tableau_to_json(t));
        out << j.dump() << '\n';
    } else {
        for (std::size_t i = 0; i < all.size(); ++i)
            out << (i ? "\n" : "") << format_tableau_text(all[i]);
    }
    return all.empty() ? kExitFalse : kExitOk;
}

inline int run_removable(std::ostream& out, const CliRequest& req) {
    const auto removable = removable_set(*req.mu, *req.a);
    const std::size_t l = l_min(*req.mu, *req.a);
    const std::size_t s = s_index(*req.mu, *req.a);
    if (req.json) {
        out << nlohmann::json{{"R", removable}, {"l", l}, {"s", s}}.dump() << '\n';
        return kExitOk;
    }
    out << "R = {";
    for (std::size_t i = 0; i < removable.size(); ++i)
        out << (i ? "," : "") << removable[i];
    out << "}\nl = " << l << "\ns = " << s << '\n';
    return kExitOk;
}

inline int run_poset(std::ostream& out, const CliRequest& req) {
    const PosetSummary poset = build_poset(*req.mu, *req.a, req.cap);
    auto word = [&](const std::optional<std::size_t>& i) {
        return i ? reading_word(poset.elements[*i]) : std::string("none");
    };
    if (req.json) {
        nlohmann::json elements = nlohmann::json::array();
        for (const Tableau& t : poset.elements)
            elements.push_back(tableau_to_json(t));
        nlohmann::json j = {{"size", poset.elements.size()},
                            {"total_order", poset.is_total_order},
                            {"covers", poset.covers},
                            {"elements", elements},
                            {"greatest", nullptr},
                            {"least", nullptr}};
        if (poset.greatest)
            j["greatest"] = *poset.greatest;
        if (poset.least)
            j["least"] = *poset.least;
        out << j.dump() << '\n';
    } else {
        const char* prefix = req.dot ? "// " : "";
        out << prefix << "size: " << poset.elements.size() << '\n'
            << prefix << "total order: " << (poset.is_total_order ? "yes" : "no") << '\n'
            << prefix << "greatest: " << word(poset.greatest) << '\n'
            << prefix << "least: " << word(poset.least) << '\n'
            << prefix << "covers: " << poset.covers.size() << '\n';
        if (req.dot)
            out << to_dot(poset);
    }
    return poset.elements.empty() ? kExitFalse : kExitOk;
}

inline int run_verify(std::ostream& out, const CliRequest& req) {
    if (req.max_n > req.cap)
        throw Error(ErrorCode::CapExceeded, "--max-n " + std::to_string(req.max_n) +
                                                " exceeds the enumeration cap " +
                                                std::to_string(req.cap));
    bool all_passed = true;
    for (const CheckResult& c : run_verification(req.max_n)) {
        all_passed = all_passed && c.passed;
        out << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << c.cases << " cases)";
        if (!c.passed)
            out << ": " << c.failure;
        out << '\n';
    }
    return all_passed ? kExitOk : kExitFalse;
}

} // namespace detail

inline int execute(const CliRequest& req, std::ostream& out) {
    const std::string& cmd = req.command;
    if (cmd == "check")
        return detail::run_check(out, req);
    if (cmd == "greatest")
        detail::print_tableau(out, req, greatest_tableau_traced(*req.mu, *req.a), TraceStyle::Strip,
                              'T');
    else if (cmd == "fill")
        detail::print_tableau(out, req, removable_fill_tableau_traced(*req.mu, *req.a),
                              TraceStyle::Strip, 'U');
    else if (cmd == "least")
        detail::print_tableau(out, req, least_tableau_traced(*req.mu, *req.a), TraceStyle::Single,
                              'S');
    else if (cmd == "floor-least")
        detail::print_tableau(out, req, least_tableau_with_floor_traced(*req.mu, *req.a, *req.r),
                              TraceStyle::Single, 'S');
    else if (cmd == "enumerate")
        return detail::run_enumerate(out, req);
    else if (cmd == "kostka") {
        const auto count = kostka(*req.mu, *req.a, req.cap);
        if (req.json)
            out << nlohmann::json{{"kostka", count}}.dump() << '\n';
        else
            out << count << '\n';
    } else if (cmd == "removable")
        return detail::run_removable(out, req);
    else if (cmd == "poset")
        return detail::run_poset(out, req);
    else if (cmd == "verify")
        return detail::run_verify(out, req);
    return kExitOk;
}

/// Parses and runs one invocation. Diagnostics go to `err` as a single line
/// naming the error code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        const CliRequest req = parse_request(args);
        if (!req.help.empty()) {
            out << req.help;
            return kExitOk;
        }
        return execute(req, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    }
}

} // namespace tableaux::cli
