// Command-line front end: every subcommand maps onto one library operation
// and emits a canonical JSON (or flattened CSV) report on standard output.
//
// Exit codes: 0 = computed; 1 = negative answer from a predicate or an
// empty search; 2 = input error (malformed JSON, unknown subcommand,
// violated hypotheses); 3 = a brute-force bound was exceeded.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "halltab/halltab.hpp"

namespace {

constexpr const char* tool_version = "0.1.0";

struct cli_options {
    std::string family_text;
    std::string shape_text;
    std::string config_text;
    std::string word_text;
    std::string tableau_text;
    std::string transversal_text;
    std::string format = "json";
    std::string theorem_id;
    int m_value = 0;
    int n_value = 0;
    int bound = 0;
    std::uint64_t seed = halltab::default_verify_seed;

    bool has_family = false;
    bool has_shape = false;
    bool has_m = false;
    bool has_n = false;
    bool has_bound = false;
    bool has_transversal = false;
};

/** Family plus the shape it came from (when given via --shape). */
struct family_input {
    halltab::set_family fam;
    std::optional<halltab::transversal> given_t;
    std::optional<halltab::skew_shape> shape;
};

family_input resolve_family(const cli_options& opt, halltab::json& inputs) {
    if (opt.has_family && opt.has_shape)
        throw halltab::invalid_input("provide either --family or --shape, not both");
    if (opt.has_shape) {
        const auto shape = halltab::shape_from_json(halltab::parse_json(opt.shape_text));
        inputs["shape"] = halltab::shape_to_json(shape);
        auto hf = halltab::hook_family(shape);
        inputs["family"] = halltab::family_to_json(hf.family);
        auto rep = hf.rep;
        if (opt.has_transversal) {
            rep = halltab::transversal_from_json(halltab::parse_json(opt.transversal_text));
            halltab::validate_transversal(hf.family, rep);
            inputs["transversal"] = halltab::transversal_to_json(rep);
        }
        return {std::move(hf.family), std::move(rep), shape};
    }
    if (!opt.has_family)
        throw halltab::invalid_input("this command requires --family or --shape");
    auto fam = halltab::family_from_json(halltab::parse_json(opt.family_text));
    inputs["family"] = halltab::family_to_json(fam);
    std::optional<halltab::transversal> given;
    if (opt.has_transversal) {
        given = halltab::transversal_from_json(halltab::parse_json(opt.transversal_text));
        halltab::validate_transversal(fam, *given);
        inputs["transversal"] = halltab::transversal_to_json(*given);
    }
    return {std::move(fam), std::move(given), std::nullopt};
}

/** The transversal to work relative to: the given one, else the found one. */
halltab::transversal require_transversal(const family_input& in) {
    if (in.given_t) return *in.given_t;
    auto t = halltab::find_transversal(in.fam);
    if (!t) throw halltab::invalid_input("family has no transversal");
    return *t;
}

halltab::skew_shape require_shape(const cli_options& opt, halltab::json& inputs) {
    if (!opt.has_shape) throw halltab::invalid_input("this command requires --shape");
    const auto shape = halltab::shape_from_json(halltab::parse_json(opt.shape_text));
    inputs["shape"] = halltab::shape_to_json(shape);
    return shape;
}

int require_m(const cli_options& opt, halltab::json& inputs) {
    if (!opt.has_m) throw halltab::invalid_input("this command requires --m");
    inputs["m"] = opt.m_value;
    return opt.m_value;
}

int require_n(const cli_options& opt, halltab::json& inputs) {
    if (!opt.has_n) throw halltab::invalid_input("this command requires --n");
    inputs["n"] = opt.n_value;
    return opt.n_value;
}

halltab::configuration require_config(const cli_options& opt, halltab::json& inputs) {
    if (opt.config_text.empty()) throw halltab::invalid_input("this command requires --config");
    auto f = halltab::configuration_from_json(halltab::parse_json(opt.config_text));
    inputs["config"] = halltab::configuration_to_json(f);
    return f;
}

halltab::surjective_word require_word(const cli_options& opt, halltab::json& inputs) {
    if (opt.word_text.empty()) throw halltab::invalid_input("this command requires --word");
    auto w = halltab::word_from_json(halltab::parse_json(opt.word_text));
    inputs["word"] = halltab::word_to_json(w);
    return w;
}

halltab::tableau require_tableau(const cli_options& opt, halltab::json& inputs) {
    if (opt.tableau_text.empty()) throw halltab::invalid_input("this command requires --tableau");
    auto t = halltab::tableau_from_json(halltab::parse_json(opt.tableau_text));
    inputs["tableau"] = halltab::tableau_to_json(t);
    return t;
}

void flatten_json(const halltab::json& j, const std::string& prefix,
                  std::vector<std::pair<std::string, std::string>>& out) {
    if (j.is_object()) {
        for (const auto& [key, value] : j.items())
            flatten_json(value, prefix.empty() ? key : prefix + "." + key, out);
    } else if (j.is_array()) {
        std::size_t index = 0;
        for (const auto& value : j) flatten_json(value, prefix + "[" + std::to_string(index++) + "]", out);
    } else if (j.is_string()) {
        out.emplace_back(prefix, j.get<std::string>()); // raw, not JSON-quoted
    } else {
        out.emplace_back(prefix, j.dump());
    }
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string quoted = "\"";
    for (const char c : field) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + "\"";
}

void print_report(const halltab::json& report, const std::string& format) {
    if (format == "csv") {
        std::vector<std::pair<std::string, std::string>> rows;
        flatten_json(report, "", rows);
        std::cout << "key,value\n";
        for (const auto& [key, value] : rows)
            std::cout << csv_escape(key) << "," << csv_escape(value) << "\n";
    } else {
        std::cout << report.dump(2) << "\n";
    }
}

halltab::json suite_to_json(const halltab::suite_result& r) {
    halltab::json j;
    j["id"] = r.id;
    j["pass"] = r.pass;
    j["cases"] = r.cases;
    j["detail"] = r.detail;
    return j;
}

/** Runs the selected subcommand; fills result and returns the exit code. */
int dispatch(const std::string& command, const cli_options& opt, halltab::json& inputs,
             halltab::json& result) {
    if (command == "marriage") {
        const auto in = resolve_family(opt, inputs);
        const bool ok = halltab::satisfies_marriage_condition(in.fam);
        result = ok;
        return ok ? 0 : 1;
    }
    if (command == "transversal") {
        const auto in = resolve_family(opt, inputs);
        const auto t = halltab::find_transversal(in.fam);
        result = t ? halltab::transversal_to_json(*t) : halltab::json(nullptr);
        return t ? 0 : 1;
    }
    if (command == "transversals") {
        const auto in = resolve_family(opt, inputs);
        const int max_members = opt.has_bound ? opt.bound : 10;
        if (opt.has_bound) inputs["bound"] = opt.bound;
        result = halltab::json::array();
        for (const auto& t : halltab::all_transversals(in.fam, max_members))
            result.push_back(halltab::transversal_to_json(t));
        return 0;
    }
    if (command == "shellable") {
        const auto in = resolve_family(opt, inputs);
        const bool ok = halltab::is_shellable(in.fam);
        result = ok;
        return ok ? 0 : 1;
    }
    if (command == "shelling-order") {
        const auto in = resolve_family(opt, inputs);
        const auto ord = halltab::find_shelling_order(in.fam);
        result = ord ? halltab::shelling_order_to_json(*ord) : halltab::json(nullptr);
        return ord ? 0 : 1;
    }
    if (command == "unique-set") {
        const auto in = resolve_family(opt, inputs);
        const auto elements = halltab::unique_element_set(in.fam);
        if (in.shape) {
            result["elements"] = elements;
            result["cells"] = halltab::cells_to_json(halltab::outer_corner_cells(*in.shape));
        } else {
            result = elements;
        }
        return 0;
    }
    if (command == "m-range") {
        const auto in = resolve_family(opt, inputs);
        const auto [lo, hi] = halltab::m_range(in.fam);
        result["min"] = lo;
        result["max"] = hi;
        return 0;
    }
    if (command == "configs enumerate") {
        const auto in = resolve_family(opt, inputs);
        const auto t = require_transversal(in);
        const int max_results = opt.has_bound ? opt.bound : 1000000;
        if (opt.has_bound) inputs["bound"] = opt.bound;
        result = halltab::json::array();
        for (const auto& f : halltab::enumerate_configurations(in.fam, t, max_results))
            result.push_back(halltab::configuration_to_json(f));
        return 0;
    }
    if (command == "configs count") {
        const auto in = resolve_family(opt, inputs);
        const auto t = require_transversal(in);
        const auto f = require_config(opt, inputs);
        const int m = require_m(opt, inputs);
        const int max_ground = opt.has_bound ? opt.bound : 10;
        if (opt.has_bound) inputs["bound"] = opt.bound;
        result = halltab::bigint_to_json(halltab::count_satisfying(in.fam, t, f, m, max_ground));
        return 0;
    }
    if (command == "configs solve") {
        const auto in = resolve_family(opt, inputs);
        const auto t = require_transversal(in);
        const auto f = require_config(opt, inputs);
        const int m = require_m(opt, inputs);
        const int max_search = opt.has_bound ? opt.bound : 10;
        if (opt.has_bound) inputs["bound"] = opt.bound;
        const auto w = halltab::solve(in.fam, t, f, m, max_search);
        result = w ? halltab::word_to_json(*w) : halltab::json(nullptr);
        return w ? 0 : 1;
    }
    if (command == "configs classify") {
        const auto in = resolve_family(opt, inputs);
        const auto t = require_transversal(in);
        const auto w = require_word(opt, inputs);
        result = halltab::configuration_to_json(halltab::configuration_of(w, in.fam, t));
        return 0;
    }
    if (command == "shape hooks") {
        const auto shape = require_shape(opt, inputs);
        result = halltab::json::array();
        for (const auto& c : shape.cells()) {
            halltab::json entry;
            entry["cell"] = halltab::json::array({c.row, c.col});
            entry["length"] = halltab::hook_length(shape, c);
            entry["cells"] = halltab::cells_to_json(halltab::hook_cells(shape, c));
            result.push_back(std::move(entry));
        }
        return 0;
    }
    if (command == "shape family") {
        const auto shape = require_shape(opt, inputs);
        const auto hf = halltab::hook_family(shape);
        result["family"] = halltab::family_to_json(hf.family);
        result["transversal"] = halltab::transversal_to_json(hf.rep);
        return 0;
    }
    if (command == "shape corners") {
        const auto shape = require_shape(opt, inputs);
        result["inner"] = halltab::cells_to_json(halltab::inner_corners(shape.lambda()));
        result["outer"] = halltab::cells_to_json(halltab::outer_corner_cells(shape));
        return 0;
    }
    if (command == "shape syt-count") {
        const auto shape = require_shape(opt, inputs);
        const int max_cells = opt.has_bound ? opt.bound : 9;
        if (opt.has_bound) inputs["bound"] = opt.bound;
        result = halltab::bigint_to_json(halltab::count_standard(shape, max_cells));
        return 0;
    }
    if (command == "shape balanced-check") {
        const auto t = require_tableau(opt, inputs);
        if (opt.has_shape) {
            const auto shape = require_shape(opt, inputs);
            if (shape.lambda() != t.shape().lambda() || shape.mu() != t.shape().mu())
                throw halltab::invalid_input("--shape does not match the tableau's shape");
        }
        const bool ok = halltab::is_balanced(t);
        result = ok;
        return ok ? 0 : 1;
    }
    if (command == "count stirling") {
        const int n = require_n(opt, inputs);
        const int m = require_m(opt, inputs);
        result = halltab::bigint_to_json(halltab::stirling2(n, m));
        return 0;
    }
    if (command == "count surjections") {
        const int n = require_n(opt, inputs);
        const int m = require_m(opt, inputs);
        result = halltab::bigint_to_json(halltab::surjection_count(n, m));
        return 0;
    }
    if (command == "count average") {
        const auto in = resolve_family(opt, inputs);
        const int m = require_m(opt, inputs);
        result = halltab::rational_to_json(halltab::average_formula(in.fam, m));
        return 0;
    }
    if (command == "count average-brute") {
        const auto in = resolve_family(opt, inputs);
        const auto t = require_transversal(in);
        const int m = require_m(opt, inputs);
        const int max_ground = opt.has_bound ? opt.bound : 8;
        if (opt.has_bound) inputs["bound"] = opt.bound;
        result = halltab::rational_to_json(halltab::average_bruteforce(in.fam, t, m, max_ground));
        return 0;
    }
    if (command == "count average-closed") {
        const auto in = resolve_family(opt, inputs);
        const int m = require_m(opt, inputs);
        result = halltab::rational_to_json(halltab::average_closed_form(in.fam, m));
        return 0;
    }
    if (command == "verify") {
        inputs["theorem"] = opt.theorem_id;
        if (opt.has_bound) inputs["bound"] = opt.bound;
        inputs["seed"] = opt.seed;
        if (opt.theorem_id == "all") {
            result = halltab::json::array();
            bool all_pass = true;
            for (const auto& id : halltab::verify_suite_names()) {
                const auto r = halltab::run_verify_suite(id, opt.bound, opt.seed);
                all_pass = all_pass && r.pass;
                result.push_back(suite_to_json(r));
            }
            return all_pass ? 0 : 1;
        }
        const auto r = halltab::run_verify_suite(opt.theorem_id, opt.bound, opt.seed);
        result = suite_to_json(r);
        return r.pass ? 0 : 1;
    }
    throw halltab::invalid_input("unknown subcommand: " + command);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"transversals, shellable set families, configurations, and tableaux"};
    app.require_subcommand(1);
    app.fallthrough();

    cli_options opt;
    const auto* family_opt =
        app.add_option("--family", opt.family_text, "set family as JSON {\"n\":..,\"members\":[[..],..]}");
    const auto* shape_opt =
        app.add_option("--shape", opt.shape_text, "skew shape as JSON {\"lambda\":[..],\"mu\":[..]}");
    app.add_option("--config", opt.config_text, "configuration as JSON {\"demands\":[..]}");
    app.add_option("--word", opt.word_text, "surjective word as JSON {\"m\":..,\"values\":[..]}");
    app.add_option("--tableau", opt.tableau_text, "tableau as JSON array of rows (null = removed cell)");
    const auto* transversal_opt = app.add_option("--transversal", opt.transversal_text,
                                                 "transversal as JSON array of elements, one per member");
    const auto* m_opt = app.add_option("--m", opt.m_value, "codomain size m");
    const auto* n_opt = app.add_option("--n", opt.n_value, "domain size n");
    const auto* bound_opt = app.add_option("--bound", opt.bound, "size bound for brute-force work");
    app.add_option("--seed", opt.seed, "seed for randomized verification");
    app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"json", "csv"}));

    app.add_subcommand("marriage", "check the marriage condition")->fallthrough();
    app.add_subcommand("transversal", "find one transversal")->fallthrough();
    app.add_subcommand("transversals", "enumerate all transversals")->fallthrough();
    app.add_subcommand("shellable", "decide shellability")->fallthrough();
    app.add_subcommand("shelling-order", "find a shelling order")->fallthrough();
    app.add_subcommand("unique-set", "elements covered by exactly one member")->fallthrough();
    app.add_subcommand("m-range", "codomain range of the satisfiability theorem")->fallthrough();

    auto* configs = app.add_subcommand("configs", "configuration operations");
    configs->require_subcommand(1);
    configs->fallthrough();
    configs->add_subcommand("enumerate", "list all configurations")->fallthrough();
    configs->add_subcommand("count", "count words satisfying a configuration")->fallthrough();
    configs->add_subcommand("solve", "produce a word satisfying a configuration")->fallthrough();
    configs->add_subcommand("classify", "configuration satisfied by a word")->fallthrough();

    auto* shape = app.add_subcommand("shape", "skew-shape operations");
    shape->require_subcommand(1);
    shape->fallthrough();
    shape->add_subcommand("hooks", "hook cells and lengths per cell")->fallthrough();
    shape->add_subcommand("family", "hook family and its transversal")->fallthrough();
    shape->add_subcommand("corners", "inner corners and outer corner cells")->fallthrough();
    shape->add_subcommand("syt-count", "count standard tableaux by brute force")->fallthrough();
    shape->add_subcommand("balanced-check", "check a tableau for balance")->fallthrough();

    auto* count = app.add_subcommand("count", "exact counting operations");
    count->require_subcommand(1);
    count->fallthrough();
    count->add_subcommand("stirling", "Stirling number of the second kind")->fallthrough();
    count->add_subcommand("surjections", "number of surjections [n] -> [m]")->fallthrough();
    count->add_subcommand("average", "average satisfying-word count, by formula")->fallthrough();
    count->add_subcommand("average-brute", "average satisfying-word count, by enumeration")->fallthrough();
    count->add_subcommand("average-closed", "average via fixed-difference closed form")->fallthrough();

    auto* verify = app.add_subcommand("verify", "run a property suite");
    verify->fallthrough();
    std::string suite_list = "suite id ('all'";
    for (const auto& id : halltab::verify_suite_names()) suite_list += ", " + id;
    suite_list += ")";
    verify->add_option("theorem", opt.theorem_id, suite_list)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        halltab::json report;
        report["command"] = "";
        report["error"] = {{"type", "usage"}, {"message", e.what()}};
        report["version"] = tool_version;
        print_report(report, opt.format);
        return 2;
    }

    opt.has_family = family_opt->count() > 0;
    opt.has_shape = shape_opt->count() > 0;
    opt.has_m = m_opt->count() > 0;
    opt.has_n = n_opt->count() > 0;
    opt.has_bound = bound_opt->count() > 0;
    opt.has_transversal = transversal_opt->count() > 0;

    std::string command;
    for (const CLI::App* sub = &app; !sub->get_subcommands().empty();) {
        sub = sub->get_subcommands().front();
        if (!command.empty()) command += " ";
        command += sub->get_name();
    }

    halltab::json report;
    report["command"] = command;
    report["version"] = tool_version;
    halltab::json inputs = halltab::json::object();
    halltab::json result;
    int code = 0;
    try {
        code = dispatch(command, opt, inputs, result);
        report["inputs"] = inputs;
        report["result"] = result;
    } catch (const halltab::oracle_limit_error& e) {
        report["error"] = {{"type", "oracle-limit"}, {"message", e.what()}};
        code = 3;
    } catch (const halltab::hypothesis_error& e) {
        report["error"] = {{"type", "hypothesis-violation"}, {"message", e.what()}};
        code = 2;
    } catch (const halltab::invalid_input& e) {
        report["error"] = {{"type", "invalid-input"}, {"message", e.what()}};
        code = 2;
    } catch (const std::exception& e) {
        report["error"] = {{"type", "internal"}, {"message", e.what()}};
        code = 2;
    }
    print_report(report, opt.format);
    return code;
}
