#include "hodgeforge/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hodgeforge/certificate_json.hpp"
#include "hodgeforge/expression.hpp"

namespace hodgeforge::cli {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string label_name(SimpleLabel l) {
    if (l.p == l.q) return "Q(" + std::to_string(-l.p) + ")";
    return "H(" + std::to_string(l.p) + "," + std::to_string(l.q) + ")";
}

std::string plan_summary(const Plan& plan) {
    if (plan.entries.empty()) return "0";
    std::string s;
    for (const auto& e : plan.entries) {
        if (!s.empty()) s += " + ";
        s += label_name(e.label) + "^" + std::to_string(e.mult);
    }
    return s;
}

void print_report(const VerificationReport& r, std::ostream& out) {
    auto line = [&out](const std::string& name, bool ok) {
        out << name << ": " << (ok ? "pass" : "FAIL") << '\n';
    };
    line("admissible", r.admissible);
    line("layout", r.layout);
    line("idempotent", r.idempotent);
    for (const auto& e : r.equivariance) line("equivariant at " + e.element.to_string(), e.ok);
    line("hodge numbers match", r.hodge_numbers_match);
    line("hodge-riemann I", r.hodge_riemann_1);
    line("hodge-riemann II", r.hodge_riemann_2);
    line("endomorphism oracle", r.endomorphism_oracle);
    for (const auto& n : r.notes) out << "note: " << n << '\n';
    out << "overall: " << (r.pass ? "PASS" : "FAIL") << '\n';
}

RepObject classify_input(const std::optional<std::string>& input_path, const std::optional<std::string>& expr) {
    if (expr) return evaluate(*parse_expression(*expr));
    ordered_json j;
    try {
        j = ordered_json::parse(read_file(*input_path));
    } catch (const nlohmann::json::parse_error& e) {
        throw SchemaError(std::string("malformed JSON: ") + e.what());
    }
    const auto weight = j.find("weight");
    const auto labels = j.find("labels");
    if (!j.is_object() || weight == j.end() || labels == j.end() || !weight->is_number_integer())
        throw SchemaError("classify input must be {\"weight\": k, \"labels\": [{\"p\",\"q\",\"mult\"}]}");
    const RepObject obj = rep_object_from_json(*labels);
    for (const auto& [label, mult] : obj.entries())
        if (label.weight() != weight->get<int>())
            throw RepError("label (" + std::to_string(label.p) + "," + std::to_string(label.q) +
                           ") does not have weight " + std::to_string(weight->get<int>()));
    return obj;
}

}  // namespace

TorusElement parse_test_element(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) throw std::invalid_argument("test element must look like \"x/y\"");
    try {
        std::size_t used_x = 0, used_y = 0;
        const std::string xs = text.substr(0, slash), ys = text.substr(slash + 1);
        const long long x = std::stoll(xs, &used_x);
        const long long y = std::stoll(ys, &used_y);
        if (used_x != xs.size() || used_y != ys.size()) throw std::invalid_argument("trailing characters");
        if (y == 0) throw std::invalid_argument("y = 0 gives a real eigenvalue");
        return TorusElement(Rational(static_cast<std::int64_t>(x)), Rational(static_cast<std::int64_t>(y)));
    } catch (const std::logic_error& e) {
        throw std::invalid_argument("invalid test element '" + text + "': " + e.what());
    }
}

VerifyOptions options_from_environment() {
    VerifyOptions options;
    if (const char* env = std::getenv(kTestElementEnv); env && *env) {
        options.primary = parse_test_element(env);
        // Separates weight 1 at least; higher weights are checked per block.
        require_separating(options.primary, 1);
    }
    return options;
}

int cmd_construct(const std::string& input_path, Mode mode, const std::string& output_path, bool json,
                  std::ostream& out, std::ostream& err) {
    HodgeNumbers g;
    try {
        ordered_json j;
        try {
            j = ordered_json::parse(read_file(input_path));
        } catch (const nlohmann::json::parse_error& e) {
            throw SchemaError(std::string("malformed JSON: ") + e.what());
        }
        g = hodge_numbers_from_json(j);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
    Plan plan;
    try {
        plan = make_plan(g);
    } catch (const AdmissibilityError& e) {
        err << "error: inadmissible Hodge numbers: " << e.what() << '\n';
        return kInputError;
    }
    VerifyOptions options;
    try {
        options = options_from_environment();
    } catch (const std::exception& e) {
        err << "error: " << kTestElementEnv << ": " << e.what() << '\n';
        return kInputError;
    }
    Certificate cert;
    try {
        cert = build_certificate(plan, mode, options);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kMathFailure;
    }
    {
        std::ofstream f(output_path, std::ios::binary);
        if (!f) {
            err << "error: cannot write '" << output_path << "'\n";
            return kInputError;
        }
        f << dump_certificate(cert);
    }
    if (json) {
        ordered_json summary{{"N", cert.n_factors},
                             {"mode", to_string(mode)},
                             {"blocks", cert.blocks.size()},
                             {"plan", to_json(plan.formal())},
                             {"output", output_path}};
        out << summary.dump() << '\n';
    } else {
        out << "N = " << cert.n_factors << '\n';
        out << "plan: " << plan_summary(plan) << '\n';
        out << "mode: " << to_string(mode) << ", blocks: " << cert.blocks.size() << '\n';
        out << "wrote " << output_path << '\n';
    }
    return kOk;
}

int cmd_verify(const std::string& cert_path, bool json, std::ostream& out, std::ostream& err) {
    Certificate cert;
    try {
        cert = parse_certificate(read_file(cert_path));
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
    VerifyOptions options;
    try {
        options = options_from_environment();
    } catch (const std::exception& e) {
        err << "error: " << kTestElementEnv << ": " << e.what() << '\n';
        return kInputError;
    }
    VerificationReport report;
    try {
        report = verify_certificate(cert, options);
    } catch (const std::exception& e) {
        err << "error: verification aborted: " << e.what() << '\n';
        return kMathFailure;
    }
    if (json) {
        out << to_json(report).dump() << '\n';
    } else {
        print_report(report, out);
    }
    return report.pass ? kOk : kMathFailure;
}

int cmd_calc(const std::string& expr, bool json, std::ostream& out, std::ostream& err) {
    ExprPtr tree;
    RepObject obj;
    try {
        tree = parse_expression(expr);
        obj = evaluate(*tree);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
    const bool pure = is_pure(obj);
    const bool effective = is_effective(obj);
    std::optional<HodgeNumbers> hodge;
    std::optional<int> lvl;
    std::vector<std::string> notes;
    if (obj.is_zero()) {
        notes.emplace_back("zero object");
    } else if (!pure) {
        notes.emplace_back("not pure: Hodge numbers and level are undefined");
    } else if (!effective) {
        notes.emplace_back("not effective");
    } else {
        hodge = hodge_numbers(obj);
        lvl = level(obj);
    }
    if (json) {
        ordered_json j;
        j["expression"] = print(*tree);
        j["decomposition"] = to_json(obj);
        j["dimension"] = obj.dimension();
        j["pure"] = pure;
        j["effective"] = effective;
        j["hodge_numbers"] = hodge ? to_json(*hodge) : ordered_json(nullptr);
        j["level"] = lvl ? ordered_json(*lvl) : ordered_json(nullptr);
        j["notes"] = notes;
        out << j.dump() << '\n';
    } else {
        out << "expression: " << print(*tree) << '\n';
        out << "decomposition: " << to_string(obj) << '\n';
        out << "dimension: " << obj.dimension() << '\n';
        if (hodge) {
            out << "hodge numbers: weight " << hodge->weight << ' ' << to_string(*hodge) << '\n';
            out << "level: " << *lvl << '\n';
        }
        for (const auto& n : notes) out << "note: " << n << '\n';
    }
    return kOk;
}

int cmd_classify(const std::optional<std::string>& input_path, const std::optional<std::string>& expr, bool json,
                 std::ostream& out, std::ostream& err) {
    if (!input_path && !expr) {
        err << "error: classify needs --input or --expr\n";
        return kInputError;
    }
    try {
        const RepObject obj = classify_input(input_path, expr);
        const TwoDimensionalClass c = classify_two_dimensional(obj);
        const int lvl = level(obj);
        if (json) {
            ordered_json j{{"classification", c.tag()},
                           {"irreducible", c.kind == TwoDimensionalClass::Kind::IrreducibleH},
                           {"level_one_elliptic", c.level_one_elliptic},
                           {"level", lvl},
                           {"p", c.label.p},
                           {"q", c.label.q}};
            if (c.level_one_elliptic) j["twist"] = c.twist;
            out << j.dump() << '\n';
        } else {
            out << "classification: " << c.tag() << '\n';
            out << "level: " << lvl << '\n';
            if (c.level_one_elliptic) out << "H^1(E)(-" << c.twist << ")\n";
        }
        return kOk;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"hodgeforge: geometric Hodge structures with prescribed Hodge numbers inside H^k(E^N, Q)"};
    app.require_subcommand(1);
    app.footer(
        "Expression grammar for calc/classify: atoms V(n), H(p,q), T(m) = Q(-m), 1; "
        "'+' is direct sum, '*' is tensor product and binds tighter; "
        "sym(n, e), wedge(n, e), dual(e), twist(m, e).\n"
        "Environment: HODGEFORGE_TEST_ELEMENT=\"x/y\" replaces the default torus test element 1/2.");

    std::string input, output, mode_name = "block", cert, expr;
    bool json = false;

    auto* construct = app.add_subcommand("construct", "build and self-verify a certificate from {weight, g}");
    construct->add_option("--input", input, "JSON file {\"weight\": k, \"g\": [...]}")->required();
    construct->add_option("--mode", mode_name, "block (default) or packed")->check(CLI::IsMember({"block", "packed"}));
    construct->add_option("--output", output, "certificate path")->required();
    construct->add_flag("--json", json, "machine-readable summary");

    auto* verify = app.add_subcommand("verify", "re-check a certificate from its projectors");
    verify->add_option("--cert", cert, "certificate path")->required();
    verify->add_flag("--json", json, "print the report as JSON");

    auto* calc = app.add_subcommand("calc", "evaluate a tensor expression in the category");
    calc->add_option("--expr", expr, "expression, e.g. \"sym(2, V(1)) + T(1)\"")->required();
    calc->add_flag("--json", json, "print JSON");

    std::string classify_input_path, classify_expr;
    auto* classify = app.add_subcommand("classify", "classify a two-dimensional pure effective object");
    auto* classify_file = classify->add_option("--input", classify_input_path,
                                               "JSON file {\"weight\": k, \"labels\": [{\"p\",\"q\",\"mult\"}]}");
    auto* classify_e = classify->add_option("--expr", classify_expr, "expression instead of a file");
    classify_file->excludes(classify_e);
    classify->add_flag("--json", json, "print JSON");

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    if (*construct) return cmd_construct(input, parse_mode(mode_name), output, json, out, err);
    if (*verify) return cmd_verify(cert, json, out, err);
    if (*calc) return cmd_calc(expr, json, out, err);
    std::optional<std::string> file, ex;
    if (*classify_file) file = classify_input_path;
    if (*classify_e) ex = classify_expr;
    return cmd_classify(file, ex, json, out, err);
}

}  // namespace hodgeforge::cli
