// Command-line verification runs for the Peterson-variety cohomology
// presentation: `peterson verify --n N` plus smaller inspection tools.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "peterson/parser.hpp"
#include "peterson/report.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace peterson;

constexpr const char* kSchema = "peterson-report/1";

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

OrderKind parse_order(const std::string& name) {
    if (name == "grevlex") return OrderKind::grevlex;
    if (name == "lex") return OrderKind::lex;
    throw DomainError("unknown monomial order: " + name);
}

int cmd_verify(int n, int degree_bound, bool json, const std::string& order,
               std::size_t branch_cap, unsigned threads) {
    VerificationOptions options;
    options.n = n;
    options.degree_bound = degree_bound;
    options.order = parse_order(order);
    options.branch_cap = branch_cap;
    options.threads = threads;
    VerificationReport report = run_verification(options);
    std::cout << (json ? verification_report_json(report) : verification_report_text(report));
    return report_exit_code(report);
}

int cmd_fixed_points(int n, bool json) {
    auto points = enumerate_fixed_points(n);
    if (json) {
        Json j;
        j["schema"] = kSchema;
        j["command"] = "fixed-points";
        j["n"] = n;
        Json rows = Json::array();
        for (const auto& p : points)
            rows.push_back({{"subset", p.subset()}, {"one_line", p.w().one_line()}});
        j["points"] = rows;
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& p : points) {
            std::cout << "J={";
            for (std::size_t i = 0; i < p.subset().size(); ++i)
                std::cout << (i ? "," : "") << p.subset()[i];
            std::cout << "}  w=" << p.w().str() << "\n";
        }
    }
    return 0;
}

int cmd_hilbert(int n, bool ordinary, int degree_bound, bool json, const std::string& order) {
    if (degree_bound == 0) degree_bound = 4 * n;
    if (degree_bound < 0 || degree_bound % 2 != 0)
        throw DomainError("degree bound must be even and nonnegative");
    auto variant = ordinary ? PresentationVariant::ordinary : PresentationVariant::equivariant;
    auto series_variant = ordinary ? SeriesVariant::ordinary : SeriesVariant::equivariant;
    PresentationRing pres = build_presentation(n, variant, parse_order(order));
    HilbertSeries computed = series_of_quotient(buchberger(pres.ideal), degree_bound);
    HilbertSeries expected = expected_peterson_series(n, series_variant, degree_bound);
    bool equal = computed == expected;
    if (json) {
        Json j;
        j["schema"] = kSchema;
        j["command"] = "hilbert";
        j["n"] = n;
        j["variant"] = ordinary ? "ordinary" : "equivariant";
        j["truncation"] = degree_bound;
        j["coefficients"] = computed.coefficients();
        j["expected"] = expected.coefficients();
        j["equal"] = equal;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << (ordinary ? "ordinary" : "equivariant") << " series for n = " << n
                  << ", truncation " << degree_bound << ":\n ";
        for (std::uint64_t c : computed.coefficients()) std::cout << " " << c;
        std::cout << "\n  matches closed form: " << (equal ? "yes" : "NO") << "\n";
    }
    return equal ? 0 : 1;
}

int cmd_restrict(int n, const std::string& expr, bool json) {
    VariableSetPtr vars = equivariant_variables(n);
    Polynomial cls = parse_polynomial(expr, vars, equivariant_order(n));
    RestrictionVector rv = restrict_class(cls, enumerate_fixed_points(n));
    if (json) {
        Json j;
        j["schema"] = kSchema;
        j["command"] = "restrict";
        j["n"] = n;
        j["class"] = cls.str();
        Json rows = Json::array();
        for (std::size_t i = 0; i < rv.points.size(); ++i)
            rows.push_back({{"subset", rv.points[i].subset()},
                            {"one_line", rv.points[i].w().one_line()},
                            {"value", rv.values[i].str()}});
        j["values"] = rows;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "restrictions of " << cls.str() << " for n = " << n << ":\n";
        for (std::size_t i = 0; i < rv.points.size(); ++i)
            std::cout << "  w=" << rv.points[i].w().str() << "  ->  " << rv.values[i].str()
                      << "\n";
    }
    return 0;
}

int cmd_regseq(int n, const std::string& system_file, std::size_t branch_cap, unsigned threads,
               bool json) {
    SystemReport report;
    if (!system_file.empty()) {
        QuadraticSystem sys = system_from_json_text(read_file(system_file));
        report = cross_check(sys, branch_cap, threads);
    } else {
        report = peterson_only_origin(n, branch_cap, threads);
    }
    std::cout << (json ? system_report_json(report) : system_report_text(report));
    return report.only_origin && report.consistent ? 0 : 1;
}

int cmd_groebner(const std::string& ideal_file, const std::string& order, bool json) {
    Json spec;
    try {
        spec = Json::parse(read_file(ideal_file));
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
    }
    if (!spec.is_object() || !spec.contains("variables") || !spec.contains("generators"))
        throw DomainError("ideal file needs fields: variables, generators");
    std::vector<std::string> names = spec.at("variables").get<std::vector<std::string>>();
    VariableSetPtr vars = make_variables(names);
    OrderKind kind = parse_order(order);
    MonomialOrder mono_order = kind == OrderKind::grevlex ? MonomialOrder::grevlex(vars->size())
                                                          : MonomialOrder::lex(vars->size());
    std::vector<Polynomial> gens;
    for (const auto& g : spec.at("generators"))
        gens.push_back(parse_polynomial(g.get<std::string>(), vars, mono_order));
    GroebnerBasis gb = buchberger(IdealBasis(vars, mono_order, std::move(gens)));
    if (json) {
        Json j;
        j["schema"] = kSchema;
        j["command"] = "groebner";
        j["order"] = order;
        j["variables"] = names;
        Json basis = Json::array();
        for (const Polynomial& p : gb.elements()) basis.push_back(p.str());
        j["basis"] = basis;
        std::cout << j.dump(2) << "\n";
    } else {
        for (const Polynomial& p : gb.elements()) std::cout << p.str() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of the Peterson-variety cohomology presentation"};
    app.require_subcommand(1);

    int n = 0, degree_bound = 0;
    bool json = false, ordinary = false, equivariant = false;
    std::string order = "grevlex", expr, system_file, ideal_file;
    std::size_t branch_cap = 20;
    unsigned threads = 0;

    auto* verify = app.add_subcommand("verify", "run the full verification pipeline");
    verify->add_option("--n", n, "flag count n (>= 2)")->required();
    verify->add_option("--degree-bound", degree_bound, "even degree bound (default 4n)");
    verify->add_flag("--json", json, "emit machine-readable JSON");
    verify->add_option("--order", order, "monomial order: grevlex or lex")
        ->default_val("grevlex");
    verify->add_option("--branch-cap", branch_cap, "max q for branch enumeration")
        ->default_val(20);
    verify->add_option("--threads", threads, "worker threads (0 = all cores)")->default_val(0);

    auto* fixed = app.add_subcommand("fixed-points", "list the circle-fixed points");
    fixed->add_option("--n", n, "flag count n (>= 2)")->required();
    fixed->add_flag("--json", json, "emit machine-readable JSON");

    auto* hilbert = app.add_subcommand("hilbert", "graded dimensions of the presented ring");
    hilbert->add_option("--n", n, "flag count n (>= 2)")->required();
    hilbert->add_flag("--ordinary", ordinary, "ordinary cohomology ring");
    hilbert->add_flag("--equivariant", equivariant, "equivariant ring (default)");
    hilbert->add_option("--degree-bound", degree_bound, "even degree bound (default 4n)");
    hilbert->add_option("--order", order, "monomial order: grevlex or lex")
        ->default_val("grevlex");
    hilbert->add_flag("--json", json, "emit machine-readable JSON");

    auto* restrict_cmd = app.add_subcommand("restrict", "fixed-point restrictions of a class");
    restrict_cmd->add_option("--n", n, "flag count n (>= 2)")->required();
    restrict_cmd->add_option("--class", expr, "polynomial in t, xi_1..xi_{n-1}")->required();
    restrict_cmd->add_flag("--json", json, "emit machine-readable JSON");

    auto* regseq = app.add_subcommand("regseq", "only-origin cross-check of a quadratic system");
    auto* opt_n = regseq->add_option("--n", n, "use the Peterson system for this n");
    auto* opt_file = regseq->add_option("--system", system_file, "JSON file with q, a, b");
    opt_n->excludes(opt_file);
    regseq->add_option("--branch-cap", branch_cap, "max q for branch enumeration")
        ->default_val(20);
    regseq->add_option("--threads", threads, "worker threads (0 = all cores)")->default_val(0);
    regseq->add_flag("--json", json, "emit machine-readable JSON");

    auto* groebner_cmd = app.add_subcommand("groebner", "reduced basis of an ideal from a file");
    groebner_cmd->add_option("--ideal", ideal_file, "JSON file with variables, generators")
        ->required();
    groebner_cmd->add_option("--order", order, "monomial order: grevlex or lex")
        ->default_val("grevlex");
    groebner_cmd->add_flag("--json", json, "emit machine-readable JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (verify->parsed()) return cmd_verify(n, degree_bound, json, order, branch_cap, threads);
        if (fixed->parsed()) return cmd_fixed_points(n, json);
        if (hilbert->parsed()) {
            if (ordinary && equivariant)
                throw DomainError("choose one of --ordinary or --equivariant");
            return cmd_hilbert(n, ordinary, degree_bound, json, order);
        }
        if (restrict_cmd->parsed()) return cmd_restrict(n, expr, json);
        if (regseq->parsed()) {
            if (system_file.empty() && opt_n->count() == 0)
                throw DomainError("regseq needs --n or --system");
            return cmd_regseq(n, system_file, branch_cap, threads, json);
        }
        if (groebner_cmd->parsed()) return cmd_groebner(ideal_file, order, json);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InternalError& e) {
        std::cerr << "internal soundness failure: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
