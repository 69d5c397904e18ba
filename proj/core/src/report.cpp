#include "peterson/report.hpp"

#include <sstream>

#include <json.hpp>

#include "peterson/parallel.hpp"

namespace peterson {

using Json = nlohmann::ordered_json;

VerificationReport run_verification(const VerificationOptions& options) {
    if (options.n < 2) throw DomainError("verification requires n >= 2");
    int n = options.n;
    VerificationOptions resolved = options;
    if (resolved.degree_bound == 0) resolved.degree_bound = 4 * n;
    if (resolved.degree_bound < 4 || resolved.degree_bound % 2 != 0)
        throw DomainError("degree bound must be even and at least 4");
    resolved.threads = resolve_threads(resolved.threads);
    int degree_bound = resolved.degree_bound;

    VerificationReport report;
    report.options = resolved;

    // 1. fixed points
    report.fixed_points.points = enumerate_fixed_points(n);
    report.fixed_points.expected_count = std::uint64_t{1} << (n - 1);
    report.fixed_points.pass =
        report.fixed_points.points.size() == report.fixed_points.expected_count;

    // 2. relation restrictions
    PresentationRing equivariant =
        build_presentation(n, PresentationVariant::equivariant, resolved.order);
    report.relations = verify_relations(equivariant, report.fixed_points.points);

    // 3. equivariant series against (1+s^2)^{n-1}/(1-s^2)
    GroebnerBasis gb_equivariant = buchberger(equivariant.ideal);
    {
        HilbertSeries computed = series_of_quotient(gb_equivariant, degree_bound);
        HilbertSeries expected =
            expected_peterson_series(n, SeriesVariant::equivariant, degree_bound);
        report.equivariant_series = {computed.coefficients(), expected.coefficients(),
                                     degree_bound, computed == expected};
    }

    // 4. ordinary series against (1+s^2)^{n-1}; the ring vanishes above
    // degree 2(n-1), so always look at least that far
    PresentationRing ordinary =
        build_presentation(n, PresentationVariant::ordinary, resolved.order);
    int ordinary_bound = std::max(degree_bound, 2 * (n - 1));
    HilbertSeries ordinary_series =
        series_of_quotient(buchberger(ordinary.ideal), ordinary_bound);
    {
        HilbertSeries expected =
            expected_peterson_series(n, SeriesVariant::ordinary, ordinary_bound);
        report.ordinary_total = ordinary_series.total();
        bool equal = ordinary_series == expected;
        bool euler = report.ordinary_total == report.fixed_points.expected_count;
        report.ordinary_series = {ordinary_series.coefficients(), expected.coefficients(),
                                  ordinary_bound, equal && euler};
    }

    // 5. regular-sequence series identity for the n-1 quadratics plus t
    {
        std::vector<int> degrees(static_cast<std::size_t>(n - 1), 4);
        degrees.push_back(2);
        bool ok = regular_sequence_identity_check(static_cast<std::size_t>(n), degrees,
                                                  ordinary_series);
        report.regular_sequence = {static_cast<std::size_t>(n), std::move(degrees), ok};
    }

    // 6. only-origin by branch enumeration, criterion and Groebner
    report.quadratic_system = peterson_only_origin(n, resolved.branch_cap, resolved.threads);

    // 7. injectivity ranks
    report.injectivity = injectivity_check(equivariant, degree_bound, resolved.threads);

    report.all_pass = report.fixed_points.pass && report.relations.all_pass() &&
                      report.equivariant_series.pass && report.ordinary_series.pass &&
                      report.regular_sequence.pass && report.quadratic_system.only_origin &&
                      report.quadratic_system.consistent && report.injectivity.all_pass;
    return report;
}

int report_exit_code(const VerificationReport& report) { return report.all_pass ? 0 : 1; }

namespace {

Json point_json(const PetersonFixedPoint& p) {
    Json j;
    j["subset"] = p.subset();
    j["one_line"] = p.w().one_line();
    return j;
}

Json rationals_json(const std::vector<Rational>& values) {
    Json arr = Json::array();
    for (const Rational& v : values) arr.push_back(v.str());
    return arr;
}

const char* status(bool pass) { return pass ? "pass" : "fail"; }

Json system_report_body(const SystemReport& report) {
    Json j;
    j["q"] = report.q;
    j["a"] = rationals_json(report.a);
    j["b"] = rationals_json(report.b);
    j["c"] = rationals_json(report.c);
    j["trivial"] = report.trivial;
    Json crit;
    crit["holds"] = report.criterion.holds;
    if (report.criterion.failing_pair)
        crit["failing_pair"] = {report.criterion.failing_pair->first,
                                report.criterion.failing_pair->second};
    j["criterion"] = crit;
    Json branches;
    branches["count"] = report.branches.branch_count;
    branches["only_origin"] = report.branches.only_origin;
    if (report.branches.witness) {
        Json w;
        w["mask"] = report.branches.witness->mask;
        Json kernel = Json::array();
        for (const auto& vec : report.branches.witness->kernel)
            kernel.push_back(rationals_json(vec));
        w["kernel_basis"] = kernel;
        branches["witness"] = w;
    }
    j["branches"] = branches;
    j["groebner_dimension_zero"] = report.groebner_dimension_zero;
    j["only_origin"] = report.only_origin;
    j["consistent"] = report.consistent;
    return j;
}

Json checks_json(const VerificationReport& r) {
    Json checks = Json::array();

    {
        Json details;
        details["count"] = r.fixed_points.points.size();
        details["expected_count"] = r.fixed_points.expected_count;
        Json pts = Json::array();
        for (const PetersonFixedPoint& p : r.fixed_points.points) pts.push_back(point_json(p));
        details["points"] = pts;
        checks.push_back(
            {{"name", "fixed_points"}, {"status", status(r.fixed_points.pass)}, {"details", details}});
    }
    {
        Json details;
        details["generators_restrict_to_zero"] = r.relations.generators_restrict_to_zero;
        details["xi_n_class_restricts_to_zero"] = r.relations.xi_n_class_restricts_to_zero;
        details["factor_dichotomy"] = r.relations.factor_dichotomy_holds;
        Json failures = Json::array();
        for (const RelationFailure& f : r.relations.failures)
            failures.push_back({{"check", f.check},
                                {"k", f.k},
                                {"one_line", f.one_line},
                                {"detail", f.detail}});
        details["failures"] = failures;
        checks.push_back({{"name", "relations_restrict_to_zero"},
                          {"status", status(r.relations.all_pass())},
                          {"details", details}});
    }
    {
        Json details;
        details["equivariant_series"] = r.equivariant_series.computed;
        details["expected"] = r.equivariant_series.expected;
        details["truncation"] = r.equivariant_series.truncation;
        checks.push_back({{"name", "equivariant_series"},
                          {"status", status(r.equivariant_series.pass)},
                          {"details", details}});
    }
    {
        Json details;
        details["ordinary_series"] = r.ordinary_series.computed;
        details["expected"] = r.ordinary_series.expected;
        details["truncation"] = r.ordinary_series.truncation;
        details["total_dimension"] = r.ordinary_total;
        details["fixed_point_count"] = r.fixed_points.expected_count;
        checks.push_back({{"name", "ordinary_series"},
                          {"status", status(r.ordinary_series.pass)},
                          {"details", details}});
    }
    {
        Json details;
        details["ambient_variables"] = r.regular_sequence.ambient_variables;
        details["generator_degrees"] = r.regular_sequence.generator_degrees;
        checks.push_back({{"name", "regular_sequence_identity"},
                          {"status", status(r.regular_sequence.pass)},
                          {"details", details}});
    }
    {
        checks.push_back({{"name", "quadratic_system_only_origin"},
                          {"status", status(r.quadratic_system.only_origin &&
                                            r.quadratic_system.consistent)},
                          {"details", system_report_body(r.quadratic_system)}});
    }
    {
        Json details;
        Json per_degree = Json::array();
        for (const InjectivityDegree& d : r.injectivity.degrees)
            per_degree.push_back({{"degree", d.degree},
                                  {"standard_monomials", d.standard_monomials},
                                  {"rank", d.rank},
                                  {"pass", d.pass}});
        details["per_degree"] = per_degree;
        checks.push_back({{"name", "restriction_injectivity"},
                          {"status", status(r.injectivity.all_pass)},
                          {"details", details}});
    }
    return checks;
}

}  // namespace

std::string verification_report_json(const VerificationReport& report) {
    Json j;
    j["schema"] = "peterson-report/1";
    j["command"] = "verify";
    j["n"] = report.options.n;
    j["degree_bound"] = report.options.degree_bound;
    j["order"] = report.options.order == OrderKind::grevlex ? "grevlex" : "lex";
    j["branch_cap"] = report.options.branch_cap;
    j["threads"] = report.options.threads;
    j["checks"] = checks_json(report);
    j["all_pass"] = report.all_pass;
    return j.dump(2) + "\n";
}

std::string verification_report_text(const VerificationReport& report) {
    std::ostringstream os;
    os << "verification for n = " << report.options.n
       << " (degree bound " << report.options.degree_bound << ")\n";
    auto line = [&](const std::string& name, bool pass) {
        os << "  [" << (pass ? "pass" : "FAIL") << "] " << name << "\n";
    };
    line("fixed_points: " + std::to_string(report.fixed_points.points.size()) + " points",
         report.fixed_points.pass);
    line("relations_restrict_to_zero", report.relations.all_pass());
    line("equivariant_series", report.equivariant_series.pass);
    line("ordinary_series (total " + std::to_string(report.ordinary_total) + ")",
         report.ordinary_series.pass);
    line("regular_sequence_identity", report.regular_sequence.pass);
    line("quadratic_system_only_origin",
         report.quadratic_system.only_origin && report.quadratic_system.consistent);
    line("restriction_injectivity", report.injectivity.all_pass);
    os << (report.all_pass ? "all checks passed\n" : "SOME CHECKS FAILED\n");
    return os.str();
}

QuadraticSystem system_from_json_text(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
    }
    if (!j.is_object() || !j.contains("q") || !j.contains("a") || !j.contains("b"))
        throw ParseError("system JSON needs fields q, a, b", 0);
    std::size_t q = j.at("q").get<std::size_t>();
    auto parse_list = [](const Json& arr) {
        std::vector<Rational> out;
        for (const auto& v : arr) out.push_back(Rational::from_string(v.get<std::string>()));
        return out;
    };
    return QuadraticSystem(q, parse_list(j.at("a")), parse_list(j.at("b")));
}

std::string system_report_json(const SystemReport& report, bool wrap_schema) {
    Json body = system_report_body(report);
    if (!wrap_schema) return body.dump(2) + "\n";
    Json j;
    j["schema"] = "peterson-report/1";
    j["command"] = "regseq";
    for (auto& [key, value] : body.items()) j[key] = value;
    return j.dump(2) + "\n";
}

std::string system_report_text(const SystemReport& report) {
    std::ostringstream os;
    os << "quadratic system with q = " << report.q;
    if (report.trivial) os << " (trivial one-variable case)";
    os << "\n";
    os << "  criterion holds: " << (report.criterion.holds ? "yes" : "no");
    if (report.criterion.failing_pair)
        os << " (fails at pair " << report.criterion.failing_pair->first << ","
           << report.criterion.failing_pair->second << ")";
    os << "\n";
    os << "  branches only-origin: " << (report.branches.only_origin ? "yes" : "no") << " ("
       << report.branches.branch_count << " branches)\n";
    if (report.branches.witness) {
        os << "  witness branch mask " << report.branches.witness->mask << ", kernel basis:\n";
        for (const auto& vec : report.branches.witness->kernel) {
            os << "    (";
            for (std::size_t i = 0; i < vec.size(); ++i)
                os << (i ? ", " : "") << vec[i].str();
            os << ")\n";
        }
    }
    os << "  Groebner dimension zero: " << (report.groebner_dimension_zero ? "yes" : "no")
       << "\n";
    os << "  only origin: " << (report.only_origin ? "yes" : "no") << "\n";
    return os.str();
}

}  // namespace peterson
