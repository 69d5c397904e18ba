#pragma once

#include <string>

#include "peterson/hilbert.hpp"
#include "peterson/regseq.hpp"
#include "peterson/restriction.hpp"

namespace peterson {

struct VerificationOptions {
    int n = 0;
    int degree_bound = 0;  // 0 means the default 4n
    OrderKind order = OrderKind::grevlex;
    std::size_t branch_cap = 20;
    unsigned threads = 0;  // 0 means all cores
};

struct FixedPointCheck {
    std::vector<PetersonFixedPoint> points;
    std::uint64_t expected_count = 0;
    bool pass = false;
};

struct SeriesCheck {
    std::vector<std::uint64_t> computed;
    std::vector<std::uint64_t> expected;
    int truncation = 0;
    bool pass = false;
};

struct IdentityCheck {
    std::size_t ambient_variables = 0;
    std::vector<int> generator_degrees;
    bool pass = false;
};

/// Everything `verify` runs, in order: fixed points, relation restrictions,
/// both series comparisons, the regular-sequence series identity, the
/// three-engine only-origin report, and the injectivity ranks.
struct VerificationReport {
    VerificationOptions options;  // with defaults resolved
    FixedPointCheck fixed_points;
    RelationReport relations;
    SeriesCheck equivariant_series;
    SeriesCheck ordinary_series;
    std::uint64_t ordinary_total = 0;
    IdentityCheck regular_sequence;
    SystemReport quadratic_system;
    InjectivityReport injectivity;
    bool all_pass = false;
};

VerificationReport run_verification(const VerificationOptions& options);

/// Deterministic JSON under the "peterson-report/1" schema.
std::string verification_report_json(const VerificationReport& report);
std::string verification_report_text(const VerificationReport& report);

/// 0 when every check passed, 1 otherwise.
int report_exit_code(const VerificationReport& report);

/// Loads {"q": ..., "a": ["1/2", ...], "b": [...]} with rationals as "p/q"
/// strings.
QuadraticSystem system_from_json_text(const std::string& text);

std::string system_report_json(const SystemReport& report, bool wrap_schema = true);
std::string system_report_text(const SystemReport& report);

}  // namespace peterson
