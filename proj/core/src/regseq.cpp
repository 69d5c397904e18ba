#include "peterson/regseq.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <string>

#include "peterson/matrix.hpp"
#include "peterson/parallel.hpp"

namespace peterson {

QuadraticSystem::QuadraticSystem(std::size_t q_, std::vector<Rational> a_,
                                 std::vector<Rational> b_)
    : q(q_), a(std::move(a_)), b(std::move(b_)) {
    if (q < 2) throw DomainError("quadratic system needs q >= 2 variables");
    if (a.size() != q - 1 || b.size() != q - 1)
        throw DomainError("quadratic system needs q-1 coefficients a and b");
}

std::vector<Rational> QuadraticSystem::c() const {
    std::vector<Rational> out;
    out.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] * b[i]);
    return out;
}

QuadraticSystem peterson_system(int n) {
    if (n < 3) throw DomainError("peterson_system requires n >= 3 (q = n-1 >= 2)");
    std::size_t q = static_cast<std::size_t>(n - 1);
    std::vector<Rational> half(q - 1, Rational(1, 2));
    return QuadraticSystem(q, half, half);
}

IdealBasis system_ideal(const QuadraticSystem& sys) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= sys.q; ++i) names.push_back("z_" + std::to_string(i));
    VariableSetPtr vars = make_variables(std::move(names));
    MonomialOrder order = MonomialOrder::grevlex(sys.q);

    auto z = [&](std::size_t i) { return Polynomial::variable(vars, order, i - 1); };
    std::vector<Polynomial> gens;
    for (std::size_t i = 1; i <= sys.q; ++i) {
        Polynomial rhs = Polynomial::zero(vars, order);
        if (i >= 2) rhs = rhs + z(i - 1).scaled(sys.a[i - 2]);
        if (i <= sys.q - 1) rhs = rhs + z(i + 1).scaled(sys.b[i - 1]);
        gens.push_back(z(i) * z(i) - z(i) * rhs);
    }
    return IdealBasis(vars, order, std::move(gens));
}

namespace {

// Linear system of one branch: for each variable either z_i = 0 or
// z_i - a_{i-1} z_{i-1} - b_i z_{i+1} = 0, encoded by the mask bits.
RationalMatrix branch_matrix(const QuadraticSystem& sys, std::uint64_t mask) {
    RationalMatrix m(sys.q, sys.q);
    for (std::size_t i = 1; i <= sys.q; ++i) {
        std::size_t row = i - 1;
        m.at(row, i - 1) = Rational(1);
        if (mask & (std::uint64_t{1} << (i - 1))) {
            if (i >= 2) m.at(row, i - 2) = -sys.a[i - 2];
            if (i <= sys.q - 1) m.at(row, i) = -sys.b[i - 1];
        }
    }
    return m;
}

}  // namespace

BranchResult branch_solve(const QuadraticSystem& sys, std::size_t cap, unsigned threads) {
    if (sys.q > cap)
        throw DomainError("branch enumeration refused: q = " + std::to_string(sys.q) +
                          " exceeds the cap of " + std::to_string(cap));
    BranchResult result;
    result.branch_count = std::uint64_t{1} << sys.q;

    constexpr std::uint64_t kChunk = 4096;
    std::uint64_t first_failure = result.branch_count;  // sentinel: none
    std::mutex mu;
    for (std::uint64_t base = 0; base < result.branch_count; base += kChunk) {
        std::uint64_t chunk = std::min<std::uint64_t>(kChunk, result.branch_count - base);
        parallel_for_index(chunk, threads, [&](std::size_t off) {
            std::uint64_t mask = base + off;
            if (rank(branch_matrix(sys, mask)) < sys.q) {
                std::lock_guard<std::mutex> lock(mu);
                first_failure = std::min(first_failure, mask);
            }
        });
        if (first_failure != result.branch_count) break;  // earliest chunk wins
    }

    if (first_failure == result.branch_count) {
        result.only_origin = true;
        return result;
    }
    result.only_origin = false;
    BranchWitness witness;
    witness.mask = first_failure;
    witness.kernel = kernel_basis(branch_matrix(sys, first_failure));
    result.witness = std::move(witness);
    return result;
}

CriterionResult continued_fraction_criterion(const std::vector<Rational>& c) {
    for (std::size_t j = 1; j <= c.size(); ++j) {
        Rational value = Rational(1) - c[j - 1];
        if (value.is_zero()) return {false, std::make_pair(static_cast<int>(j), static_cast<int>(j))};
        for (std::size_t i = j - 1; i >= 1; --i) {
            value = Rational(1) - c[i - 1] / value;
            if (value.is_zero())
                return {false, std::make_pair(static_cast<int>(i), static_cast<int>(j))};
        }
    }
    return {true, std::nullopt};
}

bool RecurrenceResult::all_certified() const {
    if (kind == RecurrenceCertificate::none) return false;
    if (undefined_at) return false;
    return std::all_of(certified.begin(), certified.end(), [](bool b) { return b; });
}

RecurrenceResult recurrence_with_bounds(const RecurrenceParams& params) {
    RecurrenceResult result;
    const Rational quarter(1, 4);
    if (params.c >= Rational(0) && params.c <= quarter)
        result.kind = RecurrenceCertificate::lower_bound_sqrt;
    else if (params.c < Rational(0))
        result.kind = RecurrenceCertificate::at_least_one;
    else
        result.kind = RecurrenceCertificate::none;

    Rational one_minus_4c = Rational(1) - Rational(4) * params.c;
    result.values.push_back(Rational(1));
    for (std::size_t m = 1; m <= params.max_index; ++m) {
        const Rational& prev = result.values.back();
        if (prev.is_zero()) {
            result.undefined_at = m;
            break;
        }
        Rational x = Rational(1) - params.c / prev;
        result.values.push_back(x);
        switch (result.kind) {
            case RecurrenceCertificate::lower_bound_sqrt: {
                Rational s = Rational(2) * x - Rational(1);
                result.certified.push_back(s >= Rational(0) && s * s >= one_minus_4c);
                break;
            }
            case RecurrenceCertificate::at_least_one:
                result.certified.push_back(x >= Rational(1));
                break;
            case RecurrenceCertificate::none:
                break;
        }
    }
    return result;
}

SystemReport cross_check(const QuadraticSystem& sys, std::size_t branch_cap, unsigned threads) {
    SystemReport report;
    report.q = sys.q;
    report.a = sys.a;
    report.b = sys.b;
    report.c = sys.c();
    report.trivial = false;

    report.criterion = continued_fraction_criterion(report.c);
    report.branches = branch_solve(sys, branch_cap, threads);
    report.groebner_dimension_zero = is_dimension_zero(buchberger(system_ideal(sys)));

    if (report.branches.only_origin != report.groebner_dimension_zero)
        throw InternalError("branch decomposition and Groebner dimension test disagree");
    if (report.criterion.holds && !report.branches.only_origin)
        throw InternalError("criterion holds but a nonzero solution exists");

    report.only_origin = report.branches.only_origin;
    report.consistent = true;
    return report;
}

SystemReport peterson_only_origin(int n, std::size_t branch_cap, unsigned threads) {
    if (n < 2) throw DomainError("peterson_only_origin requires n >= 2");
    if (n >= 3) return cross_check(peterson_system(n), branch_cap, threads);

    // q = 1: the single equation z^2 = 0 forces z = 0; no branches needed.
    SystemReport report;
    report.q = 1;
    report.trivial = true;
    report.criterion = {true, std::nullopt};  // no pairs to test
    report.branches.only_origin = true;
    report.branches.branch_count = 0;

    VariableSetPtr vars = make_variables({"z_1"});
    MonomialOrder order = MonomialOrder::grevlex(1);
    Polynomial z = Polynomial::variable(vars, order, 0);
    report.groebner_dimension_zero =
        is_dimension_zero(buchberger(IdealBasis(vars, order, {z * z})));
    if (!report.groebner_dimension_zero)
        throw InternalError("dimension test failed on the one-variable system");
    report.only_origin = true;
    report.consistent = true;
    return report;
}

}  // namespace peterson
