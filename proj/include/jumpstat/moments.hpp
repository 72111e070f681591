#pragma once

#include "jumpstat/errors.hpp"
#include "jumpstat/genfunc.hpp"
#include "jumpstat/guess.hpp"
#include "jumpstat/poly2.hpp"
#include "jumpstat/rational.hpp"
#include "jumpstat/rational_function.hpp"
#include "jumpstat/series.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace jumpstat {

inline constexpr unsigned kDefaultMomentOrder = 10;
inline constexpr unsigned kDefaultMomentNmax = 60;

enum class Statistic { jumps, jump_distance };

inline std::string to_string(Statistic s) {
    return s == Statistic::jumps ? "jumps" : "jumpdist";
}

inline Statistic parse_statistic(const std::string& text) {
    if (text == "jumps" || text == "J") return Statistic::jumps;
    if (text == "jumpdist" || text == "JD") return Statistic::jump_distance;
    throw ContractViolation("unknown statistic '" + text + "'; expected jumps or jumpdist");
}

/// Bivariate enumerator sum_T x^V q^stat(T): H for jumps, K for jump distance.
inline Series statistic_series(Statistic stat, unsigned order) {
    return stat == Statistic::jumps ? solve_H(order) : solve_K(order);
}

/*
 * (q d/dq)^r applied coefficient-wise, then q := 1. The coefficient of x^n in
 * the result is sum_T stat(T)^r over trees with n internal vertices.
 */
inline Series q_log_derivative_power(const Series& s, unsigned r) {
    if (r == 0) throw ContractViolation("q_log_derivative_power needs r >= 1");
    return s.map([r](const Poly2& c) {
        if (c.depends_on(Marker::t)) {
            throw ContractViolation("q_log_derivative_power input still contains t");
        }
        Poly2 p = c;
        for (unsigned i = 0; i < r; ++i) p = q_theta(p);
        return substitute(p, Marker::q, 1);
    });
}

/// Sign and square of an odd scaled moment mu_r / mu_2^(r/2), kept rational.
struct SignedSquare {
    int sign = 0;
    Rational square;

    friend bool operator==(const SignedSquare&, const SignedSquare&) = default;
};

struct MomentRow {
    unsigned n = 0;
    Integer count;                 // b_n
    std::vector<Rational> raw;     // raw[r] = E[X^r], r = 0..R
    std::vector<Rational> central; // central[r] = E[(X - mean)^r], r = 0..R

    const Rational& mean() const { return raw.at(1); }
    const Rational& variance() const { return central.at(2); }

    /// Scaled moments exist only when the statistic is not constant.
    bool scaled_defined() const { return variance() > 0; }

    /// mu_r / mu_2^(r/2) for even r.
    std::optional<Rational> scaled_even(unsigned r) const {
        if (r % 2 != 0 || r < 2) throw ContractViolation("scaled_even needs an even order >= 2");
        if (!scaled_defined()) return std::nullopt;
        return central.at(r) / pow(variance(), r / 2);
    }

    /// (sign, mu_r^2 / mu_2^r) for odd r.
    std::optional<SignedSquare> scaled_odd(unsigned r) const {
        if (r % 2 == 0 || r < 3) throw ContractViolation("scaled_odd needs an odd order >= 3");
        if (!scaled_defined()) return std::nullopt;
        const Rational& mu = central.at(r);
        return SignedSquare{sgn(mu), mu * mu / pow(variance(), r)};
    }
};

struct MomentTable {
    Statistic stat = Statistic::jumps;
    unsigned max_order = 0;  // R
    std::vector<MomentRow> rows;  // n = 0..n_max

    const MomentRow& row(unsigned n) const { return rows.at(n); }
    unsigned n_max() const { return static_cast<unsigned>(rows.size() - 1); }
};

/// Exact raw, central and scaled moments for n = 0..n_max, orders up to R.
inline MomentTable moment_table_from_series(Statistic stat, const Series& s, unsigned max_order) {
    if (max_order < 2) throw ContractViolation("moment tables need R >= 2");
    std::vector<Series> power_sums;
    for (unsigned r = 1; r <= max_order; ++r) power_sums.push_back(q_log_derivative_power(s, r));
    const Series counts = substitute(s, Marker::q, 1);

    MomentTable table{stat, max_order, {}};
    for (unsigned n = 0; n <= s.order(); ++n) {
        MomentRow row;
        row.n = n;
        const Rational b = counts[n].constant_term();
        if (!is_integer(b) || b <= 0) throw ContractViolation("tree count is not a positive integer");
        row.count = b.get_num();
        row.raw.push_back(Rational(1));
        for (unsigned r = 1; r <= max_order; ++r) {
            row.raw.push_back(power_sums[r - 1][n].constant_term() / b);
        }
        const Rational minus_mean = -row.raw[1];
        for (unsigned r = 0; r <= max_order; ++r) {
            Rational mu;
            for (unsigned k = 0; k <= r; ++k) {
                mu += Rational(binomial(r, k)) * pow(minus_mean, r - k) * row.raw[k];
            }
            row.central.push_back(mu);
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

inline MomentTable moment_table(Statistic stat, unsigned max_order, unsigned n_max) {
    if (n_max < 2) throw ContractViolation("moment tables need n_max >= 2");
    return moment_table_from_series(stat, statistic_series(stat, n_max), max_order);
}

// ---------------------------------------------------------------------------
// Which moment a sequence is about.

struct MomentSpec {
    enum class Kind { raw, central, scaled };
    Kind kind = Kind::scaled;
    unsigned order = 4;
};

/// "mean", "variance", "raw:R", "central:R", "scaled:R", "skewness", "kurtosis".
inline MomentSpec parse_moment_spec(const std::string& text) {
    if (text == "mean") return {MomentSpec::Kind::raw, 1};
    if (text == "variance") return {MomentSpec::Kind::central, 2};
    if (text == "skewness") return {MomentSpec::Kind::scaled, 3};
    if (text == "kurtosis") return {MomentSpec::Kind::scaled, 4};
    const auto colon = text.find(':');
    if (colon != std::string::npos) {
        const std::string kind = text.substr(0, colon);
        unsigned order = 0;
        try {
            order = static_cast<unsigned>(std::stoul(text.substr(colon + 1)));
        } catch (const std::exception&) {
            throw ContractViolation("bad moment order in '" + text + "'");
        }
        if (order == 0) throw ContractViolation("moment order must be positive");
        if (kind == "raw") return {MomentSpec::Kind::raw, order};
        if (kind == "central") return {MomentSpec::Kind::central, order};
        if (kind == "scaled") {
            if (order < 2) throw ContractViolation("scaled moments start at order 2");
            return {MomentSpec::Kind::scaled, order};
        }
    }
    throw ContractViolation("unknown moment '" + text +
                            "'; expected mean, variance, skewness, kurtosis, raw:R, central:R "
                            "or scaled:R");
}

inline std::string to_string(const MomentSpec& spec) {
    switch (spec.kind) {
        case MomentSpec::Kind::raw:
            return "raw:" + std::to_string(spec.order);
        case MomentSpec::Kind::central:
            return "central:" + std::to_string(spec.order);
        case MomentSpec::Kind::scaled:
            break;
    }
    return "scaled:" + std::to_string(spec.order);
}

/// The exact value a sequence tracks at one row. Odd scaled moments are
/// represented by their square. nullopt where undefined.
inline std::optional<Rational> moment_value(const MomentRow& row, const MomentSpec& spec) {
    switch (spec.kind) {
        case MomentSpec::Kind::raw:
            return row.raw.at(spec.order);
        case MomentSpec::Kind::central:
            return row.central.at(spec.order);
        case MomentSpec::Kind::scaled:
            break;
    }
    if (spec.order % 2 == 0) return row.scaled_even(spec.order);
    const auto odd = row.scaled_odd(spec.order);
    if (!odd) return std::nullopt;
    return odd->square;
}

/// Data points (n, value) for n in [n_min, n_max], skipping undefined rows.
inline std::vector<DataPoint> moment_sequence(const MomentTable& table, const MomentSpec& spec,
                                              unsigned n_min, unsigned n_max) {
    if (spec.order > table.max_order) {
        throw ContractViolation("moment order " + std::to_string(spec.order) +
                                " exceeds table order " + std::to_string(table.max_order));
    }
    std::vector<DataPoint> points;
    for (unsigned n = n_min; n <= std::min(n_max, table.n_max()); ++n) {
        if (auto v = moment_value(table.row(n), spec)) {
            points.push_back(DataPoint{static_cast<long>(n), std::move(*v)});
        }
    }
    return points;
}

// ---------------------------------------------------------------------------
// Reference closed forms.

struct ReferenceFormula {
    std::string theorem;
    Statistic stat;
    MomentSpec moment;
    RationalFunctionN formula;  // for odd scaled moments, the square
    int odd_sign = 0;           // required sign of an odd scaled moment
};

/// The nine known closed forms, coefficients highest power first. The JD
/// skewness enters through its square:
/// (3 sqrt(2)/2)^2 (n^3-n^2-8n+12) n / (2n^4+15n^3+23n^2-24n-16).
/// Its radical form is written as a positive root, but JD = V - D has a long
/// left tail and the exact third central moment is negative for every n >= 3
/// (n = 3: values {2,2,1,1,0}, mu_3 = -18/125), so the sign recorded is -1.
inline const std::vector<ReferenceFormula>& reference_formulas() {
    static const std::vector<ReferenceFormula> table = [] {
        using K = MomentSpec::Kind;
        const auto rf = [](std::initializer_list<long> num, std::initializer_list<long> den) {
            return RationalFunctionN(PolyN::from_high(num), PolyN::from_high(den));
        };
        return std::vector<ReferenceFormula>{
            {"7.1", Statistic::jumps, {K::raw, 1}, rf({1, -1}, {2})},
            {"7.2", Statistic::jumps, {K::central, 2}, rf({1, 0, -1}, {8, -4})},
            {"7.3", Statistic::jumps, {K::scaled, 4}, rf({6, -11, -2, 3}, {2, -3, -2, 3})},
            {"7.4", Statistic::jumps, {K::scaled, 6},
             rf({60, -300, 391, -20, -82, -16, 15}, {4, -16, 7, 32, -26, -16, 15})},
            {"7.5", Statistic::jumps, {K::scaled, 8},
             rf({840, -7980, 27006, -38933, 23070, -6937, 3178, -1167, -142, 105},
                {8, -60, 118, 75, -402, 135, 418, -255, -142, 105})},
            {"8.1", Statistic::jump_distance, {K::raw, 1}, rf({1, -1, 0}, {1, 2})},
            {"8.2", Statistic::jump_distance, {K::central, 2},
             rf({4, -2, -2, 0}, {1, 7, 16, 12})},
            {"8.3", Statistic::jump_distance, {K::scaled, 3},
             rf({9, -9, -72, 108, 0}, {4, 30, 46, -48, -32}), -1},
            {"8.4", Statistic::jump_distance, {K::scaled, 4},
             rf({25, 58, -45, -34, -172, -48}, {4, 34, 60, -58, -40, 0})},
        };
    }();
    return table;
}

inline const ReferenceFormula& reference_formula(const std::string& theorem) {
    for (const auto& f : reference_formulas()) {
        if (f.theorem == theorem) return f;
    }
    throw ContractViolation("no reference formula for theorem " + theorem);
}

struct ClosedFormCheck {
    std::string theorem;
    bool pass = true;
    unsigned n_min = 0;
    unsigned n_max = 0;
    std::optional<unsigned> first_mismatch;
};

/// Compares one formula with the table for every n in [n_min, table.n_max()].
/// Rows where the moment is undefined count as a mismatch.
inline ClosedFormCheck check_closed_form(const MomentTable& table, const ReferenceFormula& ref,
                                         unsigned n_min = 2) {
    ClosedFormCheck check{ref.theorem, true, n_min, table.n_max(), std::nullopt};
    for (unsigned n = n_min; n <= table.n_max(); ++n) {
        const MomentRow& row = table.row(n);
        bool ok = false;
        const auto expected = ref.formula(Rational(n));
        if (ref.moment.kind == MomentSpec::Kind::scaled && ref.moment.order % 2 == 1) {
            const auto odd = row.scaled_odd(ref.moment.order);
            // A zero skewness has no sign to compare.
            ok = odd && expected && odd->square == *expected &&
                 (odd->square == 0 || odd->sign == ref.odd_sign);
        } else {
            const auto actual = moment_value(row, ref.moment);
            ok = actual && expected && *actual == *expected;
        }
        if (!ok) {
            check.pass = false;
            check.first_mismatch = n;
            break;
        }
    }
    return check;
}

/// Every reference formula for the table's statistic whose order the table covers.
inline std::vector<ClosedFormCheck> check_closed_forms(const MomentTable& table, unsigned n_min = 2) {
    std::vector<ClosedFormCheck> checks;
    for (const auto& ref : reference_formulas()) {
        if (ref.stat != table.stat || ref.moment.order > table.max_order) continue;
        checks.push_back(check_closed_form(table, ref, n_min));
    }
    return checks;
}

}  // namespace jumpstat
