#pragma once

#include "jumpstat/errors.hpp"
#include "jumpstat/linalg.hpp"
#include "jumpstat/rational.hpp"
#include "jumpstat/rational_function.hpp"

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace jumpstat {

inline constexpr unsigned kDefaultHoldout = 5;

struct DataPoint {
    long n = 0;
    Rational value;
};

enum class FitStatus { fitted, no_fit, ambiguous };

struct FitResult {
    FitStatus status = FitStatus::no_fit;
    std::optional<RationalFunctionN> formula;
    std::size_t nullspace_dimension = 0;
};

/*
 * Finds p, q with deg p <= deg_num, deg q <= deg_den and
 *
 *   p(n_i) - a_i q(n_i) = 0   for every point (n_i, a_i),
 *
 * as the nullspace of an integer matrix (each row scaled by the denominator
 * of a_i). A one-dimensional nullspace gives the unique candidate, which is
 * then reduced and checked against every point. A larger nullspace means the
 * degrees exceed what the data pins down.
 */
inline FitResult fit_rational(std::span<const DataPoint> points, unsigned deg_num,
                              unsigned deg_den) {
    const std::size_t unknowns = deg_num + deg_den + 2;
    if (points.size() < unknowns) {
        throw ContractViolation("fit_rational needs at least " + std::to_string(unknowns) +
                                " points for degrees (" + std::to_string(deg_num) + "," +
                                std::to_string(deg_den) + "), got " +
                                std::to_string(points.size()));
    }
    std::set<long> seen;
    for (const auto& p : points) {
        if (!seen.insert(p.n).second) {
            throw ContractViolation("duplicate sample point n=" + std::to_string(p.n));
        }
    }

    const auto row_for = [&](const DataPoint& p) {
        std::vector<Integer> row;
        row.reserve(unknowns);
        const Integer n(p.n);
        Integer power = 1;
        for (unsigned k = 0; k <= deg_num; ++k, power *= n) row.push_back(p.value.get_den() * power);
        power = 1;
        for (unsigned k = 0; k <= deg_den; ++k, power *= n) row.push_back(-p.value.get_num() * power);
        return row;
    };
    const auto rows_for = [&](std::size_t rows) {
        IntegerMatrix m;
        m.reserve(rows);
        for (std::size_t i = 0; i < rows; ++i) m.push_back(row_for(points[i]));
        return m;
    };

    // A leading block of unknowns + 1 equations usually pins the solution
    // down already. Its nullspace contains the full one, so an empty or
    // one-dimensional answer carries over (the candidate is checked against
    // every point below); only a wider one needs the remaining rows.
    FitResult result;
    IntegerMatrix leading = rows_for(std::min(points.size(), unknowns + 1));
    if (nullity_mod_prime(leading, unknowns) == 0) return result;
    auto basis = integer_nullspace(std::move(leading), unknowns);
    if (basis.size() > 1 && points.size() > unknowns + 1) {
        basis = integer_nullspace(rows_for(points.size()), unknowns);
    }

    result.nullspace_dimension = basis.size();
    if (basis.empty()) return result;
    if (basis.size() > 1) {
        result.status = FitStatus::ambiguous;
        return result;
    }

    const auto& v = basis.front();
    PolyN numerator(std::vector<Integer>(v.begin(), v.begin() + deg_num + 1));
    PolyN denominator(std::vector<Integer>(v.begin() + deg_num + 1, v.end()));
    if (denominator.is_zero()) return result;
    RationalFunctionN candidate(numerator, denominator);
    for (const auto& p : points) {
        const auto value = candidate(Rational(p.n));
        if (!value || *value != p.value) return result;
    }
    result.status = FitStatus::fitted;
    result.formula = std::move(candidate);
    return result;
}

struct GuessResult {
    std::optional<RationalFunctionN> formula;
    unsigned deg_num = 0;  // degree pair of the accepted attempt
    unsigned deg_den = 0;
    unsigned attempts = 0;
    unsigned max_total_degree = 0;
    std::size_t fit_points = 0;
    std::size_t holdout_points = 0;
};

/*
 * Tries degree pairs (d - k, k) for total degree d = 0, 1, ... and k = 0..d,
 * fitting on all points except the last `holdout`, and accepts the first
 * candidate that also reproduces every held-out point exactly.
 */
inline GuessResult guess_rational(std::span<const DataPoint> points, unsigned max_total_degree,
                                  unsigned holdout = kDefaultHoldout) {
    if (holdout == 0) throw ContractViolation("guess_rational requires at least one holdout point");
    if (points.size() < static_cast<std::size_t>(max_total_degree) + 2 + holdout) {
        throw ContractViolation("guess_rational needs " + std::to_string(max_total_degree + 2 + holdout) +
                                " points for total degree " + std::to_string(max_total_degree) +
                                " with " + std::to_string(holdout) + " held out, got " +
                                std::to_string(points.size()));
    }
    const auto fit = points.first(points.size() - holdout);
    const auto held = points.last(holdout);

    GuessResult result;
    result.max_total_degree = max_total_degree;
    result.fit_points = fit.size();
    result.holdout_points = held.size();
    for (unsigned total = 0; total <= max_total_degree; ++total) {
        for (unsigned den = 0; den <= total; ++den) {
            ++result.attempts;
            FitResult attempt = fit_rational(fit, total - den, den);
            if (attempt.status != FitStatus::fitted) continue;
            bool survives = true;
            for (const auto& p : held) {
                const auto value = (*attempt.formula)(Rational(p.n));
                if (!value || *value != p.value) {
                    survives = false;
                    break;
                }
            }
            if (!survives) continue;
            result.formula = std::move(attempt.formula);
            result.deg_num = total - den;
            result.deg_den = den;
            return result;
        }
    }
    return result;
}

}  // namespace jumpstat
