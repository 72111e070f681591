#pragma once

#include "jumpstat/errors.hpp"
#include "jumpstat/oracle.hpp"
#include "jumpstat/poly2.hpp"
#include "jumpstat/series.hpp"
#include "jumpstat/tree.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace jumpstat {

inline constexpr unsigned kDefaultVerifyOrder = 40;
inline constexpr unsigned kDefaultOracleCap = 12;

/// Outcome of checking one identity coefficient by coefficient.
struct Verdict {
    struct Failure {
        unsigned n = 0;
        Poly2 residual;  // the nonzero coefficient of x^n
    };

    std::string theorem;
    unsigned order = 0;
    bool pass = true;
    std::optional<Failure> first_failure;
};

inline Verdict verdict_from_residual(std::string theorem, const Series& residual) {
    Verdict v{std::move(theorem), residual.order(), true, std::nullopt};
    for (unsigned n = 0; n <= residual.order(); ++n) {
        if (!residual[n].is_zero()) {
            v.pass = false;
            v.first_failure = Verdict::Failure{n, residual[n]};
            break;
        }
    }
    return v;
}

/// Merges verdicts for one theorem: passes only if all parts pass, and
/// reports the earliest failing coefficient.
inline Verdict combine(std::string theorem, unsigned order, const std::vector<Verdict>& parts) {
    Verdict v{std::move(theorem), order, true, std::nullopt};
    for (const auto& part : parts) {
        if (part.pass) continue;
        v.pass = false;
        if (part.first_failure &&
            (!v.first_failure || part.first_failure->n < v.first_failure->n)) {
            v.first_failure = part.first_failure;
        }
    }
    return v;
}

/*
 * A closed form with one square root, cleared of division:
 *
 *   (A(x) + a*sqrt(R(x))) * S  +  B(x) + b*sqrt(R(x))  =  0
 *
 * A, B, R are polynomials in x with Poly2 coefficients (listed low to high);
 * a and b are Poly2 constants in x. R must have constant term 1 so that the
 * +1 branch of the root is the one meant.
 */
struct RadicalIdentity {
    std::string theorem;
    std::vector<Poly2> multiplier;        // A
    Poly2 multiplier_radical;             // a
    std::vector<Poly2> remainder;         // B
    Poly2 remainder_radical;              // b
    std::vector<Poly2> radicand;          // R
};

inline Series identity_residual(const RadicalIdentity& id, const Series& s) {
    const unsigned order = s.order();
    const Series root = series_sqrt(Series::polynomial(id.radicand, order));
    const Series factor =
        Series::polynomial(id.multiplier, order) + id.multiplier_radical * root;
    return factor * s + Series::polynomial(id.remainder, order) + id.remainder_radical * root;
}

inline Verdict check_identity(const RadicalIdentity& id, const Series& s) {
    return verdict_from_residual(id.theorem, identity_residual(id, s));
}

namespace identities {

inline Poly2 t() { return Poly2::t(); }
inline Poly2 q() { return Poly2::q(); }
inline Poly2 c(long v) { return Poly2(v); }

/// q^2 x^2 - 2q x^2 - 2q x + x^2 - 2x + 1, the radicand shared by F and H
/// once t^2 is factored out of F's.
inline std::vector<Poly2> jump_radicand() {
    return {c(1), c(-2) * q() - c(2), q() * q() - c(2) * q() + c(1)};
}

/// f: 2x f - 1 + sqrt(1 - 4x) = 0.
inline RadicalIdentity catalan() {
    return {"0", {c(0), c(2)}, c(0), {c(-1)}, c(1), {c(1), c(-4)}};
}

/// F: 2(qtx + t^2 x - tx - t + 1) F + (-qtx + tx + t*sqrt(R) + t - 2) = 0.
inline RadicalIdentity trivariate() {
    const Poly2 tt = t() * t();
    return {"2",
            {c(2) - c(2) * t(), c(2) * (q() * t() + tt - t())},
            c(0),
            {t() - c(2), t() - q() * t()},
            t(),
            jump_radicand()};
}

/// H: 2qx H + (-qx + sqrt(R) + x - 1) = 0.
inline RadicalIdentity jumps() {
    return {"3", {c(0), c(2) * q()}, c(0), {c(-1), c(1) - q()}, c(1), jump_radicand()};
}

/// J: (t sqrt(1 - 4x) - t + 2) J - 2 = 0.
inline RadicalIdentity depth() {
    return {"5", {c(2) - t()}, t(), {c(-2)}, c(0), {c(1), c(-4)}};
}

/// K: (sqrt(1 - 4qx) - 1 + 2q) K - 2q = 0.
inline RadicalIdentity jump_distance() {
    return {"6", {c(2) * q() - c(1)}, c(1), {c(-2) * q()}, c(0), {c(1), c(-4) * q()}};
}

/// The radicand of F in unfactored form, coefficients of x^0, x^1, x^2:
/// t^2,  -2q t^2 - 2t^2,  q^2 t^2 - 2q t^2 + t^2.
inline std::vector<Poly2> trivariate_radicand_expanded() {
    const auto m = [](long coeff, unsigned et, unsigned eq) {
        return Poly2::monomial(Rational(coeff), et, eq);
    };
    return {m(1, 2, 0), m(-2, 2, 1) + m(-2, 2, 0), m(1, 2, 2) + m(-2, 2, 1) + m(1, 2, 0)};
}

}  // namespace identities

/// Expands t^2 * jump_radicand() and compares with the unfactored radicand of F.
/// Justifies pulling t out of the square root in identities::trivariate().
inline bool trivariate_radicand_factors() {
    const auto expanded = identities::trivariate_radicand_expanded();
    const auto factored = identities::jump_radicand();
    if (expanded.size() != factored.size()) return false;
    const Poly2 tt = Poly2::t() * Poly2::t();
    for (std::size_t i = 0; i < expanded.size(); ++i) {
        if (tt * factored[i] != expanded[i]) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Generating functions

/// Map f -> 1 + x f^2.
inline Series catalan_map(const Series& f) {
    return Series::one(f.order()) + (f * f).times_x();
}

/// f(x) = sum_n b_n x^n from f = 1 + x f^2.
inline Series solve_catalan(unsigned order) {
    return fixed_point_solve(catalan_map, order);
}

/// Map F -> 1 + x t F(x,0,q) F + x t q (F(x,1,q) - F(x,0,q)) F, collected as
/// 1 + x t (F0 + q (F1 - F0)) F so the t-free factor multiplies once.
inline Series trivariate_map(const Series& f) {
    const Series f0 = substitute(f, Marker::t, 0);
    const Series f1 = substitute(f, Marker::t, 1);
    const Series left_weight = f0 + Poly2::q() * (f1 - f0);
    return Series::one(f.order()) + Poly2::t() * (left_weight * f).times_x();
}

/// F(x,t,q) = sum_T x^V t^D q^J.
inline Series solve_F(unsigned order) {
    return fixed_point_solve(trivariate_map, order);
}

inline Verdict verify_F_closed_form(const Series& f) {
    Verdict v = check_identity(identities::trivariate(), f);
    if (!trivariate_radicand_factors()) v.pass = false;
    return v;
}

inline Verdict verify_F_closed_form(unsigned order) {
    return verify_F_closed_form(solve_F(order));
}

/// H(x,q) = F(x,1,q) without checking the closed form.
inline Series compute_H(unsigned order) {
    return substitute(solve_F(order), Marker::t, 1);
}

/// H(x,q) = sum_T x^V q^J. Throws ContractViolation if the closed form fails,
/// which can only mean a bug upstream.
inline Series solve_H(unsigned order) {
    Series h = compute_H(order);
    const Verdict v = check_identity(identities::jumps(), h);
    if (!v.pass) {
        throw ContractViolation("H closed form fails at x^" + std::to_string(v.first_failure->n));
    }
    return h;
}

/// J(x,t) = 1 / (1 - x t f(x)) without checking the closed form.
inline Series compute_Jdepth(unsigned order) {
    const Series f = solve_catalan(order);
    const Series kernel = Series::one(order) - Poly2::t() * f.times_x();
    return series_inverse(kernel);
}

/// J(x,t) = sum_T x^V t^D.
inline Series solve_Jdepth(unsigned order) {
    Series j = compute_Jdepth(order);
    const Verdict v = check_identity(identities::depth(), j);
    if (!v.pass) {
        throw ContractViolation("J closed form fails at x^" + std::to_string(v.first_failure->n));
    }
    return j;
}

/// Residual of J = 1 + x t J(x,1) J.
inline Series depth_equation_residual(const Series& j) {
    const Series j1 = substitute(j, Marker::t, 1);
    return j - (Series::one(j.order()) + Poly2::t() * (j1 * j).times_x());
}

/// K(x,q) = J(qx, 1/q): the x^n coefficient c_n(t) becomes q^n c_n(1/q).
/// Since JD = V - D, this turns t^D into q^(V-D).
inline Series reverse_depth_into_jump_distance(const Series& j) {
    std::vector<Poly2> out;
    out.reserve(j.order() + 1);
    for (unsigned n = 0; n <= j.order(); ++n) {
        if (j[n].depends_on(Marker::q)) {
            throw ContractViolation("depth series must not contain q");
        }
        out.push_back(reverse_t_into_q(j[n], n));
    }
    return Series(std::move(out));
}

inline Series compute_K(unsigned order) {
    return reverse_depth_into_jump_distance(compute_Jdepth(order));
}

/// K(x,q) = sum_T x^V q^JD.
inline Series solve_K(unsigned order) {
    Series k = reverse_depth_into_jump_distance(solve_Jdepth(order));
    const Verdict v = check_identity(identities::jump_distance(), k);
    if (!v.pass) {
        throw ContractViolation("K closed form fails at x^" + std::to_string(v.first_failure->n));
    }
    return k;
}

// ---------------------------------------------------------------------------
// Per-theorem verification, as exposed on the command line.

/// Compares each coefficient of `s` with the known value; residual = s - expected.
inline Verdict verify_against(std::string theorem, const Series& s, const Series& expected) {
    return verdict_from_residual(std::move(theorem), s.truncated(std::min(s.order(), expected.order())) -
                                                         expected);
}

inline Series catalan_numbers(unsigned order) {
    Series s(order);
    for (unsigned n = 0; n <= order; ++n) s[n] = Poly2(Rational(catalan(n)));
    return s;
}

/// Identity numbers as used on the command line: 0 Catalan, 1 functional equation for
/// F, 2 closed form of F, 3 closed form of H, 4 functional equation for J,
/// 5 closed form of J, 6 closed form of K.
inline Verdict verify_theorem(unsigned theorem, unsigned order,
                              unsigned oracle_cap = kDefaultOracleCap) {
    const std::string name = std::to_string(theorem);
    switch (theorem) {
        case 0: {
            const Series f = solve_catalan(order);
            return combine(name, order,
                           {verify_against(name, f, catalan_numbers(order)),
                            check_identity(identities::catalan(), f)});
        }
        case 1: {
            const Series f = solve_F(order);
            std::vector<Verdict> parts{verdict_from_residual(name, f - trivariate_map(f))};
            const unsigned oracle_order = std::min(order, oracle_cap);
            parts.push_back(verify_against(name, f.truncated(oracle_order),
                                           brute_force_enumerator(oracle_order, oracle_cap)));
            return combine(name, order, parts);
        }
        case 2: {
            Verdict v = verify_F_closed_form(order);
            v.theorem = name;
            return v;
        }
        case 3:
            return check_identity(identities::jumps(), compute_H(order));
        case 4: {
            const Series j = compute_Jdepth(order);
            return combine(name, order,
                           {verdict_from_residual(name, depth_equation_residual(j)),
                            verify_against(name, substitute(j, Marker::t, 1), solve_catalan(order))});
        }
        case 5:
            return check_identity(identities::depth(), compute_Jdepth(order));
        case 6:
            return check_identity(identities::jump_distance(), compute_K(order));
        default:
            throw ContractViolation("no theorem " + name + "; expected 0..6");
    }
}

}  // namespace jumpstat
