#pragma once

#include "jumpstat/errors.hpp"
#include "jumpstat/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace jumpstat {

namespace detail {

// Dense univariate polynomial over Q, coefficients low to high, no trailing zeros.
using QPoly = std::vector<Rational>;

inline void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline QPoly poly_mod(QPoly a, const QPoly& b) {
    while (a.size() >= b.size() && !a.empty()) {
        const Rational factor = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

inline QPoly poly_div_exact(QPoly a, const QPoly& b) {
    if (a.size() < b.size()) {
        trim(a);
        if (!a.empty()) throw ContractViolation("inexact polynomial division");
        return {};
    }
    QPoly quotient(a.size() - b.size() + 1);
    while (a.size() >= b.size() && !a.empty()) {
        const Rational factor = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        quotient[shift] = factor;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
        a.pop_back();
        trim(a);
    }
    if (!a.empty()) throw ContractViolation("inexact polynomial division");
    return quotient;
}

inline QPoly poly_gcd(QPoly a, QPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        QPoly r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

}  // namespace detail

/// A polynomial in n with integer coefficients, low to high.
class PolyN {
public:
    PolyN() = default;
    explicit PolyN(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    /// Coefficients highest power first.
    static PolyN from_high(std::initializer_list<long> high_to_low) {
        std::vector<Integer> c;
        for (long v : high_to_low) c.emplace_back(v);
        std::reverse(c.begin(), c.end());
        return PolyN(std::move(c));
    }

    const std::vector<Integer>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const Integer& leading() const { return coeffs_.back(); }

    Rational operator()(const Rational& n) const {
        Rational acc;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * n + *it;
        return acc;
    }

    friend bool operator==(const PolyN&, const PolyN&) = default;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Integer> coeffs_;
};

/// "6*n^3-11*n^2-2*n+3" style rendering.
inline std::string to_string(const PolyN& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        const Integer& c = p.coeffs()[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        Integer mag = abs(c);
        if (c < 0) {
            out += "-";
        } else if (!out.empty()) {
            out += "+";
        }
        if (k == 0) {
            out += mag.get_str();
            continue;
        }
        if (mag != 1) out += mag.get_str() + "*";
        out += k == 1 ? "n" : "n^" + std::to_string(k);
    }
    return out;
}

/*
 * numerator(n) / denominator(n) with integer coefficients, in canonical form:
 * numerator and denominator coprime over Q, the content of all coefficients
 * together is 1, and the denominator's leading coefficient is positive.
 * Two equal rational functions therefore have identical representations.
 */
class RationalFunctionN {
public:
    RationalFunctionN() : RationalFunctionN(PolyN(), PolyN(std::vector<Integer>{Integer(1)})) {}

    RationalFunctionN(const PolyN& numerator, const PolyN& denominator) {
        if (denominator.is_zero()) throw ContractViolation("zero denominator");
        normalize(to_q(numerator), to_q(denominator));
    }

    /// From rational coefficient lists (low to high).
    static RationalFunctionN from_rational(std::vector<Rational> numerator,
                                           std::vector<Rational> denominator) {
        detail::trim(denominator);
        if (denominator.empty()) throw ContractViolation("zero denominator");
        RationalFunctionN f(0);
        f.normalize(std::move(numerator), std::move(denominator));
        return f;
    }

    const PolyN& numerator() const { return num_; }
    const PolyN& denominator() const { return den_; }

    /// nullopt at a pole.
    std::optional<Rational> operator()(const Rational& n) const {
        const Rational d = den_(n);
        if (d == 0) return std::nullopt;
        return num_(n) / d;
    }

    friend bool operator==(const RationalFunctionN&, const RationalFunctionN&) = default;

private:
    explicit RationalFunctionN(int) {}

    static detail::QPoly to_q(const PolyN& p) {
        return detail::QPoly(p.coeffs().begin(), p.coeffs().end());
    }

    void normalize(detail::QPoly num, detail::QPoly den) {
        detail::trim(num);
        detail::trim(den);
        if (num.empty()) {
            den = {Rational(1)};
        } else {
            const detail::QPoly g = detail::poly_gcd(num, den);
            if (g.size() > 1) {
                num = detail::poly_div_exact(std::move(num), g);
                den = detail::poly_div_exact(std::move(den), g);
            }
        }
        // Clear denominators, then divide out the common content.
        Integer lcm = 1;
        for (const auto* p : {&num, &den}) {
            for (const auto& c : *p) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
        }
        Integer content = 0;
        std::vector<Integer> n_int;
        std::vector<Integer> d_int;
        for (const auto& c : num) n_int.push_back(Integer(Rational(c * lcm)));
        for (const auto& c : den) d_int.push_back(Integer(Rational(c * lcm)));
        for (const auto* p : {&n_int, &d_int}) {
            for (const auto& c : *p) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
        }
        if (d_int.back() < 0) content = -content;
        for (auto& c : n_int) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
        for (auto& c : d_int) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
        num_ = PolyN(std::move(n_int));
        den_ = PolyN(std::move(d_int));
    }

    PolyN num_;
    PolyN den_;
};

/// "(n^2-1)/(8*n-4)"; a constant denominator renders bare, 1 is omitted.
inline std::string to_string(const RationalFunctionN& f) {
    const auto wrap = [](const PolyN& p) {
        std::size_t nonzero = 0;
        for (const auto& c : p.coeffs()) nonzero += c != 0;
        const std::string s = to_string(p);
        return nonzero > 1 || (p.degree() > 0 && p.leading() < 0) ? "(" + s + ")" : s;
    };
    if (f.denominator().degree() == 0 && f.denominator().leading() == 1) {
        return to_string(f.numerator());
    }
    return wrap(f.numerator()) + "/" + wrap(f.denominator());
}

struct Limit {
    enum class Kind { finite, zero, divergent };
    Kind kind = Kind::zero;
    Rational value;  // meaningful for finite and zero

    friend bool operator==(const Limit&, const Limit&) = default;
};

/// Value as n -> infinity, read off the degrees and leading coefficients.
inline Limit limit_at_infinity(const RationalFunctionN& f) {
    const int dn = f.numerator().degree();
    const int dd = f.denominator().degree();
    if (f.numerator().is_zero() || dn < dd) return Limit{Limit::Kind::zero, Rational(0)};
    if (dn > dd) return Limit{Limit::Kind::divergent, Rational(0)};
    return Limit{Limit::Kind::finite,
                 Rational(f.numerator().leading()) / Rational(f.denominator().leading())};
}

inline std::string to_string(const Limit& limit) {
    switch (limit.kind) {
        case Limit::Kind::zero:
            return "0";
        case Limit::Kind::divergent:
            return "divergent";
        case Limit::Kind::finite:
            break;
    }
    return limit.value.get_str();
}

}  // namespace jumpstat
