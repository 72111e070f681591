#pragma once

#include "jumpstat/errors.hpp"
#include "jumpstat/poly2.hpp"
#include "jumpstat/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace jumpstat {

/*
 * Truncated power series in x whose coefficients are Poly2 values in t and q:
 *
 *   S = c_0 + c_1 x + ... + c_N x^N   (mod x^(N+1))
 *
 * The order N is part of the value. Binary operations truncate to the
 * smaller order of their operands, so precision is never invented.
 */
class Series {
public:
    /// The zero series at order N.
    explicit Series(unsigned order = 0) : coeffs_(order + 1) {}

    explicit Series(std::vector<Poly2> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw ContractViolation("a series needs at least one coefficient");
    }

    static Series constant(const Poly2& c, unsigned order) {
        Series s(order);
        s.coeffs_[0] = c;
        return s;
    }

    static Series one(unsigned order) { return constant(Poly2(1), order); }

    /// Polynomial in x given low-to-high, truncated or zero-padded to `order`.
    static Series polynomial(std::vector<Poly2> coeffs, unsigned order) {
        coeffs.resize(order + 1);
        return Series(std::move(coeffs));
    }

    unsigned order() const { return static_cast<unsigned>(coeffs_.size() - 1); }

    const Poly2& operator[](std::size_t n) const { return coeffs_.at(n); }
    Poly2& operator[](std::size_t n) { return coeffs_.at(n); }

    std::span<const Poly2> coeffs() const { return coeffs_; }

    Series truncated(unsigned order) const {
        if (order > this->order()) {
            throw ContractViolation("cannot truncate a series of order " +
                                    std::to_string(this->order()) + " up to " +
                                    std::to_string(order));
        }
        return Series(std::vector<Poly2>(coeffs_.begin(), coeffs_.begin() + order + 1));
    }

    /// Extends with zero coefficients. The new coefficients are not known to
    /// be correct; only fixed_point_solve relies on this.
    Series padded(unsigned order) const {
        Series s = *this;
        if (order > s.order()) s.coeffs_.resize(order + 1);
        return s;
    }

    /// Multiplication by x: shifts up one place, dropping the top coefficient.
    Series times_x() const {
        Series s(order());
        for (unsigned n = 1; n <= order(); ++n) s.coeffs_[n] = coeffs_[n - 1];
        return s;
    }

    Series operator-() const {
        Series s = *this;
        for (auto& c : s.coeffs_) c = -c;
        return s;
    }

    friend Series operator+(const Series& a, const Series& b) {
        Series s(std::min(a.order(), b.order()));
        for (unsigned n = 0; n <= s.order(); ++n) s.coeffs_[n] = a.coeffs_[n] + b.coeffs_[n];
        return s;
    }

    friend Series operator-(const Series& a, const Series& b) {
        Series s(std::min(a.order(), b.order()));
        for (unsigned n = 0; n <= s.order(); ++n) s.coeffs_[n] = a.coeffs_[n] - b.coeffs_[n];
        return s;
    }

    /// Truncated Cauchy product.
    friend Series operator*(const Series& a, const Series& b) {
        Series s(std::min(a.order(), b.order()));
        for (unsigned n = 0; n <= s.order(); ++n) {
            Poly2 sum;
            for (unsigned i = 0; i <= n; ++i) {
                if (a.coeffs_[i].is_zero() || b.coeffs_[n - i].is_zero()) continue;
                sum += a.coeffs_[i] * b.coeffs_[n - i];
            }
            s.coeffs_[n] = std::move(sum);
        }
        return s;
    }

    friend Series operator*(const Poly2& c, const Series& a) {
        Series s = a;
        for (auto& coeff : s.coeffs_) coeff = c * coeff;
        return s;
    }

    friend bool operator==(const Series&, const Series&) = default;

    /// Applies `f` to every coefficient.
    template <typename F>
    Series map(F&& f) const {
        std::vector<Poly2> out;
        out.reserve(coeffs_.size());
        for (const auto& c : coeffs_) out.push_back(f(c));
        return Series(std::move(out));
    }

private:
    std::vector<Poly2> coeffs_;
};

/// Index of the first coefficient where a and b differ, comparing up to the
/// smaller order; nullopt if they agree there.
inline std::optional<unsigned> first_difference(const Series& a, const Series& b) {
    const unsigned order = std::min(a.order(), b.order());
    for (unsigned n = 0; n <= order; ++n) {
        if (a[n] != b[n]) return n;
    }
    return std::nullopt;
}

inline bool agree(const Series& a, const Series& b) { return !first_difference(a, b); }

inline Series substitute(const Series& s, Marker m, int value) {
    return s.map([&](const Poly2& c) { return substitute(c, m, value); });
}

/*
 * Square root with constant term +1. From y^2 = s:
 *
 *   y_0 = 1,   y_n = (s_n - sum_{i=1}^{n-1} y_i y_{n-i}) / 2
 *
 * so the only division is by 2 and coefficients stay polynomial.
 */
inline Series series_sqrt(const Series& s) {
    if (s[0] != Poly2(1)) {
        throw ContractViolation("series_sqrt needs constant coefficient exactly 1, got " +
                                to_string(s[0]));
    }
    const Rational half(1, 2);
    Series y(s.order());
    y[0] = Poly2(1);
    for (unsigned n = 1; n <= s.order(); ++n) {
        Poly2 acc = s[n];
        // Pair symmetric terms: y_i y_{n-i} appears twice for i != n-i.
        for (unsigned i = 1; 2 * i < n; ++i) {
            acc -= Rational(2) * (y[i] * y[n - i]);
        }
        if (n % 2 == 0 && n >= 2) acc -= y[n / 2] * y[n / 2];
        y[n] = acc * half;
    }
    return y;
}

/// Multiplicative inverse; the constant coefficient must be a nonzero
/// rational without t or q.
inline Series series_inverse(const Series& s) {
    if (!s[0].is_constant() || s[0].is_zero()) {
        throw ContractViolation("series_inverse needs a nonzero rational constant term, got " +
                                to_string(s[0]));
    }
    const Rational inv_c0 = 1 / s[0].constant_term();
    Series u(s.order());
    u[0] = Poly2(inv_c0);
    for (unsigned n = 1; n <= s.order(); ++n) {
        Poly2 acc;
        for (unsigned i = 1; i <= n; ++i) {
            if (s[i].is_zero() || u[n - i].is_zero()) continue;
            acc += s[i] * u[n - i];
        }
        u[n] = acc * Rational(-inv_c0);
    }
    return u;
}

using SeriesMap = std::function<Series(const Series&)>;

/*
 * Solves S = phi(S) mod x^(N+1) by iteration from S = 1.
 *
 * phi must be an x-adic contraction: a = b mod x^k implies
 * phi(a) = phi(b) mod x^(k+1). Then iterate i is exact through x^(i-1), so
 * iteration i only needs to run at order i-1; the unknown top coefficient of
 * its input is padded with zero. N+1 iterations reach order N.
 *
 * A coefficient that was already settled and changes again means phi is not
 * a contraction; that aborts with ContractViolation.
 */
inline Series fixed_point_solve(const SeriesMap& phi, unsigned order) {
    Series current = Series::one(0);
    for (unsigned iteration = 1; iteration <= order + 1; ++iteration) {
        const unsigned k = iteration - 1;
        Series next = phi(current.padded(k));
        if (next.order() < k) {
            throw ContractViolation("fixed-point map lost precision: returned order " +
                                    std::to_string(next.order()) + " for input order " +
                                    std::to_string(k));
        }
        next = next.truncated(k);
        if (iteration >= 2) {
            for (unsigned n = 0; n < k; ++n) {
                if (next[n] != current[n]) {
                    throw ContractViolation("fixed-point iteration " + std::to_string(iteration) +
                                            " changed settled coefficient x^" + std::to_string(n) +
                                            "; map is not a contraction");
                }
            }
        }
        current = std::move(next);
    }
    return current;
}

}  // namespace jumpstat
