#pragma once

#include "jumpstat/errors.hpp"
#include "jumpstat/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace jumpstat {

/// The two markers carried by series coefficients: t (depth of the
/// rightmost leaf, the catalytic variable) and q (the statistic of interest).
enum class Marker { t, q };

/*
 * Sparse polynomial in t and q with exact rational coefficients.
 *
 * Terms are kept sorted by (t exponent, q exponent) with no zero
 * coefficients, so equality is term-wise vector equality.
 */
class Poly2 {
public:
    struct Term {
        unsigned et = 0;
        unsigned eq = 0;
        Rational coeff;

        friend bool operator==(const Term&, const Term&) = default;
    };

    Poly2() = default;
    Poly2(const Rational& c) {  // NOLINT(google-explicit-constructor)
        if (c != 0) terms_.push_back(Term{0, 0, c});
    }
    Poly2(long c) : Poly2(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    Poly2(int c) : Poly2(Rational(c)) {}   // NOLINT(google-explicit-constructor)

    static Poly2 monomial(const Rational& c, unsigned et, unsigned eq) {
        Poly2 p;
        if (c != 0) p.terms_.push_back(Term{et, eq, c});
        return p;
    }

    static Poly2 t() { return monomial(1, 1, 0); }
    static Poly2 q() { return monomial(1, 0, 1); }

    /// Builds from arbitrary terms: sorts, merges duplicates, drops zeros.
    static Poly2 from_terms(std::vector<Term> terms) {
        std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
            return key_less(a, b);
        });
        Poly2 p;
        for (auto& term : terms) {
            if (!p.terms_.empty() && same_key(p.terms_.back(), term)) {
                p.terms_.back().coeff += term.coeff;
            } else {
                p.terms_.push_back(std::move(term));
            }
        }
        p.drop_zeros();
        return p;
    }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].et == 0 && terms_[0].eq == 0);
    }

    Rational coeff(unsigned et, unsigned eq) const {
        const Term probe{et, eq, Rational(0)};
        auto it = std::lower_bound(terms_.begin(), terms_.end(), probe, key_less);
        if (it != terms_.end() && same_key(*it, probe)) return it->coeff;
        return Rational(0);
    }

    Rational constant_term() const { return coeff(0, 0); }

    /// Highest exponent of `m`; 0 for the zero polynomial.
    unsigned degree(Marker m) const {
        unsigned d = 0;
        for (const auto& term : terms_) d = std::max(d, m == Marker::t ? term.et : term.eq);
        return d;
    }

    bool depends_on(Marker m) const { return degree(m) > 0; }

    bool has_integer_coefficients() const {
        return std::all_of(terms_.begin(), terms_.end(),
                           [](const Term& term) { return is_integer(term.coeff); });
    }

    Poly2 operator-() const {
        Poly2 p = *this;
        for (auto& term : p.terms_) term.coeff = -term.coeff;
        return p;
    }

    Poly2& operator+=(const Poly2& other) { return *this = merge(*this, other, false); }
    Poly2& operator-=(const Poly2& other) { return *this = merge(*this, other, true); }
    Poly2& operator*=(const Poly2& other) { return *this = *this * other; }

    Poly2& operator*=(const Rational& c) {
        if (c == 0) {
            terms_.clear();
        } else {
            for (auto& term : terms_) term.coeff *= c;
        }
        return *this;
    }

    friend Poly2 operator+(const Poly2& a, const Poly2& b) { return merge(a, b, false); }
    friend Poly2 operator-(const Poly2& a, const Poly2& b) { return merge(a, b, true); }

    friend Poly2 operator*(Poly2 a, const Rational& c) { return a *= c; }
    friend Poly2 operator*(const Rational& c, Poly2 a) { return a *= c; }

    // Accumulates into a dense (deg_t+1) x (deg_q+1) grid, then compacts.
    // When every coefficient is an integer the grid is mpz, which avoids a
    // gcd per multiply-add.
    friend Poly2 operator*(const Poly2& a, const Poly2& b) {
        if (a.is_zero() || b.is_zero()) return Poly2{};
        const unsigned dt = a.degree(Marker::t) + b.degree(Marker::t);
        const unsigned dq = a.degree(Marker::q) + b.degree(Marker::q);
        const std::size_t width = dq + 1;
        Poly2 out;
        if (a.has_integer_coefficients() && b.has_integer_coefficients()) {
            std::vector<Integer> grid(static_cast<std::size_t>(dt + 1) * width);
            for (const auto& x : a.terms_) {
                for (const auto& y : b.terms_) {
                    Integer& cell = grid[(x.et + y.et) * width + (x.eq + y.eq)];
                    mpz_addmul(cell.get_mpz_t(), mpq_numref(x.coeff.get_mpq_t()),
                               mpq_numref(y.coeff.get_mpq_t()));
                }
            }
            for (std::size_t i = 0; i < grid.size(); ++i) {
                if (grid[i] != 0) {
                    out.terms_.push_back(Term{static_cast<unsigned>(i / width),
                                              static_cast<unsigned>(i % width), Rational(grid[i])});
                }
            }
            return out;
        }
        std::vector<Rational> grid(static_cast<std::size_t>(dt + 1) * width);
        Rational product;
        for (const auto& x : a.terms_) {
            for (const auto& y : b.terms_) {
                mpq_mul(product.get_mpq_t(), x.coeff.get_mpq_t(), y.coeff.get_mpq_t());
                Rational& cell = grid[(x.et + y.et) * width + (x.eq + y.eq)];
                cell += product;
            }
        }
        for (std::size_t i = 0; i < grid.size(); ++i) {
            if (grid[i] != 0) {
                out.terms_.push_back(Term{static_cast<unsigned>(i / width),
                                          static_cast<unsigned>(i % width), std::move(grid[i])});
            }
        }
        return out;
    }

    friend bool operator==(const Poly2&, const Poly2&) = default;

private:
    static bool key_less(const Term& a, const Term& b) {
        return a.et != b.et ? a.et < b.et : a.eq < b.eq;
    }
    static bool same_key(const Term& a, const Term& b) { return a.et == b.et && a.eq == b.eq; }

    void drop_zeros() {
        std::erase_if(terms_, [](const Term& term) { return term.coeff == 0; });
    }

    static Poly2 merge(const Poly2& a, const Poly2& b, bool subtract) {
        Poly2 out;
        out.terms_.reserve(a.terms_.size() + b.terms_.size());
        auto i = a.terms_.begin();
        auto j = b.terms_.begin();
        while (i != a.terms_.end() || j != b.terms_.end()) {
            if (j == b.terms_.end() || (i != a.terms_.end() && key_less(*i, *j))) {
                out.terms_.push_back(*i++);
            } else if (i == a.terms_.end() || key_less(*j, *i)) {
                out.terms_.push_back(Term{j->et, j->eq, subtract ? Rational(-j->coeff) : j->coeff});
                ++j;
            } else {
                Rational c = subtract ? Rational(i->coeff - j->coeff) : Rational(i->coeff + j->coeff);
                if (c != 0) out.terms_.push_back(Term{i->et, i->eq, std::move(c)});
                ++i;
                ++j;
            }
        }
        return out;
    }

    std::vector<Term> terms_;
};

/// Sets one marker to 0 or 1, eliminating it.
inline Poly2 substitute(const Poly2& p, Marker m, int value) {
    if (value != 0 && value != 1) {
        throw ContractViolation("marker substitution supports only the values 0 and 1");
    }
    std::vector<Poly2::Term> terms;
    for (const auto& term : p.terms()) {
        const unsigned e = m == Marker::t ? term.et : term.eq;
        if (value == 0 && e > 0) continue;
        terms.push_back(m == Marker::t ? Poly2::Term{0, term.eq, term.coeff}
                                       : Poly2::Term{term.et, 0, term.coeff});
    }
    return Poly2::from_terms(std::move(terms));
}

/// d/dq:  t^a q^b  ->  b t^a q^(b-1).
inline Poly2 q_derivative(const Poly2& p) {
    std::vector<Poly2::Term> terms;
    for (const auto& term : p.terms()) {
        if (term.eq == 0) continue;
        terms.push_back(Poly2::Term{term.et, term.eq - 1, term.coeff * term.eq});
    }
    return Poly2::from_terms(std::move(terms));
}

/// q d/dq:  t^a q^b  ->  b t^a q^b.
inline Poly2 q_theta(const Poly2& p) {
    std::vector<Poly2::Term> terms;
    for (const auto& term : p.terms()) {
        if (term.eq == 0) continue;
        terms.push_back(Poly2::Term{term.et, term.eq, term.coeff * term.eq});
    }
    return Poly2::from_terms(std::move(terms));
}

inline Rational evaluate(const Poly2& p, const Rational& t, const Rational& q) {
    Rational sum;
    for (const auto& term : p.terms()) sum += term.coeff * pow(t, term.et) * pow(q, term.eq);
    return sum;
}

/// t^a q^b -> q^(b + n - a), i.e. q^n * p(1/q, q) with t folded into q.
/// Requires deg_t p <= n so the result stays a polynomial.
inline Poly2 reverse_t_into_q(const Poly2& p, unsigned n) {
    std::vector<Poly2::Term> terms;
    for (const auto& term : p.terms()) {
        if (term.et > n) {
            throw ContractViolation("t-degree " + std::to_string(term.et) + " exceeds " +
                                    std::to_string(n) + " in exponent reversal");
        }
        terms.push_back(Poly2::Term{0, term.eq + n - term.et, term.coeff});
    }
    return Poly2::from_terms(std::move(terms));
}

/// Human-readable form, e.g. "t^2 + q*t - 1/2".
inline std::string to_string(const Poly2& p) {
    if (p.is_zero()) return "0";
    std::string out;
    // Highest total degree first reads more naturally.
    std::vector<Poly2::Term> terms = p.terms();
    std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        return a.et + a.eq > b.et + b.eq;
    });
    for (const auto& term : terms) {
        Rational c = term.coeff;
        const bool negative = c < 0;
        if (negative) c = -c;
        out += out.empty() ? (negative ? "-" : "") : (negative ? " - " : " + ");
        std::string vars;
        if (term.eq > 0) vars += term.eq == 1 ? "q" : "q^" + std::to_string(term.eq);
        if (term.et > 0) {
            if (!vars.empty()) vars += "*";
            vars += term.et == 1 ? "t" : "t^" + std::to_string(term.et);
        }
        if (vars.empty()) {
            out += c.get_str();
        } else if (c == 1) {
            out += vars;
        } else {
            out += c.get_str() + "*" + vars;
        }
    }
    return out;
}

}  // namespace jumpstat
