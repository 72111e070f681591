#pragma once

// Independent reference computations for the tests. Nothing here may call
// the series machinery it is used to check.

#include "jumpstat/poly2.hpp"
#include "jumpstat/rational.hpp"
#include "jumpstat/series.hpp"
#include "jumpstat/tree.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace jumpstat::testing {

/// (2n)! / (n! (n+1)!) straight from factorials.
inline Integer catalan_by_factorials(unsigned long n) {
    return factorial(2 * n) / (factorial(n) * factorial(n + 1));
}

enum class Stat { j, jd, d };

inline std::uint64_t pick(const TreeStats& s, Stat which) {
    switch (which) {
        case Stat::j:
            return s.j;
        case Stat::jd:
            return s.jd;
        case Stat::d:
            break;
    }
    return s.d;
}

/// sums[r] = sum over trees with n internal vertices of stat(T)^r, r = 0..r_max.
inline std::vector<Integer> power_sums_by_enumeration(unsigned n, unsigned r_max, Stat which) {
    std::vector<Integer> sums(r_max + 1);
    for (const BinaryTree& tree : enumerate_trees(n)) {
        const Integer value(static_cast<unsigned long>(pick(compute_stats(tree), which)));
        Integer power = 1;
        for (unsigned r = 0; r <= r_max; ++r, power *= value) sums[r] += power;
    }
    return sums;
}

/// Generalized binomial coefficient C(1/2, k).
inline Rational half_choose(unsigned k) {
    Rational c = 1;
    for (unsigned i = 0; i < k; ++i) c *= (Rational(1, 2) - i) / Rational(i + 1);
    return c;
}

/// Coefficients of sqrt(1 + a x) by Newton's binomial series.
inline std::vector<Rational> binomial_sqrt(const Rational& a, unsigned order) {
    std::vector<Rational> out;
    for (unsigned k = 0; k <= order; ++k) out.push_back(half_choose(k) * pow(a, k));
    return out;
}

/// Small random Poly2 with integer coefficients in [-3, 3].
inline Poly2 random_poly2(std::mt19937& rng, unsigned max_deg = 2) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<unsigned> deg(0, max_deg);
    std::vector<Poly2::Term> terms;
    const unsigned count = deg(rng) + 1;
    for (unsigned i = 0; i < count; ++i) {
        terms.push_back(Poly2::Term{deg(rng), deg(rng), Rational(coeff(rng))});
    }
    return Poly2::from_terms(std::move(terms));
}

inline Series random_series(std::mt19937& rng, unsigned order) {
    std::vector<Poly2> coeffs;
    for (unsigned n = 0; n <= order; ++n) coeffs.push_back(random_poly2(rng));
    return Series(std::move(coeffs));
}

/// Random tree with n internal vertices, splitting sizes uniformly at each
/// node (so not uniform over trees).
inline BinaryTree random_tree(std::mt19937& rng, unsigned n) {
    if (n == 0) return BinaryTree::leaf();
    std::uniform_int_distribution<unsigned> split(0, n - 1);
    const unsigned left = split(rng);
    return BinaryTree::internal(random_tree(rng, left), random_tree(rng, n - 1 - left));
}

}  // namespace jumpstat::testing
