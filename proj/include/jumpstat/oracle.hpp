#pragma once

#include "jumpstat/poly2.hpp"
#include "jumpstat/series.hpp"
#include "jumpstat/tree.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace jumpstat {

/*
 * Weight enumerator by exhaustive enumeration:
 *
 *   coefficient of x^n = sum over trees T with V(T) = n of t^a(T) q^b(T)
 *
 * where (a, b) = exponents(compute_stats(T)). Ground truth for every
 * generating function built elsewhere.
 */
template <typename Exponents>
Series brute_force_series(unsigned n_max, Exponents exponents,
                          unsigned cap = kDefaultEnumerationCap) {
    if (n_max > cap) {
        throw ResourceRefusal("brute-force enumerator at n=" + std::to_string(n_max) +
                              " exceeds cap " + std::to_string(cap));
    }
    Series s(n_max);
    for (unsigned n = 0; n <= n_max; ++n) {
        // Every exponent of interest is bounded by n.
        const std::size_t width = n + 1;
        std::vector<std::uint64_t> counts(width * width, 0);
        for (const BinaryTree& tree : enumerate_trees(n, cap)) {
            const auto [a, b] = exponents(compute_stats(tree));
            ++counts[a * width + b];
        }
        std::vector<Poly2::Term> terms;
        for (std::size_t i = 0; i < counts.size(); ++i) {
            if (counts[i] == 0) continue;
            terms.push_back(Poly2::Term{static_cast<unsigned>(i / width),
                                        static_cast<unsigned>(i % width),
                                        Rational(Integer(static_cast<unsigned long>(counts[i])))});
        }
        s[n] = Poly2::from_terms(std::move(terms));
    }
    return s;
}

/// The trivariate enumerator sum_T x^V t^D q^J, truncated at n_max.
inline Series brute_force_enumerator(unsigned n_max, unsigned cap = kDefaultEnumerationCap) {
    return brute_force_series(
        n_max, [](const TreeStats& s) { return std::pair{s.d, s.j}; }, cap);
}

}  // namespace jumpstat
