#pragma once

#include "jumpstat/errors.hpp"
#include "jumpstat/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace jumpstat {

using IntegerMatrix = std::vector<std::vector<Integer>>;

/*
 * Fraction-free (Bareiss) row echelon form, in place.
 *
 * Each elimination step computes
 *
 *   a_ij <- (p * a_ij - a_ic * a_rj) / p_prev
 *
 * where p is the current pivot and p_prev the previous one. The division is
 * exact (every entry is a minor of the input), so entries stay integers and
 * grow only linearly in bit length with the step count.
 *
 * Returns the pivot column of each nonzero row, top to bottom.
 */
inline std::vector<std::size_t> bareiss_echelon(IntegerMatrix& m, std::size_t cols) {
    std::vector<std::size_t> pivots;
    Integer prev = 1;
    Integer remainder;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[row], m[pivot]);
        const Integer& p = m[row][col];
        for (std::size_t i = row + 1; i < m.size(); ++i) {
            const Integer factor = m[i][col];
            for (std::size_t j = col + 1; j < cols; ++j) {
                Integer& entry = m[i][j];
                entry = p * entry - factor * m[row][j];
                mpz_tdiv_qr(entry.get_mpz_t(), remainder.get_mpz_t(), entry.get_mpz_t(),
                            prev.get_mpz_t());
                if (remainder != 0) throw ContractViolation("Bareiss step was not exact");
            }
            m[i][col] = 0;
        }
        prev = p;
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

/// Basis of {x : m x = 0} over Q, each vector scaled to coprime integers.
inline std::vector<std::vector<Integer>> integer_nullspace(IntegerMatrix m, std::size_t cols) {
    const std::vector<std::size_t> pivots = bareiss_echelon(m, cols);
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<std::vector<Integer>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> x(cols);
        x[free] = 1;
        for (std::size_t r = pivots.size(); r-- > 0;) {
            const std::size_t c = pivots[r];
            Rational sum;
            for (std::size_t j = c + 1; j < cols; ++j) {
                if (x[j] != 0 && m[r][j] != 0) sum += Rational(m[r][j]) * x[j];
            }
            x[c] = -sum / Rational(m[r][c]);
        }
        Integer lcm = 1;
        for (const auto& v : x) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
        std::vector<Integer> scaled;
        Integer content = 0;
        for (const auto& v : x) {
            scaled.push_back(Integer(Rational(v * lcm)));
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), scaled.back().get_mpz_t());
        }
        for (auto& v : scaled) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
        basis.push_back(std::move(scaled));
    }
    return basis;
}

/// Mersenne prime 2^61 - 1.
inline constexpr std::uint64_t kFilterPrime = (std::uint64_t{1} << 61) - 1;

/*
 * Nullspace dimension of m reduced modulo a prime p. Reduction can only lower
 * the rank, so a zero result proves the rational nullspace is zero as well;
 * a positive one proves nothing. Used as a cheap filter in front of the exact
 * elimination.
 */
inline std::size_t nullity_mod_prime(const IntegerMatrix& m, std::size_t cols,
                                     std::uint64_t p = kFilterPrime) {
    using u128 = unsigned __int128;
    const auto mulmod = [p](std::uint64_t a, std::uint64_t b) {
        return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
    };
    const auto powmod = [&](std::uint64_t base, std::uint64_t exp) {
        std::uint64_t acc = 1;
        for (; exp; exp >>= 1, base = mulmod(base, base)) {
            if (exp & 1) acc = mulmod(acc, base);
        }
        return acc;
    };

    Integer modulus;
    mpz_import(modulus.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
    std::vector<std::vector<std::uint64_t>> a(m.size(), std::vector<std::uint64_t>(cols));
    Integer residue;
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            mpz_fdiv_r(residue.get_mpz_t(), m[i][j].get_mpz_t(), modulus.get_mpz_t());
            std::uint64_t r = 0;
            mpz_export(&r, nullptr, -1, sizeof(r), 0, 0, residue.get_mpz_t());
            a[i][j] = r;
        }
    }

    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < a.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < a.size() && a[pivot][col] == 0) ++pivot;
        if (pivot == a.size()) continue;
        std::swap(a[rank], a[pivot]);
        const std::uint64_t inv = powmod(a[rank][col], p - 2);
        for (std::size_t i = rank + 1; i < a.size(); ++i) {
            if (a[i][col] == 0) continue;
            const std::uint64_t factor = mulmod(a[i][col], inv);
            for (std::size_t j = col; j < cols; ++j) {
                a[i][j] = (a[i][j] + p - mulmod(factor, a[rank][j])) % p;
            }
        }
        ++rank;
    }
    return cols - rank;
}

}  // namespace jumpstat
