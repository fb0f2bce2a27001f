#ifndef GALOISLAB_Q_COMBINATORICS_HPP
#define GALOISLAB_Q_COMBINATORICS_HPP

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "galoislab/big_integer.hpp"
#include "galoislab/composition.hpp"
#include "galoislab/q_polynomial.hpp"

namespace galoislab {
namespace qcombi {

using exact::BigInteger;
using qpoly::QPolynomial;

// Binomial coefficient with the restrictive convention: C(a, b) = 0 unless
// 0 <= b <= a. Arguments may be negative.
BigInteger binomial(std::int64_t a, std::int64_t b);

// [k]_q! = prod_{i=1}^{k} (1 + q + ... + q^(i-1)); degree k(k-1)/2.
QPolynomial q_factorial(std::uint32_t k);

// Gaussian binomial [n; k]_q via the division-free Pascal recurrence
// [n;k] = [n-1;k-1] + q^k [n-1;k]. Zero for k < 0 or k > n.
QPolynomial q_binomial(std::uint32_t n, std::int64_t k);

// Full row ([n;0]_q, ..., [n;n]_q), computed in one Pascal sweep.
std::vector<QPolynomial> q_binomial_row(std::uint32_t n);

// [N; k]_q. Zero when the parts do not sum to N; otherwise the product of
// Gaussian binomials [k_1+...+k_j; k_j]_q over j (division-free chain).
QPolynomial q_multinomial(std::uint32_t N, const Composition& k);

// Composition-indexed expansion of the generalized Rogers-Szego polynomial
// H_N^(r): one entry per composition of N into r parts, whose value is the
// q-multinomial coefficient.
class RogersSzegoExpansion {
public:
    RogersSzegoExpansion(std::uint32_t N, std::uint32_t r,
                         std::map<Composition, QPolynomial> entries)
        : N_(N), r_(r), entries_(std::move(entries)) {}

    std::uint32_t N() const { return N_; }
    std::uint32_t r() const { return r_; }
    const std::map<Composition, QPolynomial>& entries() const { return entries_; }
    const QPolynomial& coefficient(const Composition& k) const;

    // Collapse z = 1: the generalized Galois number.
    QPolynomial specialize_all_one() const;
    // r = 2 only: substitute z = (z, z^-1) and group by the z-exponent
    // k1 - k2. Returns a map from z-exponent to the q-polynomial factor.
    std::map<std::int64_t, QPolynomial> specialize_z_zinv() const;

    // [{"composition": [...], "coefficients": [...]}, ...] in lexicographic
    // composition order.
    std::string to_json() const;

private:
    std::uint32_t N_;
    std::uint32_t r_;
    std::map<Composition, QPolynomial> entries_;
};

// Builds the full expansion; throws cap_exceeded when the number of
// compositions C(N+r-1, r-1) exceeds max_cells().
RogersSzegoExpansion rogers_szego(std::uint32_t N, std::uint32_t r);

// Generalized Galois number G_N^(r), by the flag recurrence
// G_N^(r) = sum_m [N;m]_q G_m^(r-1) with G^(1) = 1.
QPolynomial galois_number(std::uint32_t N, std::uint32_t r);

// Definitional sum over all compositions of N into r parts; the slow
// independent route kept for verification.
QPolynomial galois_number_by_definition(std::uint32_t N, std::uint32_t r);

// Number of partitions with at most r parts, each of size at most N:
// C(N+r, N).
BigInteger partition_count(std::uint32_t N, std::uint32_t r);

// Partitions as above that contain at least one part of each size in T;
// T must be a subset of {1, ..., N}. Equals C(N+r-|T|, N).
BigInteger partition_count_with_forced_sizes(std::uint32_t N, std::uint32_t r,
                                             const std::set<std::uint32_t>& T);

} // namespace qcombi
} // namespace galoislab

#endif
