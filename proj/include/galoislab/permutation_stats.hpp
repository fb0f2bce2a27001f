#ifndef GALOISLAB_PERMUTATION_STATS_HPP
#define GALOISLAB_PERMUTATION_STATS_HPP

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "galoislab/q_polynomial.hpp"
#include "galoislab/qt_polynomial.hpp"
#include "galoislab/rational.hpp"
#include "galoislab/truncated_series.hpp"

namespace galoislab {
namespace permstat {

using exact::BigInteger;
using exact::Rational;
using qpoly::QPolynomial;
using qpoly::QTPolynomial;

// One-line permutation of {1, ..., N} with its inversion count, descent
// set and descent count.
struct PermRecord {
    std::vector<std::uint32_t> permutation;
    std::uint64_t inversions = 0;
    std::set<std::uint32_t> descent_set; // positions i with pi(i) > pi(i+1)
    std::uint32_t descents = 0;
};

// Validates that pi is a bijection on {1..N} and computes its statistics.
PermRecord perm_stats(const std::vector<std::uint32_t>& pi);

// Inversion generating polynomials of S_N bucketed by descent count:
// entry t is sum_{des(pi) = t} q^inv(pi).
class DescentInvTable {
public:
    DescentInvTable(std::uint32_t N, std::vector<QPolynomial> by_descents)
        : N_(N), by_descents_(std::move(by_descents)) {}

    std::uint32_t N() const { return N_; }
    // Largest tracked descent count is max(N-1, 0).
    std::size_t descent_bound() const { return by_descents_.size() - 1; }
    const QPolynomial& polynomial_for(std::uint32_t t) const;
    const std::vector<QPolynomial>& rows() const { return by_descents_; }

    // Sum over all descent counts; equals [N]_q!.
    QPolynomial total() const;
    // sum_t t^t_exp * row_t(q) as a bivariate polynomial.
    QTPolynomial as_qt_polynomial() const;

    // Rows "N,t,exponent,coefficient", one line per nonzero coefficient,
    // with a header line.
    std::string to_csv() const;

private:
    std::uint32_t N_;
    std::vector<QPolynomial> by_descents_;
};

// Direct S_N walk by adjacent transpositions with O(1) statistic updates.
// Requires N <= enumeration_threshold.
DescentInvTable descent_inv_table_by_enumeration(std::uint32_t N);
// Inclusion-exclusion over descent-set subsets, grouped by subset size.
DescentInvTable descent_inv_table_by_inclusion_exclusion(std::uint32_t N);
// Dispatches on the enumeration threshold; errors beyond descent_table_cap.
DescentInvTable descent_inv_table(std::uint32_t N);

// sum over permutations with descent set exactly T of q^inv, by
// inclusion-exclusion over subsets S of T. T must lie inside {1..N-1}.
QPolynomial descent_class_inv_poly(std::uint32_t N, const std::set<std::uint32_t>& T);

// G_N^(r) as the descent-weighted inversion statistic:
// sum_t C(N+r-1-t, N) * row_t(q), restrictive binomial convention.
QPolynomial galois_via_macmahon(std::uint32_t N, std::uint32_t r);

// Sup-norm coefficient gap between N!/r^N * G_N^(r) and [N]_q!.
Rational mahonian_limit_gap(std::uint32_t N, std::uint32_t r);

// t-deformation: sum_pi C(N+r-1-des, N) t^des q^inv.
QTPolynomial deformed_galois(std::uint32_t N, std::uint32_t r);

// Per-order verdicts for the descent-inversion generating function
// identity, checked in cleared-denominator (q-factorial scaled) form.
struct StanleyCheckReport {
    std::size_t order;
    std::vector<bool> order_ok;
    bool all_ok = true;
};

StanleyCheckReport stanley_identity_check(std::uint32_t order);

// q-binomial convolution of factorially scaled series: the product rule
// (fg)_n = sum_a [n;a]_q f_a g_(n-a) matching coefficients scaled by
// [n]_q!.
qpoly::TruncatedSeries<QTPolynomial> qbinomial_convolve(
    const qpoly::TruncatedSeries<QTPolynomial>& a,
    const qpoly::TruncatedSeries<QTPolynomial>& b);

} // namespace permstat
} // namespace galoislab

#endif
