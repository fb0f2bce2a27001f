#include "galoislab/permutation_stats.hpp"

#include <algorithm>
#include <cstdlib>

#include "galoislab/config.hpp"
#include "galoislab/errors.hpp"
#include "galoislab/q_combinatorics.hpp"

namespace galoislab {
namespace permstat {

PermRecord perm_stats(const std::vector<std::uint32_t>& pi) {
    const std::size_t n = pi.size();
    std::vector<bool> seen(n, false);
    for (auto v : pi) {
        if (v < 1 || v > n || seen[v - 1])
            throw invalid_input("not a permutation of {1..N}");
        seen[v - 1] = true;
    }
    PermRecord rec;
    rec.permutation = pi;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (pi[i] > pi[j]) ++rec.inversions;
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (pi[i] > pi[i + 1]) rec.descent_set.insert(static_cast<std::uint32_t>(i + 1));
    rec.descents = static_cast<std::uint32_t>(rec.descent_set.size());
    return rec;
}

const QPolynomial& DescentInvTable::polynomial_for(std::uint32_t t) const {
    static const QPolynomial zero;
    if (t >= by_descents_.size()) return zero;
    return by_descents_[t];
}

QPolynomial DescentInvTable::total() const {
    QPolynomial sum;
    for (const auto& p : by_descents_) sum += p;
    return sum;
}

QTPolynomial DescentInvTable::as_qt_polynomial() const {
    QTPolynomial out;
    for (std::uint32_t t = 0; t < by_descents_.size(); ++t)
        out += QTPolynomial(by_descents_[t], t);
    return out;
}

std::string DescentInvTable::to_csv() const {
    std::string out = "N,t,exponent,coefficient\n";
    for (std::uint32_t t = 0; t < by_descents_.size(); ++t) {
        const auto& coeffs = by_descents_[t].coefficients();
        for (std::size_t e = 0; e < coeffs.size(); ++e) {
            if (coeffs[e].is_zero()) continue;
            out += std::to_string(N_) + "," + std::to_string(t) + "," + std::to_string(e) +
                   "," + coeffs[e].to_string() + "\n";
        }
    }
    return out;
}

DescentInvTable descent_inv_table_by_enumeration(std::uint32_t N) {
    if (N > enumeration_threshold)
        throw invalid_input("enumeration limited to N <= " +
                            std::to_string(enumeration_threshold));
    const std::size_t t_slots = N >= 2 ? N : 1;
    const std::size_t max_inv = static_cast<std::size_t>(N) * (N ? N - 1 : 0) / 2;
    // Raw uint64 tallies; counts are bounded by N! which fits easily.
    std::vector<std::vector<std::uint64_t>> tally(t_slots,
                                                  std::vector<std::uint64_t>(max_inv + 1, 0));
    if (N == 0) {
        tally[0][0] = 1;
    } else {
        // Steinhaus-Johnson-Trotter walk: each step swaps one adjacent pair,
        // so inversions change by exactly one and descents only near the swap.
        std::vector<std::uint32_t> perm(N);
        std::vector<int> dir(N, -1); // direction per value index (value-1)
        std::vector<std::uint32_t> pos(N);
        for (std::uint32_t i = 0; i < N; ++i) perm[i] = i + 1, pos[i] = i;
        std::uint64_t inv = 0;
        std::uint32_t des = 0; // identity: no descents
        auto is_descent = [&](std::size_t i) { return perm[i] > perm[i + 1]; };
        for (;;) {
            tally[des][inv] += 1;
            // Largest mobile value: moving in its direction stays in range
            // and faces a smaller value.
            std::int64_t mobile = -1;
            for (std::int64_t v = static_cast<std::int64_t>(N) - 1; v >= 0; --v) {
                const std::int64_t p = pos[v];
                const std::int64_t q = p + dir[v];
                if (q < 0 || q >= static_cast<std::int64_t>(N)) continue;
                if (perm[q] < static_cast<std::uint32_t>(v) + 1) {
                    mobile = v;
                    break;
                }
            }
            if (mobile < 0) break;
            const std::size_t p = pos[mobile];
            const std::size_t q = static_cast<std::size_t>(static_cast<std::int64_t>(p) +
                                                           dir[mobile]);
            const std::size_t lo = std::min(p, q);
            // Descent bookkeeping around positions lo-1, lo, lo+1.
            std::uint32_t before = 0, after = 0;
            const std::size_t first = lo > 0 ? lo - 1 : lo;
            const std::size_t last = std::min(lo + 1, static_cast<std::size_t>(N) - 2);
            if (N >= 2)
                for (std::size_t i = first; i <= last; ++i) before += is_descent(i) ? 1 : 0;
            const bool was_ascent = perm[lo] < perm[lo + 1];
            std::swap(perm[p], perm[q]);
            std::swap(pos[perm[p] - 1], pos[perm[q] - 1]);
            if (N >= 2)
                for (std::size_t i = first; i <= last; ++i) after += is_descent(i) ? 1 : 0;
            des += after;
            des -= before;
            if (was_ascent)
                ++inv;
            else
                --inv;
            // Larger values flip direction.
            for (std::size_t v = static_cast<std::size_t>(mobile) + 1; v < N; ++v)
                dir[v] = -dir[v];
        }
    }
    std::vector<QPolynomial> rows;
    rows.reserve(t_slots);
    for (const auto& line : tally) {
        std::vector<BigInteger> coeffs;
        coeffs.reserve(line.size());
        for (auto c : line) coeffs.push_back(BigInteger(static_cast<unsigned long>(c)));
        rows.push_back(QPolynomial(std::move(coeffs)));
    }
    return DescentInvTable(N, std::move(rows));
}

namespace {

// comp(S) for S = {s1 < ... < sj}: consecutive differences padded with the
// final segment, (s1, s2-s1, ..., N-sj).
qcombi::Composition composition_from_descent_positions(std::uint32_t N,
                                                       const std::vector<std::uint32_t>& s) {
    std::vector<std::uint32_t> parts;
    parts.reserve(s.size() + 1);
    std::uint32_t prev = 0;
    for (auto v : s) {
        parts.push_back(v - prev);
        prev = v;
    }
    parts.push_back(N - prev);
    return qcombi::Composition(std::move(parts));
}

} // namespace

QPolynomial descent_class_inv_poly(std::uint32_t N, const std::set<std::uint32_t>& T) {
    for (auto v : T)
        if (v < 1 || v >= N)
            throw invalid_input("descent position " + std::to_string(v) +
                                " outside {1..N-1}");
    const std::vector<std::uint32_t> positions(T.begin(), T.end());
    const std::size_t t = positions.size();
    QPolynomial acc;
    // Subsets of T by bitmask; sign by inclusion-exclusion.
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << t); ++mask) {
        std::vector<std::uint32_t> chosen;
        for (std::size_t b = 0; b < t; ++b)
            if (mask & (std::uint64_t(1) << b)) chosen.push_back(positions[b]);
        const QPolynomial m =
            qcombi::q_multinomial(N, composition_from_descent_positions(N, chosen));
        if ((t - chosen.size()) % 2 == 0)
            acc += m;
        else
            acc -= m;
    }
    return acc;
}

DescentInvTable descent_inv_table_by_inclusion_exclusion(std::uint32_t N) {
    if (N > descent_table_cap)
        throw invalid_input("descent_inv_table limited to N <= " +
                            std::to_string(descent_table_cap));
    const std::size_t t_slots = N >= 2 ? N : 1;
    if (N == 0) return DescentInvTable(0, {QPolynomial(1L)});
    // Group the inclusion-exclusion by subset size: summing the class
    // polynomials of all T with |T| = t regroups to
    //   row_t = sum_s (-1)^(t-s) C(N-1-s, t-s) * (sum over |S| = s of [N; comp(S)]).
    const std::uint32_t positions = N - 1;
    std::vector<QPolynomial> by_size(positions + 1);
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << positions); ++mask) {
        std::vector<std::uint32_t> s;
        for (std::uint32_t b = 0; b < positions; ++b)
            if (mask & (std::uint64_t(1) << b)) s.push_back(b + 1);
        by_size[s.size()] +=
            qcombi::q_multinomial(N, composition_from_descent_positions(N, s));
    }
    std::vector<QPolynomial> rows(t_slots);
    for (std::uint32_t t = 0; t < t_slots; ++t) {
        for (std::uint32_t s = 0; s <= t; ++s) {
            const BigInteger weight = qcombi::binomial(static_cast<std::int64_t>(positions) - s,
                                                       static_cast<std::int64_t>(t) - s);
            const QPolynomial term = by_size[s].scaled(weight);
            if ((t - s) % 2 == 0)
                rows[t] += term;
            else
                rows[t] -= term;
        }
    }
    return DescentInvTable(N, std::move(rows));
}

DescentInvTable descent_inv_table(std::uint32_t N) {
    if (N <= enumeration_threshold) return descent_inv_table_by_enumeration(N);
    return descent_inv_table_by_inclusion_exclusion(N);
}

QPolynomial galois_via_macmahon(std::uint32_t N, std::uint32_t r) {
    if (r < 2) throw invalid_input("galois_via_macmahon requires r >= 2");
    const DescentInvTable table = descent_inv_table(N);
    QPolynomial acc;
    for (std::uint32_t t = 0; t <= table.descent_bound(); ++t) {
        const BigInteger weight =
            qcombi::binomial(static_cast<std::int64_t>(N) + r - 1 - t, N);
        acc += table.polynomial_for(t).scaled(weight);
    }
    return acc;
}

Rational mahonian_limit_gap(std::uint32_t N, std::uint32_t r) {
    if (N < 1 || r < 2) throw invalid_input("mahonian_limit_gap requires N >= 1, r >= 2");
    const QPolynomial g = galois_via_macmahon(N, r);
    const QPolynomial target = qcombi::q_factorial(N);
    const Rational scale(exact::factorial(N), BigInteger::pow(BigInteger(r), N));
    Rational gap;
    const std::size_t top = static_cast<std::size_t>(N) * (N - 1) / 2;
    for (std::size_t e = 0; e <= top; ++e) {
        const Rational diff =
            (scale * Rational(g.coeff(e)) - Rational(target.coeff(e))).abs();
        if (diff > gap) gap = diff;
    }
    return gap;
}

QTPolynomial deformed_galois(std::uint32_t N, std::uint32_t r) {
    if (r < 2) throw invalid_input("deformed_galois requires r >= 2");
    const DescentInvTable table = descent_inv_table(N);
    QTPolynomial acc;
    for (std::uint32_t t = 0; t <= table.descent_bound(); ++t) {
        const BigInteger weight =
            qcombi::binomial(static_cast<std::int64_t>(N) + r - 1 - t, N);
        acc += QTPolynomial(table.polynomial_for(t).scaled(weight), t);
    }
    return acc;
}

qpoly::TruncatedSeries<QTPolynomial> qbinomial_convolve(
    const qpoly::TruncatedSeries<QTPolynomial>& a,
    const qpoly::TruncatedSeries<QTPolynomial>& b) {
    if (a.order() != b.order()) throw invalid_input("series truncation orders differ");
    qpoly::TruncatedSeries<QTPolynomial> r(a.order());
    for (std::size_t n = 0; n <= a.order(); ++n) {
        QTPolynomial acc;
        for (std::size_t i = 0; i <= n; ++i) {
            const QTPolynomial weighted =
                QTPolynomial(qcombi::q_binomial(static_cast<std::uint32_t>(n),
                                                static_cast<std::int64_t>(i))) *
                a.coeff(i) * b.coeff(n - i);
            acc += weighted;
        }
        r.set_coeff(n, std::move(acc));
    }
    return r;
}

StanleyCheckReport stanley_identity_check(std::uint32_t order) {
    using Series = qpoly::TruncatedSeries<QTPolynomial>;
    // Scaled form: the u^n coefficient of each side is multiplied by
    // [n]_q!, turning every entry into a polynomial in q and t.
    Series lhs(order);
    for (std::uint32_t n = 0; n <= order; ++n)
        lhs.set_coeff(n, descent_inv_table(n).as_qt_polynomial());
    const QTPolynomial t_minus_one = QTPolynomial::monomial(BigInteger(1), 0, 1) -
                                     QTPolynomial(1L);
    Series denom(order);
    for (std::uint32_t n = 0; n <= order; ++n) {
        // Scaled coefficient of Exp_q(u(t-1)): q^(n(n-1)/2) (t-1)^n.
        QTPolynomial c = t_minus_one.pow(n);
        if (n >= 2)
            c = c * QTPolynomial(QPolynomial::monomial(BigInteger(1),
                                                       static_cast<std::size_t>(n) * (n - 1) / 2));
        if (n == 0) c -= QTPolynomial::monomial(BigInteger(1), 0, 1); // the "- t"
        denom.set_coeff(n, std::move(c));
    }
    const Series product = qbinomial_convolve(denom, lhs);
    QTPolynomial expected0(1L);
    expected0 -= QTPolynomial::monomial(BigInteger(1), 0, 1); // 1 - t
    StanleyCheckReport report;
    report.order = order;
    report.order_ok.resize(order + 1);
    for (std::uint32_t n = 0; n <= order; ++n) {
        const bool ok =
            n == 0 ? product.coeff(0) == expected0 : product.coeff(n).is_zero();
        report.order_ok[n] = ok;
        if (!ok) report.all_ok = false;
    }
    return report;
}

} // namespace permstat
} // namespace galoislab
