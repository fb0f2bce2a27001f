#include "galoislab/q_combinatorics.hpp"

#include <mutex>
#include <utility>

#include "galoislab/config.hpp"
#include "galoislab/errors.hpp"

namespace galoislab {
namespace qcombi {

BigInteger binomial(std::int64_t a, std::int64_t b) {
    if (b < 0 || b > a) return BigInteger(0);
    BigInteger r(1);
    // C(a, b) built as C(a-b+i, i) for i = 1..b; each step divides exactly.
    for (std::int64_t i = 1; i <= b; ++i) {
        r *= BigInteger(a - b + i);
        r = r.div_exact(BigInteger(i));
    }
    return r;
}

QPolynomial q_factorial(std::uint32_t k) {
    QPolynomial r(1L);
    for (std::uint32_t i = 2; i <= k; ++i) {
        std::vector<BigInteger> ones(i, BigInteger(1));
        r *= QPolynomial(std::move(ones));
    }
    return r;
}

std::vector<QPolynomial> q_binomial_row(std::uint32_t n) {
    std::vector<QPolynomial> row{QPolynomial(1L)};
    for (std::uint32_t m = 1; m <= n; ++m) {
        std::vector<QPolynomial> next(m + 1);
        next[0] = QPolynomial(1L);
        next[m] = QPolynomial(1L);
        for (std::uint32_t k = 1; k < m; ++k) {
            // [m;k] = [m-1;k-1] + q^k [m-1;k]
            next[k] = row[k - 1];
            next[k].add_scaled_shifted(row[k], BigInteger(1), k);
        }
        row = std::move(next);
    }
    return row;
}

namespace {

// Row cache for the Pascal recurrence; rows are small and reused heavily
// by q_multinomial and the expansion builders.
const std::vector<QPolynomial>& cached_row(std::uint32_t n) {
    static std::map<std::uint32_t, std::vector<QPolynomial>> cache;
    static std::mutex lock;
    std::lock_guard<std::mutex> guard(lock);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, q_binomial_row(n)).first;
    return it->second;
}

} // namespace

QPolynomial q_binomial(std::uint32_t n, std::int64_t k) {
    if (k < 0 || k > static_cast<std::int64_t>(n)) return QPolynomial();
    return cached_row(n)[static_cast<std::size_t>(k)];
}

QPolynomial q_multinomial(std::uint32_t N, const Composition& k) {
    if (k.sum() != N) return QPolynomial();
    QPolynomial r(1L);
    std::uint32_t partial = 0;
    for (auto part : k.parts()) {
        partial += part;
        r *= q_binomial(partial, part);
    }
    return r;
}

const QPolynomial& RogersSzegoExpansion::coefficient(const Composition& k) const {
    auto it = entries_.find(k);
    if (it == entries_.end())
        throw invalid_input("composition " + k.to_string() + " is not a key of H_" +
                            std::to_string(N_) + "^(" + std::to_string(r_) + ")");
    return it->second;
}

QPolynomial RogersSzegoExpansion::specialize_all_one() const {
    QPolynomial total;
    for (const auto& [k, p] : entries_) total += p;
    return total;
}

std::map<std::int64_t, QPolynomial> RogersSzegoExpansion::specialize_z_zinv() const {
    if (r_ != 2) throw invalid_input("z, z^-1 specialization requires r = 2");
    std::map<std::int64_t, QPolynomial> out;
    for (const auto& [k, p] : entries_) {
        const std::int64_t z_exp =
            static_cast<std::int64_t>(k[0]) - static_cast<std::int64_t>(k[1]);
        out[z_exp] += p;
    }
    return out;
}

std::string RogersSzegoExpansion::to_json() const {
    std::string out = "[";
    bool first = true;
    for (const auto& [k, p] : entries_) {
        if (!first) out += ",";
        first = false;
        out += "{\"composition\":[";
        for (std::size_t i = 0; i < k.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(k[i]);
        }
        out += "],\"coefficients\":" + p.to_json() + "}";
    }
    return out + "]";
}

RogersSzegoExpansion rogers_szego(std::uint32_t N, std::uint32_t r) {
    if (r < 1) throw invalid_input("rogers_szego requires r >= 1");
    const std::uint64_t cells = composition_count(N, r);
    if (cells > max_cells())
        throw cap_exceeded("rogers_szego(" + std::to_string(N) + ", " + std::to_string(r) +
                           ") needs " + std::to_string(cells) + " entries, cap is " +
                           std::to_string(max_cells()));
    std::map<Composition, QPolynomial> entries;
    for_each_composition(N, r, [&](const std::vector<std::uint32_t>& parts) {
        Composition k(parts);
        entries.emplace_hint(entries.end(), k, q_multinomial(N, k));
    });
    return RogersSzegoExpansion(N, r, std::move(entries));
}

QPolynomial galois_number(std::uint32_t N, std::uint32_t r) {
    if (r < 1) throw invalid_input("galois_number requires r >= 1");
    if (r == 1) return QPolynomial(1L);
    // Flag recurrence, walking levels 2..r. All levels below the last are
    // needed for every dimension m <= N; the last level only at m = N.
    std::vector<QPolynomial> level(N + 1, QPolynomial(1L));
    for (std::uint32_t step = 2; step < r; ++step) {
        std::vector<QPolynomial> next(N + 1);
        std::vector<QPolynomial> row{QPolynomial(1L)}; // Pascal row m = 0
        for (std::uint32_t m = 0; m <= N; ++m) {
            if (m > 0) {
                std::vector<QPolynomial> grown(m + 1);
                grown[0] = QPolynomial(1L);
                grown[m] = QPolynomial(1L);
                for (std::uint32_t k = 1; k < m; ++k) {
                    grown[k] = row[k - 1];
                    grown[k].add_scaled_shifted(row[k], BigInteger(1), k);
                }
                row = std::move(grown);
            }
            QPolynomial acc;
            for (std::uint32_t j = 0; j <= m; ++j) acc += row[j] * level[j];
            next[m] = std::move(acc);
        }
        level = std::move(next);
    }
    const std::vector<QPolynomial> row = q_binomial_row(N);
    QPolynomial result;
    for (std::uint32_t j = 0; j <= N; ++j) result += row[j] * level[j];
    return result;
}

QPolynomial galois_number_by_definition(std::uint32_t N, std::uint32_t r) {
    if (r < 1) throw invalid_input("galois_number requires r >= 1");
    QPolynomial total;
    for_each_composition(N, r, [&](const std::vector<std::uint32_t>& parts) {
        total += q_multinomial(N, Composition(parts));
    });
    return total;
}

BigInteger partition_count(std::uint32_t N, std::uint32_t r) {
    return binomial(static_cast<std::int64_t>(N) + r, N);
}

BigInteger partition_count_with_forced_sizes(std::uint32_t N, std::uint32_t r,
                                             const std::set<std::uint32_t>& T) {
    for (auto size : T)
        if (size < 1 || size > N)
            throw invalid_input("forced part size " + std::to_string(size) +
                                " outside {1, ..., N}");
    const std::int64_t t = static_cast<std::int64_t>(T.size());
    return binomial(static_cast<std::int64_t>(N) + r - t, N);
}

} // namespace qcombi
} // namespace galoislab
