#include "galoislab/subspace_oracle.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "galoislab/config.hpp"
#include "galoislab/errors.hpp"

namespace galoislab {
namespace oracle {

namespace {

std::uint32_t field_inverse(std::uint32_t a, std::uint32_t q) {
    // Extended Euclid; q prime, 0 < a < q.
    std::int64_t t = 0, new_t = 1, r = q, new_r = a;
    while (new_r != 0) {
        const std::int64_t quot = r / new_r;
        std::tie(t, new_t) = std::make_tuple(new_t, t - quot * new_t);
        std::tie(r, new_r) = std::make_tuple(new_r, r - quot * new_r);
    }
    if (t < 0) t += q;
    return static_cast<std::uint32_t>(t);
}

} // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

PrimeFieldMatrix::PrimeFieldMatrix(std::uint32_t q, std::size_t rows, std::size_t cols)
    : q_(q), cols_(cols), rows_(rows, std::vector<std::uint32_t>(cols, 0)) {
    if (!is_prime(q)) throw invalid_input(std::to_string(q) + " is not prime");
}

std::size_t PrimeFieldMatrix::reduce() {
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols_ && pivot_row < rows_.size(); ++col) {
        std::size_t found = pivot_row;
        while (found < rows_.size() && rows_[found][col] == 0) ++found;
        if (found == rows_.size()) continue;
        std::swap(rows_[pivot_row], rows_[found]);
        const std::uint64_t inv = field_inverse(rows_[pivot_row][col], q_);
        for (auto& v : rows_[pivot_row])
            v = static_cast<std::uint32_t>(v * inv % q_);
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (r == pivot_row || rows_[r][col] == 0) continue;
            const std::uint64_t factor = q_ - rows_[r][col]; // add factor * pivot row
            for (std::size_t c = 0; c < cols_; ++c)
                rows_[r][c] = static_cast<std::uint32_t>(
                    (rows_[r][c] + factor * rows_[pivot_row][c]) % q_);
        }
        ++pivot_row;
    }
    return pivot_row;
}

bool operator<(const SubspaceId& a, const SubspaceId& b) {
    return std::tie(a.q, a.ambient_dim, a.dim, a.basis) <
           std::tie(b.q, b.ambient_dim, b.dim, b.basis);
}

SubspaceId canonical_subspace(std::uint32_t q, std::uint32_t ambient_dim,
                              const std::vector<std::vector<std::uint32_t>>& spanning_rows) {
    PrimeFieldMatrix m(q, spanning_rows.size(), ambient_dim);
    for (std::size_t r = 0; r < spanning_rows.size(); ++r)
        for (std::size_t c = 0; c < ambient_dim; ++c) m.set(r, c, spanning_rows[r][c]);
    const std::size_t rank = m.reduce();
    SubspaceId id;
    id.q = q;
    id.ambient_dim = ambient_dim;
    id.dim = static_cast<std::uint32_t>(rank);
    id.basis.reserve(rank * ambient_dim);
    for (std::size_t r = 0; r < rank; ++r)
        id.basis.insert(id.basis.end(), m.row(r).begin(), m.row(r).end());
    return id;
}

std::vector<SubspaceId> enumerate_subspaces(std::uint32_t q, std::uint32_t N) {
    if (!is_prime(q)) throw invalid_input(std::to_string(q) + " is not prime");
    const std::uint64_t hard_cap = std::min<std::uint64_t>(max_cells(), std::uint64_t(1) << 18);
    // q^N vectors, checked against the cap before any work.
    std::uint64_t vectors = 1;
    for (std::uint32_t i = 0; i < N; ++i) {
        if (vectors > hard_cap / q)
            throw cap_exceeded("q^N exceeds the enumeration cap of " +
                               std::to_string(hard_cap) + " vectors");
        vectors *= q;
    }
    if (vectors > hard_cap)
        throw cap_exceeded("q^N exceeds the enumeration cap of " + std::to_string(hard_cap) +
                           " vectors");
    // Also bound the output: total subspace count via the stepwise product
    // (q^(N-i)-1)/(q^(i+1)-1), exact at every step.
    {
        BigInteger total(0);
        const BigInteger bq(static_cast<unsigned long>(q));
        BigInteger level(1);
        for (std::uint32_t k = 0; k <= N; ++k) {
            if (k > 0) {
                const BigInteger num = BigInteger::pow(bq, N - k + 1) - BigInteger(1);
                const BigInteger den = BigInteger::pow(bq, k) - BigInteger(1);
                level = (level * num).div_exact(den);
            }
            total += level;
        }
        if (total > BigInteger(static_cast<unsigned long>(max_cells())))
            throw cap_exceeded("subspace lattice of F_" + std::to_string(q) + "^" +
                               std::to_string(N) + " has " + total.to_string() +
                               " elements, cap is " + std::to_string(max_cells()));
    }

    std::vector<SubspaceId> out;
    // Dimension k subspaces are exactly the k x N matrices in reduced
    // row-echelon form of full rank: pick pivot columns, then fill the
    // free entries arbitrarily. Each subspace appears once since RREF is
    // canonical.
    for (std::uint32_t k = 0; k <= N; ++k) {
        if (k == 0) {
            SubspaceId zero;
            zero.q = q;
            zero.ambient_dim = N;
            zero.dim = 0;
            out.push_back(std::move(zero));
            continue;
        }
        // Pivot column combinations in lexicographic order.
        std::vector<std::uint32_t> pivots(k);
        for (std::uint32_t i = 0; i < k; ++i) pivots[i] = i;
        for (;;) {
            // Free coordinates: row i, column c with c > pivots[i] and c not
            // a pivot column of any row.
            std::vector<bool> is_pivot(N, false);
            for (auto p : pivots) is_pivot[p] = true;
            std::vector<std::pair<std::uint32_t, std::uint32_t>> free_slots;
            for (std::uint32_t i = 0; i < k; ++i)
                for (std::uint32_t c = pivots[i] + 1; c < N; ++c)
                    if (!is_pivot[c]) free_slots.emplace_back(i, c);
            std::vector<std::uint32_t> fill(free_slots.size(), 0);
            for (;;) {
                SubspaceId id;
                id.q = q;
                id.ambient_dim = N;
                id.dim = k;
                id.basis.assign(static_cast<std::size_t>(k) * N, 0);
                for (std::uint32_t i = 0; i < k; ++i)
                    id.basis[static_cast<std::size_t>(i) * N + pivots[i]] = 1;
                for (std::size_t s = 0; s < free_slots.size(); ++s)
                    id.basis[static_cast<std::size_t>(free_slots[s].first) * N +
                             free_slots[s].second] = fill[s];
                out.push_back(std::move(id));
                // Odometer over the free entries.
                std::size_t pos = 0;
                while (pos < fill.size()) {
                    if (++fill[pos] < q) break;
                    fill[pos] = 0;
                    ++pos;
                }
                if (pos == fill.size()) break;
            }
            // Next pivot combination.
            std::int64_t idx = static_cast<std::int64_t>(k) - 1;
            while (idx >= 0 && pivots[idx] == N - k + idx) --idx;
            if (idx < 0) break;
            ++pivots[idx];
            for (std::size_t j = idx + 1; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool subspace_contains(const SubspaceId& outer, const SubspaceId& inner) {
    if (inner.dim > outer.dim) return false;
    if (inner.dim == 0) return true;
    const std::uint32_t q = outer.q;
    const std::uint32_t n = outer.ambient_dim;
    // Reduce each basis row of `inner` against the RREF basis of `outer`.
    for (std::uint32_t r = 0; r < inner.dim; ++r) {
        std::vector<std::uint32_t> v(inner.basis.begin() + static_cast<std::size_t>(r) * n,
                                     inner.basis.begin() + static_cast<std::size_t>(r + 1) * n);
        for (std::uint32_t orow = 0; orow < outer.dim; ++orow) {
            // Pivot of this outer row: first nonzero column.
            std::uint32_t pcol = 0;
            while (pcol < n && outer.basis[static_cast<std::size_t>(orow) * n + pcol] == 0)
                ++pcol;
            if (pcol >= n || v[pcol] == 0) continue;
            const std::uint64_t factor = q - v[pcol];
            for (std::uint32_t c = 0; c < n; ++c)
                v[c] = static_cast<std::uint32_t>(
                    (v[c] + factor * outer.basis[static_cast<std::size_t>(orow) * n + c]) % q);
        }
        for (auto entry : v)
            if (entry != 0) return false;
    }
    return true;
}

BigInteger count_flags(std::uint32_t q, std::uint32_t N, std::uint32_t r) {
    if (r < 1) throw invalid_input("count_flags requires r >= 1");
    const std::vector<SubspaceId> lattice = enumerate_subspaces(q, N);
    const std::size_t n = lattice.size();
    // contains[i] lists j with lattice[i] <= lattice[j].
    std::vector<std::vector<std::size_t>> supersets(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (subspace_contains(lattice[j], lattice[i])) supersets[i].push_back(j);
    // chains[v] = number of weakly increasing chains of the remaining
    // length from lattice[v] up to the full space.
    std::size_t zero_index = 0, full_index = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (lattice[i].dim == 0) zero_index = i;
        if (lattice[i].dim == N) full_index = i;
    }
    std::vector<BigInteger> chains(n, BigInteger(0));
    chains[full_index] = BigInteger(1);
    for (std::uint32_t step = 0; step < r; ++step) {
        std::vector<BigInteger> next(n, BigInteger(0));
        for (std::size_t v = 0; v < n; ++v)
            for (auto w : supersets[v]) next[v] += chains[w];
        chains = std::move(next);
    }
    return chains[zero_index];
}

BigInteger character_chi(std::uint32_t q, std::uint32_t N,
                         const std::vector<std::uint32_t>& tau) {
    if (tau.size() != N) throw invalid_input("permutation length must equal N");
    {
        std::vector<bool> seen(N, false);
        for (auto v : tau) {
            if (v < 1 || v > N || seen[v - 1]) throw invalid_input("not a permutation of {1..N}");
            seen[v - 1] = true;
        }
    }
    const std::vector<SubspaceId> lattice = enumerate_subspaces(q, N);
    BigInteger fixed(0);
    for (const auto& id : lattice) {
        // Apply tau to each basis vector: coordinate i moves to tau(i).
        std::vector<std::vector<std::uint32_t>> rows(id.dim,
                                                     std::vector<std::uint32_t>(N, 0));
        for (std::uint32_t rrow = 0; rrow < id.dim; ++rrow)
            for (std::uint32_t c = 0; c < N; ++c)
                rows[rrow][tau[c] - 1] = id.basis[static_cast<std::size_t>(rrow) * N + c];
        if (canonical_subspace(q, N, rows) == id) fixed += BigInteger(1);
    }
    return fixed;
}

} // namespace oracle
} // namespace galoislab
