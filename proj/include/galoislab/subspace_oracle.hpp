#ifndef GALOISLAB_SUBSPACE_ORACLE_HPP
#define GALOISLAB_SUBSPACE_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "galoislab/big_integer.hpp"

namespace galoislab {
namespace oracle {

using exact::BigInteger;

// Dense matrix over the prime field F_q, entries reduced mod q.
class PrimeFieldMatrix {
public:
    PrimeFieldMatrix(std::uint32_t q, std::size_t rows, std::size_t cols);

    std::uint32_t q() const { return q_; }
    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    std::uint32_t at(std::size_t r, std::size_t c) const { return rows_[r][c]; }
    void set(std::size_t r, std::size_t c, std::uint32_t v) { rows_[r][c] = v % q_; }
    const std::vector<std::uint32_t>& row(std::size_t r) const { return rows_[r]; }

    // In-place reduction to reduced row-echelon form; returns the rank.
    std::size_t reduce();

private:
    std::uint32_t q_;
    std::size_t cols_;
    std::vector<std::vector<std::uint32_t>> rows_;
};

// Canonical identifier of a subspace of F_q^N: its reduced row-echelon
// basis, flattened. Equal subspaces have bitwise equal ids.
struct SubspaceId {
    std::uint32_t q = 0;
    std::uint32_t ambient_dim = 0;
    std::uint32_t dim = 0;
    std::vector<std::uint32_t> basis; // dim x ambient_dim, row-major RREF

    friend bool operator==(const SubspaceId& a, const SubspaceId& b) {
        return a.q == b.q && a.ambient_dim == b.ambient_dim && a.dim == b.dim &&
               a.basis == b.basis;
    }
    friend bool operator<(const SubspaceId& a, const SubspaceId& b);
};

// Canonicalize the row space of the given spanning rows.
SubspaceId canonical_subspace(std::uint32_t q, std::uint32_t ambient_dim,
                              const std::vector<std::vector<std::uint32_t>>& spanning_rows);

// All subspaces of F_q^N, each exactly once, ordered by dimension then
// canonical form. q must be prime; refuses when q^N exceeds max_cells()
// or 2^18, whichever is smaller.
std::vector<SubspaceId> enumerate_subspaces(std::uint32_t q, std::uint32_t N);

// True when the row space of `inner` is contained in the subspace `outer`.
bool subspace_contains(const SubspaceId& outer, const SubspaceId& inner);

// Number of chains 0 = V_0 <= V_1 <= ... <= V_r = F_q^N (repetitions
// allowed), counted by memoized descent over the enumerated lattice.
BigInteger count_flags(std::uint32_t q, std::uint32_t N, std::uint32_t r);

// chi_N(tau) = #{ V <= F_q^N : tau V = V } for the coordinate permutation
// tau (one-line form on {1..N}).
BigInteger character_chi(std::uint32_t q, std::uint32_t N,
                         const std::vector<std::uint32_t>& tau);

bool is_prime(std::uint64_t n);

} // namespace oracle
} // namespace galoislab

#endif
