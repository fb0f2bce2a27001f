#include <doctest.h>

#include <map>
#include <set>

#include "galoislab/config.hpp"
#include "galoislab/errors.hpp"
#include "galoislab/q_combinatorics.hpp"
#include "galoislab/subspace_oracle.hpp"
#include "test_oracles.hpp"

using galoislab::cap_exceeded;
using galoislab::invalid_input;
using galoislab::exact::BigInteger;
using galoislab::oracle::canonical_subspace;
using galoislab::oracle::character_chi;
using galoislab::oracle::count_flags;
using galoislab::oracle::enumerate_subspaces;
using galoislab::oracle::is_prime;
using galoislab::oracle::PrimeFieldMatrix;
using galoislab::oracle::subspace_contains;
using galoislab::oracle::SubspaceId;
using galoislab::qcombi::galois_number;
using galoislab::qcombi::q_binomial;

TEST_SUITE_BEGIN("oracle");

TEST_CASE("primality helper") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(101));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(4));
    CHECK_FALSE(is_prime(91));
}

TEST_CASE("row reduction produces a canonical form") {
    // Two different spanning sets of the same plane in F_2^3.
    const auto a = canonical_subspace(2, 3, {{1, 0, 1}, {0, 1, 1}});
    const auto b = canonical_subspace(2, 3, {{1, 1, 0}, {0, 1, 1}});
    CHECK(a == b);
    CHECK(a.dim == 2);
    // Dependent rows collapse.
    const auto c = canonical_subspace(2, 3, {{1, 0, 1}, {1, 0, 1}, {0, 0, 0}});
    CHECK(c.dim == 1);
    CHECK_THROWS_AS(PrimeFieldMatrix(4, 2, 2), invalid_input);
}

TEST_CASE("subspace enumeration counts") {
    CHECK(enumerate_subspaces(2, 2).size() == 5);
    CHECK(enumerate_subspaces(3, 0).size() == 1);
    CHECK(enumerate_subspaces(2, 3).size() == 16);
    // All ids distinct.
    const auto lattice = enumerate_subspaces(3, 3);
    const std::set<SubspaceId> unique(lattice.begin(), lattice.end());
    CHECK(unique.size() == lattice.size());
}

TEST_CASE("enumeration agrees with the closure-subset oracle") {
    CHECK(enumerate_subspaces(2, 2).size() == test_oracles::subspace_count_by_closure(2, 2));
    CHECK(enumerate_subspaces(2, 3).size() == test_oracles::subspace_count_by_closure(2, 3));
    CHECK(enumerate_subspaces(2, 4).size() == test_oracles::subspace_count_by_closure(2, 4));
    CHECK(enumerate_subspaces(3, 2).size() == test_oracles::subspace_count_by_closure(3, 2));
}

TEST_CASE("per-dimension counts match gaussian binomial evaluations") {
    for (std::uint32_t q : {2u, 3u})
        for (std::uint32_t N = 0; N <= 5; ++N) {
            std::map<std::uint32_t, unsigned long> by_dim;
            for (const auto& id : enumerate_subspaces(q, N)) by_dim[id.dim] += 1;
            for (std::uint32_t k = 0; k <= N; ++k)
                CHECK(BigInteger(by_dim[k]) ==
                      q_binomial(N, k).eval_integer(BigInteger(q)));
        }
}

TEST_CASE("containment") {
    const auto whole = canonical_subspace(2, 3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    const auto line = canonical_subspace(2, 3, {{1, 1, 0}});
    const auto plane = canonical_subspace(2, 3, {{1, 1, 0}, {0, 0, 1}});
    const auto other_line = canonical_subspace(2, 3, {{1, 0, 1}});
    CHECK(subspace_contains(whole, plane));
    CHECK(subspace_contains(plane, line));
    CHECK(subspace_contains(line, line));
    CHECK_FALSE(subspace_contains(line, plane));
    CHECK_FALSE(subspace_contains(plane, other_line));
}

TEST_CASE("flag counts ground the galois polynomials") {
    // Chains 0 <= V_1 <= F_2^2: one middle subspace, five choices.
    CHECK(count_flags(2, 2, 2) == BigInteger(5));
    CHECK(count_flags(2, 2, 2) ==
          galois_number(2, 2).eval_integer(BigInteger(2)));
    // Length-1 chains are the trivial one.
    CHECK(count_flags(3, 2, 1) == BigInteger(1));
    CHECK(count_flags(2, 3, 3) == galois_number(3, 3).eval_integer(BigInteger(2)));
    for (std::uint32_t q : {2u, 3u})
        for (std::uint32_t N = 0; N <= 4; ++N)
            for (std::uint32_t r = 1; r <= 4; ++r)
                CHECK(count_flags(q, N, r) ==
                      galois_number(N, r).eval_integer(BigInteger(q)));
}

TEST_CASE("character values") {
    CHECK(character_chi(2, 2, {1, 2}) == BigInteger(5));
    CHECK(character_chi(2, 2, {2, 1}) == BigInteger(3));
    CHECK_THROWS_AS(character_chi(2, 2, {1, 1}), invalid_input);
    CHECK_THROWS_AS(character_chi(2, 3, {1, 2}), invalid_input);
}

TEST_CASE("character is constant on conjugacy classes") {
    // Conjugacy class = cycle type; collect chi over all of S_N and check
    // it only depends on the sorted cycle lengths.
    for (std::uint32_t q : {2u, 3u})
        for (std::uint32_t N = 2; N <= 4; ++N) {
            std::map<std::vector<std::uint32_t>, BigInteger> by_type;
            test_oracles::for_each_permutation(N, [&](const std::vector<std::uint32_t>& pi) {
                // Cycle type.
                std::vector<bool> seen(N, false);
                std::vector<std::uint32_t> type;
                for (std::uint32_t start = 0; start < N; ++start) {
                    if (seen[start]) continue;
                    std::uint32_t len = 0, cur = start;
                    while (!seen[cur]) {
                        seen[cur] = true;
                        cur = pi[cur] - 1;
                        ++len;
                    }
                    type.push_back(len);
                }
                std::sort(type.begin(), type.end());
                const BigInteger chi = character_chi(q, N, pi);
                auto [it, inserted] = by_type.emplace(type, chi);
                if (!inserted) CHECK(it->second == chi);
            });
        }
}

TEST_CASE("normalized character decreases toward the delta at the identity") {
    // Fixed transposition (2 1 3 4 ...): chi_N(tau)/G_N(2) strictly
    // decreases over N = 2..5.
    galoislab::exact::Rational prev;
    for (std::uint32_t N = 2; N <= 5; ++N) {
        std::vector<std::uint32_t> tau(N);
        for (std::uint32_t i = 0; i < N; ++i) tau[i] = i + 1;
        std::swap(tau[0], tau[1]);
        const galoislab::exact::Rational ratio(
            character_chi(2, N, tau),
            galois_number(N, 2).eval_integer(BigInteger(2)));
        if (N > 2) CHECK(ratio < prev);
        prev = ratio;
    }
}

TEST_CASE("caps are enforced") {
    CHECK_THROWS_AS(enumerate_subspaces(2, 30), cap_exceeded);
    const std::uint64_t old_cap = galoislab::max_cells();
    galoislab::set_max_cells(4);
    CHECK_THROWS_AS(enumerate_subspaces(2, 3), cap_exceeded);
    galoislab::set_max_cells(old_cap);
}

TEST_SUITE_END();
