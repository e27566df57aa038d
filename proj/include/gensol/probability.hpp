#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gensol/bitset.hpp"
#include "gensol/group.hpp"
#include "gensol/lattice.hpp"
#include "gensol/rational.hpp"

namespace gensol {

/// Smallest k such that some k elements generate G together with X.
int d_X(const CayleyGroup& g, std::span<const Elem> x);

/// P_{G,N}(X, k) by enumerating ordered k-tuples: the number of tuples that
/// generate G with X over the number that generate G with X modulo N.
/// Requires |G|^k <= 2^24 (TooLarge otherwise). Throws NoTupleGeneratesModN
/// when the denominator is zero and NotNormal when N is not normal.
Rational p_gn_brute(const CayleyGroup& g, const Bitset& n, std::span<const Elem> x, int k);

/// The same probability as a Moebius sum over X <= H <= G with HN = G.
/// Throws NoTupleGeneratesModN when the conditioning event is empty.
Rational p_gn_moebius(const CayleyGroup& g, const SubgroupLattice& lattice, const Bitset& n,
                      std::span<const Elem> x, int k);

/// Number of tuples (g_1 n_1, ..., g_k n_k), n_i in N, generating G with X.
/// Throws BaseDoesNotGenerateModN unless <base, X> N = G.
std::uint64_t count_lifts(const CayleyGroup& g, const Bitset& n, std::span<const Elem> x,
                          std::span<const Elem> base);

/// #{H <= G : HN = G, H meet N = 1, X in H}.
std::uint64_t count_complements_containing(const CayleyGroup& g, const SubgroupLattice& lattice,
                                           const Bitset& n, std::span<const Elem> x);

/// Subgroup generated by `gens` together with the members of `extra`.
Bitset generated_with(const CayleyGroup& g, std::span<const Elem> gens, const Bitset& extra);

}  // namespace gensol
