#include "gensol/probability.hpp"

#include <algorithm>

namespace gensol {
namespace {

constexpr std::uint64_t kTupleCeiling = std::uint64_t{1} << 24;

std::uint64_t checked_power(std::uint64_t base, int k) {
  std::uint64_t out = 1;
  for (int i = 0; i < k; ++i) {
    if (base != 0 && out > kTupleCeiling / base) return kTupleCeiling + 1;
    out *= base;
  }
  return out;
}

void require_normal(const CayleyGroup& g, const Bitset& n) {
  if (generated_subgroup(g, n) != n) throw Error(ErrorCode::NotNormal, "N is not a subgroup");
  if (!is_normal(g, n)) throw Error(ErrorCode::NotNormal, "N is not normal");
}

// Advances an odometer over G^k; false after the last tuple.
bool next_tuple(std::vector<Elem>& t, std::size_t order) {
  for (std::size_t i = t.size(); i-- > 0;) {
    if (++t[i] < order) return true;
    t[i] = 0;
  }
  return false;
}

bool combinations_generate(const CayleyGroup& g, std::vector<Elem>& pool, std::size_t start, int left) {
  if (left == 0) return generates(g, pool);
  for (Elem e = static_cast<Elem>(start); e < g.order(); ++e) {
    if (e == g.identity()) continue;
    pool.push_back(e);
    const bool ok = combinations_generate(g, pool, e + 1, left - 1);
    pool.pop_back();
    if (ok) return true;
  }
  return false;
}

}  // namespace

Bitset generated_with(const CayleyGroup& g, std::span<const Elem> gens, const Bitset& extra) {
  std::vector<Elem> all(gens.begin(), gens.end());
  for (Elem e : with_generators(g, extra).gens) all.push_back(e);
  return generated_subgroup(g, all);
}

int d_X(const CayleyGroup& g, std::span<const Elem> x) {
  if (g.order() > CayleyGroup::kTableCeiling) throw Error(ErrorCode::CeilingExceeded, "d_X needs |G| <= 5000");
  std::vector<Elem> pool(x.begin(), x.end());
  for (int k = 0;; ++k)
    if (combinations_generate(g, pool, 0, k)) return k;
}

Rational p_gn_brute(const CayleyGroup& g, const Bitset& n, std::span<const Elem> x, int k) {
  if (k < 1) throw Error(ErrorCode::PreconditionViolated, "k must be positive");
  if (checked_power(g.order(), k) > kTupleCeiling) throw Error(ErrorCode::TooLarge, "|G|^k exceeds 2^24");
  require_normal(g, n);
  const std::vector<Elem> n_gens = with_generators(g, n).gens;

  std::vector<Elem> tuple(k, 0);
  std::vector<Elem> gens;
  std::uint64_t num = 0, den = 0;
  do {
    gens.assign(tuple.begin(), tuple.end());
    gens.insert(gens.end(), x.begin(), x.end());
    const std::size_t base_size = gens.size();
    gens.insert(gens.end(), n_gens.begin(), n_gens.end());
    if (!generates(g, gens)) continue;
    ++den;
    gens.resize(base_size);
    if (generates(g, gens)) ++num;
  } while (next_tuple(tuple, g.order()));
  if (den == 0) throw Error(ErrorCode::NoTupleGeneratesModN, "no k-tuple generates G with X modulo N");
  return Rational(BigInt(num), BigInt(den));
}

Rational p_gn_moebius(const CayleyGroup& g, const SubgroupLattice& lattice, const Bitset& n,
                      std::span<const Elem> x, int k) {
  if (k < 1) throw Error(ErrorCode::PreconditionViolated, "k must be positive");
  require_normal(g, n);
  const std::size_t order = g.order();
  const std::size_t n_order = n.count();
  Rational sum = 0, modulo_n = 0;
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    const Bitset& h = lattice.subgroups[i];
    if (!std::all_of(x.begin(), x.end(), [&](Elem e) { return h.test(e); })) continue;
    const std::size_t meet = (h & n).count();
    // Subgroups above N give the probability of generating G/N with XN/N.
    if (meet == n_order)
      modulo_n += Rational(BigInt(lattice.mobius[i]), pow(BigInt(order / lattice.orders[i]), k));
    if (lattice.orders[i] * n_order != order * meet) continue;  // |HN| = |G|
    const BigInt index = BigInt(order / lattice.orders[i]);
    sum += Rational(BigInt(lattice.mobius[i]), pow(index, k));
  }
  if (modulo_n == 0) throw Error(ErrorCode::NoTupleGeneratesModN, "no k-tuple generates G with X modulo N");
  return sum;
}

std::uint64_t count_lifts(const CayleyGroup& g, const Bitset& n, std::span<const Elem> x,
                          std::span<const Elem> base) {
  require_normal(g, n);
  const int k = static_cast<int>(base.size());
  if (checked_power(n.count(), k) > kTupleCeiling) throw Error(ErrorCode::TooLarge, "|N|^k exceeds 2^24");
  std::vector<Elem> gens(base.begin(), base.end());
  gens.insert(gens.end(), x.begin(), x.end());
  if (generated_with(g, gens, n).count() != g.order())
    throw Error(ErrorCode::BaseDoesNotGenerateModN, "base tuple does not generate G with X modulo N");

  const std::vector<std::size_t> members = n.members();
  std::vector<Elem> offset(k, 0);
  std::uint64_t count = 0;
  do {
    for (int i = 0; i < k; ++i) gens[i] = g.mul(base[i], static_cast<Elem>(members[offset[i]]));
    if (generates(g, gens)) ++count;
  } while (next_tuple(offset, members.size()));
  return count;
}

std::uint64_t count_complements_containing(const CayleyGroup& g, const SubgroupLattice& lattice,
                                           const Bitset& n, std::span<const Elem> x) {
  const std::size_t n_order = n.count();
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    const Bitset& h = lattice.subgroups[i];
    if (lattice.orders[i] * n_order != g.order()) continue;
    if ((h & n).count() != 1) continue;
    if (std::all_of(x.begin(), x.end(), [&](Elem e) { return h.test(e); })) ++count;
  }
  return count;
}

}  // namespace gensol
