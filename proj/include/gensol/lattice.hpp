#pragma once

#include <optional>
#include <vector>

#include "gensol/bitset.hpp"
#include "gensol/group.hpp"

namespace gensol {

/// Every subgroup of a small group, sorted by order (trivial first, G last),
/// with the Moebius value mu(H, G) of each.
struct SubgroupLattice {
  static constexpr std::size_t kCeiling = 200;

  std::vector<Bitset> subgroups;
  std::vector<std::size_t> orders;
  std::vector<long long> mobius;

  std::size_t size() const noexcept { return subgroups.size(); }
  std::optional<std::size_t> index_of(const Bitset& h) const;
};

/// Joins of cyclic subgroups, closed breadth-first. Throws CeilingExceeded for
/// |G| > 200.
SubgroupLattice subgroup_lattice(const CayleyGroup& g);

/// Intersection of the maximal subgroups.
Bitset frattini_subgroup(const CayleyGroup& g, const SubgroupLattice& lattice);

struct NormalSubgroupHandle {
  Bitset members;
  bool normal = false;
  bool abelian = false;
  bool minimal_normal = false;
  /// |End_G(N)| for abelian minimal normal N.
  std::optional<long long> end_ring_order;

  std::size_t order() const { return members.count(); }
};

std::vector<NormalSubgroupHandle> normal_subgroups(const CayleyGroup& g, const SubgroupLattice& lattice);
std::vector<NormalSubgroupHandle> minimal_normal_subgroups(const CayleyGroup& g,
                                                           const SubgroupLattice& lattice);

/// |End_G(N)| for an abelian minimal normal subgroup N with |N| <= 256: the
/// number of additive endomorphisms of N commuting with conjugation by G.
/// Computed as q = p^dim of the solution space of the commuting equations.
long long end_ring_order(const CayleyGroup& g, const Bitset& n);

/// Coordinates of the elementary abelian p-group N: a basis b_1..b_d and the
/// coordinate vector of each element over GF(p).
struct ElementaryAbelian {
  int p = 0;
  int dim = 0;
  std::vector<Elem> basis;
  /// coords[x] for x in N (indexed by element), empty for elements outside N.
  std::vector<std::vector<int>> coords;
  /// Element with the given coordinates.
  Elem element(const std::vector<int>& c, const CayleyGroup& g) const;
};
ElementaryAbelian elementary_abelian_coordinates(const CayleyGroup& g, const Bitset& n);

}  // namespace gensol
