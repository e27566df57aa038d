#include "gensol/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "gensol/matrix.hpp"

namespace gensol {

std::optional<std::size_t> SubgroupLattice::index_of(const Bitset& h) const {
  for (std::size_t i = 0; i < subgroups.size(); ++i)
    if (subgroups[i] == h) return i;
  return std::nullopt;
}

SubgroupLattice subgroup_lattice(const CayleyGroup& g) {
  if (g.order() > SubgroupLattice::kCeiling)
    throw Error(ErrorCode::CeilingExceeded, "subgroup lattice limited to order 200");

  std::unordered_set<Bitset, BitsetHash> seen;
  std::vector<Bitset> all;
  std::vector<Bitset> cyclic;
  for (Elem x = 0; x < g.order(); ++x) {
    const Elem gens[1] = {x};
    Bitset c = generated_subgroup(g, gens);
    if (seen.insert(c).second) {
      all.push_back(c);
      cyclic.push_back(c);
    }
  }
  // Every subgroup is a join of cyclic subgroups.
  for (std::size_t head = 0; head < all.size(); ++head) {
    for (const Bitset& c : cyclic) {
      if (c.is_subset_of(all[head])) continue;
      Bitset join = generated_subgroup(g, all[head] | c);
      if (seen.insert(join).second) all.push_back(std::move(join));
    }
  }

  std::vector<std::size_t> order(all.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::size_t> sizes(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) sizes[i] = all[i].count();
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (sizes[a] != sizes[b]) return sizes[a] < sizes[b];
    return all[a].members() < all[b].members();
  });

  SubgroupLattice lattice;
  for (std::size_t i : order) {
    lattice.subgroups.push_back(all[i]);
    lattice.orders.push_back(sizes[i]);
  }
  const std::size_t count = lattice.size();
  lattice.mobius.assign(count, 0);
  lattice.mobius[count - 1] = 1;
  for (std::size_t i = count - 1; i-- > 0;) {
    long long sum = 0;
    for (std::size_t j = i + 1; j < count; ++j)
      if (lattice.orders[j] > lattice.orders[i] && lattice.subgroups[i].is_subset_of(lattice.subgroups[j]))
        sum += lattice.mobius[j];
    lattice.mobius[i] = -sum;
  }
  return lattice;
}

Bitset frattini_subgroup(const CayleyGroup& g, const SubgroupLattice& lattice) {
  const std::size_t count = lattice.size();
  Bitset result = lattice.subgroups[count - 1];
  for (std::size_t i = 0; i + 1 < count; ++i) {
    bool maximal = true;
    for (std::size_t j = i + 1; j + 1 < count && maximal; ++j)
      if (lattice.orders[j] > lattice.orders[i] && lattice.subgroups[i].is_subset_of(lattice.subgroups[j]))
        maximal = false;
    if (maximal) result &= lattice.subgroups[i];
  }
  (void)g;
  return result;
}

std::vector<NormalSubgroupHandle> normal_subgroups(const CayleyGroup& g, const SubgroupLattice& lattice) {
  std::vector<NormalSubgroupHandle> out;
  for (const Bitset& h : lattice.subgroups) {
    if (!is_normal(g, h)) continue;
    NormalSubgroupHandle handle;
    handle.members = h;
    handle.normal = true;
    handle.abelian = is_abelian(g, with_generators(g, h));
    out.push_back(std::move(handle));
  }
  for (auto& n : out) {
    if (n.order() == 1) continue;
    n.minimal_normal = true;
    for (const auto& m : out)
      if (m.order() > 1 && m.order() < n.order() && m.members.is_subset_of(n.members)) n.minimal_normal = false;
    if (n.minimal_normal && n.abelian && n.order() <= 256) n.end_ring_order = end_ring_order(g, n.members);
  }
  return out;
}

std::vector<NormalSubgroupHandle> minimal_normal_subgroups(const CayleyGroup& g,
                                                           const SubgroupLattice& lattice) {
  std::vector<NormalSubgroupHandle> out;
  for (auto& n : normal_subgroups(g, lattice))
    if (n.minimal_normal) out.push_back(std::move(n));
  return out;
}

Elem ElementaryAbelian::element(const std::vector<int>& c, const CayleyGroup& g) const {
  Elem x = g.identity();
  for (int i = 0; i < dim; ++i)
    for (int k = 0; k < c[i]; ++k) x = g.mul(x, basis[i]);
  return x;
}

ElementaryAbelian elementary_abelian_coordinates(const CayleyGroup& g, const Bitset& n) {
  const Subgroup sub = with_generators(g, n);
  if (!is_abelian(g, sub)) throw Error(ErrorCode::NotAbelian, "subgroup is not abelian");
  const std::size_t size = n.count();
  if (size > 256) throw Error(ErrorCode::TooLarge, "subgroup has more than 256 elements");
  ElementaryAbelian out;
  if (size == 1) return out;
  int p = 2;
  while (size % p) ++p;
  out.p = p;
  bool elementary = true;
  n.for_each([&](std::size_t x) {
    if (x != g.identity() && g.element_order(static_cast<Elem>(x)) != p) elementary = false;
  });
  if (!elementary) throw Error(ErrorCode::NotAbelian, "subgroup is not elementary abelian");

  Bitset span(g.order());
  span.set(g.identity());
  n.for_each([&](std::size_t x) {
    if (span.test(x)) return;
    out.basis.push_back(static_cast<Elem>(x));
    span = generated_subgroup(g, out.basis);
  });
  out.dim = static_cast<int>(out.basis.size());
  out.coords.assign(g.order(), {});
  std::vector<int> c(out.dim, 0);
  for (std::size_t idx = 0; idx < size; ++idx) {
    std::size_t t = idx;
    for (int i = 0; i < out.dim; ++i) {
      c[i] = static_cast<int>(t % p);
      t /= p;
    }
    out.coords[out.element(c, g)] = c;
  }
  return out;
}

long long end_ring_order(const CayleyGroup& g, const Bitset& n) {
  if (n.count() > 256) throw Error(ErrorCode::TooLarge, "subgroup has more than 256 elements");
  const ElementaryAbelian ea = elementary_abelian_coordinates(g, n);
  if (ea.dim == 0) return 1;
  const int d = ea.dim;
  const FiniteField& f = FiniteField::get(ea.p);

  std::vector<Elem> by = g.generators();
  if (by.empty())
    for (Elem x = 0; x < g.order(); ++x) by.push_back(x);

  // Unknown E (d x d, row convention x -> x E); for each conjugation matrix
  // M: E M - M E = 0, d^2 equations in the d^2 entries of E.
  Matrix system = zero_matrix(f, static_cast<Index>(by.size()) * d * d, d * d);
  Index row = 0;
  for (Elem c : by) {
    Matrix m = zero_matrix(f, d, d);
    for (int i = 0; i < d; ++i) {
      const std::vector<int>& img = ea.coords[g.conj(ea.basis[i], c)];
      for (int j = 0; j < d; ++j) m(i, j) = Fq(f, img[j]);
    }
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j, ++row) {
        // (E M)_{ij} = sum_k E_{ik} M_{kj};  (M E)_{ij} = sum_k M_{ik} E_{kj}
        for (int k = 0; k < d; ++k) {
          system(row, i * d + k) += m(k, j);
          system(row, k * d + j) -= m(i, k);
        }
      }
  }
  const Index nullity = d * d - rank(system);
  long long q = 1;
  for (Index i = 0; i < nullity; ++i) q *= ea.p;
  return q;
}

}  // namespace gensol
