#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "gensol/bitset.hpp"
#include "gensol/error.hpp"

namespace gensol {

using Elem = std::uint32_t;

/// A finite group on element indices 0..order-1. Multiplication comes from a
/// Cayley table when the group is small and from an oracle otherwise.
class CayleyGroup {
 public:
  using Oracle = std::function<Elem(Elem, Elem)>;
  using Labeler = std::function<std::string(Elem)>;

  static constexpr std::size_t kTableCeiling = 5000;

  CayleyGroup() = default;
  /// Builds the inverse table, and the Cayley table when order <= kTableCeiling.
  CayleyGroup(std::size_t order, Elem identity, Oracle mul, std::vector<Elem> generators = {},
              Labeler labeler = {});

  std::size_t order() const noexcept { return order_; }
  Elem identity() const noexcept { return identity_; }
  bool has_table() const noexcept { return !table_.empty(); }
  const std::vector<Elem>& generators() const noexcept { return generators_; }

  Elem mul(Elem a, Elem b) const {
    return table_.empty() ? oracle_(a, b) : table_[static_cast<std::size_t>(a) * order_ + b];
  }
  Elem inv(Elem a) const { return inverse_[a]; }
  /// a^g = g^-1 a g
  Elem conj(Elem a, Elem g) const { return mul(mul(inverse_[g], a), g); }
  /// [a, b] = a^-1 b^-1 a b
  Elem comm(Elem a, Elem b) const { return mul(mul(inverse_[a], inverse_[b]), mul(a, b)); }
  int element_order(Elem a) const;

  std::string label(Elem a) const;

 private:
  std::size_t order_ = 0;
  Elem identity_ = 0;
  Oracle oracle_;
  std::vector<std::uint16_t> table_;
  std::vector<Elem> inverse_;
  std::vector<Elem> generators_;
  Labeler labeler_;
};

/// Closes `gens` under `mul` starting from `identity`. Element 0 of the result is
/// the identity. Throws CeilingExceeded beyond `ceiling` elements.
template <typename E, typename Hash = std::hash<E>>
struct MaterializedGroup {
  CayleyGroup group;
  std::shared_ptr<const std::vector<E>> elements;
  std::shared_ptr<const std::unordered_map<E, Elem, Hash>> index;

  const E& element(Elem i) const { return (*elements)[i]; }
  /// Index of `e`, or order() if e is not in the group.
  Elem find(const E& e) const {
    auto it = index->find(e);
    return it == index->end() ? static_cast<Elem>(group.order()) : it->second;
  }
};

template <typename E, typename Mul, typename Hash = std::hash<E>>
MaterializedGroup<E, Hash> close_generators(const E& identity, std::span<const E> gens, Mul mul,
                                            std::function<std::string(const E&)> labeler = {},
                                            std::size_t ceiling = 20000) {
  auto elements = std::make_shared<std::vector<E>>();
  auto index = std::make_shared<std::unordered_map<E, Elem, Hash>>();
  elements->push_back(identity);
  index->emplace(identity, 0);
  for (std::size_t head = 0; head < elements->size(); ++head) {
    for (const E& g : gens) {
      E prod = mul((*elements)[head], g);
      if (index->find(prod) != index->end()) continue;
      if (elements->size() >= ceiling)
        throw Error(ErrorCode::CeilingExceeded, "closure exceeds " + std::to_string(ceiling) + " elements");
      index->emplace(prod, static_cast<Elem>(elements->size()));
      elements->push_back(std::move(prod));
    }
  }
  std::vector<Elem> gen_idx;
  for (const E& g : gens) gen_idx.push_back(index->at(g));
  CayleyGroup::Oracle oracle = [elements, index, mul](Elem a, Elem b) {
    return index->at(mul((*elements)[a], (*elements)[b]));
  };
  CayleyGroup::Labeler lab;
  if (labeler) lab = [elements, labeler](Elem a) { return labeler((*elements)[a]); };
  MaterializedGroup<E, Hash> out;
  out.group = CayleyGroup(elements->size(), 0, std::move(oracle), std::move(gen_idx), std::move(lab));
  out.elements = elements;
  out.index = index;
  return out;
}

/// Subgroup generated by `gens` as a membership bitset.
Bitset generated_subgroup(const CayleyGroup& g, std::span<const Elem> gens);
Bitset generated_subgroup(const CayleyGroup& g, const Bitset& set);
bool generates(const CayleyGroup& g, std::span<const Elem> gens);
/// True iff <a, b> = G.
bool generates_pair(const CayleyGroup& g, Elem a, Elem b);

/// A subgroup with a generating list, both over element indices of the parent.
struct Subgroup {
  Bitset members;
  std::vector<Elem> gens;
  std::size_t order() const { return members.count(); }
};

Subgroup whole_group(const CayleyGroup& g);
Subgroup trivial_subgroup(const CayleyGroup& g);
/// Small generating list for a subgroup given by membership.
Subgroup with_generators(const CayleyGroup& g, const Bitset& members);
/// Smallest subgroup containing `seeds` and normalised by `by`.
Subgroup normal_closure(const CayleyGroup& g, std::span<const Elem> seeds, std::span<const Elem> by);
bool is_normal(const CayleyGroup& g, const Bitset& h);
bool is_abelian(const CayleyGroup& g, const Subgroup& h);

/// [H, H] for a subgroup H.
Subgroup derived_subgroup(const CayleyGroup& g, const Subgroup& h);
bool is_soluble(const CayleyGroup& g);
/// Nilpotency of a normal subgroup N of G, via its lower central series.
bool is_nilpotent(const CayleyGroup& g, const Subgroup& n);

}  // namespace gensol
