#include "gensol/group.hpp"

#include <utility>

namespace gensol {

CayleyGroup::CayleyGroup(std::size_t order, Elem identity, Oracle oracle, std::vector<Elem> generators,
                         Labeler labeler)
    : order_(order),
      identity_(identity),
      oracle_(std::move(oracle)),
      generators_(std::move(generators)),
      labeler_(std::move(labeler)) {
  if (order_ <= kTableCeiling) {
    table_.resize(order_ * order_);
    for (Elem a = 0; a < order_; ++a)
      for (Elem b = 0; b < order_; ++b)
        table_[static_cast<std::size_t>(a) * order_ + b] = static_cast<std::uint16_t>(oracle_(a, b));
  }
  inverse_.assign(order_, identity_);
  for (Elem a = 0; a < order_; ++a) {
    // a^-1 = a^(ord(a) - 1)
    Elem prev = identity_;
    Elem cur = a;
    while (cur != identity_) {
      prev = cur;
      cur = mul(cur, a);
    }
    inverse_[a] = prev;
  }
}

int CayleyGroup::element_order(Elem a) const {
  int k = 1;
  for (Elem cur = a; cur != identity_; cur = mul(cur, a)) ++k;
  return k;
}

std::string CayleyGroup::label(Elem a) const {
  if (labeler_) return labeler_(a);
  return "g" + std::to_string(a);
}

Bitset generated_subgroup(const CayleyGroup& g, std::span<const Elem> gens) {
  Bitset seen(g.order());
  std::vector<Elem> queue{g.identity()};
  seen.set(g.identity());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Elem x = queue[head];
    for (Elem s : gens) {
      const Elem y = g.mul(x, s);
      if (!seen.test(y)) {
        seen.set(y);
        queue.push_back(y);
      }
    }
  }
  return seen;
}

Bitset generated_subgroup(const CayleyGroup& g, const Bitset& set) {
  std::vector<Elem> gens;
  set.for_each([&](std::size_t i) { gens.push_back(static_cast<Elem>(i)); });
  return generated_subgroup(g, gens);
}

bool generates(const CayleyGroup& g, std::span<const Elem> gens) {
  return generated_subgroup(g, gens).count() == g.order();
}

bool generates_pair(const CayleyGroup& g, Elem a, Elem b) {
  const Elem gens[2] = {a, b};
  return generates(g, gens);
}

Subgroup whole_group(const CayleyGroup& g) {
  Bitset all(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) all.set(i);
  if (!g.generators().empty()) return {all, g.generators()};
  return with_generators(g, all);
}

Subgroup trivial_subgroup(const CayleyGroup& g) {
  Bitset one(g.order());
  one.set(g.identity());
  return {one, {}};
}

Subgroup with_generators(const CayleyGroup& g, const Bitset& members) {
  Subgroup out{Bitset(g.order()), {}};
  out.members.set(g.identity());
  members.for_each([&](std::size_t i) {
    if (out.members.test(i)) return;
    out.gens.push_back(static_cast<Elem>(i));
    out.members = generated_subgroup(g, out.gens);
  });
  return out;
}

Subgroup normal_closure(const CayleyGroup& g, std::span<const Elem> seeds, std::span<const Elem> by) {
  Subgroup out{Bitset(g.order()), {}};
  out.members.set(g.identity());
  std::vector<Elem> pending(seeds.begin(), seeds.end());
  while (!pending.empty()) {
    const Elem x = pending.back();
    pending.pop_back();
    if (out.members.test(x)) continue;
    out.gens.push_back(x);
    out.members = generated_subgroup(g, out.gens);
    // Closed under conjugation iff every generator's conjugates stay inside.
    for (Elem h : out.gens)
      for (Elem c : by) {
        const Elem y = g.conj(h, c);
        if (!out.members.test(y)) pending.push_back(y);
      }
  }
  return out;
}

bool is_normal(const CayleyGroup& g, const Bitset& h) {
  const std::vector<Elem>& gens = g.generators();
  std::vector<Elem> all;
  if (gens.empty())
    for (Elem x = 0; x < g.order(); ++x) all.push_back(x);
  const std::vector<Elem>& by = gens.empty() ? all : gens;
  bool normal = true;
  h.for_each([&](std::size_t i) {
    if (!normal) return;
    for (Elem c : by)
      if (!h.test(g.conj(static_cast<Elem>(i), c))) {
        normal = false;
        return;
      }
  });
  return normal;
}

bool is_abelian(const CayleyGroup& g, const Subgroup& h) {
  for (Elem a : h.gens)
    for (Elem b : h.gens)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

Subgroup derived_subgroup(const CayleyGroup& g, const Subgroup& h) {
  std::vector<Elem> comms;
  for (Elem a : h.gens)
    for (Elem b : h.gens)
      if (a < b) comms.push_back(g.comm(a, b));
  return normal_closure(g, comms, h.gens);
}

bool is_soluble(const CayleyGroup& g) {
  Subgroup cur = whole_group(g);
  while (cur.order() > 1) {
    Subgroup next = derived_subgroup(g, cur);
    if (next.order() == cur.order()) return false;
    cur = std::move(next);
  }
  return true;
}

bool is_nilpotent(const CayleyGroup& g, const Subgroup& n) {
  Subgroup cur = n;
  while (cur.order() > 1) {
    std::vector<Elem> comms;
    for (Elem a : cur.gens)
      for (Elem b : n.gens) comms.push_back(g.comm(a, b));
    Subgroup next = normal_closure(g, comms, n.gens);
    if (next.order() == cur.order()) return false;
    cur = std::move(next);
  }
  return true;
}

}  // namespace gensol
