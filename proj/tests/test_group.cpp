#include <doctest.h>

#include <set>

#include "gensol/builtin.hpp"
#include "gensol/graph.hpp"
#include "gensol/lattice.hpp"
#include "gensol/probability.hpp"

using namespace gensol;

namespace {

Elem el(const GroupHandle& h, const std::string& label) { return h.parse_element(Json(label)); }

// Naive closure: multiply everything reached so far until nothing changes.
std::set<Elem> naive_closure(const CayleyGroup& g, std::vector<Elem> gens) {
  std::set<Elem> s{g.identity()};
  s.insert(gens.begin(), gens.end());
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<Elem> cur(s.begin(), s.end());
    for (Elem a : cur)
      for (Elem b : cur)
        if (s.insert(g.mul(a, b)).second) grew = true;
  }
  return s;
}

Bitset members_of(const CayleyGroup& g, std::initializer_list<Elem> es) {
  Bitset b(g.order());
  for (Elem e : es) b.set(e);
  return generated_subgroup(g, b);
}

Bitset everything(const CayleyGroup& g) {
  Bitset b(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) b.set(i);
  return b;
}

ErrorCode error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("builtin orders") {
  const std::vector<std::pair<std::string, std::size_t>> expected = {
      {"S3", 6},  {"S4", 24},   {"D8", 8},    {"Q8", 8},   {"A4", 12},  {"C2xC2", 4},
      {"SL23", 24}, {"D12", 12}, {"C7:C3", 21}, {"GL22", 6}, {"C5", 5}, {"C1", 1}};
  for (const auto& [name, order] : expected) CHECK(builtin_group(name).group.order() == order);
  CHECK(error_of([] { builtin_group("nope"); }) == ErrorCode::ParseError);
}

TEST_CASE("permutation products compose left to right") {
  const GroupHandle s3 = builtin_group("S3");
  const Elem a = el(s3, "(1 2)"), b = el(s3, "(2 3)");
  // 1 -> 2 -> 3 under (1 2) then (2 3).
  CHECK(s3.group.label(s3.group.mul(a, b)) == "(1 3 2)");
  CHECK(s3.group.label(s3.group.identity()) == "()");
  CHECK(s3.group.element_order(s3.group.mul(a, b)) == 3);
}

TEST_CASE("closure and generation") {
  const GroupHandle s3 = builtin_group("S3");
  const Elem t = el(s3, "(1 2)"), c = el(s3, "(1 2 3)");
  const std::vector<Elem> one{t};
  CHECK(generated_subgroup(s3.group, one).count() == 2);
  CHECK(generates_pair(s3.group, t, c));
  CHECK_FALSE(generates_pair(s3.group, c, s3.group.mul(c, c)));

  const GroupHandle gl = builtin_group("GL22");
  CHECK(gl.group.order() == 6);

  // generates_pair agrees with a naive closure on every pair of S4.
  const GroupHandle s4 = builtin_group("S4");
  int mismatches = 0;
  for (Elem a = 0; a < s4.group.order(); ++a)
    for (Elem b = 0; b < s4.group.order(); ++b)
      if (generates_pair(s4.group, a, b) != (naive_closure(s4.group, {a, b}).size() == 24)) ++mismatches;
  CHECK(mismatches == 0);
}

TEST_CASE("structure predicates") {
  CHECK(is_soluble(builtin_group("S4").group));
  CHECK(is_soluble(builtin_group("SL23").group));
  const GroupHandle s4 = builtin_group("S4");
  const Subgroup d = derived_subgroup(s4.group, whole_group(s4.group));
  CHECK(d.order() == 12);
  CHECK_FALSE(is_nilpotent(s4.group, d));
  const Subgroup dd = derived_subgroup(s4.group, d);
  CHECK(dd.order() == 4);
  CHECK(is_nilpotent(s4.group, dd));
  CHECK(is_abelian(s4.group, dd));
  CHECK(is_normal(s4.group, dd.members));
  CHECK_FALSE(is_normal(s4.group, members_of(s4.group, {el(s4, "(1 2)")})));
}

TEST_CASE("generating graphs") {
  SUBCASE("C2xC2 is a triangle") {
    const GenGraph g = generating_graph(builtin_group("C2xC2").group);
    CHECK(g.size() == 3);
    CHECK(g.edge_count() == 3);
    CHECK(g.isolated_count() == 0);
    CHECK(diameter(g) == 1);
  }
  SUBCASE("S4") {
    const GroupHandle s4 = builtin_group("S4");
    const GenGraph g = generating_graph(s4.group);
    CHECK(g.isolated_count() == 3);
    for (std::size_t v = 0; v < g.size(); ++v)
      if (g.isolated.test(v)) CHECK(s4.group.element_order(g.vertices[v]) == 2);
    const GenGraph d = delta_subgraph(g);
    CHECK(d.size() == 20);
    CHECK(is_connected(d));
    CHECK(diameter(d) == 2);
  }
  SUBCASE("D8 and Q8") {
    for (const char* name : {"D8", "Q8"}) {
      const GenGraph d = delta_subgraph(generating_graph(builtin_group(name).group));
      // The centre and nothing else is isolated.
      CHECK(d.size() == 6);
      REQUIRE(diameter(d).has_value());
      CHECK(*diameter(d) <= 2);
    }
  }
  SUBCASE("C1 has an empty graph") {
    const GenGraph g = generating_graph(builtin_group("C1").group);
    CHECK(g.size() == 0);
    CHECK(diameter(g) == 0);
  }
  SUBCASE("distance to an isolated vertex is an error") {
    const GenGraph g = generating_graph(builtin_group("S4").group);
    const std::size_t iso = g.isolated.next(0);
    const std::size_t other = iso == 0 ? 1 : 0;
    CHECK(error_of([&] { distance(g, iso, other); }) == ErrorCode::IsolatedVertex);
  }
  SUBCASE("threads do not change the graph") {
    const CayleyGroup& sl = builtin_group("SL23").group;
    const GenGraph a = generating_graph(sl, 1), b = generating_graph(sl, 3);
    CHECK(a.adjacency == b.adjacency);
  }
}

TEST_CASE("subgroup lattice and Moebius function") {
  const GroupHandle s3 = builtin_group("S3");
  const SubgroupLattice lat = subgroup_lattice(s3.group);
  CHECK(lat.size() == 6);
  CHECK(lat.orders.front() == 1);
  CHECK(lat.orders.back() == 6);
  CHECK(lat.mobius.back() == 1);
  CHECK(lat.mobius.front() == 3);
  for (std::size_t i = 1; i + 1 < lat.size(); ++i) CHECK(lat.mobius[i] == -1);

  for (const char* name : {"S3", "S4", "D8", "Q8", "A4", "SL23", "C7:C3"}) {
    const CayleyGroup& g = builtin_group(name).group;
    const SubgroupLattice l = subgroup_lattice(g);
    // sum over H >= K of mu(H, G) vanishes for K < G.
    for (std::size_t k = 0; k + 1 < l.size(); ++k) {
      long long sum = 0;
      for (std::size_t h = 0; h < l.size(); ++h)
        if (l.subgroups[k].is_subset_of(l.subgroups[h])) sum += l.mobius[h];
      CHECK(sum == 0);
    }
  }
  CHECK(subgroup_lattice(builtin_group("S4").group).size() == 30);
  CHECK(subgroup_lattice(builtin_group("Q8").group).size() == 6);
}

TEST_CASE("Frattini subgroup") {
  CHECK(frattini_subgroup(builtin_group("Q8").group, subgroup_lattice(builtin_group("Q8").group)).count() == 2);
  CHECK(frattini_subgroup(builtin_group("S4").group, subgroup_lattice(builtin_group("S4").group)).count() == 1);
  CHECK(frattini_subgroup(builtin_group("C2xC2").group, subgroup_lattice(builtin_group("C2xC2").group)).count() == 1);
}

TEST_CASE("minimal normal subgroups and endomorphism rings") {
  const GroupHandle s4 = builtin_group("S4");
  auto min_s4 = minimal_normal_subgroups(s4.group, subgroup_lattice(s4.group));
  REQUIRE(min_s4.size() == 1);
  CHECK(min_s4[0].order() == 4);
  CHECK(min_s4[0].abelian);
  CHECK(min_s4[0].end_ring_order == 2);

  const GroupHandle c22 = builtin_group("C2xC2");
  CHECK(minimal_normal_subgroups(c22.group, subgroup_lattice(c22.group)).size() == 3);

  const GroupHandle s3 = builtin_group("S3");
  auto min_s3 = minimal_normal_subgroups(s3.group, subgroup_lattice(s3.group));
  REQUIRE(min_s3.size() == 1);
  CHECK(min_s3[0].order() == 3);
  CHECK(min_s3[0].end_ring_order == 3);
  CHECK(end_ring_order(s3.group, min_s3[0].members) == 3);

  // A central C2 has End = GF(2); C3 in C3 has End = GF(3).
  const GroupHandle d8 = builtin_group("D8");
  const Bitset z = frattini_subgroup(d8.group, subgroup_lattice(d8.group));
  CHECK(end_ring_order(d8.group, z) == 2);
  const CayleyGroup& c3 = builtin_group("C3").group;
  CHECK(end_ring_order(c3, everything(c3)) == 3);

  // V4 in A4 is a 2-dim GF(2)-module with End = GF(4).
  const GroupHandle a4 = builtin_group("A4");
  auto min_a4 = minimal_normal_subgroups(a4.group, subgroup_lattice(a4.group));
  REQUIRE(min_a4.size() == 1);
  CHECK(min_a4[0].end_ring_order == 4);

  CHECK(error_of([&] { elementary_abelian_coordinates(s3.group, everything(s3.group)); }) ==
        ErrorCode::NotAbelian);
  const ElementaryAbelian v = elementary_abelian_coordinates(a4.group, min_a4[0].members);
  CHECK(v.p == 2);
  CHECK(v.dim == 2);
}

TEST_CASE("d_X") {
  const GroupHandle s3 = builtin_group("S3");
  CHECK(d_X(s3.group, {}) == 2);
  const std::vector<Elem> t{el(s3, "(1 2)")};
  CHECK(d_X(s3.group, t) == 1);
  const std::vector<Elem> both{el(s3, "(1 2)"), el(s3, "(1 2 3)")};
  CHECK(d_X(s3.group, both) == 0);
  CHECK(d_X(builtin_group("C1").group, {}) == 0);
  CHECK(d_X(builtin_group("C2xC2").group, {}) == 2);
  CHECK(d_X(builtin_group("C5").group, {}) == 1);
}

TEST_CASE("P_{G,N}: brute force against Moebius") {
  SUBCASE("C2xC2 with N a line") {
    const GroupHandle v = builtin_group("C2xC2");
    const Bitset n = members_of(v.group, {1});
    CHECK(p_gn_brute(v.group, n, {}, 2) == Rational(1, 2));
    CHECK(p_gn_moebius(v.group, subgroup_lattice(v.group), n, {}, 2) == Rational(1, 2));
  }
  SUBCASE("S3 with A3") {
    const GroupHandle s3 = builtin_group("S3");
    const Bitset a3 = members_of(s3.group, {el(s3, "(1 2 3)")});
    CHECK(p_gn_brute(s3.group, a3, {}, 2) == Rational(2, 3));
    const std::vector<Elem> x{el(s3, "(1 2)")};
    CHECK(p_gn_brute(s3.group, a3, x, 1) == Rational(2, 3));
  }
  SUBCASE("corpus sweep") {
    for (const char* name : {"S3", "D8", "Q8", "A4", "C2xC2", "D12"}) {
      const GroupHandle h = builtin_group(name);
      const SubgroupLattice lat = subgroup_lattice(h.group);
      for (const NormalSubgroupHandle& n : normal_subgroups(h.group, lat))
        for (int k = 1; k <= 2; ++k) {
          Rational brute, mob;
          bool brute_ok = true, mob_ok = true;
          try {
            brute = p_gn_brute(h.group, n.members, {}, k);
          } catch (const Error&) {
            brute_ok = false;
          }
          try {
            mob = p_gn_moebius(h.group, lat, n.members, {}, k);
          } catch (const Error&) {
            mob_ok = false;
          }
          CHECK(brute_ok == mob_ok);
          if (brute_ok && mob_ok) CHECK(brute == mob);
        }
    }
  }
  SUBCASE("errors") {
    const GroupHandle s3 = builtin_group("S3");
    const Bitset t = members_of(s3.group, {el(s3, "(1 2)")});
    CHECK(error_of([&] { p_gn_brute(s3.group, t, {}, 1); }) == ErrorCode::NotNormal);
    const Bitset trivial = members_of(s3.group, {});
    CHECK(error_of([&] { p_gn_brute(s3.group, trivial, {}, 1); }) == ErrorCode::NoTupleGeneratesModN);
    CHECK(error_of([&] { p_gn_brute(builtin_group("S4").group, members_of(builtin_group("S4").group, {}), {}, 6); }) ==
          ErrorCode::TooLarge);
  }
}

TEST_CASE("lift counts are constant over a base") {
  // For N minimal normal the count of generating lifts does not depend on the
  // chosen base tuple generating G modulo N.
  for (const char* name : {"S4", "A4", "S3", "D8"}) {
    const GroupHandle h = builtin_group(name);
    const SubgroupLattice lat = subgroup_lattice(h.group);
    for (const NormalSubgroupHandle& n : minimal_normal_subgroups(h.group, lat)) {
      std::set<std::uint64_t> counts;
      for (Elem a = 0; a < h.group.order(); ++a)
        for (Elem b = 0; b < h.group.order(); ++b) {
          const std::vector<Elem> base{a, b};
          if (generated_with(h.group, base, n.members).count() != h.group.order()) continue;
          counts.insert(count_lifts(h.group, n.members, {}, base));
        }
      CHECK(counts.size() == 1);
    }
  }
  const GroupHandle s3 = builtin_group("S3");
  const Bitset a3 = members_of(s3.group, {el(s3, "(1 2 3)")});
  const std::vector<Elem> bad{el(s3, "(1 2 3)")};
  CHECK(error_of([&] { count_lifts(s3.group, a3, {}, bad); }) == ErrorCode::BaseDoesNotGenerateModN);
}

TEST_CASE("complements") {
  const GroupHandle v = builtin_group("C2xC2");
  CHECK(count_complements_containing(v.group, subgroup_lattice(v.group), members_of(v.group, {1}), {}) == 2);
  const GroupHandle s3 = builtin_group("S3");
  const Bitset a3 = members_of(s3.group, {el(s3, "(1 2 3)")});
  CHECK(count_complements_containing(s3.group, subgroup_lattice(s3.group), a3, {}) == 3);
  const std::vector<Elem> x{el(s3, "(1 2)")};
  CHECK(count_complements_containing(s3.group, subgroup_lattice(s3.group), a3, x) == 1);
}
