#include <doctest.h>

#include <set>

#include "gensol/example_g.hpp"
#include "gensol/gf2.hpp"
#include "gensol/rng.hpp"
#include "oracles.hpp"

using namespace gensol;
using gensol::example::ExampleGroup;

namespace {

const FiniteField& F2 = FiniteField::get(2);

int det_of(std::initializer_list<int> rows) {
  return oracle::leibniz_det(F2, make_matrix(F2, 4, 4, rows)).code;
}

Matrix key_matrix(std::uint16_t key) {
  Matrix m = zero_matrix(F2, 4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = Fq(F2, (key >> (4 * i + j)) & 1);
  return m;
}

// Block matrix (1 - k1 | 1 - k2 / u1 | u2 / u3 | u4) built without det_key.
Matrix block_matrix(const ExampleGroup& g, int k1, int k2, int u1, int u2, int u3, int u4) {
  const Matrix i2 = identity_matrix(F2, 2);
  auto vec = [](int v) { return make_matrix(F2, 1, 2, {v & 1, (v >> 1) & 1}); };
  const Matrix top = hcat(stamp(F2, i2 - g.gl_matrix(k1)), stamp(F2, i2 - g.gl_matrix(k2)));
  return vcat(top, vcat(hcat(vec(u1), vec(u2)), hcat(vec(u3), vec(u4))));
}

}  // namespace

TEST_CASE("named elements") {
  const ExampleGroup& g = ExampleGroup::get();
  CHECK(g.gl_matrix(g.x) == make_matrix(F2, 2, 2, {1, 0, 1, 1}));
  CHECK(g.gl_matrix(g.y) == make_matrix(F2, 2, 2, {1, 1, 1, 0}));
  CHECK(g.gl_matrix(g.z) == make_matrix(F2, 2, 2, {1, 1, 0, 1}));
  CHECK(g.gl_matrix(g.one) == identity_matrix(F2, 2));
  CHECK(g.group().order() == example::kOrder);
  const example::ExampleElement a1 = g.decode(g.a1);
  CHECK(a1.hx == g.x);
  CHECK(a1.hy == g.x);
  CHECK(a1.v == std::array<int, 4>{0, 2, 0, 2});
  CHECK(g.label(g.a1) == "([10;11],[10;11])(0,e2,0,e2)");
  for (Elem e = 0; e < example::kOrder; e += 97) CHECK(g.encode(g.decode(e)) == e);
}

TEST_CASE("the displayed 4x4 determinants") {
  CHECK(det_of({0, 0, 0, 1, 1, 0, 1, 1, 0, 0, 1, 0, 0, 1, 0, 0}) == 1);
  CHECK(det_of({0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0}) == 1);
  CHECK(det_of({0, 0, 0, 1, 1, 0, 1, 1, 1, 0, 0, 0, 0, 1, 0, 0}) == 1);
  CHECK(det_of({0, 0, 0, 1, 1, 0, 0, 0, 1, 0, 1, 0, 0, 1, 0, 0}) == 1);
  CHECK(example::displayed_determinants() == std::array<int, 4>{1, 1, 1, 1});

  // The block form matches the raw matrices.
  const ExampleGroup& g = ExampleGroup::get();
  CHECK(block_matrix(g, g.x, g.y, 0, 1, 2, 0) == make_matrix(F2, 4, 4, {0, 0, 0, 1, 1, 0, 1, 1, 0, 0, 1, 0, 0, 1, 0, 0}));
  CHECK(block_matrix(g, g.x, g.z, 1, 1, 2, 0) == make_matrix(F2, 4, 4, {0, 0, 0, 1, 1, 0, 0, 0, 1, 0, 1, 0, 0, 1, 0, 0}));
}

TEST_CASE("the obstruction determinants are alpha and alpha + 1") {
  const auto dets = example::obstruction_determinants();
  for (int idx = 0; idx < 16; ++idx) {
    const int alpha = idx & 1, beta = (idx >> 1) & 1, gamma = (idx >> 2) & 1, delta = (idx >> 3) & 1;
    CHECK(det_of({0, 0, 0, 1, 1, 0, 1, 1, 0, 0, alpha, beta, 0, 1, gamma, delta}) == alpha);
    CHECK(det_of({0, 0, 0, 1, 1, 0, 1, 1, 1, 0, alpha, beta, 0, 1, gamma, delta}) == (alpha ^ 1));
    CHECK(dets[idx][0] == alpha);
    CHECK(dets[idx][1] == (alpha ^ 1));
  }
}

TEST_CASE("det_key layout") {
  const ExampleGroup& g = ExampleGroup::get();
  for (int k1 = 0; k1 < 6; ++k1)
    for (int k2 = 0; k2 < 6; ++k2)
      for (int u = 0; u < 256; u += 5) {
        const int u1 = u & 3, u2 = (u >> 2) & 3, u3 = (u >> 4) & 3, u4 = (u >> 6) & 3;
        const std::uint16_t key = example::det_key(g.gl_code(k1), g.gl_code(k2), u1, u2, u3, u4);
        CHECK(key_matrix(key) == block_matrix(g, k1, k2, u1, u2, u3, u4));
        CHECK(gf2_det4(key) == oracle::leibniz_det(F2, key_matrix(key)).code);
      }
}

TEST_CASE("generation of H = GL(2,2) x GL(2,2)") {
  const ExampleGroup& g = ExampleGroup::get();
  std::size_t generating = 0;
  for (int h1 = 0; h1 < 36; ++h1)
    for (int h2 = 0; h2 < 36; ++h2) {
      std::set<int> s{g.one * 6 + g.one};
      std::vector<int> q{g.one * 6 + g.one};
      for (std::size_t i = 0; i < q.size(); ++i)
        for (int h : {h1, h2}) {
          const int p = g.gl_mul(q[i] / 6, h / 6) * 6 + g.gl_mul(q[i] % 6, h % 6);
          if (s.insert(p).second) q.push_back(p);
        }
      CHECK(g.h_generates(h1, h2) == (s.size() == 36));
      generating += s.size() == 36;
    }
  CHECK(g.h_generates(g.x * 6 + g.x, g.y * 6 + g.z));
  CHECK(generating > 0);
}

TEST_CASE("criterion examples") {
  const ExampleGroup& g = ExampleGroup::get();
  CHECK(g.criterion_edge(g.a1, g.b1));
  CHECK(g.criterion_edge(g.a2, g.b2));
  CHECK_FALSE(g.criterion_edge(g.a1, g.a2));
  CHECK(g.closure_generates(g.a1, g.b1));
  CHECK(g.closure_generates(g.a2, g.b2));
  CHECK_FALSE(g.closure_generates(g.a1, g.a2));
  CHECK_FALSE(example::common_neighbor_scan(g.a1, g.a2).has_value());
  CHECK(example::common_neighbor_scan(g.a1, g.b2).has_value());

  for (Elem e = 0; e < example::kOrder; e += 13) CHECK_FALSE(g.criterion_edge(e, e));

  std::mt19937_64 rng = task_rng(5, 0);
  std::uniform_int_distribution<Elem> pick(0, example::kOrder - 1);
  std::size_t mismatches = 0, generating = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const Elem a = pick(rng), b = pick(rng);
    const bool crit = g.criterion_edge(a, b);
    if (crit != g.criterion_edge(b, a)) ++mismatches;
    if (crit != g.closure_generates(a, b)) ++mismatches;
    generating += crit;
  }
  CHECK(mismatches == 0);
  CHECK(generating > 0);
}

TEST_CASE("criterion against closure, report form") {
  const auto r = example::criterion_vs_closure(2000, 9, 1);
  CHECK(r.pairs >= 2000);
  CHECK(r.disagreements == 0);
  CHECK(r.generating > 0);
}
