#include "gensol/example_g.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>

#include "gensol/gf2.hpp"
#include "gensol/parallel.hpp"
#include "gensol/rng.hpp"

namespace gensol::example {
namespace {

constexpr int kIdentityCode = 0b1001;

int vec_times(int v, int code) {
  const int row0 = code & 3, row1 = (code >> 2) & 3;
  return ((v & 1) ? row0 : 0) ^ ((v & 2) ? row1 : 0);
}

int code_mul(int a, int b) {
  // Row i of a*b is (row i of a) * b.
  return vec_times(a & 3, b) | vec_times((a >> 2) & 3, b) << 2;
}

bool code_invertible(int m) {
  const int m00 = m & 1, m01 = (m >> 1) & 1, m10 = (m >> 2) & 1, m11 = (m >> 3) & 1;
  return ((m00 & m11) ^ (m01 & m10)) != 0;
}

const char* vec_name(int v) {
  static const char* names[4] = {"0", "e1", "e2", "e1+e2"};
  return names[v & 3];
}

std::string gl_name(int code) {
  std::string s = "[";
  s += static_cast<char>('0' + (code & 1));
  s += static_cast<char>('0' + ((code >> 1) & 1));
  s += ';';
  s += static_cast<char>('0' + ((code >> 2) & 1));
  s += static_cast<char>('0' + ((code >> 3) & 1));
  s += ']';
  return s;
}

}  // namespace

std::uint16_t det_key(int k1_code, int k2_code, int u1, int u2, int u3, int u4) {
  const int a1 = k1_code ^ kIdentityCode, a2 = k2_code ^ kIdentityCode;
  const int row0 = (a1 & 3) | (a2 & 3) << 2;
  const int row1 = ((a1 >> 2) & 3) | ((a2 >> 2) & 3) << 2;
  const int row2 = u1 | u2 << 2;
  const int row3 = u3 | u4 << 2;
  return static_cast<std::uint16_t>(row0 | row1 << 4 | row2 << 8 | row3 << 12);
}

ExampleGroup::ExampleGroup() {
  int count = 0;
  for (int m = 0; m < 16; ++m)
    if (code_invertible(m)) gl_codes_[count++] = m;
  for (int a = 0; a < 6; ++a) {
    for (int b = 0; b < 6; ++b) gl_mul_[a][b] = gl_index(code_mul(gl_codes_[a], gl_codes_[b]));
    for (int v = 0; v < 4; ++v) act_[a][v] = vec_times(v, gl_codes_[a]);
  }
  x = gl_index(0b1101);
  y = gl_index(0b0111);
  z = gl_index(0b1011);
  one = gl_index(kIdentityCode);

  for (std::size_t a = 0; a < kHOrder; ++a)
    for (std::size_t b = 0; b < kHOrder; ++b)
      h_mul_[a][b] = gl_mul_[a / 6][b / 6] * 6 + gl_mul_[a % 6][b % 6];
  for (std::size_t a = 0; a < kHOrder; ++a)
    for (std::size_t b = 0; b < kHOrder; ++b) {
      std::array<bool, kHOrder> seen{};
      std::vector<int> queue{one * 6 + one};
      seen[queue[0]] = true;
      for (std::size_t head = 0; head < queue.size(); ++head)
        for (int s : {static_cast<int>(a), static_cast<int>(b)}) {
          const int p = h_mul_[queue[head]][s];
          if (!seen[p]) {
            seen[p] = true;
            queue.push_back(p);
          }
        }
      h_gen_[a][b] = queue.size() == kHOrder;
    }

  w_act_.resize(kHOrder);
  for (std::size_t h = 0; h < kHOrder; ++h)
    for (int w = 0; w < static_cast<int>(kWOrder); ++w) {
      const int kx = static_cast<int>(h / 6), ky = static_cast<int>(h % 6);
      w_act_[h][w] = static_cast<std::uint8_t>(act_[kx][w & 3] | act_[kx][(w >> 2) & 3] << 2 |
                                               act_[ky][(w >> 4) & 3] << 4 | act_[ky][(w >> 6) & 3] << 6);
    }

  a1 = encode({x, x, {0, 2, 0, 2}});
  a2 = encode({x, x, {1, 2, 1, 2}});
  b1 = encode({y, z, {1, 0, 1, 0}});
  b2 = encode({y, z, {0, 0, 1, 0}});

  const ExampleGroup* self = this;
  group_ = CayleyGroup(
      kOrder, encode({one, one, {0, 0, 0, 0}}), [self](Elem a, Elem b) { return self->mul(a, b); },
      {a1, b1}, [self](Elem e) { return self->label(e); });
}

const ExampleGroup& ExampleGroup::get() {
  static const ExampleGroup instance;
  return instance;
}

int ExampleGroup::gl_index(int code) const {
  for (int i = 0; i < 6; ++i)
    if (gl_codes_[i] == code) return i;
  throw Error(ErrorCode::PreconditionViolated, "not an element of GL(2,2)");
}

Matrix ExampleGroup::gl_matrix(int index) const {
  const int c = gl_codes_[index];
  return make_matrix(FiniteField::get(2), 2, 2, {c & 1, (c >> 1) & 1, (c >> 2) & 1, (c >> 3) & 1});
}

Elem ExampleGroup::encode(const ExampleElement& e) const {
  const int w = e.v[0] | e.v[1] << 2 | e.v[2] << 4 | e.v[3] << 6;
  return static_cast<Elem>((e.hx * 6 + e.hy) * 256 + w);
}

ExampleElement ExampleGroup::decode(Elem e) const {
  const int h = static_cast<int>(e >> 8), w = static_cast<int>(e & 255);
  return {h / 6, h % 6, {w & 3, (w >> 2) & 3, (w >> 4) & 3, (w >> 6) & 3}};
}

std::array<std::uint16_t, 2> ExampleGroup::det_keys(Elem g1, Elem g2) const {
  const ExampleElement p = decode(g1), q = decode(g2);
  return {det_key(gl_codes_[p.hx], gl_codes_[q.hx], p.v[0], q.v[0], p.v[1], q.v[1]),
          det_key(gl_codes_[p.hy], gl_codes_[q.hy], p.v[2], q.v[2], p.v[3], q.v[3])};
}

bool ExampleGroup::criterion_edge(Elem g1, Elem g2) const {
  if (!h_gen_[g1 >> 8][g2 >> 8]) return false;
  const auto keys = det_keys(g1, g2);
  return gf2_det4(keys[0]) && gf2_det4(keys[1]);
}

bool ExampleGroup::closure_generates(Elem g1, Elem g2) const {
  std::array<std::uint64_t, kOrder / 64> seen{};
  std::vector<Elem> queue;
  queue.reserve(kOrder);
  const Elem id = group_.identity();
  queue.push_back(id);
  seen[id >> 6] |= std::uint64_t{1} << (id & 63);
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (Elem s : {g1, g2}) {
      const Elem p = mul(queue[head], s);
      const std::uint64_t bit = std::uint64_t{1} << (p & 63);
      if (!(seen[p >> 6] & bit)) {
        seen[p >> 6] |= bit;
        queue.push_back(p);
      }
    }
  return queue.size() == kOrder;
}

std::string ExampleGroup::label(Elem e) const {
  const ExampleElement d = decode(e);
  std::string s = "(" + gl_name(gl_codes_[d.hx]) + "," + gl_name(gl_codes_[d.hy]) + ")(";
  for (int i = 0; i < 4; ++i) {
    if (i) s += ',';
    s += vec_name(d.v[i]);
  }
  return s + ")";
}

std::array<int, 4> displayed_determinants() {
  const ExampleGroup& g = ExampleGroup::get();
  const auto k1 = g.det_keys(g.a1, g.b1), k2 = g.det_keys(g.a2, g.b2);
  return {gf2_det4(k1[0]), gf2_det4(k1[1]), gf2_det4(k2[0]), gf2_det4(k2[1])};
}

std::array<std::array<int, 2>, 16> obstruction_determinants() {
  const ExampleGroup& g = ExampleGroup::get();
  const int cx = g.gl_code(g.x), cy = g.gl_code(g.y);
  std::array<std::array<int, 2>, 16> out{};
  for (int p = 0; p < 16; ++p) {
    const int v1 = p & 3, v2 = (p >> 2) & 3;
    out[p] = {gf2_det4(det_key(cx, cy, 0, v1, 2, v2)), gf2_det4(det_key(cx, cy, 1, v1, 2, v2))};
  }
  return out;
}

std::optional<Elem> common_neighbor_scan(Elem u, Elem v) {
  const ExampleGroup& g = ExampleGroup::get();
  for (Elem b = 0; b < kOrder; ++b) {
    if (b == g.group().identity()) continue;
    if (g.criterion_edge(u, b) && g.criterion_edge(v, b)) return b;
  }
  return std::nullopt;
}

GenGraph criterion_graph(int threads) {
  const ExampleGroup& g = ExampleGroup::get();
  std::vector<Elem> vertices;
  for (Elem e = 0; e < kOrder; ++e)
    if (e != g.group().identity()) vertices.push_back(e);
  return build_graph(std::move(vertices), [&g](Elem a, Elem b) { return g.criterion_edge(a, b); }, threads);
}

DiameterReport certify_diameter(const CertifyOptions& options, bool report_only) {
  const ExampleGroup& g = ExampleGroup::get();
  DiameterReport r;
  auto expect = [&r](bool ok, const std::string& what) {
    if (!ok) r.failures.push_back(what);
  };

  r.order = g.group().order();
  r.h_order = kHOrder;
  r.h_generated = g.h_generates(static_cast<int>(g.a1 >> 8), static_cast<int>(g.b1 >> 8));
  expect(r.order == 9216, "|G| != 9216");
  expect(r.h_generated, "<(x,x), (y,z)> != H");

  r.edges_checked = 2;
  r.edges_by_criterion = g.criterion_edge(g.a1, g.b1) && g.criterion_edge(g.a2, g.b2);
  r.edges_by_closure = g.closure_generates(g.a1, g.b1) && g.closure_generates(g.a2, g.b2);
  expect(r.edges_by_criterion, "criterion rejects (a1,b1) or (a2,b2)");
  expect(r.edges_by_closure, "closure rejects (a1,b1) or (a2,b2)");

  r.a1a2_adjacent = g.criterion_edge(g.a1, g.a2) || g.closure_generates(g.a1, g.a2);
  expect(!r.a1a2_adjacent, "a1 and a2 are adjacent");
  r.a1a2_common_neighbor = common_neighbor_scan(g.a1, g.a2);
  expect(!r.a1a2_common_neighbor, "a1 and a2 have a common neighbour");

  const GenGraph gamma = criterion_graph(options.threads);
  r.gamma_edges = gamma.edge_count();
  r.isolated = gamma.isolated_count();
  const GenGraph delta = delta_subgraph(gamma);
  r.delta_vertices = delta.size();
  const auto u = delta.vertex_of(g.a1), v = delta.vertex_of(g.a2);
  expect(u && v, "a1 or a2 is isolated");
  if (u && v) {
    expect(!(delta.adjacency[*u] & delta.adjacency[*v]).any(), "adjacency shows a common neighbour");
    const std::vector<int> dist = bfs_distances(delta, *u);
    r.a1a2_distance = dist[*v];
    r.a1_eccentricity = *std::max_element(dist.begin(), dist.end());
    r.connected = std::find(dist.begin(), dist.end(), -1) == dist.end();
    if (!r.connected) r.a1_eccentricity = -1;
  }
  expect(r.a1a2_distance == 3, "distance(a1, a2) != 3");
  expect(r.a1_eccentricity == 3, "eccentricity(a1) != 3");
  expect(r.connected, "Delta(G) is not connected");

  if (options.full_diameter) {
    r.diameter = diameter(delta, options.threads);
    expect(r.diameter == 3, "diameter(Delta(G)) != 3");
  }

  if (!r.certified() && !report_only) {
    std::string msg;
    for (const auto& f : r.failures) msg += (msg.empty() ? "" : "; ") + f;
    throw Error(ErrorCode::CertificationFailed, msg);
  }
  return r;
}

AgreementReport criterion_vs_closure(std::size_t sample, std::uint64_t seed, int threads) {
  const ExampleGroup& g = ExampleGroup::get();
  std::vector<std::pair<Elem, Elem>> pairs;
  pairs.reserve(sample + 4 * kOrder);
  std::mt19937_64 rng = task_rng(seed, 0);
  std::uniform_int_distribution<Elem> pick(0, kOrder - 1);
  for (std::size_t i = 0; i < sample; ++i) {
    const Elem a = pick(rng);
    pairs.emplace_back(a, pick(rng));
  }
  for (Elem s : {g.a1, g.a2, g.b1, g.b2})
    for (Elem e = 0; e < kOrder; ++e) pairs.emplace_back(s, e);

  std::atomic<std::size_t> generating{0};
  std::mutex mutex;
  std::vector<std::size_t> bad;
  run_workers(threads, [&](int worker, int count) {
    std::size_t local = 0;
    std::vector<std::size_t> local_bad;
    for (std::size_t i = static_cast<std::size_t>(worker); i < pairs.size(); i += static_cast<std::size_t>(count)) {
      const bool by_criterion = g.criterion_edge(pairs[i].first, pairs[i].second);
      if (by_criterion != g.closure_generates(pairs[i].first, pairs[i].second)) local_bad.push_back(i);
      if (by_criterion) ++local;
    }
    generating += local;
    std::lock_guard lock(mutex);
    bad.insert(bad.end(), local_bad.begin(), local_bad.end());
  });
  std::sort(bad.begin(), bad.end());

  AgreementReport r;
  r.pairs = pairs.size();
  r.generating = generating;
  r.disagreements = bad.size();
  for (std::size_t i = 0; i < bad.size() && i < 5; ++i) r.examples.push_back(pairs[bad[i]]);
  return r;
}

}  // namespace gensol::example
