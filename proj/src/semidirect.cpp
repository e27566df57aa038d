#include "gensol/semidirect.hpp"

#include <limits>

#include "gensol/constructive.hpp"

namespace gensol {
namespace {

Matrix from_codes(const FiniteField& f, int n, const std::vector<int>& c) {
  Matrix m = zero_matrix(f, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = Fq(f, c[i * n + j]);
  return m;
}

// Dimension of the K-submodule spanned by v, closing under the generators.
Index submodule_dimension(const FiniteField& f, const RowVector& v, const std::vector<Matrix>& gens) {
  Matrix basis = v;
  std::vector<RowVector> pending{v};
  while (!pending.empty()) {
    RowVector b = pending.back();
    pending.pop_back();
    for (const Matrix& x : gens) {
      RowVector image = stamp(f, b * x);
      if (in_row_span(basis, image)) continue;
      basis = vcat(basis, image);
      pending.push_back(image);
    }
  }
  return basis.rows();
}

// dim of {E : E X = X E for every generator X}.
int commutant_dimension(const FiniteField& f, int n, const std::vector<Matrix>& gens) {
  if (gens.empty()) return n * n;
  Matrix system = zero_matrix(f, static_cast<Index>(gens.size()) * n * n, n * n);
  Index row = 0;
  for (const Matrix& x : gens)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j, ++row)
        for (int k = 0; k < n; ++k) {
          system(row, i * n + k) += x(k, j);
          system(row, k * n + j) -= x(i, k);
        }
  return n * n - static_cast<int>(rank(system));
}

Matrix a_block(const SdpGroup& g, Elem k) {
  return identity_matrix(g.field(), g.n()) - g.K->matrix(k);
}

// Rank condition alone, with no precondition checks.
bool rank_condition(const SdpGroup& g, std::span<const SdpElement> tuple) {
  return rank(richiami_matrix(g, tuple)) == g.n() + g.u;
}

// (A; B) padded with rows from a basis extension and then zero rows to an
// n x n block B' with rank(A; B') = n. nullopt when rank(A; B) < u.
std::optional<Matrix> pad_endpoint(const SdpGroup& g, const SdpElement& a) {
  const FiniteField& f = g.field();
  const Index n = g.n();
  const Matrix column = vcat(a_block(g, a.k), a.w);
  const Index r = rank(column);
  if (r < g.u) return std::nullopt;
  Matrix padded = vcat(a.w, basis_extension(f, column, n));
  if (padded.rows() < n) padded = vcat(padded, zero_matrix(f, n - padded.rows(), n));
  return padded;
}

}  // namespace

Elem LinearGroup::find(const Matrix& m) const { return handle.find(codes(m)); }

LinearGroup make_linear_group(const GroupHandle& h) {
  if (h.kind != GroupHandle::Kind::Matrix) throw Error(ErrorCode::WrongGroupShape, "K must be a matrix group");
  const FiniteField& f = *h.field;
  const int n = h.degree;
  std::uint64_t vectors = 1;
  for (int i = 0; i < n; ++i) {
    vectors *= static_cast<std::uint64_t>(f.q());
    if (vectors > (std::uint64_t{1} << 16)) throw Error(ErrorCode::TooLarge, "q^n exceeds 2^16");
  }
  LinearGroup out;
  out.field = &f;
  out.n = n;
  out.handle = h;
  for (Elem k = 0; k < h.group.order(); ++k) out.matrices.push_back(from_codes(f, n, h.element(k)));
  std::vector<Matrix> gens;
  for (Elem k : h.group.generators()) gens.push_back(out.matrices[k]);

  out.irreducible = true;
  for (std::uint64_t i = 1; i < vectors && out.irreducible; ++i)
    if (submodule_dimension(f, vector_at(f, n, i), gens) < n) out.irreducible = false;
  out.end_dimension = commutant_dimension(f, n, gens);
  return out;
}

LinearGroup make_linear_group(const FiniteField& f, int n, const std::vector<Matrix>& gens) {
  std::vector<std::vector<int>> reps;
  for (const Matrix& m : gens) {
    if (m.rows() != n || m.cols() != n) throw Error(ErrorCode::DimensionMismatch, "generator is not n x n");
    reps.push_back(codes(m));
  }
  return make_linear_group(make_matrix_group("K", f, n, reps));
}

std::size_t SdpGroup::order() const {
  std::size_t out = K->order();
  for (int i = 0; i < n() * u; ++i) {
    if (out > std::numeric_limits<std::size_t>::max() / field().q()) return std::numeric_limits<std::size_t>::max();
    out *= field().q();
  }
  return out;
}

SdpElement SdpGroup::identity() const { return {K->group().identity(), zero_matrix(field(), u, n())}; }

SdpElement SdpGroup::make(Elem k, const Matrix& w) const {
  SdpElement a{k, stamp(field(), w)};
  check(a);
  return a;
}

void SdpGroup::check(const SdpElement& a) const {
  if (a.k >= K->order() || a.w.rows() != u || a.w.cols() != n())
    throw Error(ErrorCode::GroupMismatch, "element does not belong to this semidirect product");
}

SdpGroup make_sdp(std::shared_ptr<const LinearGroup> k, int u) {
  if (u < 1) throw Error(ErrorCode::PreconditionViolated, "u must be at least 1");
  return {std::move(k), u};
}

SdpElement sdp_mul(const SdpGroup& g, const SdpElement& a, const SdpElement& b) {
  g.check(a);
  g.check(b);
  return {g.K->group().mul(a.k, b.k), stamp(g.field(), a.w * g.K->matrix(b.k) + b.w)};
}

SdpElement sdp_inverse(const SdpGroup& g, const SdpElement& a) {
  g.check(a);
  const Elem ki = g.K->group().inv(a.k);
  return {ki, stamp(g.field(), -(a.w * g.K->matrix(ki)))};
}

Matrix richiami_matrix(const SdpGroup& g, std::span<const SdpElement> tuple) {
  const Index n = g.n();
  const Index d = static_cast<Index>(tuple.size());
  Matrix m = zero_matrix(g.field(), n + g.u, n * d);
  for (Index i = 0; i < d; ++i) {
    g.check(tuple[i]);
    m.block(0, i * n, n, n) = a_block(g, tuple[i].k);
    m.block(n, i * n, g.u, n) = tuple[i].w;
  }
  return m;
}

bool richiami_generates(const SdpGroup& g, std::span<const SdpElement> tuple) {
  if (!g.K->irreducible) throw Error(ErrorCode::PreconditionViolated, "K does not act irreducibly");
  if (g.u >= 2 && g.K->end_dimension != 1)
    throw Error(ErrorCode::NotAbsolutelyIrreducible, "End_K(V) is larger than the base field");
  std::vector<Elem> ks;
  for (const SdpElement& a : tuple) {
    g.check(a);
    ks.push_back(a.k);
  }
  if (!generates(g.K->group(), ks)) throw Error(ErrorCode::KPartDoesNotGenerateK, "K-parts do not generate K");
  return rank_condition(g, tuple);
}

bool coro_edge(const SdpGroup& g, const SdpElement& g1, const SdpElement& g2) {
  if (g.field().q() != 2 || g.n() != 2 || g.u != 2 || g.K->order() != 6)
    throw Error(ErrorCode::WrongGroupShape, "expected GL(2,2) acting on V^2");
  g.check(g1);
  g.check(g2);
  if (!generates_pair(g.K->group(), g1.k, g2.k)) throw Error(ErrorCode::KPartFails, "<k1, k2> != GL(2,2)");
  const SdpElement pair[2] = {g1, g2};
  return !det(richiami_matrix(g, pair)).is_zero();
}

Elem SdpCayley::encode(const SdpElement& a) const {
  const SdpGroup& g = *sdp_;
  g.check(a);
  const int q = g.field().q();
  std::size_t code = 0;
  for (Index j = g.u; j-- > 0;) {
    std::size_t v = 0;
    for (Index i = g.n(); i-- > 0;) v = v * q + a.w(j, i).code;
    code = code * vectors + v;
  }
  std::size_t span = 1;
  for (int j = 0; j < g.u; ++j) span *= vectors;
  return static_cast<Elem>(a.k * span + code);
}

SdpElement SdpCayley::decode(Elem e) const {
  const SdpGroup& g = *sdp_;
  const int q = g.field().q();
  std::size_t span = 1;
  for (int j = 0; j < g.u; ++j) span *= vectors;
  SdpElement a{static_cast<Elem>(e / span), zero_matrix(g.field(), g.u, g.n())};
  std::size_t code = e % span;
  for (Index j = 0; j < g.u; ++j) {
    std::size_t v = code % vectors;
    code /= vectors;
    for (Index i = 0; i < g.n(); ++i) {
      a.w(j, i) = Fq(g.field(), static_cast<int>(v % q));
      v /= q;
    }
  }
  return a;
}

SdpCayley sdp_cayley(const SdpGroup& g) {
  const FiniteField& f = g.field();
  const int q = f.q();
  const int n = g.n();
  std::size_t vectors = 1;
  for (int i = 0; i < n; ++i) vectors *= q;
  if (vectors > 256) throw Error(ErrorCode::TooLarge, "q^n exceeds 256");
  if (g.order() > 20000) throw Error(ErrorCode::CeilingExceeded, "semidirect product exceeds 20000 elements");

  SdpCayley out;
  out.vectors = vectors;
  out.sdp_ = std::make_shared<const SdpGroup>(g);

  // act[k][v] = code of v X_k; add[v][w] = code of v + w.
  const std::size_t order_k = g.K->order();
  auto act = std::make_shared<std::vector<std::uint8_t>>(order_k * vectors);
  auto add = std::make_shared<std::vector<std::uint8_t>>(vectors * vectors);
  std::vector<RowVector> vecs;
  vecs.reserve(vectors);
  for (std::size_t v = 0; v < vectors; ++v) {
    RowVector row = zero_matrix(f, 1, n);
    std::size_t t = v;
    for (int i = 0; i < n; ++i, t /= q) row(0, i) = Fq(f, static_cast<int>(t % q));
    vecs.push_back(row);
  }
  auto code_of = [&](const RowVector& row) {
    std::size_t c = 0;
    for (int i = n; i-- > 0;) c = c * q + row(0, i).code;
    return static_cast<std::uint8_t>(c);
  };
  for (Elem k = 0; k < order_k; ++k)
    for (std::size_t v = 0; v < vectors; ++v) (*act)[k * vectors + v] = code_of(stamp(f, vecs[v] * g.K->matrix(k)));
  for (std::size_t v = 0; v < vectors; ++v)
    for (std::size_t w = 0; w < vectors; ++w) (*add)[v * vectors + w] = code_of(stamp(f, vecs[v] + vecs[w]));

  std::size_t span = 1;
  for (int j = 0; j < g.u; ++j) span *= vectors;
  const int u = g.u;
  const CayleyGroup* kg = &g.K->group();
  auto keep = out.sdp_;
  CayleyGroup::Oracle mul = [keep, kg, act, add, vectors, span, u](Elem a, Elem b) {
    const Elem ka = static_cast<Elem>(a / span), kb = static_cast<Elem>(b / span);
    std::size_t wa = a % span, wb = b % span, w = 0, scale = 1;
    for (int j = 0; j < u; ++j) {
      const std::size_t va = wa % vectors, vb = wb % vectors;
      wa /= vectors;
      wb /= vectors;
      w += scale * (*add)[(*act)[kb * vectors + va] * vectors + vb];
      scale *= vectors;
    }
    return static_cast<Elem>(kg->mul(ka, kb) * span + w);
  };
  out.group = CayleyGroup(order_k * span, static_cast<Elem>(kg->identity() * span), std::move(mul));
  return out;
}

bool closure_generates(const SdpCayley& c, std::span<const SdpElement> tuple) {
  std::vector<Elem> gens;
  for (const SdpElement& a : tuple) gens.push_back(c.encode(a));
  return generates(c.group, gens);
}

std::optional<SdpElement> generating_partner(const SdpGroup& g, const SdpElement& a) {
  g.check(a);
  const std::optional<Matrix> padded = pad_endpoint(g, a);
  if (!padded) return std::nullopt;
  const FiniteField& f = g.field();
  const Matrix a0 = a_block(g, a.k);
  for (Elem k = 0; k < g.K->order(); ++k) {
    if (!generates_pair(g.K->group(), a.k, k)) continue;
    const Matrix a1 = a_block(g, k);
    if (rank(hcat(a1, a0)) != g.n()) continue;
    const Matrix b1 = complete_block(f, a1, a0, *padded);
    SdpElement partner{k, b1.topRows(g.u)};
    const SdpElement pair[2] = {a, partner};
    if (rank_condition(g, pair)) return partner;
  }
  return std::nullopt;
}

BridgeResult corfour_bridge(const SdpGroup& g, const SdpElement& end0, Elem x1, Elem x2,
                            const SdpElement& end3) {
  g.check(end0);
  g.check(end3);
  const FiniteField& f = g.field();
  const Index n = g.n();
  if (g.u > n) throw Error(ErrorCode::PreconditionViolated, "u exceeds n");
  if (n == 1 && f.q() == 2) throw Error(ErrorCode::PreconditionViolated, "needs n >= 2 or q > 2");
  const CayleyGroup& k = g.K->group();
  if (x1 >= k.order() || x2 >= k.order()) throw Error(ErrorCode::GroupMismatch, "K-part out of range");
  if (!generates_pair(k, end0.k, x1) || !generates_pair(k, x1, x2) || !generates_pair(k, x2, end3.k))
    throw Error(ErrorCode::PreconditionViolated, "consecutive K-parts do not generate K");
  const std::optional<Matrix> b0 = pad_endpoint(g, end0);
  const std::optional<Matrix> b3 = pad_endpoint(g, end3);
  if (!b0 || !b3) throw Error(ErrorCode::PreconditionViolated, "endpoint is an isolated vertex");

  const ChainInstance inst{a_block(g, end0.k), a_block(g, x1), a_block(g, x2), a_block(g, end3.k), *b0, *b3};
  if (!chain_hypotheses_hold(inst))
    throw Error(ErrorCode::PreconditionViolated, "rank(A_i | A_i+1) = n fails; K is not irreducible");
  const ChainSolution sol = chain_completion(f, inst);

  BridgeResult out;
  out.g1 = {x1, sol.B1.topRows(g.u)};
  out.g2 = {x2, sol.B2.topRows(g.u)};
  const SdpElement pairs[3][2] = {{end0, out.g1}, {out.g1, out.g2}, {out.g2, end3}};
  for (int i = 0; i < 3; ++i) out.criterion[i] = richiami_generates(g, pairs[i]);
  if (g.order() <= 2000) {
    const SdpCayley c = sdp_cayley(g);
    std::array<bool, 3> closure{};
    for (int i = 0; i < 3; ++i) closure[i] = closure_generates(c, pairs[i]);
    out.closure = closure;
  }
  return out;
}

}  // namespace gensol
