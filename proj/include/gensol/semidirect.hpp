#pragma once

#include <array>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "gensol/builtin.hpp"
#include "gensol/group.hpp"
#include "gensol/matrix.hpp"

namespace gensol {

/// A closed group K <= GL(n, F) acting on row vectors from the right.
struct LinearGroup {
  const FiniteField* field = nullptr;
  int n = 0;
  GroupHandle handle;
  std::vector<Matrix> matrices;
  /// No proper nonzero K-invariant subspace.
  bool irreducible = false;
  /// dim_F of the commutant End_K(V).
  int end_dimension = 0;

  const CayleyGroup& group() const noexcept { return handle.group; }
  std::size_t order() const noexcept { return handle.group.order(); }
  const Matrix& matrix(Elem k) const { return matrices[k]; }
  /// Index of m, or order() if m is not in K.
  Elem find(const Matrix& m) const;
  bool absolutely_irreducible() const noexcept { return irreducible && end_dimension == 1; }
};

/// Closes the generators; TooLarge when q^n > 2^16 (irreducibility scan).
LinearGroup make_linear_group(const FiniteField& f, int n, const std::vector<Matrix>& gens);
LinearGroup make_linear_group(const GroupHandle& matrix_group);

/// k w in V^u x| K, with w stored as a u x n matrix whose rows are the
/// components w_1, ..., w_u.
struct SdpElement {
  Elem k = 0;
  Matrix w;
};

struct SdpGroup {
  std::shared_ptr<const LinearGroup> K;
  int u = 1;

  int n() const noexcept { return K->n; }
  const FiniteField& field() const noexcept { return *K->field; }
  /// |K| q^{nu}, saturating at SIZE_MAX.
  std::size_t order() const;
  SdpElement identity() const;
  SdpElement make(Elem k, const Matrix& w) const;
  /// Throws GroupMismatch when `a` does not belong to this group.
  void check(const SdpElement& a) const;
};

SdpGroup make_sdp(std::shared_ptr<const LinearGroup> k, int u);

/// (k_a, w_a)(k_b, w_b) = (k_a k_b, w_a X_b + w_b).
SdpElement sdp_mul(const SdpGroup& g, const SdpElement& a, const SdpElement& b);
SdpElement sdp_inverse(const SdpGroup& g, const SdpElement& a);

/// The (n + u) x (n d) block matrix with A_i = I - X_i on top and the u x n
/// blocks B_i (rows w_{i,1}, ..., w_{i,u}) below.
Matrix richiami_matrix(const SdpGroup& g, std::span<const SdpElement> tuple);

/// Generation of V^u x| K by the tuple via the rank criterion. Throws
/// KPartDoesNotGenerateK when the K-parts miss K, PreconditionViolated when K
/// is reducible, and NotAbsolutelyIrreducible when u >= 2 and End_K(V) != F:
/// the criterion is stated over End_K(V), so ranks over a smaller field would
/// be wrong.
bool richiami_generates(const SdpGroup& g, std::span<const SdpElement> tuple);

/// Specialisation to GL(2,2) x| V^2: det(1-k1 1-k2 / v1 v3 / v2 v4) != 0.
/// Throws WrongGroupShape unless G has that shape and KPartFails unless
/// <k1, k2> = GL(2,2).
bool coro_edge(const SdpGroup& g, const SdpElement& g1, const SdpElement& g2);

/// V^u x| K as a CayleyGroup on indices k * q^{nu} + sum_j c_j q^{nj}, where
/// c_j encodes row j with coordinate i as the base-q digit i.
struct SdpCayley {
  CayleyGroup group;
  std::size_t vectors = 0;  // q^n

  Elem encode(const SdpElement& a) const;
  SdpElement decode(Elem e) const;
  const SdpGroup& sdp() const { return *sdp_; }

  std::shared_ptr<const SdpGroup> sdp_;
};

/// Throws TooLarge when q^n > 256 and CeilingExceeded when |G| > 20000.
SdpCayley sdp_cayley(const SdpGroup& g);

/// Closure-based generation test, independent of the rank criterion.
bool closure_generates(const SdpCayley& c, std::span<const SdpElement> tuple);

/// Bridge x0 w0 -- x1 w1 -- x2 w2 -- x3 w3 between two non-isolated vertices
/// of Gamma(V^u x| K) with u <= n.
struct BridgeResult {
  SdpElement g1;
  SdpElement g2;
  /// Rank criterion verdicts on the three consecutive pairs.
  std::array<bool, 3> criterion{};
  /// Closure verdicts, present when |G| <= 2000.
  std::optional<std::array<bool, 3>> closure;

  bool verified() const {
    for (bool b : criterion)
      if (!b) return false;
    if (closure)
      for (bool b : *closure)
        if (!b) return false;
    return true;
  }
};

/// Pads the endpoints to V^n, completes the chain on A_i = I - X_i and
/// projects back to the first u coordinates. Throws PreconditionViolated when
/// u > n, a consecutive pair of K-parts fails to generate K, or an endpoint
/// is isolated.
BridgeResult corfour_bridge(const SdpGroup& g, const SdpElement& end0, Elem x1, Elem x2,
                            const SdpElement& end3);

/// A generating partner of `a`, or nullopt if `a` is isolated in Gamma(G).
/// Any generating pair has rank(A; B) >= u in the block column of `a`, and
/// conversely, for a K-part k with <x, k> = K, padding (A; B) to rank n and
/// completing the block gives a partner. The result is checked by the rank
/// criterion.
std::optional<SdpElement> generating_partner(const SdpGroup& g, const SdpElement& a);

}  // namespace gensol
