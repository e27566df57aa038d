#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gensol/graph.hpp"
#include "gensol/group.hpp"
#include "gensol/matrix.hpp"

namespace gensol::example {

// G = H x| W with H = GL(2,2) x GL(2,2) and W = V1 x V2 x V3 x V4, each V_i
// a copy of GF(2)^2. (x, y) in H acts as (v1^x, v2^x, v3^y, v4^y).
//
// G has five classes of complemented chief factors: a central Z of order 2,
// two non-central factors U1, U2 of order 3 (one per GL(2,2) factor), and the
// modules V1 and V3. Generation modulo their crowns turns into conditions
// (1)-(3) of `criterion_edge`: (1) covers Z, U1 and U2 together, (2) covers
// V1 x V2 under the first factor and (3) covers V3 x V4 under the second.

/// GL(2,2) elements are indexed 0..5 by their 4-bit code
/// m00 | m01 << 1 | m10 << 2 | m11 << 3. Vectors (a, b) are a | b << 1.
struct ExampleElement {
  int hx = 0;
  int hy = 0;
  std::array<int, 4> v{};  // 2-bit vector codes
};

constexpr std::size_t kOrder = 9216;
constexpr std::size_t kHOrder = 36;
constexpr std::size_t kWOrder = 256;

class ExampleGroup {
 public:
  /// Index layout: (hx * 6 + hy) * 256 + (v1 | v2 << 2 | v3 << 4 | v4 << 6).
  static const ExampleGroup& get();

  const CayleyGroup& group() const noexcept { return group_; }
  Elem encode(const ExampleElement& e) const;
  ExampleElement decode(Elem e) const;

  /// GL(2,2) index of a 2x2 matrix given by rows of bits, and back.
  int gl_index(int code) const;
  int gl_code(int index) const { return gl_codes_[index]; }
  Matrix gl_matrix(int index) const;
  /// Product in GL(2,2), row vector convention.
  int gl_mul(int a, int b) const { return gl_mul_[a][b]; }
  /// v^k for a 2-bit vector.
  int act(int v, int k) const { return act_[k][v]; }

  /// <h1, h2> = H, from the precomputed 36 x 36 table.
  bool h_generates(int h1, int h2) const { return h_gen_[h1][h2]; }

  /// Conditions (1), (2) and (3).
  bool criterion_edge(Elem g1, Elem g2) const;
  /// Determinant keys for conditions (2) and (3), in gf2_det4 layout.
  std::array<std::uint16_t, 2> det_keys(Elem g1, Elem g2) const;

  /// Independent test: BFS closure of {g1, g2} with table lookups.
  bool closure_generates(Elem g1, Elem g2) const;

  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>(h_mul_[a >> 8][b >> 8] * 256 + (w_act_[b >> 8][a & 255] ^ (b & 255)));
  }

  std::string label(Elem e) const;

  // Named constants.
  int x, y, z, one;
  Elem a1, a2, b1, b2;

 private:
  ExampleGroup();
  std::array<int, 6> gl_codes_{};
  std::array<std::array<int, 6>, 6> gl_mul_{};
  std::array<std::array<int, 4>, 6> act_{};
  std::array<std::array<int, kHOrder>, kHOrder> h_mul_{};
  std::array<std::array<bool, kHOrder>, kHOrder> h_gen_{};
  std::vector<std::array<std::uint8_t, kWOrder>> w_act_;
  CayleyGroup group_;
};

/// 4x4 GF(2) matrix (1-k1 | 1-k2 / u1 | u2 / u3 | u4) as a gf2_det4 key.
std::uint16_t det_key(int k1_code, int k2_code, int u1, int u2, int u3, int u4);

/// The four displayed determinants (a1,b1) and (a2,b2) under conditions (2)
/// and (3), in the order (2) for a1 b1, (3) for a1 b1, (2) for a2 b2, (3) for
/// a2 b2.
std::array<int, 4> displayed_determinants();
/// The two obstruction determinants for h1 = y and v1 = (alpha, beta),
/// v2 = (gamma, delta); index = alpha | beta << 1 | gamma << 2 | delta << 3.
std::array<std::array<int, 2>, 16> obstruction_determinants();

/// First b adjacent to both u and v, scanning all non-identity elements.
std::optional<Elem> common_neighbor_scan(Elem u, Elem v);

/// Adjacency of Gamma(G) built from the criterion.
GenGraph criterion_graph(int threads = 1);

struct CertifyOptions {
  bool full_diameter = false;
  int threads = 1;
};

struct DiameterReport {
  std::size_t order = 0;
  std::size_t h_order = 0;
  bool h_generated = false;
  std::size_t edges_checked = 0;
  bool edges_by_criterion = false;
  bool edges_by_closure = false;
  bool a1a2_adjacent = true;
  std::optional<Elem> a1a2_common_neighbor;
  int a1a2_distance = -1;
  int a1_eccentricity = -1;
  bool connected = false;
  std::size_t gamma_edges = 0;
  std::size_t isolated = 0;
  std::size_t delta_vertices = 0;
  std::optional<int> diameter;
  std::vector<std::string> failures;

  bool certified() const { return failures.empty(); }
};

/// Runs every certification step. Throws CertificationFailed if any step
/// diverges from the expected outcome, unless `report_only` is set.
DiameterReport certify_diameter(const CertifyOptions& options = {}, bool report_only = false);

struct AgreementReport {
  std::size_t pairs = 0;
  std::size_t generating = 0;
  std::size_t disagreements = 0;
  std::vector<std::pair<Elem, Elem>> examples;  // first few disagreements
};

/// `sample` seeded random pairs plus every pair with one entry in
/// {a1, a2, b1, b2}: criterion against closure.
AgreementReport criterion_vs_closure(std::size_t sample, std::uint64_t seed, int threads = 1);

}  // namespace gensol::example
