#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include <Eigen/Core>

#include "gensol/error.hpp"

namespace gensol {

class FiniteField;

namespace detail {
// Interned fields, indexed by id. Slot 0 is reserved for untyped literals.
extern std::array<const FiniteField*, 256> g_fields;
[[noreturn]] void throw_untyped(const char* op);
}  // namespace detail

/// GF(p^e) with q <= 256. Elements are encoded as integers sum a_i p^i where
/// (a_0, ..., a_{e-1}) are the coefficients of the residue modulo `modulus`.
///
/// Instances are interned: `FiniteField::get` always returns the same object
/// for the same (p, e), and that object lives for the whole process.
class FiniteField {
 public:
  static constexpr int kMaxOrder = 256;

  static const FiniteField& get(int p, int e = 1);
  static const FiniteField& by_order(int q);

  int p() const noexcept { return p_; }
  int e() const noexcept { return e_; }
  int q() const noexcept { return q_; }
  std::uint8_t id() const noexcept { return id_; }
  /// Monic modulus, lowest degree first, length e + 1.
  const std::vector<int>& modulus() const noexcept { return modulus_; }

  std::uint8_t add(std::uint8_t a, std::uint8_t b) const noexcept { return add_[a * q_ + b]; }
  std::uint8_t sub(std::uint8_t a, std::uint8_t b) const noexcept { return add_[a * q_ + neg_[b]]; }
  std::uint8_t mul(std::uint8_t a, std::uint8_t b) const noexcept { return mul_[a * q_ + b]; }
  std::uint8_t neg(std::uint8_t a) const noexcept { return neg_[a]; }
  /// Multiplicative inverse; inv(0) is 0.
  std::uint8_t inv(std::uint8_t a) const noexcept { return inv_[a]; }

  std::vector<int> coefficients(std::uint8_t code) const;

  bool operator==(const FiniteField& o) const noexcept { return id_ == o.id_; }

 private:
  FiniteField(int p, int e, std::uint8_t id);

  int p_;
  int e_;
  int q_;
  std::uint8_t id_;
  std::vector<int> modulus_;
  std::vector<std::uint8_t> add_, mul_, neg_, inv_;
};

/// Lexicographically least monic irreducible polynomial of degree e over GF(p),
/// lowest-degree coefficient first.
std::vector<int> least_irreducible(int p, int e);
bool is_irreducible(int p, const std::vector<int>& poly);
bool is_prime(int n);

inline const FiniteField& field_make(int p, int e) { return FiniteField::get(p, e); }

/// Element of a finite field, two bytes wide so Eigen matrices stay compact.
///
/// `field == 0` marks an untyped literal produced by Eigen internals via
/// Scalar(0) or Scalar(1); such values adopt the field of whatever they are
/// combined with. Arithmetic between two untyped literals is only defined
/// where the result is field independent.
struct Fq {
  std::uint8_t code = 0;
  std::uint8_t field = 0;

  constexpr Fq() = default;
  constexpr Fq(std::uint8_t c, std::uint8_t f) : code(c), field(f) {}
  // NOLINTNEXTLINE(google-explicit-constructor): Eigen needs Scalar(int).
  Fq(int literal) : code(static_cast<std::uint8_t>(literal)), field(0) {
    if (literal != 0 && literal != 1) detail::throw_untyped("literal");
  }
  Fq(const FiniteField& f, int c) : code(static_cast<std::uint8_t>(c)), field(f.id()) {}

  bool is_zero() const noexcept { return code == 0; }
  const FiniteField* field_ptr() const noexcept { return detail::g_fields[field]; }
};

inline std::uint8_t common_field(Fq a, Fq b) noexcept { return a.field ? a.field : b.field; }

inline Fq operator+(Fq a, Fq b) {
  const std::uint8_t f = common_field(a, b);
  if (f) return {detail::g_fields[f]->add(a.code, b.code), f};
  if (a.code == 0) return b;
  if (b.code == 0) return a;
  detail::throw_untyped("+");
}

inline Fq operator-(Fq a) {
  if (a.field) return {detail::g_fields[a.field]->neg(a.code), a.field};
  if (a.code == 0) return a;
  detail::throw_untyped("unary -");
}

inline Fq operator-(Fq a, Fq b) {
  const std::uint8_t f = common_field(a, b);
  if (f) return {detail::g_fields[f]->sub(a.code, b.code), f};
  if (b.code == 0) return a;
  if (a.code == b.code) return Fq{};
  detail::throw_untyped("-");
}

inline Fq operator*(Fq a, Fq b) {
  const std::uint8_t f = common_field(a, b);
  if (f) return {detail::g_fields[f]->mul(a.code, b.code), f};
  if (a.code == 0 || b.code == 0) return Fq{};
  return Fq{1, 0};
}

inline Fq inverse(Fq a) {
  if (a.code == 0) throw Error(ErrorCode::PreconditionViolated, "inverse of zero");
  if (a.field) return {detail::g_fields[a.field]->inv(a.code), a.field};
  return a;
}

inline Fq operator/(Fq a, Fq b) { return a * inverse(b); }

inline Fq& operator+=(Fq& a, Fq b) { return a = a + b; }
inline Fq& operator-=(Fq& a, Fq b) { return a = a - b; }
inline Fq& operator*=(Fq& a, Fq b) { return a = a * b; }
inline Fq& operator/=(Fq& a, Fq b) { return a = a / b; }

inline bool operator==(Fq a, Fq b) noexcept { return a.code == b.code; }
inline bool operator!=(Fq a, Fq b) noexcept { return a.code != b.code; }

std::ostream& operator<<(std::ostream& os, Fq a);

}  // namespace gensol

namespace Eigen {
template <>
struct NumTraits<gensol::Fq> : GenericNumTraits<gensol::Fq> {
  using Real = gensol::Fq;
  using NonInteger = gensol::Fq;
  using Literal = gensol::Fq;
  using Nested = gensol::Fq;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 2
  };
};
}  // namespace Eigen
