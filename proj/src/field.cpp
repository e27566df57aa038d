#include "gensol/field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <utility>

namespace gensol {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPrime: return "NonPrime";
    case ErrorCode::OrderTooLarge: return "OrderTooLarge";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::RankHypothesisFailed: return "RankHypothesisFailed";
    case ErrorCode::HypothesisFailed: return "HypothesisFailed";
    case ErrorCode::ConditionFailed: return "ConditionFailed";
    case ErrorCode::CeilingExceeded: return "CeilingExceeded";
    case ErrorCode::IsolatedVertex: return "IsolatedVertex";
    case ErrorCode::NoTupleGeneratesModN: return "NoTupleGeneratesModN";
    case ErrorCode::BaseDoesNotGenerateModN: return "BaseDoesNotGenerateModN";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::NotAbelian: return "NotAbelian";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::GroupMismatch: return "GroupMismatch";
    case ErrorCode::KPartDoesNotGenerateK: return "KPartDoesNotGenerateK";
    case ErrorCode::WrongGroupShape: return "WrongGroupShape";
    case ErrorCode::KPartFails: return "KPartFails";
    case ErrorCode::NotAbsolutelyIrreducible: return "NotAbsolutelyIrreducible";
    case ErrorCode::CertificationFailed: return "CertificationFailed";
  }
  return "Unknown";
}

namespace detail {
std::array<const FiniteField*, 256> g_fields{};

void throw_untyped(const char* op) {
  throw Error(ErrorCode::FieldMismatch,
              std::string("field-dependent operation on untyped literals: ") + op);
}
}  // namespace detail

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

using Poly = std::vector<int>;  // lowest degree first, no trailing zeros except for zero poly

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic b over GF(p).
Poly poly_mod(Poly a, const Poly& b, int p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    const int lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i)
      a[shift + i] = ((a[shift + i] - lead * b[i]) % p + p) % p;
    trim(a);
  }
  return a;
}

// All monic polynomials of degree d, in lexicographic order of the integer
// encoding sum c_i p^i of their lower coefficients.
Poly monic_from_index(int p, int d, int index) {
  Poly f(d + 1, 0);
  for (int i = 0; i < d; ++i) {
    f[i] = index % p;
    index /= p;
  }
  f[d] = 1;
  return f;
}

int ipow(int b, int e) {
  int r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

bool is_irreducible(int p, const Poly& poly) {
  Poly f = poly;
  trim(f);
  const int deg = static_cast<int>(f.size()) - 1;
  if (deg < 1) return false;
  for (int d = 1; 2 * d <= deg; ++d) {
    const int count = ipow(p, d);
    for (int i = 0; i < count; ++i) {
      if (poly_mod(f, monic_from_index(p, d, i), p).empty()) return false;
    }
  }
  return true;
}

Poly least_irreducible(int p, int e) {
  const int count = ipow(p, e);
  for (int i = 0; i < count; ++i) {
    Poly f = monic_from_index(p, e, i);
    if (is_irreducible(p, f)) return f;
  }
  throw Error(ErrorCode::PreconditionViolated, "no irreducible polynomial found");
}

FiniteField::FiniteField(int p, int e, std::uint8_t id) : p_(p), e_(e), q_(ipow(p, e)), id_(id) {
  modulus_ = e == 1 ? Poly{0, 1} : least_irreducible(p, e);
  const int q = q_;
  add_.resize(q * q);
  mul_.resize(q * q);
  neg_.resize(q);
  inv_.resize(q);

  auto digits = [&](int code) {
    Poly d(e, 0);
    for (int i = 0; i < e; ++i) {
      d[i] = code % p;
      code /= p;
    }
    return d;
  };
  auto encode = [&](const Poly& d) {
    int code = 0;
    for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) code = code * p + d[i];
    return code;
  };

  for (int a = 0; a < q; ++a) {
    const Poly da = digits(a);
    Poly dn(e);
    for (int i = 0; i < e; ++i) dn[i] = (p - da[i]) % p;
    neg_[a] = static_cast<std::uint8_t>(encode(dn));
    for (int b = 0; b < q; ++b) {
      const Poly db = digits(b);
      Poly s(e);
      for (int i = 0; i < e; ++i) s[i] = (da[i] + db[i]) % p;
      add_[a * q + b] = static_cast<std::uint8_t>(encode(s));

      Poly prod(2 * e - 1, 0);
      for (int i = 0; i < e; ++i)
        for (int j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
      Poly r = e == 1 ? prod : poly_mod(prod, modulus_, p);
      r.resize(e, 0);
      mul_[a * q + b] = static_cast<std::uint8_t>(encode(r));
    }
  }
  for (int a = 1; a < q; ++a)
    for (int b = 1; b < q; ++b)
      if (mul_[a * q + b] == 1) inv_[a] = static_cast<std::uint8_t>(b);
}

const FiniteField& FiniteField::get(int p, int e) {
  if (!is_prime(p)) throw Error(ErrorCode::NonPrime, std::to_string(p) + " is not prime");
  if (e < 1) throw Error(ErrorCode::PreconditionViolated, "extension degree must be >= 1");
  long long q = 1;
  for (int i = 0; i < e; ++i) {
    q *= p;
    if (q > kMaxOrder)
      throw Error(ErrorCode::OrderTooLarge,
                  std::to_string(p) + "^" + std::to_string(e) + " exceeds 256");
  }

  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::unique_ptr<FiniteField>> registry;
  std::lock_guard lock(mutex);
  auto& slot = registry[{p, e}];
  if (!slot) {
    const auto id = static_cast<std::uint8_t>(registry.size());
    slot.reset(new FiniteField(p, e, id));
    detail::g_fields[id] = slot.get();
  }
  return *slot;
}

const FiniteField& FiniteField::by_order(int q) {
  if (q < 2) throw Error(ErrorCode::NonPrime, "field order must be a prime power");
  int p = 2;
  while (q % p != 0) ++p;
  int e = 0;
  int r = q;
  while (r % p == 0) {
    r /= p;
    ++e;
  }
  if (r != 1) throw Error(ErrorCode::NonPrime, std::to_string(q) + " is not a prime power");
  return get(p, e);
}

std::vector<int> FiniteField::coefficients(std::uint8_t code) const {
  std::vector<int> d(e_);
  int c = code;
  for (int i = 0; i < e_; ++i) {
    d[i] = c % p_;
    c /= p_;
  }
  return d;
}

std::ostream& operator<<(std::ostream& os, Fq a) { return os << static_cast<int>(a.code); }

}  // namespace gensol
