#ifndef CUT600_GOLDEN_HPP
#define CUT600_GOLDEN_HPP

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>

namespace cut600 {

/// Element a + b*phi of the golden integer ring Z[phi], phi^2 = phi + 1.
///
/// Coefficients are 64-bit and every operation is overflow-checked. Values
/// reachable from the 600-cell coordinates are tiny: vertex components have
/// coefficients in [-2, 2], inner products and quaternion products stay
/// within [-8, 8], and the 4x4 determinants used for point-group naming
/// stay below 10^4. Overflow is therefore impossible in practice and is
/// reported as std::overflow_error if it ever happens.
struct GoldenInt {
  std::int64_t a = 0;  // unit coefficient
  std::int64_t b = 0;  // phi coefficient

  constexpr GoldenInt() = default;
  constexpr GoldenInt(std::int64_t unit, std::int64_t phi) : a(unit), b(phi) {}

  static constexpr GoldenInt phi() { return {0, 1}; }

  friend constexpr bool operator==(const GoldenInt&, const GoldenInt&) = default;
  // Lexicographic on (a, b). This is a storage order, not the real order.
  friend constexpr auto operator<=>(const GoldenInt&, const GoldenInt&) = default;

  bool is_zero() const { return a == 0 && b == 0; }
  bool is_even() const { return a % 2 == 0 && b % 2 == 0; }

  /// Approximate real value; used only for printing.
  double approx() const;
  std::string str() const;
};

namespace detail {
inline std::int64_t checked_add(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_add_overflow(x, y, &r)) throw std::overflow_error("GoldenInt addition overflow");
  return r;
}
inline std::int64_t checked_sub(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_sub_overflow(x, y, &r)) throw std::overflow_error("GoldenInt subtraction overflow");
  return r;
}
inline std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_mul_overflow(x, y, &r)) throw std::overflow_error("GoldenInt multiplication overflow");
  return r;
}
}  // namespace detail

inline GoldenInt operator+(GoldenInt p, GoldenInt q) {
  return {detail::checked_add(p.a, q.a), detail::checked_add(p.b, q.b)};
}
inline GoldenInt operator-(GoldenInt p, GoldenInt q) {
  return {detail::checked_sub(p.a, q.a), detail::checked_sub(p.b, q.b)};
}
inline GoldenInt operator-(GoldenInt p) { return GoldenInt{} - p; }

/// (p.a + p.b phi)(q.a + q.b phi) with phi^2 = phi + 1.
inline GoldenInt g_mul(GoldenInt p, GoldenInt q) {
  using namespace detail;
  const std::int64_t bb = checked_mul(p.b, q.b);
  return {checked_add(checked_mul(p.a, q.a), bb),
          checked_add(checked_add(checked_mul(p.a, q.b), checked_mul(p.b, q.a)), bb)};
}
inline GoldenInt operator*(GoldenInt p, GoldenInt q) { return g_mul(p, q); }
inline GoldenInt& operator+=(GoldenInt& p, GoldenInt q) { return p = p + q; }
inline GoldenInt& operator-=(GoldenInt& p, GoldenInt q) { return p = p - q; }

/// Exact halving; throws if a coefficient is odd.
GoldenInt halve(GoldenInt p);

std::ostream& operator<<(std::ostream& os, const GoldenInt& g);

/// Quaternion w + xi + yj + zk over Z[phi]. 600-cell vertices are stored at
/// twice their true coordinates so that every component is a ring element.
struct Quat {
  GoldenInt w, x, y, z;

  friend constexpr bool operator==(const Quat&, const Quat&) = default;
  // Lexicographic on (w.a, w.b, x.a, x.b, y.a, y.b, z.a, z.b).
  friend constexpr auto operator<=>(const Quat&, const Quat&) = default;

  const GoldenInt& operator[](int i) const {
    switch (i) {
      case 0: return w;
      case 1: return x;
      case 2: return y;
      default: return z;
    }
  }
  GoldenInt& operator[](int i) { return const_cast<GoldenInt&>(std::as_const(*this)[i]); }

  std::string str() const;
};

inline Quat operator-(const Quat& q) { return {-q.w, -q.x, -q.y, -q.z}; }
inline Quat operator+(const Quat& p, const Quat& q) {
  return {p.w + q.w, p.x + q.x, p.y + q.y, p.z + q.z};
}
inline Quat conj(const Quat& q) { return {q.w, -q.x, -q.y, -q.z}; }

/// Raw Hamilton product, no rescaling.
Quat quat_mul_raw(const Quat& p, const Quat& q);

/// Product of two 2x-scaled quaternions, rescaled back to 2x. Throws
/// std::domain_error if the raw product is not divisible by 2, which means
/// the inputs were not both vertex-scaled quaternions.
Quat quat_mul(const Quat& p, const Quat& q);

/// Euclidean inner product of the stored (2x-scaled) components.
inline GoldenInt inner4(const Quat& p, const Quat& q) {
  return p.w * q.w + p.x * q.x + p.y * q.y + p.z * q.z;
}

std::ostream& operator<<(std::ostream& os, const Quat& q);

}  // namespace cut600

#endif  // CUT600_GOLDEN_HPP
