#include "cut600/golden.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

namespace cut600 {

double GoldenInt::approx() const {
  static const double kPhi = (1.0 + std::sqrt(5.0)) / 2.0;
  return static_cast<double>(a) + static_cast<double>(b) * kPhi;
}

std::string GoldenInt::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

GoldenInt halve(GoldenInt p) {
  if (!p.is_even()) throw std::domain_error("cannot halve " + p.str() + " in Z[phi]");
  return {p.a / 2, p.b / 2};
}

std::ostream& operator<<(std::ostream& os, const GoldenInt& g) {
  return os << '(' << g.a << ',' << g.b << ')';
}

Quat quat_mul_raw(const Quat& p, const Quat& q) {
  return {
      p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
      p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
      p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
      p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w,
  };
}

Quat quat_mul(const Quat& p, const Quat& q) {
  const Quat r = quat_mul_raw(p, q);
  for (int i = 0; i < 4; ++i) {
    if (!r[i].is_even())
      throw std::domain_error("quat_mul: product " + r.str() + " is not a 2x-scaled quaternion");
  }
  return {halve(r.w), halve(r.x), halve(r.y), halve(r.z)};
}

std::string Quat::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Quat& q) {
  return os << '[' << q.w << ' ' << q.x << ' ' << q.y << ' ' << q.z << ']';
}

}  // namespace cut600
