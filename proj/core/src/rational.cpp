#include "splinefan/rational.hpp"

#include <sstream>

namespace splinefan {

Rational Rational::parse(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    return Rational(Integer(s));
  }
  Integer num(s.substr(0, slash));
  Integer den(s.substr(slash + 1));
  return Rational(num, den);
}

std::string Rational::str() const {
  std::ostringstream os;
  os << v_.get_num();
  if (v_.get_den() != 1) os << '/' << v_.get_den();
  return os.str();
}

RatVec primitive_integer_vector(const RatVec& v, bool fix_sign) {
  Integer lcm_den = 1;
  for (const auto& x : v) lcm_den = lcm(lcm_den, x.den());
  Integer g = 0;
  std::vector<Integer> scaled(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    scaled[i] = v[i].num() * (lcm_den / v[i].den());
    g = gcd(g, scaled[i]);
  }
  if (g == 0) throw std::invalid_argument("primitive_integer_vector: zero vector");
  int flip = 1;
  if (fix_sign) {
    for (const auto& x : scaled) {
      if (x != 0) {
        flip = sgn(x) < 0 ? -1 : 1;
        break;
      }
    }
  }
  RatVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rational(flip * scaled[i] / g);
  return out;
}

bool is_zero_vector(const RatVec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Rational dot(const RatVec& a, const RatVec& b) {
  Rational r;
  for (std::size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
  return r;
}

std::string vec_str(const RatVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].str();
  }
  return s + ")";
}

}  // namespace splinefan
