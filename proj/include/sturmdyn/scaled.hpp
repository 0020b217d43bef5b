#pragma once

#include <cmath>
#include <cstdint>
#include <limits>

namespace sturmdyn {

// Signed floating value m * 2^e with |m| in [0.5, 1) or m == 0.
// Keeps products and sums of wildly-scaled quantities finite; converts back
// to double on demand (may round to 0 or +-inf if out of range).
struct Scaled {
  double m = 0.0;
  std::int64_t e = 0;

  static Scaled from(double v) {
    Scaled s;
    if (v == 0.0) return s;
    int ex = 0;
    s.m = std::frexp(v, &ex);
    s.e = ex;
    return s;
  }

  bool zero() const { return m == 0.0; }

  Scaled operator*(const Scaled& o) const {
    if (zero() || o.zero()) return {};
    Scaled r;
    int ex = 0;
    r.m = std::frexp(m * o.m, &ex);
    r.e = e + o.e + ex;
    return r;
  }

  Scaled operator+(const Scaled& o) const {
    if (zero()) return o;
    if (o.zero()) return *this;
    const Scaled& hi = (e >= o.e) ? *this : o;
    const Scaled& lo = (e >= o.e) ? o : *this;
    const std::int64_t d = hi.e - lo.e;
    if (d > 1074) return hi;  // lo vanishes below one ulp of hi
    Scaled r;
    int ex = 0;
    r.m = std::frexp(hi.m + std::ldexp(lo.m, static_cast<int>(-d)), &ex);
    r.e = hi.e + ex;
    if (r.m == 0.0) r.e = 0;
    return r;
  }

  Scaled operator-(const Scaled& o) const {
    Scaled neg = o;
    neg.m = -neg.m;
    return *this + neg;
  }

  double to_double() const {
    if (zero()) return 0.0;
    if (e > 1024) return m > 0 ? std::numeric_limits<double>::infinity()
                               : -std::numeric_limits<double>::infinity();
    if (e < -1073) return 0.0;
    return std::ldexp(m, static_cast<int>(e));
  }

  // log of |value|; requires nonzero
  double log_abs() const {
    return std::log(std::fabs(m)) + static_cast<double>(e) * 0.6931471805599453;
  }

  int sign() const { return m > 0 ? 1 : (m < 0 ? -1 : 0); }

  bool abs_less(const Scaled& o) const {
    if (zero()) return !o.zero();
    if (o.zero()) return false;
    if (e != o.e) return e < o.e;
    return std::fabs(m) < std::fabs(o.m);
  }
};

}  // namespace sturmdyn
