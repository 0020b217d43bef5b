#include "sturmdyn/numbertheory.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <utility>

namespace sturmdyn::numbertheory {

namespace {

constexpr std::int64_t kWordBudget = std::int64_t(1) << 26;

std::int64_t isqrt64(std::int64_t v) {
  if (v < 0) throw std::invalid_argument("numbertheory: isqrt of negative value");
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
  while (r > 0 && r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

std::int64_t checked_muladd(std::int64_t a, std::int64_t b, std::int64_t c) {
  std::int64_t ab = 0, r = 0;
  if (__builtin_mul_overflow(a, b, &ab) || __builtin_add_overflow(ab, c, &r))
    throw std::overflow_error("numbertheory: convergent overflow; reduce depth");
  return r;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a < 0 ? -a : a;
}

}  // namespace

int ContinuedFraction::coefficient(int n) const {
  if (n < 1 || n > depth())
    throw std::out_of_range("numbertheory: coefficient index " + std::to_string(n) +
                            " outside depth " + std::to_string(depth()));
  return coeffs_[static_cast<std::size_t>(n - 1)];
}

std::int64_t ContinuedFraction::p(int n) const {
  if (n < 0 || n > convergent_depth())
    throw std::out_of_range("numbertheory: convergent index " + std::to_string(n) +
                            " out of range (available depth " +
                            std::to_string(convergent_depth()) + ")");
  return pconv_[static_cast<std::size_t>(n)];
}

std::int64_t ContinuedFraction::q(int n) const {
  if (n < 0 || n > convergent_depth())
    throw std::out_of_range("numbertheory: convergent index " + std::to_string(n) +
                            " out of range (available depth " +
                            std::to_string(convergent_depth()) + ")");
  return qconv_[static_cast<std::size_t>(n)];
}

void ContinuedFraction::build_convergents() {
  // Convergents stop where int64 would overflow; coefficients stay available
  // to full depth (density estimates need no convergents).
  const int n = depth();
  pconv_ = {0};
  qconv_ = {1};
  if (n == 0) return;
  pconv_.push_back(1);
  qconv_.push_back(coeffs_[0]);
  for (int k = 2; k <= n; ++k) {
    const std::int64_t a = coeffs_[static_cast<std::size_t>(k - 1)];
    std::int64_t pk = 0, qk = 0;
    try {
      pk = checked_muladd(a, pconv_[static_cast<std::size_t>(k - 1)],
                          pconv_[static_cast<std::size_t>(k - 2)]);
      qk = checked_muladd(a, qconv_[static_cast<std::size_t>(k - 1)],
                          qconv_[static_cast<std::size_t>(k - 2)]);
    } catch (const std::overflow_error&) {
      break;
    }
    pconv_.push_back(pk);
    qconv_.push_back(qk);
  }
  const int cd = convergent_depth();
  for (int k = 1; k <= cd; ++k) {
    if (gcd64(pconv_[static_cast<std::size_t>(k)], qconv_[static_cast<std::size_t>(k)]) != 1)
      throw std::logic_error("numbertheory: convergents not coprime");
    if (k >= 2 && qconv_[static_cast<std::size_t>(k)] <= qconv_[static_cast<std::size_t>(k - 1)])
      throw std::logic_error("numbertheory: denominators not increasing");
  }
}

int ContinuedFraction::extended_coefficient(int n) const {
  if (n <= depth()) return coeffs_[static_cast<std::size_t>(n - 1)];
  if (period_.empty()) return 0;
  const int len = static_cast<int>(period_.size());
  const int m = ((n - 1 - period_start_) % len + len) % len;
  return period_[static_cast<std::size_t>(m)];
}

void ContinuedFraction::compute_value() {
  // Deep convergents pin the value to full double precision; a declared
  // period supplies coefficients beyond the stored depth.
  std::int64_t pm2 = 0, pm1 = 1, qm2 = 1, qm1 = depth() >= 1 ? coeffs_[0] : 1;
  if (depth() == 0) {
    value_ = 0.0;
    return;
  }
  int k = 2;
  while (true) {
    const int a = extended_coefficient(k);
    if (a == 0) break;
    std::int64_t pn = 0, qn = 0;
    try {
      pn = checked_muladd(a, pm1, pm2);
      qn = checked_muladd(a, qm1, qm2);
    } catch (const std::overflow_error&) {
      break;
    }
    pm2 = pm1;
    pm1 = pn;
    qm2 = qm1;
    qm1 = qn;
    ++k;
    // q^2 beyond 4e33 already pins the value below one ulp
    if (static_cast<double>(qm1) > 7.0e16) break;
  }
  value_ = static_cast<double>(pm1) / static_cast<double>(qm1);
}

ContinuedFraction ContinuedFraction::golden(int depth) {
  return from_periodic({1}, depth);
}

ContinuedFraction ContinuedFraction::from_periodic(std::vector<int> period, int depth) {
  if (period.empty()) throw std::invalid_argument("numbertheory: empty period");
  for (int a : period)
    if (a < 1) throw std::invalid_argument("numbertheory: partial quotients must be positive");
  if (depth < 1) throw std::invalid_argument("numbertheory: depth must be >= 1");
  ContinuedFraction cf;
  cf.period_ = std::move(period);
  cf.coeffs_.reserve(static_cast<std::size_t>(depth));
  for (int k = 0; k < depth; ++k)
    cf.coeffs_.push_back(cf.period_[static_cast<std::size_t>(k) % cf.period_.size()]);
  cf.build_convergents();
  cf.compute_value();
  return cf;
}

ContinuedFraction ContinuedFraction::from_coefficients(std::vector<int> coefficients) {
  if (coefficients.empty()) throw std::invalid_argument("numbertheory: empty coefficient list");
  for (int a : coefficients)
    if (a < 1) throw std::invalid_argument("numbertheory: partial quotients must be positive");
  ContinuedFraction cf;
  cf.coeffs_ = std::move(coefficients);
  cf.build_convergents();
  cf.compute_value();
  return cf;
}

ContinuedFraction ContinuedFraction::from_surd(const QuadraticSurd& surd, int depth) {
  if (depth < 1) throw std::invalid_argument("numbertheory: depth must be >= 1");
  if (surd.q == 0) throw std::invalid_argument("numbertheory: surd with zero denominator");
  const std::int64_t s0 = isqrt64(surd.d);
  if (s0 * s0 == surd.d)
    throw std::invalid_argument("numbertheory: surd discriminant is a perfect square");
  const double x = (static_cast<double>(surd.p) + std::sqrt(static_cast<double>(surd.d))) /
                   static_cast<double>(surd.q);
  if (!(x > 0.0 && x < 1.0))
    throw std::invalid_argument("numbertheory: surd value must lie in (0,1)");

  // Expand 1/x = (-p q + sqrt(d q^2)) / (d - p^2), normalised so that
  // Q divides D - P^2; thereafter P,Q stay bounded by 2 sqrt(D).
  std::int64_t P = 0, D = 0, Q = 0;
  {
    std::int64_t num_p = 0, num_q = 0, disc = 0;
    if (__builtin_mul_overflow(-surd.p, surd.q, &num_p) ||
        __builtin_mul_overflow(surd.q, surd.q, &num_q) ||
        __builtin_mul_overflow(surd.d, num_q, &disc))
      throw std::overflow_error("numbertheory: surd parameters too large");
    std::int64_t den = surd.d - surd.p * surd.p;
    if (den == 0) throw std::invalid_argument("numbertheory: degenerate surd");
    P = num_p;
    D = disc;
    Q = den;
    if ((D - P * P) % Q != 0) {
      std::int64_t aq = Q < 0 ? -Q : Q;
      if (__builtin_mul_overflow(P, aq, &P) || __builtin_mul_overflow(D, aq * aq, &D))
        throw std::overflow_error("numbertheory: surd normalisation overflow");
      Q = Q * aq;
    }
  }
  const std::int64_t s = isqrt64(D);
  std::vector<int> coeffs;
  coeffs.reserve(static_cast<std::size_t>(depth));
  std::vector<std::pair<std::int64_t, std::int64_t>> states;  // (P,Q) before each step
  std::vector<int> detected_period;
  int detected_start = 0;
  for (int k = 0; k < depth; ++k) {
    if (detected_period.empty()) {
      for (std::size_t i = 0; i < states.size(); ++i) {
        if (states[i].first == P && states[i].second == Q) {
          detected_start = static_cast<int>(i);
          detected_period.assign(coeffs.begin() + static_cast<std::ptrdiff_t>(i), coeffs.end());
          break;
        }
      }
      if (detected_period.empty()) states.emplace_back(P, Q);
    }
    std::int64_t a = 0;
    if (Q > 0) {
      a = (P + s) >= 0 ? (P + s) / Q : -(((-(P + s)) + Q - 1) / Q);
    } else {
      // floor with sqrt rounded the other way for negative denominators
      const std::int64_t num = P + s + 1;
      a = num >= 0 ? -((num + (-Q) - 1) / (-Q)) : (-num) / (-Q);
    }
    if (a < 1)
      throw std::invalid_argument("numbertheory: surd expansion produced nonpositive quotient");
    if (a > std::numeric_limits<int>::max())
      throw std::overflow_error("numbertheory: surd partial quotient exceeds int");
    coeffs.push_back(static_cast<int>(a));
    const std::int64_t Pn = a * Q - P;
    if ((D - Pn * Pn) % Q != 0) throw std::logic_error("numbertheory: surd step not exact");
    const std::int64_t Qn = (D - Pn * Pn) / Q;
    if (Qn == 0) throw std::logic_error("numbertheory: surd expansion terminated");
    P = Pn;
    Q = Qn;
  }
  ContinuedFraction cf;
  cf.coeffs_ = std::move(coeffs);
  if (!detected_period.empty()) {
    cf.period_ = std::move(detected_period);
    cf.period_start_ = detected_start;
  }
  cf.build_convergents();
  cf.compute_value();
  return cf;
}

ContinuedFraction ContinuedFraction::expand(double omega, int depth) {
  if (depth < 1) throw std::invalid_argument("numbertheory: depth must be >= 1");
  if (!(omega > 0.0 && omega < 1.0))
    throw std::invalid_argument("numbertheory: omega must lie in (0,1)");
  const double cutoff = std::ldexp(1.0, -40);
  std::vector<int> coeffs;
  coeffs.reserve(static_cast<std::size_t>(depth));
  double x = omega;
  for (int k = 1; k <= depth; ++k) {
    if (x == 0.0)
      throw std::invalid_argument("numbertheory: rational omega detected at level " +
                                  std::to_string(k));
    const double inv = 1.0 / x;
    double a = std::floor(inv);
    double rem = inv - a;
    if (rem < 0.0) {  // floor at representation boundary
      a -= 1.0;
      rem = inv - a;
    }
    if (a < 1.0)
      throw std::logic_error("numbertheory: expansion produced nonpositive quotient");
    if (rem == 0.0 && k < depth)
      throw std::invalid_argument("numbertheory: rational omega detected at level " +
                                  std::to_string(k));
    if (rem != 0.0 && rem < cutoff && k < depth)
      throw std::invalid_argument(
          "numbertheory: floating-point precision exhausted at level " + std::to_string(k) +
          " (remainder below 2^-40); use an exact construction for deeper expansions");
    if (a > static_cast<double>(std::numeric_limits<int>::max()))
      throw std::overflow_error("numbertheory: partial quotient exceeds int");
    coeffs.push_back(static_cast<int>(a));
    x = rem;
  }
  ContinuedFraction cf;
  cf.coeffs_ = std::move(coeffs);
  cf.build_convergents();
  cf.value_ = omega;
  // Reconstruction must agree within 1/q_depth^2; a miss means the deep
  // coefficients were silently corrupted by rounding.
  const int n = cf.convergent_depth();
  const double recon =
      static_cast<double>(cf.pconv_[static_cast<std::size_t>(n)]) /
      static_cast<double>(cf.qconv_[static_cast<std::size_t>(n)]);
  const double qn = static_cast<double>(cf.qconv_[static_cast<std::size_t>(n)]);
  if (std::fabs(recon - omega) >= 1.0 / (qn * qn))
    throw std::invalid_argument(
        "numbertheory: floating-point precision exhausted before depth " + std::to_string(depth) +
        " (1/q^2 reconstruction check failed); use an exact construction");
  return cf;
}

double ContinuedFraction::density_estimate() const {
  if (coeffs_.empty()) throw std::invalid_argument("numbertheory: no coefficients");
  if (!period_.empty()) {
    double sum = 0.0;
    for (int a : period_) sum += a;
    return sum / static_cast<double>(period_.size());
  }
  const int n = depth();
  const int minlen = (n + 1) / 2;
  // suffix sums: average of a_{m+1}..a_n over windows of length >= depth/2
  double best = 0.0;
  double sum = 0.0;
  int len = 0;
  for (int m = n - 1; m >= 0; --m) {
    sum += coeffs_[static_cast<std::size_t>(m)];
    ++len;
    if (len >= minlen) best = std::max(best, sum / static_cast<double>(len));
  }
  return best;
}

int ContinuedFraction::max_coefficient() const {
  if (!period_.empty()) {
    int mx = 1;
    for (int a : period_) mx = std::max(mx, a);
    return mx;
  }
  int mx = 1;
  for (int a : coeffs_) mx = std::max(mx, a);
  return mx;
}

ContinuedFraction ContinuedFraction::deepened(int depth) const {
  if (depth <= this->depth()) return *this;
  if (period_.empty())
    throw std::invalid_argument("numbertheory: cannot deepen a non-periodic fraction beyond depth " +
                                std::to_string(this->depth()));
  ContinuedFraction cf;
  cf.period_ = period_;
  cf.period_start_ = period_start_;
  cf.coeffs_ = coeffs_;
  cf.coeffs_.reserve(static_cast<std::size_t>(depth));
  for (int k = this->depth() + 1; k <= depth; ++k)
    cf.coeffs_.push_back(extended_coefficient(k));
  cf.build_convergents();
  cf.compute_value();
  return cf;
}

SturmianWord build_word(const ContinuedFraction& cf, int level) {
  if (level < -1) throw std::invalid_argument("numbertheory: word level must be >= -1");
  if (level >= 1 && level > cf.depth())
    throw std::invalid_argument("numbertheory: word level " + std::to_string(level) +
                                " beyond available coefficients (depth " +
                                std::to_string(cf.depth()) + ")");
  SturmianWord w;
  w.level = level;
  if (level == -1) {
    w.symbols = {1};
    return w;
  }
  if (level == 0) {
    w.symbols = {0};
    return w;
  }
  if (level >= 1 && (level > cf.convergent_depth() || cf.q(level) > kWordBudget))
    throw std::length_error("numbertheory: word at level " + std::to_string(level) +
                            " exceeds the symbol budget");
  std::vector<std::uint8_t> prev = {1};  // s_{-1}
  std::vector<std::uint8_t> cur = {0};   // s_0
  for (int n = 1; n <= level; ++n) {
    const int reps = (n == 1) ? cf.coefficient(1) - 1 : cf.coefficient(n);
    std::vector<std::uint8_t> next;
    next.reserve(cur.size() * static_cast<std::size_t>(reps) + prev.size());
    for (int r = 0; r < reps; ++r) next.insert(next.end(), cur.begin(), cur.end());
    next.insert(next.end(), prev.begin(), prev.end());
    prev = std::move(cur);
    cur = std::move(next);
  }
  if (static_cast<std::int64_t>(cur.size()) != cf.q(level))
    throw std::logic_error("numbertheory: word length disagrees with q_n");
  w.symbols = std::move(cur);
  return w;
}

bool verify_square_identity(const ContinuedFraction& cf, int n) {
  if (n < 2) throw std::invalid_argument("numbertheory: identity requires n >= 2");
  if (n + 1 > cf.depth())
    throw std::invalid_argument("numbertheory: identity at n = " + std::to_string(n) +
                                " needs depth " + std::to_string(n + 1));
  const SturmianWord sn = build_word(cf, n);
  const SturmianWord sn1 = build_word(cf, n + 1);
  const SturmianWord snm1 = build_word(cf, n - 1);
  const SturmianWord snm2 = build_word(cf, n - 2);
  std::vector<std::uint8_t> lhs = sn.symbols;
  lhs.insert(lhs.end(), sn1.symbols.begin(), sn1.symbols.end());
  std::vector<std::uint8_t> rhs = sn1.symbols;
  for (int r = 0; r < cf.coefficient(n) - 1; ++r)
    rhs.insert(rhs.end(), snm1.symbols.begin(), snm1.symbols.end());
  rhs.insert(rhs.end(), snm2.symbols.begin(), snm2.symbols.end());
  rhs.insert(rhs.end(), snm1.symbols.begin(), snm1.symbols.end());
  return lhs == rhs;
}

}  // namespace sturmdyn::numbertheory
