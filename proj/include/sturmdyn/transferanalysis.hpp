#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "sturmdyn/operatorcore.hpp"
#include "sturmdyn/scaled.hpp"

namespace sturmdyn::transferanalysis {

using operatorcore::PotentialSpec;
using Complex = std::complex<double>;

template <typename T>
struct Mat2 {
  T a11{}, a12{}, a21{}, a22{};

  Mat2 operator*(const Mat2& o) const {
    return {a11 * o.a11 + a12 * o.a21, a11 * o.a12 + a12 * o.a22,
            a21 * o.a11 + a22 * o.a21, a21 * o.a12 + a22 * o.a22};
  }
  T trace() const { return a11 + a22; }
  T det() const { return a11 * a22 - a12 * a21; }
  double frobenius_sq() const {
    return std::norm(Complex(a11)) + std::norm(Complex(a12)) + std::norm(Complex(a21)) +
           std::norm(Complex(a22));
  }
};

// one-site step matrix [[z - v, -1], [1, 0]]
template <typename T>
Mat2<T> step_matrix(T z, double v) {
  return {z - T(v), T(-1.0), T(1.0), T(0.0)};
}

// Spectral norm from the closed-form 2x2 singular values.
template <typename T>
double op_norm(const Mat2<T>& m) {
  const double f = m.frobenius_sq();
  const double dd = std::norm(Complex(m.det()));
  const double disc = f * f - 4.0 * dd;
  return std::sqrt(0.5 * (f + std::sqrt(disc > 0.0 ? disc : 0.0)));
}

// T(n,0;z) = A(n)...A(1). Columns are (u_0(n+1), u_0(n)) and
// (u_{pi/2}(n+1), u_{pi/2}(n)).
struct TransferMatrix {
  Mat2<Complex> m;
  std::int64_t span = 0;  // transports across (0, span]

  Complex trace() const { return m.trace(); }
  Complex det() const { return m.det(); }
  double norm() const { return op_norm(m); }
};

TransferMatrix transfer(const PotentialSpec& spec, std::int64_t n, Complex z);

// Solution u_theta of u(n+1) + u(n-1) + V(n) u(n) = z u(n) with
// u(0) = sin(theta), u(1) = cos(theta), stored through site [Lmax]+2.
// Values that pass 1e300 in magnitude are rescaled by powers of two with the
// exponent tracked, so norms stay queryable (they may convert to inf).
class SolutionTrace {
 public:
  SolutionTrace(const PotentialSpec& spec, double theta, Complex z, double Lmax);

  double theta() const { return theta_; }
  Complex z() const { return z_; }
  Complex value(std::int64_t n) const;  // u(n), n in [0, max_site]
  std::int64_t max_site() const { return static_cast<std::int64_t>(vals_.size()) - 1; }
  double max_L() const { return static_cast<double>(max_site() - 2); }

  // ||u||_L^2 = sum_{n=1}^{[L]} |u(n)|^2 + (L-[L]) |u([L]+1)|^2, L in (0, max_L]
  double norm_sq(double L) const { return norm_sq_scaled(L).to_double(); }
  double log_norm_sq(double L) const { return norm_sq_scaled(L).log_abs(); }
  Scaled norm_sq_scaled(double L) const;

  // ||U||_L^2 with ||U(n)||^2 = |u(n)|^2 + |u(n+1)|^2
  double u_norm_sq(double L) const { return u_norm_sq_scaled(L).to_double(); }
  Scaled u_norm_sq_scaled(double L) const;

  int scale_events() const { return scale_events_; }

 private:
  double theta_;
  Complex z_;
  std::vector<Complex> vals_;          // scaled values
  std::vector<std::int32_t> exp2_;     // per-site log2 scale of vals_
  std::vector<Scaled> prefix_;         // prefix_[n] = sum_{m<=n} |u(m)|^2 (true value)
  int scale_events_ = 0;
};

SolutionTrace solution(const PotentialSpec& spec, double theta, Complex z, double Lmax);

// Gram data of the two canonical solutions at real energy E:
//   a(L) = ||u_{pi/2}||_L^2, b(L) = ||u_0||_L^2, d(L) = <u_0, u_{pi/2}>_L,
//   w(L)^2 = a b - d^2.
// sup/inf over theta of ||u_theta||_L^2 are the eigenvalues of
// [[b, d], [d, a]] acting on (cos theta, sin theta).
class GramProfile {
 public:
  GramProfile(const PotentialSpec& spec, double E, double Lmax);

  double energy() const { return energy_; }
  double max_L() const { return static_cast<double>(u0_.size()) - 2.0; }

  double a(double L) const;
  double b(double L) const;
  double d(double L) const;
  double w(double L) const;
  double sup_norm_sq(double L) const;
  double inf_norm_sq(double L) const;
  double norm_sq_theta(double theta, double L) const;

  double u0_value(std::int64_t n) const { return u0_[static_cast<std::size_t>(n)]; }
  double upi2_value(std::int64_t n) const { return upi2_[static_cast<std::size_t>(n)]; }

 private:
  double energy_;
  std::vector<double> u0_, upi2_;     // values at sites 0..maxSite
  std::vector<double> pa_, pb_, pd_;  // prefix sums over sites 1..n
  double prefix(const std::vector<double>& p, const std::vector<double>& x,
                const std::vector<double>& y, double L) const;
};

// Traces x_n(E) of the word hierarchy: x_n = tr M(s_n) with
// M(s_n) = M(s_{n-2}) M(s_{n-1})^{a_n} (site matrices act right-to-left).
// M(s_1) and M(s_2) are cross-checked against direct site products.
struct TraceProfile {
  double energy = 0.0;
  std::vector<double> x;      // x[n], n = 0..maxLevel; may be +-inf off spectrum
  std::vector<bool> in_band;  // |x_n| <= 2

  double value(int level) const { return x[static_cast<std::size_t>(level)]; }
};

TraceProfile traces(const PotentialSpec& spec, double E, int maxLevel);

struct EnergyGrid {
  double emin = 0.0;
  double emax = 0.0;
  double step = 0.0;

  std::int64_t count() const {
    return static_cast<std::int64_t>((emax - emin) / step + 0.5) + 1;
  }
  double energy(std::int64_t i) const { return emin + step * static_cast<double>(i); }
};

// Grid-resolved trace-condition spectrum: points satisfying
// min(|x_m|, |x_{m+1}|) <= 2 for both m = maxLevel-1 and m = maxLevel,
// merged into closed intervals of consecutive retained grid points.
struct SpectrumApprox {
  EnergyGrid grid;
  int max_level = 0;
  std::vector<std::pair<double, double>> intervals;
  std::vector<std::pair<std::int64_t, std::int64_t>> interval_indices;
  std::int64_t retained_count = 0;

  double total_length() const;
  // Evenly strided retained grid points; every sample satisfies the trace
  // condition at max_level by construction.
  std::vector<double> sample_energies(std::int64_t count) const;
};

SpectrumApprox spectrum_approx(const PotentialSpec& spec, int maxLevel, const EnergyGrid& grid,
                               unsigned threads = 1);

// Periodicity-premise check of the square-block inequality: with
// V(m + p) = V(m) for 1 <= m <= p + q (verified site by site),
//   ||U||^2_{2p+q} >= (1 + (1 / max{2, 2|tr T(p,0;E)|})^2) ||U||^2_q.
struct SquaresCheckReport {
  double trace_abs = 0.0;
  double factor = 0.0;
  double norm_big = 0.0;     // ||U||^2_{2p+q} at the worst theta
  double norm_small = 0.0;   // ||U||^2_q at the worst theta
  double worst_ratio = 0.0;  // min over theta of norm_big / norm_small
  double worst_theta = 0.0;
  bool holds = false;        // worst_ratio >= factor
};

SquaresCheckReport squares_check(const PotentialSpec& spec, double E, std::int64_t period_p,
                                 std::int64_t prefix_q, int theta_count = 16);

}  // namespace sturmdyn::transferanalysis
