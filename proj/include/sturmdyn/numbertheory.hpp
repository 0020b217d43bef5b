#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sturmdyn::numbertheory {

// x = (p + sqrt(d)) / q with integer p, q != 0 and d > 0 not a perfect square.
struct QuadraticSurd {
  std::int64_t p = 0;
  std::int64_t d = 0;
  std::int64_t q = 1;
};

// Continued fraction omega = 1/(a_1 + 1/(a_2 + ...)) with omega in (0,1).
//
// Coefficients are held exactly; the convergents p_n/q_n follow
//   p_0 = 0, p_1 = 1, p_n = a_n p_{n-1} + p_{n-2}
//   q_0 = 1, q_1 = a_1, q_n = a_n q_{n-1} + q_{n-2}
// and satisfy |omega - p_n/q_n| < 1/q_n^2 at every level.
class ContinuedFraction {
 public:
  // Exact constructions. Periodic coefficients repeat forever and can be
  // deepened on demand; a plain coefficient list is exact but finite.
  static ContinuedFraction golden(int depth);
  static ContinuedFraction from_periodic(std::vector<int> period, int depth);
  static ContinuedFraction from_coefficients(std::vector<int> coefficients);
  // Exact integer expansion of a quadratic surd in (0,1).
  static ContinuedFraction from_surd(const QuadraticSurd& surd, int depth);
  // Floating-point expansion; refuses levels whose remainder has dropped
  // below 2^-40 (deeper coefficients would be garbage) and reports rational
  // input (zero remainder) with the offending level.
  static ContinuedFraction expand(double omega, int depth);

  int depth() const { return static_cast<int>(coeffs_.size()); }
  int coefficient(int n) const;  // a_n, 1-based
  const std::vector<int>& coefficients() const { return coeffs_; }

  // Convergents, index 0..convergent_depth(). The convergent table stops
  // early if int64 would overflow; coefficients remain available to depth().
  std::int64_t p(int n) const;
  std::int64_t q(int n) const;
  int convergent_depth() const { return static_cast<int>(qconv_.size()) - 1; }

  double value() const { return value_; }

  bool is_periodic() const { return !period_.empty(); }
  const std::vector<int>& period() const { return period_; }
  // 0-based index where the period begins (0 unless the expansion has a
  // pre-periodic head, as some surds do).
  int period_start() const { return period_start_; }

  // Finite-depth surrogate for limsup (1/n) sum a_k: exact period average
  // when a period is declared, otherwise the max average over suffix
  // windows of length >= depth/2.
  double density_estimate() const;

  int max_coefficient() const;

  // Extends a periodic fraction to at least `depth` coefficients.
  ContinuedFraction deepened(int depth) const;

 private:
  ContinuedFraction() = default;
  void build_convergents();
  void compute_value();

  int extended_coefficient(int n) const;  // 1-based, continues the period; 0 if exhausted

  std::vector<int> coeffs_;
  std::vector<int> period_;  // empty when not declared periodic
  int period_start_ = 0;
  std::vector<std::int64_t> pconv_;
  std::vector<std::int64_t> qconv_;
  double value_ = 0.0;
};

// Word of the substitution hierarchy: s_{-1} = B, s_0 = A,
// s_1 = s_0^{a_1 - 1} s_{-1}, s_n = s_{n-1}^{a_n} s_{n-2}.
// Symbols are stored as indices (0 for the A letter, 1 for the B letter);
// the coupling value is attached only when a potential is assembled.
struct SturmianWord {
  int level = 0;
  std::vector<std::uint8_t> symbols;

  std::int64_t length() const { return static_cast<std::int64_t>(symbols.size()); }
};

SturmianWord build_word(const ContinuedFraction& cf, int level);

// Checks s_n s_{n+1} == s_{n+1} s_{n-1}^{a_n - 1} s_{n-2} s_{n-1} exactly.
bool verify_square_identity(const ContinuedFraction& cf, int n);

}  // namespace sturmdyn::numbertheory
