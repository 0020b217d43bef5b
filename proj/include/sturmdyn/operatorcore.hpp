#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <memory>
#include <vector>

#include "sturmdyn/numbertheory.hpp"

namespace sturmdyn::operatorcore {

enum class Geometry { HalfLine, WholeLine };
enum class Method { Rotation, Substitution };

// Two-valued potential V(n) = lambda * chi_[1-omega,1)(n omega + phase mod 1).
// The substitution method replays the word hierarchy instead of evaluating
// the rotation; it is only defined for phase = 0 and n >= 1.
class PotentialSpec {
 public:
  PotentialSpec(double lambda, numbertheory::ContinuedFraction cf, double phase,
                Geometry geometry, Method method = Method::Rotation);

  double lambda() const { return lambda_; }
  const numbertheory::ContinuedFraction& cf() const { return cf_; }
  double omega() const { return cf_.value(); }
  double phase() const { return phase_; }
  Geometry geometry() const { return geometry_; }
  Method method() const { return method_; }

 private:
  double lambda_;
  numbertheory::ContinuedFraction cf_;
  double phase_;
  Geometry geometry_;
  Method method_;
  std::shared_ptr<const numbertheory::SturmianWord> word_;  // substitution only

  friend double potential_value(const PotentialSpec&, std::int64_t);
};

// Evaluates V(n). Rotation arguments are computed in double precision and
// refused for |n| > 10^6, where accumulated rounding could flip the
// indicator near the interval boundary.
double potential_value(const PotentialSpec& spec, std::int64_t n);

// Flags sites whose fractional part lands within 1e-10 of either endpoint
// of [1-omega, 1); at such sites the indicator value is rounding-sensitive.
bool near_interval_boundary(const PotentialSpec& spec, std::int64_t n);

// True iff the level-n word symbols match (V(1), ..., V(q_n)) exactly.
// Requires phase = 0.
bool word_matches_rotation(const PotentialSpec& spec, int level);

// Finite truncation: symmetric tridiagonal with unit off-diagonals.
// Half-line holds sites 1..N (Dirichlet wall at 0); whole-line holds sites
// -N..N (walls at both ends). delta_1 lives at site 1 in both geometries.
struct FiniteOperator {
  Geometry geometry = Geometry::HalfLine;
  std::int64_t size = 0;            // N
  std::vector<double> diagonal;     // V over sites, in site order
  std::int64_t first_site = 1;      // site index of diagonal[0]
  std::int64_t origin_index = 0;    // array index of site 1
  std::int64_t flagged_sites = 0;   // boundary-proximity count
  double lambda = 0.0;

  std::int64_t dimension() const { return static_cast<std::int64_t>(diagonal.size()); }
  std::int64_t site(std::int64_t index) const { return first_site + index; }
};

FiniteOperator assemble(const PotentialSpec& spec, std::int64_t size);

// Dense eigendecomposition of the truncation.
struct EigenSystem {
  Eigen::VectorXd values;       // ascending
  Eigen::MatrixXd vectors;      // column j = eigenvector j, in site order
  std::int64_t origin_index = 0;
  std::int64_t first_site = 1;
  Geometry geometry = Geometry::HalfLine;

  // spectral weight of delta_1: |phi_j(1)|^2
  double weight(std::int64_t j) const {
    const double v = vectors(origin_index, j);
    return v * v;
  }
};

EigenSystem eigensystem(const FiniteOperator& op);

}  // namespace sturmdyn::operatorcore
