#include "sturmdyn/operatorcore.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>
#include <string>

namespace sturmdyn::operatorcore {

namespace {

constexpr std::int64_t kMaxRotationSite = 1000000;
constexpr std::int64_t kMaxDimension = std::int64_t(1) << 24;
constexpr double kBoundaryTolerance = 1e-10;

// fractional part shifted into [0,1)
double frac_unit(double x) {
  double f = std::fmod(x, 1.0);
  if (f < 0.0) f += 1.0;
  return f;
}

}  // namespace

PotentialSpec::PotentialSpec(double lambda, numbertheory::ContinuedFraction cf, double phase,
                             Geometry geometry, Method method)
    : lambda_(lambda), cf_(std::move(cf)), phase_(phase), geometry_(geometry), method_(method) {
  if (!(lambda >= 0.0)) throw std::invalid_argument("operatorcore: coupling must be >= 0");
  if (!(phase >= 0.0 && phase < 1.0))
    throw std::invalid_argument("operatorcore: phase must lie in [0,1)");
  if (method_ == Method::Substitution) {
    if (phase_ != 0.0)
      throw std::invalid_argument("operatorcore: substitution method requires phase = 0");
    // Deepest word within budget; higher sites are refused at evaluation time.
    int level = 0;
    while (level < cf_.convergent_depth() && cf_.q(level + 1) <= (std::int64_t(1) << 22)) ++level;
    word_ = std::make_shared<const numbertheory::SturmianWord>(
        numbertheory::build_word(cf_, level));
  }
}

double potential_value(const PotentialSpec& spec, std::int64_t n) {
  if (spec.geometry() == Geometry::HalfLine && n < 1)
    throw std::invalid_argument("operatorcore: half-line site index must be >= 1");
  if (spec.method() == Method::Substitution) {
    if (n < 1) throw std::invalid_argument("operatorcore: substitution sites start at 1");
    const auto& w = *spec.word_;
    if (n > w.length())
      throw std::out_of_range("operatorcore: site " + std::to_string(n) +
                              " beyond the constructed word (length " +
                              std::to_string(w.length()) + ")");
    return w.symbols[static_cast<std::size_t>(n - 1)] != 0 ? spec.lambda() : 0.0;
  }
  if (std::llabs(n) > kMaxRotationSite)
    throw std::out_of_range(
        "operatorcore: rotation evaluation refused beyond |n| = 10^6 (rounding could flip "
        "the indicator)");
  const double x = frac_unit(static_cast<double>(n) * spec.omega() + spec.phase());
  return x >= 1.0 - spec.omega() ? spec.lambda() : 0.0;
}

bool near_interval_boundary(const PotentialSpec& spec, std::int64_t n) {
  if (std::llabs(n) > kMaxRotationSite)
    throw std::out_of_range("operatorcore: rotation evaluation refused beyond |n| = 10^6");
  const double x = frac_unit(static_cast<double>(n) * spec.omega() + spec.phase());
  const double left = 1.0 - spec.omega();
  return std::fabs(x - left) < kBoundaryTolerance || x > 1.0 - kBoundaryTolerance ||
         x < kBoundaryTolerance;
}

bool word_matches_rotation(const PotentialSpec& spec, int level) {
  if (spec.phase() != 0.0)
    throw std::invalid_argument("operatorcore: word comparison requires phase = 0");
  const auto word = numbertheory::build_word(spec.cf(), level);
  for (std::int64_t n = 1; n <= word.length(); ++n) {
    const double expected =
        word.symbols[static_cast<std::size_t>(n - 1)] != 0 ? spec.lambda() : 0.0;
    const double x = frac_unit(static_cast<double>(n) * spec.omega());
    const double got = x >= 1.0 - spec.omega() ? spec.lambda() : 0.0;
    if (expected != got) return false;
  }
  return true;
}

FiniteOperator assemble(const PotentialSpec& spec, std::int64_t size) {
  if (size < 2) throw std::invalid_argument("operatorcore: truncation size must be >= 2");
  const std::int64_t dim = spec.geometry() == Geometry::HalfLine ? size : 2 * size + 1;
  if (dim > kMaxDimension)
    throw std::length_error("operatorcore: truncation exceeds the memory budget");
  FiniteOperator op;
  op.geometry = spec.geometry();
  op.size = size;
  op.lambda = spec.lambda();
  op.first_site = spec.geometry() == Geometry::HalfLine ? 1 : -size;
  op.origin_index = 1 - op.first_site;
  op.diagonal.resize(static_cast<std::size_t>(dim));
  for (std::int64_t i = 0; i < dim; ++i) {
    const std::int64_t n = op.first_site + i;
    op.diagonal[static_cast<std::size_t>(i)] = potential_value(spec, n);
    if (spec.method() == Method::Rotation && near_interval_boundary(spec, n))
      ++op.flagged_sites;
  }
  return op;
}

EigenSystem eigensystem(const FiniteOperator& op) {
  const auto dim = op.dimension();
  Eigen::VectorXd diag(dim), sub(dim - 1);
  for (std::int64_t i = 0; i < dim; ++i) diag[i] = op.diagonal[static_cast<std::size_t>(i)];
  sub.setOnes();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("operatorcore: eigendecomposition failed");
  EigenSystem es;
  es.values = solver.eigenvalues();
  es.vectors = solver.eigenvectors();
  es.origin_index = op.origin_index;
  es.first_site = op.first_site;
  es.geometry = op.geometry;
  return es;
}

}  // namespace sturmdyn::operatorcore
