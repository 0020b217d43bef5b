#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "sturmdyn/operatorcore.hpp"

using namespace sturmdyn;
using operatorcore::Geometry;
using operatorcore::Method;
using operatorcore::PotentialSpec;

namespace {

PotentialSpec golden_spec(double lambda, Geometry g = Geometry::HalfLine,
                          Method m = Method::Rotation, double phase = 0.0) {
  return PotentialSpec(lambda, numbertheory::ContinuedFraction::golden(20), phase, g, m);
}

}  // namespace

TEST_CASE("rotation potential values at the first sites") {
  const auto spec = golden_spec(2.0);
  CHECK(potential_value(spec, 1) == 2.0);   // 1*omega mod 1 ~ 0.618 in [0.382, 1)
  CHECK(potential_value(spec, 2) == 0.0);   // 2*omega mod 1 ~ 0.236
  CHECK(potential_value(spec, 3) == 2.0);
  CHECK(potential_value(spec, 4) == 2.0);
  CHECK(potential_value(spec, 5) == 0.0);

  const auto free = golden_spec(0.0);
  for (int n = 1; n <= 50; ++n) CHECK(potential_value(free, n) == 0.0);
}

TEST_CASE("potential takes only the two values 0 and lambda") {
  const auto spec = golden_spec(1.7);
  for (int n = 1; n <= 2000; ++n) {
    const double v = potential_value(spec, n);
    CHECK((v == 0.0 || v == 1.7));
  }
  const auto whole = golden_spec(1.7, Geometry::WholeLine);
  for (int n = -500; n <= 500; ++n) {
    const double v = potential_value(whole, n);
    CHECK((v == 0.0 || v == 1.7));
  }
}

TEST_CASE("rotation evaluation refuses huge site indices") {
  const auto spec = golden_spec(2.0);
  CHECK_THROWS_AS(potential_value(spec, 1000001), std::out_of_range);
  CHECK_NOTHROW(potential_value(spec, 1000000));
}

TEST_CASE("word matches rotation for golden mean and a (2,1) fraction") {
  CHECK(word_matches_rotation(golden_spec(2.0), 10));
  CHECK(word_matches_rotation(golden_spec(1.0), 14));  // 610 symbols

  PotentialSpec alt(3.0, numbertheory::ContinuedFraction::from_periodic({2, 1}, 16), 0.0,
                    Geometry::HalfLine);
  CHECK(word_matches_rotation(alt, 8));
}

TEST_CASE("substitution method replays the word and enforces its domain") {
  const auto rot = golden_spec(2.0);
  const auto sub = golden_spec(2.0, Geometry::HalfLine, Method::Substitution);
  for (int n = 1; n <= 1000; ++n) CHECK(potential_value(sub, n) == potential_value(rot, n));

  CHECK_THROWS_AS(potential_value(sub, -3), std::invalid_argument);
  CHECK_THROWS_AS(
      PotentialSpec(2.0, numbertheory::ContinuedFraction::golden(20), 0.25,
                    Geometry::HalfLine, Method::Substitution),
      std::invalid_argument);
}

TEST_CASE("assemble fills the diagonal and places the origin") {
  const auto spec = golden_spec(2.0);
  const auto op = assemble(spec, 5);
  CHECK(op.dimension() == 5);
  CHECK(op.origin_index == 0);
  CHECK(op.diagonal == std::vector<double>{2.0, 0.0, 2.0, 2.0, 0.0});

  const auto free = assemble(golden_spec(0.0), 3);
  CHECK(free.diagonal == std::vector<double>{0.0, 0.0, 0.0});

  const auto whole = assemble(golden_spec(2.0, Geometry::WholeLine), 2);
  CHECK(whole.dimension() == 5);
  CHECK(whole.first_site == -2);
  CHECK(whole.site(0) == -2);
  CHECK(whole.site(4) == 2);
  CHECK(whole.origin_index == 3);
  CHECK(whole.diagonal[static_cast<std::size_t>(whole.origin_index)] ==
        potential_value(golden_spec(2.0, Geometry::WholeLine), 1));

  CHECK_THROWS_AS(assemble(spec, 1), std::invalid_argument);
  CHECK_THROWS_AS(assemble(spec, (std::int64_t(1) << 25)), std::length_error);
}

TEST_CASE("eigensystem: Gershgorin containment and completeness at the origin") {
  const auto spec = golden_spec(2.0);
  const auto es = eigensystem(assemble(spec, 64));
  REQUIRE(es.values.size() == 64);
  for (int j = 0; j < 64; ++j) {
    CHECK(es.values[j] >= -2.0 - 2.0 - 1e-12);
    CHECK(es.values[j] <= 2.0 + 2.0 + 1e-12);
  }
  double total = 0.0;
  for (int j = 0; j < 64; ++j) total += es.weight(j);
  CHECK(total == doctest::Approx(1.0).epsilon(1e-12));

  // free 2x2: eigenvalues -1, 1
  const auto free2 = eigensystem(assemble(golden_spec(0.0), 2));
  CHECK(free2.values[0] == doctest::Approx(-1.0));
  CHECK(free2.values[1] == doctest::Approx(1.0));
}

TEST_CASE("phase shifts the rotation sequence") {
  const auto spec = golden_spec(2.0, Geometry::HalfLine, Method::Rotation, 0.5);
  // 1*omega + 0.5 mod 1 = 0.118..., outside [0.382, 1)
  CHECK(potential_value(spec, 1) == 0.0);
  for (int n = 1; n <= 100; ++n) {
    const double v = potential_value(spec, n);
    CHECK((v == 0.0 || v == 2.0));
  }
}
