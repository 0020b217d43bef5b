#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "sturmdyn/numbertheory.hpp"

using sturmdyn::numbertheory::ContinuedFraction;
using sturmdyn::numbertheory::QuadraticSurd;
using sturmdyn::numbertheory::SturmianWord;
using sturmdyn::numbertheory::build_word;
using sturmdyn::numbertheory::verify_square_identity;

namespace {

// Independent oracle: denominators straight from the recursion, no library code.
std::vector<long long> denominators_by_hand(const std::vector<int>& a) {
  std::vector<long long> q;
  q.push_back(1);      // q_0
  q.push_back(a[0]);   // q_1
  for (std::size_t n = 2; n <= a.size(); ++n) q.push_back(a[n - 1] * q[n - 1] + q[n - 2]);
  return q;
}

}  // namespace

TEST_CASE("golden mean expansion is all ones with Fibonacci denominators") {
  const auto cf = ContinuedFraction::golden(10);
  REQUIRE(cf.depth() == 10);
  for (int n = 1; n <= 10; ++n) CHECK(cf.coefficient(n) == 1);

  // q_0..q_9 from the recursion by hand
  const std::vector<long long> expected = {1, 1, 2, 3, 5, 8, 13, 21, 34, 55};
  for (int n = 0; n < 10; ++n) CHECK(cf.q(n) == expected[static_cast<std::size_t>(n)]);

  CHECK(cf.density_estimate() == doctest::Approx(1.0));
  CHECK(cf.value() == doctest::Approx((std::sqrt(5.0) - 1.0) / 2.0).epsilon(1e-15));
}

TEST_CASE("surd expansion matches the periodic built-ins exactly") {
  const auto g1 = ContinuedFraction::golden(20);
  const auto g2 = ContinuedFraction::from_surd({-1, 5, 2}, 20);
  CHECK(g1.coefficients() == g2.coefficients());
  CHECK(g2.is_periodic());
  CHECK(g2.period() == std::vector<int>{1});

  const auto r2 = ContinuedFraction::from_surd({-1, 2, 1}, 12);  // sqrt(2) - 1
  for (int n = 1; n <= 12; ++n) CHECK(r2.coefficient(n) == 2);
  CHECK(r2.value() == doctest::Approx(std::sqrt(2.0) - 1.0).epsilon(1e-15));

  const auto r3 = ContinuedFraction::from_surd({-1, 3, 2}, 12);  // (sqrt(3)-1)/2 = [0;2,1,2,1,..]
  CHECK(r3.coefficient(1) == 2);
  CHECK(r3.coefficient(2) == 1);
  CHECK(r3.coefficient(3) == 2);
  CHECK(r3.coefficient(4) == 1);
}

TEST_CASE("convergents approximate omega within 1/q^2 at every level") {
  for (const auto& cf : {ContinuedFraction::golden(25),
                         ContinuedFraction::from_periodic({2, 1}, 20),
                         ContinuedFraction::from_periodic({3, 1, 2}, 18)}) {
    for (int n = 1; n <= cf.depth(); ++n) {
      const double approx = static_cast<double>(cf.p(n)) / static_cast<double>(cf.q(n));
      const double qn = static_cast<double>(cf.q(n));
      CHECK(std::fabs(cf.value() - approx) < 1.0 / (qn * qn));
    }
    for (int n = 2; n <= cf.depth(); ++n) CHECK(cf.q(n) > cf.q(n - 1));
  }
}

TEST_CASE("floating-point expansion recovers golden coefficients and rejects rationals") {
  const double omega = (std::sqrt(5.0) - 1.0) / 2.0;
  const auto cf = ContinuedFraction::expand(omega, 10);
  for (int n = 1; n <= 10; ++n) CHECK(cf.coefficient(n) == 1);
  CHECK(cf.value() == doctest::Approx(omega));

  CHECK_THROWS_WITH_AS(ContinuedFraction::expand(0.5, 3),
                       doctest::Contains("rational"), std::invalid_argument);
  // precision exhaustion at depth beyond what a double can hold
  CHECK_THROWS_AS(ContinuedFraction::expand(omega, 60), std::invalid_argument);
}

TEST_CASE("density estimate") {
  CHECK(ContinuedFraction::from_periodic({1, 2}, 16).density_estimate() == doctest::Approx(1.5));

  std::vector<int> a(100, 1);
  a[0] = 3;
  CHECK(ContinuedFraction::from_coefficients(a).density_estimate() == doctest::Approx(1.02));
}

TEST_CASE("word recursion: seeds, lengths, prefix property") {
  const auto cf = ContinuedFraction::golden(16);

  const auto s0 = build_word(cf, 0);
  REQUIRE(s0.length() == 1);
  CHECK(s0.symbols[0] == 0);

  // s_1 = s_0^{a_1-1} s_{-1} = B for the golden mean, then s_2 = BA, s_3 = BAB
  const auto s3 = build_word(cf, 3);
  CHECK(s3.symbols == std::vector<std::uint8_t>{1, 0, 1});

  CHECK(build_word(cf, 8).length() == 34);

  for (int n = 2; n <= 15; ++n) {
    const auto prev = build_word(cf, n - 1);
    const auto cur = build_word(cf, n);
    REQUIRE(cur.length() == cf.q(n));
    bool prefix = true;
    for (std::int64_t i = 0; i < prev.length(); ++i)
      prefix = prefix && (cur.symbols[static_cast<std::size_t>(i)] ==
                          prev.symbols[static_cast<std::size_t>(i)]);
    CHECK(prefix);
  }

  CHECK_THROWS_AS(build_word(ContinuedFraction::golden(3), 5), std::invalid_argument);
}

TEST_CASE("word lengths equal q_n for a (2,1)-periodic fraction") {
  const auto cf = ContinuedFraction::from_periodic({2, 1}, 16);
  for (int n = 2; n <= 15; ++n) CHECK(build_word(cf, n).length() == cf.q(n));
}

TEST_CASE("square identity holds exactly at every tested level") {
  const auto golden = ContinuedFraction::golden(16);
  for (int n = 2; n <= 12; ++n) CHECK(verify_square_identity(golden, n));

  const auto twos = ContinuedFraction::from_periodic({2}, 14);
  for (int n = 2; n <= 10; ++n) CHECK(verify_square_identity(twos, n));

  const auto mixed = ContinuedFraction::from_periodic({2, 1}, 14);
  for (int n = 2; n <= 10; ++n) CHECK(verify_square_identity(mixed, n));
}

TEST_CASE("deepened periodic fraction extends the same tail") {
  const auto cf = ContinuedFraction::from_periodic({2, 1}, 6);
  const auto deep = cf.deepened(12);
  REQUIRE(deep.depth() == 12);
  for (int n = 1; n <= 6; ++n) CHECK(deep.coefficient(n) == cf.coefficient(n));
  CHECK(deep.coefficient(7) == 2);
  CHECK(deep.coefficient(8) == 1);
  CHECK(deep.value() == doctest::Approx(cf.value()).epsilon(1e-12));
}
