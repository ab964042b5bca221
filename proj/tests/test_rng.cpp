#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <set>
#include <vector>

#include "refnet/rng.hpp"

using refnet::Rng;
using refnet::mix64;

TEST_CASE("mix64 is deterministic and spreads nearby inputs") {
  CHECK(mix64(42) == mix64(42));
  std::set<std::uint64_t> outs;
  for (std::uint64_t k = 0; k < 1000; ++k) outs.insert(mix64(k));
  CHECK(outs.size() == 1000);
  CHECK(mix64(1, 2, 3, 4) != mix64(1, 2, 4, 3));
  CHECK(mix64(0) != 0);
}

TEST_CASE("same seed gives the same stream") {
  Rng a(7), b(7), c(8);
  bool all_equal = true;
  bool any_differs = false;
  for (int k = 0; k < 100; ++k) {
    const std::uint64_t va = a.next_u64();
    all_equal = all_equal && va == b.next_u64();
    any_differs = any_differs || va != c.next_u64();
  }
  CHECK(all_equal);
  CHECK(any_differs);
}

TEST_CASE("below stays in range and covers small ranges uniformly") {
  Rng rng(123);
  for (int k = 0; k < 1000; ++k) CHECK(rng.below(7) < 7);
  CHECK(rng.below(1) == 0);

  std::vector<std::uint64_t> bucket(3, 0);
  const int draws = 30000;
  for (int k = 0; k < draws; ++k) ++bucket[rng.below(3)];
  const double expected = draws / 3.0;
  const double sigma = std::sqrt(draws * (1.0 / 3) * (2.0 / 3));
  for (std::uint64_t count : bucket)
    CHECK(std::abs(static_cast<double>(count) - expected) < 4 * sigma);
}

TEST_CASE("between is inclusive on both ends") {
  Rng rng(5);
  bool lo_hit = false, hi_hit = false;
  for (int k = 0; k < 2000; ++k) {
    const std::uint64_t v = rng.between(3, 5);
    CHECK(v >= 3);
    CHECK(v <= 5);
    lo_hit = lo_hit || v == 3;
    hi_hit = hi_hit || v == 5;
  }
  CHECK(lo_hit);
  CHECK(hi_hit);
}

TEST_CASE("degenerate between consumes no entropy") {
  Rng a(99), b(99);
  CHECK(a.between(4, 4) == 4);
  CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("unit lies in the half-open interval") {
  Rng rng(17);
  double sum = 0.0;
  const int draws = 20000;
  for (int k = 0; k < draws; ++k) {
    const double u = rng.unit();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    sum += u;
  }
  CHECK(std::abs(sum / draws - 0.5) < 0.01);
}

TEST_CASE("geometric counts failures before the first success") {
  Rng rng(31);
  for (int k = 0; k < 100; ++k) CHECK(rng.geometric(1.0) == 0);

  double sum = 0.0;
  const int draws = 20000;
  for (int k = 0; k < draws; ++k) sum += static_cast<double>(rng.geometric(0.25));
  // mean (1-p)/p = 3, sd of the sample mean ~ sqrt(12)/sqrt(draws)
  CHECK(std::abs(sum / draws - 3.0) < 0.12);
}
