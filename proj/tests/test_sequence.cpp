#include <doctest.h>

#include <thread>
#include <vector>

#include "fiblucas/sequence.hpp"

using namespace fiblucas;

namespace {

// Table values as polynomials in k, evaluated directly.
BigInt fib_poly(std::int64_t k, int n) {
  const BigInt x = k;
  switch (n) {
    case 1: return 1;
    case 2: return x;
    case 3: return x * x + 1;
    case 4: return x * x * x + 2 * x;
    case 5: return ipow(x, 4) + 3 * x * x + 1;
    case 6: return ipow(x, 5) + 4 * ipow(x, 3) + 3 * x;
    case 7: return ipow(x, 6) + 5 * ipow(x, 4) + 6 * x * x + 1;
    case 8: return ipow(x, 7) + 6 * ipow(x, 5) + 10 * ipow(x, 3) + 4 * x;
  }
  return -1;
}

BigInt lucas_poly(std::int64_t k, int n) {
  const BigInt x = k;
  switch (n) {
    case 0: return 2;
    case 1: return x;
    case 2: return x * x + 2;
    case 3: return ipow(x, 3) + 3 * x;
    case 4: return ipow(x, 4) + 4 * x * x + 2;
    case 5: return ipow(x, 5) + 5 * ipow(x, 3) + 5 * x;
    case 6: return ipow(x, 6) + 6 * ipow(x, 4) + 9 * x * x + 2;
    case 7: return ipow(x, 7) + 7 * ipow(x, 5) + 14 * ipow(x, 3) + 7 * x;
  }
  return -1;
}

int sign(std::int64_t n) { return n % 2 == 0 ? 1 : -1; }

}  // namespace

TEST_CASE("kfib examples") {
  CHECK(kfib(1, 6) == 8);
  CHECK(kfib(2, 4) == 12);
  CHECK(kfib(3, 4) == 33);
  CHECK(kfib(5, 0) == 0);
  CHECK(kfib(7, -1) == 1);
  CHECK(kfib(SeqParams{.k = 1, .idx = 10}) == 55);
}

TEST_CASE("klucas examples") {
  CHECK(klucas(1, 5) == 11);
  CHECK(klucas(2, 3) == 14);
  CHECK(klucas(4, 0) == 2);
  CHECK(klucas(3, 6) == 1298);
}

TEST_CASE("invalid k is rejected") {
  CHECK_THROWS_AS(kfib(0, 3), InvalidParameter);
  CHECK_THROWS_AS(klucas(-2, 3), InvalidParameter);
  CHECK_THROWS_AS(fib_lucas_product(0, 1, 1), InvalidParameter);
  CHECK_THROWS_AS(cross_diff(1, -1), InvalidParameter);
  CHECK_THROWS_AS(product_sum(1, 0), InvalidParameter);
  CHECK_THROWS_AS(product_sum_closed(1, 0), InvalidParameter);
}

TEST_CASE("fib_lucas_product examples") {
  CHECK(fib_lucas_product(1, 2, 1) == 1);
  CHECK(fib_lucas_product(1, 3, 4) == 14);
  CHECK(fib_lucas_product(2, 4, 3) == 168);
}

TEST_CASE("cross_diff examples") {
  CHECK(cross_diff(1, 0) == 2);
  CHECK(cross_diff(2, 1) == 2);
  CHECK(cross_diff(9, 5) == 2);
}

TEST_CASE("product_sum and its closed form") {
  CHECK(product_sum(1, 1) == 1);
  CHECK(product_sum(1, 2) == 13);
  CHECK(product_sum(2, 2) == 172);
  CHECK(product_sum_closed(1, 2) == 13);
  CHECK(product_sum_closed(2, 1) == 4);
  // Literal summation, frozen from an independent big-integer script.
  CHECK(product_sum(3, 3) == 142677);
  CHECK(product_sum_closed(3, 3) == 142677);
}

TEST_CASE("recurrence holds across negative and positive indices") {
  for (std::int64_t k = 1; k <= 10; ++k) {
    for (std::int64_t n = -50; n <= 200; ++n) {
      REQUIRE(kfib(k, n + 1) == k * kfib(k, n) + kfib(k, n - 1));
      REQUIRE(klucas(k, n + 1) == k * klucas(k, n) + klucas(k, n - 1));
    }
  }
}

TEST_CASE("negative Lucas indices agree with the backward recurrence") {
  for (std::int64_t k = 1; k <= 10; ++k) {
    // L(k,n-1) = L(k,n+1) - k L(k,n), run down from L(k,1), L(k,0).
    BigInt hi = k, lo = 2;
    for (std::int64_t n = -1; n >= -40; --n) {
      const BigInt next = hi - k * lo;
      REQUIRE(klucas(k, n) == next);
      REQUIRE(klucas(k, n) == sign(-n) * klucas(k, -n));
      hi = lo;
      lo = next;
    }
  }
}

TEST_CASE("Simson identity") {
  for (std::int64_t k = 1; k <= 10; ++k) {
    for (std::int64_t n = 1; n <= 200; ++n) {
      REQUIRE(kfib(k, n - 1) * kfib(k, n + 1) - kfib(k, n) * kfib(k, n) == sign(n));
    }
  }
}

TEST_CASE("Lucas numbers from neighbouring Fibonacci numbers") {
  for (std::int64_t k = 1; k <= 10; ++k) {
    for (std::int64_t n = 1; n <= 200; ++n) REQUIRE(klucas(k, n) == kfib(k, n - 1) + kfib(k, n + 1));
  }
}

TEST_CASE("table polynomials in k") {
  for (std::int64_t k = 1; k <= 6; ++k) {
    for (int n = 1; n <= 8; ++n) CHECK(kfib(k, n) == fib_poly(k, n));
    for (int n = 0; n <= 7; ++n) CHECK(klucas(k, n) == lucas_poly(k, n));
  }
}

TEST_CASE("values are exact at large index") {
  // F(10,803) has 806 decimal digits.
  CHECK(kfib(10, 803).get_str().size() == 806);
  CHECK(kfib(10, 200) % 1000003 == 30248);
  CHECK(klucas(10, 200) % 1000003 == 768450);
}

TEST_CASE("cache is invisible to concurrent callers") {
  std::vector<BigInt> a(8), b(8);
  {
    std::vector<std::jthread> threads;
    for (int t = 0; t < 8; ++t) {
      threads.emplace_back([&, t] {
        a[t] = kfib(11 + t % 2, 500 - t);
        b[t] = klucas(11 + t % 2, 500 - t);
      });
    }
  }
  for (int t = 0; t < 8; ++t) {
    BigInt x = 0, y = 1;
    for (int i = 0; i < 500 - t; ++i) {
      const BigInt z = (11 + t % 2) * y + x;
      x = y;
      y = z;
    }
    CHECK(a[t] == x);
    CHECK(b[t] == kfib(11 + t % 2, 500 - t - 1) + kfib(11 + t % 2, 500 - t + 1));
  }
}

TEST_CASE("product identity over a signed index grid") {
  for (std::int64_t k = 1; k <= 8; ++k) {
    for (std::int64_t m = -20; m <= 60; ++m) {
      for (std::int64_t n = -20; n <= 60; ++n) REQUIRE(kfib(k, m) * klucas(k, n) == fib_lucas_product(k, m, n));
    }
  }
}

TEST_CASE("cross_diff is always 2") {
  for (std::int64_t k = 1; k <= 10; ++k) {
    for (std::int64_t j = 0; j <= 100; ++j) REQUIRE(cross_diff(k, j) == 2);
  }
}

TEST_CASE("shifted partial sum identity at k = 1") {
  for (std::int64_t n = 2; n <= 60; ++n) {
    const BigInt lhs = product_sum(1, n - 1) + kfib(1, 2 * n - 1) * klucas(1, 2 * n);
    REQUIRE(lhs == 2 + product_sum(1, n));
  }
}

TEST_CASE("product_sum closed form matches summation") {
  for (std::int64_t k = 1; k <= 10; ++k) {
    for (std::int64_t n = 1; n <= 60; ++n) REQUIRE(product_sum(k, n) == product_sum_closed(k, n));
  }
}

TEST_CASE("k = 1 Lucas identities") {
  for (std::int64_t n = 1; n <= 80; ++n) {
    const BigInt ln = klucas(1, n);
    REQUIRE(5 * kfib(1, n) == klucas(1, n - 1) + klucas(1, n + 1));
    REQUIRE(ln * ln == klucas(1, 2 * n) + 2 * sign(n));
    REQUIRE(klucas(1, n - 1) * klucas(1, n + 1) == ln * ln + 5 * sign(n - 1));
  }
}
