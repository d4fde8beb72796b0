#include "fiblucas/sequence.hpp"

#include <cstdlib>
#include <map>
#include <mutex>
#include <string>
#include <vector>

namespace fiblucas {
namespace {

void require_k(std::int64_t k) {
  if (k < 1) throw InvalidParameter("k must be >= 1, got " + std::to_string(k));
}

// Terms at nonnegative indices, grown on demand. One table per (family, k).
class TermCache {
 public:
  explicit TermCache(bool lucas) : lucas_(lucas) {}

  BigInt get(std::int64_t k, std::uint64_t idx) {
    std::lock_guard lock(mu_);
    auto& terms = tables_[k];
    if (terms.empty()) {
      terms.emplace_back(lucas_ ? 2 : 0);
      terms.emplace_back(lucas_ ? k : 1);
    }
    while (terms.size() <= idx) {
      const auto n = terms.size();
      terms.push_back(BigInt(k) * terms[n - 1] + terms[n - 2]);
    }
    return terms[idx];
  }

 private:
  bool lucas_;
  std::mutex mu_;
  std::map<std::int64_t, std::vector<BigInt>> tables_;
};

TermCache& fib_cache() {
  static TermCache cache(false);
  return cache;
}

TermCache& lucas_cache() {
  static TermCache cache(true);
  return cache;
}

bool odd(std::int64_t x) { return (x % 2) != 0; }

}  // namespace

BigInt kfib(SeqParams p) {
  require_k(p.k);
  if (p.idx >= 0) return fib_cache().get(p.k, static_cast<std::uint64_t>(p.idx));
  const std::int64_t n = -p.idx;
  BigInt v = fib_cache().get(p.k, static_cast<std::uint64_t>(n));
  return odd(n) ? v : BigInt(-v);
}

BigInt klucas(SeqParams p) {
  require_k(p.k);
  if (p.idx >= 0) return lucas_cache().get(p.k, static_cast<std::uint64_t>(p.idx));
  const std::int64_t n = -p.idx;
  BigInt v = lucas_cache().get(p.k, static_cast<std::uint64_t>(n));
  return odd(n) ? BigInt(-v) : v;
}

BigInt fib_lucas_product(std::int64_t k, std::int64_t m, std::int64_t n) {
  require_k(k);
  const BigInt tail = kfib(k, n - m);
  return kfib(k, m + n) - (odd(m) ? BigInt(-tail) : tail);
}

BigInt cross_diff(std::int64_t k, std::int64_t j) {
  require_k(k);
  if (j < 0) throw InvalidParameter("cross_diff needs j >= 0");
  return kfib(k, 2 * j + 1) * klucas(k, 2 * j + 2) - kfib(k, 2 * j + 2) * klucas(k, 2 * j + 1);
}

BigInt product_sum(std::int64_t k, std::int64_t n) {
  require_k(k);
  if (n < 1) throw InvalidParameter("product_sum needs n >= 1");
  BigInt total = 0;
  for (std::int64_t j = 1; j <= n; ++j) total += kfib(k, 2 * j) * klucas(k, 2 * j - 1);
  return total;
}

BigInt fib_sum_4i_minus_1(std::int64_t k, std::int64_t n) {
  require_k(k);
  if (n < 0) throw InvalidParameter("fib_sum_4i_minus_1 needs n >= 0");
  const BigInt num = kfib(k, 4 * n + 3) - kfib(k, 4 * n - 1) + kfib(k, 5) - 1;
  const BigInt den = klucas(k, 4) - 2;
  return exact_div(num, den, "fib_sum_4i_minus_1");
}

BigInt product_sum_closed(std::int64_t k, std::int64_t n) {
  if (n < 1) throw InvalidParameter("product_sum_closed needs n >= 1");
  return fib_sum_4i_minus_1(k, n) - 1 - n;
}

}  // namespace fiblucas
