#pragma once

// Test-only oracles. Everything here recomputes expected values by a route
// independent of the library path it checks: determinants by Laplace
// expansion, sumsets by nested loops, Dedekind invariants straight from the
// module-quotient description.

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "curvesing/exactmat.hpp"
#include "curvesing/semigroup.hpp"

namespace testsupport {

using curvesing::Rat;
using curvesing::RatMatrix;

// Laplace expansion along the first row, memoized on the column subset.
inline Rat determinant_expansion(const RatMatrix& m) {
  const std::size_t n = m.rows();
  std::map<std::uint64_t, Rat> memo;
  auto rec = [&](auto&& self, std::size_t row, std::uint64_t colmask) -> Rat {
    if (row == n) return Rat(1);
    auto it = memo.find(colmask);
    if (it != memo.end()) return it->second;
    Rat acc(0);
    int sign = 1;
    for (std::size_t c = 0; c < n; ++c) {
      if (!(colmask & (std::uint64_t{1} << c))) continue;
      if (sgn(m.at(row, c)) != 0)
        acc += Rat(sign) * m.at(row, c) *
               self(self, row + 1, colmask & ~(std::uint64_t{1} << c));
      sign = -sign;
    }
    memo.emplace(colmask, acc);
    return acc;
  };
  return rec(rec, 0, (std::uint64_t{1} << n) - 1);
}

// |kL| by direct nested summation over the gap set.
inline long long sumset_brute_force(const curvesing::NumericalSemigroup& s, int k) {
  const auto& gaps = s.gaps();
  std::set<long long> sums;
  auto rec = [&](auto&& self, int depth, long long acc) -> void {
    if (depth == k) {
      sums.insert(acc);
      return;
    }
    for (long long l : gaps) self(self, depth + 1, acc + l);
  };
  if (!gaps.empty()) rec(rec, 0, 0);
  return static_cast<long long>(sums.size());
}

// d_k from the module description: the dualising module embeds in the ring
// of Laurent monomials with exponent generators {-(l+1) : l gap} and 0; the
// image of Hom(w^k, O) in O is the monomial ideal of all m with m + e in S
// for every k-fold sum e of those exponents. d_k counts the members outside.
inline long long dedekind_oracle(const curvesing::NumericalSemigroup& s, int k) {
  std::set<long long> expo;
  expo.insert(0);
  for (long long l : s.gaps()) expo.insert(-(l + 1));
  std::set<long long> sums = {0};
  for (int i = 0; i < k; ++i) {
    std::set<long long> next;
    for (long long a : sums)
      for (long long e : expo) next.insert(a + e);
    sums = std::move(next);
  }
  const long long c = s.conductor();
  long long count = 0;
  for (long long m = 0; m < (k + 1) * c + 1; ++m) {
    if (!s.contains(m)) continue;
    for (long long e : sums)
      if (!s.contains(m + e)) {
        ++count;
        break;
      }
  }
  return count;
}

// Deterministic Miller-Rabin, exact for 64-bit inputs with these bases.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  auto mulmod = [](std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
  };
  auto powmod = [&](std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = mulmod(r, b, m);
      b = mulmod(b, b, m);
      e >>= 1;
    }
    return r;
  };
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a % n, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

inline std::uint64_t random_prime_62bit(std::mt19937_64& rng) {
  for (;;) {
    std::uint64_t c = (rng() | 1) & ((std::uint64_t{1} << 62) - 1);
    c |= std::uint64_t{1} << 61;
    if (is_prime_u64(c)) return c;
  }
}

inline RatMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                               long long box, int denom_box = 1) {
  RatMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      const long long num = static_cast<long long>(rng() % (2 * box + 1)) - box;
      const long long den =
          1 + static_cast<long long>(rng() % static_cast<std::uint64_t>(denom_box));
      m.at(i, j) = curvesing::rat_frac(num, den);
    }
  return m;
}

}  // namespace testsupport
