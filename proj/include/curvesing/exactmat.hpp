#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace curvesing {

// Exact rational scalar. mpq_class keeps entries in lowest terms with a
// positive denominator as long as values are produced by arithmetic or by
// parse_rat below.
using Rat = mpq_class;

Rat parse_rat(const std::string& s);          // "p" or "p/q"
std::string rat_to_string(const Rat& x);
Rat rat_pow(const Rat& base, unsigned long e);
std::size_t rat_bitsize(const Rat& x);        // bits of numerator + denominator

// gmpxx lacks long long overloads; go through mpz.
inline Rat rat_of(long long v) { return Rat(mpz_class(static_cast<long>(v))); }
inline Rat rat_frac(long long num, long long den) {
  Rat x(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  x.canonicalize();
  return x;
}

// Dense row-major matrix over Q.
class RatMatrix {
public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}

  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(const std::vector<std::vector<Rat>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  RatMatrix transpose() const;
  RatMatrix operator*(const RatMatrix& rhs) const;
  bool operator==(const RatMatrix& rhs) const;

  bool is_zero() const;
  std::vector<Rat> row(std::size_t i) const;
  std::vector<Rat> col(std::size_t j) const;
  void append_row(const std::vector<Rat>& r);

private:
  std::size_t rows_, cols_;
  std::vector<Rat> a_;
};

struct RrefResult {
  RatMatrix matrix;
  std::vector<std::size_t> pivots;  // pivot column per pivot row, increasing
};

// The parallel kernels and the serial reference compute identical results:
// pivot choice is deterministic (smallest bit-size, then lowest row index)
// and the per-row eliminations are independent exact operations.
enum class ExecPolicy { Serial, Parallel, Auto };

RrefResult rref(const RatMatrix& m, ExecPolicy policy = ExecPolicy::Auto);
std::size_t rank(const RatMatrix& m, ExecPolicy policy = ExecPolicy::Auto);
// Basis of the right kernel {v : M v = 0}, one basis vector per row.
RatMatrix nullspace(const RatMatrix& m, ExecPolicy policy = ExecPolicy::Auto);

// Rank over Z/p for a prime p. Used as a cheap consistency check next to the
// certified rational rank; nullopt when some denominator vanishes mod p.
std::optional<std::size_t> rank_mod_p(const RatMatrix& m, std::uint64_t p);

bool same_row_space(const RatMatrix& a, const RatMatrix& b);

// Row-major JSON text: {"rows":R,"cols":C,"entries":[["p/q",...],...]}.
std::string matrix_to_json(const RatMatrix& m);
RatMatrix matrix_from_json(const std::string& text);

}  // namespace curvesing
