#include "curvesing/exactmat.hpp"

#include <omp.h>

#include <algorithm>
#include <cstddef>

#include <json.hpp>

#include "curvesing/errors.hpp"

namespace curvesing {

Rat parse_rat(const std::string& s) {
  if (s.empty()) fail(Errc::ParseError, "empty rational literal");
  Rat x;
  if (x.set_str(s, 10) != 0) fail(Errc::ParseError, "bad rational literal '" + s + "'");
  if (x.get_den() == 0) fail(Errc::ParseError, "zero denominator in '" + s + "'");
  x.canonicalize();
  return x;
}

std::string rat_to_string(const Rat& x) { return x.get_str(); }

Rat rat_pow(const Rat& base, unsigned long e) {
  Rat out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num().get_mpz_t(), e);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den().get_mpz_t(), e);
  return out;  // gcd(p,q)=1 implies gcd(p^e,q^e)=1, no canonicalize needed
}

std::size_t rat_bitsize(const Rat& x) {
  return mpz_sizeinbase(x.get_num().get_mpz_t(), 2) +
         mpz_sizeinbase(x.get_den().get_mpz_t(), 2);
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<Rat>>& rows) {
  if (rows.empty()) return RatMatrix();
  RatMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    check_internal(rows[i].size() == m.cols(), "from_rows: ragged rows");
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

RatMatrix RatMatrix::operator*(const RatMatrix& rhs) const {
  check_internal(cols_ == rhs.rows_, "matmul shape mismatch");
  RatMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat& aik = at(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j)
        out.at(i, j) += aik * rhs.at(k, j);
    }
  return out;
}

bool RatMatrix::operator==(const RatMatrix& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && a_ == rhs.a_;
}

bool RatMatrix::is_zero() const {
  for (const Rat& x : a_)
    if (sgn(x) != 0) return false;
  return true;
}

std::vector<Rat> RatMatrix::row(std::size_t i) const {
  return std::vector<Rat>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
}

std::vector<Rat> RatMatrix::col(std::size_t j) const {
  std::vector<Rat> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = at(i, j);
  return out;
}

void RatMatrix::append_row(const std::vector<Rat>& r) {
  if (rows_ == 0 && cols_ == 0) cols_ = r.size();
  check_internal(r.size() == cols_, "append_row width mismatch");
  a_.insert(a_.end(), r.begin(), r.end());
  ++rows_;
}

namespace {

constexpr std::size_t kParallelCells = 4096;

bool use_parallel(ExecPolicy policy, std::size_t rows, std::size_t cols) {
  switch (policy) {
    case ExecPolicy::Serial: return false;
    case ExecPolicy::Parallel: return true;
    case ExecPolicy::Auto:
      return rows * cols >= kParallelCells && omp_get_max_threads() > 1;
  }
  return false;
}

// Smallest bit-size nonzero entry in column `col` among rows [from, rows);
// ties broken by the lowest row index. Returns rows() when the column is zero.
std::size_t pick_pivot(const RatMatrix& a, std::size_t col, std::size_t from) {
  std::size_t best = a.rows();
  std::size_t best_bits = 0;
  for (std::size_t i = from; i < a.rows(); ++i) {
    if (sgn(a.at(i, col)) == 0) continue;
    std::size_t bits = rat_bitsize(a.at(i, col));
    if (best == a.rows() || bits < best_bits) {
      best = i;
      best_bits = bits;
    }
  }
  return best;
}

void swap_rows(RatMatrix& a, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a.at(i, c), a.at(j, c));
}

}  // namespace

RrefResult rref(const RatMatrix& m, ExecPolicy policy) {
  RatMatrix a = m;
  std::vector<std::size_t> pivots;
  const std::size_t rows = a.rows(), cols = a.cols();
  const bool par = use_parallel(policy, rows, cols);
  std::size_t prow = 0;
  for (std::size_t col = 0; col < cols && prow < rows; ++col) {
    std::size_t piv = pick_pivot(a, col, prow);
    if (piv == rows) continue;
    swap_rows(a, prow, piv);
    const Rat p = a.at(prow, col);
    if (p != 1) {
      a.at(prow, col) = 1;
      for (std::size_t c = col + 1; c < cols; ++c)
        if (sgn(a.at(prow, c)) != 0) a.at(prow, c) /= p;
    }
    // Gauss-Jordan step: clear the pivot column in every other row. Each row
    // update touches only that row, so the loop is safe to run in parallel
    // and the result does not depend on the schedule.
    const long long n = static_cast<long long>(rows);
#pragma omp parallel for schedule(dynamic, 1) if (par)
    for (long long i = 0; i < n; ++i) {
      const std::size_t r = static_cast<std::size_t>(i);
      if (r == prow) continue;
      const Rat f = a.at(r, col);
      if (sgn(f) == 0) continue;
      a.at(r, col) = 0;
      for (std::size_t c = col + 1; c < cols; ++c) {
        const Rat& src = a.at(prow, c);
        if (sgn(src) != 0) a.at(r, c) -= f * src;
      }
    }
    pivots.push_back(col);
    ++prow;
  }
  return {std::move(a), std::move(pivots)};
}

std::size_t rank(const RatMatrix& m, ExecPolicy policy) {
  RatMatrix a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  const bool par = use_parallel(policy, rows, cols);
  std::size_t prow = 0;
  for (std::size_t col = 0; col < cols && prow < rows; ++col) {
    std::size_t piv = pick_pivot(a, col, prow);
    if (piv == rows) continue;
    swap_rows(a, prow, piv);
    const Rat p = a.at(prow, col);
    const long long lo = static_cast<long long>(prow) + 1;
    const long long n = static_cast<long long>(rows);
#pragma omp parallel for schedule(dynamic, 1) if (par)
    for (long long i = lo; i < n; ++i) {
      const std::size_t r = static_cast<std::size_t>(i);
      const Rat f0 = a.at(r, col);
      if (sgn(f0) == 0) continue;
      const Rat f = f0 / p;
      a.at(r, col) = 0;
      for (std::size_t c = col + 1; c < cols; ++c) {
        const Rat& src = a.at(prow, c);
        if (sgn(src) != 0) a.at(r, c) -= f * src;
      }
    }
    ++prow;
  }
  return prow;
}

RatMatrix nullspace(const RatMatrix& m, ExecPolicy policy) {
  RrefResult r = rref(m, policy);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  RatMatrix basis(free_cols.size(), cols);
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const std::size_t fc = free_cols[k];
    basis.at(k, fc) = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i)
      basis.at(k, r.pivots[i]) = -r.matrix.at(i, fc);
  }
  return basis;
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e) {
    if (e & 1) r = mulmod(r, b, p);
    b = mulmod(b, b, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

}  // namespace

std::optional<std::size_t> rank_mod_p(const RatMatrix& m, std::uint64_t p) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::uint64_t> a(rows * cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      const Rat& x = m.at(i, j);
      std::uint64_t num = mpz_fdiv_ui(x.get_num().get_mpz_t(), p);
      std::uint64_t den = mpz_fdiv_ui(x.get_den().get_mpz_t(), p);
      if (den == 0) return std::nullopt;
      a[i * cols + j] = mulmod(num, invmod(den, p), p);
    }
  std::size_t prow = 0;
  for (std::size_t col = 0; col < cols && prow < rows; ++col) {
    std::size_t piv = rows;
    for (std::size_t i = prow; i < rows; ++i)
      if (a[i * cols + col] != 0) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    if (piv != prow)
      for (std::size_t c = col; c < cols; ++c)
        std::swap(a[prow * cols + c], a[piv * cols + c]);
    const std::uint64_t inv = invmod(a[prow * cols + col], p);
    for (std::size_t i = prow + 1; i < rows; ++i) {
      const std::uint64_t f = mulmod(a[i * cols + col], inv, p);
      if (f == 0) continue;
      for (std::size_t c = col; c < cols; ++c) {
        std::uint64_t sub = mulmod(f, a[prow * cols + c], p);
        a[i * cols + c] = (a[i * cols + c] + p - sub) % p;
      }
    }
    ++prow;
  }
  return prow;
}

bool same_row_space(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.cols()) return false;
  RrefResult ra = rref(a), rb = rref(b);
  if (ra.pivots != rb.pivots) return false;
  for (std::size_t i = 0; i < ra.pivots.size(); ++i)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (ra.matrix.at(i, c) != rb.matrix.at(i, c)) return false;
  return true;
}

std::string matrix_to_json(const RatMatrix& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rat_to_string(m.at(i, j)));
    entries.push_back(std::move(row));
  }
  nlohmann::json j = {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
  return j.dump();
}

RatMatrix matrix_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(Errc::ParseError, "invalid JSON matrix");
  if (!j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
    fail(Errc::ParseError, "matrix JSON needs rows/cols/entries");
  const std::size_t rows = j["rows"].get<std::size_t>();
  const std::size_t cols = j["cols"].get<std::size_t>();
  const auto& entries = j["entries"];
  if (entries.size() != rows) fail(Errc::ParseError, "matrix JSON row count mismatch");
  RatMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (entries[i].size() != cols) fail(Errc::ParseError, "matrix JSON col count mismatch");
    for (std::size_t c = 0; c < cols; ++c)
      m.at(i, c) = parse_rat(entries[i][c].get<std::string>());
  }
  return m;
}

}  // namespace curvesing
