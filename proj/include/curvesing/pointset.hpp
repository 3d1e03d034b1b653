#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "curvesing/exactmat.hpp"
#include "curvesing/verdict.hpp"

namespace curvesing {

// Monomial exponent vectors of total degree `deg` in `n` variables, in
// descending lexicographic order (x1^deg first). The fixed order makes every
// Veronese matrix and derived basis deterministic.
std::vector<std::vector<int>> monomials(int n, int deg);

long long binom(long long n, long long k);

// r points in P^{n-1}, columns of an exact n x r coordinate matrix.
// Invariants: no zero column, no two columns proportional, r >= 1, n >= 2.
class PointConfiguration {
public:
  explicit PointConfiguration(RatMatrix coords, std::string label = "");

  int n() const { return static_cast<int>(coords_.rows()); }
  int r() const { return static_cast<int>(coords_.cols()); }
  const RatMatrix& coords() const { return coords_; }
  const std::string& label() const { return label_; }

  // Monomials of degree `deg` evaluated at the points; rows follow
  // monomials(n, deg), columns follow the stored point order. Cached.
  const RatMatrix& veronese(int deg) const;
  long long hilbert(int deg) const;  // rank of veronese(deg)

private:
  RatMatrix coords_;
  std::string label_;
  struct Cache {
    std::mutex mtx;
    std::map<int, RatMatrix> veronese;
    std::map<int, long long> hilbert;
  };
  std::shared_ptr<Cache> cache_;
};

RatMatrix veronese_matrix(const PointConfiguration& g, int deg);
long long hilbert_function(const PointConfiguration& g, int deg);

bool is_general_position(const PointConfiguration& g);

struct UniformCheck {
  bool uniform = false;
  bool certain = false;  // exhaustive check, or a sampled counterexample
};
// Exhaustive mode allowed for r <= 12 only; sampled mode is one-sided.
UniformCheck is_uniform_position_exhaustive(const PointConfiguration& g);
UniformCheck is_uniform_position_sampled(const PointConfiguration& g,
                                         std::uint64_t seed, int trials);

// delta of the cone: sum over degrees of (r - hilbert).
long long delta_cone(const PointConfiguration& g);
long long intersection_multiplicity(const PointConfiguration& g,
                                    const std::vector<Rat>& point);

struct GenericInvariants {
  long long d = 0;      // bracketing degree: C(n+d-2,d-1) < r <= C(n+d-1,d)
  long long delta = 0;  // d*r - C(n+d-1,d-1)
  long long s = 0;      // r - C(n+d-2,d-1)
  long long type = 0;   // max{s, C(n+d-3,d-1) - (n-2)s}
  long long deligne_e = 0;  // 2*delta - r + type
  long long moduli = 0;     // (r-n-1)(n-1)
};
GenericInvariants generic_invariants(long long n, long long r);

// r points in P^{r-n-1} given by a kernel matrix Q with P Q^t = 0.
PointConfiguration gale_transform(const PointConfiguration& g);

// Exact test: exists an invertible diagonal L with P L P^t = 0. Requires
// r = 2n and rank n.
bool is_self_associated(const PointConfiguration& g);

// (I+S | I-S) for a seeded random integer skew-symmetric S; postconditions
// is_self_associated and hilbert(2) == 2n-1 are enforced by retry.
PointConfiguration random_self_associated(int n, std::uint64_t seed);

long long quadric_deficiency(const PointConfiguration& g);

// For r points in ambient r-g with r <= C(r-g+1,2) and g >= 4: OBSTRUCTED if
// the Gale transform imposes more than 3g-3 conditions on quadrics.
Verdict cone_quadric_test(const PointConfiguration& g, long long genus);

// Upper end M(n) of the large-family range, exact rational; n >= 6.
Rat m_bound(long long n);

// Smoothability of the generic cone over r points in P^{n-1}; reproduces the
// published classification for n = 6..10 and the reported computational sets
// for n = 4, 5.
Verdict classify_generic(long long n, long long r);

struct T1LowerBound {
  long long value = 0;
  bool equality = false;  // exact value, attained when r = C(n+d-1,d), ell = -1
};
// ell > 0 or ell == -1.
T1LowerBound t1_lower_bounds(long long n, long long r, long long ell);

Verdict equisingular_verdict(long long n, long long r);

struct SCurveInvariants {
  long long e = 0;         // 4r - 3n - 2
  long long t1_0 = 0;      // (n-1)(r-n-1)
  long long t1_minus1 = 0; // (r-2)n
  bool extrapolated = false;  // r beyond the primary case C(n+1,2)+1
};
SCurveInvariants s_curve_invariants(long long n, long long r);

struct DeformationTarget {
  char kind = 'L';     // 'L' or 'S'
  long long d = 0, n = 0, N = 0;  // N only for kind 'S'
  std::string str() const;
};
// L_d^n when d <= 2n-1, else S_d^{n,N} with N = max{n, n+d-C(n+1,2)}.
DeformationTarget deformation_target(long long d, long long n);

PointConfiguration random_config(int n, int r, std::uint64_t seed, long long box);
// The four coordinate vertices of P^3 plus the six edge midpoints.
PointConfiguration tetrahedron_midpoints();

// Ordered projective equivalence, decided exactly (diagonal + linear).
bool projectively_equivalent(const PointConfiguration& a, const PointConfiguration& b);

// File formats: JSON {"n": int, "points": [["p/q",...], ...]} (one inner
// array per point) or CSV with one point per line.
PointConfiguration config_from_json(const std::string& text);
std::string config_to_json(const PointConfiguration& g);
PointConfiguration config_from_csv(const std::string& text);

}  // namespace curvesing
