#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "curvesing/pointset.hpp"

namespace curvesing {

// Homogeneous ideal generator of the cone: coefficient vector over
// monomials(n, degree) in the fixed order.
struct ConeGenerator {
  int degree = 0;
  std::vector<Rat> coeffs;
};

// Graded model of the cone over a point configuration. Everything lives in
// the total ring of fractions: K_d is k^r (one coordinate per line), a form
// of degree d embeds as its evaluation vector, so O_d is the row space of
// the degree-d Veronese matrix and multiplication is componentwise. The
// Jacobian of an ideal generator acts on K by componentwise multiplication
// with its evaluation vector, which removes all symbolic algebra from the
// T^1 computation.
// Minimal: per degree a complement of (linear forms)*(lower ideal), chosen
// deterministically from rref pivots. FullBases: the complete ideal basis in
// every degree up to regularity+1; redundant, but generates the same ideal,
// so every T^1 dimension must agree (exercised by tests).
enum class GeneratorPolicy { Minimal, FullBases };

class GradedConeModel {
public:
  // Throws DegenerateConfig when the points do not span.
  static GradedConeModel build(const PointConfiguration& g,
                               GeneratorPolicy policy = GeneratorPolicy::Minimal);

  const PointConfiguration& config() const { return config_; }
  const std::vector<ConeGenerator>& generators() const { return gens_; }
  std::map<int, int> generator_degree_counts() const;
  int regularity() const { return sigma_; }  // least d with hilbert(d) = r

  // dim {a in K_ell : a*x_i in O_{ell+1} for all i}.
  long long hom_m_O_dim(int ell) const;

  // dim T^1 in degree ell from the four-term exact sequence:
  // dim (ker df)_ell - (r - hom_m_O_dim(ell)).
  long long t1_dim(int ell) const;

  // Number of generators of the dualising module (Cohen-Macaulay type).
  long long cone_type() const;

  // Warms the per-degree quotient caches so later t1_dim calls only read.
  void prefetch_quotients(const std::vector<int>& degrees) const;

private:
  explicit GradedConeModel(PointConfiguration g)
      : config_(std::move(g)), qcache_(std::make_shared<QuotCache>()) {}

  // K_d/O_d with an explicit complement basis: `complement` lists the
  // non-pivot columns of rref(veronese(d)) and reduce_unit row c is the
  // class of the unit vector e_c in complement coordinates.
  struct Quot {
    std::vector<std::size_t> complement;
    RatMatrix reduce_unit;  // r x complement.size()
  };
  struct QuotCache {
    std::mutex mtx;
    std::map<int, Quot> map;
  };
  const Quot& quot(int deg) const;

  PointConfiguration config_;
  int sigma_ = 0;
  std::vector<ConeGenerator> gens_;
  std::vector<std::vector<std::vector<Rat>>> jac_;  // [gen][var] -> r values
  std::shared_ptr<QuotCache> qcache_;
};

struct T1Report {
  int lmin = 0, lmax = 0;  // window actually used (auto-widened)
  std::map<int, long long> t1;
  long long total = 0;
  long long delta = 0;
  long long type = 0;
  long long deligne_e = 0;  // 2*delta - r + type
  long long moduli = 0;     // (r-n-1)(n-1)
  bool tplusnul_ok = false; // t1 = 0 whenever hilbert(ell+1) = r
  std::optional<bool> negatively_graded;  // Gorenstein 2n-configs only
};

// Per-degree dimensions over [lmin, lmax], widened until both boundary
// degrees vanish. Degrees are computed in parallel.
T1Report t1_report(const GradedConeModel& m, int lmin, int lmax);

// Default window for a configuration with bracketing degree d.
std::pair<int, int> default_t1_window(const PointConfiguration& g);

}  // namespace curvesing
