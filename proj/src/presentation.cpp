#include "curvesing/presentation.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "curvesing/errors.hpp"
#include "curvesing/exactmat.hpp"

namespace curvesing {

namespace {

// All exponent vectors c with sum c_j * gens_j == s, in DFS order with c_0
// increasing first (so pure high-generator factorizations come out first).
void enumerate_factorizations(const std::vector<long long>& gens, long long s,
                              std::size_t idx, std::vector<long long>& cur,
                              std::vector<std::vector<long long>>& out) {
  if (idx + 1 == gens.size()) {
    if (s % gens[idx] == 0) {
      cur[idx] = s / gens[idx];
      out.push_back(cur);
      cur[idx] = 0;
    }
    return;
  }
  for (long long c = 0; c * gens[idx] <= s; ++c) {
    cur[idx] = c;
    enumerate_factorizations(gens, s - c * gens[idx], idx + 1, cur, out);
  }
  cur[idx] = 0;
}

std::vector<std::vector<long long>> factorizations(const std::vector<long long>& gens,
                                                   long long s) {
  std::vector<std::vector<long long>> out;
  std::vector<long long> cur(gens.size(), 0);
  enumerate_factorizations(gens, s, 0, cur, out);
  return out;
}

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
  std::vector<std::size_t> parent;
};

// Components of the graph on factorizations where two factorizations are
// adjacent iff their supports meet. Hub trick: union every factorization
// with one node per generator in its support.
std::vector<std::size_t> component_ids(const std::vector<std::vector<long long>>& facs,
                                       std::size_t ngens) {
  UnionFind uf(facs.size() + ngens);
  for (std::size_t f = 0; f < facs.size(); ++f)
    for (std::size_t j = 0; j < ngens; ++j)
      if (facs[f][j] > 0) uf.unite(f, facs.size() + j);
  std::vector<std::size_t> ids(facs.size());
  for (std::size_t f = 0; f < facs.size(); ++f) ids[f] = uf.find(f);
  return ids;
}

long long count_components(const std::vector<std::size_t>& ids) {
  std::vector<std::size_t> u(ids);
  std::sort(u.begin(), u.end());
  u.erase(std::unique(u.begin(), u.end()), u.end());
  return static_cast<long long>(u.size());
}

}  // namespace

BinomialPresentation minimal_presentation(const NumericalSemigroup& s) {
  BinomialPresentation out{s, {}, {}};
  const auto& gens = s.generators();
  const std::size_t n = gens.size();
  if (n == 1) return out;  // polynomial ring, no relations

  const long long lo = gens[0] + gens[1];
  const long long hi = s.conductor() + gens[n - 2] + gens[n - 1];

  for (long long deg = lo; deg < hi; ++deg) {
    if (!s.contains(deg)) continue;
    auto facs = factorizations(gens, deg);
    if (facs.size() < 2) continue;
    auto ids = component_ids(facs, n);

    // First factorization of each component, in enumeration order.
    std::vector<std::size_t> reps;
    std::vector<std::size_t> seen;
    for (std::size_t f = 0; f < facs.size(); ++f) {
      if (std::find(seen.begin(), seen.end(), ids[f]) != seen.end()) continue;
      seen.push_back(ids[f]);
      reps.push_back(f);
    }
    for (std::size_t k = 1; k < reps.size(); ++k) {
      BinomialRelation rel;
      rel.alpha = facs[reps[k]];
      rel.beta = facs[reps[0]];
      rel.degree = deg;
      rel.v.resize(n);
      for (std::size_t j = 0; j < n; ++j) {
        check_internal(rel.alpha[j] == 0 || rel.beta[j] == 0,
                       "representatives of distinct components share support");
        rel.v[j] = rel.alpha[j] - rel.beta[j];
      }
      out.relations.push_back(std::move(rel));
      out.betti_degrees[deg]++;
    }
  }

  // The window is justified by connectivity from the conductor on; verify on
  // the first two member degrees at/after the bound.
  int checked = 0;
  for (long long deg = hi; checked < 2 && deg < hi + 2 * gens[n - 1]; ++deg) {
    if (!s.contains(deg)) continue;
    auto facs = factorizations(gens, deg);
    if (facs.size() >= 2)
      check_internal(count_components(component_ids(facs, n)) == 1,
                     "factorization graph disconnected beyond degree bound");
    ++checked;
  }
  return out;
}

long long t1_graded_monomial(const BinomialPresentation& p, long long ell) {
  const auto& s = p.semigroup;
  const auto& gens = s.generators();
  long long na = 0;
  for (long long a : gens)
    if (!s.contains(a + ell)) ++na;
  if (na == 0) return 0;

  RatMatrix vmat;
  for (const auto& rel : p.relations) {
    if (s.contains(rel.degree + ell)) continue;
    std::vector<Rat> row(rel.v.size());
    for (std::size_t j = 0; j < rel.v.size(); ++j) row[j] = rat_of(rel.v[j]);
    vmat.append_row(row);
  }
  const long long dim_v =
      vmat.rows() == 0 ? 0 : static_cast<long long>(rank(vmat, ExecPolicy::Serial));
  const long long t1 = na - dim_v - 1;
  check_internal(t1 >= 0, "negative graded T1 dimension");
  return t1;
}

T1Profile t1_profile(const BinomialPresentation& p) {
  T1Profile prof;
  const auto& s = p.semigroup;
  long long qmax = 0;
  for (const auto& rel : p.relations) qmax = std::max(qmax, rel.degree);
  const long long lo = -qmax;
  const long long hi = s.conductor() - s.multiplicity();  // zero from here on
  if (lo >= hi) return prof;
  // per-degree evaluations are pure; deterministic merge afterwards
  std::vector<long long> dims(static_cast<std::size_t>(hi - lo), 0);
#pragma omp parallel for schedule(dynamic, 8)
  for (long long ell = lo; ell < hi; ++ell)
    dims[static_cast<std::size_t>(ell - lo)] = t1_graded_monomial(p, ell);
  for (long long ell = lo; ell < hi; ++ell) {
    const long long d = dims[static_cast<std::size_t>(ell - lo)];
    if (d == 0) continue;
    prof.by_degree[ell] = d;
    prof.total += d;
    if (ell > 0) prof.total_positive += d;
    if (ell < 0) prof.total_negative += d;
  }
  return prof;
}

long long t1_positive_total(const BinomialPresentation& p) {
  return t1_profile(p).total_positive;
}

Verdict mumford_verdict(long long d, long long n) {
  if (!(1 < n && n < d)) fail(Errc::BadParameters, "need 1 < n < d");
  NumericalSemigroup s = mumford_semigroup(d, n);
  BinomialPresentation pres = minimal_presentation(s);
  const long long t1_plus = t1_positive_total(pres);
  const long long e = 5 * d - 3 * n - 3;  // 2*delta + type - 1 for these curves
  const long long witness = (n - 6) * (d - n - 3);
  check_internal((t1_plus >= e) == (witness >= 14),
                 "equisingular dimension count disagrees with its closed form");

  Verdict v;
  v.witnesses["t1_positive_total"] = std::to_string(t1_plus);
  v.witnesses["deligne_e"] = std::to_string(e);
  v.witnesses["(n-6)(d-n-3)"] = std::to_string(witness);
  if (witness >= 14) {
    v.outcome = Outcome::NonSmoothableGenericEquisingular;
    v.provenance =
        "equisingular stratum (dim T1_+ = (n-1)(d-n-1)) is at least as large as "
        "every smoothing component (e = 5d-3n-3)";
  } else {
    v.outcome = Outcome::Unknown;
    v.provenance = "dimension count does not fire: (n-6)(d-n-3) < 14";
  }
  return v;
}

}  // namespace curvesing
