#pragma once

#include <map>
#include <vector>

#include "curvesing/semigroup.hpp"
#include "curvesing/verdict.hpp"

namespace curvesing {

// Binomial x^alpha - x^beta in the monomial-curve ideal: alpha and beta have
// disjoint supports and equal weight q = sum a_j alpha_j = sum a_j beta_j.
struct BinomialRelation {
  std::vector<long long> alpha;
  std::vector<long long> beta;
  long long degree = 0;        // q
  std::vector<long long> v;    // alpha - beta
};

struct BinomialPresentation {
  NumericalSemigroup semigroup;
  std::vector<BinomialRelation> relations;
  std::map<long long, long long> betti_degrees;  // degree -> count
};

// Minimal binomial generators of the ideal of the monomial curve. Per degree
// s in [a1+a2, c + a_{n-1} + a_n) the factorizations of s are grouped by the
// shared-generator graph; one binomial joins each extra component to the
// first. Degrees at and beyond the bound have a connected graph (checked).
BinomialPresentation minimal_presentation(const NumericalSemigroup& s);

// dim T^1 in degree ell: #A_ell - dim V_ell - 1 with A_ell = {i : a_i + ell
// not in S} and V_ell spanned by the v_i with q_i + ell not in S; zero when
// A_ell is empty.
long long t1_graded_monomial(const BinomialPresentation& p, long long ell);

struct T1Profile {
  std::map<long long, long long> by_degree;  // nonzero entries only
  long long total_positive = 0;
  long long total_negative = 0;
  long long total = 0;
};

// Full profile over the provable support window [-max q_i, c - a_1).
T1Profile t1_profile(const BinomialPresentation& p);

long long t1_positive_total(const BinomialPresentation& p);

// Equisingular verdict for the monomial curve <d,...,d+n-1> (+ tail):
// fires iff (n-6)(d-n-3) >= 14, equivalently (n-1)(d-n-1) >= 5d-3n-3.
Verdict mumford_verdict(long long d, long long n);

}  // namespace curvesing
