#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "curvesing/errors.hpp"
#include "curvesing/pointset.hpp"
#include "support.hpp"

using namespace curvesing;

namespace {

RatMatrix from_ints(const std::vector<std::vector<long long>>& rows) {
  RatMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rat_of(rows[i][j]);
  return m;
}

PointConfiguration four_general_p2() {
  return PointConfiguration(from_ints({{1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}}));
}

}  // namespace

TEST_CASE("configuration invariants are enforced") {
  CHECK_THROWS_AS(PointConfiguration(from_ints({{1, 0}, {0, 0}}).transpose()), Error);
  CHECK_THROWS_AS(PointConfiguration(from_ints({{1, 2}, {2, 4}})), Error);  // proportional
  CHECK_THROWS_AS(PointConfiguration(from_ints({{1, 0}})), Error);          // n = 1
}

TEST_CASE("veronese matrices") {
  auto g = four_general_p2();
  RatMatrix v0 = veronese_matrix(g, 0);
  REQUIRE(v0.rows() == 1);
  for (int c = 0; c < 4; ++c) CHECK(v0.at(0, c) == Rat(1));
  CHECK(veronese_matrix(g, 1) == g.coords());
  CHECK(veronese_matrix(g, 2).rows() == 6);
}

TEST_CASE("hilbert function") {
  auto g = four_general_p2();
  CHECK(hilbert_function(g, 0) == 1);
  CHECK(hilbert_function(g, 1) == 3);
  CHECK(hilbert_function(g, 2) == 4);

  auto five = random_config(3, 5, 17, 20);
  REQUIRE(is_general_position(five));
  CHECK(hilbert_function(five, 1) == 3);
  CHECK(hilbert_function(five, 2) == 5);

  auto sa = random_self_associated(5, 1);
  CHECK(hilbert_function(sa, 2) == 2 * 5 - 1);
}

TEST_CASE("tetrahedron plus midpoints: general but not uniform") {
  auto g = tetrahedron_midpoints();
  REQUIRE(g.n() == 4);
  REQUIRE(g.r() == 10);
  CHECK(is_general_position(g));
  auto uc = is_uniform_position_exhaustive(g);
  CHECK_FALSE(uc.uniform);  // each coordinate hyperplane holds seven points
  CHECK(uc.certain);
  // the sampled mode finds the same counterexample family
  auto sc = is_uniform_position_sampled(g, 5, 200);
  CHECK_FALSE(sc.uniform);
  CHECK(sc.certain);
}

TEST_CASE("random uniform example") {
  auto g = random_config(6, 11, 7, 100);
  CHECK(is_general_position(g));
  auto uc = is_uniform_position_exhaustive(g);
  CHECK(uc.uniform);
  CHECK(is_uniform_position_sampled(g, 99, 50).uniform);
  CHECK_THROWS_AS(is_uniform_position_exhaustive(random_config(3, 13, 1, 50)), Error);
}

TEST_CASE("spanning points with r <= n are in general position") {
  auto g = random_config(5, 3, 21, 10);
  CHECK(is_general_position(g));
}

TEST_CASE("delta of cones") {
  CHECK(delta_cone(four_general_p2()) == 4);  // H = (1,3,4): 3 + 1
  auto l10 = gale_transform(tetrahedron_midpoints());
  CHECK(delta_cone(l10) == 13);  // 2*10 - C(7,1)
  auto sa = random_self_associated(6, 2);
  CHECK(delta_cone(sa) == 3 * 6);  // one more than the generic 3n-1
}

TEST_CASE("intersection multiplicity via delta") {
  auto g = four_general_p2();
  std::vector<Rat> p = {Rat(1), Rat(2), Rat(4)};
  auto extended = PointConfiguration(
      from_ints({{1, 0, 0, 1, 1}, {0, 1, 0, 1, 2}, {0, 0, 1, 1, 4}}));
  CHECK(intersection_multiplicity(g, p) == delta_cone(extended) - delta_cone(g));
  std::vector<Rat> dup = {Rat(2), Rat(2), Rat(2)};
  CHECK_THROWS_AS(intersection_multiplicity(g, dup), Error);
}

TEST_CASE("generic invariants reproduce the worked columns") {
  auto a = generic_invariants(6, 10);
  CHECK(a.d == 2);
  CHECK(a.delta == 13);
  CHECK(a.type == 4);
  CHECK(a.deligne_e == 20);

  auto b = generic_invariants(6, 11);
  CHECK(b.delta == 15);
  CHECK(b.type == 5);
  CHECK(b.deligne_e == 24);

  for (long long r = 24; r <= 35; ++r) {
    auto c = generic_invariants(4, r);
    CHECK(c.deligne_e == 8 * r - 90);
  }
  CHECK_THROWS_AS(generic_invariants(6, 6), Error);
}

TEST_CASE("delta formula on seeded general-position grids") {
  std::uint64_t seed = 1000;
  for (int n = 4; n <= 8; ++n) {
    const long long rmax = binom(n + 1, 2) + 5;
    for (long long r = n + 1; r <= rmax; r += 3) {
      PointConfiguration g = random_config(n, static_cast<int>(r), seed++, 50);
      if (!is_general_position(g)) continue;  // exact check guards the claim
      auto inv = generic_invariants(n, r);
      CAPTURE(n);
      CAPTURE(r);
      CHECK(delta_cone(g) == inv.delta);
    }
  }
}

TEST_CASE("gale transform of (I | A) has row space (-A^t | I)") {
  std::mt19937_64 rng(3);
  RatMatrix p(4, 9);
  for (std::size_t i = 0; i < 4; ++i) p.at(i, i) = 1;
  RatMatrix a = testsupport::random_matrix(rng, 4, 5, 6, 2);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 5; ++j) p.at(i, 4 + j) = a.at(i, j);
  PointConfiguration g(p);
  auto gale = gale_transform(g);
  CHECK(gale.n() == 5);
  CHECK(gale.r() == 9);
  RatMatrix expected(5, 9);
  for (std::size_t k = 0; k < 5; ++k) {
    for (std::size_t i = 0; i < 4; ++i) expected.at(k, i) = -a.at(i, k);
    expected.at(k, 4 + k) = 1;
  }
  CHECK(same_row_space(gale.coords(), expected));
  CHECK((g.coords() * gale.coords().transpose()).is_zero());
}

TEST_CASE("gale transform of the tetrahedron configuration") {
  auto g = tetrahedron_midpoints();
  auto gale = gale_transform(g);
  CHECK(gale.n() == 6);
  CHECK(gale.r() == 10);
  CHECK((g.coords() * gale.coords().transpose()).is_zero());
  // eleven independent quadrics through the ten Gale points
  CHECK(binom(7, 2) - hilbert_function(gale, 2) == 11);
}

TEST_CASE("gale biduality up to projective equivalence") {
  for (std::uint64_t seed : {4u, 9u, 31u}) {
    auto g = random_config(4, 9, seed, 30);
    auto dd = gale_transform(gale_transform(g));
    CHECK(projectively_equivalent(g, dd));
  }
  auto g = tetrahedron_midpoints();
  CHECK(projectively_equivalent(g, gale_transform(gale_transform(g))));
  CHECK_FALSE(projectively_equivalent(g, random_config(4, 10, 8, 25)));
}

TEST_CASE("self-association") {
  // skew normal form is always self-associated
  for (int n : {2, 3, 5, 9}) {
    auto g = random_self_associated(n, 7 + static_cast<std::uint64_t>(n));
    CHECK(is_self_associated(g));
    // "fail by one to impose conditions on quadrics" needs 2n <= C(n+1,2)
    if (n >= 3) CHECK(quadric_deficiency(g) == 1);
  }
  // four generic points on the line are always self-associated
  auto quad = PointConfiguration(from_ints({{1, 0, 1, 2}, {0, 1, 1, 5}}));
  CHECK(is_self_associated(quad));
  // generic 2n points are not (rank of A_2 is 2n)
  auto generic = random_config(4, 8, 42, 50);
  REQUIRE(hilbert_function(generic, 2) == 8);
  CHECK_FALSE(is_self_associated(generic));
  CHECK_THROWS_AS(is_self_associated(tetrahedron_midpoints()), Error);  // r != 2n
  CHECK_THROWS_AS(random_self_associated(1, 5), Error);
}

TEST_CASE("cone quadric test") {
  // Gale transform of the ten tetrahedron points: the bidual lies on no
  // quadric, so s = 10 > 3g-3 = 9.
  auto l10 = gale_transform(tetrahedron_midpoints());
  auto v = cone_quadric_test(l10, 4);
  CHECK(v.outcome == Outcome::Obstructed);
  CHECK(v.witnesses.at("quadric_conditions") == "10");
  CHECK(v.witnesses.at("bound_3g-3") == "9");

  auto generic = random_config(6, 11, 12, 60);
  REQUIRE(is_general_position(generic));
  CHECK(cone_quadric_test(generic, 5).outcome == Outcome::Unknown);

  CHECK_THROWS_AS(cone_quadric_test(l10, 5), Error);  // ambient mismatch
}

TEST_CASE("M(n) values") {
  CHECK(m_bound(6) == Rat(42));
  CHECK(m_bound(7) == Rat(138));
  CHECK(m_bound(8) == Rat(419));
  CHECK(m_bound(9) == Rat(1845) / 2);
  CHECK(m_bound(10) == Rat(7909) / 3);
  CHECK_THROWS_AS(m_bound(5), Error);
}

TEST_CASE("published classification table") {
  auto nonsmoothable_set = [](long long n) {
    std::vector<long long> out;
    const long long top = 3000;
    for (long long r = n + 1; r <= top; ++r)
      if (classify_generic(n, r).outcome == Outcome::NonSmoothableGeneric) out.push_back(r);
    return out;
  };
  auto range = [](long long a, long long b) {
    std::vector<long long> out;
    for (long long r = a; r <= b; ++r) out.push_back(r);
    return out;
  };

  std::vector<long long> n6 = {10, 12};
  for (long long r = 15; r <= 42; ++r) n6.push_back(r);
  CHECK(nonsmoothable_set(6) == n6);

  std::vector<long long> n7 = {11};
  for (long long r = 13; r <= 138; ++r) n7.push_back(r);
  CHECK(nonsmoothable_set(7) == n7);

  CHECK(nonsmoothable_set(8) == range(12, 419));
  CHECK(nonsmoothable_set(9) == range(13, 922));
  CHECK(nonsmoothable_set(10) == range(14, 2636));
}

TEST_CASE("smoothable and unknown branches") {
  CHECK(classify_generic(6, 11).outcome == Outcome::SmoothableGeneric);
  CHECK(classify_generic(6, 13).outcome == Outcome::SmoothableGeneric);
  CHECK(classify_generic(6, 14).outcome == Outcome::SmoothableGeneric);
  CHECK(classify_generic(6, 43).outcome == Outcome::Unknown);
  CHECK(classify_generic(6, 7).outcome == Outcome::SmoothableGeneric);  // g <= 3

  // n = 5: reported set [41, 60], equisingular from 19 on
  CHECK(classify_generic(5, 41).outcome == Outcome::NonSmoothableGeneric);
  CHECK(classify_generic(5, 60).outcome == Outcome::NonSmoothableGeneric);
  CHECK(classify_generic(5, 61).outcome == Outcome::NonSmoothableGenericEquisingular);
  CHECK(classify_generic(5, 19).outcome == Outcome::NonSmoothableGenericEquisingular);
  CHECK(classify_generic(5, 16).outcome == Outcome::Unknown);

  // n = 4: [96,105] u [132,150]
  CHECK(classify_generic(4, 96).outcome == Outcome::NonSmoothableGeneric);
  CHECK(classify_generic(4, 105).outcome == Outcome::NonSmoothableGeneric);
  CHECK(classify_generic(4, 106).outcome == Outcome::NonSmoothableGenericEquisingular);
  CHECK(classify_generic(4, 132).outcome == Outcome::NonSmoothableGeneric);
  CHECK(classify_generic(4, 30).outcome == Outcome::Unknown);
  CHECK(classify_generic(4, 31).outcome == Outcome::NonSmoothableGenericEquisingular);

  CHECK_THROWS_AS(classify_generic(3, 10), Error);
}

TEST_CASE("T1 lower bounds and the two specializations") {
  for (long long r = 25; r <= 40; ++r)
    CHECK(t1_lower_bounds(6, r, 1).value == 5 * (r - 24));
  for (long long r = 13; r <= 20; ++r)
    CHECK(t1_lower_bounds(4, r, 1).value == std::max<long long>(0, 3 * r - 36));

  CHECK(t1_lower_bounds(6, 13, -1).value == 3);
  CHECK(t1_lower_bounds(6, 14, -1).value == 8);
  auto eq = t1_lower_bounds(6, 21, -1);
  CHECK(eq.value == 99);
  CHECK(eq.equality);
  CHECK_FALSE(t1_lower_bounds(6, 13, -1).equality);
  CHECK_THROWS_AS(t1_lower_bounds(6, 13, -2), Error);
  CHECK_THROWS_AS(t1_lower_bounds(6, 13, 0), Error);
}

TEST_CASE("equisingular thresholds") {
  CHECK(equisingular_verdict(4, 31).outcome == Outcome::NonSmoothableGenericEquisingular);
  CHECK(equisingular_verdict(4, 30).outcome == Outcome::Unknown);
  CHECK(equisingular_verdict(5, 18).outcome == Outcome::Unknown);
  CHECK(equisingular_verdict(5, 19).outcome == Outcome::NonSmoothableGenericEquisingular);
  CHECK(equisingular_verdict(8, 12).outcome == Outcome::Unknown);  // threshold is 12
  CHECK(equisingular_verdict(8, 13).outcome == Outcome::NonSmoothableGenericEquisingular);
  CHECK(equisingular_verdict(6, 15).outcome == Outcome::NonSmoothableGenericEquisingular);
  CHECK(equisingular_verdict(6, 14).outcome == Outcome::Unknown);
  CHECK_THROWS_AS(equisingular_verdict(3, 10), Error);
}

TEST_CASE("smooth-branch curve invariants") {
  auto inv = s_curve_invariants(6, 22);
  CHECK(inv.e == 68);
  CHECK(inv.t1_0 == 75);
  CHECK(inv.t1_minus1 == 120);
  CHECK_FALSE(inv.extrapolated);
  CHECK(s_curve_invariants(6, 23).extrapolated);
  CHECK_THROWS_AS(s_curve_invariants(6, 21), Error);
}

TEST_CASE("deformation targets") {
  CHECK(deformation_target(13, 9).str() == "L_13^9");
  CHECK(deformation_target(17, 9).str() == "L_17^9");  // d <= 2n-1
  auto t = deformation_target(20, 9);
  CHECK(t.kind == 'S');
  CHECK(t.N == 9);  // max{9, 9+20-45}
  CHECK(t.str() == "S_20^{9,9}");
  CHECK(deformation_target(60, 9).N == 24);
  CHECK_THROWS_AS(deformation_target(5, 5), Error);
}

TEST_CASE("random config determinism and validation") {
  auto a = random_config(4, 7, 123, 10);
  auto b = random_config(4, 7, 123, 10);
  CHECK(a.coords() == b.coords());
  CHECK_THROWS_AS(random_config(4, 7, 1, 0), Error);
}

TEST_CASE("configuration file round trips") {
  auto g = random_config(3, 5, 9, 12);
  auto back = config_from_json(config_to_json(g));
  CHECK(back.coords() == g.coords());

  auto csv = config_from_csv("1,0,0\n0,1,0\n0,0,1\n1/2,1/3,1\n");
  CHECK(csv.r() == 4);
  CHECK(csv.n() == 3);
  CHECK(csv.coords().at(0, 3) == Rat(1, 2));
  CHECK_THROWS_AS(config_from_csv("1,0\n1\n"), Error);
  CHECK_THROWS_AS(config_from_json("{\"n\": 3}"), Error);
}
