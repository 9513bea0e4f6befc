#include <catch_amalgamated.hpp>

#include <supermalcev/verifier.hpp>

#include "oracle.hpp"

using namespace supermalcev;
using octonion::CayleyDickson;

namespace {

SuperAlgebra sl2_twisted() {
  return yau_twist(catalog_algebra("sl2").algebra,
                   EvenMap::diagonal({Rational(1), Rational(2), make_rational(1, 2)}), "sl2~diag");
}

SuperAlgebra seeded(std::size_t dim, std::vector<int> parity, std::vector<int> weight, int lambda, std::uint64_t seed) {
  WeightedGenSpec s;
  s.dim = dim;
  for (int p : parity) s.parity.emplace_back(p);
  s.weight = std::move(weight);
  s.lambda = lambda;
  s.seed = seed;
  return random_weighted_algebra(s);
}

}  // namespace

TEST_CASE("abelian algebras satisfy everything") {
  const auto a = catalog_algebra("abelian:1|1").algebra;
  for (const auto& d : identity_registry()) {
    const auto r = check_identity(a, d);
    CHECK(r.holds());
    CHECK(r.tuples_checked == (d.arity() == 3 ? 8u : 16u));
  }
  CHECK(g_map(a, a.basis(0), a.basis(1), a.basis(1), a.basis(0)).is_zero());
}

TEST_CASE("Jacobi on sl2") {
  const auto a = catalog_algebra("sl2").algebra;
  const auto h = a.basis(0), e = a.basis(1), f = a.basis(2);
  CHECK(hom_super_jacobian(a, e, f, h).is_zero());
  CHECK(super_jacobian(a, h, e, f).is_zero());
}

TEST_CASE("with alpha = Id the two Jacobians coincide") {
  const auto a = seeded(4, {0, 1, 1, 0}, {0, 0, 0, 0}, 1, 31);
  REQUIRE(a.alpha_is_identity());
  for (std::size_t x = 0; x < 4; ++x)
    for (std::size_t y = 0; y < 4; ++y)
      for (std::size_t z = 0; z < 4; ++z)
        CHECK(hom_super_jacobian(a, a.basis(x), a.basis(y), a.basis(z)) ==
              super_jacobian(a, a.basis(x), a.basis(y), a.basis(z)));
}

TEST_CASE("inhomogeneous and malformed arguments are rejected") {
  const auto osp = catalog_algebra("osp12").algebra;
  const auto mixed = osp.basis(0) + osp.basis(3);
  CHECK_THROWS_AS(hom_super_jacobian(osp, mixed, osp.basis(1), osp.basis(2)), NotHomogeneous);
  CHECK_THROWS_AS(g_map(osp, osp.basis(1), mixed, osp.basis(1), osp.basis(2)), NotHomogeneous);
  CHECK(hom_super_jacobian(osp, osp.zero(), osp.basis(3), osp.basis(4)).is_zero());

  const Element three[] = {osp.basis(0), osp.basis(1), osp.basis(2)};
  CHECK_THROWS_AS(evaluate_defect(osp, identity(IdentityId::s1), three), InputError);
  const Element short_dim[] = {Element(2), Element(2), Element(2)};
  CHECK_THROWS_AS(evaluate_defect(osp, identity(IdentityId::hom_lie), short_dim), InputError);
}

TEST_CASE("m7 Jacobian is six times the octonion associator") {
  // Oracle: for an alternative algebra A, the commutator algebra has
  // J(x, y, z) = 6 (x, y, z) with (x, y, z) = (xy)z - x(yz).
  const auto m7 = catalog_algebra("m7").algebra;
  bool some_nonzero = false;
  for (std::size_t p = 1; p < 8; ++p)
    for (std::size_t q = 1; q < 8; ++q)
      for (std::size_t r = 1; r < 8; ++r) {
        const auto x = CayleyDickson::unit(8, p), y = CayleyDickson::unit(8, q), z = CayleyDickson::unit(8, r);
        const auto left = CayleyDickson::multiply(CayleyDickson::multiply(x, y), z);
        const auto right = CayleyDickson::multiply(x, CayleyDickson::multiply(y, z));
        REQUIRE(left[0] == right[0]);
        const auto jac = hom_super_jacobian(m7, m7.basis(p - 1), m7.basis(q - 1), m7.basis(r - 1));
        for (std::size_t k = 1; k < 8; ++k) REQUIRE(jac[k - 1] == 6 * (left[k] - right[k]));
        some_nonzero = some_nonzero || !jac.is_zero();
      }
  CHECK(some_nonzero);
}

TEST_CASE("g_map") {
  SECTION("vanishes on Hom-Lie algebras") {
    const auto a = sl2_twisted();
    for (std::size_t idx = 0; idx < 81; ++idx) {
      const auto t = detail::decode_tuple(idx, 3, 4);
      CHECK(g_map(a, a.basis(t[0]), a.basis(t[1]), a.basis(t[2]), a.basis(t[3])).is_zero());
    }
  }
  SECTION("on m7 equals 2[J(wx,y,z) + J(yz,w,x)]") {
    const auto m7 = catalog_algebra("m7").algebra;
    std::size_t nonzero = 0;
    for (std::size_t idx = 0; idx < 2401; ++idx) {
      const auto t = detail::decode_tuple(idx, 7, 4);
      const auto w = m7.basis(t[0]), x = m7.basis(t[1]), y = m7.basis(t[2]), z = m7.basis(t[3]);
      const auto g = g_map(m7, w, x, y, z);
      const auto rhs = Rational(2) * (hom_super_jacobian(m7, m7.multiply(w, x), y, z) +
                                      hom_super_jacobian(m7, m7.multiply(y, z), w, x));
      REQUIRE(g == rhs);
      if (!g.is_zero()) ++nonzero;
    }
    CHECK(nonzero > 0);
  }
}

TEST_CASE("check_identity on catalog algebras") {
  const auto m7 = catalog_algebra("m7").algebra;
  const auto lie = check_identity(m7, identity(IdentityId::hom_lie));
  CHECK_FALSE(lie.holds());
  CHECK(lie.tuples_checked == 343);
  CHECK(lie.total_violations == 168);
  REQUIRE_FALSE(lie.violations.empty());
  CHECK(lie.violations.front().tuple == std::vector<std::size_t>{0, 1, 3});

  const auto malcev = check_identity(m7, identity(IdentityId::malcev_super));
  CHECK(malcev.holds());
  CHECK(malcev.tuples_checked == 2401);

  CHECK(check_identity(sl2_twisted(), identity(IdentityId::s5)).holds());
  CHECK(check_identity(sl2_twisted(), identity(IdentityId::s1)).holds());
}

TEST_CASE("violation lists are sorted, truncated, and independent of jobs") {
  const auto a = random_weighted_algebra(coverage_fixture());
  const auto& id = identity(IdentityId::hom_malcev);
  const auto base = check_identity(a, id, {.max_violations = 5, .jobs = 1});
  CHECK(base.total_violations == 18);
  REQUIRE(base.violations.size() == 5);
  for (std::size_t i = 1; i < base.violations.size(); ++i)
    CHECK(base.violations[i - 1].tuple < base.violations[i].tuple);
  for (unsigned jobs : {2u, 3u, 7u, 200u}) {
    const auto r = check_identity(a, id, {.max_violations = 5, .jobs = jobs});
    CHECK(r.total_violations == base.total_violations);
    REQUIRE(r.violations.size() == base.violations.size());
    for (std::size_t i = 0; i < r.violations.size(); ++i) {
      CHECK(r.violations[i].tuple == base.violations[i].tuple);
      CHECK(r.violations[i].defect == base.violations[i].defect);
    }
  }
  CHECK(check_identity(a, id, {.max_violations = 0}).violations.empty());
  CHECK(identity_holds(a, id) == base.holds());
}

TEST_CASE("seeded non-Malcev algebra has a recorded violation") {
  // Fixture: dim 3, all even, alpha = Id, seed 42. The defect value comes from
  // the hand expansion 2tJ(x,y,z) - J(t,x,yz) - J(t,y,zx) - J(t,z,xy).
  const auto a = random_weighted_algebra(coverage_fixture());
  const std::size_t t[] = {0, 0, 1, 2};
  const auto d = evaluate_defect_at(a, identity(IdentityId::hom_malcev), t);
  CHECK(d == Element(std::vector<Rational>{-5, 9, -9}));

  const oracle::Raw raw(a);
  CHECK(d.coeffs() == oracle::malcev_four(raw, raw.unit(0), raw.unit(0), raw.unit(1), raw.unit(2)));
}

TEST_CASE("with alpha = Id, HOM_MALCEV and MALCEV_SUPER defects coincide") {
  ScanParams p;
  p.trials = 20;
  p.seed = 500;
  p.lambda = Rational(1);
  for (const auto& spec : plan_scan(p)) {
    const auto a = random_weighted_algebra(spec);
    REQUIRE(a.alpha_is_identity());
    const auto n = a.dim();
    for (std::size_t idx = 0; idx < n * n * n * n; ++idx) {
      const auto t = detail::decode_tuple(idx, n, 4);
      REQUIRE(evaluate_defect_at(a, identity(IdentityId::hom_malcev), t) ==
              evaluate_defect_at(a, identity(IdentityId::malcev_super), t));
    }
  }
}

TEST_CASE("Hom-Lie implies Hom-Malcev") {
  std::size_t lie_seen = 0;
  ScanParams p;
  p.trials = 120;
  p.seed = 900;
  for (const auto& spec : plan_scan(p)) {
    const auto a = random_weighted_algebra(spec);
    if (!identity_holds(a, IdentityId::hom_lie)) continue;
    ++lie_seen;
    CHECK(identity_holds(a, IdentityId::hom_malcev));
  }
  for (const auto& key : catalog_instances())
    for (const auto& m : catalog_morphisms(key)) {
      const auto a = yau_twist(catalog_algebra(key).algebra, m.map);
      if (identity_holds(a, IdentityId::hom_lie)) {
        ++lie_seen;
        CHECK(identity_holds(a, IdentityId::hom_malcev));
      }
    }
  CHECK(lie_seen > 10);
}
