#include <catch_amalgamated.hpp>

#include <random>

#include <supermalcev/verifier.hpp>

#include "oracle.hpp"

using namespace supermalcev;
using octonion::CayleyDickson;
using octonion::QuaternionPairs;

namespace {

CayleyDickson::Vec random_octonion(std::mt19937_64& rng) {
  CayleyDickson::Vec v(8);
  for (auto& x : v) x = make_rational(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 3));
  return v;
}

Rational norm2(const CayleyDickson::Vec& v) {
  Rational s = 0;
  for (const auto& x : v) s += x * x;
  return s;
}

}  // namespace

TEST_CASE("Cayley-Dickson octonions") {
  const auto u = [](std::size_t i) { return CayleyDickson::unit(8, i); };
  CHECK(CayleyDickson::multiply(u(1), u(2)) == u(3));  // ij = k
  CHECK(CayleyDickson::multiply(u(2), u(1)) == CayleyDickson::Vec{0, 0, 0, -1, 0, 0, 0, 0});
  for (std::size_t i = 1; i < 8; ++i) {
    auto sq = CayleyDickson::multiply(u(i), u(i));
    CHECK(sq == CayleyDickson::Vec{-1, 0, 0, 0, 0, 0, 0, 0});
  }
  CHECK(CayleyDickson::multiply(u(1), u(4)) == u(5));  // i l = il

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto x = random_octonion(rng), y = random_octonion(rng);
    // Composition algebra: |xy|^2 = |x|^2 |y|^2.
    CHECK(norm2(CayleyDickson::multiply(x, y)) == norm2(x) * norm2(y));
    // Alternative: (xx)y = x(xy).
    CHECK(CayleyDickson::multiply(CayleyDickson::multiply(x, x), y) ==
          CayleyDickson::multiply(x, CayleyDickson::multiply(x, y)));
  }
  // Not associative: (ij)l != i(jl).
  CHECK(CayleyDickson::multiply(CayleyDickson::multiply(u(1), u(2)), u(4)) !=
        CayleyDickson::multiply(u(1), CayleyDickson::multiply(u(2), u(4))));
}

TEST_CASE("quaternion-pair products agree with Cayley-Dickson") {
  CHECK(QuaternionPairs::hamilton(1, 2) == octonion::SignedUnit{1, 3});
  CHECK(QuaternionPairs::hamilton(3, 3) == octonion::SignedUnit{-1, 0});
  for (int p = 0; p < 8; ++p)
    for (int q = 0; q < 8; ++q) {
      const auto su = QuaternionPairs::unit_product(p, q);
      CayleyDickson::Vec want(8);
      want[static_cast<std::size_t>(su.index)] = su.sign;
      CHECK(CayleyDickson::multiply(CayleyDickson::unit(8, p), CayleyDickson::unit(8, q)) == want);
    }
  CHECK(octonion::commutators_cayley_dickson() == octonion::commutators_quaternion_pairs());
}

TEST_CASE("catalog keys") {
  CHECK(catalog_keys().size() == 5);
  CHECK(catalog_instances().size() == 5);
  for (const auto& key : catalog_instances()) CHECK(catalog_algebra(key).key == key);
  CHECK_THROWS_AS(catalog_algebra("g2"), InputError);
  CHECK_THROWS_AS(catalog_algebra("abelian:x|1"), InputError);
  CHECK_THROWS_AS(catalog_algebra("abelian:0|0"), InputError);

  const auto ab = catalog_algebra("abelian:1|1").algebra;
  CHECK(ab.dim() == 2);
  CHECK(ab.parity(0) == Parity::even());
  CHECK(ab.parity(1) == Parity::odd());
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) CHECK(ab.product(i, j).is_zero());
  CHECK(catalog_algebra("abelian:2|3").algebra.dim() == 5);
}

TEST_CASE("catalog structure constants") {
  const auto sl2 = catalog_algebra("sl2").algebra;
  CHECK(sl2.product(0, 1) == Rational(2) * sl2.basis(1));
  CHECK(sl2.product(0, 2) == Rational(-2) * sl2.basis(2));
  CHECK(sl2.product(1, 2) == sl2.basis(0));
  CHECK(sl2.product(2, 1) == Rational(-1) * sl2.basis(0));

  const auto h = catalog_algebra("heisenberg3").algebra;
  CHECK(h.product(0, 1) == h.basis(2));
  CHECK(h.product(0, 2).is_zero());

  const auto osp = catalog_algebra("osp12").algebra;
  CHECK(osp.parities() == std::vector<Parity>{Parity::even(), Parity::even(), Parity::even(), Parity::odd(),
                                              Parity::odd()});
  CHECK(osp.product(3, 3) == Rational(2) * osp.basis(1));  // [p, p] = 2e
  CHECK(osp.product(3, 4) == osp.product(4, 3));           // odd-odd bracket is symmetric

  const auto m7 = catalog_algebra("m7").algebra;
  const auto table = octonion::commutators_cayley_dickson();
  for (std::size_t p = 0; p < 7; ++p)
    for (std::size_t q = 0; q < 7; ++q)
      for (std::size_t k = 0; k < 7; ++k) CHECK(m7.product(p, q)[k] == table[p][q][k]);
  CHECK(m7.product(0, 1) == Rational(2) * m7.basis(2));  // [i, j] = 2k
}

TEST_CASE("super-Jacobi holds on the Lie catalog entries") {
  for (const auto* key : {"heisenberg3", "sl2", "osp12"}) {
    const auto a = catalog_algebra(key).algebra;
    const oracle::Raw raw(a);
    for (std::size_t x = 0; x < a.dim(); ++x)
      for (std::size_t y = 0; y < a.dim(); ++y)
        for (std::size_t z = 0; z < a.dim(); ++z)
          CHECK(oracle::is_zero(oracle::hom_jacobian(raw, raw.unit(x), raw.unit(y), raw.unit(z), raw.parity[x],
                                                     raw.parity[y], raw.parity[z], false)));
  }
}

TEST_CASE("yau_twist") {
  const auto sl2 = catalog_algebra("sl2").algebra;

  SECTION("identity map") { CHECK(yau_twist(sl2, EvenMap::identity(3), "sl2") == sl2); }

  SECTION("abelian input stays abelian") {
    const auto ab = catalog_algebra("abelian:2|1").algebra;
    const EvenMap beta({{Rational(1), Rational(2), 0}, {Rational(3), Rational(-1), 0}, {0, 0, make_rational(5, 7)}});
    const auto t = yau_twist(ab, beta);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) CHECK(t.product(i, j).is_zero());
    CHECK(t.alpha() == beta);
  }

  SECTION("diagonal automorphism of sl2") {
    const auto t = yau_twist(sl2, EvenMap::diagonal({Rational(1), Rational(2), make_rational(1, 2)}));
    CHECK(t.multiply(t.basis(0), t.basis(1)) == Rational(4) * t.basis(1));
    CHECK(check_multiplicativity(t).empty());
    CHECK(identity_holds(t, IdentityId::hom_malcev));
    CHECK(identity_holds(t, IdentityId::s1));
    CHECK(identity_holds(t, IdentityId::hom_lie));
  }

  SECTION("non-morphism is rejected with a witness") {
    try {
      (void)yau_twist(sl2, EvenMap::diagonal({Rational(2), Rational(2), Rational(2)}));
      FAIL("expected MorphismError");
    } catch (const MorphismError& e) {
      CHECK(e.i() == 0);
      CHECK(e.j() == 1);
    }
  }

  SECTION("odd map is rejected") {
    const auto osp = catalog_algebra("osp12").algebra;
    auto m = EvenMap::identity(5).rows();
    m[0][3] = 1;
    CHECK_THROWS_AS(yau_twist(osp, EvenMap(m)), MorphismError);
  }

  SECTION("map must commute with alpha") {
    const auto h = catalog_algebra("heisenberg3").algebra;
    const auto once = yau_twist(h, EvenMap::diagonal({Rational(2), Rational(3), Rational(6)}));
    const EvenMap swap({{0, Rational(1), 0}, {Rational(1), 0, 0}, {0, 0, Rational(-1)}});
    CHECK_THROWS_AS(yau_twist(once, swap), MorphismError);
    CHECK_NOTHROW(yau_twist(once, EvenMap::diagonal({Rational(-1), Rational(1), Rational(-1)})));
  }

  SECTION("every catalog twist is multiplicative and even") {
    for (const auto& key : catalog_instances())
      for (const auto& m : catalog_morphisms(key)) {
        const auto t = yau_twist(catalog_algebra(key).algebra, m.map);
        INFO(key << " " << m.name);
        CHECK(check_multiplicativity(t).empty());
        CHECK(check_super_anticommutativity(t).empty());
        for (std::size_t i = 0; i < t.dim(); ++i)
          for (std::size_t j = 0; j < t.dim(); ++j)
            for (std::size_t k = 0; k < t.dim(); ++k)
              if (t.product(i, j)[k] != 0) CHECK(t.parity(k) == t.parity(i) + t.parity(j));
      }
  }
}

TEST_CASE("catalog morphisms start with the identity") {
  for (const auto& key : catalog_instances()) {
    const auto ms = catalog_morphisms(key);
    REQUIRE(ms.size() >= 2);
    CHECK(ms.front().map.is_identity());
  }
}

TEST_CASE("random_weighted_algebra") {
  WeightedGenSpec s;
  s.dim = 4;
  s.parity = {Parity::even(), Parity::even(), Parity::odd(), Parity::odd()};
  s.weight = {0, 1, 1, 2};
  s.lambda = 2;
  s.bound = 3;
  s.seed = 42;

  SECTION("deterministic in the seed") {
    CHECK(random_weighted_algebra(s) == random_weighted_algebra(s));
    auto other = s;
    other.seed = 43;
    CHECK_FALSE(random_weighted_algebra(s) == random_weighted_algebra(other));
  }

  SECTION("generator invariants") {
    const auto a = random_weighted_algebra(s);
    CHECK(check_multiplicativity(a).empty());
    CHECK(check_super_anticommutativity(a).empty());
    CHECK(a.alpha() == EvenMap::diagonal({Rational(1), Rational(2), Rational(2), Rational(4)}));
  }

  SECTION("lambda 1 and zero weights give alpha = Id") {
    auto t = s;
    t.lambda = 1;
    t.weight = {0, 0, 0, 0};
    CHECK(random_weighted_algebra(t).alpha_is_identity());
  }

  SECTION("invalid specs") {
    auto t = s;
    t.lambda = 0;
    CHECK_THROWS_AS(random_weighted_algebra(t), InputError);
    t = s;
    t.weight = {0, 1};
    CHECK_THROWS_AS(random_weighted_algebra(t), InputError);
    t = s;
    t.dim = 0;
    CHECK_THROWS_AS(random_weighted_algebra(t), InputError);
  }

  SECTION("invariants over 100 planned seeds") {
    ScanParams p;
    p.trials = 100;
    p.seed = 1000;
    p.bound = 3;
    p.min_weight = -1;
    p.lambda = make_rational(-3, 2);
    for (const auto& spec : plan_scan(p)) {
      const auto a = random_weighted_algebra(spec);
      CHECK(check_multiplicativity(a).empty());
      CHECK(check_super_anticommutativity(a).empty());
      for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
          for (std::size_t k = 0; k < a.dim(); ++k)
            if (a.product(i, j)[k] != 0) {
              CHECK(spec.weight[k] == spec.weight[i] + spec.weight[j]);
              CHECK(a.parity(k) == a.parity(i) + a.parity(j));
            }
    }
  }
}
