#ifndef SUPERMALCEV_CONSTRUCTIONS_HPP
#define SUPERMALCEV_CONSTRUCTIONS_HPP

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "engine.hpp"
#include "octonion.hpp"

namespace supermalcev {

/// beta is not an algebra morphism (or does not commute with alpha); carries
/// the first failing basis pair.
class MorphismError : public InputError {
 public:
  MorphismError(const std::string& what, std::size_t i, std::size_t j) : InputError(what), i_(i), j_(j) {}
  std::size_t i() const { return i_; }
  std::size_t j() const { return j_; }

 private:
  std::size_t i_, j_;
};

/// Yau twist along an even morphism beta commuting with alpha:
/// (M, mu, alpha) -> (M, beta o mu, beta o alpha). With alpha = Id this is
/// (M, beta o mu, beta).
inline SuperAlgebra yau_twist(const SuperAlgebra& a, const EvenMap& beta, std::string name = {}) {
  if (beta.dim() != a.dim()) throw InputError("twist map has wrong dimension");
  if (auto bad = beta.evenness_violation(a.parities()))
    throw MorphismError("twist map is not even: entry (" + std::to_string(bad->first) + ", " +
                            std::to_string(bad->second) + ") mixes parities",
                        bad->first, bad->second);
  const auto n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto lhs = beta.apply(a.product(i, j));
      const auto rhs = a.multiply(beta.apply(a.basis(i)), beta.apply(a.basis(j)));
      if (lhs != rhs)
        throw MorphismError("twist map is not a morphism at pair (" + std::to_string(i) + ", " +
                                std::to_string(j) + ")",
                            i, j);
    }
  if (beta.compose(a.alpha()) != a.alpha().compose(beta))
    throw MorphismError("twist map does not commute with alpha", 0, 0);

  SuperAlgebra::Table t(n, std::vector<Element>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = beta.apply(a.product(i, j));
  return SuperAlgebra(name.empty() ? a.name() + "~twist" : std::move(name), a.parities(), std::move(t),
                      beta.compose(a.alpha()));
}

enum class ExpectedClass { hom_lie, hom_malcev_not_hom_lie, malcev_not_lie, not_hom_malcev };

inline std::string_view expected_class_name(ExpectedClass c) {
  switch (c) {
    case ExpectedClass::hom_lie:
      return "hom_lie";
    case ExpectedClass::hom_malcev_not_hom_lie:
      return "hom_malcev_not_hom_lie";
    case ExpectedClass::malcev_not_lie:
      return "malcev_not_lie";
    case ExpectedClass::not_hom_malcev:
      return "not_hom_malcev";
  }
  return "not_hom_malcev";
}

struct CatalogEntry {
  std::string key;
  SuperAlgebra algebra;
  ExpectedClass expected_class;
  std::string provenance;
};

/// A named even morphism of a catalog algebra.
struct CatalogMorphism {
  std::string name;
  EvenMap map;
};

namespace detail {

/// Builds a table from bracket rules {i, j, k, c}: e_i e_j += c e_k, and
/// fills e_j e_i = -(-1)^{p_i p_j} e_i e_j.
struct Bracket {
  std::size_t i, j, k;
  Rational c;
};

inline SuperAlgebra::Table skew_table(const std::vector<Parity>& parity, const std::vector<Bracket>& rules) {
  const auto n = parity.size();
  SuperAlgebra::Table t(n, std::vector<Element>(n, Element(n)));
  for (const auto& r : rules) {
    t[r.i][r.j][r.k] += r.c;
    if (r.i != r.j) {
      const Rational s = (parity[r.i] * parity[r.j]).is_odd() ? 1 : -1;
      t[r.j][r.i][r.k] += s * r.c;
    }
  }
  return t;
}

inline std::vector<Parity> parities(std::initializer_list<int> bits) {
  std::vector<Parity> out;
  for (int b : bits) out.emplace_back(b);
  return out;
}

/// Super-Jacobi on all basis triples with alpha = Id.
inline void require_super_jacobi(const SuperAlgebra& a) {
  if (!check_super_anticommutativity(a).empty())
    throw std::logic_error("catalog gate: " + a.name() + " is not super anticommutative");
  const auto n = a.dim();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (!super_jacobian(a, a.basis(x), a.basis(y), a.basis(z)).is_zero())
          throw std::logic_error("catalog gate: super-Jacobi fails for " + a.name() + " at (" +
                                 std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) + ")");
}

inline SuperAlgebra make_heisenberg3() {
  auto p = parities({0, 0, 0});
  return SuperAlgebra("heisenberg3", p, skew_table(p, {{0, 1, 2, 1}}), EvenMap::identity(3));
}

// basis h, e, f
inline SuperAlgebra make_sl2() {
  auto p = parities({0, 0, 0});
  return SuperAlgebra("sl2", p, skew_table(p, {{0, 1, 1, 2}, {0, 2, 2, -2}, {1, 2, 0, 1}}), EvenMap::identity(3));
}

// basis h, e, f | p, m (odd p raises h-weight by 1, m lowers it)
inline SuperAlgebra make_osp12() {
  auto par = parities({0, 0, 0, 1, 1});
  const std::vector<Bracket> rules = {
      {0, 1, 1, 2}, {0, 2, 2, -2}, {1, 2, 0, 1},   // sl2
      {0, 3, 3, 1}, {0, 4, 4, -1},                 // [h,p] = p, [h,m] = -m
      {1, 4, 3, -1}, {2, 3, 4, -1},                // [e,m] = -p, [f,p] = -m
      {3, 3, 1, 2}, {4, 4, 2, -2}, {3, 4, 0, 1},   // [p,p] = 2e, [m,m] = -2f, [p,m] = h
  };
  return SuperAlgebra("osp12", par, skew_table(par, rules), EvenMap::identity(5));
}

/// Commutator algebra of the imaginary octonions, constants from the
/// Cayley-Dickson oracle.
inline SuperAlgebra make_m7() {
  const auto table = octonion::commutators_cayley_dickson();
  SuperAlgebra::Table t(7, std::vector<Element>(7, Element(7)));
  for (std::size_t p = 0; p < 7; ++p)
    for (std::size_t q = 0; q < 7; ++q)
      for (std::size_t k = 0; k < 7; ++k) t[p][q][k] = table[p][q][k];
  return SuperAlgebra("m7", std::vector<Parity>(7, Parity::even()), std::move(t), EvenMap::identity(7));
}

inline std::pair<int, int> parse_abelian_key(std::string_view key) {
  auto rest = key.substr(std::string_view("abelian:").size());
  const auto bar = rest.find('|');
  if (bar == std::string_view::npos) throw InputError("abelian key must look like abelian:<even>|<odd>");
  auto num = [&](std::string_view s) {
    if (s.empty() || s.size() > 2) throw InputError("bad abelian dimension in \"" + std::string(key) + "\"");
    int v = 0;
    for (char c : s) {
      if (c < '0' || c > '9') throw InputError("bad abelian dimension in \"" + std::string(key) + "\"");
      v = v * 10 + (c - '0');
    }
    return v;
  };
  const int d0 = num(rest.substr(0, bar));
  const int d1 = num(rest.substr(bar + 1));
  if (d0 + d1 == 0) throw InputError("abelian algebra must have positive dimension");
  return {d0, d1};
}

inline EvenMap perm_map(const std::vector<std::size_t>& image) {
  auto m = EvenMap::zero(image.size());
  std::vector<std::vector<Rational>> rows = m.rows();
  for (std::size_t i = 0; i < image.size(); ++i) rows[image[i]][i] = 1;
  return EvenMap(std::move(rows));
}

inline std::vector<Rational> rationals(std::initializer_list<const char*> xs) {
  std::vector<Rational> out;
  for (auto x : xs) out.push_back(parse_rational(x));
  return out;
}

}  // namespace detail

/// Catalog keys as listed by the CLI; "abelian:<even>|<odd>" is a family.
inline const std::vector<std::string>& catalog_keys() {
  static const std::vector<std::string> keys = {"abelian:<even>|<odd>", "heisenberg3", "sl2", "osp12", "m7"};
  return keys;
}

/// Concrete keys used by tests and scans (one instance of the abelian family).
inline const std::vector<std::string>& catalog_instances() {
  static const std::vector<std::string> keys = {"abelian:1|1", "heisenberg3", "sl2", "osp12", "m7"};
  return keys;
}

/// Looks up and gate-checks a catalog algebra. Throws InputError on unknown
/// keys and std::logic_error if a construction fails its verification gate.
inline CatalogEntry catalog_algebra(std::string_view key) {
  if (key.starts_with("abelian:")) {
    const auto [d0, d1] = detail::parse_abelian_key(key);
    std::vector<Parity> p(static_cast<std::size_t>(d0), Parity::even());
    p.insert(p.end(), static_cast<std::size_t>(d1), Parity::odd());
    return {std::string(key), SuperAlgebra::abelian(std::string(key), std::move(p)), ExpectedClass::hom_lie,
            "zero product"};
  }
  if (key == "heisenberg3") {
    static const SuperAlgebra a = [] {
      auto h = detail::make_heisenberg3();
      detail::require_super_jacobi(h);
      return h;
    }();
    return {"heisenberg3", a, ExpectedClass::hom_lie, "[x,y] = z; super-Jacobi verified on all basis triples"};
  }
  if (key == "sl2") {
    static const SuperAlgebra a = [] {
      auto s = detail::make_sl2();
      detail::require_super_jacobi(s);
      return s;
    }();
    return {"sl2", a, ExpectedClass::hom_lie,
            "[h,e] = 2e, [h,f] = -2f, [e,f] = h; super-Jacobi verified on all basis triples"};
  }
  if (key == "osp12") {
    static const SuperAlgebra a = [] {
      auto s = detail::make_osp12();
      detail::require_super_jacobi(s);
      return s;
    }();
    return {"osp12", a, ExpectedClass::hom_lie, "osp(1|2), basis h,e,f|p,m; super-Jacobi verified on all basis triples"};
  }
  if (key == "m7") {
    static const SuperAlgebra a = [] {
      auto m = detail::make_m7();
      if (!check_super_anticommutativity(m).empty()) throw std::logic_error("catalog gate: m7 not anticommutative");
      if (!identity_holds(m, IdentityId::malcev_super))
        throw std::logic_error("catalog gate: m7 fails the Malcev super-identity");
      if (identity_holds(m, IdentityId::hom_lie)) throw std::logic_error("catalog gate: m7 satisfies Jacobi");
      return m;
    }();
    return {"m7", a, ExpectedClass::malcev_not_lie,
            "commutator algebra of imaginary octonions (Cayley-Dickson oracle); Malcev identity verified on all "
            "basis 4-tuples, Jacobi fails"};
  }
  throw InputError("unknown catalog key \"" + std::string(key) + "\"");
}

/// Even automorphisms of a catalog algebra used for twisting; the first is Id.
inline std::vector<CatalogMorphism> catalog_morphisms(std::string_view key) {
  using detail::rationals;
  const auto entry = catalog_algebra(key);
  const auto n = entry.algebra.dim();
  std::vector<CatalogMorphism> out{{"identity", EvenMap::identity(n)}};
  if (key.starts_with("abelian:")) {
    std::vector<Rational> d;
    for (std::size_t i = 0; i < n; ++i) d.emplace_back(static_cast<long>(i + 2));
    out.push_back({"diag:2..", EvenMap::diagonal(d)});
  } else if (key == "heisenberg3") {
    out.push_back({"diag:2,3,6", EvenMap::diagonal(rationals({"2", "3", "6"}))});
    out.push_back({"diag:-1,1,-1", EvenMap::diagonal(rationals({"-1", "1", "-1"}))});
  } else if (key == "sl2") {
    out.push_back({"diag:1,2,1/2", EvenMap::diagonal(rationals({"1", "2", "1/2"}))});
    out.push_back({"diag:1,3,1/3", EvenMap::diagonal(rationals({"1", "3", "1/3"}))});
    // h -> -h, e -> -f, f -> -e
    out.push_back({"chevalley", EvenMap({{Rational(-1), 0, 0}, {0, 0, Rational(-1)}, {0, Rational(-1), 0}})});
  } else if (key == "osp12") {
    out.push_back({"diag:1,4,1/4,2,1/2", EvenMap::diagonal(rationals({"1", "4", "1/4", "2", "1/2"}))});
    out.push_back({"parity", EvenMap::diagonal(rationals({"1", "1", "1", "-1", "-1"}))});
  } else if (key == "m7") {
    // (a, b) -> (a, -b) on H + Hl
    out.push_back({"conj-l", EvenMap::diagonal(rationals({"1", "1", "1", "-1", "-1", "-1", "-1"}))});
    // i -> j -> k -> i on both halves
    out.push_back({"cycle-ijk", detail::perm_map({1, 2, 0, 3, 5, 6, 4})});
  }
  return out;
}

/// Input to the weight-graded generator. Products are weight-additive and
/// alpha = diag(lambda^weight), so alpha is multiplicative by construction.
struct WeightedGenSpec {
  std::size_t dim = 0;
  std::vector<Parity> parity;
  std::vector<int> weight;
  Rational lambda = 1;
  int bound = 2;
  std::uint64_t seed = 0;
};

namespace detail {

inline Rational power(const Rational& base, int e) {
  Rational r = 1;
  const Rational b = e >= 0 ? base : Rational(1 / base);
  for (int i = 0; i < (e >= 0 ? e : -e); ++i) r *= b;
  return r;
}

inline int draw(std::mt19937_64& rng, int bound) {
  const auto span = static_cast<std::uint64_t>(2 * bound + 1);
  return static_cast<int>(rng() % span) - bound;
}

}  // namespace detail

/// Seeded super-anticommutative algebra with multiplicative alpha. For i < j
/// each allowed e_i e_j coefficient is uniform in [-bound, bound] and e_j e_i
/// is its super-antisymmetric image; odd diagonal products are free, even ones 0.
inline SuperAlgebra random_weighted_algebra(const WeightedGenSpec& spec) {
  const auto n = spec.dim;
  if (n == 0) throw InputError("generator: dimension must be positive");
  if (spec.parity.size() != n || spec.weight.size() != n)
    throw InputError("generator: parity and weight vectors must have length dim");
  if (spec.lambda == 0) throw InputError("generator: lambda must be nonzero");
  if (spec.bound < 0) throw InputError("generator: coefficient bound must be nonnegative");

  std::mt19937_64 rng(spec.seed);
  SuperAlgebra::Table t(n, std::vector<Element>(n, Element(n)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      if (i == j && !spec.parity[i].is_odd()) continue;
      const Parity target = spec.parity[i] + spec.parity[j];
      const int target_weight = spec.weight[i] + spec.weight[j];
      for (std::size_t k = 0; k < n; ++k) {
        if (spec.parity[k] != target || spec.weight[k] != target_weight) continue;
        const Rational c = detail::draw(rng, spec.bound);
        t[i][j][k] = c;
        if (i != j) t[j][i][k] = (spec.parity[i] * spec.parity[j]).is_odd() ? c : Rational(-c);
      }
    }
  std::vector<Rational> diag;
  for (auto w : spec.weight) diag.push_back(detail::power(spec.lambda, w));
  return SuperAlgebra("random:seed=" + std::to_string(spec.seed), spec.parity, std::move(t),
                      EvenMap::diagonal(diag));
}

}  // namespace supermalcev

#endif  // SUPERMALCEV_CONSTRUCTIONS_HPP
