#ifndef SUPERMALCEV_OCTONION_HPP
#define SUPERMALCEV_OCTONION_HPP

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "rational.hpp"

namespace supermalcev::octonion {

// Unit ordering shared by both routes: 1, i, j, k, l, il, jl, kl, where
// i*j = k and e_q * l = e_q l (index q + 4).

/// Cayley-Dickson algebras by recursive doubling from the rationals:
///   (a, b)(c, d) = (ac - conj(d) b, d a + b conj(c)),  conj(a, b) = (conj(a), -b).
/// Length 8 gives the octonions.
class CayleyDickson {
 public:
  using Vec = std::vector<Rational>;

  static Vec conj(std::span<const Rational> x) {
    Vec out(x.begin(), x.end());
    if (out.size() == 1) return out;
    const auto h = out.size() / 2;
    auto a = conj(x.first(h));
    std::copy(a.begin(), a.end(), out.begin());
    for (std::size_t i = h; i < out.size(); ++i) out[i] = -out[i];
    return out;
  }

  static Vec multiply(std::span<const Rational> x, std::span<const Rational> y) {
    if (x.size() == 1) return {x[0] * y[0]};
    const auto h = x.size() / 2;
    const auto a = x.first(h), b = x.subspan(h);
    const auto c = y.first(h), d = y.subspan(h);
    const auto dc = conj(d);
    const auto cc = conj(c);
    auto ac = multiply(a, c);
    const auto db = multiply(dc, b);
    auto da = multiply(d, a);
    const auto bc = multiply(b, cc);
    Vec out(x.size());
    for (std::size_t i = 0; i < h; ++i) {
      out[i] = ac[i] - db[i];
      out[h + i] = da[i] + bc[i];
    }
    return out;
  }

  static Vec unit(std::size_t size, std::size_t i) {
    Vec v(size);
    v[i] = 1;
    return v;
  }
};

/// Signed unit: sign * e_index.
struct SignedUnit {
  int sign = 1;
  int index = 0;
  friend bool operator==(SignedUnit, SignedUnit) = default;
};

/// Octonion unit products from quaternion pairs x = a + b l with the rules
///   a (c l) = (c a) l,  (b l) c = (b conj(c)) l,  (b l)(d l) = -conj(d) b,
/// where quaternion units multiply by Hamilton's table (i^2 = j^2 = k^2 = ijk = -1).
class QuaternionPairs {
 public:
  static SignedUnit hamilton(int p, int q) {
    // rows: 1, i, j, k
    static constexpr SignedUnit table[4][4] = {
        {{1, 0}, {1, 1}, {1, 2}, {1, 3}},
        {{1, 1}, {-1, 0}, {1, 3}, {-1, 2}},
        {{1, 2}, {-1, 3}, {-1, 0}, {1, 1}},
        {{1, 3}, {1, 2}, {-1, 1}, {-1, 0}},
    };
    return table[p][q];
  }

  static int conj_sign(int q) { return q == 0 ? 1 : -1; }

  static SignedUnit unit_product(int p, int q) {
    const bool pl = p >= 4, ql = q >= 4;
    const int a = p % 4, c = q % 4;
    if (!pl && !ql) return hamilton(a, c);
    if (!pl && ql) {
      auto r = hamilton(c, a);
      return {r.sign, r.index + 4};
    }
    if (pl && !ql) {
      auto r = hamilton(a, c);
      return {r.sign * conj_sign(c), r.index + 4};
    }
    auto r = hamilton(c, a);
    return {-r.sign * conj_sign(c), r.index};
  }
};

/// Commutator structure constants [e_p, e_q] on the imaginary units 1..7,
/// reindexed to 0..6: out[p][q][k].
using CommutatorTable = std::array<std::array<std::array<Rational, 7>, 7>, 7>;

inline CommutatorTable commutators_cayley_dickson() {
  CommutatorTable t{};
  for (std::size_t p = 1; p < 8; ++p)
    for (std::size_t q = 1; q < 8; ++q) {
      const auto x = CayleyDickson::unit(8, p);
      const auto y = CayleyDickson::unit(8, q);
      const auto xy = CayleyDickson::multiply(x, y);
      const auto yx = CayleyDickson::multiply(y, x);
      for (std::size_t k = 1; k < 8; ++k) t[p - 1][q - 1][k - 1] = xy[k] - yx[k];
    }
  return t;
}

inline CommutatorTable commutators_quaternion_pairs() {
  CommutatorTable t{};
  for (int p = 1; p < 8; ++p)
    for (int q = 1; q < 8; ++q) {
      const auto xy = QuaternionPairs::unit_product(p, q);
      const auto yx = QuaternionPairs::unit_product(q, p);
      if (xy.index != 0) t[p - 1][q - 1][xy.index - 1] += xy.sign;
      if (yx.index != 0) t[p - 1][q - 1][yx.index - 1] -= yx.sign;
    }
  return t;
}

}  // namespace supermalcev::octonion

#endif  // SUPERMALCEV_OCTONION_HPP
