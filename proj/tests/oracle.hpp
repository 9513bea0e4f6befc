// Hand-expanded reference formulas for cross-checking the registry. These
// work on raw structure constants and spell every sign out explicitly.
#pragma once

#include <cstddef>
#include <vector>

#include <supermalcev/algebra.hpp>

namespace oracle {

using supermalcev::Rational;
using Vec = std::vector<Rational>;

struct Raw {
  std::size_t n = 0;
  std::vector<int> parity;
  std::vector<std::vector<Vec>> c;  // c[i][j][k]
  std::vector<Vec> alpha;           // alpha[k][i]

  explicit Raw(const supermalcev::SuperAlgebra& a) : n(a.dim()) {
    for (std::size_t i = 0; i < n; ++i) parity.push_back(a.parity(i).value());
    c.assign(n, std::vector<Vec>(n, Vec(n)));
    alpha.assign(n, Vec(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) c[i][j][k] = a.product(i, j)[k];
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i) alpha[k][i] = a.alpha().at(k, i);
  }

  Vec unit(std::size_t i) const {
    Vec v(n);
    v[i] = 1;
    return v;
  }

  Vec mul(const Vec& u, const Vec& v) const {
    Vec out(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) out[k] += u[i] * v[j] * c[i][j][k];
    return out;
  }

  Vec al(const Vec& u) const {
    Vec out(n);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i) out[k] += alpha[k][i] * u[i];
    return out;
  }
};

inline Vec add(const Vec& a, const Vec& b) {
  Vec out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

inline Vec scale(const Rational& s, const Vec& a) {
  Vec out = a;
  for (auto& x : out) x *= s;
  return out;
}

inline bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

inline Rational sgn(int exponent) { return exponent % 2 == 0 ? Rational(1) : Rational(-1); }

/// (xy)a(z) + (-1)^{x(y+z)} (yz)a(x) + (-1)^{z(x+y)} (zx)a(y), parities px, py, pz.
/// With twist = false, a = Id.
inline Vec hom_jacobian(const Raw& r, const Vec& x, const Vec& y, const Vec& z, int px, int py, int pz,
                        bool twist = true) {
  auto a = [&](const Vec& v) { return twist ? r.al(v) : v; };
  Vec out = r.mul(r.mul(x, y), a(z));
  out = add(out, scale(sgn(px * (py + pz)), r.mul(r.mul(y, z), a(x))));
  out = add(out, scale(sgn(pz * (px + py)), r.mul(r.mul(z, x), a(y))));
  return out;
}

/// Classical (all even) Jacobian.
inline Vec jacobian(const Raw& r, const Vec& x, const Vec& y, const Vec& z) {
  return hom_jacobian(r, x, y, z, 0, 0, 0, false);
}

/// J(x, y, xz) - J(x, y, z)x: the defining Malcev identity, classical case.
inline Vec malcev_identity(const Raw& r, const Vec& x, const Vec& y, const Vec& z) {
  return add(jacobian(r, x, y, r.mul(x, z)), scale(-1, r.mul(jacobian(r, x, y, z), x)));
}

/// 2 t J(x,y,z) - J(t,x,yz) - J(t,y,zx) - J(t,z,xy), classical case.
inline Vec malcev_four(const Raw& r, const Vec& t, const Vec& x, const Vec& y, const Vec& z) {
  Vec out = scale(2, r.mul(t, jacobian(r, x, y, z)));
  out = add(out, scale(-1, jacobian(r, t, x, r.mul(y, z))));
  out = add(out, scale(-1, jacobian(r, t, y, r.mul(z, x))));
  out = add(out, scale(-1, jacobian(r, t, z, r.mul(x, y))));
  return out;
}

/// Sagle: J(wx,y,z) - wJ(x,y,z) - J(w,y,z)x + 2J(yz,w,x), classical case.
inline Vec sagle(const Raw& r, const Vec& w, const Vec& x, const Vec& y, const Vec& z) {
  Vec out = jacobian(r, r.mul(w, x), y, z);
  out = add(out, scale(-1, r.mul(w, jacobian(r, x, y, z))));
  out = add(out, scale(-1, r.mul(jacobian(r, w, y, z), x)));
  out = add(out, scale(2, jacobian(r, r.mul(y, z), w, x)));
  return out;
}

}  // namespace oracle
