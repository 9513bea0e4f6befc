#ifndef SUPERMALCEV_IDENTITIES_HPP
#define SUPERMALCEV_IDENTITIES_HPP

#include <algorithm>
#include <array>
#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "formula.hpp"

namespace supermalcev {

// Building blocks. Each row is {coefficient, sign exponent, expression};
// A(u) is alpha(u), A2(u) is alpha^2(u), juxtaposition is the product.

/// Hom-super-Jacobian (xy)A(z) + (-1)^{x(y+z)} (yz)A(x) + (-1)^{z(x+y)} (zx)A(y).
inline const Formula& hom_jacobian_formula() {
  static const Formula f = make_formula("HJ", "xyz",
                                        {
                                            {1, "", "(xy)A(z)"},
                                            {1, "x(y+z)", "(yz)A(x)"},
                                            {1, "z(x+y)", "(zx)A(y)"},
                                        },
                                        nullptr);
  return f;
}

/// Super-Jacobian: the same cyclic sum without alpha.
inline const Formula& jacobian_formula() {
  static const Formula f = make_formula("J", "xyz",
                                        {
                                            {1, "", "(xy)z"},
                                            {1, "x(y+z)", "(yz)x"},
                                            {1, "z(x+y)", "(zx)y"},
                                        },
                                        nullptr);
  return f;
}

inline const Formula* lookup_jacobians(std::string_view name) {
  if (name == "HJ") return &hom_jacobian_formula();
  if (name == "J") return &jacobian_formula();
  return nullptr;
}

/// G(w,x,y,z) = HJ(wx,A(y),A(z)) - (-1)^{xw} A2(x)HJ(w,y,z) - (-1)^{w(x+y+z)} HJ(x,y,z)A2(w).
inline const Formula& g_formula() {
  static const Formula f = make_formula("G", "wxyz",
                                        {
                                            {1, "", "HJ(wx, A(y), A(z))"},
                                            {-1, "xw", "A2(x)HJ(w,y,z)"},
                                            {-1, "w(x+y+z)", "HJ(x,y,z)A2(w)"},
                                        },
                                        lookup_jacobians);
  return f;
}

inline const Formula* lookup_builtin(std::string_view name) {
  if (name == "G") return &g_formula();
  return lookup_jacobians(name);
}

enum class IdentityId {
  malcev_super,
  hom_malcev,
  ident_c,
  s1,
  hom_lie,
  l25_i_a,
  l25_i_b,
  l25_i_c,
  l25_ii,
  l26_1,
  l26_2,
  l26_3,
  l26_4,
  l26_5,
  s3,
  s4,
  s5,
  s6,
};

/// What an identity assumes of the algebra. Reported, never enforced by check_identity.
enum class Premise { none, anticommutative_multiplicative, hom_malcev };

inline std::string_view premise_name(Premise p) {
  switch (p) {
    case Premise::none:
      return "none";
    case Premise::anticommutative_multiplicative:
      return "anticommutative+multiplicative";
    case Premise::hom_malcev:
      return "hom_malcev";
  }
  return "none";
}

/// Registry entry: the defect functional is `formula`; zero means the
/// identity instance holds.
struct IdentityDescriptor {
  IdentityId id;
  std::string name;
  Premise premise;
  Formula formula;

  int arity() const { return formula.arity(); }
};

namespace detail {

inline IdentityDescriptor entry(IdentityId id, std::string name, Premise premise, std::string slots,
                                std::initializer_list<TermSpec> rows) {
  auto f = make_formula(name, std::move(slots), rows, lookup_builtin);
  return IdentityDescriptor{id, std::move(name), premise, std::move(f)};
}

inline std::vector<IdentityDescriptor> build_registry() {
  using P = Premise;
  using I = IdentityId;
  std::vector<IdentityDescriptor> r;

  r.push_back(entry(I::malcev_super, "MALCEV_SUPER", P::anticommutative_multiplicative, "txyz",
                    {
                        {2, "", "tJ(x,y,z)"},
                        {-1, "", "J(t,x,yz)"},
                        {-1, "x(y+z)", "J(t,y,zx)"},
                        {-1, "z(x+y)", "J(t,z,xy)"},
                    }));
  r.push_back(entry(I::hom_malcev, "HOM_MALCEV", P::anticommutative_multiplicative, "txyz",
                    {
                        {2, "", "A2(t)HJ(x,y,z)"},
                        {-1, "", "HJ(A(t),A(x),yz)"},
                        {-1, "x(y+z)", "HJ(A(t),A(y),zx)"},
                        {-1, "z(x+y)", "HJ(A(t),A(z),xy)"},
                    }));
  r.push_back(entry(I::ident_c, "IDENT_C", P::anticommutative_multiplicative, "wxyz",
                    {
                        {1, "", "HJ(A(y),A(z),wx)"},
                        {1, "yz+w(y+z)", "HJ(A(w),A(z),yx)"},
                        {-1, "wx", "HJ(y,z,x)A2(w)"},
                        {-1, "y(z+w+x)+zw", "HJ(w,z,x)A2(y)"},
                    }));
  r.push_back(entry(I::s1, "S1", P::anticommutative_multiplicative, "wxyz",
                    {
                        {1, "", "HJ(wx,A(y),A(z))"},
                        {-1, "", "A2(w)HJ(x,y,z)"},
                        {-1, "x(y+z)", "HJ(w,y,z)A2(x)"},
                        {2, "(y+z)(x+w)", "HJ(yz,A(w),A(x))"},
                    }));
  r.push_back(entry(I::hom_lie, "HOM_LIE", P::anticommutative_multiplicative, "xyz",
                    {
                        {1, "", "HJ(x,y,z)"},
                    }));
  r.push_back(entry(I::l25_i_a, "L25_I_A", P::anticommutative_multiplicative, "xyz",
                    {
                        {1, "", "HJ(x,y,z)"},
                        {1, "xy", "HJ(y,x,z)"},
                    }));
  r.push_back(entry(I::l25_i_b, "L25_I_B", P::anticommutative_multiplicative, "xyz",
                    {
                        {1, "", "HJ(x,y,z)"},
                        {1, "yz", "HJ(x,z,y)"},
                    }));
  r.push_back(entry(I::l25_i_c, "L25_I_C", P::anticommutative_multiplicative, "xyz",
                    {
                        {1, "", "HJ(x,y,z)"},
                        {1, "x(y+z)+yz", "HJ(z,y,x)"},
                    }));
  r.push_back(entry(I::l25_ii, "L25_II", P::anticommutative_multiplicative, "wxyz",
                    {
                        {1, "", "A2(w)HJ(x,y,z)"},
                        {-1, "w(x+y+z)", "A2(x)HJ(y,z,w)"},
                        {1, "(y+z)(w+x)", "A2(y)HJ(z,w,x)"},
                        {-1, "z(x+y+w)", "A2(z)HJ(w,x,y)"},
                        {-1, "", "HJ(wx,A(y),A(z))"},
                        {-1, "(y+z)(x+w)", "HJ(yz,A(w),A(x))"},
                        {-1, "x(y+z)", "HJ(wy,A(z),A(x))"},
                        {-1, "z(x+y)+w(x+z)", "HJ(zx,A(w),A(y))"},
                        {1, "z(x+y+w)", "HJ(zw,A(x),A(y))"},
                        {1, "w(x+y+z)", "HJ(xy,A(z),A(w))"},
                    }));
  r.push_back(entry(I::l26_1, "L26_1", P::hom_malcev, "wxyz", {{1, "", "G(w,x,y,z)"}, {1, "xw", "G(x,w,y,z)"}}));
  r.push_back(entry(I::l26_2, "L26_2", P::hom_malcev, "wxyz", {{1, "", "G(w,x,y,z)"}, {1, "yz", "G(w,x,z,y)"}}));
  r.push_back(entry(I::l26_3, "L26_3", P::hom_malcev, "wxyz", {{1, "", "G(w,x,y,z)"}, {1, "xy", "G(w,y,x,z)"}}));
  r.push_back(entry(I::l26_4, "L26_4", P::hom_malcev, "wxyz",
                    {{1, "", "G(w,x,y,z)"}, {1, "w(x+y)+xy", "G(y,x,w,z)"}}));
  r.push_back(entry(I::l26_5, "L26_5", P::hom_malcev, "wxyz",
                    {{1, "", "G(w,x,y,z)"}, {1, "w(x+y+z)+z(x+y)", "G(z,x,y,w)"}}));
  r.push_back(entry(I::s3, "S3", P::hom_malcev, "wxyz",
                    {
                        {1, "", "HJ(wx,A(y),A(z))"},
                        {1, "w(x+y+z)", "HJ(xy,A(z),A(w))"},
                        {1, "(y+z)(x+w)", "HJ(yz,A(w),A(x))"},
                        {1, "z(x+y+w)", "HJ(zw,A(x),A(y))"},
                    }));
  r.push_back(entry(I::s4, "S4", P::hom_malcev, "wxyz",
                    {
                        {2, "", "G(w,x,y,z)"},
                        {-1, "", "A2(w)HJ(x,y,z)"},
                        {1, "xw", "A2(x)HJ(w,y,z)"},
                        {-1, "(y+z)(x+w)", "A2(y)HJ(z,w,x)"},
                        {1, "z(x+y+w)", "A2(z)HJ(w,x,y)"},
                        {-1, "", "HJ(wx,A(y),A(z))"},
                        {-1, "(x+w)(y+z)", "HJ(yz,A(w),A(x))"},
                    }));
  r.push_back(entry(I::s5, "S5", P::hom_malcev, "wxyz",
                    {
                        {1, "", "G(w,x,y,z)"},
                        {-2, "", "HJ(wx,A(y),A(z))"},
                        {-2, "(y+z)(w+x)", "HJ(yz,A(w),A(x))"},
                    }));
  r.push_back(entry(I::s6, "S6", P::hom_malcev, "wxyz",
                    {
                        {1, "", "A2(w)HJ(x,y,z)"},
                        {-1, "w(x+y+z)", "A2(x)HJ(y,z,w)"},
                        {1, "(y+z)(w+x)", "A2(y)HJ(z,w,x)"},
                        {-1, "z(x+y+w)", "A2(z)HJ(w,x,y)"},
                        {-3, "", "HJ(wx,A(y),A(z))"},
                        {-3, "(y+z)(w+x)", "HJ(yz,A(w),A(x))"},
                    }));
  return r;
}

}  // namespace detail

/// Every identity, in a fixed order.
inline const std::vector<IdentityDescriptor>& identity_registry() {
  static const std::vector<IdentityDescriptor> registry = detail::build_registry();
  return registry;
}

inline const IdentityDescriptor& identity(IdentityId id) {
  for (const auto& d : identity_registry())
    if (d.id == id) return d;
  throw InputError("unknown identity id");
}

/// Case-insensitive lookup by registry name ("S1", "hom_lie", ...).
inline const IdentityDescriptor* find_identity(std::string_view name) {
  auto upper = [](std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::toupper(c); });
    return out;
  };
  const auto key = upper(name);
  for (const auto& d : identity_registry())
    if (d.name == key) return &d;
  return nullptr;
}

}  // namespace supermalcev

#endif  // SUPERMALCEV_IDENTITIES_HPP
