#ifndef SUPERMALCEV_ALGEBRA_HPP
#define SUPERMALCEV_ALGEBRA_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "parity.hpp"
#include "rational.hpp"

namespace supermalcev {

/// Coefficient vector over the basis of a finite-dimensional superspace.
class Element {
 public:
  Element() = default;
  explicit Element(std::size_t dim) : coeffs_(dim) {}
  explicit Element(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c.canonicalize();
  }

  static Element basis(std::size_t dim, std::size_t i) {
    Element e(dim);
    e.coeffs_.at(i) = 1;
    return e;
  }

  std::size_t size() const { return coeffs_.size(); }
  const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
  Rational& operator[](std::size_t i) { return coeffs_[i]; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (c != 0) return false;
    return true;
  }

  Element& operator+=(const Element& o) {
    check_same(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  Element& operator-=(const Element& o) {
    check_same(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  Element& operator*=(const Rational& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  /// this += s * o
  Element& add_scaled(const Rational& s, const Element& o) {
    check_same(o);
    if (s == 0) return *this;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (o.coeffs_[i] != 0) coeffs_[i] += s * o.coeffs_[i];
    return *this;
  }

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator-(Element a) { return a *= Rational(-1); }
  friend Element operator*(const Rational& s, Element a) { return a *= s; }
  friend bool operator==(const Element&, const Element&) = default;

 private:
  void check_same(const Element& o) const {
    if (o.coeffs_.size() != coeffs_.size()) throw InputError("element dimension mismatch");
  }

  std::vector<Rational> coeffs_;
};

/// Square rational matrix; column i is the image of basis vector i.
class EvenMap {
 public:
  EvenMap() = default;
  explicit EvenMap(std::vector<std::vector<Rational>> rows) : rows_(std::move(rows)) {
    for (auto& r : rows_) {
      if (r.size() != rows_.size()) throw InputError("map matrix is not square");
      for (auto& c : r) c.canonicalize();
    }
  }

  static EvenMap identity(std::size_t n) {
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return EvenMap(std::move(m));
  }
  static EvenMap zero(std::size_t n) { return EvenMap(std::vector<std::vector<Rational>>(n, std::vector<Rational>(n))); }
  static EvenMap diagonal(const std::vector<Rational>& d) {
    auto m = zero(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
      m.rows_[i][i] = d[i];
      m.rows_[i][i].canonicalize();
    }
    return m;
  }

  std::size_t dim() const { return rows_.size(); }
  /// Entry (row k, column i).
  const Rational& at(std::size_t k, std::size_t i) const { return rows_[k][i]; }
  const std::vector<std::vector<Rational>>& rows() const { return rows_; }

  Element apply(const Element& u) const {
    if (u.size() != dim()) throw InputError("map/element dimension mismatch");
    Element out(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
      if (u[i] == 0) continue;
      for (std::size_t k = 0; k < dim(); ++k)
        if (rows_[k][i] != 0) out[k] += rows_[k][i] * u[i];
    }
    return out;
  }

  /// (*this) o other
  EvenMap compose(const EvenMap& other) const {
    if (other.dim() != dim()) throw InputError("map dimension mismatch");
    auto out = zero(dim());
    for (std::size_t k = 0; k < dim(); ++k)
      for (std::size_t m = 0; m < dim(); ++m) {
        if (rows_[k][m] == 0) continue;
        for (std::size_t i = 0; i < dim(); ++i) out.rows_[k][i] += rows_[k][m] * other.rows_[m][i];
      }
    return out;
  }

  bool is_identity() const { return *this == identity(dim()); }

  /// First (row, column) breaking evenness, or nothing.
  std::optional<std::pair<std::size_t, std::size_t>> evenness_violation(const std::vector<Parity>& parity) const {
    for (std::size_t k = 0; k < dim(); ++k)
      for (std::size_t i = 0; i < dim(); ++i)
        if (rows_[k][i] != 0 && parity[k] != parity[i]) return std::pair{k, i};
    return std::nullopt;
  }

  friend bool operator==(const EvenMap&, const EvenMap&) = default;

 private:
  std::vector<std::vector<Rational>> rows_;
};

/// Outcome of parity_of.
struct Homogeneity {
  enum class Kind { homogeneous, zero, mixed };
  Kind kind = Kind::zero;
  Parity parity;

  bool ok() const { return kind != Kind::mixed; }
};

/// Basis pair (i, j) at which a bilinear identity fails, with its defect.
struct PairViolation {
  std::size_t i = 0;
  std::size_t j = 0;
  Element defect;
};

/// Finite-dimensional Z/2-graded algebra (M, ., alpha) given by structure
/// constants: product(i, j) = e_i e_j. Evenness of the product and of alpha is
/// enforced on construction; multiplicativity and anticommutativity are not.
class SuperAlgebra {
 public:
  using Table = std::vector<std::vector<Element>>;

  SuperAlgebra() = default;
  SuperAlgebra(std::string name, std::vector<Parity> parity, Table structure, EvenMap alpha)
      : name_(std::move(name)), parity_(std::move(parity)), structure_(std::move(structure)), alpha_(std::move(alpha)) {
    for (auto& row : structure_)
      for (auto& e : row)
        for (std::size_t k = 0; k < e.size(); ++k) e[k].canonicalize();
    validate();
    build_sparse();
  }

  /// Zero product, alpha = Id.
  static SuperAlgebra abelian(std::string name, std::vector<Parity> parity) {
    const auto n = parity.size();
    Table t(n, std::vector<Element>(n, Element(n)));
    return SuperAlgebra(std::move(name), std::move(parity), std::move(t), EvenMap::identity(n));
  }

  const std::string& name() const { return name_; }
  std::size_t dim() const { return parity_.size(); }
  Parity parity(std::size_t i) const { return parity_[i]; }
  const std::vector<Parity>& parities() const { return parity_; }
  const Element& product(std::size_t i, std::size_t j) const { return structure_[i][j]; }
  const Table& structure() const { return structure_; }
  const EvenMap& alpha() const { return alpha_; }
  bool alpha_is_identity() const { return alpha_.is_identity(); }
  bool purely_even() const {
    for (auto p : parity_)
      if (p.is_odd()) return false;
    return true;
  }

  SuperAlgebra with_alpha(EvenMap alpha) const {
    return SuperAlgebra(name_, parity_, structure_, std::move(alpha));
  }
  SuperAlgebra renamed(std::string name) const {
    auto copy = *this;
    copy.name_ = std::move(name);
    return copy;
  }

  Element basis(std::size_t i) const { return Element::basis(dim(), i); }
  Element zero() const { return Element(dim()); }

  /// sum_ij u_i v_j e_i e_j
  Element multiply(const Element& u, const Element& v) const {
    if (u.size() != dim() || v.size() != dim()) throw InputError("multiply: dimension mismatch");
    Element out(dim());
    Rational uv;
    for (std::size_t i = 0; i < dim(); ++i) {
      if (u[i] == 0) continue;
      for (std::size_t j = 0; j < dim(); ++j) {
        if (v[j] == 0) continue;
        const auto& entries = sparse_[i * dim() + j];
        if (entries.empty()) continue;
        uv = u[i] * v[j];
        for (const auto& [k, c] : entries) out[k] += uv * c;
      }
    }
    return out;
  }

  Element apply_alpha(const Element& u, unsigned power = 1) const {
    if (u.size() != dim()) throw InputError("apply_alpha: dimension mismatch");
    Element out = u;
    for (unsigned p = 0; p < power; ++p) out = alpha_.apply(out);
    return out;
  }

  Homogeneity parity_of(const Element& u) const {
    if (u.size() != dim()) throw InputError("parity_of: dimension mismatch");
    bool seen_even = false;
    bool seen_odd = false;
    for (std::size_t i = 0; i < dim(); ++i) {
      if (u[i] == 0) continue;
      (parity_[i].is_odd() ? seen_odd : seen_even) = true;
    }
    if (seen_even && seen_odd) return {Homogeneity::Kind::mixed, Parity::even()};
    if (!seen_even && !seen_odd) return {Homogeneity::Kind::zero, Parity::even()};
    return {Homogeneity::Kind::homogeneous, seen_odd ? Parity::odd() : Parity::even()};
  }

  friend bool operator==(const SuperAlgebra& a, const SuperAlgebra& b) {
    return a.name_ == b.name_ && a.parity_ == b.parity_ && a.structure_ == b.structure_ && a.alpha_ == b.alpha_;
  }

 private:
  void validate() const {
    const auto n = parity_.size();
    if (n == 0) throw InputError("algebra dimension must be positive");
    if (structure_.size() != n) throw InputError("structure table has wrong row count");
    for (std::size_t i = 0; i < n; ++i) {
      if (structure_[i].size() != n) throw InputError("structure table row " + std::to_string(i) + " has wrong length");
      for (std::size_t j = 0; j < n; ++j) {
        const auto& c = structure_[i][j];
        if (c.size() != n) throw InputError("structure constant vector has wrong length");
        for (std::size_t k = 0; k < n; ++k)
          if (c[k] != 0 && parity_[k] != parity_[i] + parity_[j])
            throw InputError("product is not even: e" + std::to_string(i) + "*e" + std::to_string(j) +
                             " has a component on e" + std::to_string(k));
      }
    }
    if (alpha_.dim() != n) throw InputError("alpha has wrong dimension");
    if (auto bad = alpha_.evenness_violation(parity_))
      throw InputError("alpha is not even: entry (" + std::to_string(bad->first) + ", " +
                       std::to_string(bad->second) + ") mixes parities");
  }

  void build_sparse() {
    const auto n = dim();
    sparse_.assign(n * n, {});
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (structure_[i][j][k] != 0) sparse_[i * n + j].emplace_back(k, structure_[i][j][k]);
  }

  std::string name_;
  std::vector<Parity> parity_;
  Table structure_;
  EvenMap alpha_;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> sparse_;
};

/// Pairs (i, j) where alpha(e_i e_j) != alpha(e_i) alpha(e_j). Empty iff alpha
/// is multiplicative on all of M.
inline std::vector<PairViolation> check_multiplicativity(const SuperAlgebra& a) {
  std::vector<PairViolation> out;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      auto defect = a.apply_alpha(a.product(i, j)) - a.multiply(a.apply_alpha(a.basis(i)), a.apply_alpha(a.basis(j)));
      if (!defect.is_zero()) out.push_back({i, j, std::move(defect)});
    }
  return out;
}

/// Pairs (i, j) where e_i e_j + (-1)^{p_i p_j} e_j e_i != 0.
inline std::vector<PairViolation> check_super_anticommutativity(const SuperAlgebra& a) {
  std::vector<PairViolation> out;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const Rational sign = (a.parity(i) * a.parity(j)).is_odd() ? -1 : 1;
      Element defect = a.product(i, j);
      defect.add_scaled(sign, a.product(j, i));
      if (!defect.is_zero()) out.push_back({i, j, std::move(defect)});
    }
  return out;
}

}  // namespace supermalcev

#endif  // SUPERMALCEV_ALGEBRA_HPP
