#ifndef SUPERMALCEV_ENGINE_HPP
#define SUPERMALCEV_ENGINE_HPP

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "algebra.hpp"
#include "identities.hpp"

namespace supermalcev {

/// Parities of homogeneous arguments; zero elements are assigned parity 0
/// (every term they enter vanishes, so the choice is immaterial).
inline std::vector<Parity> homogeneous_parities(const SuperAlgebra& alg, std::span<const Element> args) {
  std::vector<Parity> out;
  out.reserve(args.size());
  for (std::size_t i = 0; i < args.size(); ++i) {
    const auto h = alg.parity_of(args[i]);
    if (!h.ok()) throw NotHomogeneous("argument " + std::to_string(i) + " is not homogeneous");
    out.push_back(h.parity);
  }
  return out;
}

inline Element apply_formula(const SuperAlgebra& alg, const Formula& f, std::span<const Element> args) {
  if (static_cast<int>(args.size()) != f.arity())
    throw InputError(f.name + ": expected " + std::to_string(f.arity()) + " arguments, got " +
                     std::to_string(args.size()));
  for (const auto& a : args)
    if (a.size() != alg.dim()) throw InputError(f.name + ": dimension mismatch");
  const auto parities = homogeneous_parities(alg, args);
  return evaluate_formula(f, alg, args, parities);
}

/// (xy)alpha(z) + (-1)^{x(y+z)} (yz)alpha(x) + (-1)^{z(x+y)} (zx)alpha(y)
inline Element hom_super_jacobian(const SuperAlgebra& alg, const Element& x, const Element& y, const Element& z) {
  const Element args[] = {x, y, z};
  return apply_formula(alg, hom_jacobian_formula(), args);
}

/// The untwisted super-Jacobian; alpha is ignored.
inline Element super_jacobian(const SuperAlgebra& alg, const Element& x, const Element& y, const Element& z) {
  const Element args[] = {x, y, z};
  return apply_formula(alg, jacobian_formula(), args);
}

inline Element g_map(const SuperAlgebra& alg, const Element& w, const Element& x, const Element& y,
                     const Element& z) {
  const Element args[] = {w, x, y, z};
  return apply_formula(alg, g_formula(), args);
}

/// Exact defect of one identity instance; zero iff the instance holds.
inline Element evaluate_defect(const SuperAlgebra& alg, const IdentityDescriptor& id, std::span<const Element> args) {
  return apply_formula(alg, id.formula, args);
}

/// Defect at a tuple of basis indices.
inline Element evaluate_defect_at(const SuperAlgebra& alg, const IdentityDescriptor& id,
                                  std::span<const std::size_t> tuple) {
  std::vector<Element> args;
  std::vector<Parity> parities;
  for (auto i : tuple) {
    args.push_back(alg.basis(i));
    parities.push_back(alg.parity(i));
  }
  return evaluate_formula(id.formula, alg, args, parities);
}

struct TupleReport {
  std::string identity;
  std::vector<std::size_t> tuple;
  Element defect;
};

struct IdentityResult {
  enum class Status { holds, fails, skipped };

  std::string identity;
  Status status = Status::holds;
  std::size_t tuples_checked = 0;
  std::size_t total_violations = 0;
  std::vector<TupleReport> violations;  // lexicographic by tuple, truncated
  std::string note;

  bool holds() const { return status == Status::holds; }
};

inline std::string_view status_name(IdentityResult::Status s) {
  switch (s) {
    case IdentityResult::Status::holds:
      return "holds";
    case IdentityResult::Status::fails:
      return "fails";
    case IdentityResult::Status::skipped:
      return "skipped";
  }
  return "holds";
}

struct CheckOptions {
  std::size_t max_violations = 16;
  unsigned jobs = 1;
};

namespace detail {

inline std::vector<std::size_t> decode_tuple(std::size_t index, std::size_t n, int arity) {
  std::vector<std::size_t> t(static_cast<std::size_t>(arity));
  for (int s = arity - 1; s >= 0; --s) {
    t[static_cast<std::size_t>(s)] = index % n;
    index /= n;
  }
  return t;
}

struct ChunkResult {
  std::size_t total = 0;
  std::vector<TupleReport> kept;
};

inline ChunkResult check_range(const SuperAlgebra& alg, const IdentityDescriptor& id, std::size_t begin,
                               std::size_t end, std::size_t cap) {
  ChunkResult r;
  for (std::size_t idx = begin; idx < end; ++idx) {
    auto tuple = decode_tuple(idx, alg.dim(), id.arity());
    auto defect = evaluate_defect_at(alg, id, tuple);
    if (defect.is_zero()) continue;
    ++r.total;
    if (r.kept.size() < cap) r.kept.push_back({id.name, std::move(tuple), std::move(defect)});
  }
  return r;
}

}  // namespace detail

/// Evaluates the identity on all dim^arity basis tuples. Each defect is
/// multilinear with fixed slot parities, so this decides the identity for
/// all homogeneous elements. Output is independent of opts.jobs.
inline IdentityResult check_identity(const SuperAlgebra& alg, const IdentityDescriptor& id,
                                     const CheckOptions& opts = {}) {
  std::size_t total = 1;
  for (int s = 0; s < id.arity(); ++s) total *= alg.dim();

  const std::size_t jobs = std::clamp<std::size_t>(opts.jobs, 1, std::max<std::size_t>(1, total));
  std::vector<detail::ChunkResult> chunks(jobs);
  if (jobs == 1) {
    chunks[0] = detail::check_range(alg, id, 0, total, opts.max_violations);
  } else {
    std::vector<std::thread> workers;
    const std::size_t step = (total + jobs - 1) / jobs;
    for (std::size_t w = 0; w < jobs; ++w) {
      const std::size_t b = std::min(total, w * step);
      const std::size_t e = std::min(total, b + step);
      workers.emplace_back(
          [&, w, b, e] { chunks[w] = detail::check_range(alg, id, b, e, opts.max_violations); });
    }
    for (auto& t : workers) t.join();
  }

  IdentityResult res;
  res.identity = id.name;
  res.tuples_checked = total;
  for (auto& c : chunks) {
    res.total_violations += c.total;
    for (auto& v : c.kept)
      if (res.violations.size() < opts.max_violations) res.violations.push_back(std::move(v));
  }
  res.status = res.total_violations == 0 ? IdentityResult::Status::holds : IdentityResult::Status::fails;
  return res;
}

/// True iff every basis tuple has zero defect; stops at the first violation.
inline bool identity_holds(const SuperAlgebra& alg, const IdentityDescriptor& id) {
  std::size_t total = 1;
  for (int s = 0; s < id.arity(); ++s) total *= alg.dim();
  for (std::size_t idx = 0; idx < total; ++idx)
    if (!evaluate_defect_at(alg, id, detail::decode_tuple(idx, alg.dim(), id.arity())).is_zero()) return false;
  return true;
}

inline bool identity_holds(const SuperAlgebra& alg, IdentityId id) { return identity_holds(alg, identity(id)); }

}  // namespace supermalcev

#endif  // SUPERMALCEV_ENGINE_HPP
