#ifndef SUPERMALCEV_VERIFIER_HPP
#define SUPERMALCEV_VERIFIER_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "constructions.hpp"
#include "engine.hpp"

namespace supermalcev {

struct StructureClass {
  bool anticommutative = false;
  bool multiplicative = false;
  bool hom_lie = false;
  bool hom_malcev = false;
  bool s1_holds = false;
  bool ident_c_holds = false;
  bool malcev_plain = false;  // untwisted Malcev super-identity

  friend bool operator==(const StructureClass&, const StructureClass&) = default;
};

inline StructureClass classify(const SuperAlgebra& a) {
  StructureClass c;
  c.anticommutative = check_super_anticommutativity(a).empty();
  c.multiplicative = check_multiplicativity(a).empty();
  c.hom_lie = identity_holds(a, IdentityId::hom_lie);
  c.hom_malcev = identity_holds(a, IdentityId::hom_malcev);
  c.s1_holds = identity_holds(a, IdentityId::s1);
  c.ident_c_holds = identity_holds(a, IdentityId::ident_c);
  c.malcev_plain = identity_holds(a, IdentityId::malcev_super);
  return c;
}

inline ExpectedClass class_of(const StructureClass& c, bool alpha_is_identity) {
  if (!c.anticommutative || !c.multiplicative) return ExpectedClass::not_hom_malcev;
  if (c.hom_lie) return ExpectedClass::hom_lie;
  if (c.hom_malcev) return alpha_is_identity ? ExpectedClass::malcev_not_lie : ExpectedClass::hom_malcev_not_hom_lie;
  return ExpectedClass::not_hom_malcev;
}

struct VerificationReport {
  std::string algebra;
  std::vector<IdentityResult> results;

  /// No result failed (skipped results do not count).
  bool ok() const {
    for (const auto& r : results)
      if (r.status == IdentityResult::Status::fails) return false;
    return true;
  }
};

/// Wraps a bilinear premise check as a report row over basis pairs.
inline IdentityResult premise_result(std::string name, const SuperAlgebra& a, const std::vector<PairViolation>& v,
                                     std::size_t cap) {
  IdentityResult r;
  r.identity = std::move(name);
  r.tuples_checked = a.dim() * a.dim();
  r.total_violations = v.size();
  for (const auto& pv : v) {
    if (r.violations.size() >= cap) break;
    r.violations.push_back({r.identity, {pv.i, pv.j}, pv.defect});
  }
  r.status = v.empty() ? IdentityResult::Status::holds : IdentityResult::Status::fails;
  return r;
}

inline std::vector<IdentityResult> premise_results(const SuperAlgebra& a, std::size_t cap = 16) {
  return {premise_result("ANTICOMMUTATIVE", a, check_super_anticommutativity(a), cap),
          premise_result("MULTIPLICATIVE", a, check_multiplicativity(a), cap)};
}

/// Lemma identities, gated on their premises: the L25 group needs
/// anticommutativity and multiplicativity, the rest also need HOM_MALCEV.
/// Identities whose premise fails are reported as skipped.
inline VerificationReport lemma_suite(const SuperAlgebra& a, const CheckOptions& opts = {}) {
  VerificationReport rep{a.name(), {}};
  const bool base = check_super_anticommutativity(a).empty() && check_multiplicativity(a).empty();
  const bool malcev = base && identity_holds(a, IdentityId::hom_malcev);
  for (const auto& d : identity_registry()) {
    if (d.premise == Premise::none) continue;
    if (d.id == IdentityId::malcev_super || d.id == IdentityId::hom_malcev || d.id == IdentityId::ident_c ||
        d.id == IdentityId::s1 || d.id == IdentityId::hom_lie)
      continue;
    const bool premise_ok = d.premise == Premise::hom_malcev ? malcev : base;
    if (!premise_ok) {
      IdentityResult r;
      r.identity = d.name;
      r.status = IdentityResult::Status::skipped;
      r.note = "premise not met: " + std::string(premise_name(d.premise));
      rep.results.push_back(std::move(r));
      continue;
    }
    rep.results.push_back(check_identity(a, d, opts));
  }
  return rep;
}

struct EquivalenceRecord {
  std::string label;
  std::size_t dim = 0;
  std::optional<std::uint64_t> seed;
  bool hom_malcev = false;
  bool s1 = false;
  bool ident_c = false;

  bool agreement() const { return hom_malcev == s1 && s1 == ident_c; }
};

inline EquivalenceRecord equivalence_record(const SuperAlgebra& a, std::optional<std::uint64_t> seed = {}) {
  return {a.name(),
          a.dim(),
          seed,
          identity_holds(a, IdentityId::hom_malcev),
          identity_holds(a, IdentityId::s1),
          identity_holds(a, IdentityId::ident_c)};
}

/// For each spec, `trials` algebras with seeds spec.seed, spec.seed + 1, ...
/// Output order is (spec index, trial) regardless of `jobs`.
inline std::vector<EquivalenceRecord> equivalence_scan(const std::vector<WeightedGenSpec>& specs, std::size_t trials,
                                                       unsigned jobs = 1) {
  std::vector<WeightedGenSpec> work;
  for (const auto& s : specs)
    for (std::size_t t = 0; t < trials; ++t) {
      auto copy = s;
      copy.seed = s.seed + t;
      work.push_back(std::move(copy));
    }
  std::vector<EquivalenceRecord> out(work.size());
  auto run = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t i = begin; i < work.size(); i += stride)
      out[i] = equivalence_record(random_weighted_algebra(work[i]), work[i].seed);
  };
  const unsigned workers = std::max(1u, jobs);
  if (workers == 1) {
    run(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w, workers);
    for (auto& t : pool) t.join();
  }
  return out;
}

struct ScanSummary {
  std::size_t records = 0;
  std::size_t disagreements = 0;
  std::size_t all_true = 0;
  std::size_t all_false = 0;

  enum class Verdict { ok, disagreement, coverage_insufficient };
  Verdict verdict(std::size_t min_each = 1) const {
    if (disagreements > 0) return Verdict::disagreement;
    if (all_true < min_each || all_false < min_each) return Verdict::coverage_insufficient;
    return Verdict::ok;
  }
};

inline ScanSummary summarize(const std::vector<EquivalenceRecord>& records) {
  ScanSummary s;
  s.records = records.size();
  for (const auto& r : records) {
    if (!r.agreement())
      ++s.disagreements;
    else if (r.hom_malcev)
      ++s.all_true;
    else
      ++s.all_false;
  }
  return s;
}

/// A seeded algebra that is anticommutative and multiplicative but not
/// Hom-Malcev; gives catalog scans their all-false record.
inline WeightedGenSpec coverage_fixture() {
  WeightedGenSpec s;
  s.dim = 3;
  s.parity = {Parity::even(), Parity::even(), Parity::even()};
  s.weight = {0, 0, 0};
  s.lambda = 1;
  s.bound = 2;
  s.seed = 42;
  return s;
}

/// Parameters for a randomized scan; unset fields are drawn per trial.
struct ScanParams {
  std::optional<std::size_t> dim;  // else uniform in [2, 4]
  std::optional<std::vector<Parity>> parities;  // else uniform per basis vector
  std::optional<Rational> lambda;  // else 1 or 2
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  int bound = 2;
  int min_weight = 0;
  int max_weight = 2;
};

/// One spec per trial; trial t draws its shape from seed + t.
inline std::vector<WeightedGenSpec> plan_scan(const ScanParams& p) {
  if (p.dim && (*p.dim == 0)) throw InputError("scan: dimension must be positive");
  if (p.parities && p.dim && p.parities->size() != *p.dim) throw InputError("scan: parity vector length != dim");
  if (p.min_weight > p.max_weight) throw InputError("scan: empty weight range");
  std::vector<WeightedGenSpec> out;
  for (std::size_t t = 0; t < p.trials; ++t) {
    const std::uint64_t seed = p.seed + t;
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    WeightedGenSpec s;
    s.seed = seed;
    s.bound = p.bound;
    s.dim = p.dim ? *p.dim : (p.parities ? p.parities->size() : 2 + rng() % 3);
    if (p.parities) {
      s.parity = *p.parities;
    } else {
      for (std::size_t i = 0; i < s.dim; ++i) s.parity.emplace_back(static_cast<int>(rng() % 2));
    }
    const auto range = static_cast<std::uint64_t>(p.max_weight - p.min_weight + 1);
    for (std::size_t i = 0; i < s.dim; ++i) s.weight.push_back(p.min_weight + static_cast<int>(rng() % range));
    s.lambda = p.lambda ? *p.lambda : Rational(1 + static_cast<int>(rng() % 2));
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace supermalcev

#endif  // SUPERMALCEV_VERIFIER_HPP
