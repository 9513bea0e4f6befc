// supermalcev: batch checker for Hom-Malcev superalgebra identities.
//
// Exit codes: 0 all checks pass, 1 a checked property fails, 2 input or usage error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <supermalcev/io.hpp>

namespace sm = supermalcev;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;

std::string read_source(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw sm::InputError(path + ": cannot open file");
  return {std::istreambuf_iterator<char>(in), {}};
}

sm::SuperAlgebra load(const std::string& path, bool skew) {
  auto a = sm::load_algebra(read_source(path), path == "-" ? "<stdin>" : path);
  return skew ? sm::assume_skew(a) : a;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

sm::EvenMap parse_map(const std::string& spec, const sm::SuperAlgebra& a) {
  if (spec == "identity") return sm::EvenMap::identity(a.dim());
  if (spec.starts_with("diag:")) {
    std::vector<sm::Rational> d;
    for (const auto& part : split(spec.substr(5), ',')) d.push_back(sm::parse_rational(part));
    if (d.size() != a.dim())
      throw sm::InputError("--map: diag has " + std::to_string(d.size()) + " entries, algebra has dim " +
                           std::to_string(a.dim()));
    return sm::EvenMap::diagonal(d);
  }
  // A JSON file holding the matrix as rows of rational strings.
  const auto text = read_source(spec);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw sm::InputError(spec + ": invalid JSON: " + e.what());
  }
  if (!doc.is_array() || doc.size() != a.dim()) throw sm::InputError(spec + ": map must be a dim x dim array");
  std::vector<std::vector<sm::Rational>> rows;
  for (const auto& r : doc) {
    if (!r.is_array() || r.size() != a.dim()) throw sm::InputError(spec + ": map row must have length dim");
    rows.emplace_back();
    for (const auto& v : r) rows.back().push_back(sm::parse_rational(v.is_string() ? v.get<std::string>() : v.dump()));
  }
  return sm::EvenMap(std::move(rows));
}

struct CheckArgs {
  std::string file;
  std::vector<std::string> identities{"all"};
  bool assume_skew = false;
  std::size_t max_violations = 16;
  unsigned jobs = 1;
};

int run_check(const CheckArgs& args) {
  const auto a = load(args.file, args.assume_skew);
  const sm::CheckOptions opts{args.max_violations, args.jobs};
  sm::VerificationReport rep{a.name(), {}};
  for (const auto& sel : args.identities) {
    if (sel == "premises") {
      for (auto& r : sm::premise_results(a, args.max_violations)) rep.results.push_back(std::move(r));
    } else if (sel == "all") {
      for (const auto& d : sm::identity_registry()) rep.results.push_back(sm::check_identity(a, d, opts));
    } else {
      const auto* d = sm::find_identity(sel);
      if (d == nullptr) throw sm::InputError("unknown identity \"" + sel + "\"");
      rep.results.push_back(sm::check_identity(a, *d, opts));
    }
  }
  std::cout << sm::report_json(rep).dump(2) << "\n";
  return rep.ok() ? kPass : kFail;
}

struct ScanArgs {
  std::optional<std::size_t> dim;
  std::size_t trials = 200;
  std::uint64_t seed = 1;
  std::string parities;
  std::string lambda;
  int bound = 2;
  int max_weight = 2;
  bool catalog = false;
  std::size_t min_each = 1;
  unsigned jobs = 1;
};

std::vector<sm::EquivalenceRecord> catalog_records() {
  std::vector<sm::EquivalenceRecord> out;
  for (const auto& key : sm::catalog_instances()) {
    const auto entry = sm::catalog_algebra(key);
    for (const auto& m : sm::catalog_morphisms(key))
      out.push_back(sm::equivalence_record(sm::yau_twist(entry.algebra, m.map, key + "~" + m.name)));
  }
  const auto fixture = sm::coverage_fixture();
  out.push_back(sm::equivalence_record(sm::random_weighted_algebra(fixture), fixture.seed));
  return out;
}

int run_scan(const ScanArgs& args) {
  std::vector<sm::EquivalenceRecord> records;
  nlohmann::ordered_json params;
  if (args.catalog) {
    params["catalog"] = true;
    records = catalog_records();
  } else {
    sm::ScanParams p;
    p.dim = args.dim;
    if (!args.parities.empty()) {
      std::vector<sm::Parity> ps;
      for (const auto& s : split(args.parities, ',')) {
        if (s != "0" && s != "1") throw sm::InputError("--parities: expected 0 or 1, got \"" + s + "\"");
        ps.emplace_back(s == "1" ? 1 : 0);
      }
      p.parities = std::move(ps);
    }
    if (!args.lambda.empty()) {
      p.lambda = sm::parse_rational(args.lambda);
      if (*p.lambda == 0) throw sm::InputError("--lambda must be nonzero");
    }
    p.trials = args.trials;
    p.seed = args.seed;
    p.bound = args.bound;
    p.max_weight = args.max_weight;
    records = sm::equivalence_scan(sm::plan_scan(p), 1, args.jobs);

    params["catalog"] = false;
    params["dim"] = args.dim ? nlohmann::ordered_json(*args.dim) : nlohmann::ordered_json(nullptr);
    params["trials"] = args.trials;
    params["seed"] = args.seed;
    params["parities"] = args.parities.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(args.parities);
    params["lambda"] = args.lambda.empty() ? nlohmann::ordered_json(nullptr)
                                           : nlohmann::ordered_json(sm::format_rational(*p.lambda));
    params["bound"] = args.bound;
    params["max_weight"] = args.max_weight;
  }

  auto out = sm::scan_json(records, args.min_each);
  nlohmann::ordered_json doc;
  doc["params"] = std::move(params);
  doc["summary"] = out["summary"];
  doc["records"] = out["records"];
  std::cout << doc.dump(2) << "\n";

  const auto s = sm::summarize(records);
  switch (s.verdict(args.min_each)) {
    case sm::ScanSummary::Verdict::ok:
      return kPass;
    case sm::ScanSummary::Verdict::disagreement:
      std::cerr << "disagreement found: " << s.disagreements
                << " algebra(s) where HOM_MALCEV, S1 and IDENT_C do not agree\n";
      return kFail;
    case sm::ScanSummary::Verdict::coverage_insufficient:
      std::cerr << "coverage insufficient: " << s.all_true << " all-true and " << s.all_false
                << " all-false records, need at least " << args.min_each << " of each\n";
      return kFail;
  }
  return kFail;
}

int run_catalog_list() {
  for (const auto& key : sm::catalog_keys()) {
    const auto sample = key.starts_with("abelian:") ? std::string("abelian:1|1") : key;
    const auto entry = sm::catalog_algebra(sample);
    std::cout << key << "\t" << sm::expected_class_name(entry.expected_class) << "\t" << entry.provenance << "\n";
  }
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact identity checks for Hom-Malcev superalgebras"};
  app.require_subcommand(1);

  CheckArgs check;
  auto* c = app.add_subcommand("check", "Check identities on an algebra file");
  c->add_option("file", check.file, "Algebra file, or - for stdin")->required();
  c->add_option("--identity,-i", check.identities, "Registry id, all, or premises (repeatable)");
  c->add_flag("--assume-skew", check.assume_skew, "Fill e_j e_i from e_i e_j by super antisymmetry");
  c->add_option("--max-violations", check.max_violations, "Violations listed per identity")->capture_default_str();
  c->add_option("--jobs,-j", check.jobs, "Worker threads")->check(CLI::PositiveNumber);

  std::string classify_file;
  bool classify_skew = false;
  auto* cl = app.add_subcommand("classify", "Classify an algebra");
  cl->add_option("file", classify_file, "Algebra file, or - for stdin")->required();
  cl->add_flag("--assume-skew", classify_skew, "Fill e_j e_i from e_i e_j by super antisymmetry");

  std::string twist_file, twist_map, twist_name;
  auto* tw = app.add_subcommand("twist", "Yau-twist an algebra along an even morphism");
  tw->add_option("file", twist_file, "Algebra file, or - for stdin")->required();
  tw->add_option("--map", twist_map, "identity, diag:a,b,..., or a JSON matrix file")->required();
  tw->add_option("--name", twist_name, "Name of the twisted algebra");

  ScanArgs scan;
  auto* sc = app.add_subcommand("scan", "Equivalence scan over seeded weight-graded algebras");
  sc->add_option("--dim", scan.dim, "Dimension (default: random in 2..4)");
  sc->add_option("--trials", scan.trials, "Number of algebras")->capture_default_str();
  sc->add_option("--seed", scan.seed, "First seed")->capture_default_str();
  sc->add_option("--parities", scan.parities, "Comma-separated 0/1 parity vector");
  sc->add_option("--lambda", scan.lambda, "Weight base for alpha (default: 1 or 2 per trial)");
  sc->add_option("--bound", scan.bound, "Coefficient bound")->capture_default_str()->check(CLI::NonNegativeNumber);
  sc->add_option("--max-weight", scan.max_weight, "Largest basis weight")->capture_default_str()->check(
      CLI::NonNegativeNumber);
  sc->add_option("--min-each", scan.min_each, "Required all-true and all-false records")->capture_default_str();
  sc->add_flag("--catalog", scan.catalog, "Scan catalog algebras, their twists, and a non-Malcev fixture");
  sc->add_option("--jobs,-j", scan.jobs, "Worker threads")->check(CLI::PositiveNumber);

  std::string emit_key;
  auto* cat = app.add_subcommand("catalog", "List or emit catalog algebras");
  cat->require_subcommand(1);
  auto* cat_list = cat->add_subcommand("list", "List catalog keys");
  auto* cat_emit = cat->add_subcommand("emit", "Write a catalog algebra file to stdout");
  cat_emit->add_option("key", emit_key, "Catalog key")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kPass : kInputError;
  }

  try {
    if (c->parsed()) return run_check(check);
    if (cl->parsed()) {
      const auto a = load(classify_file, classify_skew);
      std::cout << sm::class_json(a, sm::classify(a)).dump(2) << "\n";
      return kPass;
    }
    if (tw->parsed()) {
      const auto a = load(twist_file, false);
      const auto beta = parse_map(twist_map, a);
      std::cout << sm::emit_algebra(sm::yau_twist(a, beta, twist_name.empty() ? a.name() : twist_name));
      return kPass;
    }
    if (sc->parsed()) return run_scan(scan);
    if (cat_list->parsed()) return run_catalog_list();
    if (cat_emit->parsed()) {
      std::cout << sm::emit_algebra(sm::catalog_algebra(emit_key).algebra);
      return kPass;
    }
  } catch (const sm::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const sm::NotHomogeneous& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
