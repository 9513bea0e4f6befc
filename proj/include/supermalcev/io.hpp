#ifndef SUPERMALCEV_IO_HPP
#define SUPERMALCEV_IO_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "verifier.hpp"

namespace supermalcev {

namespace detail {

/// Maps JSON pointers ("/products/3/k") to the 1-based line where the value
/// starts. Assumes `text` is valid JSON (nlohmann has already parsed it).
class LineIndex {
 public:
  explicit LineIndex(std::string_view text) : text_(text) {
    skip_ws();
    if (pos_ < text_.size()) value("");
  }

  int line_of(const std::string& pointer) const {
    // Fall back to the nearest recorded ancestor.
    std::string p = pointer;
    for (;;) {
      if (auto it = lines_.find(p); it != lines_.end()) return it->second;
      const auto cut = p.rfind('/');
      if (cut == std::string::npos) return 1;
      p.resize(cut);
    }
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '\n') ++line_;
      if (c != ' ' && c != '\t' && c != '\n' && c != '\r') break;
      ++pos_;
    }
  }

  std::string string_token() {
    std::string out;
    ++pos_;  // opening quote
    while (pos_ < text_.size() && text_[pos_] != '"') {
      if (text_[pos_] == '\\') ++pos_;
      if (pos_ < text_.size()) out += text_[pos_++];
    }
    ++pos_;
    return out;
  }

  static std::string escape(const std::string& key) {
    std::string out;
    for (char c : key) {
      if (c == '~')
        out += "~0";
      else if (c == '/')
        out += "~1";
      else
        out += c;
    }
    return out;
  }

  void value(const std::string& pointer) {
    lines_.emplace(pointer, line_);
    const char c = text_[pos_];
    if (c == '{') {
      ++pos_;
      skip_ws();
      while (pos_ < text_.size() && text_[pos_] != '}') {
        const std::string key = string_token();
        skip_ws();
        ++pos_;  // ':'
        skip_ws();
        value(pointer + "/" + escape(key));
        skip_ws();
        if (text_[pos_] == ',') {
          ++pos_;
          skip_ws();
        }
      }
      ++pos_;
    } else if (c == '[') {
      ++pos_;
      skip_ws();
      std::size_t idx = 0;
      while (pos_ < text_.size() && text_[pos_] != ']') {
        value(pointer + "/" + std::to_string(idx++));
        skip_ws();
        if (text_[pos_] == ',') {
          ++pos_;
          skip_ws();
        }
      }
      ++pos_;
    } else if (c == '"') {
      string_token();
    } else {
      while (pos_ < text_.size() && std::string_view(",]} \t\r\n").find(text_[pos_]) == std::string_view::npos) ++pos_;
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  std::map<std::string, int> lines_;
};

class AlgebraReader {
 public:
  AlgebraReader(std::string_view text, std::string source) : text_(text), source_(std::move(source)), index_("") {}

  SuperAlgebra read() {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text_);
    } catch (const nlohmann::json::parse_error& e) {
      throw InputError(source_ + ":" + std::to_string(line_at_byte(e.byte)) + ": invalid JSON: " + e.what());
    }
    index_ = LineIndex(text_);

    if (!doc.is_object()) fail("", "top level must be an object");
    for (const auto& [key, _] : doc.items())
      if (key != "name" && key != "dim" && key != "parity" && key != "products" && key != "alpha")
        fail("/" + key, "unknown field \"" + key + "\"");

    const auto& name = required(doc, "name");
    if (!name.is_string()) fail("/name", "name must be a string");

    const auto& dim_node = required(doc, "dim");
    if (!dim_node.is_number_integer() || dim_node.get<long long>() <= 0) fail("/dim", "dim must be a positive integer");
    const auto n = static_cast<std::size_t>(dim_node.get<long long>());

    const auto& par = required(doc, "parity");
    if (!par.is_array() || par.size() != n) fail("/parity", "parity must be an array of length dim");
    std::vector<Parity> parity;
    for (std::size_t i = 0; i < n; ++i) {
      const auto& p = par[i];
      if (!p.is_number_integer() || (p.get<long long>() != 0 && p.get<long long>() != 1))
        fail("/parity/" + std::to_string(i), "parity must be 0 or 1");
      parity.emplace_back(static_cast<int>(p.get<long long>()));
    }

    SuperAlgebra::Table table(n, std::vector<Element>(n, Element(n)));
    const auto& prods = required(doc, "products");
    if (!prods.is_array()) fail("/products", "products must be an array");
    std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
    for (std::size_t r = 0; r < prods.size(); ++r) {
      const std::string at = "/products/" + std::to_string(r);
      const auto& rec = prods[r];
      if (!rec.is_object()) fail(at, "product entry must be an object");
      for (const auto& [key, _] : rec.items())
        if (key != "i" && key != "j" && key != "k" && key != "value") fail(at + "/" + key, "unknown field \"" + key + "\"");
      const auto i = index_field(rec, at, "i", n);
      const auto j = index_field(rec, at, "j", n);
      const auto k = index_field(rec, at, "k", n);
      if (!rec.contains("value")) fail(at, "missing field \"value\"");
      const Rational v = rational_node(rec["value"], at + "/value");
      if (!seen.insert({i, j, k}).second)
        fail(at, "duplicate entry for (" + std::to_string(i) + ", " + std::to_string(j) + ", " + std::to_string(k) + ")");
      if (v != 0 && parity[k] != parity[i] + parity[j])
        fail(at, "product is not even: e" + std::to_string(i) + "*e" + std::to_string(j) + " has a component on e" +
                     std::to_string(k));
      table[i][j][k] = v;
    }

    EvenMap alpha = EvenMap::identity(n);
    if (doc.contains("alpha")) {
      const auto& m = doc["alpha"];
      if (!m.is_array() || m.size() != n) fail("/alpha", "alpha must be a dim x dim array");
      std::vector<std::vector<Rational>> rows(n);
      for (std::size_t k = 0; k < n; ++k) {
        const std::string row_at = "/alpha/" + std::to_string(k);
        if (!m[k].is_array() || m[k].size() != n) fail(row_at, "alpha row must have length dim");
        for (std::size_t i = 0; i < n; ++i) {
          const std::string at = row_at + "/" + std::to_string(i);
          rows[k].push_back(rational_node(m[k][i], at));
          if (rows[k].back() != 0 && parity[k] != parity[i])
            fail(at, "alpha is not even: entry (" + std::to_string(k) + ", " + std::to_string(i) + ") mixes parities");
        }
      }
      alpha = EvenMap(std::move(rows));
    }
    return SuperAlgebra(name.get<std::string>(), std::move(parity), std::move(table), std::move(alpha));
  }

 private:
  [[noreturn]] void fail(const std::string& pointer, const std::string& what) const {
    throw InputError(source_ + ":" + std::to_string(index_.line_of(pointer)) + ": " +
                     (pointer.empty() ? std::string("/") : pointer) + ": " + what);
  }

  int line_at_byte(std::size_t byte) const {
    int line = 1;
    for (std::size_t i = 0; i < byte && i < text_.size(); ++i)
      if (text_[i] == '\n') ++line;
    return line;
  }

  const nlohmann::json& required(const nlohmann::json& obj, const char* key) const {
    if (!obj.contains(key)) fail("", std::string("missing field \"") + key + "\"");
    return obj[key];
  }

  std::size_t index_field(const nlohmann::json& rec, const std::string& at, const char* key, std::size_t n) const {
    if (!rec.contains(key)) fail(at, std::string("missing field \"") + key + "\"");
    const auto& v = rec[key];
    if (!v.is_number_integer() || v.get<long long>() < 0 || static_cast<std::size_t>(v.get<long long>()) >= n)
      fail(at + "/" + key, std::string(key) + " must be an index in [0, " + std::to_string(n) + ")");
    return static_cast<std::size_t>(v.get<long long>());
  }

  Rational rational_node(const nlohmann::json& v, const std::string& at) const {
    if (v.is_number_integer()) return Rational(v.dump());
    if (!v.is_string()) fail(at, "rational must be a string \"p\" or \"p/q\"");
    try {
      return parse_rational(v.get<std::string>());
    } catch (const InputError& e) {
      fail(at, e.what());
    }
  }

  std::string_view text_;
  std::string source_;
  LineIndex index_;
};

inline nlohmann::ordered_json element_json(const Element& e) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& c : e.coeffs()) out.push_back(format_rational(c));
  return out;
}

}  // namespace detail

/// Parses an algebra file. Errors are InputError with "source:line: pointer: message".
inline SuperAlgebra load_algebra(std::string_view text, const std::string& source = "<input>") {
  return detail::AlgebraReader(text, source).read();
}

/// Algebra file text: one product record per line, alpha as rows
/// (row k, column i = coefficient of e_k in alpha(e_i)). Zero products omitted.
inline std::string emit_algebra(const SuperAlgebra& a) {
  using nlohmann::ordered_json;
  const auto n = a.dim();
  std::ostringstream os;
  os << "{\n  \"name\": " << ordered_json(a.name()).dump() << ",\n  \"dim\": " << n << ",\n  \"parity\": [";
  for (std::size_t i = 0; i < n; ++i) os << (i ? ", " : "") << a.parity(i).value();
  os << "],\n  \"products\": [";
  bool first = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const auto& c = a.product(i, j)[k];
        if (c == 0) continue;
        ordered_json rec{{"i", i}, {"j", j}, {"k", k}, {"value", format_rational(c)}};
        os << (first ? "\n    " : ",\n    ") << rec.dump();
        first = false;
      }
  os << (first ? "],\n" : "\n  ],\n") << "  \"alpha\": [";
  for (std::size_t k = 0; k < n; ++k) {
    ordered_json row = ordered_json::array();
    for (std::size_t i = 0; i < n; ++i) row.push_back(format_rational(a.alpha().at(k, i)));
    os << (k ? ",\n    " : "\n    ") << row.dump();
  }
  os << "\n  ]\n}\n";
  return os.str();
}

/// Fills e_j e_i = -(-1)^{p_i p_j} e_i e_j for i != j from whichever of the
/// two is given. Throws if both are given and disagree.
inline SuperAlgebra assume_skew(const SuperAlgebra& a) {
  const auto n = a.dim();
  auto t = a.structure();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Rational s = (a.parity(i) * a.parity(j)).is_odd() ? 1 : -1;
      Element from_ij = a.product(i, j);
      from_ij *= s;
      Element from_ji = a.product(j, i);
      from_ji *= s;
      if (a.product(j, i).is_zero()) {
        t[j][i] = from_ij;
      } else if (a.product(i, j).is_zero()) {
        t[i][j] = from_ji;
      } else if (from_ij != a.product(j, i)) {
        throw InputError("--assume-skew: e" + std::to_string(i) + "*e" + std::to_string(j) + " and e" +
                         std::to_string(j) + "*e" + std::to_string(i) + " are both given and not super antisymmetric");
      }
    }
  return SuperAlgebra(a.name(), a.parities(), std::move(t), a.alpha());
}

inline nlohmann::ordered_json result_json(const IdentityResult& r) {
  nlohmann::ordered_json j;
  j["id"] = r.identity;
  j["status"] = std::string(status_name(r.status));
  j["holds"] = r.holds();
  j["tuples_checked"] = r.tuples_checked;
  j["total_violations"] = r.total_violations;
  auto v = nlohmann::ordered_json::array();
  for (const auto& t : r.violations) v.push_back({{"tuple", t.tuple}, {"defect", detail::element_json(t.defect)}});
  j["violations"] = std::move(v);
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

inline nlohmann::ordered_json report_json(const VerificationReport& rep) {
  nlohmann::ordered_json j;
  j["algebra"] = rep.algebra;
  auto rs = nlohmann::ordered_json::array();
  for (const auto& r : rep.results) rs.push_back(result_json(r));
  j["results"] = std::move(rs);
  j["ok"] = rep.ok();
  return j;
}

inline nlohmann::ordered_json class_json(const SuperAlgebra& a, const StructureClass& c) {
  nlohmann::ordered_json j;
  j["algebra"] = a.name();
  j["dim"] = a.dim();
  j["anticommutative"] = c.anticommutative;
  j["multiplicative"] = c.multiplicative;
  j["hom_lie"] = c.hom_lie;
  j["hom_malcev"] = c.hom_malcev;
  j["s1"] = c.s1_holds;
  j["ident_c"] = c.ident_c_holds;
  j["malcev_plain"] = c.malcev_plain;
  j["alpha_is_identity"] = a.alpha_is_identity();
  j["class"] = std::string(expected_class_name(class_of(c, a.alpha_is_identity())));
  return j;
}

inline std::string_view verdict_name(ScanSummary::Verdict v) {
  switch (v) {
    case ScanSummary::Verdict::ok:
      return "ok";
    case ScanSummary::Verdict::disagreement:
      return "disagreement";
    case ScanSummary::Verdict::coverage_insufficient:
      return "coverage_insufficient";
  }
  return "ok";
}

inline nlohmann::ordered_json record_json(const EquivalenceRecord& r) {
  nlohmann::ordered_json j;
  j["label"] = r.label;
  j["dim"] = r.dim;
  if (r.seed)
    j["seed"] = *r.seed;
  else
    j["seed"] = nullptr;
  j["hom_malcev"] = r.hom_malcev;
  j["s1"] = r.s1;
  j["ident_c"] = r.ident_c;
  j["agreement"] = r.agreement();
  return j;
}

inline nlohmann::ordered_json scan_json(const std::vector<EquivalenceRecord>& records, std::size_t min_each = 1) {
  const auto s = summarize(records);
  nlohmann::ordered_json j;
  j["summary"] = {{"records", s.records},
                  {"disagreements", s.disagreements},
                  {"all_true", s.all_true},
                  {"all_false", s.all_false},
                  {"verdict", std::string(verdict_name(s.verdict(min_each)))}};
  auto rs = nlohmann::ordered_json::array();
  for (const auto& r : records) rs.push_back(record_json(r));
  j["records"] = std::move(rs);
  return j;
}

}  // namespace supermalcev

#endif  // SUPERMALCEV_IO_HPP
