#include "borelkit/morphism_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "borelkit/errors.hpp"
#include "json.hpp"

namespace borelkit {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string coord(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

std::optional<int> get_int(const json& doc, const char* key, std::vector<std::string>& errors) {
  if (!doc.contains(key)) return std::nullopt;
  const auto& v = doc.at(key);
  if (!v.is_number_integer()) {
    errors.push_back(std::string("\"") + key + "\" must be an integer");
    return std::nullopt;
  }
  return v.get<int>();
}

[[noreturn]] void fail(const std::vector<std::string>& errors) {
  std::string msg = "invalid morphism file:";
  for (const auto& e : errors) msg += "\n  " + e;
  throw InputError(msg);
}

ordered_json morphism_object(const GradedMorphism& psi) {
  ordered_json out;
  out["N"] = psi.size();
  out["r"] = psi.nvars();
  out["m"] = psi.multiplier();
  out["d"] = psi.weights();
  if (psi.names().is_custom()) out["vars"] = psi.names().aliases();
  ordered_json entries = ordered_json::array();
  for (const auto& [ij, p] : psi.matrix().entries())
    entries.push_back({{"i", ij.first}, {"j", ij.second}, {"p", p.str(psi.names())}});
  out["entries"] = std::move(entries);
  return out;
}

}  // namespace

LoadedMorphism parse_morphism(std::string_view text, GradedMorphism::Grading mode) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("morphism file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("morphism file must hold a JSON object");

  std::vector<std::string> errors;
  static const std::set<std::string> known{"N", "r", "m", "d", "vars", "entries"};
  for (const auto& [k, v] : doc.items())
    if (!known.contains(k)) errors.push_back("unknown key \"" + k + "\"");

  auto n = get_int(doc, "N", errors);
  auto r = get_int(doc, "r", errors);
  int m = get_int(doc, "m", errors).value_or(1);
  if (!doc.contains("N")) errors.push_back("missing \"N\"");
  if (!doc.contains("r")) errors.push_back("missing \"r\"");
  if (n && *n < 1) errors.push_back("\"N\" must be positive");
  if (r && *r < 1) errors.push_back("\"r\" must be positive");
  if (m < 1) errors.push_back("\"m\" must be positive");

  std::optional<std::vector<int>> d;
  if (doc.contains("d")) {
    const auto& v = doc.at("d");
    bool ok = v.is_array();
    for (const auto& x : v) ok = ok && x.is_number_integer();
    if (ok)
      d = v.get<std::vector<int>>();
    else
      errors.push_back("\"d\" must be an array of integers");
  }

  VariableNames names;
  if (doc.contains("vars")) {
    const auto& v = doc.at("vars");
    bool ok = v.is_array();
    for (const auto& x : v) ok = ok && x.is_string();
    if (!ok) {
      errors.push_back("\"vars\" must be an array of strings");
    } else {
      auto list = v.get<std::vector<std::string>>();
      if (r && static_cast<int>(list.size()) != *r)
        errors.push_back("\"vars\" names " + std::to_string(list.size()) + " variables but r=" + std::to_string(*r));
      names = VariableNames(std::move(list));
    }
  }

  if (!n || !r || *n < 1 || *r < 1) fail(errors);

  PolyMatrix matrix(*n, *r);
  if (!doc.contains("entries") || !doc.at("entries").is_array()) {
    errors.push_back("\"entries\" must be an array");
    fail(errors);
  }
  std::set<std::pair<int, int>> seen;
  int index = 0;
  for (const auto& e : doc.at("entries")) {
    const std::string where = "entries[" + std::to_string(index++) + "]";
    if (!e.is_object() || !e.contains("i") || !e.contains("j") || !e.contains("p") || !e.at("i").is_number_integer() ||
        !e.at("j").is_number_integer() || !e.at("p").is_string()) {
      errors.push_back(where + ": expected {\"i\": int, \"j\": int, \"p\": string}");
      continue;
    }
    int i = e.at("i").get<int>(), j = e.at("j").get<int>();
    if (i < 1 || j > *n || i >= j) {
      errors.push_back("entry " + coord(i, j) + " is not strictly upper triangular in N=" + std::to_string(*n));
      continue;
    }
    if (!seen.insert({i, j}).second) {
      errors.push_back("entry " + coord(i, j) + " appears twice");
      continue;
    }
    try {
      matrix.set(i, j, Polynomial::parse(e.at("p").get<std::string>(), *r, names));
    } catch (const InputError& err) {
      errors.push_back("entry " + coord(i, j) + ": " + err.what());
    }
  }
  if (!errors.empty()) fail(errors);

  bool inferred = !d;
  if (inferred) {
    if (matrix.is_zero()) fail({"all entries are zero"});
    try {
      d = infer_grading(matrix, m);
    } catch (const InputError& err) {
      fail({std::string("\"d\" is absent and ") + err.what()});
    }
  }
  return {GradedMorphism(std::move(*d), m, std::move(matrix), mode, std::move(names)), inferred};
}

LoadedMorphism load_morphism(const std::string& path, GradedMorphism::Grading mode) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_morphism(buf.str(), mode);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string morphism_to_json(const GradedMorphism& psi) { return morphism_object(psi).dump(2) + "\n"; }

void save_morphism(const std::string& path, const GradedMorphism& psi) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << morphism_to_json(psi);
}

std::string report_to_json(const VerificationReport& report, const GradedMorphism& psi) {
  ordered_json out;
  out["verified"] = report.verified();
  out["square_zero"] = report.square_zero;
  out["grading_ok"] = report.grading_ok;
  out["grading_violations"] = report.grading_violations;
  out["generic_rank"] = report.generic_rank;
  out["sigma_psi"] = report.sigma ? ordered_json(report.sigma->str()) : ordered_json(nullptr);
  out["zero_pattern"] = {{"R", report.zero.rows}, {"C", report.zero.cols}};
  out["lemmaA_ok"] = report.lemma_a_ok;
  const auto& a = report.avoidance;
  ordered_json av;
  av["status"] = to_string(a.status);
  av["method"] = a.method;
  if (a.witness) {
    std::vector<std::string> w;
    for (const auto& c : *a.witness) w.push_back(to_string(c));
    av["witness"] = w;
  } else {
    av["witness"] = nullptr;
  }
  av["minor_gcd"] = a.minor_gcd ? ordered_json(a.minor_gcd->str(psi.names())) : ordered_json(nullptr);
  av["trials"] = a.trials;
  av["violations"] = a.violations;
  av["modular_false_alarms"] = a.modular_false_alarms;
  av["detail"] = a.detail;
  out["L_avoidance"] = std::move(av);
  out["morphism"] = morphism_object(psi);
  return out.dump(2) + "\n";
}

}  // namespace borelkit
