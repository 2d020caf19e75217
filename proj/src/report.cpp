#include "cxosc/report.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace cxosc {

std::string to_string(Role role) {
  return role == Role::paper ? "paper" : "derived";
}

bool VerificationEntry::pass() const {
  return !candidates.empty() && min_residual() <= tol;
}

double VerificationEntry::min_residual() const {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& c : candidates) {
    best = std::min(best, c.residual);
  }
  return best;
}

std::vector<std::string> VerificationEntry::matched_candidates() const {
  std::vector<std::string> out;
  for (const auto& c : candidates) {
    if (matches(c)) {
      out.push_back(c.name);
    }
  }
  return out;
}

std::string VerificationEntry::matched_form() const {
  bool paper = false;
  bool derived = false;
  for (const auto& c : candidates) {
    if (matches(c)) {
      (c.role == Role::paper ? paper : derived) = true;
    }
  }
  if (paper && derived) {
    return "both";
  }
  if (paper) {
    return "paper";
  }
  return derived ? "derived" : "neither";
}

Json to_json(const VerificationEntry& entry) {
  Json residuals = Json::object();
  Json roles = Json::object();
  for (const auto& c : entry.candidates) {
    residuals[c.name] = c.residual;
    roles[c.name] = to_string(c.role);
  }
  Json out;
  out["suite"] = entry.suite;
  out["identity"] = entry.identity;
  out["indices"] = entry.indices;
  out["residuals"] = residuals;
  out["roles"] = roles;
  out["margin"] = entry.margin;
  out["tol"] = entry.tol;
  out["status"] = entry.pass() ? "pass" : "fail";
  out["matched_form"] = entry.matched_form();
  out["matched_candidates"] = entry.matched_candidates();
  if (!entry.note.empty()) {
    out["note"] = entry.note;
  }
  return out;
}

std::string Adjudication::verdict() const {
  if (matching_everywhere.empty()) {
    return "none";
  }
  if (matching_everywhere.size() > 1) {
    return "ambiguous";
  }
  return matching_everywhere.front();
}

std::vector<Adjudication> adjudicate(const std::vector<VerificationEntry>& entries) {
  std::vector<Adjudication> out;
  std::map<std::pair<std::string, std::string>, std::size_t> slot;
  std::vector<std::map<std::string, bool>> everywhere;
  for (const auto& entry : entries) {
    if (entry.candidates.size() < 2) {
      continue;
    }
    const auto key = std::pair{entry.suite, entry.identity};
    auto [it, inserted] = slot.try_emplace(key, out.size());
    if (inserted) {
      Adjudication adj;
      adj.suite = entry.suite;
      adj.identity = entry.identity;
      for (const auto& c : entry.candidates) {
        adj.candidates.push_back(c.name);
      }
      out.push_back(adj);
      everywhere.emplace_back();
      for (const auto& c : entry.candidates) {
        everywhere.back()[c.name] = true;
      }
    }
    auto& adj = out[it->second];
    auto& flags = everywhere[it->second];
    ++adj.points;
    for (auto& [name, flag] : flags) {
      auto c = std::find_if(entry.candidates.begin(), entry.candidates.end(),
                            [&](const Candidate& cand) { return cand.name == name; });
      flag = flag && c != entry.candidates.end() && entry.matches(*c);
    }
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& name : out[i].candidates) {
      if (everywhere[i][name]) {
        out[i].matching_everywhere.push_back(name);
      }
    }
  }
  return out;
}

Json to_json(const Adjudication& adjudication) {
  Json out;
  out["suite"] = adjudication.suite;
  out["identity"] = adjudication.identity;
  out["points"] = adjudication.points;
  out["candidates"] = adjudication.candidates;
  out["matching_everywhere"] = adjudication.matching_everywhere;
  out["verdict"] = adjudication.verdict();
  return out;
}

bool VerificationReport::all_pass() const {
  return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.pass(); });
}

long VerificationReport::passed() const {
  return std::count_if(entries.begin(), entries.end(), [](const auto& e) { return e.pass(); });
}

Json VerificationReport::to_json() const {
  Json out;
  out["schema"] = kReportSchema;
  out["tool"] = kToolName;
  out["version"] = kToolVersion;
  out["config"] = config;
  Json list = Json::array();
  std::map<std::string, std::pair<long, long>> by_suite;
  for (const auto& entry : entries) {
    list.push_back(cxosc::to_json(entry));
    auto& counts = by_suite[entry.suite];
    (entry.pass() ? counts.first : counts.second) += 1;
  }
  out["entries"] = list;
  Json adjudications = Json::array();
  for (const auto& adj : adjudicate(entries)) {
    adjudications.push_back(cxosc::to_json(adj));
  }
  out["adjudications"] = adjudications;
  Json suites = Json::object();
  for (const auto& [suite, counts] : by_suite) {
    suites[suite] = {{"pass", counts.first}, {"fail", counts.second}};
  }
  out["summary"] = {{"total", static_cast<long>(entries.size())},
                    {"pass", passed()},
                    {"fail", static_cast<long>(entries.size()) - passed()},
                    {"suites", suites}};
  return out;
}

namespace {

std::string require(const Json& object, const char* key, Json::value_t type, const std::string& where) {
  if (!object.is_object() || !object.contains(key)) {
    return where + ": missing '" + key + "'";
  }
  const auto& value = object.at(key);
  const bool numeric = type == Json::value_t::number_float &&
                       (value.is_number_float() || value.is_number_integer() || value.is_number_unsigned());
  const bool integral = type == Json::value_t::number_integer &&
                        (value.is_number_integer() || value.is_number_unsigned());
  if (!(value.type() == type || numeric || integral)) {
    return where + ": '" + key + "' has wrong type";
  }
  return {};
}

}  // namespace

std::string validate_report(const Json& report) {
  using T = Json::value_t;
  for (auto [key, type] : {std::pair{"schema", T::number_integer}, {"tool", T::string}, {"version", T::string},
                           {"config", T::object}, {"entries", T::array}, {"adjudications", T::array},
                           {"summary", T::object}}) {
    if (auto err = require(report, key, type, "report"); !err.empty()) {
      return err;
    }
  }
  if (report.at("schema") != kReportSchema) {
    return "report: unsupported schema version";
  }
  long pass = 0;
  long index = 0;
  for (const auto& entry : report.at("entries")) {
    const std::string where = "entries[" + std::to_string(index++) + "]";
    for (auto [key, type] : {std::pair{"suite", T::string}, {"identity", T::string}, {"indices", T::object},
                             {"residuals", T::object}, {"roles", T::object}, {"margin", T::number_integer},
                             {"tol", T::number_float}, {"status", T::string}, {"matched_form", T::string},
                             {"matched_candidates", T::array}}) {
      if (auto err = require(entry, key, type, where); !err.empty()) {
        return err;
      }
    }
    const auto& status = entry.at("status");
    if (status != "pass" && status != "fail") {
      return where + ": bad status";
    }
    const auto& form = entry.at("matched_form");
    if (form != "paper" && form != "derived" && form != "both" && form != "neither") {
      return where + ": bad matched_form";
    }
    if (entry.at("residuals").empty()) {
      return where + ": no candidate residuals";
    }
    double best = std::numeric_limits<double>::infinity();
    for (const auto& [name, residual] : entry.at("residuals").items()) {
      if (!residual.is_number()) {
        return where + ": residual '" + name + "' is not a number";
      }
      if (!entry.at("roles").contains(name)) {
        return where + ": residual '" + name + "' has no role";
      }
      best = std::min(best, residual.get<double>());
    }
    const bool should_pass = best <= entry.at("tol").get<double>();
    if (should_pass != (status == "pass")) {
      return where + ": status inconsistent with residuals";
    }
    pass += should_pass ? 1 : 0;
  }
  const auto& summary = report.at("summary");
  for (const char* key : {"total", "pass", "fail"}) {
    if (auto err = require(summary, key, T::number_integer, "summary"); !err.empty()) {
      return err;
    }
  }
  if (summary.at("total") != report.at("entries").size() || summary.at("pass") != pass) {
    return "summary: counts do not match entries";
  }
  return {};
}

}  // namespace cxosc
