#include "rees/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "rees/homology.hpp"

namespace rees {

namespace {

std::vector<int> int_list(const nlohmann::json& v) {
  if (v.is_number_integer()) return {v.get<int>()};
  return v.get<std::vector<int>>();
}

}  // namespace

SuiteConfig SuiteConfig::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("suite config must be a JSON object");
  SuiteConfig c;
  for (const auto& [key, v] : j.items()) {
    if (key == "suite") {
      c.suite = v.get<std::string>();
    } else if (key == "n_max") {
      c.n_max = v.get<int>();
    } else if (key == "q_values") {
      c.q_values = int_list(v);
    } else if (key == "t_values") {
      c.t_values = int_list(v);
    } else if (key == "variables") {
      c.variables = v.get<int>();
    } else if (key == "degree_cap") {
      c.degree_cap = v.get<int>();
    } else if (key == "seed") {
      c.seed = v.get<std::uint64_t>();
    } else if (key == "trials") {
      c.trials = v.get<int>();
    } else if (key == "max_simplices") {
      c.max_simplices = v.get<std::size_t>();
    } else if (key == "max_subspaces") {
      c.max_subspaces = v.get<std::size_t>();
    } else if (key == "output") {
      c.output = v.get<std::string>();
    } else if (key == "format") {
      c.format = v.get<std::string>();
    } else {
      throw std::invalid_argument("unknown config key '" + key + "'");
    }
  }
  return c;
}

nlohmann::json SuiteConfig::to_json() const {
  nlohmann::json j{{"suite", suite},   {"q_values", q_values}, {"t_values", t_values},
                   {"seed", seed},     {"trials", trials},     {"max_subspaces", max_subspaces},
                   {"output", output}, {"format", format}};
  if (n_max) j["n_max"] = *n_max;
  if (variables) j["variables"] = *variables;
  if (degree_cap) j["degree_cap"] = *degree_cap;
  if (max_simplices) j["max_simplices"] = *max_simplices;
  return j;
}

std::size_t SuiteConfig::simplex_limit() const { return max_simplices.value_or(simplex_guard()); }

CaseResult& Report::add(std::string name, nlohmann::json params, std::string lhs, std::string rhs,
                        nlohmann::json witness) {
  CaseResult c;
  c.name = std::move(name);
  c.params = std::move(params);
  c.status = lhs == rhs ? CaseStatus::pass : CaseStatus::fail;
  c.lhs = std::move(lhs);
  c.rhs = std::move(rhs);
  c.witness = std::move(witness);
  cases.push_back(std::move(c));
  return cases.back();
}

CaseResult& Report::skip(std::string name, nlohmann::json params, std::string reason) {
  CaseResult c;
  c.name = std::move(name);
  c.params = std::move(params);
  c.status = CaseStatus::skipped;
  c.witness = {{"skipped", std::move(reason)}};
  cases.push_back(std::move(c));
  return cases.back();
}

std::size_t Report::count(CaseStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(cases.begin(), cases.end(), [s](const CaseResult& c) { return c.status == s; }));
}

nlohmann::json Report::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : cases) {
    arr.push_back({{"name", c.name},
                   {"params", c.params},
                   {"lhs", c.lhs},
                   {"rhs", c.rhs},
                   {"pass", c.status == CaseStatus::pass},
                   {"skipped", c.status == CaseStatus::skipped},
                   {"witness", c.witness}});
  }
  return {{"suite", suite},
          {"statement", statement},
          {"degree_convention", degree_convention},
          {"cases", arr},
          {"summary",
           {{"passed", count(CaseStatus::pass)},
            {"failed", count(CaseStatus::fail)},
            {"skipped", count(CaseStatus::skipped)},
            {"ok", passed()}}}};
}

Report Report::from_json(const nlohmann::json& j) {
  Report r;
  r.suite = j.at("suite").get<std::string>();
  r.statement = j.at("statement").get<std::string>();
  r.degree_convention = j.value("degree_convention", std::string());
  for (const auto& c : j.at("cases")) {
    CaseResult cr;
    cr.name = c.at("name").get<std::string>();
    cr.params = c.at("params");
    cr.lhs = c.value("lhs", std::string());
    cr.rhs = c.value("rhs", std::string());
    if (c.value("skipped", false)) {
      cr.status = CaseStatus::skipped;
    } else {
      cr.status = c.at("pass").get<bool>() ? CaseStatus::pass : CaseStatus::fail;
    }
    cr.witness = c.value("witness", nlohmann::json());
    r.cases.push_back(std::move(cr));
  }
  return r;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string status_word(CaseStatus s) {
  switch (s) {
    case CaseStatus::pass: return "pass";
    case CaseStatus::fail: return "FAIL";
    case CaseStatus::skipped: return "skipped";
  }
  return "?";
}

}  // namespace

std::string Report::to_csv() const {
  std::ostringstream os;
  os << "suite,case,lhs,rhs,pass\n";
  for (const auto& c : cases) {
    const std::string pass = c.status == CaseStatus::skipped ? "skipped" : (c.status == CaseStatus::pass ? "true" : "false");
    os << csv_field(suite) << ',' << csv_field(c.name) << ',' << csv_field(c.lhs) << ',' << csv_field(c.rhs) << ','
       << pass << '\n';
  }
  return os.str();
}

std::string Report::to_table() const {
  std::size_t wname = 4;
  std::size_t wl = 3;
  for (const auto& c : cases) {
    wname = std::max(wname, c.name.size());
    wl = std::max(wl, std::min<std::size_t>(c.lhs.size(), 40));
  }
  auto clip = [](const std::string& s) { return s.size() > 40 ? s.substr(0, 37) + "..." : s; };
  std::ostringstream os;
  os << suite << ": " << statement << "\n";
  if (!degree_convention.empty()) os << "homology degree: " << degree_convention << "\n";
  for (const auto& c : cases) {
    os << "  " << status_word(c.status) << std::string(8 - status_word(c.status).size(), ' ') << c.name
       << std::string(wname - c.name.size() + 2, ' ');
    if (c.status == CaseStatus::skipped) {
      os << c.witness.value("skipped", std::string());
    } else {
      const std::string l = clip(c.lhs);
      os << l << std::string(wl - l.size() + 1, ' ') << (c.status == CaseStatus::pass ? "==" : "!=") << " "
         << clip(c.rhs);
    }
    os << "\n";
  }
  os << count(CaseStatus::pass) << " passed, " << count(CaseStatus::fail) << " failed, " << count(CaseStatus::skipped)
     << " skipped\n";
  return os.str();
}

std::string case_key(const nlohmann::json& params) {
  std::string s;
  for (const auto& [k, v] : params.items()) {
    if (!s.empty()) s += " ";
    s += k + "=" + v.dump();
  }
  return s;
}

std::string Report::render(const std::string& format) const {
  if (format == "json") return to_json().dump(2) + "\n";
  if (format == "csv") return to_csv();
  if (format == "table") return to_table();
  throw std::invalid_argument("unknown format '" + format + "' (expected json, csv or table)");
}

}  // namespace rees
