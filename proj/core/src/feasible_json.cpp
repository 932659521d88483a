#include "attractor/feasible_json.hpp"

#include <json.hpp>

namespace attractor {

namespace {

using nlohmann::json;

VecKey parse_key_string(const std::string& s) {
  VecKey v;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t next = s.find(',', pos);
    if (next == std::string::npos) next = s.size();
    try {
      v.push_back(std::stoi(s.substr(pos, next - pos)));
    } catch (const std::exception&) {
      throw JsonError("bad key string \"" + s + "\"");
    }
    pos = next + 1;
  }
  if (v.empty()) throw JsonError("empty key string");
  return v;
}

std::map<VecKey, int> parse_key_map(const json& j, const char* what) {
  if (!j.is_object()) throw JsonError(std::string(what) + " must be an object");
  std::map<VecKey, int> out;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!it.value().is_number_integer())
      throw JsonError(std::string(what) + "[\"" + it.key() +
                      "\"] must be an integer");
    out[parse_key_string(it.key())] = it.value().get<int>();
  }
  return out;
}

}  // namespace

FeasibleSet feasible_from_json_text(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw JsonError(std::string("json parse error: ") + e.what());
  }
  if (!j.is_object() || !j.contains("base") || !j.contains("sigma"))
    throw JsonError("expected an object with \"base\" and \"sigma\"");

  std::set<VecKey> keys;
  if (!j["base"].is_array()) throw JsonError("\"base\" must be an array");
  for (const auto& jk : j["base"]) {
    if (!jk.is_array() || jk.empty())
      throw JsonError("base keys must be nonempty integer arrays");
    VecKey v;
    for (const auto& x : jk) {
      if (!x.is_number_integer())
        throw JsonError("base keys must be nonempty integer arrays");
      v.push_back(x.get<int>());
    }
    keys.insert(std::move(v));
  }

  std::map<VecKey, int> rho =
      j.contains("rho") ? parse_key_map(j["rho"], "rho")
                        : std::map<VecKey, int>{};
  std::map<VecKey, int> sigma = parse_key_map(j["sigma"], "sigma");

  CompleteBase base = CompleteBase::validate(keys);
  return FeasibleSet::validate(std::move(base), std::move(rho),
                               std::move(sigma));
}

std::string feasible_to_json_text(const FeasibleSet& L,
                                  bool include_elements) {
  json j;
  j["base"] = json::array();
  for (const auto& [v, lam] : L.base().lambdas()) j["base"].push_back(v);
  j["rho"] = json::object();
  for (const auto& [v, r] : L.rho_map()) j["rho"][key_str(v)] = r;
  j["sigma"] = json::object();
  for (const auto& [v, s] : L.sigma_map()) j["sigma"][key_str(v)] = s;
  if (include_elements) {
    j["elements"] = json::array();
    for (const Element& e : L.elements()) {
      json row = json::array();
      for (int x : e.key) row.push_back(3 * x);
      row.push_back(e.last.thirds());
      j["elements"].push_back(std::move(row));
    }
  }
  return j.dump(2) + "\n";
}

}  // namespace attractor
