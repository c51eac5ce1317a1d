#include "resurgence/report_json.hpp"

#include "json.hpp"

namespace resurgence {

namespace {

using nlohmann::json;

json value_json(const ValueOrInterval& v) {
  json out;
  if (v.is_exact()) {
    out["exact"] = v.exact->str();
  } else {
    out["interval"] = {{"lower", v.lower.str()}, {"upper", v.upper.str()}};
  }
  return out;
}

json provenance_json(const std::vector<BoundProvenance>& provenance,
                     const std::string& quantity) {
  json arr = json::array();
  for (const auto& p : provenance) {
    if (p.quantity != quantity) continue;
    json e = {{"value", p.value.str()}, {"tag", p.tag}, {"bound", p.bound}};
    if (!p.inputs.empty()) e["inputs"] = p.inputs;
    arr.push_back(e);
  }
  return arr;
}

json witness_json(const SweepFailure& f, const VariableSet& vars) {
  return {{"s", f.s}, {"t", f.t}, {"monomial", f.witness.str(vars)}};
}

}  // namespace

std::string report_to_json(const ResurgenceReport& rep, const VariableSet& vars, bool pretty) {
  json j;
  j["ideal"] = rep.ideal;
  j["rho"] = value_json(rep.rho);
  j["rho"]["provenance"] = provenance_json(rep.provenance, "rho");
  j["rho_a"] = value_json(rep.rho_a);
  j["rho_a"]["provenance"] = provenance_json(rep.provenance, "rho_a");
  json wits = json::array();
  for (const auto& w : rep.witnesses) wits.push_back(witness_json(w, vars));
  j["witnesses"] = wits;
  json cells = json::array();
  for (const auto& c : rep.containments)
    cells.push_back({{"s", c.s}, {"t", c.t}, {"holds", c.holds}});
  j["containments"] = cells;
  j["flags"] = rep.flags;
  j["truncated"] = rep.truncated;
  return pretty ? j.dump(2) : j.dump();
}

std::string containment_to_json(const ContainmentResult& res, const VariableSet& vars,
                                bool pretty) {
  json j;
  j["s"] = res.s;
  j["t"] = res.t;
  j["holds"] = res.holds;
  j["truncated"] = res.truncated;
  j["out_of_hypothesis"] = res.out_of_hypothesis;
  if (res.witness) j["witness"] = res.witness->str(vars);
  if (res.certificate) {
    json cert = json::array();
    for (const auto& [gen, factors] : *res.certificate) {
      json entry;
      entry["generator"] = gen.str(vars);
      json fs = json::array();
      for (const auto& f : factors) fs.push_back(f.str(vars));
      entry["factors"] = fs;
      cert.push_back(entry);
    }
    j["certificate"] = cert;
  }
  return pretty ? j.dump(2) : j.dump();
}

std::string sweep_to_json(const SweepResult& res, const VariableSet& vars, bool pretty) {
  json j;
  j["s_max"] = res.s_max;
  j["t_max"] = res.t_max;
  json fails = json::array();
  for (const auto& f : res.failures) fails.push_back(witness_json(f, vars));
  j["witnesses"] = fails;
  json cells = json::array();
  for (const auto& c : res.cells)
    cells.push_back({{"s", c.s}, {"t", c.t}, {"holds", c.holds}});
  j["containments"] = cells;
  if (res.lower_bound) j["lower_bound"] = res.lower_bound->str();
  j["truncated"] = res.truncated;
  return pretty ? j.dump(2) : j.dump();
}

}  // namespace resurgence
