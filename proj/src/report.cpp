#include "girthforge/report.hpp"

#include <json.hpp>

#include "girthforge/canon.hpp"

namespace girthforge {

using nlohmann::json;

json to_json(const ClassSpec& spec) {
  return json{{"n", spec.n}, {"k", spec.k}, {"xi", spec.min_out}, {"zeta", spec.min_in}};
}

json to_json(const SearchStats& stats) {
  json prunes{{"cycle", stats.prunes[kPruneCycle]},
              {"gamma", stats.prunes[kPruneGamma]},
              {"degree", stats.prunes[kPruneDegree]},
              {"strong", stats.prunes[kPruneStrong]},
              {"symmetry", stats.prunes[kPruneSymmetry]},
              {"leaf_not_member", stats.prunes[kPruneLeafNotMember]}};
  return json{{"nodes", stats.nodes},
              {"leaves", stats.leaves},
              {"members_found", stats.members_found},
              {"prunes", std::move(prunes)},
              {"restarts", stats.restarts}};
}

json to_json(const SearchOutcome& outcome) {
  json classes = json::array();
  for (const Digraph& d : outcome.extremal) classes.push_back(canonical_string(d));
  json j{{"status", to_string(outcome.status)},
         {"classes", std::move(classes)},
         {"resumable", outcome.resumable},
         {"stats", to_json(outcome.stats)},
         {"seed", outcome.stats.seed}};
  if (outcome.phi)
    j["phi"] = *outcome.phi;
  else
    j["phi"] = nullptr;
  return j;
}

json to_json(const FamilyClassification& cls) {
  auto vertices = [](VertexSet s) {
    json arr = json::array();
    for (int v : vertices_of(s)) arr.push_back(v);
    return arr;
  };
  json blocks = json::array();
  for (VertexSet b : cls.blocks) blocks.push_back(vertices(b));
  json hubs = json::array();
  for (auto [hub, fam] : cls.accepted_hubs)
    hubs.push_back(json{{"hub", hub}, {"family", family_name(fam)}});
  return json{{"family", family_name(cls.family)},
              {"hub", cls.hub},
              {"block_orders", [&] {
                 json arr = json::array();
                 for (VertexSet b : cls.blocks) arr.push_back(set_size(b));
                 return arr;
               }()},
              {"blocks", std::move(blocks)},
              {"x_set", vertices(cls.x_set)},
              {"y_set", vertices(cls.y_set)},
              {"violations", cls.violations},
              {"accepted_hubs", std::move(hubs)},
              {"hub_tags_disagree", cls.hub_tags_disagree}};
}

json run_report(const std::vector<std::string>& command_echo, json params, json outcome,
                double elapsed_seconds) {
  std::string echo;
  for (const std::string& part : command_echo) {
    if (!echo.empty()) echo += ' ';
    echo += part;
  }
  json report{{"command", echo},
              {"params", std::move(params)},
              {"outcome", std::move(outcome)},
              {"version", kToolVersion}};
  report["timing"] = json{{"elapsed_seconds", elapsed_seconds}};
  return report;
}

json strip_timing(json report) {
  report.erase("timing");
  return report;
}

std::string dump_report(const json& report) { return report.dump(2) + "\n"; }

}  // namespace girthforge
