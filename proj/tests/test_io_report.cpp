#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <fstream>

#include "girthforge/arclist.hpp"
#include "girthforge/canon.hpp"
#include "girthforge/classify.hpp"
#include "girthforge/construct.hpp"
#include "girthforge/report.hpp"
#include "girthforge/search.hpp"

using namespace girthforge;
using nlohmann::json;

namespace {

struct CommandResult {
  int exit_code = -1;
  std::string output;
};

CommandResult run_command(const std::string& command) {
  CommandResult result;
  FILE* pipe = popen((command + " 2>&1").c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buffer;
  while (fgets(buffer.data(), buffer.size(), pipe)) result.output += buffer.data();
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

const std::string kBin = GIRTHFORGE_BIN;

}  // namespace

TEST_CASE("arclist round-trips every construction and solver output") {
  std::vector<Digraph> pool = {circulant(7, {1, 2}), f8(), strong_tournament(6),
                               build_family(smallest_d5(6))};
  SearchParams params;
  params.spec = {6, 3, 1, 1};
  for (const Digraph& d : solve(params).extremal) pool.push_back(d);
  for (const Digraph& d : pool) CHECK(from_arclist(to_arclist(d)) == d);
}

TEST_CASE("reports are byte-identical across reruns once timing is stripped") {
  auto make_report = [] {
    SearchParams params;
    params.spec = {6, 3, 1, 1};
    params.workers = 2;
    SearchOutcome outcome = solve(params);
    json report = run_report({"girthforge", "search", "--n", "6"}, to_json(params.spec),
                             to_json(outcome), outcome.stats.elapsed_seconds);
    return dump_report(strip_timing(report));
  };
  std::string a = make_report();
  std::string b = make_report();
  CHECK(a == b);
  CHECK(a.find("\"timing\"") == std::string::npos);
  CHECK(json::parse(a)["outcome"]["phi"] == 11);
}

TEST_CASE("classification serializes with its rule vocabulary") {
  FamilyClassification cls = classify_family(build_family(smallest_d5(6)));
  json j = to_json(cls);
  CHECK(j["family"] == "D5");
  CHECK(j["violations"].empty());
  CHECK(j["block_orders"].size() == cls.blocks.size());
}

TEST_CASE("cli: construct writes a file and reports the profile") {
  std::string file = "/tmp/gf_cli_f8.arclist";
  std::remove(file.c_str());
  CommandResult r = run_command(kBin + " construct f8 -o " + file);
  REQUIRE(r.exit_code == 0);
  json report = json::parse(r.output);
  CHECK(report["outcome"]["profile"]["arcs"] == 20);
  CHECK(report["outcome"]["member"] == true);
  CHECK(from_arclist(to_arclist(read_arclist_file(file))) == f8());

  CommandResult c = run_command(kBin + " construct circulant --n 7 --jumps 1,2 -o /tmp/gf_c7.arclist");
  REQUIRE(c.exit_code == 0);
  json creport = json::parse(c.output);
  CHECK(creport["outcome"]["profile"]["arcs"] == 14);
  CHECK(creport["outcome"]["profile"]["canonical"] ==
        json::parse(run_command(kBin + " construct circulant --n 7 --jumps 1,4 -o /tmp/gf_c7b.arclist")
                        .output)["outcome"]["profile"]["canonical"]);

  CommandResult p = run_command(kBin + " construct phi31 --family D5 --orders 1,1,1,1 -o /tmp/gf_d5.arclist");
  REQUIRE(p.exit_code == 0);
  CHECK(json::parse(p.output)["outcome"]["profile"]["arcs"] == 7);
}

TEST_CASE("cli: check verdicts and exit codes") {
  run_command(kBin + " construct f8 -o /tmp/gf_cli_f8.arclist");
  CommandResult member = run_command(kBin + " check /tmp/gf_cli_f8.arclist --k 3 --min-outdeg 2 --min-indeg 1");
  CHECK(member.exit_code == 0);
  CHECK(json::parse(member.output)["outcome"]["member"] == true);

  CommandResult miss = run_command(kBin + " check /tmp/gf_cli_f8.arclist --k 3 --min-outdeg 3");
  CHECK(miss.exit_code == 1);
  json mreport = json::parse(miss.output);
  CHECK(mreport["outcome"]["member"] == false);
  CHECK(mreport["outcome"]["reason"] == "min out-degree 2");

  run_command(kBin + " construct circulant --n 4 --jumps 1 -o /tmp/gf_c4.arclist");
  CommandResult c4 = run_command(kBin + " check /tmp/gf_c4.arclist --k 3 --min-outdeg 2");
  CHECK(c4.exit_code == 1);
  CHECK(json::parse(c4.output)["outcome"]["reason"] == "min out-degree 1");

  CHECK(run_command(kBin + " check /tmp/does_not_exist.arclist --k 3").exit_code == 3);
  CHECK(run_command(kBin + " check").exit_code == 2);
  CHECK(run_command(kBin + " frobnicate").exit_code == 2);
}

TEST_CASE("cli: search emits a report and one arclist per class") {
  CommandResult r = run_command(
      kBin + " search --n 7 --k 3 --xi 2 --zeta 1 --mode exact --workers 2 --out-dir /tmp");
  REQUIRE(r.exit_code == 0);
  json report = json::parse(r.output);
  CHECK(report["outcome"]["phi"] == 14);
  CHECK(report["outcome"]["status"] == "proved");
  REQUIRE(report["outcome"]["files"].size() == 1);
  Digraph d = read_arclist_file(report["outcome"]["files"][0]);
  CHECK(in_class(d, {7, 3, 2, 1}));
  CHECK(are_isomorphic(d, circulant(7, {1, 2})));

  CommandResult e = run_command(kBin + " search --n 5 --k 3 --xi 2 --zeta 1 --mode emptiness");
  CHECK(e.exit_code == 0);
  CHECK(json::parse(e.output)["outcome"]["status"] == "empty");

  CHECK(run_command(kBin + " search --n 40 --k 3 --mode exact").exit_code == 2);
}

TEST_CASE("cli: identical search reports modulo timing") {
  std::string cmd = kBin + " search --n 6 --k 3 --xi 1 --zeta 1 --mode exact --workers 2 --out-dir /tmp";
  json a = json::parse(run_command(cmd).output);
  json b = json::parse(run_command(cmd).output);
  a.erase("timing");
  b.erase("timing");
  CHECK(a.dump() == b.dump());
}
