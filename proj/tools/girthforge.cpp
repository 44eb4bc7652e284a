// Command-line workbench: build the explicit digraph families, check class
// membership of arclist files, run exact/witness/emptiness searches, and run
// the verification battery.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O error.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <iostream>
#include <thread>

#include "girthforge/arclist.hpp"
#include "girthforge/canon.hpp"
#include "girthforge/classify.hpp"
#include "girthforge/construct.hpp"
#include "girthforge/report.hpp"
#include "girthforge/search.hpp"
#include "girthforge/verify.hpp"

namespace gf = girthforge;
using nlohmann::json;
using Clock = std::chrono::steady_clock;

namespace {

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> values;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    try {
      size_t pos = 0;
      values.push_back(std::stoi(token, &pos));
      if (pos != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("bad ") + what + " entry '" + token + "'");
    }
  }
  if (values.empty()) throw std::invalid_argument(std::string(what) + " list is empty");
  return values;
}

json profile_json(const gf::Digraph& d) {
  gf::DegreeProfile prof = gf::DegreeProfile::of(d);
  auto g = gf::girth(d);
  return json{{"n", d.order()},
              {"arcs", d.arc_count()},
              {"girth", g ? json(*g) : json(nullptr)},
              {"strong", gf::is_strong(d)},
              {"gamma", gf::gamma(d)},
              {"min_out_degree", prof.min_out},
              {"min_in_degree", prof.min_in},
              {"min_degree", prof.min_degree},
              {"canonical", gf::canonical_string(d)}};
}

std::vector<std::string> echo_args(int argc, char** argv) {
  return std::vector<std::string>(argv, argv + argc);
}

struct ConstructOptions {
  std::string kind;
  int n = 0;
  std::string jumps;
  std::string family = "D5";
  std::string orders;
  int x_size = 0;
  int y_size = 0;
  std::string out_path;
  int check_k = 0;
  int min_out = 1;
  int min_in = 1;
};

int run_construct(const ConstructOptions& opt, const std::vector<std::string>& echo) {
  auto t0 = Clock::now();
  gf::Digraph d(1);
  std::string default_name;
  json params{{"kind", opt.kind}};

  if (opt.kind == "circulant") {
    if (opt.n == 0) throw std::invalid_argument("circulant needs --n");
    std::vector<int> jumps = parse_int_list(opt.jumps, "jump");
    d = gf::circulant(opt.n, jumps);
    params["n"] = opt.n;
    params["jumps"] = jumps;
    default_name = "circulant_n" + std::to_string(opt.n);
    for (size_t i = 0; i < jumps.size(); ++i)
      default_name += (i ? "-" : "_j") + std::to_string(jumps[i]);
  } else if (opt.kind == "f8") {
    d = gf::f8();
    default_name = "f8";
  } else if (opt.kind == "tournament") {
    if (opt.n == 0) throw std::invalid_argument("tournament needs --n");
    d = gf::strong_tournament(opt.n);
    params["n"] = opt.n;
    default_name = "tournament_n" + std::to_string(opt.n);
  } else if (opt.kind == "phi31") {
    gf::FamilyParams fp;
    fp.family = gf::family_from_name(opt.family);
    fp.orders = parse_int_list(opt.orders, "order");
    fp.x_size = opt.x_size;
    fp.y_size = opt.y_size;
    d = gf::build_family(fp);
    params["family"] = opt.family;
    params["orders"] = fp.orders;
    params["x_size"] = fp.x_size;
    params["y_size"] = fp.y_size;
    default_name = "phi31_" + opt.family;
    for (size_t i = 0; i < fp.orders.size(); ++i)
      default_name += (i ? "-" : "_") + std::to_string(fp.orders[i]);
  } else {
    throw std::invalid_argument("unknown construction kind '" + opt.kind + "'");
  }

  std::string path = opt.out_path.empty() ? default_name + ".arclist" : opt.out_path;
  gf::write_arclist_file(d, path);

  json outcome{{"file", path}, {"profile", profile_json(d)}};
  int k = opt.check_k;
  if (k == 0) {
    if (opt.kind == "f8" || opt.kind == "phi31") k = 3;
    if (opt.kind == "tournament") k = 2;
  }
  if (k != 0) {
    gf::ClassSpec spec{d.order(), k, opt.min_out, opt.min_in};
    if (opt.kind == "f8") spec.min_out = 2;
    outcome["class"] = gf::to_json(spec);
    outcome["member"] = gf::in_class(d, spec);
  }
  double dt = std::chrono::duration<double>(Clock::now() - t0).count();
  std::cout << gf::dump_report(gf::run_report(echo, params, outcome, dt));
  return 0;
}

struct CheckOptions {
  std::string file;
  int k = 3;
  int min_out = 1;
  int min_in = 1;
};

int run_check(const CheckOptions& opt, const std::vector<std::string>& echo) {
  auto t0 = Clock::now();
  gf::Digraph d = gf::read_arclist_file(opt.file);
  gf::ClassSpec spec{d.order(), opt.k, opt.min_out, opt.min_in};
  gf::DegreeProfile prof = gf::DegreeProfile::of(d);

  json outcome{{"file", opt.file}, {"profile", profile_json(d)}, {"class", gf::to_json(spec)}};
  bool member = gf::in_class(d, spec);
  outcome["member"] = member;
  if (!member) {
    std::string reason;
    if (auto g = gf::girth(d); g && *g <= opt.k)
      reason = "girth " + std::to_string(*g);
    else if (prof.min_out < opt.min_out)
      reason = "min out-degree " + std::to_string(prof.min_out);
    else if (prof.min_in < opt.min_in)
      reason = "min in-degree " + std::to_string(prof.min_in);
    else if (!gf::is_strong(d))
      reason = "not strong";
    outcome["reason"] = reason;
  }
  double dt = std::chrono::duration<double>(Clock::now() - t0).count();
  std::cout << gf::dump_report(gf::run_report(echo, json{{"k", opt.k},
                                                         {"min_out", opt.min_out},
                                                         {"min_in", opt.min_in}},
                                              outcome, dt));
  return member ? 0 : 1;
}

struct SearchOptions {
  int n = 0, k = 3, xi = 1, zeta = 1;
  std::string mode = "exact";
  int target = -1;
  double time_limit = 0;
  int workers = 0;
  std::string checkpoint;
  std::uint64_t seed = 0;
  std::string out_dir = ".";
  int split_depth = 8;
};

int run_search(const SearchOptions& opt, const std::vector<std::string>& echo) {
  auto t0 = Clock::now();
  gf::SearchParams params;
  params.spec = gf::ClassSpec{opt.n, opt.k, opt.xi, opt.zeta};
  if (opt.mode == "exact")
    params.mode = gf::SearchMode::exact;
  else if (opt.mode == "witness")
    params.mode = gf::SearchMode::witness;
  else if (opt.mode == "emptiness")
    params.mode = gf::SearchMode::emptiness;
  else
    throw std::invalid_argument("unknown mode '" + opt.mode + "'");
  if (opt.target >= 0) params.target_arcs = opt.target;
  params.time_limit_seconds = opt.time_limit;
  params.workers = opt.workers > 0
                       ? opt.workers
                       : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  params.checkpoint_path = opt.checkpoint;
  params.seed = opt.seed;
  params.tuning.split_depth = opt.split_depth;

  gf::SearchOutcome outcome = gf::solve(params);

  json files = json::array();
  for (size_t i = 0; i < outcome.extremal.size(); ++i) {
    std::string name = opt.out_dir + "/extremal_n" + std::to_string(opt.n) + "_k" +
                       std::to_string(opt.k) + "_xi" + std::to_string(opt.xi) + "_zeta" +
                       std::to_string(opt.zeta) + "_c" + std::to_string(i) + ".arclist";
    gf::write_arclist_file(outcome.extremal[i], name);
    files.push_back(name);
  }
  json payload = gf::to_json(outcome);
  payload["files"] = std::move(files);

  json params_json = gf::to_json(params.spec);
  params_json["mode"] = opt.mode;
  params_json["target"] = opt.target >= 0 ? json(opt.target) : json(nullptr);
  params_json["workers"] = params.workers;
  params_json["seed"] = params.seed;
  params_json["split_depth"] = opt.split_depth;

  double dt = std::chrono::duration<double>(Clock::now() - t0).count();
  std::cout << gf::dump_report(gf::run_report(echo, params_json, payload, dt));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"girthforge: exact extremal arc counts for strong digraphs without short cycles"};
  app.set_version_flag("--version", std::string("girthforge ") + gf::kToolVersion);
  app.require_subcommand(1);

  ConstructOptions c;
  CLI::App* construct = app.add_subcommand("construct", "build a named digraph family");
  construct->add_option("kind", c.kind, "circulant | f8 | tournament | phi31")->required();
  construct->add_option("--n", c.n, "order");
  construct->add_option("--jumps", c.jumps, "comma-separated jumps, e.g. 1,2");
  construct->add_option("--family", c.family, "D1..D5 (phi31)");
  construct->add_option("--orders", c.orders, "comma-separated block orders (phi31)");
  construct->add_option("--x-size", c.x_size, "hub out-neighbors among middles (phi31)");
  construct->add_option("--y-size", c.y_size, "hub in-neighbors among middles (phi31)");
  construct->add_option("-o,--out", c.out_path, "output arclist path");
  construct->add_option("--k", c.check_k, "report membership for this cycle bound");
  construct->add_option("--min-outdeg", c.min_out, "membership out-degree minimum");
  construct->add_option("--min-indeg", c.min_in, "membership in-degree minimum");

  CheckOptions ck;
  CLI::App* check = app.add_subcommand("check", "check an arclist file against a class");
  check->add_option("file", ck.file, "arclist v1 file")->required();
  check->add_option("--k", ck.k, "forbidden-cycle bound")->required();
  check->add_option("--min-outdeg", ck.min_out, "out-degree minimum");
  check->add_option("--min-indeg", ck.min_in, "in-degree minimum");

  SearchOptions s;
  CLI::App* search = app.add_subcommand("search", "exact / witness / emptiness search");
  search->add_option("--n", s.n, "order")->required();
  search->add_option("--k", s.k, "forbidden-cycle bound");
  search->add_option("--xi", s.xi, "out-degree minimum");
  search->add_option("--zeta", s.zeta, "in-degree minimum");
  search->add_option("--mode", s.mode, "exact | witness | emptiness");
  search->add_option("--target", s.target, "arc-count goal (witness mode)");
  search->add_option("--time-limit", s.time_limit, "wall-clock seconds, 0 = unlimited");
  search->add_option("--workers", s.workers, "parallel workers")
      ->envname("GIRTHFORGE_WORKERS");
  search->add_option("--checkpoint", s.checkpoint, "checkpoint file (resumes when it exists)");
  search->add_option("--seed", s.seed, "seed for witness-mode restarts");
  search->add_option("--out-dir", s.out_dir, "directory for extremal arclist files");
  search->add_option("--split-depth", s.split_depth, "pairs fixed per parallel subtree");

  std::string tier_name = "fast";
  int verify_workers = 0;
  CLI::App* verify = app.add_subcommand("verify", "run the verification battery");
  verify->add_option("--tier", tier_name, "fast | full");
  verify->add_option("--workers", verify_workers, "parallel workers")
      ->envname("GIRTHFORGE_WORKERS");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    auto echo = echo_args(argc, argv);
    if (construct->parsed()) return run_construct(c, echo);
    if (check->parsed()) return run_check(ck, echo);
    if (search->parsed()) return run_search(s, echo);
    if (verify->parsed()) {
      int workers = verify_workers > 0
                        ? verify_workers
                        : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
      auto results = gf::run_acceptance(gf::tier_from_name(tier_name), workers, &std::cout);
      int passed = 0;
      for (const auto& r : results) passed += r.pass;
      std::cout << passed << "/" << results.size() << " criteria passed\n";
      return gf::all_passed(results) ? 0 : 1;
    }
  } catch (const gf::invariant_violation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
