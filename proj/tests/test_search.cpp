#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <set>

#include "girthforge/canon.hpp"
#include "girthforge/construct.hpp"
#include "girthforge/oracle.hpp"
#include "girthforge/search.hpp"

using namespace girthforge;

namespace {

struct NaiveAnswer {
  int phi = 0;  // 0 when the class is empty
  std::set<std::string> classes;
};

// Ground truth by walking all 3^(n choose 2) pair-state digraphs.
NaiveAnswer naive_exact(const ClassSpec& spec) {
  NaiveAnswer answer;
  std::vector<Digraph> best;
  oracle::for_each_pair_state_digraph(spec.n, [&](const Digraph& d) {
    if (!in_class(d, spec)) return;
    if (d.arc_count() > answer.phi) {
      answer.phi = d.arc_count();
      best.clear();
    }
    if (d.arc_count() == answer.phi) best.push_back(d);
  });
  for (const Digraph& d : dedup_isomorphic(best)) answer.classes.insert(canonical_string(d));
  return answer;
}

std::set<std::string> class_strings(const SearchOutcome& o) {
  std::set<std::string> out;
  for (const Digraph& d : o.extremal) out.insert(canonical_string(d));
  return out;
}

void check_soundness(const SearchOutcome& o, const ClassSpec& spec) {
  for (const Digraph& d : o.extremal) {
    CHECK(in_class(d, spec));
    if (o.phi) CHECK(d.arc_count() == *o.phi);
  }
}

}  // namespace

TEST_CASE("exact solver matches the naive enumeration oracle at tiny scale") {
  for (int n = 2; n <= 5; ++n)
    for (int k : {2, 3}) {
      ClassSpec spec{n, k, 1, 1};
      NaiveAnswer want = naive_exact(spec);
      SearchParams params;
      params.spec = spec;
      SearchOutcome got = solve(params);
      CAPTURE(n);
      CAPTURE(k);
      if (want.phi == 0) {
        CHECK(got.status == SearchStatus::empty);
        CHECK(got.phi == 0);
      } else {
        REQUIRE(got.status == SearchStatus::proved);
        CHECK(got.phi == want.phi);
        CHECK(class_strings(got) == want.classes);
      }
      check_soundness(got, spec);
    }
}

TEST_CASE("exact solver matches the oracle with degree minima above one") {
  for (int n = 4; n <= 5; ++n)
    for (int xi : {1, 2}) {
      ClassSpec spec{n, 2, xi, 1};
      NaiveAnswer want = naive_exact(spec);
      SearchParams params;
      params.spec = spec;
      SearchOutcome got = solve(params);
      CAPTURE(n);
      CAPTURE(xi);
      if (want.phi == 0) {
        CHECK(got.status == SearchStatus::empty);
      } else {
        REQUIRE(got.status == SearchStatus::proved);
        CHECK(got.phi == want.phi);
        CHECK(class_strings(got) == want.classes);
      }
    }
}

TEST_CASE("the empty classes at small orders") {
  for (int n = 3; n <= 6; ++n) {
    SearchParams params;
    params.spec = {n, 3, 2, 1};
    params.mode = SearchMode::emptiness;
    SearchOutcome o = solve(params);
    CHECK(o.status == SearchStatus::empty);
    CHECK(o.phi == 0);
  }
}

TEST_CASE("seven vertices, out-degree two: the unique extremal circulant") {
  SearchParams params;
  params.spec = {7, 3, 2, 1};
  SearchOutcome o = solve(params);
  REQUIRE(o.status == SearchStatus::proved);
  CHECK(o.phi == 14);
  REQUIRE(o.extremal.size() == 1);
  CHECK(are_isomorphic(o.extremal[0], circulant(7, {1, 2})));
  check_soundness(o, params.spec);
}

TEST_CASE("solver values agree with the closed forms across the small table") {
  for (auto [n, k] : std::vector<std::pair<int, int>>{{4, 3}, {5, 3}, {6, 3}, {7, 3},
                                                      {4, 2}, {5, 2}, {6, 2}}) {
    SearchParams params;
    params.spec = {n, k, 1, 1};
    SearchOutcome o = solve(params);
    CAPTURE(n);
    CAPTURE(k);
    REQUIRE(o.status == SearchStatus::proved);
    CHECK(*o.phi == max_size_min_deg_one(n, k));
  }
}

TEST_CASE("phi is monotone in the degree minima") {
  auto phi_of = [](ClassSpec spec) {
    SearchParams params;
    params.spec = spec;
    SearchOutcome o = solve(params);
    return o.phi.value_or(0);
  };
  CHECK(phi_of({7, 3, 2, 1}) <= phi_of({7, 3, 1, 1}));
  CHECK(phi_of({6, 3, 2, 1}) <= phi_of({6, 3, 1, 1}));
  CHECK(phi_of({5, 2, 2, 2}) <= phi_of({5, 2, 2, 1}));
}

TEST_CASE("results are identical for one and four workers") {
  for (ClassSpec spec : {ClassSpec{7, 3, 2, 1}, ClassSpec{6, 3, 1, 1}}) {
    SearchParams one;
    one.spec = spec;
    one.workers = 1;
    SearchParams four = one;
    four.workers = 4;
    SearchOutcome a = solve(one);
    SearchOutcome b = solve(four);
    CHECK(a.status == b.status);
    CHECK(a.phi == b.phi);
    CHECK(class_strings(a) == class_strings(b));
  }
  // Witness mode with a fixed seed picks the same witness for any worker count.
  SearchParams w;
  w.spec = {7, 3, 2, 1};
  w.mode = SearchMode::witness;
  w.target_arcs = 14;
  w.seed = 5;
  SearchOutcome a = solve(w);
  w.workers = 4;
  SearchOutcome b = solve(w);
  REQUIRE(a.status == SearchStatus::witness_found);
  REQUIRE(b.status == SearchStatus::witness_found);
  CHECK(canonical_string(a.extremal[0]) == canonical_string(b.extremal[0]));
  CHECK(a.extremal[0] == b.extremal[0]);
}

TEST_CASE("disabling any single pruning rule changes nothing on the regression suite") {
  std::vector<ClassSpec> suite = {{5, 3, 1, 1}, {6, 3, 1, 1}, {6, 3, 2, 1}, {7, 3, 2, 1}};
  for (const ClassSpec& spec : suite) {
    SearchParams base;
    base.spec = spec;
    SearchOutcome reference = solve(base);
    for (int toggle = 0; toggle < 5; ++toggle) {
      SearchParams params = base;
      switch (toggle) {
        case 0: params.tuning.prune_cycle = false; break;
        case 1: params.tuning.prune_gamma = false; break;
        case 2: params.tuning.prune_degree = false; break;
        case 3: params.tuning.prune_strong = false; break;
        case 4: params.tuning.normalize_vertex0 = false; break;
      }
      SearchOutcome o = solve(params);
      CAPTURE(spec.n);
      CAPTURE(toggle);
      CHECK(o.status == reference.status);
      CHECK(o.phi == reference.phi);
      CHECK(class_strings(o) == class_strings(reference));
    }
  }
}

TEST_CASE("witness mode finds targets and proves their absence") {
  SearchParams params;
  params.spec = {7, 3, 2, 1};
  params.mode = SearchMode::witness;
  params.target_arcs = 14;
  SearchOutcome hit = solve(params);
  REQUIRE(hit.status == SearchStatus::witness_found);
  CHECK(hit.extremal[0].arc_count() >= 14);
  CHECK(in_class(hit.extremal[0], params.spec));

  params.target_arcs = 15;  // above the maximum: exhaustion, not timeout
  SearchOutcome miss = solve(params);
  CHECK(miss.status == SearchStatus::empty);
}

TEST_CASE("guardrails and parameter validation") {
  SearchParams params;
  params.spec = {13, 3, 2, 1};
  CHECK_THROWS_AS(solve(params), std::invalid_argument);

  params.spec = {7, 3, 2, 1};
  params.mode = SearchMode::witness;
  CHECK_THROWS_AS(solve(params), std::invalid_argument);  // no target

  params.target_arcs = 14;
  params.gamma_budget = 5;  // inconsistent with the target
  CHECK_THROWS_AS(solve(params), std::invalid_argument);

  params.gamma_budget.reset();
  params.workers = 0;
  CHECK_THROWS_AS(solve(params), std::invalid_argument);
}

TEST_CASE("timeout reports resumability only with a checkpoint") {
  SearchParams params;
  params.spec = {8, 3, 1, 1};
  params.time_limit_seconds = 0.02;
  SearchOutcome o = solve(params);
  if (o.status == SearchStatus::timeout) {
    CHECK(!o.resumable);
  } else {
    WARN_MESSAGE(true, "machine finished the search inside the timeout; nothing to check");
  }
}

TEST_CASE("checkpointed search resumes to the same answer") {
  const std::string path = "/tmp/girthforge_test.ck";
  std::remove(path.c_str());

  SearchParams full;
  full.spec = {8, 3, 2, 1};
  full.workers = 2;
  SearchOutcome want = solve(full);
  REQUIRE(want.status == SearchStatus::proved);

  SearchParams interrupted = full;
  interrupted.checkpoint_path = path;
  interrupted.time_limit_seconds = 0.05;
  interrupted.tuning.checkpoint_period_seconds = 1;
  SearchOutcome first = solve(interrupted);

  if (first.status == SearchStatus::timeout) {
    CHECK(first.resumable);
    SearchParams resume = interrupted;
    resume.time_limit_seconds = 0;
    SearchOutcome second = solve(resume);
    REQUIRE(second.status == SearchStatus::proved);
    CHECK(second.phi == want.phi);
    CHECK(class_strings(second) == class_strings(want));
  } else {
    WARN_MESSAGE(true, "search finished before the interrupt; resume path not exercised");
  }

  // A checkpoint written for different parameters must be refused.
  SearchParams other;
  other.spec = {7, 3, 2, 1};
  other.checkpoint_path = path;
  CHECK_THROWS_AS(solve(other), std::runtime_error);
  std::remove(path.c_str());
}

TEST_CASE("a vertex preserving strongness exists wherever the theorem promises one") {
  CHECK(is_strong(remove_vertex(circulant(7, {1, 2}), removable_vertex(circulant(7, {1, 2}))).graph));
  CHECK(is_strong(remove_vertex(f8(), removable_vertex(f8())).graph));

  CHECK_THROWS_AS(removable_vertex(circulant(5, {1})), std::invalid_argument);  // out-degree 1

  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 5 + static_cast<int>(rng() % 4);
    Digraph d = oracle::random_strong_min_out2(n, rng);
    int v = removable_vertex(d);
    CHECK(is_strong(remove_vertex(d, v).graph));
  }
}

TEST_CASE("conjecture instances at desk scale") {
  CHECK(caccetta_haggkvist_holds(3, 1));
  CHECK(caccetta_haggkvist_holds(6, 2));
  CHECK(caccetta_haggkvist_holds(7, 2));
  CHECK(behzad_chartrand_wall_holds(4, 1));
  CHECK(behzad_chartrand_wall_holds(8, 2));
  // Containment: emptiness of the (r,1) class implies emptiness of (r,r).
  for (auto [n, r] : std::vector<std::pair<int, int>>{{6, 2}, {7, 2}, {4, 1}})
    if (caccetta_haggkvist_holds(n, r)) CHECK(behzad_chartrand_wall_holds(n, r));

  CHECK_THROWS_AS(caccetta_haggkvist_holds(13, 2), std::invalid_argument);
  CHECK_THROWS_AS(caccetta_haggkvist_holds(6, 6), std::invalid_argument);
}
