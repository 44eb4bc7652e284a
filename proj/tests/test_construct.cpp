#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "girthforge/canon.hpp"
#include "girthforge/construct.hpp"
#include "girthforge/digraph.hpp"

using namespace girthforge;

TEST_CASE("circulant shapes") {
  Digraph d = circulant(7, {1, 2});
  CHECK(d.arc_count() == 14);
  DegreeProfile p = DegreeProfile::of(d);
  CHECK(p.min_out == 2);
  CHECK(p.max_out == 2);
  CHECK(p.min_in == 2);
  CHECK(p.max_in == 2);
  CHECK(in_class(d, {7, 3, 2, 1}));

  Digraph c4 = circulant(4, {1});
  CHECK(c4.arc_count() == 4);
  CHECK(girth(c4) == 4);

  CHECK_THROWS_AS(circulant(4, {}), std::invalid_argument);
  CHECK_THROWS_AS(circulant(4, {0}), std::invalid_argument);
  CHECK_THROWS_AS(circulant(4, {4}), std::invalid_argument);
  CHECK_THROWS_AS(circulant(1, {1}), std::invalid_argument);
}

TEST_CASE("the 20-arc shape on eight vertices") {
  Digraph d = f8();
  CHECK(d.arc_count() == 20);
  CHECK(in_class(d, {8, 3, 2, 1}));
  CHECK(gamma(d) == 8);
  for (int v = 0; v < 8; ++v) {
    if (v % 2 == 0) {
      CHECK(d.out_degree(v) == 3);
      CHECK(d.in_degree(v) == 2);
    } else {
      CHECK(d.out_degree(v) == 2);
      CHECK(d.in_degree(v) == 3);
    }
  }
}

TEST_CASE("strong tournaments") {
  CHECK(are_isomorphic(strong_tournament(3), circulant(3, {1})));
  Digraph t5 = strong_tournament(5);
  CHECK(t5.arc_count() == 10);
  CHECK(is_strong(t5));
  CHECK(gamma(t5) == 0);
  CHECK(in_class(t5, {5, 2, 1, 1}));
  CHECK_THROWS_AS(strong_tournament(2), std::invalid_argument);

  for (int n = 3; n <= 10; ++n) {
    Digraph t = strong_tournament(n);
    CHECK(t.arc_count() == pairs_of(n));
    CHECK(t.arc_count() == max_size_min_deg_one(n, 2));
    CHECK(is_strong(t));
  }
}

TEST_CASE("closed-form value tables") {
  CHECK(max_size_min_deg_one(7, 3) == 16);
  CHECK(max_size_min_deg_one(5, 3) == 7);
  CHECK(cycle_forcing_size(7, 3) == 17);
  for (int n = 4; n <= 64; ++n) CHECK(max_size_min_deg_one(n, 3) == pairs_of(n - 1) + 1);
  for (int n = 3; n <= 64; ++n) CHECK(max_size_min_deg_one(n, 2) == pairs_of(n));
  for (int k = 2; k <= 6; ++k)
    for (int n = k + 1; n <= 64; ++n)
      CHECK(max_size_min_deg_one(n, k) == cycle_forcing_size(n, k) - 1);
  CHECK_THROWS_AS(cycle_forcing_size(3, 3), std::invalid_argument);
  CHECK_THROWS_AS(cycle_forcing_size(5, 1), std::invalid_argument);

  CHECK(max_size_out2_in1(7) == 14);
  CHECK(max_size_out2_in1(8) == 20);
  CHECK(max_size_out2_in1(9) == 26);
  CHECK(max_size_out2_in1(10) == 34);
  CHECK(max_size_out2_in1(11) == 43);
  for (int n = 1; n <= 6; ++n) CHECK(max_size_out2_in1(n) == 0);
  CHECK_THROWS_AS(max_size_out2_in1(0), std::invalid_argument);
}

TEST_CASE("layered family: base cases") {
  FamilyParams p = smallest_d5(4);
  Digraph d = build_family(p);
  CHECK(d.order() == 4);
  CHECK(d.arc_count() == 4);
  CHECK(are_isomorphic(d, circulant(4, {1})));

  Digraph d5 = build_family(smallest_d5(5));
  CHECK(d5.order() == 5);
  CHECK(d5.arc_count() == 7);  // pairs_of(4) + 1
  CHECK(in_class(d5, {5, 3, 1, 1}));
}

TEST_CASE("layered family: every valid shape passes its self-check") {
  auto check = [](const FamilyParams& p) {
    Digraph d = build_family(p);
    int n = p.order();
    CAPTURE(family_name(p.family));
    CAPTURE(n);
    CHECK(d.arc_count() == pairs_of(n - 1) + 1);
    CHECK(gamma(d) == n - 2);
    CHECK(in_class(d, {n, 3, 1, 1}));
    CHECK(d.arc_count() + gamma(d) == pairs_of(n));
  };

  FamilyParams d1;
  d1.family = Family::D1;
  d1.orders = {4, 4};
  check(d1);
  d1.orders = {5, 4};
  check(d1);

  FamilyParams d2;
  d2.family = Family::D2;
  d2.orders = {4, 1, 4};
  check(d2);
  d2.orders = {4, 1, 1, 4};
  d2.y_size = 1;
  check(d2);
  d2.x_size = 1;
  check(d2);

  FamilyParams d3;
  d3.family = Family::D3;
  d3.orders = {4, 1, 1};
  check(d3);
  d3.orders = {4, 1, 1, 1};  // two middles
  d3.y_size = 2;
  check(d3);
  d3.y_size = 0;
  d3.x_size = 1;  // one hub out-neighbor, one unattached middle
  check(d3);

  FamilyParams d4;
  d4.family = Family::D4;
  d4.orders = {1, 1, 4};
  check(d4);
  d4.x_size = 1;
  check(d4);

  FamilyParams d5;
  d5.family = Family::D5;
  for (int middles = 1; middles <= 5; ++middles) {
    d5.orders.assign(middles + 2, 1);
    for (int x = 0; x + 1 <= middles; ++x) {
      d5.x_size = x;
      check(d5);
    }
    d5.x_size = 0;
  }
}

TEST_CASE("layered family: nested overrides") {
  FamilyParams inner = smallest_d5(6);
  FamilyParams p;
  p.family = Family::D3;
  p.orders = {5, 1, 1};
  p.head_sub = std::make_shared<FamilyParams>(inner);
  Digraph d = build_family(p);
  CHECK(d.order() == 8);
  CHECK(d.arc_count() == pairs_of(7) + 1);
  CHECK(in_class(d, {8, 3, 1, 1}));
}

TEST_CASE("layered family: invalid parameters are rejected") {
  FamilyParams p;
  p.family = Family::D1;
  p.orders = {4};
  CHECK_THROWS_AS(build_family(p), std::invalid_argument);
  p.orders = {4, 1};
  CHECK_THROWS_AS(build_family(p), std::invalid_argument);
  p.orders = {4, 3};
  CHECK_THROWS_AS(build_family(p), std::invalid_argument);

  FamilyParams d5;
  d5.family = Family::D5;
  d5.orders = {1, 1, 1};
  d5.y_size = 1;  // leading in-neighbor would have no in-arc
  CHECK_THROWS_AS(build_family(d5), std::invalid_argument);
  d5.y_size = 0;
  d5.x_size = 1;  // trailing out-neighbor would have no out-arc
  CHECK_THROWS_AS(build_family(d5), std::invalid_argument);

  FamilyParams bad_sub;
  bad_sub.family = Family::D3;
  bad_sub.orders = {4, 1, 1};
  bad_sub.head_sub = std::make_shared<FamilyParams>(smallest_d5(6));  // wrong order
  CHECK_THROWS_AS(build_family(bad_sub), std::invalid_argument);
}

TEST_CASE("hub degrees in layered members with large ends") {
  FamilyParams p;
  p.family = Family::D1;
  p.orders = {4, 4};
  Digraph d = build_family(p);
  int hub = d.order() - 1;
  VertexSet head = set_of({0, 1, 2, 3});
  VertexSet tail = set_of({4, 5, 6, 7});
  CHECK(set_size(d.out_set(hub) & head) == 1);
  CHECK(set_size(d.in_set(hub) & head) == 2);   // n_1 - 2
  CHECK(set_size(d.out_set(hub) & tail) == 2);  // n_h - 2
  CHECK(set_size(d.in_set(hub) & tail) == 1);
}
