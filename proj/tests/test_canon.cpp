#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "girthforge/canon.hpp"
#include "girthforge/construct.hpp"
#include "girthforge/oracle.hpp"

using namespace girthforge;

TEST_CASE("canonical bytes are invariant under relabeling") {
  std::mt19937_64 rng(17);
  std::vector<Digraph> graphs = {circulant(7, {1, 2}), f8(), strong_tournament(6)};
  for (int i = 0; i < 17; ++i)
    graphs.push_back(oracle::random_digraph(3 + static_cast<int>(rng() % 7), rng, 0.3));

  for (const Digraph& d : graphs) {
    auto reference = canonical_form(d).bytes;
    for (int rep = 0; rep < 100; ++rep) {
      Digraph shuffled = oracle::relabel(d, oracle::random_permutation(d.order(), rng));
      CHECK(canonical_form(shuffled).bytes == reference);
    }
  }
}

TEST_CASE("relabeling in the form reproduces the bytes") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    Digraph d = oracle::random_digraph(2 + static_cast<int>(rng() % 7), rng, 0.35);
    CanonicalForm form = canonical_form(d);
    CHECK(adjacency_bytes(oracle::relabel(d, form.relabeling)) == form.bytes);
  }
}

TEST_CASE("canonicalization is idempotent") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    Digraph d = oracle::random_digraph(2 + static_cast<int>(rng() % 7), rng, 0.3);
    CanonicalForm form = canonical_form(d);
    Digraph canon = oracle::relabel(d, form.relabeling);
    CanonicalForm again = canonical_form(canon);
    std::vector<int> identity(canon.order());
    std::iota(identity.begin(), identity.end(), 0);
    CHECK(again.relabeling == identity);
    CHECK(again.bytes == form.bytes);
  }
}

TEST_CASE("two builds of the same circulant are equal as labeled digraphs") {
  Digraph a = circulant(7, {1, 2});
  Digraph b(7);
  for (int i = 0; i < 7; ++i) {
    b.add_arc(i, (i + 1) % 7);
    b.add_arc(i, (i + 2) % 7);
  }
  CHECK(a == b);
  CHECK(canonical_form(a).bytes == canonical_form(b).bytes);
}

TEST_CASE("cycle reversal composed with relabeling is an isomorphism for C4") {
  Digraph c4 = circulant(4, {1});
  Digraph reversed(4);
  for (auto [u, v] : c4.arcs()) reversed.add_arc(v, u);
  CHECK(are_isomorphic(c4, reversed));
  CHECK(oracle::isomorphic_by_permutations(c4, reversed));
}

TEST_CASE("isomorphism agrees with the permutation oracle") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 120; ++trial) {
    int n = 2 + static_cast<int>(rng() % 6);  // up to 7
    Digraph a = oracle::random_digraph(n, rng, 0.3);
    Digraph b = (trial % 3 == 0) ? oracle::relabel(a, oracle::random_permutation(n, rng))
                                 : oracle::random_digraph(n, rng, 0.3);
    CHECK(are_isomorphic(a, b) == oracle::isomorphic_by_permutations(a, b));
  }
}

TEST_CASE("jump sets 1,2 and 1,4 give isomorphic circulants on 7 vertices") {
  // Multiplying the jumps by 2 maps {1,4} to {2,1} modulo 7.
  Digraph a = circulant(7, {1, 2});
  Digraph b = circulant(7, {1, 4});
  bool oracle_says = oracle::isomorphic_by_permutations(a, b);
  CHECK(oracle_says);
  CHECK(are_isomorphic(a, b) == oracle_says);
}

TEST_CASE("reversing one arc of the 20-arc shape keeps or breaks isomorphism as the oracle says") {
  Digraph a = f8();
  Digraph b = f8();
  b.remove_arc(0, 1);
  b.add_arc(1, 0);
  CHECK(are_isomorphic(a, b) == oracle::isomorphic_by_permutations(a, b));
}

TEST_CASE("circulants are vertex-transitive under rotation") {
  for (int n : {5, 7, 9, 12}) {
    Digraph d = circulant(n, {1, 2});
    std::vector<int> rotation(n);
    for (int v = 0; v < n; ++v) rotation[v] = (v + 1) % n;
    CHECK(canonical_form(oracle::relabel(d, rotation)).bytes == canonical_form(d).bytes);
  }
}

TEST_CASE("dedup keeps the first representative per class in order") {
  Digraph a = circulant(5, {1});
  std::mt19937_64 rng(31);
  Digraph a_shuffled = oracle::relabel(a, oracle::random_permutation(5, rng));
  Digraph b = strong_tournament(5);
  auto out = dedup_isomorphic({a, a_shuffled, b, a});
  REQUIRE(out.size() == 2);
  CHECK(out[0] == a);
  CHECK(out[1] == b);

  CHECK(dedup_isomorphic({}).empty());
}

TEST_CASE("class count of all pair-state digraphs on three vertices") {
  std::vector<Digraph> all;
  oracle::for_each_pair_state_digraph(3, [&](const Digraph& d) { all.push_back(d); });
  REQUIRE(all.size() == 27);
  // Burnside over S3: (27 + 3*3 + 2*3) / 6 = 7 classes.
  CHECK(dedup_isomorphic(all).size() == 7);
}

TEST_CASE("canonical string format") {
  Digraph one(1);
  CHECK(canonical_string(one) == "1:00");
  std::string s = canonical_string(circulant(7, {1, 2}));
  CHECK(s.substr(0, 2) == "7:");
  CHECK(s.size() == 2 + 2 * 7);  // 7 rows of one byte
  CHECK(s == canonical_string(circulant(7, {1, 4})));
}

TEST_CASE("canonical form handles dense symmetric inputs") {
  // Complete biorientation: every permutation is an automorphism; the orbit
  // pruning has to collapse the search.
  Digraph k(8);
  for (int u = 0; u < 8; ++u)
    for (int v = 0; v < 8; ++v)
      if (u != v) k.add_arc(u, v);
  CanonicalForm form = canonical_form(k);
  CHECK(adjacency_bytes(k) == form.bytes);
}
