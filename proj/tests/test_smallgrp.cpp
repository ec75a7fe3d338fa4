#include <numeric>
#include <random>
#include <set>

#include "charq/error.hpp"
#include "charq/smallgrp.hpp"
#include "doctest.h"

using namespace charq;

namespace {

// Direct computation for Z/n: generating vectors mod unit scaling, moves as integer matrices.
std::pair<size_t, size_t> cyclic_oracle(int n) {
  auto norm = [n](int a, int b) {
    std::pair<int, int> best{n, n};
    for (int u = 1; u <= n; ++u)
      if (std::gcd(u, n) == 1) best = std::min(best, {(a * u) % n, (b * u) % n});
    return best;
  };
  std::set<std::pair<int, int>> classes;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (std::gcd(std::gcd(a, b), n) == 1) classes.insert(norm(a, b));
  if (n == 1) classes.insert({0, 0});
  std::set<std::pair<int, int>> done;
  size_t orbits = 0, fixed = 0;
  for (auto c : classes) {
    if (done.count(c)) continue;
    ++orbits;
    std::vector<std::pair<int, int>> queue{c};
    done.insert(c);
    for (size_t i = 0; i < queue.size(); ++i) {
      auto [a, b] = queue[i];
      for (auto img : {norm((n - a) % n, b), norm(b, a), norm((n - a) % n, (a + b) % n)})
        if (done.insert(img).second) queue.push_back(img);
    }
    if (queue.size() == 1) ++fixed;
  }
  return {orbits, fixed};
}

}  // namespace

TEST_CASE("permutation models") {
  std::map<std::string, size_t> want = {{"A5", 60},       {"S5", 120},     {"A6", 360},     {"PSL2_7", 168},
                                        {"PSL2_8", 504},  {"PSL2_11", 660}, {"PSL2_13", 1092}, {"PSU3_2", 72},
                                        {"trivial", 1},   {"Z2", 2},       {"Z12", 12}};
  for (const auto& [name, order] : want) {
    CAPTURE(name);
    CHECK(PermGroup::load(name).order() == order);
  }
  PermGroup a5 = PermGroup::load("A5");
  CHECK(a5.class_count() == 5);
  size_t total = 0;
  for (unsigned c = 0; c < a5.class_count(); ++c) {
    total += a5.class_size(c);
    CHECK(a5.centralizer(c).size() * a5.class_size(c) == 60);
  }
  CHECK(total == 60);
  for (size_t x = 0; x < 60; ++x) {
    auto e = static_cast<PermGroup::Elt>(x);
    CHECK(a5.conj(a5.to_rep(e), e) == a5.class_rep(a5.class_of(e)));
    CHECK(a5.mul(e, a5.inv(e)) == 0);
  }
  auto g = a5.parse_element("(1,2,3)");
  CHECK(a5.str(g) == "(1,2,3)");
  CHECK(a5.elt_order(g) == 3);
  // left-to-right composition: (1,2)(2,3) sends 1 -> 2 -> 3
  PermGroup s5 = PermGroup::load("S5");
  CHECK(s5.str(s5.mul(s5.parse_element("(1,2)"), s5.parse_element("(2,3)"))) == "(1,3,2)");
  CHECK(s5.parse_element("(1,2)(2,3)") == s5.parse_element("(1,3,2)"));
  CHECK_THROWS_AS(a5.parse_element("(1,2)"), Error);
  CHECK_THROWS_AS(PermGroup::parse("3\n(1,4)"), Error);
  CHECK_THROWS_AS(PermGroup::load("A6", 100), CapExceeded);
  CHECK_THROWS_AS(PermGroup::load("no_such_group"), Error);
}

TEST_CASE("generating pairs") {
  CHECK(generating_pairs(PermGroup::load("Z2")).size() == 3);
  CHECK(generating_pairs(PermGroup::load("trivial")).size() == 1);
  PermGroup a5 = PermGroup::load("A5");
  auto all = generating_pairs(a5);
  CHECK(all.size() == 2280);
  CHECK(generating_pairs(a5, 4).size() == 2280);
  CHECK(count_generating_pairs(a5, class_rep_pairs(a5)) == 2280);
  for (const char* name : {"PSU3_2", "PSL2_7", "S5", "A6"}) {
    PermGroup g = PermGroup::load(name);
    CAPTURE(name);
    CHECK(count_generating_pairs(g, class_rep_pairs(g)) == generating_pairs(g).size());
  }
}

TEST_CASE("pair equivalences") {
  PermGroup a5 = PermGroup::load("A5");
  auto pairs = generating_pairs(a5);
  std::mt19937 rng(5);
  for (int i = 0; i < 200; ++i) {
    GenPair p = pairs[rng() % pairs.size()];
    auto h = static_cast<PermGroup::Elt>(rng() % 60);
    GenPair q{a5.conj(h, p.a), a5.conj(h, p.b)};
    CHECK(pair_isomorphic(a5, p, p));
    CHECK(pair_isomorphic(a5, p, q));
    auto w = pair_conjugate(a5, p, q);
    REQUIRE(w);
    CHECK(a5.conj(*w, p.a) == q.a);
    CHECK(a5.conj(*w, p.b) == q.b);
    CHECK(*pair_conjugate(a5, p, p) == 0);
    CHECK(inn_normal_form(a5, p) == inn_normal_form(a5, q));
    // Inn is contained in Aut; isomorphism is symmetric
    GenPair r = pairs[rng() % pairs.size()];
    if (pair_conjugate(a5, p, r)) CHECK(pair_isomorphic(a5, p, r));
    CHECK(pair_isomorphic(a5, p, r) == pair_isomorphic(a5, r, p));
  }
  // orders (2,3) against (5,5)
  GenPair p23{}, p55{};
  for (auto p : pairs) {
    if (a5.elt_order(p.a) == 2 && a5.elt_order(p.b) == 3) p23 = p;
    if (a5.elt_order(p.a) == 5 && a5.elt_order(p.b) == 5) p55 = p;
  }
  CHECK_FALSE(pair_isomorphic(a5, p23, p55));
  CHECK_FALSE(pair_conjugate(a5, p23, p55));
}

TEST_CASE("nielsen moves") {
  PermGroup a5 = PermGroup::load("A5");
  for (auto p : class_rep_pairs(a5)) {
    auto m = nielsen_moves(a5, p);
    CHECK(m[0] == GenPair{a5.inv(p.a), p.b});
    CHECK(nielsen_moves(a5, m[0])[0] == p);
    CHECK(nielsen_moves(a5, m[1])[1] == p);
    for (auto q : m) CHECK(a5.generates(q.a, q.b));
    // the same moves through the free-group automorphism route
    CHECK(apply_aut(a5, {FreeWord::x().inverse(), FreeWord::y()}, p) == m[0]);
    CHECK(apply_aut(a5, {FreeWord::x().inverse(), FreeWord::x() * FreeWord::y()}, p) == m[2]);
  }
}

TEST_CASE("A5 classes and orbits") {
  PermGroup a5 = PermGroup::load("A5");
  CHECK(epi_classes(a5, EpiMode::ModAut).size() == 19);
  CHECK(epi_classes(a5, EpiMode::ModInn).size() == 38);
  auto res = aut_f2_analysis(a5);
  CHECK(res.pair_count == 2280);
  CHECK(res.aut_class_count == 19);
  CHECK(res.inn_class_count == 38);
  CHECK(res.orbit_count == 2);
  CHECK(res.orbit_sizes == std::vector<size_t>{10, 9});
  CHECK(res.fixed_classes.empty());

  // greedy dedup over every pair gives the same class count
  auto all = generating_pairs(a5);
  std::vector<GenPair> reps;
  for (auto p : all) {
    bool seen = false;
    for (auto r : reps)
      if (pair_isomorphic(a5, r, p)) {
        seen = true;
        break;
      }
    if (!seen) reps.push_back(p);
  }
  CHECK(reps.size() == 19);
  // each class representative is the least enumerated member of its class
  EpiClassifier cls(a5, EpiMode::ModAut);
  for (auto p : class_rep_pairs(a5)) CHECK(!(p < cls.classes()[cls.find(p)].rep));
}

TEST_CASE("cyclic groups against the linear oracle") {
  for (int n = 1; n <= 12; ++n) {
    PermGroup g = PermGroup::load(n == 1 ? "trivial" : "Z" + std::to_string(n));
    auto res = aut_f2_analysis(g);
    auto [orbits, fixed] = cyclic_oracle(n);
    CAPTURE(n);
    CHECK(res.orbit_count == orbits);
    CHECK(res.fixed_classes.size() == fixed);
  }
  auto z2 = aut_f2_analysis(PermGroup::load("Z2"));
  CHECK(z2.aut_class_count == 3);
  CHECK(z2.inn_class_count == 3);
  CHECK(z2.orbit_count == 1);
  CHECK(z2.fixed_classes.empty());
}

TEST_CASE("no fixed classes for small simple groups") {
  for (const char* name : {"PSL2_7", "PSU3_2", "PSL2_8", "A6"}) {
    auto res = aut_f2_analysis(PermGroup::load(name), 4);
    CAPTURE(name);
    CHECK(res.fixed_classes.empty());
  }
}
