#include <set>

#include "charq/congruence.hpp"
#include "charq/error.hpp"
#include "doctest.h"

using namespace charq;

namespace {

u64 closure_sl2(long long n) {
  std::set<std::array<long long, 4>> seen;
  std::vector<SL2Mat> queue{reduce(SL2Mat{}, n)};
  seen.insert({queue[0].a, queue[0].b, queue[0].c, queue[0].d});
  for (size_t i = 0; i < queue.size(); ++i)
    for (const SL2Mat& g : {SL2Mat{0, -1, 1, 0}, SL2Mat{1, 1, 0, 1}}) {
      SL2Mat m = reduce(queue[i] * g, n);
      if (seen.insert({m.a, m.b, m.c, m.d}).second) queue.push_back(m);
    }
  return queue.size();
}

}  // namespace

TEST_CASE("abelianization of moves") {
  CHECK(abelianize(BraidWord::gen(1)) == SL2Mat{1, -1, 0, 1});
  CHECK(abelianize(BraidWord::gen(2)) == SL2Mat{0, -1, 1, 2});
  CHECK(abelianize(BraidWord::gen(3)) == SL2Mat{1, -1, 0, 1});
  CHECK(abelianize(FreeAut{FreeWord::x().inverse(), FreeWord::y()}) == SL2Mat{-1, 0, 0, 1});
  CHECK(abelianize(FreeAut{FreeWord::y(), FreeWord::x()}).det() == -1);
  CHECK(abelianize(BraidWord::parse("s1^-1")) == SL2Mat{1, 1, 0, 1});
  CHECK(abelianize(BraidWord::parse("s2 s1 s1")) == SL2Mat{0, -1, 1, 0});
  // composition of moves is matrix multiplication
  BraidWord a = BraidWord::parse("s1 s2^-1 s3"), b = BraidWord::parse("s2 s2 s1^-1");
  CHECK(abelianize(a * b) == abelianize(a) * abelianize(b));
  const StWords& w = st_words();
  CHECK(abelianize(w.s) == SL2Mat{0, -1, 1, 0});
  CHECK(abelianize(w.t) == SL2Mat{1, 1, 0, 1});
  SL2Mat s = abelianize(w.s);
  CHECK(s * s * s * s == SL2Mat{});
  CHECK(w.t.letters.size() == 1);
  CHECK(w.s.letters.size() == 3);
}

TEST_CASE("order of SL2(Z/n)") {
  for (long long n = 1; n <= 24; ++n) {
    CAPTURE(n);
    CHECK(sl2_order(n) == closure_sl2(n));
  }
}

TEST_CASE("class actions") {
  PermGroup z2 = PermGroup::load("Z2");
  ClassAction ca = build_class_action(z2, {1, 1});
  CHECK(ca.classes.size() == 3);
  auto r = congruence_degree(ca);
  CHECK(r.index == 3);
  CHECK(r.level == 2);
  CHECK(r.degree == 3);
  CHECK(r.verdict == CongruenceVerdict::Congruence);
  CHECK(r.relations_ok);
  CHECK_THROWS_AS(build_class_action(z2, {0, 0}), Error);

  auto triv = congruence_degree(build_class_action(PermGroup::load("trivial"), {0, 0}));
  CHECK(triv.index == 1);
  CHECK(triv.degree == 1);
  CHECK(triv.verdict == CongruenceVerdict::Congruence);

  // coset words carry the base class to each class
  PermGroup a5 = PermGroup::load("A5");
  auto pairs = class_rep_pairs(a5);
  ClassAction c5 = build_class_action(a5, pairs.front());
  const StWords& w = st_words();
  for (size_t i = 0; i < c5.classes.size(); ++i) {
    GenPair p = c5.classes[0];
    for (char l : c5.coset_word(i)) p = inn_normal_form(a5, apply_aut(a5, xi(l == 'S' ? w.s : w.t), p));
    CHECK(p == c5.classes[i]);
  }
}

TEST_CASE("abelian groups are congruence") {
  for (int n = 2; n <= 8; ++n) {
    auto sv = congruence_survey(PermGroup::load("Z" + std::to_string(n)));
    CAPTURE(n);
    for (const auto& r : sv.results) {
      CHECK(r.verdict == CongruenceVerdict::Congruence);
      CHECK(r.relations_ok);
    }
  }
}

TEST_CASE("simple groups are noncongruence") {
  for (const char* name : {"A5", "PSL2_7"}) {
    PermGroup g = PermGroup::load(name);
    auto sv = congruence_survey(g);
    CAPTURE(name);
    size_t total = 0;
    for (const auto& r : sv.results) {
      // totally noncongruence (degree 1) is the extreme case of noncongruence
      CHECK(r.verdict != CongruenceVerdict::Congruence);
      CHECK(r.degree <= 3);
      CHECK(r.index % r.degree == 0);
      CHECK(r.relations_ok);
      total += r.index;
    }
    CHECK(total == sv.inn_class_count);
  }
  auto a5 = congruence_survey(PermGroup::load("A5"));
  CHECK(a5.inn_class_count == 38);
  CHECK(a5.aut_class_count == 19);
  CHECK(a5.aut_orbit_count == 2);
  // S5 is not simple and lands strictly between the two extremes
  for (const auto& r : congruence_survey(PermGroup::load("S5")).results) {
    CHECK(r.verdict == CongruenceVerdict::Noncongruence);
    CHECK(r.degree == 3);
  }
}

TEST_CASE("result does not depend on the base within its Aut class") {
  PermGroup a5 = PermGroup::load("A5");
  auto pairs = class_rep_pairs(a5);
  EpiClassifier aut(a5, EpiMode::ModAut);
  for (size_t k = 0; k < pairs.size(); k += 37) {
    GenPair p = pairs[k];
    GenPair q = aut.classes()[aut.find(p)].rep;
    auto rp = congruence_degree(build_class_action(a5, p));
    auto rq = congruence_degree(build_class_action(a5, q));
    CHECK(rp.index == rq.index);
    CHECK(rp.level == rq.level);
    CHECK(rp.degree == rq.degree);
  }
}
