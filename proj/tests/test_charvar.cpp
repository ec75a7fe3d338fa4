#include <random>

#include "charq/charvar.hpp"
#include "charq/error.hpp"
#include "doctest.h"

using namespace charq;

TEST_CASE("generator actions") {
  auto f5 = FiniteField::get(5, 1);
  CHECK(apply_generator(*f5, 'r', {2, 2, 2}) == TraceTriple{2, 2, 2});
  CHECK(apply_generator(*f5, 'r', {0, 0, 1}) == TraceTriple{0, 0, 4});
  CHECK(apply_generator(*f5, 's', {1, 2, 3}) == TraceTriple{2, 1, 3});
  CHECK(apply_generator(*f5, 't', {1, 2, 3}) == TraceTriple{1, 3, 2});
  CHECK_THROWS_AS(apply_generator(*f5, 'u', {}), Error);
  for (u64 q : {4, 7, 9}) {
    auto f = FiniteField::of_order(q);
    for (FiniteField::Elt x = 0; x < q; ++x)
      for (FiniteField::Elt y = 0; y < q; ++y)
        for (FiniteField::Elt z = 0; z < q; ++z) {
          TraceTriple v{x, y, z};
          for (char g : {'r', 's', 't'}) {
            TraceTriple w = apply_generator(*f, g, v);
            CHECK(apply_generator(*f, g, w) == v);
            CHECK(on_fricke_surface(*f, w) == on_fricke_surface(*f, v));
            // the actions descend to sign-change orbits
            CHECK(canonical(*f, apply_generator(*f, g, canonical(*f, v))) == canonical(*f, w));
          }
        }
  }
}

TEST_CASE("fricke surface") {
  auto f2 = FiniteField::get(2, 1), f5 = FiniteField::get(5, 1), f7 = FiniteField::get(7, 1);
  CHECK(on_fricke_surface(*f5, {2, 2, 2}));
  CHECK(on_fricke_surface(*f2, {0, 0, 0}));
  CHECK_FALSE(on_fricke_surface(*f5, {0, 0, 0}));
  CHECK_FALSE(on_fricke_surface(*f7, {1, 1, 1}));
}

TEST_CASE("traces are conjugation invariant") {
  auto f = FiniteField::get(11, 1);
  std::mt19937 rng(3);
  auto rand_sl2 = [&] {
    for (;;) {
      Mat2 m{FiniteField::Elt(rng() % 11), FiniteField::Elt(rng() % 11), FiniteField::Elt(rng() % 11),
             FiniteField::Elt(rng() % 11)};
      if (f->sub(f->mul(m[0], m[3]), f->mul(m[1], m[2])) == 1) return m;
    }
  };
  auto mul = [&](const Mat2& a, const Mat2& b) {
    return Mat2{f->add(f->mul(a[0], b[0]), f->mul(a[1], b[2])), f->add(f->mul(a[0], b[1]), f->mul(a[1], b[3])),
                f->add(f->mul(a[2], b[0]), f->mul(a[3], b[2])), f->add(f->mul(a[2], b[1]), f->mul(a[3], b[3]))};
  };
  auto inv = [&](const Mat2& a) { return Mat2{a[3], f->neg(a[1]), f->neg(a[2]), a[0]}; };
  auto tr = [&](const Mat2& a) { return f->add(a[0], a[3]); };
  for (int i = 0; i < 100; ++i) {
    Mat2 a = rand_sl2(), b = rand_sl2(), g = rand_sl2();
    Mat2 a2 = mul(mul(g, a), inv(g)), b2 = mul(mul(g, b), inv(g));
    TraceTriple t1{tr(a), tr(b), tr(mul(a, b))}, t2{tr(a2), tr(b2), tr(mul(a2, b2))};
    CHECK(t1 == t2);
    // tr [A, B] = x^2 + y^2 + z^2 - xyz - 2
    auto x = t1.x, y = t1.y, z = t1.z;
    auto fricke = f->sub(f->add(f->add(f->mul(x, x), f->mul(y, y)), f->mul(z, z)), f->mul(f->mul(x, y), z));
    CHECK(tr(mul(mul(a, b), mul(inv(a), inv(b)))) == f->sub(fricke, 2));
  }
}

TEST_CASE("fixed orbits") {
  auto f7 = FiniteField::get(7, 1);
  CHECK(scan_fixed_orbits(*f7) == std::vector<TraceTriple>{{0, 0, 0}, canonical(*f7, {2, 2, 2})});
  CHECK(scan_fixed_orbits(*FiniteField::get(2, 1)) == std::vector<TraceTriple>{{0, 0, 0}});
  CHECK(scan_fixed_orbits(*FiniteField::get(3, 2), 4).size() == 2);
  CHECK_THROWS_AS(scan_fixed_orbits(*f7, 1, 5), CapExceeded);

  auto r7 = classify_fixed(*f7);
  REQUIRE(r7.orbits.size() == 2);
  CHECK(r7.orbits[0].branch == "klein-four");
  CHECK(r7.orbits[0].image_order == 4);
  CHECK(r7.orbits[1].branch == "reducible");
  CHECK(r7.verdict == "NoCharacteristicPSL2Quotient");
  auto r2 = classify_fixed(*FiniteField::get(2, 1));
  REQUIRE(r2.orbits.size() == 1);
  CHECK(r2.orbits[0].on_surface);
  CHECK(r2.verdict == "NoCharacteristicPSL2Quotient");
  for (u64 q : prime_powers_upto(32)) {
    auto r = classify_fixed(*FiniteField::of_order(q));
    CAPTURE(q);
    CHECK(r.expected_orbits);
    CHECK(r.verdict == "NoCharacteristicPSL2Quotient");
  }
}

TEST_CASE("psl2 image orders") {
  auto f5 = FiniteField::get(5, 1);
  // S = [[0,-1],[1,0]], T = [[1,1],[0,1]] generate SL2(5); PSL2(5) has order 60
  CHECK(psl2_image_order(*f5, {Mat2{0, 4, 1, 0}, Mat2{1, 1, 0, 1}}) == 60);
  CHECK(psl2_image_order(*f5, {Mat2{4, 0, 0, 4}}) == 1);
}
