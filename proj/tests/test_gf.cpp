#include "charq/error.hpp"
#include "charq/gf.hpp"
#include "charq/quad.hpp"
#include "doctest.h"

using namespace charq;

TEST_CASE("conway models match the published table") {
  auto F9 = FiniteField::get(3, 2);
  CHECK(F9->is_conway());
  CHECK(F9->modulus() == std::vector<std::uint32_t>{2, 2, 1});
  CHECK(FiniteField::get(2, 6)->modulus() == std::vector<std::uint32_t>{1, 1, 0, 1, 1, 0, 1});
  CHECK(FiniteField::get(3, 4)->modulus() == std::vector<std::uint32_t>{2, 0, 0, 2, 1});
  CHECK(FiniteField::get(7, 2)->modulus() == std::vector<std::uint32_t>{3, 6, 1});
  CHECK(FiniteField::get(11, 2)->modulus() == std::vector<std::uint32_t>{2, 7, 1});
  CHECK(FiniteField::get(13, 2)->modulus() == std::vector<std::uint32_t>{2, 12, 1});
  CHECK(FiniteField::get(5, 2)->modulus() == std::vector<std::uint32_t>{2, 4, 1});
  // primitive roots of the prime fields
  CHECK(FiniteField::get(7, 1)->gen() == 3);
  CHECK(FiniteField::get(5, 1)->gen() == 2);
  CHECK(FiniteField::get(13, 1)->gen() == 2);
}

TEST_CASE("non-conway fields warn") {
  auto f = FiniteField::get(131, 2);
  CHECK_FALSE(f->is_conway());
  CHECK_FALSE(f->warning().empty());
  CHECK(element_order(*f, f->gen()) == 131 * 131 - 1);
}

TEST_CASE("field axioms on every small field") {
  for (u64 q : prime_powers_upto(64)) {
    auto f = FiniteField::of_order(q);
    CAPTURE(q);
    CHECK(element_order(*f, f->gen()) == q - 1);
    for (FiniteField::Elt a = 0; a < q; ++a) {
      CHECK(f->add(a, f->neg(a)) == 0);
      if (a) {
        CHECK(f->mul(a, f->inv(a)) == 1);
        CHECK(f->z_pow(static_cast<long long>(f->log(a))) == a);
      }
      for (FiniteField::Elt b = 0; b < q; b += 3) {
        CHECK(f->add(a, b) == f->add(b, a));
        CHECK(f->mul(f->add(a, b), a) == f->add(f->mul(a, a), f->mul(b, a)));
      }
    }
  }
}

TEST_CASE("subfield embedding is compatible with the conway models") {
  auto F8 = FiniteField::get(2, 3), F64 = FiniteField::get(2, 6);
  auto F7 = FiniteField::get(7, 1), F49 = FiniteField::get(7, 2);
  for (FiniteField::Elt a = 0; a < 8; ++a)
    for (FiniteField::Elt b = 0; b < 8; ++b) {
      CHECK(embed(*F8, *F64, F8->add(a, b)) == F64->add(embed(*F8, *F64, a), embed(*F8, *F64, b)));
      CHECK(embed(*F8, *F64, F8->mul(a, b)) == F64->mul(embed(*F8, *F64, a), embed(*F8, *F64, b)));
    }
  for (FiniteField::Elt a = 0; a < 7; ++a) {
    CHECK(embed(*F7, *F49, a) == a);  // prime subfield is literal
    CHECK(restrict_to(*F49, *F7, embed(*F7, *F49, a)) == a);
  }
  CHECK_THROWS_AS(restrict_to(*F49, *F7, F49->gen()), Error);
}

TEST_CASE("absolute trace") {
  auto F2 = FiniteField::get(2, 1), F4 = FiniteField::get(2, 2);
  CHECK(absolute_trace(*F2, 1) == 1);
  CHECK(absolute_trace(*F4, 1) == 0);
  CHECK(absolute_trace(*F4, F4->gen()) == 1);
  CHECK(F4->add(F4->gen(), F4->mul(F4->gen(), F4->gen())) == 1);
  CHECK_THROWS_AS(absolute_trace(*FiniteField::get(3, 1), 1), Error);
}

TEST_CASE("element order") {
  auto F49 = FiniteField::get(7, 2), F7 = FiniteField::get(7, 1);
  CHECK(element_order(*F49, 1) == 1);
  CHECK(element_order(*F49, F49->z_pow(6)) == 8);
  CHECK(element_order(*F7, F7->z_pow(2)) == 3);
  CHECK_THROWS_AS(element_order(*F7, 0), Error);
  for (u64 q : {16ull, 27ull, 25ull})
    for (FiniteField::Elt a = 1; a < q; ++a) {
      auto f = FiniteField::of_order(q);
      u64 n = element_order(*f, a);
      CHECK((q - 1) % n == 0);
      CHECK(f->pow(a, static_cast<long long>(n)) == 1);
      for (auto [l, e] : factor(n)) CHECK(f->pow(a, static_cast<long long>(n / l)) != 1);
    }
}

TEST_CASE("quadratic classification") {
  auto F7 = FiniteField::get(7, 1), F5 = FiniteField::get(5, 1), F2 = FiniteField::get(2, 1);
  CHECK(classify_quadratic(*F7, F7->from_int(-1)) == QuadKind::Split);
  CHECK(classify_quadratic(*F5, F5->from_int(-1)) == QuadKind::Inert);
  CHECK(classify_quadratic(*F2, 0) == QuadKind::Ramified);
  for (u64 q : prime_powers_upto(64)) {
    auto f = FiniteField::of_order(q);
    for (FiniteField::Elt s = 0; s < q; ++s) CHECK(classify_quadratic(*f, s) == classify_quadratic_bruteforce(*f, s));
  }
}

TEST_CASE("quadratic algebra") {
  for (u64 q : {5ull, 7ull, 8ull, 9ull, 3ull, 4ull}) {
    auto f = FiniteField::of_order(q);
    for (FiniteField::Elt s = 0; s < q; ++s) {
      QuadAlgebra k(f, s);
      CAPTURE(q);
      CAPTURE(s);
      QElt t = k.t(), tb = k.conj(t);
      CHECK(k.mul(t, tb) == k.one());
      CHECK(k.add(t, tb) == k.from_base(s));
      CHECK(k.conj(k.conj(t)) == t);
      // both roots of T^2 - sT + 1
      for (QElt r : {t, tb}) CHECK(k.add(k.sub(k.mul(r, r), k.mul(k.from_base(s), r)), k.one()) == k.zero());
      for (FiniteField::Elt a = 0; a < q; ++a)
        for (FiniteField::Elt b = 0; b < q; ++b) {
          QElt x{a, b};
          CHECK(k.norm(x) == k.mul(x, k.conj(x)).a);
          if (k.is_unit(x)) CHECK(k.mul(x, k.inv(x)) == k.one());
        }
      if (k.kind() == QuadKind::Split) {
        auto [u, v] = k.split(t);
        CHECK(f->mul(u, v) == 1);
        auto [c1, c2] = k.split(k.conj(t));
        CHECK(c1 == v);
        CHECK(c2 == u);
      }
    }
  }
}

TEST_CASE("inert algebra matches the conway model of the quadratic extension") {
  auto F8 = FiniteField::get(2, 3), F64 = FiniteField::get(2, 6);
  auto t = F64->z_pow(7);
  auto s = restrict_to(*F64, *F8, F64->add(t, F64->pow(t, 8)));
  QuadAlgebra k(F8, s);
  REQUIRE(k.kind() == QuadKind::Inert);
  auto root = inert_root_in(k, *F64);
  CHECK((root == t || root == F64->pow(t, 8)));
  for (FiniteField::Elt a = 0; a < 8; ++a)
    for (FiniteField::Elt b = 0; b < 8; ++b) {
      QElt x{a, b}, y{b, a};
      CHECK(to_big_field(k, *F64, root, k.mul(x, y)) ==
            F64->mul(to_big_field(k, *F64, root, x), to_big_field(k, *F64, root, y)));
    }
}

TEST_CASE("primitive prime divisors") {
  CHECK_FALSE(primitive_prime_divisor(2, 6));
  CHECK(primitive_prime_divisor(2, 4) == 5u);
  CHECK_FALSE(primitive_prime_divisor(3, 2));
  for (u64 a = 2; a <= 20; ++a)
    for (unsigned d = 2; d <= 12; ++d) {
      CAPTURE(a);
      CAPTURE(d);
      auto l = primitive_prime_divisor(a, d);
      bool power_of_two = ((a + 1) & a) == 0;
      bool exception = (a == 2 && d == 6) || (d == 2 && power_of_two);
      CHECK(l.has_value() != exception);
      if (!l) continue;
      CHECK(*l >= d + 1);
      CHECK(powmod(a, d, *l) == 1);
      for (unsigned i = 1; i < d; ++i) CHECK(powmod(a, i, *l) != 1);
      // least such prime: no smaller prime qualifies
      for (u64 m = 2; m < *l && m < 100000; ++m) {
        if (!is_prime(m) || a % m == 0 || powmod(a, d, m) != 1) continue;
        bool earlier = false;
        for (unsigned i = 1; i < d; ++i) earlier |= powmod(a, i, m) == 1;
        CHECK(earlier);
      }
    }
}

TEST_CASE("factorization") {
  u64 n = 16547328ull * 1000003ull;
  u64 prod = 1;
  for (auto [p, e] : factor(n)) {
    CHECK(is_prime(p));
    for (int i = 0; i < e; ++i) prod *= p;
  }
  CHECK(prod == n);
  CHECK(factor(18446744073709551557ull).size() == 1);
}
