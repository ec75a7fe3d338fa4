#include <random>

#include "charq/burau.hpp"
#include "doctest.h"

using namespace charq;
using L = LaurentPoly;

namespace {
const L q = L::q();
const L qi = L::q(-1);

BraidWord random_braid(std::mt19937& rng, int len) {
  std::uniform_int_distribution<int> g(1, 3), sg(0, 1);
  BraidWord w;
  for (int i = 0; i < len; ++i) w.letters.push_back(sg(rng) ? g(rng) : -g(rng));
  return w;
}

FreeWord random_fword(std::mt19937& rng, int len) {
  std::uniform_int_distribution<int> g(1, 2), sg(0, 1);
  std::vector<int> l;
  for (int i = 0; i < len; ++i) l.push_back(sg(rng) ? g(rng) : -g(rng));
  return FreeWord(l);
}
}  // namespace

TEST_CASE("generator images and the matrices of x and y") {
  const auto& b = burau();
  CHECK(eval_braid(BraidWord::parse("s1")) ==
        from_laurent(Mat3<L>::from_rows({{-q, 1, 0}, {0, 1, 0}, {0, 0, 1}})));
  CHECK(b.X == from_laurent(Mat3<L>::from_rows({{-q, 1, 0}, {0, 1, 0}, {0, 1, -qi}})));
  CHECK(b.Y == from_laurent(Mat3<L>::from_rows({{L(1) - q, -qi, qi}, {L(1) - q * q, -qi, 0}, {1, -qi, 0}})));
  CHECK(eval_fword(FreeWord::x()) == b.X);
  CHECK(b.X(0, 0) == Localized(-q));
  CHECK(b.X(0, 1) == Localized(1));
  // y = s2 x s2^-1 as a braid word
  CHECK(eval_braid(BraidWord::parse("s2 s1 s3^-1 s2^-1")) == b.Y);
}

TEST_CASE("braid relations and the centre") {
  CHECK(eval_braid(BraidWord::parse("s1 s2 s1")) == eval_braid(BraidWord::parse("s2 s1 s2")));
  CHECK(eval_braid(BraidWord::parse("s2 s3 s2")) == eval_braid(BraidWord::parse("s3 s2 s3")));
  CHECK(eval_braid(BraidWord::parse("s1 s3")) == eval_braid(BraidWord::parse("s3 s1")));
  RingMatrix3 z = eval_braid(BraidWord::parse("s1 s2 s3 s1 s2 s3 s1 s2 s3 s1 s2 s3"));
  CHECK(z.is_scalar());
  CHECK(z == Localized(L::q(4)) * RingMatrix3::identity());
}

TEST_CASE("hermitian form") {
  const auto& b = burau();
  CHECK(b.H.transpose() == involve(b.H));
  // ((q+1)/q)^3 (q^4-1)/(q-1)
  Localized closed((q + L(1)).pow(3) * L::q(-3) * (q * q * q + q * q + q + L(1)));
  CHECK(b.H.det() == closed);
  for (int i = 0; i < 3; ++i) CHECK(b.rho[i].transpose() * b.H * involve(b.rho[i]) == b.H);
  CHECK(b.O.det() == Localized(-q - L(1)));
  CHECK(b.O.transpose() * b.H * involve(b.O) == b.D);
}

TEST_CASE("eigenbasis and delta") {
  const auto& b = burau();
  auto scale = [](const Localized& c, const RingVector3& v) { return RingVector3{c * v[0], c * v[1], c * v[2]}; };
  CHECK(b.X * b.v1 == b.v1);
  CHECK(b.X * b.v2 == scale(Localized(-q), b.v2));
  CHECK(b.X * b.v3 == scale(Localized(-qi), b.v3));
  CHECK(b.delta * b.X == b.X * b.delta);
  CHECK(b.delta * b.v1 == scale(Localized(-L::q(-2)), b.v1));
  CHECK(b.delta * b.v2 == scale(Localized(qi), b.v2));
  CHECK(b.delta * b.v3 == scale(Localized(L::q(-3)), b.v3));
}

TEST_CASE("alpha bar") {
  const auto& b = burau();
  CHECK(alpha_bar(b.X) == inverse(b.X));
  CHECK(alpha_bar(b.Y) == b.Y);
  CHECK(alpha_bar(RingMatrix3::identity()) == RingMatrix3::identity());
  std::mt19937 rng(5);
  for (int i = 0; i < 10; ++i) {
    FreeWord u = random_fword(rng, 6), v = random_fword(rng, 6);
    CHECK(alpha_bar(eval_fword(u * v)) == alpha_bar(eval_fword(u)) * alpha_bar(eval_fword(v)));
  }
}

TEST_CASE("traces of two words with equal length profile") {
  L t1 = L::from_terms({{5, 1}, {4, -2}, {3, 1}, {2, 1}, {1, -4}, {0, 4}, {-1, -2}, {-2, -1}, {-3, 2}, {-4, -1}});
  L t2 = L::from_terms({{4, -1}, {3, 2}, {2, -1}, {1, -2}, {0, 4}, {-1, -4}, {-2, 1}, {-3, 1}, {-4, -2}, {-5, 1}});
  Localized a = eval_fword(FreeWord::parse("x y x^-2 y^2")).trace();
  Localized c = eval_fword(FreeWord::parse("x^-1 y x^2 y^2")).trace();
  CHECK(a == Localized(t1));
  CHECK(c == Localized(t2));
  CHECK_FALSE(a == c);
}

TEST_CASE("adjoint traces") {
  L ax = trace_ad(FreeWord::x()), ax2 = trace_ad(FreeWord::parse("x^2"));
  CHECK(ax == q * q - L(2) * q + L(2) - L(2) * qi + L::q(-2));
  CHECK(ax2 == L::q(4) + L(2) * q * q + L(2) + L(2) * L::q(-2) + L::q(-4));
  CHECK(ax * ax - ax2 - L(6) * ax == L(-4) * L::q(3) - L(4) * L::q(-3));
  std::mt19937 rng(9);
  for (int i = 0; i < 5; ++i) {
    FreeWord w = random_fword(rng, 5);
    CHECK(trace_ad(w) == trace_ad_explicit(w));
  }
  CHECK(trace_ad_explicit(FreeWord::x()) == ax);
}

TEST_CASE("free words and xi") {
  FreeWord w = FreeWord::parse("x y y^-1 x^-2 y^3");
  CHECK(w.str() == "x^-1 y^3");
  CHECK(w * w.inverse() == FreeWord());
  CHECK(xi_apply(BraidWord::parse("s2"), FreeWord::x()) == FreeWord::y());
  BraidWord center = BraidWord::parse("s1 s2 s3 s1 s2 s3 s1 s2 s3 s1 s2 s3");
  CHECK(xi_apply(center, FreeWord::x()) == FreeWord::x());
  CHECK(xi_apply(center, FreeWord::y()) == FreeWord::y());
  for (int i = 1; i <= 3; ++i) {
    CHECK(xi_letter(i).compose(xi_letter(-i)) == FreeAut::identity());
    CHECK(xi_letter(-i).compose(xi_letter(i)) == FreeAut::identity());
  }
  CHECK(xi(BraidWord::parse("s1 s2")).apply(FreeWord::y()) == xi_apply(BraidWord::parse("s1 s2"), FreeWord::y()));
}

TEST_CASE("xi is conjugation") {
  std::mt19937 rng(1);
  for (int i = 0; i < 20; ++i) {
    BraidWord b = random_braid(rng, 5);
    FreeWord w = random_fword(rng, 6);
    RingMatrix3 m = eval_braid(b);
    CHECK(eval_fword(xi_apply(b, w)) == m * eval_fword(w) * inverse(m));
  }
}

TEST_CASE("determinant one on F and braid-word length") {
  std::mt19937 rng(2);
  for (int i = 0; i < 20; ++i) CHECK(eval_fword(random_fword(rng, 10)).det() == Localized(1));
  BraidWord b = BraidWord::parse("s1 s2 s2^-1 s3^2");
  CHECK(b.word_length() == 3);
  CHECK(BraidWord::parse("s1 s3^2").word_length() == 3);
}
