#include "charq/error.hpp"
#include "charq/mgroup.hpp"
#include "doctest.h"

using namespace charq;

namespace {

struct Model {
  Specialization sp;
  ClosureModel cm;
  PMat x, y;
};

Model model_for(u64 q, Target kind) {
  auto f = FiniteField::of_order(q);
  Specialization sp = specialize(f, choose_s(f, kind).s);
  ClosureModel cm = closure_model(sp);
  PMat x = cm.convert(sp, sp.X), y = cm.convert(sp, sp.Y);
  return {std::move(sp), std::move(cm), x, y};
}

PMat mul(const TableField& f, const PMat& a, const PMat& b) { return mat_mul(f, a, b); }

}  // namespace

TEST_CASE("table field agrees with the finite field") {
  auto f = FiniteField::get(3, 2);
  TableField t = TableField::from_field(*f);
  REQUIRE(t.size() == 9);
  for (unsigned a = 0; a < 9; ++a)
    for (unsigned b = 0; b < 9; ++b) {
      CHECK(t.add(a, b) == f->add(a, b));
      CHECK(t.mul(a, b) == f->mul(a, b));
    }
  for (unsigned a = 1; a < 9; ++a) CHECK(t.mul(a, t.inv(a)) == 1);
  CHECK_THROWS_AS(t.inv(0), Error);
  CHECK_THROWS_AS(TableField::from_field(*FiniteField::get(2, 8)), Error);

  // inert extension of GF(5) by s = -1 is GF(25)
  QuadAlgebra k(FiniteField::get(5, 1), FiniteField::get(5, 1)->from_int(-1));
  TableField e = TableField::from_inert(k);
  REQUIRE(e.size() == 25);
  for (unsigned a = 1; a < 25; ++a) CHECK(e.mul(a, e.inv(a)) == 1);
}

TEST_CASE("pack round trip") {
  PMat m{1, 2, 3, 127, 0, 64, 5, 6, 100};
  CHECK(unpack(pack(m)) == m);
}

TEST_CASE("closure orders") {
  auto f2 = TableField::from_field(*FiniteField::get(2, 1));
  PMat id{1, 0, 0, 0, 1, 0, 0, 0, 1};
  CHECK(closure_order(f2, {id}, 10) == 1);
  // elementary generators give all of SL3(2)
  PMat e12{1, 1, 0, 0, 1, 0, 0, 0, 1}, cyc{0, 0, 1, 1, 0, 0, 0, 1, 0};
  CHECK(closure_order(f2, {e12, cyc}, 1000) == 168);
  CHECK(target_order(GroupKind::SL3, 2) == 168);
  CHECK(target_order(GroupKind::SL3, 3) == 5616);
  CHECK(target_order(GroupKind::SU3, 3) == 6048);
  CHECK(target_order(GroupKind::PSU3, 5) == 126000);
  CHECK(target_order(GroupKind::GL3, 2) == 168);
  CHECK_THROWS_AS(closure_order(f2, {e12, cyc}, 100), CapExceeded);

  Model m = model_for(4, Target::SU3);
  CHECK(closure_order(m.cm.field, {m.x, m.y}, 1u << 20) == 62400);
  CHECK(closure_order(m.cm.field, {m.x, m.y}, 1u << 20, 3) == 62400);
}

TEST_CASE("element orders of X") {
  Model su9 = model_for(9, Target::SU3);
  CHECK(element_order_mat(su9.cm.field, su9.x) == 10);
  Model sl8 = model_for(8, Target::SL3);
  CHECK(element_order_mat(sl8.cm.field, sl8.x) == 7);
  for (auto [q, kind] : {std::pair{7, Target::SL3}, {8, Target::SL3}, {9, Target::SL3}, {4, Target::SU3},
                         {5, Target::SU3}, {9, Target::SU3}}) {
    Model m = model_for(q, kind);
    const TableField& f = m.cm.field;
    u64 want = kind == Target::SL3 ? q - 1 : q + 1;
    PMat cur = m.x;
    u64 j = 1;
    while (!mat_is_scalar(f, cur)) {
      cur = mul(f, cur, m.x);
      ++j;
    }
    CAPTURE(q);
    CHECK(j == want);
  }
}

TEST_CASE("closure stays in the unitary group") {
  Model m = model_for(4, Target::SU3);
  const TableField& f = m.cm.field;
  const QuadAlgebra& k = m.sp.k();
  PMat h;
  for (int i = 0; i < 9; ++i) h[i] = static_cast<std::uint8_t>(k.index(m.sp.H[i]));
  auto frob = [&](std::uint8_t a) {
    std::uint8_t r = 1;
    for (int i = 0; i < 4; ++i) r = f.mul(r, a);
    return r;
  };
  auto elems = closure_elements(f, {m.x, m.y}, 1u << 20);
  REQUIRE(elems.size() == 62400);
  for (size_t i = 0; i < elems.size(); i += 97) {
    PMat g = elems[i], gc;
    for (int j = 0; j < 9; ++j) gc[j] = frob(g[j]);
    CHECK(mat_det(f, g) == 1);
    CHECK(mul(f, mul(f, mat_transpose<TableField>(g), h), gc) == h);
  }
}

TEST_CASE("no common eigenline") {
  for (auto [q, kind] : {std::pair{7, Target::SL3}, {4, Target::SU3}, {5, Target::SU3}}) {
    Model m = model_for(q, kind);
    const TableField& f = m.cm.field;
    unsigned n = f.size();
    bool found = false;
    for (unsigned code = 1; code < n * n * n && !found; ++code) {
      std::array<std::uint8_t, 3> v{std::uint8_t(code % n), std::uint8_t(code / n % n), std::uint8_t(code / n / n)};
      auto parallel = [&](const PMat& a) {
        auto w = mat_apply(f, a, v);
        // w = c v for some c
        for (unsigned c = 0; c < n; ++c)
          if (w == std::array<std::uint8_t, 3>{f.mul(c, v[0]), f.mul(c, v[1]), f.mul(c, v[2])}) return true;
        return false;
      };
      found = parallel(m.x) && parallel(m.y);
    }
    CAPTURE(q);
    CHECK_FALSE(found);
  }
}

TEST_CASE("simultaneous conjugacy") {
  Model m = model_for(7, Target::SL3);
  const TableField& f = m.cm.field;
  auto same = simultaneous_conjugacy(f, m.x, m.y, m.x, m.y);
  REQUIRE(same);
  CHECK(mat_is_scalar(f, *same));
  CHECK_FALSE(simultaneous_conjugacy(f, m.x, m.y, mat_inv(f, m.x), m.y));
  PMat s2 = m.cm.convert(m.sp, m.sp.S2), s2i = mat_inv(f, s2);
  PMat bx = mul(f, mul(f, s2, m.x), s2i), by = mul(f, mul(f, s2, m.y), s2i);
  auto c = simultaneous_conjugacy(f, m.x, m.y, bx, by);
  REQUIRE(c);
  PMat ci = mat_inv(f, *c);
  CHECK(mul(f, mul(f, *c, m.x), ci) == bx);
  CHECK(mul(f, mul(f, *c, m.y), ci) == by);
  PMat id{1, 0, 0, 0, 1, 0, 0, 0, 1};
  CHECK_THROWS_AS(simultaneous_conjugacy(f, id, id, id, id), Error);
}

TEST_CASE("orbit chain matches the exact order") {
  Model m = model_for(5, Target::SU3);
  u64 exact = closure_order(m.cm.field, {m.x, m.y}, 1u << 22);
  CHECK(exact == target_order(GroupKind::SU3, 5));
  ChainBound cb = chain_lower_bound(m.cm.field, {m.x, m.y}, exact);
  CHECK(cb.bound == exact);
  CHECK(cb.orbits[0] * cb.orbits[1] * cb.orbits[2] == exact);
  // a proper subgroup: the chain never overshoots
  ChainBound sub = chain_lower_bound(m.cm.field, {m.x}, exact);
  CHECK(sub.bound == element_order_mat(m.cm.field, m.x));
}

TEST_CASE("certificates") {
  auto f4 = FiniteField::get(2, 2);
  CertifyOptions opts;
  Certificate a = certify_characteristic(f4, choose_s(f4, Target::SU3).s, opts);
  CHECK(a.verdict == Verdict::CharacteristicQuotient);
  CHECK(a.group == "SU3(4)");
  CHECK(a.order == 62400);
  CHECK(a.order_method == "bfs");
  CHECK(a.braid_witnesses.size() == 6);
  for (const auto& w : a.braid_witnesses) CHECK(w.holds);
  CHECK(a.alpha_ok);
  Certificate b = certify_characteristic(f4, choose_s(f4, Target::SU3).s, opts);
  CHECK(b.order == a.order);
  CHECK(b.note == a.note);

  // below the target order the chain is forced and still certifies
  auto f5 = FiniteField::get(5, 1);
  CertifyOptions small;
  small.cap = 1000;
  Certificate c = certify_characteristic(f5, choose_s(f5, Target::SU3).s, small);
  CHECK(c.order_method == "orbit-chain");
  CHECK(c.verdict == Verdict::CharacteristicQuotient);
  small.chain_fallback = false;
  CHECK(certify_characteristic(f5, choose_s(f5, Target::SU3).s, small).verdict == Verdict::Inconclusive);

  auto f3 = FiniteField::get(3, 1);
  CHECK_THROWS_AS(certify_characteristic(f3, f3->from_int(-1)), Error);  // ramified
}
