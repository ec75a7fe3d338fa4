#pragma once
#include <array>
#include <string>

namespace charq {

// 3x3 matrices over a ring object R exposing Elt, zero(), one(), add, sub,
// mul, inv (throwing on non-units) and str. Row-major.
template <class R>
using MatOf = std::array<typename R::Elt, 9>;
template <class R>
using VecOf = std::array<typename R::Elt, 3>;

template <class R>
MatOf<R> mat_identity(const R& r) {
  MatOf<R> m;
  m.fill(r.zero());
  m[0] = m[4] = m[8] = r.one();
  return m;
}

template <class R>
MatOf<R> mat_mul(const R& r, const MatOf<R>& x, const MatOf<R>& y) {
  MatOf<R> out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      auto s = r.mul(x[3 * i], y[j]);
      s = r.add(s, r.mul(x[3 * i + 1], y[3 + j]));
      s = r.add(s, r.mul(x[3 * i + 2], y[6 + j]));
      out[3 * i + j] = s;
    }
  return out;
}

template <class R>
VecOf<R> mat_apply(const R& r, const MatOf<R>& m, const VecOf<R>& v) {
  VecOf<R> out;
  for (int i = 0; i < 3; ++i)
    out[i] = r.add(r.add(r.mul(m[3 * i], v[0]), r.mul(m[3 * i + 1], v[1])), r.mul(m[3 * i + 2], v[2]));
  return out;
}

template <class R>
MatOf<R> mat_transpose(const MatOf<R>& m) {
  return {m[0], m[3], m[6], m[1], m[4], m[7], m[2], m[5], m[8]};
}

template <class R>
typename R::Elt mat_det(const R& r, const MatOf<R>& m) {
  auto minor = [&](int a, int b, int c, int d) { return r.sub(r.mul(m[a], m[d]), r.mul(m[b], m[c])); };
  auto t0 = r.mul(m[0], minor(4, 5, 7, 8));
  auto t1 = r.mul(m[1], minor(3, 5, 6, 8));
  auto t2 = r.mul(m[2], minor(3, 4, 6, 7));
  return r.add(r.sub(t0, t1), t2);
}

template <class R>
typename R::Elt mat_trace(const R& r, const MatOf<R>& m) {
  return r.add(r.add(m[0], m[4]), m[8]);
}

template <class R>
MatOf<R> mat_scale(const R& r, typename R::Elt c, const MatOf<R>& m) {
  MatOf<R> out;
  for (int i = 0; i < 9; ++i) out[i] = r.mul(c, m[i]);
  return out;
}

/// Adjugate over determinant.
template <class R>
MatOf<R> mat_inv(const R& r, const MatOf<R>& m) {
  auto dinv = r.inv(mat_det(r, m));
  MatOf<R> adj;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      adj[3 * i + j] = r.sub(r.mul(m[3 * r0 + c0], m[3 * r1 + c1]), r.mul(m[3 * r0 + c1], m[3 * r1 + c0]));
    }
  return mat_scale(r, dinv, adj);
}

template <class R>
MatOf<R> mat_pow(const R& r, MatOf<R> m, long long e) {
  if (e < 0) {
    m = mat_inv(r, m);
    e = -e;
  }
  MatOf<R> out = mat_identity(r);
  while (e) {
    if (e & 1) out = mat_mul(r, out, m);
    m = mat_mul(r, m, m);
    e >>= 1;
  }
  return out;
}

template <class R>
bool mat_is_scalar(const R& r, const MatOf<R>& m) {
  for (int i = 0; i < 9; ++i)
    if (i % 4 != 0 && !(m[i] == r.zero())) return false;
  return m[0] == m[4] && m[4] == m[8];
}

template <class R>
std::string mat_str(const R& r, const MatOf<R>& m) {
  std::string s = "[";
  for (int i = 0; i < 3; ++i) {
    s += i ? ", [" : "[";
    for (int j = 0; j < 3; ++j) s += (j ? ", " : "") + r.str(m[3 * i + j]);
    s += "]";
  }
  return s + "]";
}

}  // namespace charq
