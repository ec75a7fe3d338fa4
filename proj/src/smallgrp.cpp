#include "charq/smallgrp.hpp"

#include <algorithm>
#include <thread>

#include "charq/error.hpp"

namespace charq {

using Elt = PermGroup::Elt;

namespace {

// Orders of short words; equal for pairs related by an automorphism.
std::array<unsigned, 8> signature(const PermGroup& g, GenPair p) {
  Elt a = p.a, b = p.b, ai = g.inv(a), bi = g.inv(b);
  Elt ab = g.mul(a, b), a2 = g.mul(a, a), b2 = g.mul(b, b);
  return {g.elt_order(a),
          g.elt_order(b),
          g.elt_order(ab),
          g.elt_order(g.mul(a, bi)),
          g.elt_order(g.mul(a2, b)),
          g.elt_order(g.mul(a, b2)),
          g.elt_order(g.mul(a2, b2)),
          g.elt_order(g.mul(g.mul(ab, ai), bi))};
}

std::vector<char> generation_flags(const PermGroup& g, Elt a, unsigned threads) {
  const size_t n = g.order();
  std::vector<char> flags(n, 0);
  auto work = [&](size_t from, size_t step) {
    for (size_t b = from; b < n; b += step) flags[b] = g.generates(a, static_cast<Elt>(b));
  };
  if (threads <= 1 || n < 512) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
    for (auto& th : pool) th.join();
  }
  return flags;
}

}  // namespace

const char* mode_name(EpiMode m) { return m == EpiMode::ModInn ? "inn" : "aut"; }

std::vector<GenPair> generating_pairs(const PermGroup& g, unsigned threads, u64 full_cap) {
  if (g.order() > full_cap) throw CapExceeded(g.order(), full_cap);
  std::vector<GenPair> out;
  for (size_t a = 0; a < g.order(); ++a) {
    auto flags = generation_flags(g, static_cast<Elt>(a), threads);
    for (size_t b = 0; b < g.order(); ++b)
      if (flags[b]) out.push_back({static_cast<Elt>(a), static_cast<Elt>(b)});
  }
  return out;
}

std::vector<GenPair> class_rep_pairs(const PermGroup& g, unsigned threads) {
  std::vector<GenPair> out;
  for (unsigned c = 0; c < g.class_count(); ++c) {
    Elt a = g.class_rep(c);
    auto flags = generation_flags(g, a, threads);
    for (size_t b = 0; b < g.order(); ++b)
      if (flags[b]) out.push_back({a, static_cast<Elt>(b)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

u64 count_generating_pairs(const PermGroup& g, const std::vector<GenPair>& rep_pairs) {
  u64 n = 0;
  for (const auto& p : rep_pairs) n += g.class_size(g.class_of(p.a));
  return n;
}

bool pair_isomorphic(const PermGroup& g, GenPair pa, GenPair pb) {
  if (g.elt_order(pa.a) != g.elt_order(pb.a) || g.elt_order(pa.b) != g.elt_order(pb.b)) return false;
  const size_t n = g.order();
  std::vector<std::int32_t> f(n, -1);
  std::vector<Elt> queue{0};
  queue.reserve(n);
  f[0] = 0;
  for (size_t i = 0; i < queue.size(); ++i) {
    Elt u = queue[i];
    Elt v = static_cast<Elt>(f[u]);
    for (auto [x, y] : {std::pair{pa.a, pb.a}, std::pair{pa.b, pb.b}}) {
      Elt u2 = g.mul(u, x), v2 = g.mul(v, y);
      if (f[u2] < 0) {
        f[u2] = v2;
        queue.push_back(u2);
      } else if (f[u2] != v2) {
        return false;
      }
    }
  }
  if (queue.size() != n) return false;
  // a homomorphism onto <b1, b2>; it is bijective when pB generates
  std::vector<bool> hit(n, false);
  for (auto v : f) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

std::optional<Elt> pair_conjugate(const PermGroup& g, GenPair pa, GenPair pb) {
  if (g.class_of(pa.a) != g.class_of(pb.a) || g.class_of(pa.b) != g.class_of(pb.b)) return std::nullopt;
  for (size_t h = 0; h < g.order(); ++h) {
    Elt e = static_cast<Elt>(h);
    if (g.conj(e, pa.a) == pb.a && g.conj(e, pa.b) == pb.b) return e;
  }
  return std::nullopt;
}

std::array<GenPair, 3> nielsen_moves(const PermGroup& g, GenPair p) {
  return {GenPair{g.inv(p.a), p.b}, GenPair{p.b, p.a}, GenPair{g.inv(p.a), g.mul(p.a, p.b)}};
}

GenPair apply_aut(const PermGroup& g, const FreeAut& alpha, GenPair p) {
  Elt ai = g.inv(p.a), bi = g.inv(p.b);
  auto mul = [&](Elt x, Elt y) { return g.mul(x, y); };
  return {alpha.x_image.eval<Elt>(0, p.a, ai, p.b, bi, mul), alpha.y_image.eval<Elt>(0, p.a, ai, p.b, bi, mul)};
}

GenPair inn_normal_form(const PermGroup& g, GenPair p) {
  Elt h = g.to_rep(p.a);
  GenPair q{g.conj(h, p.a), g.conj(h, p.b)};
  Elt best = q.b;
  for (Elt z : g.centralizer(g.class_of(q.a))) best = std::min(best, g.conj(z, q.b));
  return {q.a, best};
}

EpiClassifier::EpiClassifier(const PermGroup& g, EpiMode mode, unsigned threads) : g_(&g), mode_(mode) {
  auto pairs = class_rep_pairs(g, threads);
  pair_count_ = count_generating_pairs(g, pairs);
  std::map<std::array<unsigned, 8>, std::vector<size_t>> buckets;
  for (const auto& p : pairs) {
    if (index_.count(p)) continue;
    size_t cls = classes_.size();
    if (mode == EpiMode::ModAut) {
      auto& bucket = buckets[signature(g, p)];
      for (size_t c : bucket)
        if (pair_isomorphic(g, classes_[c].rep, p)) {
          cls = c;
          break;
        }
      if (cls == classes_.size()) bucket.push_back(cls);
    }
    if (cls == classes_.size()) classes_.push_back({p, mode});
    // conjugates by the centralizer of the first entry are in the same class
    for (Elt z : g.centralizer(g.class_of(p.a))) index_.emplace(GenPair{p.a, g.conj(z, p.b)}, cls);
  }
}

size_t EpiClassifier::find(GenPair p) const {
  auto it = index_.find(inn_normal_form(*g_, p));
  if (it == index_.end()) throw Error(Errc::BadParameter, "pair does not generate the group");
  return it->second;
}

std::vector<EpiClass> epi_classes(const PermGroup& g, EpiMode mode, unsigned threads) {
  return EpiClassifier(g, mode, threads).classes();
}

AutF2Analysis aut_f2_analysis(const PermGroup& g, unsigned threads, EpiMode mode) {
  EpiClassifier aut(g, EpiMode::ModAut, threads);
  AutF2Analysis out;
  out.order = g.order();
  out.mode = mode;
  out.pair_count = aut.pair_count();
  out.aut_class_count = aut.classes().size();
  std::optional<EpiClassifier> inn;
  if (mode == EpiMode::ModInn) {
    inn.emplace(g, EpiMode::ModInn, threads);
    out.inn_class_count = inn->classes().size();
  } else {
    std::vector<GenPair> forms;
    for (const auto& p : class_rep_pairs(g, threads)) forms.push_back(inn_normal_form(g, p));
    std::sort(forms.begin(), forms.end());
    out.inn_class_count = std::unique(forms.begin(), forms.end()) - forms.begin();
  }
  const EpiClassifier& cls = inn ? *inn : aut;
  const size_t n = cls.classes().size();
  std::vector<std::array<size_t, 3>> moves(n);
  for (size_t i = 0; i < n; ++i) {
    auto imgs = nielsen_moves(g, cls.classes()[i].rep);
    for (int k = 0; k < 3; ++k) moves[i][k] = cls.find(imgs[k]);
  }
  // the moves are invertible, so forward reachability gives the orbits
  std::vector<size_t> orbit(n, n);
  for (size_t i = 0; i < n; ++i) {
    if (orbit[i] != n) continue;
    size_t id = out.orbit_count++;
    std::vector<size_t> queue{i};
    orbit[i] = id;
    for (size_t j = 0; j < queue.size(); ++j)
      for (size_t k : moves[queue[j]])
        if (orbit[k] == n) {
          orbit[k] = id;
          queue.push_back(k);
        }
    out.orbit_sizes.push_back(queue.size());
    if (queue.size() == 1) out.fixed_classes.push_back(cls.classes()[i]);
  }
  std::sort(out.orbit_sizes.rbegin(), out.orbit_sizes.rend());
  return out;
}

}  // namespace charq
