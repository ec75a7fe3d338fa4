#include "charq/congruence.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "charq/error.hpp"
#include "charq/numtheory.hpp"

namespace charq {

std::string SL2Mat::str() const {
  return "[[" + std::to_string(a) + ", " + std::to_string(b) + "], [" + std::to_string(c) + ", " + std::to_string(d) +
         "]]";
}

SL2Mat operator*(const SL2Mat& x, const SL2Mat& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

SL2Mat reduce(const SL2Mat& x, long long m) {
  auto r = [m](long long v) { return ((v % m) + m) % m; };
  return {r(x.a), r(x.b), r(x.c), r(x.d)};
}

SL2Mat sl2_inverse(const SL2Mat& x) { return {x.d, -x.b, -x.c, x.a}; }

SL2Mat abelianize(const FreeAut& alpha) {
  auto cx = alpha.x_image.abelianize(), cy = alpha.y_image.abelianize();
  return {cx[0], cy[0], cx[1], cy[1]};
}

SL2Mat abelianize(const BraidWord& w) { return abelianize(xi(w)); }

const StWords& st_words() {
  static const StWords words = [] {
    const SL2Mat S{0, -1, 1, 0}, T{1, 1, 0, 1};
    std::optional<BraidWord> ws, wt;
    const std::array<int, 6> alphabet{1, -1, 2, -2, 3, -3};
    std::vector<BraidWord> layer{BraidWord{}};
    for (int len = 1; len <= 8 && !(ws && wt); ++len) {
      std::vector<BraidWord> next;
      for (const auto& w : layer)
        for (int l : alphabet) {
          if (!w.letters.empty() && w.letters.back() == -l) continue;
          BraidWord v = w * BraidWord::gen(l);
          SL2Mat m = abelianize(v);
          if (!ws && m == S) ws = v;
          if (!wt && m == T) wt = v;
          next.push_back(std::move(v));
        }
      layer = std::move(next);
    }
    if (!ws || !wt) throw Error(Errc::SearchFailed, "no S/T words up to length 8");
    return StWords{*ws, *wt};
  }();
  return words;
}

std::string ClassAction::coset_word(size_t i) const {
  std::string w;
  for (; letter[i]; i = parent[i]) w.push_back(letter[i]);
  std::reverse(w.begin(), w.end());
  return w;
}

SL2Mat ClassAction::coset_matrix(size_t i, long long modulus) const {
  const SL2Mat S{0, -1, 1, 0}, T{1, 1, 0, 1};
  SL2Mat m;
  for (char l : coset_word(i)) m = reduce(m * (l == 'S' ? S : T), modulus);
  return m;
}

ClassAction build_class_action(const PermGroup& g, GenPair base, size_t cap) {
  if (!g.generates(base.a, base.b)) throw Error(Errc::BadParameter, "base pair does not generate the group");
  const StWords& w = st_words();
  const FreeAut fs = xi(w.s), ft = xi(w.t);
  ClassAction ca;
  std::map<GenPair, size_t> index;
  GenPair b0 = inn_normal_form(g, base);
  ca.classes.push_back(b0);
  ca.parent.push_back(0);
  ca.letter.push_back(0);
  index[b0] = 0;
  for (size_t i = 0; i < ca.classes.size(); ++i) {
    for (auto [mv, name] : {std::pair{&fs, 'S'}, std::pair{&ft, 'T'}}) {
      GenPair img = inn_normal_form(g, apply_aut(g, *mv, ca.classes[i]));
      auto [it, fresh] = index.emplace(img, ca.classes.size());
      if (fresh) {
        if (ca.classes.size() >= cap) throw CapExceeded(ca.classes.size() + 1, cap);
        ca.classes.push_back(img);
        ca.parent.push_back(i);
        ca.letter.push_back(name);
      }
      (name == 'S' ? ca.perm_s : ca.perm_t).push_back(it->second);
    }
  }
  return ca;
}

const char* verdict_name(CongruenceVerdict v) {
  switch (v) {
    case CongruenceVerdict::Congruence: return "Congruence";
    case CongruenceVerdict::Noncongruence: return "Noncongruence";
    case CongruenceVerdict::TotallyNoncongruence: return "TotallyNoncongruence";
  }
  return "?";
}

u64 sl2_order(long long m) {
  u64 n = static_cast<u64>(m) * m * m;
  for (auto [p, e] : factor(static_cast<u64>(m))) n = n / (p * p) * (p * p - 1);
  return n;
}

namespace {

std::vector<size_t> compose(const std::vector<size_t>& first, const std::vector<size_t>& second) {
  std::vector<size_t> r(first.size());
  for (size_t i = 0; i < first.size(); ++i) r[i] = second[first[i]];
  return r;
}

bool is_identity(const std::vector<size_t>& p) {
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i] != i) return false;
  return true;
}

std::vector<size_t> power(const std::vector<size_t>& p, int e) {
  std::vector<size_t> r(p.size());
  std::iota(r.begin(), r.end(), 0);
  for (int i = 0; i < e; ++i) r = compose(r, p);
  return r;
}

// |<gens>| in SL2(Z/m) via the orbit of e1 and its stabilizer, which is unipotent.
u64 image_order(const std::vector<SL2Mat>& gens, long long m) {
  if (m == 1) return 1;
  const size_t npts = static_cast<size_t>(m) * m;
  std::vector<std::int64_t> slot(npts, -1);
  std::vector<SL2Mat> trans;
  std::vector<std::pair<long long, long long>> pts;
  auto idx = [m](long long x, long long y) { return static_cast<size_t>(x + m * y); };
  slot[idx(1, 0)] = 0;
  trans.push_back(SL2Mat{});
  pts.push_back({1, 0});
  long long step = 0;  // gcd of the upper-right entries of stabilizer elements
  for (size_t i = 0; i < pts.size(); ++i) {
    for (const auto& h : gens) {
      long long x = (h.a * pts[i].first + h.b * pts[i].second) % m;
      long long y = (h.c * pts[i].first + h.d * pts[i].second) % m;
      size_t j = idx(x, y);
      SL2Mat hu = reduce(h * trans[i], m);
      if (slot[j] < 0) {
        slot[j] = static_cast<std::int64_t>(trans.size());
        trans.push_back(hu);
        pts.push_back({x, y});
        continue;
      }
      SL2Mat s = reduce(sl2_inverse(trans[slot[j]]) * hu, m);
      if (s.a != 1 % m || s.c != 0 || s.d != 1 % m) throw Error(Errc::Overflow, "stabilizer element is not unipotent");
      step = std::gcd(step, s.b);
    }
  }
  return static_cast<u64>(pts.size()) * static_cast<u64>(m / std::gcd(step, m));
}

}  // namespace

CongruenceResult congruence_degree(const ClassAction& ca, u64 cap) {
  CongruenceResult r;
  const size_t n = ca.classes.size();
  r.index = n;
  auto s2 = compose(ca.perm_s, ca.perm_s);
  auto st = compose(ca.perm_s, ca.perm_t);
  bool s2_central = compose(s2, ca.perm_t) == compose(ca.perm_t, s2);
  r.relations_ok = is_identity(power(ca.perm_s, 4)) && is_identity(power(st, 6)) && s2_central;
  r.minus_one_trivial = is_identity(s2);

  long long level = 1;
  std::vector<bool> seen(n, false);
  for (size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    long long len = 0;
    for (size_t j = i; !seen[j]; j = ca.perm_t[j]) {
      seen[j] = true;
      ++len;
    }
    level = std::lcm(level, len);
  }
  r.level = level;
  r.modulus = r.minus_one_trivial ? level : 2 * level;
  const long long m = r.modulus;
  if (static_cast<u64>(m) * static_cast<u64>(m) > cap)
    throw Error(Errc::LevelTooLarge, "modulus " + std::to_string(m) + " exceeds the cap");

  // Schreier generators u_i g u_{i.g}^-1, taken mod m
  const SL2Mat S{0, -1, 1, 0}, T{1, 1, 0, 1};
  std::vector<SL2Mat> coset(n);
  for (size_t i = 0; i < n; ++i) coset[i] = ca.coset_matrix(i, m);
  std::vector<SL2Mat> gens;
  for (size_t i = 0; i < n; ++i)
    for (auto [g, perm] : {std::pair{S, &ca.perm_s}, std::pair{T, &ca.perm_t}}) {
      size_t j = (*perm)[i];
      if (ca.parent[j] == i && ca.letter[j] == (g == S ? 'S' : 'T') && j != 0) continue;  // tree edge
      ++r.schreier_count;
      SL2Mat h = reduce(coset[i] * g * sl2_inverse(coset[j]), m);
      if (!(h == reduce(SL2Mat{}, m)) && std::find(gens.begin(), gens.end(), h) == gens.end()) gens.push_back(h);
    }
  r.sl2_order = sl2_order(m);
  r.image_order = image_order(gens, m);
  r.degree = r.sl2_order / r.image_order;
  if (r.degree == r.index)
    r.verdict = CongruenceVerdict::Congruence;
  else if (r.degree == 1 && r.index > 1)
    r.verdict = CongruenceVerdict::TotallyNoncongruence;
  else
    r.verdict = CongruenceVerdict::Noncongruence;
  return r;
}

CongruenceSurvey congruence_survey(const PermGroup& g, unsigned threads) {
  CongruenceSurvey sv;
  std::vector<GenPair> forms;
  for (const auto& p : class_rep_pairs(g, threads)) forms.push_back(inn_normal_form(g, p));
  std::sort(forms.begin(), forms.end());
  forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
  sv.inn_class_count = forms.size();
  EpiClassifier aut(g, EpiMode::ModAut, threads);
  sv.aut_class_count = aut.classes().size();

  std::map<GenPair, size_t> orbit_of;
  std::vector<size_t> aut_parent(aut.classes().size());
  std::iota(aut_parent.begin(), aut_parent.end(), 0);
  auto root = [&](size_t x) {
    while (aut_parent[x] != x) x = aut_parent[x] = aut_parent[aut_parent[x]];
    return x;
  };
  for (const auto& f : forms) {
    if (orbit_of.count(f)) continue;
    ClassAction ca = build_class_action(g, f);
    size_t first = root(aut.find(f));
    for (const auto& c : ca.classes) {
      orbit_of[c] = sv.orbit_bases.size();
      aut_parent[root(aut.find(c))] = first;
    }
    sv.orbit_bases.push_back(f);
    sv.results.push_back(congruence_degree(ca));
  }
  sv.inn_orbit_count = sv.orbit_bases.size();
  for (size_t i = 0; i < aut_parent.size(); ++i)
    if (root(i) == i) ++sv.aut_orbit_count;
  return sv;
}

}  // namespace charq
