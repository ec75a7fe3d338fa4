#include "charq/mgroup.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <random>
#include <thread>

#include "charq/error.hpp"

namespace charq {

namespace {

inline PMat mul3(const TableField& f, const PMat& x, const PMat& y) {
  PMat r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      r[3 * i + j] = f.add(f.add(f.mul(x[3 * i], y[j]), f.mul(x[3 * i + 1], y[3 + j])), f.mul(x[3 * i + 2], y[6 + j]));
  return r;
}

inline std::array<std::uint8_t, 3> apply3(const TableField& f, const PMat& m, const std::array<std::uint8_t, 3>& v) {
  std::array<std::uint8_t, 3> r;
  for (int i = 0; i < 3; ++i) r[i] = f.add(f.add(f.mul(m[3 * i], v[0]), f.mul(m[3 * i + 1], v[1])), f.mul(m[3 * i + 2], v[2]));
  return r;
}

inline std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Open addressing; stores key + 1 so that 0 marks an empty slot.
class KeySet {
 public:
  KeySet() : slots_(1u << 16, 0), mask_((1u << 16) - 1) {}
  bool insert(std::uint64_t key) {
    if ((count_ + 1) * 2 > slots_.size()) grow();
    return place(key + 1);
  }
  size_t size() const { return count_; }

 private:
  bool place(std::uint64_t stored) {
    std::uint64_t i = mix(stored) & mask_;
    while (slots_[i] != 0) {
      if (slots_[i] == stored) return false;
      i = (i + 1) & mask_;
    }
    slots_[i] = stored;
    ++count_;
    return true;
  }
  void grow() {
    std::vector<std::uint64_t> old;
    old.swap(slots_);
    slots_.assign(old.size() * 2, 0);
    mask_ = slots_.size() - 1;
    count_ = 0;
    for (auto s : old)
      if (s) place(s);
  }
  std::vector<std::uint64_t> slots_;
  std::uint64_t mask_;
  size_t count_ = 0;
};

PMat identity_pmat() { return {1, 0, 0, 0, 1, 0, 0, 0, 1}; }

std::vector<std::uint64_t> bfs(const TableField& f, const std::vector<PMat>& gens, std::uint64_t cap, unsigned threads) {
  KeySet seen;
  std::vector<std::uint64_t> elems;
  auto id = pack(identity_pmat());
  seen.insert(id);
  elems.push_back(id);
  auto admit = [&](std::uint64_t k) {
    if (seen.insert(k)) {
      elems.push_back(k);
      if (elems.size() > cap) throw CapExceeded(elems.size(), cap);
    }
  };
  if (threads <= 1) {
    for (size_t i = 0; i < elems.size(); ++i) {
      PMat e = unpack(elems[i]);
      for (const auto& g : gens) admit(pack(mul3(f, e, g)));
    }
    return elems;
  }
  // products of a block are computed in parallel and admitted serially in the
  // same order as the single-threaded loop, so the result is identical
  const size_t block = 1u << 15;
  std::vector<std::uint64_t> buf;
  for (size_t start = 0; start < elems.size();) {
    size_t end = std::min(elems.size(), start + block);
    buf.assign((end - start) * gens.size(), 0);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (size_t i = start + t; i < end; i += threads) {
          PMat e = unpack(elems[i]);
          for (size_t g = 0; g < gens.size(); ++g) buf[(i - start) * gens.size() + g] = pack(mul3(f, e, gens[g]));
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto k : buf) admit(k);
    start = end;
  }
  return elems;
}

}  // namespace

std::uint64_t default_closure_cap() {
  if (const char* env = std::getenv("BURAU_CLOSURE_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 1ull << 25;
}

std::uint64_t closure_order(const TableField& f, const std::vector<PMat>& gens, std::uint64_t cap, unsigned threads) {
  return bfs(f, gens, cap, threads).size();
}

std::vector<PMat> closure_elements(const TableField& f, const std::vector<PMat>& gens, std::uint64_t cap) {
  std::vector<PMat> out;
  for (auto k : bfs(f, gens, cap, 1)) out.push_back(unpack(k));
  return out;
}

std::uint64_t target_order(GroupKind kind, std::uint64_t q) {
  std::uint64_t q3 = q * q * q;
  std::uint64_t sl = q3 * (q * q - 1) * (q3 - 1);
  std::uint64_t su = q3 * (q * q - 1) * (q3 + 1);
  switch (kind) {
    case GroupKind::SL3: return sl;
    case GroupKind::SU3: return su;
    case GroupKind::GL3: return sl * (q - 1);
    case GroupKind::U3: return su * (q + 1);
    case GroupKind::PSL3: return sl / std::gcd<std::uint64_t>(3, q - 1);
    case GroupKind::PSU3: return su / std::gcd<std::uint64_t>(3, q + 1);
  }
  return 0;
}

std::uint64_t element_order_mat(const TableField& f, const PMat& m, std::uint64_t cap) {
  const PMat id = identity_pmat();
  PMat cur = m;
  for (std::uint64_t n = 1; n <= cap; ++n) {
    if (cur == id) return n;
    cur = mul3(f, cur, m);
  }
  throw CapExceeded(cap, cap);
}

ChainBound chain_lower_bound(const TableField& f, const std::vector<PMat>& gens, std::uint64_t target,
                             std::uint64_t seed) {
  const unsigned n = f.size();
  const size_t npts = static_cast<size_t>(n) * n * n;
  auto index = [n](const std::array<std::uint8_t, 3>& v) { return v[0] + n * (v[1] + n * static_cast<size_t>(v[2])); };
  std::vector<std::uint64_t> trans(npts, 0);  // packed coset representative, 0 = not reached
  std::vector<size_t> orbit;
  ChainBound best;
  std::mt19937_64 rng(seed);

  for (unsigned per_level : {10u, 20u, 40u, 80u}) {
    std::vector<PMat> level_gens = gens;
    ChainBound cb;
    cb.bound = 1;
    cb.stabilizer_gens = per_level;
    for (int level = 0; level < 3; ++level) {
      for (size_t i : orbit) trans[i] = 0;
      orbit.clear();
      std::array<std::uint8_t, 3> base{0, 0, 0};
      base[level] = 1;
      size_t b0 = index(base);
      trans[b0] = pack(identity_pmat());
      orbit.push_back(b0);
      std::vector<std::array<std::uint8_t, 3>> pts{base};
      for (size_t i = 0; i < pts.size(); ++i) {
        PMat u = unpack(trans[orbit[i]]);
        for (const auto& g : level_gens) {
          auto w = apply3(f, g, pts[i]);
          size_t wi = index(w);
          if (trans[wi]) continue;
          trans[wi] = pack(mul3(f, g, u));
          orbit.push_back(wi);
          pts.push_back(w);
        }
      }
      cb.orbits[level] = orbit.size();
      cb.bound *= orbit.size();
      if (level == 2) break;
      // random elements of the level group, pushed into the point stabilizer
      std::vector<PMat> state = level_gens;
      while (state.size() < 10) state.push_back(level_gens[state.size() % level_gens.size()]);
      PMat acc = identity_pmat();
      auto step = [&] {
        size_t i = rng() % state.size(), j = rng() % state.size();
        if (i == j) j = (j + 1) % state.size();
        state[i] = (rng() & 1) ? mul3(f, state[i], state[j]) : mul3(f, state[j], state[i]);
        acc = mul3(f, acc, state[i]);
      };
      for (int w = 0; w < 60; ++w) step();
      std::vector<PMat> stab;
      for (unsigned k = 0; k < per_level; ++k) {
        for (int w = 0; w < 4; ++w) step();
        auto img = apply3(f, acc, base);
        PMat u = unpack(trans[index(img)]);
        PMat s = mul3(f, mat_inv(f, u), acc);
        if (s != identity_pmat()) stab.push_back(s);
      }
      if (stab.empty()) stab.push_back(identity_pmat());
      level_gens = std::move(stab);
    }
    for (size_t i : orbit) trans[i] = 0;
    orbit.clear();
    if (cb.bound > best.bound) best = cb;
    if (best.bound >= target) break;
  }
  return best;
}

std::optional<PMat> simultaneous_conjugacy(const TableField& f, const PMat& a1, const PMat& a2, const PMat& b1,
                                           const PMat& b2) {
  // rows: entries (r,c) of m A - B m for both pairs; unknown m_{rk} is column 3r+k
  std::vector<std::array<std::uint8_t, 9>> rows;
  for (const auto& [A, B] : {std::pair{a1, b1}, std::pair{a2, b2}})
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) {
        std::array<std::uint8_t, 9> row{};
        for (int k = 0; k < 3; ++k) {
          row[3 * r + k] = f.add(row[3 * r + k], A[3 * k + c]);
          row[3 * k + c] = f.sub(row[3 * k + c], B[3 * r + k]);
        }
        rows.push_back(row);
      }
  // reduced row echelon form
  std::vector<int> pivot_col;
  size_t rank = 0;
  for (int col = 0; col < 9 && rank < rows.size(); ++col) {
    size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    auto inv = f.inv(rows[rank][col]);
    for (auto& x : rows[rank]) x = f.mul(x, inv);
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      auto c = rows[r][col];
      for (int j = 0; j < 9; ++j) rows[r][j] = f.sub(rows[r][j], f.mul(c, rows[rank][j]));
    }
    pivot_col.push_back(col);
    ++rank;
  }
  std::vector<int> free_cols;
  for (int c = 0; c < 9; ++c)
    if (std::find(pivot_col.begin(), pivot_col.end(), c) == pivot_col.end()) free_cols.push_back(c);
  if (free_cols.empty()) return std::nullopt;
  if (free_cols.size() > 2)
    throw Error(Errc::Inconclusive, "solution space of dimension " + std::to_string(free_cols.size()));
  std::vector<PMat> basis;
  for (int fc : free_cols) {
    PMat v{};
    v[fc] = 1;
    for (size_t r = 0; r < rank; ++r) v[pivot_col[r]] = f.neg(rows[r][fc]);
    basis.push_back(v);
  }
  const unsigned n = f.size();
  unsigned total = basis.size() == 1 ? n : n * n;
  for (unsigned code = 1; code < total; ++code) {
    PMat m{};
    unsigned c = code;
    for (const auto& b : basis) {
      auto coef = static_cast<std::uint8_t>(c % n);
      c /= n;
      for (int i = 0; i < 9; ++i) m[i] = f.add(m[i], f.mul(coef, b[i]));
    }
    if (mat_det(f, m) != 0) return m;
  }
  return std::nullopt;
}

}  // namespace charq
