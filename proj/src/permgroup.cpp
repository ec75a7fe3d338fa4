#include "charq/permgroup.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>

#include "charq/error.hpp"
#include "charq/resources.hpp"

namespace charq {

namespace {

using Perm = std::vector<std::uint16_t>;

Perm parse_cycles(const std::string& text, unsigned degree) {
  Perm p(degree);
  for (unsigned i = 0; i < degree; ++i) p[i] = static_cast<std::uint16_t>(i);
  size_t pos = 0;
  auto fail = [&](const std::string& why) { throw Error(Errc::Parse, why + " in '" + text + "'"); };
  while (pos < text.size()) {
    char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
      continue;
    }
    if (c != '(') fail("expected '('");
    size_t close = text.find(')', pos);
    if (close == std::string::npos) fail("unclosed cycle");
    std::string body = text.substr(pos + 1, close - pos - 1);
    pos = close + 1;
    std::vector<unsigned> pts;
    std::stringstream in(body);
    std::string tok;
    while (std::getline(in, tok, ',')) {
      size_t b = tok.find_first_not_of(" \t"), e = tok.find_last_not_of(" \t");
      if (b == std::string::npos) {
        if (body.find_first_not_of(" \t") == std::string::npos) break;
        fail("empty point");
      }
      tok = tok.substr(b, e - b + 1);
      char* end = nullptr;
      long v = std::strtol(tok.c_str(), &end, 10);
      if (*end != '\0' || v < 1 || v > static_cast<long>(degree)) fail("bad point '" + tok + "'");
      pts.push_back(static_cast<unsigned>(v - 1));
    }
    // cycles compose left to right
    Perm cyc(degree);
    for (unsigned i = 0; i < degree; ++i) cyc[i] = static_cast<std::uint16_t>(i);
    for (size_t i = 0; i < pts.size(); ++i) cyc[pts[i]] = static_cast<std::uint16_t>(pts[(i + 1) % pts.size()]);
    for (size_t i = 0; i < pts.size(); ++i)
      for (size_t j = 0; j < i; ++j)
        if (pts[i] == pts[j]) fail("repeated point");
    for (auto& img : p) img = cyc[img];
  }
  std::vector<bool> seen(degree, false);
  for (auto v : p) {
    if (seen[v]) fail("repeated point");
    seen[v] = true;
  }
  return p;
}

struct PermHash {
  size_t operator()(const Perm& p) const {
    size_t h = 1469598103934665603ull;
    for (auto v : p) h = (h ^ v) * 1099511628211ull;
    return h;
  }
};

}  // namespace

PermGroup PermGroup::parse(const std::string& text, std::uint64_t cap) {
  std::istringstream in(text);
  std::string line;
  PermGroup g;
  if (!std::getline(in, line)) throw Error(Errc::Parse, "empty group file");
  char* end = nullptr;
  long deg = std::strtol(line.c_str(), &end, 10);
  if (end == line.c_str() || deg < 1 || deg > 65535) throw Error(Errc::Parse, "bad degree line '" + line + "'");
  g.degree_ = static_cast<unsigned>(deg);
  std::vector<Perm> gen_perms;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    gen_perms.push_back(parse_cycles(line, g.degree_));
  }
  cap = std::min<std::uint64_t>(cap, 65535);

  Perm id(g.degree_);
  for (unsigned i = 0; i < g.degree_; ++i) id[i] = static_cast<std::uint16_t>(i);
  std::unordered_map<Perm, Elt, PermHash> index;
  g.perms_.push_back(id);
  index[id] = 0;
  auto compose = [](const Perm& a, const Perm& b) {
    Perm r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
    return r;
  };
  for (size_t i = 0; i < g.perms_.size(); ++i)
    for (const auto& s : gen_perms) {
      Perm r = compose(g.perms_[i], s);
      if (index.count(r)) continue;
      if (g.perms_.size() >= cap) throw CapExceeded(g.perms_.size() + 1, cap);
      index.emplace(r, static_cast<Elt>(g.perms_.size()));
      g.perms_.push_back(std::move(r));
    }
  for (const auto& s : gen_perms) g.gens_.push_back(index.at(s));

  const size_t n = g.perms_.size();
  g.table_.resize(n * n);
  // row a is filled from the generator-expansion: a*(b*s) = (a*b)*s
  std::vector<std::pair<Elt, Elt>> parent(n, {0, 0});  // (predecessor, generator index)
  {
    std::vector<bool> done(n, false);
    done[0] = true;
    for (size_t i = 0; i < n; ++i)
      for (size_t k = 0; k < gen_perms.size(); ++k) {
        Elt j = index.at(compose(g.perms_[i], gen_perms[k]));
        if (!done[j]) {
          done[j] = true;
          parent[j] = {static_cast<Elt>(i), static_cast<Elt>(k)};
        }
      }
  }
  std::vector<std::vector<Elt>> right(gen_perms.size(), std::vector<Elt>(n));
  for (size_t k = 0; k < gen_perms.size(); ++k)
    for (size_t i = 0; i < n; ++i) right[k][i] = index.at(compose(g.perms_[i], gen_perms[k]));
  for (size_t a = 0; a < n; ++a) {
    Elt* row = &g.table_[a * n];
    row[0] = static_cast<Elt>(a);
    for (size_t b = 1; b < n; ++b) row[b] = right[parent[b].second][row[parent[b].first]];
  }

  g.inv_.resize(n);
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b)
      if (g.table_[a * n + b] == 0) {
        g.inv_[a] = static_cast<Elt>(b);
        break;
      }
  g.order_.resize(n);
  for (size_t a = 0; a < n; ++a) {
    unsigned k = 1;
    for (Elt x = static_cast<Elt>(a); x != 0; x = g.mul(x, static_cast<Elt>(a))) ++k;
    g.order_[a] = k;
  }

  const unsigned unset = ~0u;
  g.class_of_.assign(n, unset);
  g.to_rep_.assign(n, 0);
  for (size_t x = 0; x < n; ++x) {
    if (g.class_of_[x] != unset) continue;
    unsigned c = static_cast<unsigned>(g.class_reps_.size());
    Elt rep = static_cast<Elt>(x);
    g.class_reps_.push_back(rep);
    size_t size = 0;
    std::vector<Elt> cent;
    for (size_t h = 0; h < n; ++h) {
      Elt y = g.conj(static_cast<Elt>(h), rep);
      if (y == rep) cent.push_back(static_cast<Elt>(h));
      if (g.class_of_[y] == unset) {
        g.class_of_[y] = c;
        g.to_rep_[y] = g.inv(static_cast<Elt>(h));
        ++size;
      }
    }
    g.class_sizes_.push_back(size);
    g.centralizers_.push_back(std::move(cent));
  }
  return g;
}

PermGroup PermGroup::load(const std::string& name_or_path, std::uint64_t cap) {
  for (const auto& [name, text] : group_models())
    if (name == name_or_path) return parse(std::string(text), cap);
  std::ifstream in(name_or_path);
  if (!in) throw Error(Errc::BadParameter, "no bundled group or file named '" + name_or_path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), cap);
}

std::vector<std::string> PermGroup::model_names() {
  std::vector<std::string> out;
  for (const auto& m : group_models()) out.push_back(m.first);
  return out;
}

PermGroup::Elt PermGroup::pow(Elt a, long long e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  e %= order_[a];
  Elt r = 0;
  for (long long i = 0; i < e; ++i) r = mul(r, a);
  return r;
}

bool PermGroup::is_abelian() const {
  for (Elt a : gens_)
    for (Elt b : gens_)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::string PermGroup::str(Elt a) const {
  const Perm& p = perms_[a];
  std::string s;
  std::vector<bool> seen(degree_, false);
  for (unsigned i = 0; i < degree_; ++i) {
    if (seen[i] || p[i] == i) continue;
    s += "(";
    for (unsigned j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      if (j != i) s += ",";
      s += std::to_string(j + 1);
    }
    s += ")";
  }
  return s.empty() ? "()" : s;
}

PermGroup::Elt PermGroup::parse_element(const std::string& cycles) const {
  Perm p = parse_cycles(cycles, degree_);
  for (size_t i = 0; i < perms_.size(); ++i)
    if (perms_[i] == p) return static_cast<Elt>(i);
  throw Error(Errc::Parse, "'" + cycles + "' is not in the group");
}

size_t PermGroup::subgroup_order(const std::vector<Elt>& gens) const {
  std::vector<bool> seen(order(), false);
  std::vector<Elt> queue{0};
  seen[0] = true;
  for (size_t i = 0; i < queue.size(); ++i)
    for (Elt s : gens) {
      Elt y = mul(queue[i], s);
      if (!seen[y]) {
        seen[y] = true;
        queue.push_back(y);
      }
    }
  return queue.size();
}

bool PermGroup::generates(Elt a, Elt b) const {
  const size_t n = order();
  std::vector<bool> seen(n, false);
  std::vector<Elt> queue{0};
  queue.reserve(n);
  seen[0] = true;
  for (size_t i = 0; i < queue.size(); ++i) {
    for (Elt s : {a, b}) {
      Elt y = mul(queue[i], s);
      if (!seen[y]) {
        seen[y] = true;
        queue.push_back(y);
      }
    }
    // a subgroup larger than half the group is the group
    if (2 * queue.size() > n) return true;
  }
  return queue.size() == n;
}

}  // namespace charq
