#include <cstdlib>
#include <regex>

#include "charq/error.hpp"
#include "charq/speckit.hpp"

namespace charq {

FiniteField::Elt parse_base_element(const FieldPtr& k0, const std::string& text) {
  static const std::regex integer(R"(\s*(-?\d+)\s*)");
  static const std::regex zpow(R"(\s*(t:)?\s*(-)?\s*Z\((\d+)\)(\^(-?\d+))?\s*)");
  std::smatch m;
  if (std::regex_match(text, m, integer)) return k0->from_int(std::stoll(m[1]));
  if (!std::regex_match(text, m, zpow)) throw Error(Errc::Parse, "cannot parse field element '" + text + "'");
  bool as_t = m[1].matched, negate = m[2].matched;
  u64 n = std::stoull(m[3]);
  long long e = m[5].matched ? std::stoll(m[5]) : 1;
  u64 Q = k0->order();
  if (n != Q && n != Q * Q) throw Error(Errc::Parse, "Z(" + std::to_string(n) + ") is not in GF(" + std::to_string(Q) + ") or its square");
  auto f = n == Q ? k0 : FiniteField::get(k0->p(), 2 * k0->d());
  auto x = f->z_pow(e);
  if (negate) x = f->neg(x);
  if (as_t) x = f->add(x, f->inv(x));
  return n == Q ? x : restrict_to(*f, *k0, x);
}

}  // namespace charq
