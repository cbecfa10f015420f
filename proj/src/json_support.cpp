#include "darksector/json_support.hpp"

#include <cstdint>
#include <limits>
#include <stdexcept>

namespace darksector {

Json bigint_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return Json(v.convert_to<std::int64_t>());
  return Json(v.str());
}

BigInt bigint_from_json(const Json& j) {
  if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
      throw std::invalid_argument("expected an integer, got \"" + s + "\"");
    return BigInt(s);
  }
  throw std::invalid_argument("expected an integer");
}

Json to_json(const RationalTurn& t) {
  Json j;
  j["num"] = bigint_to_json(t.num());
  j["den"] = bigint_to_json(t.den());
  return j;
}

Json to_json(const GroupElement& g) {
  Json j;
  j["s"] = g.s;
  j["c_num"] = bigint_to_json(g.c.num());
  j["c_den"] = bigint_to_json(g.c.den());
  return j;
}

}  // namespace darksector
