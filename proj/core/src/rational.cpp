#include "epikit/rational.hpp"

#include "epikit/errors.hpp"

#include <cctype>

namespace epikit {

std::string rat_to_string(const Rat& r) {
  Int num = boost::multiprecision::numerator(r);
  Int den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rat rat_from_string(std::string_view s) {
  auto is_int = [](std::string_view t) {
    if (!t.empty() && (t[0] == '+' || t[0] == '-')) t.remove_prefix(1);
    if (t.empty()) return false;
    for (char c : t)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? "" : s.substr(slash + 1);
  if (!is_int(num) || (slash != std::string_view::npos && !is_int(den)))
    throw InputError("malformed rational: '" + std::string(s) + "'");
  Int n{std::string(num)};
  if (slash == std::string_view::npos) return Rat(n);
  Int d{std::string(den)};
  if (d == 0) throw InputError("zero denominator: '" + std::string(s) + "'");
  return Rat(n) / d;
}

Int rat_floor(const Rat& r) {
  Int num = boost::multiprecision::numerator(r);
  Int den = boost::multiprecision::denominator(r);
  Int q = num / den;
  if (num < 0 && q * den != num) --q;
  return q;
}

Int rat_ceil(const Rat& r) { return -rat_floor(-r); }

} // namespace epikit
