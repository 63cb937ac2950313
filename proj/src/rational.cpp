#include "selberg/rational.hpp"

#include <cmath>
#include <cstdlib>

namespace selberg {

Rational Rational::parse(std::string_view s) {
  auto bad = [&]() { throw std::invalid_argument("bad rational: '" + std::string(s) + "'"); };
  if (s.empty()) bad();

  auto parse_int = [&](std::string_view t) -> std::int64_t {
    if (t.empty()) bad();
    std::size_t pos = 0;
    bool neg = false;
    if (t[0] == '+' || t[0] == '-') { neg = t[0] == '-'; pos = 1; }
    if (pos == t.size()) bad();
    __int128 v = 0;
    for (; pos < t.size(); ++pos) {
      if (t[pos] < '0' || t[pos] > '9') bad();
      v = v * 10 + (t[pos] - '0');
      if (v > INT64_MAX) throw std::overflow_error("rational parse overflow");
    }
    return neg ? -static_cast<std::int64_t>(v) : static_cast<std::int64_t>(v);
  };

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    return Rational(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
  }
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot), frac = s.substr(dot + 1);
    if (frac.size() > 18) throw std::overflow_error("rational parse overflow");
    std::int64_t den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    std::int64_t w = whole.empty() || whole == "-" || whole == "+" ? 0 : parse_int(whole);
    std::int64_t f = frac.empty() ? 0 : parse_int(frac);
    bool neg = !whole.empty() && whole[0] == '-';
    return Rational(w) + (neg ? -Rational(f, den) : Rational(f, den));
  }
  return Rational(parse_int(s));
}

Rational Rational::from_double_exact(double x, std::int64_t max_den) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite value");
  for (std::int64_t den = 1; den <= max_den; den *= 2) {
    double scaled = x * static_cast<double>(den);
    if (std::abs(scaled) > 9.0e15) break;
    double r = std::nearbyint(scaled);
    if (scaled == r) return Rational(static_cast<std::int64_t>(r), den);
  }
  throw std::invalid_argument(
      "value " + std::to_string(x) +
      " is not an exact small rational; supply it as a \"p/q\" string");
}

}  // namespace selberg
