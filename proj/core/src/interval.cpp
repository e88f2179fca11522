#include "ivp/interval.hpp"

#include <charconv>
#include <stdexcept>

namespace ivp {

ValueInterval::ValueInterval(int lo, int hi) : lo_(lo), hi_(hi) {
  if (lo < 1 || hi < lo)
    throw std::invalid_argument("bad interval bounds [" + std::to_string(lo) + "," +
                                std::to_string(hi) + "]");
}

bool proper_overlap(const ValueInterval& a, const ValueInterval& b) {
  if (a.is_empty() || b.is_empty()) return false;
  int lo = std::max(a.lo(), b.lo());
  int hi = std::min(a.hi(), b.hi());
  if (lo > hi) return false;
  ValueInterval inter(lo, hi);
  return inter != a && inter != b;
}

std::string format_interval(const ValueInterval& iv) {
  if (iv.is_empty()) return "empty";
  if (iv.lo() == iv.hi()) return std::to_string(iv.lo());
  return std::to_string(iv.lo()) + ".." + std::to_string(iv.hi());
}

namespace {

int parse_int(std::string_view s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument("bad integer '" + std::string(s) + "'");
  return v;
}

} // namespace

ValueInterval parse_interval(std::string_view text) {
  if (text == "empty") return ValueInterval::empty();
  auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    int v = parse_int(text);
    return ValueInterval::single(v);
  }
  int lo = parse_int(text.substr(0, dots));
  int hi = parse_int(text.substr(dots + 2));
  return ValueInterval(lo, hi);
}

} // namespace ivp
