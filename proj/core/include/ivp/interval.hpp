#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace ivp {

// A contiguous range [lo,hi] of positive integers, or the empty interval.
// Used both for value intervals of a permutation and (in poset embeddings)
// for runs of positions.
class ValueInterval {
public:
  ValueInterval() = default; // empty
  ValueInterval(int lo, int hi);

  static ValueInterval empty() { return ValueInterval(); }
  static ValueInterval single(int v) { return ValueInterval(v, v); }

  bool is_empty() const { return hi_ < lo_; }
  int lo() const { return lo_; }
  int hi() const { return hi_; }
  int size() const { return is_empty() ? 0 : hi_ - lo_ + 1; }

  // set inclusion: this ⊆ other (the empty interval is contained in all)
  bool contained_in(const ValueInterval& other) const {
    if (is_empty()) return true;
    if (other.is_empty()) return false;
    return other.lo_ <= lo_ && hi_ <= other.hi_;
  }
  bool contains_value(int v) const { return !is_empty() && lo_ <= v && v <= hi_; }

  bool operator==(const ValueInterval&) const = default;
  // empty sorts first, then by (lo, hi)
  auto operator<=>(const ValueInterval&) const = default;

private:
  int lo_ = 1;
  int hi_ = 0;
};

// intersect but neither contains the other
bool proper_overlap(const ValueInterval& a, const ValueInterval& b);

// text forms: "empty", "a" (singleton), "a..b"
std::string format_interval(const ValueInterval& iv);
ValueInterval parse_interval(std::string_view text);

} // namespace ivp
