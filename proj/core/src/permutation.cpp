#include "ivp/permutation.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <stdexcept>

#include "ivp/errors.hpp"

namespace ivp {

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  const int n = static_cast<int>(values_.size());
  if (n == 0) throw std::invalid_argument("empty permutation");
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int v : values_) {
    if (v < 1 || v > n)
      throw std::invalid_argument("value " + std::to_string(v) + " out of range 1.." +
                                  std::to_string(n));
    if (seen[static_cast<std::size_t>(v - 1)]++)
      throw std::invalid_argument("value " + std::to_string(v) + " repeated");
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::decreasing(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = n - i;
  return Permutation(std::move(v));
}

Permutation parse_permutation(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty permutation text");
  bool list_form = text.find_first_of(", \t") != std::string_view::npos;
  std::vector<int> vals;
  if (list_form) {
    std::size_t i = 0;
    while (i < text.size()) {
      while (i < text.size() && (text[i] == ',' || std::isspace(static_cast<unsigned char>(text[i]))))
        ++i;
      if (i >= text.size()) break;
      std::size_t j = i;
      while (j < text.size() && text[j] != ',' && !std::isspace(static_cast<unsigned char>(text[j])))
        ++j;
      int v = 0;
      auto sub = text.substr(i, j - i);
      auto [ptr, ec] = std::from_chars(sub.data(), sub.data() + sub.size(), v);
      if (ec != std::errc() || ptr != sub.data() + sub.size())
        throw std::invalid_argument("bad permutation entry '" + std::string(sub) + "'");
      vals.push_back(v);
      i = j;
    }
    if (vals.empty()) throw std::invalid_argument("empty permutation text");
  } else {
    if (text.size() > 9)
      throw std::invalid_argument("digit-string form cannot express values above 9; "
                                  "use a comma-separated list");
    for (char c : text) {
      if (c < '1' || c > '9')
        throw std::invalid_argument(std::string("bad digit '") + c + "' in permutation");
      vals.push_back(c - '0');
    }
  }
  return Permutation(std::move(vals));
}

std::string format_permutation(const Permutation& p) {
  std::string out;
  if (p.size() <= 9) {
    for (int v : p.values()) out += static_cast<char>('0' + v);
  } else {
    for (int i = 0; i < p.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(p.at(i));
    }
  }
  return out;
}

std::vector<ValueInterval> intervals(const Permutation& p) {
  const int n = p.size();
  std::vector<ValueInterval> out;
  for (int i = 0; i < n; ++i) {
    int mn = p.at(i), mx = p.at(i);
    for (int j = i; j < n; ++j) {
      mn = std::min(mn, p.at(j));
      mx = std::max(mx, p.at(j));
      if (mx - mn == j - i) out.emplace_back(mn, mx);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Permutation apply_symmetry(const Permutation& p, Symmetry s) {
  const int n = p.size();
  std::vector<int> v(static_cast<std::size_t>(n));
  switch (s) {
    case Symmetry::inverse:
      for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(p.at(i) - 1)] = i + 1;
      break;
    case Symmetry::reverse:
      for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = p.at(n - 1 - i);
      break;
    case Symmetry::complement:
      for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = n + 1 - p.at(i);
      break;
  }
  return Permutation(std::move(v));
}

Permutation inflate(const Permutation& pattern, const std::vector<Permutation>& parts) {
  const int k = pattern.size();
  if (static_cast<int>(parts.size()) != k)
    throw std::invalid_argument("inflate: " + std::to_string(parts.size()) + " parts for pattern of size " +
                                std::to_string(k));
  // value offset of block i = total size of blocks with smaller pattern value
  std::vector<int> offset(static_cast<std::size_t>(k), 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (pattern.at(j) < pattern.at(i)) offset[static_cast<std::size_t>(i)] += parts[static_cast<std::size_t>(j)].size();
  std::vector<int> v;
  for (int i = 0; i < k; ++i)
    for (int x : parts[static_cast<std::size_t>(i)].values())
      v.push_back(offset[static_cast<std::size_t>(i)] + x);
  return Permutation(std::move(v));
}

bool is_simple(const Permutation& p) {
  const int n = p.size();
  if (n < 4) return false;
  // reject on the first proper interval found
  for (int i = 0; i < n; ++i) {
    int mn = p.at(i), mx = p.at(i);
    for (int j = i + 1; j < n; ++j) {
      mn = std::min(mn, p.at(j));
      mx = std::max(mx, p.at(j));
      if (j - i < n - 1 && mx - mn == j - i) return false;
    }
  }
  return true;
}

namespace {
std::atomic<int> g_simple_bound{10};
std::shared_mutex g_simple_mutex;
std::map<int, std::vector<Permutation>> g_simple_cache;
} // namespace

int simple_enumeration_bound() { return g_simple_bound.load(); }
void set_simple_enumeration_bound(int k) { g_simple_bound.store(k); }

const std::vector<Permutation>& enumerate_simple(int k) {
  if (k < 1) throw std::invalid_argument("enumerate_simple: k must be >= 1");
  if (k > simple_enumeration_bound())
    throw FeasibilityError("simple permutations of size " + std::to_string(k) +
                           " exceed the enumeration bound " +
                           std::to_string(simple_enumeration_bound()));
  {
    std::shared_lock lock(g_simple_mutex);
    auto it = g_simple_cache.find(k);
    if (it != g_simple_cache.end()) return it->second;
  }
  std::vector<Permutation> found;
  std::vector<int> v(static_cast<std::size_t>(k));
  std::iota(v.begin(), v.end(), 1);
  do {
    Permutation p(v);
    if (is_simple(p)) found.push_back(std::move(p));
  } while (std::next_permutation(v.begin(), v.end()));
  std::unique_lock lock(g_simple_mutex);
  return g_simple_cache.emplace(k, std::move(found)).first->second;
}

} // namespace ivp
