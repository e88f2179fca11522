#include <algorithm>
#include <atomic>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>
#include <vector>

#include "ivp/decomposition.hpp"
#include "ivp/enumeration.hpp"
#include "ivp/errors.hpp"

#include <nlohmann/json.hpp>

namespace ivp {

namespace {
std::atomic<int> g_census_bound{9};
}

int census_bound() { return g_census_bound.load(); }
void set_census_bound(int n) { g_census_bound.store(n); }

namespace {

using ClassMap = std::map<std::string, std::uint64_t>;

// classifies every permutation whose first value lies in [first_lo, first_hi]
ClassMap census_slice(int n, int first_lo, int first_hi) {
  ClassMap classes;
  for (int first = first_lo; first <= first_hi; ++first) {
    std::vector<int> rest;
    for (int v = 1; v <= n; ++v)
      if (v != first) rest.push_back(v);
    do {
      std::vector<int> vals;
      vals.reserve(static_cast<std::size_t>(n));
      vals.push_back(first);
      vals.insert(vals.end(), rest.begin(), rest.end());
      Permutation p(std::move(vals));
      ++classes[format_skeleton(skeleton(decomposition_tree(p)))];
    } while (std::next_permutation(rest.begin(), rest.end()));
  }
  return classes;
}

} // namespace

CensusRecord brute_force_census(int n) {
  if (n < 1) throw std::invalid_argument("census: n must be >= 1");
  if (n > census_bound())
    throw FeasibilityError("census size " + std::to_string(n) + " exceeds the bound " +
                           std::to_string(census_bound()));

  CensusRecord rec;
  rec.n = n;

  if (n == 1) {
    rec.classes["1"] = 1;
  } else {
    const int workers = std::max(1, std::min<int>(static_cast<int>(std::thread::hardware_concurrency()), n));
    std::vector<ClassMap> partial(static_cast<std::size_t>(workers));
    std::vector<std::thread> threads;
    // split the first value range across workers; each slice is independent
    for (int w = 0; w < workers; ++w) {
      int lo = 1 + w * n / workers;
      int hi = (w + 1) * n / workers;
      threads.emplace_back([&partial, w, n, lo, hi] { partial[static_cast<std::size_t>(w)] = census_slice(n, lo, hi); });
    }
    for (auto& t : threads) t.join();
    for (const auto& m : partial)
      for (const auto& [key, cnt] : m) rec.classes[key] += cnt;
  }

  std::set<std::string> nonplane, nonplane_tree;
  for (const auto& [key, cnt] : rec.classes) {
    rec.total += cnt;
    Skeleton s = parse_skeleton(key);
    std::string canon = format_skeleton(canonical_skeleton(s));
    nonplane.insert(canon);
    if (!has_wide_linear_node(s)) {
      ++rec.tree_classes;
      nonplane_tree.insert(canon);
    }
    if (cnt == 2) ++rec.two_realizer_classes;
  }
  rec.plane_classes = rec.classes.size();
  rec.nonplane_classes = nonplane.size();
  rec.nonplane_tree_classes = nonplane_tree.size();
  return rec;
}

std::string census_to_json(const CensusRecord& rec) {
  nlohmann::json j;
  j["n"] = rec.n;
  j["total"] = std::to_string(rec.total);
  j["plane_classes"] = std::to_string(rec.plane_classes);
  j["nonplane_classes"] = std::to_string(rec.nonplane_classes);
  j["tree_classes"] = std::to_string(rec.tree_classes);
  j["nonplane_tree_classes"] = std::to_string(rec.nonplane_tree_classes);
  j["two_realizer_classes"] = std::to_string(rec.two_realizer_classes);
  nlohmann::json classes = nlohmann::json::array();
  for (const auto& [key, cnt] : rec.classes)
    classes.push_back({{"skeleton", key}, {"size", std::to_string(cnt)}});
  j["classes"] = classes;
  return j.dump();
}

} // namespace ivp
