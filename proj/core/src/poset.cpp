#include "ivp/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace ivp {

int IntervalPoset::index_of(const ValueInterval& iv) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), iv);
  if (it == elements_.end() || *it != iv) return -1;
  return static_cast<int>(it - elements_.begin());
}

bool IntervalPoset::covers_pair(int lower, int upper) const {
  return cover_matrix_[static_cast<std::size_t>(lower) * elements_.size() +
                       static_cast<std::size_t>(upper)] != 0;
}

bool IntervalPoset::operator==(const IntervalPoset& other) const {
  if (with_empty_ != other.with_empty_ || elements_ != other.elements_) return false;
  for (std::size_t i = 0; i < minimal_order_.size(); ++i)
    if (elements_[static_cast<std::size_t>(minimal_order_[i])] !=
        other.elements_[static_cast<std::size_t>(other.minimal_order_[i])])
      return false;
  return true;
}

IntervalPoset IntervalPoset::build(int n, std::vector<ValueInterval> elements,
                                   std::vector<ValueInterval> minimal_sequence, Variant variant,
                                   bool with_empty) {
  IntervalPoset p;
  p.n_ = n;
  p.variant_ = variant;
  p.with_empty_ = with_empty;
  if (with_empty) elements.push_back(ValueInterval::empty());
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  p.elements_ = std::move(elements);

  if (static_cast<int>(minimal_sequence.size()) != n)
    throw std::invalid_argument("minimal sequence must list the n singletons");
  if (!std::binary_search(p.elements_.begin(), p.elements_.end(), ValueInterval(1, n)))
    throw std::invalid_argument("maximum element [1,n] missing");
  for (const auto& s : minimal_sequence) {
    if (s.size() != 1) throw std::invalid_argument("minimal sequence entry is not a singleton");
    auto it = std::lower_bound(p.elements_.begin(), p.elements_.end(), s);
    if (it == p.elements_.end() || *it != s)
      throw std::invalid_argument("minimal sequence entry missing from elements");
    p.minimal_order_.push_back(static_cast<int>(it - p.elements_.begin()));
  }

  const std::size_t m = p.elements_.size();

  // covers = transitive reduction of inclusion
  p.cover_matrix_.assign(m * m, 0);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (a == b || !p.elements_[a].contained_in(p.elements_[b]) ||
          p.elements_[a] == p.elements_[b])
        continue;
      bool direct = true;
      for (std::size_t c = 0; c < m; ++c) {
        if (c == a || c == b) continue;
        if (p.elements_[a].contained_in(p.elements_[c]) &&
            p.elements_[c].contained_in(p.elements_[b]) && p.elements_[c] != p.elements_[a] &&
            p.elements_[c] != p.elements_[b]) {
          direct = false;
          break;
        }
      }
      if (direct) {
        p.cover_matrix_[a * m + b] = 1;
        p.covers_.emplace_back(static_cast<int>(a), static_cast<int>(b));
      }
    }
  }
  std::sort(p.covers_.begin(), p.covers_.end());

  // embedding runs: positions in minimal_order of the singletons below
  p.runs_.resize(m);
  for (std::size_t e = 0; e < m; ++e) {
    const auto& el = p.elements_[e];
    if (el.is_empty()) {
      p.runs_[e] = ValueInterval::empty();
      continue;
    }
    int lo = n + 1, hi = 0, cnt = 0;
    for (int pos = 1; pos <= n; ++pos) {
      const auto& s = p.elements_[static_cast<std::size_t>(p.minimal_order_[static_cast<std::size_t>(pos - 1)])];
      if (s.contained_in(el)) {
        lo = std::min(lo, pos);
        hi = std::max(hi, pos);
        ++cnt;
      }
    }
    if (cnt == 0 || cnt != hi - lo + 1 || cnt != el.size())
      throw std::invalid_argument("element does not cover a contiguous run of minimal elements");
    p.runs_[e] = ValueInterval(lo, hi);
  }
  return p;
}

IntervalPoset poset_of(const Permutation& p, Variant variant, bool with_empty) {
  const int n = p.size();
  std::vector<ValueInterval> minimal;
  minimal.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    minimal.push_back(ValueInterval::single(variant == Variant::original ? i : p.at(i - 1)));
  return IntervalPoset::build(n, intervals(p), std::move(minimal), variant, with_empty);
}

IntervalPoset building_block(BlockKind kind, int k) {
  if (k < 1) throw std::invalid_argument("building block size must be >= 1");
  std::vector<ValueInterval> els;
  if (kind == BlockKind::argyle) {
    for (int a = 1; a <= k; ++a)
      for (int b = a; b <= k; ++b) els.emplace_back(a, b);
  } else {
    for (int a = 1; a <= k; ++a) els.emplace_back(a, a);
    els.emplace_back(1, k);
  }
  std::vector<ValueInterval> minimal;
  for (int i = 1; i <= k; ++i) minimal.push_back(ValueInterval::single(i));
  return IntervalPoset::build(k, std::move(els), std::move(minimal), Variant::modified, false);
}

namespace {

// collects the run elements of the subtree rooted at s, starting at leaf
// position `next`; returns the span of the subtree
ValueInterval collect_runs(const Skeleton& s, int& next, std::vector<ValueInterval>& out) {
  if (s.is_leaf()) {
    ValueInterval run = ValueInterval::single(next++);
    out.push_back(run);
    return run;
  }
  std::vector<ValueInterval> spans;
  for (const auto& c : s.children()) spans.push_back(collect_runs(c, next, out));
  ValueInterval full(spans.front().lo(), spans.back().hi());
  if (s.kind() == Skeleton::Kind::prime) {
    out.push_back(full);
  } else {
    // argyle block over the children: every union of >= 2 consecutive spans;
    // the single-span unions are the child maxima, already collected
    const std::size_t k = spans.size();
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) out.emplace_back(spans[i].lo(), spans[j].hi());
  }
  return full;
}

} // namespace

IntervalPoset poset_from_skeleton(const Skeleton& s) {
  std::vector<ValueInterval> els;
  int next = 1;
  collect_runs(s, next, els);
  const int n = next - 1;
  std::vector<ValueInterval> minimal;
  for (int i = 1; i <= n; ++i) minimal.push_back(ValueInterval::single(i));
  return IntervalPoset::build(n, std::move(els), std::move(minimal), Variant::modified, false);
}

bool same_embedding(const IntervalPoset& a, const IntervalPoset& b) {
  if (a.ambient_size() != b.ambient_size() || a.with_empty() != b.with_empty()) return false;
  if (a.elements().size() != b.elements().size()) return false;

  // run -> element index, per side
  std::map<ValueInterval, int> run_to_b;
  for (std::size_t i = 0; i < b.elements().size(); ++i)
    run_to_b[b.embedding_runs()[i]] = static_cast<int>(i);
  std::vector<int> a_to_b(a.elements().size(), -1);
  for (std::size_t i = 0; i < a.elements().size(); ++i) {
    auto it = run_to_b.find(a.embedding_runs()[i]);
    if (it == run_to_b.end()) return false;
    a_to_b[i] = it->second;
  }
  if (a.covers().size() != b.covers().size()) return false;
  for (auto [lo, hi] : a.covers())
    if (!b.covers_pair(a_to_b[static_cast<std::size_t>(lo)], a_to_b[static_cast<std::size_t>(hi)]))
      return false;
  return true;
}

namespace {

struct StrongNode {
  ValueInterval run;
  std::vector<int> children;
};

Skeleton skeleton_from_runs(const std::vector<StrongNode>& nodes,
                            const std::set<ValueInterval>& all_runs, int idx, int& element_budget) {
  const StrongNode& node = nodes[static_cast<std::size_t>(idx)];
  if (node.children.empty()) {
    --element_budget;
    return Skeleton::leaf();
  }
  const std::size_t k = node.children.size();
  if (k < 2) throw std::invalid_argument("not an interval poset: unary strong element");
  std::vector<Skeleton> ch;
  for (int c : node.children)
    ch.push_back(skeleton_from_runs(nodes, all_runs, c, element_budget));

  auto pair_union_present = [&](std::size_t i, std::size_t j) {
    return all_runs.count(ValueInterval(nodes[static_cast<std::size_t>(node.children[i])].run.lo(),
                                        nodes[static_cast<std::size_t>(node.children[j])].run.hi())) > 0;
  };

  bool linear = k <= 3 || pair_union_present(0, 1);
  if (linear) {
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        if (!pair_union_present(i, j))
          throw std::invalid_argument("not an interval poset: incomplete argyle block");
    element_budget -= static_cast<int>(k * (k - 1) / 2);
    return Skeleton::linear(std::move(ch));
  }
  for (std::size_t i = 0; i + 1 < k; ++i)
    if (pair_union_present(i, i + 1))
      throw std::invalid_argument("not an interval poset: partial block union above a prime node");
  --element_budget;
  return Skeleton::prime(std::move(ch));
}

} // namespace

Skeleton skeleton_of_poset(const IntervalPoset& p) {
  const int n = p.ambient_size();
  std::vector<ValueInterval> runs;
  for (std::size_t i = 0; i < p.elements().size(); ++i)
    if (!p.elements()[i].is_empty()) runs.push_back(p.embedding_runs()[i]);
  std::set<ValueInterval> all_runs(runs.begin(), runs.end());
  if (static_cast<int>(all_runs.size()) != static_cast<int>(runs.size()))
    throw std::invalid_argument("not an interval poset: duplicate embedding runs");
  if (!all_runs.count(ValueInterval(1, n)))
    throw std::invalid_argument("not an interval poset: missing maximum");

  // strong elements: runs that overlap no other run
  std::vector<ValueInterval> strong;
  for (const auto& a : runs) {
    bool ok = true;
    for (const auto& b : runs)
      if (proper_overlap(a, b)) {
        ok = false;
        break;
      }
    if (ok) strong.push_back(a);
  }
  std::sort(strong.begin(), strong.end(), [](const ValueInterval& a, const ValueInterval& b) {
    return a.size() < b.size();
  });

  std::vector<StrongNode> nodes;
  nodes.reserve(strong.size());
  for (const auto& r : strong) nodes.push_back({r, {}});
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      if (nodes[i].run.contained_in(nodes[j].run) && nodes[j].run.size() > nodes[i].run.size()) {
        nodes[j].children.push_back(static_cast<int>(i));
        break;
      }
    }
  }
  for (auto& node : nodes)
    std::sort(node.children.begin(), node.children.end(), [&](int a, int b) {
      return nodes[static_cast<std::size_t>(a)].run.lo() < nodes[static_cast<std::size_t>(b)].run.lo();
    });

  int budget = static_cast<int>(runs.size());
  Skeleton s = skeleton_from_runs(nodes, all_runs, static_cast<int>(nodes.size()) - 1, budget);
  if (budget != 0)
    throw std::invalid_argument("not an interval poset: stray elements outside block structure");
  return s;
}

std::string canonical_key(const IntervalPoset& p, bool plane) {
  Skeleton s = skeleton_of_poset(p);
  return format_skeleton(plane ? s : canonical_skeleton(s));
}

namespace {

// meet/join of a single pair by exhaustive search over the elements
class BoundTables {
public:
  explicit BoundTables(const IntervalPoset& p)
      : p_(p), m_(static_cast<int>(p.elements().size())) {}

  int meet(int a, int b) const { return extremum(a, b, /*lower=*/true); }
  int join(int a, int b) const { return extremum(a, b, /*lower=*/false); }

private:
  int extremum(int a, int b, bool lower) const {
    int best = -1;
    for (int c = 0; c < m_; ++c) {
      bool bound = lower ? (p_.leq(c, a) && p_.leq(c, b)) : (p_.leq(a, c) && p_.leq(b, c));
      if (!bound) continue;
      if (best == -1)
        best = c;
      else if (lower ? p_.leq(best, c) : p_.leq(c, best))
        best = c;
      else if (!(lower ? p_.leq(c, best) : p_.leq(best, c)))
        return find_unique(a, b, lower); // incomparable candidates: need the full scan
    }
    return best;
  }

  // the bound must dominate every other candidate to exist
  int find_unique(int a, int b, bool lower) const {
    for (int c = 0; c < m_; ++c) {
      bool cand = lower ? (p_.leq(c, a) && p_.leq(c, b)) : (p_.leq(a, c) && p_.leq(b, c));
      if (!cand) continue;
      bool dominates = true;
      for (int d = 0; d < m_; ++d) {
        bool other = lower ? (p_.leq(d, a) && p_.leq(d, b)) : (p_.leq(a, d) && p_.leq(b, d));
        if (other && !(lower ? p_.leq(d, c) : p_.leq(c, d))) {
          dominates = false;
          break;
        }
      }
      if (dominates) return c;
    }
    return -1;
  }

  const IntervalPoset& p_;
  int m_;
};

} // namespace

std::pair<std::optional<ValueInterval>, std::optional<ValueInterval>> meet_join(
    const IntervalPoset& p, const ValueInterval& a, const ValueInterval& b) {
  int ia = p.index_of(a), ib = p.index_of(b);
  if (ia < 0 || ib < 0) throw std::invalid_argument("meet_join: not elements of the poset");
  BoundTables t(p);
  int mi = t.meet(ia, ib), jo = t.join(ia, ib);
  std::pair<std::optional<ValueInterval>, std::optional<ValueInterval>> out;
  if (mi >= 0) out.first = p.elements()[static_cast<std::size_t>(mi)];
  if (jo >= 0) out.second = p.elements()[static_cast<std::size_t>(jo)];
  return out;
}

namespace {

// full meet/join tables, or nullopt when some pair has no bound
struct LatticeTables {
  int m;
  std::vector<int> meet, join;
  bool lattice = true;

  explicit LatticeTables(const IntervalPoset& p) : m(static_cast<int>(p.elements().size())) {
    BoundTables t(p);
    meet.assign(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), -1);
    join = meet;
    for (int a = 0; a < m; ++a) {
      for (int b = a; b < m; ++b) {
        int mi = t.meet(a, b), jo = t.join(a, b);
        if (mi < 0 || jo < 0) {
          lattice = false;
          return;
        }
        at(meet, a, b) = at(meet, b, a) = mi;
        at(join, a, b) = at(join, b, a) = jo;
      }
    }
  }
  int& at(std::vector<int>& tab, int a, int b) {
    return tab[static_cast<std::size_t>(a) * static_cast<std::size_t>(m) + static_cast<std::size_t>(b)];
  }
  int get(const std::vector<int>& tab, int a, int b) const {
    return tab[static_cast<std::size_t>(a) * static_cast<std::size_t>(m) + static_cast<std::size_t>(b)];
  }
};

} // namespace

bool is_lattice(const IntervalPoset& p) { return LatticeTables(p).lattice; }

bool is_modular(const IntervalPoset& p) {
  LatticeTables t(p);
  if (!t.lattice) throw std::domain_error("modularity queried on a non-lattice");
  const int m = t.m;
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      int mi = t.get(t.meet, a, b), jo = t.get(t.join, a, b);
      bool both_cover_meet = p.covers_pair(mi, a) && p.covers_pair(mi, b);
      bool join_covers_both = p.covers_pair(a, jo) && p.covers_pair(b, jo);
      if (both_cover_meet != join_covers_both) return false;
    }
  }
  return true;
}

bool is_distributive(const IntervalPoset& p) {
  LatticeTables t(p);
  if (!t.lattice) throw std::domain_error("distributivity queried on a non-lattice");
  const int m = t.m;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        if (t.get(t.meet, a, t.get(t.join, b, c)) !=
            t.get(t.join, t.get(t.meet, a, b), t.get(t.meet, a, c)))
          return false;
  return true;
}

bool is_binary(const IntervalPoset& p) { return !has_prime_node(skeleton_of_poset(p)); }

bool is_tree_poset(const IntervalPoset& p) { return !has_wide_linear_node(skeleton_of_poset(p)); }

namespace {

struct Pt {
  long long x2; // 2*x, so coordinates stay integral
  long long y;
};

long long cross(const Pt& o, const Pt& a, const Pt& b) {
  return (a.x2 - o.x2) * (b.y - o.y) - (a.y - o.y) * (b.x2 - o.x2);
}

bool on_segment(const Pt& a, const Pt& b, const Pt& q) {
  return std::min(a.x2, b.x2) <= q.x2 && q.x2 <= std::max(a.x2, b.x2) &&
         std::min(a.y, b.y) <= q.y && q.y <= std::max(a.y, b.y);
}

// closed-segment intersection test
bool segments_intersect(const Pt& a, const Pt& b, const Pt& c, const Pt& d) {
  long long d1 = cross(c, d, a), d2 = cross(c, d, b), d3 = cross(a, b, c), d4 = cross(a, b, d);
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
    return true;
  if (d1 == 0 && on_segment(c, d, a)) return true;
  if (d2 == 0 && on_segment(c, d, b)) return true;
  if (d3 == 0 && on_segment(a, b, c)) return true;
  if (d4 == 0 && on_segment(a, b, d)) return true;
  return false;
}

} // namespace

PlanarLayout planar_layout(const IntervalPoset& p) {
  const int n = p.ambient_size();
  PlanarLayout out;
  std::vector<Pt> pts(p.elements().size());
  for (std::size_t i = 0; i < p.elements().size(); ++i) {
    const auto& el = p.elements()[i];
    const auto& run = p.embedding_runs()[i];
    Pt q;
    if (el.is_empty()) {
      q = {1 + n, 0}; // centered below the minimal row
    } else {
      q = {run.lo() + run.hi(), el.size()};
    }
    pts[i] = q;
    long long g = std::gcd(q.x2, 2ll);
    out.points.push_back({el, Rational{q.x2 / g, 2 / g}, Rational{q.y, 1}});
  }

  const auto& cov = p.covers();
  for (std::size_t i = 0; i < cov.size(); ++i) {
    for (std::size_t j = i + 1; j < cov.size(); ++j) {
      auto [a1, b1] = cov[i];
      auto [a2, b2] = cov[j];
      if (a1 == a2 || a1 == b2 || b1 == a2 || b1 == b2) continue; // shared vertex
      if (segments_intersect(pts[static_cast<std::size_t>(a1)], pts[static_cast<std::size_t>(b1)],
                             pts[static_cast<std::size_t>(a2)], pts[static_cast<std::size_t>(b2)]))
        ++out.crossing_count;
    }
  }
  return out;
}

std::string poset_to_json(const IntervalPoset& p) {
  nlohmann::json j;
  j["n"] = p.ambient_size();
  j["variant"] = p.variant() == Variant::original ? "original" : "modified";
  j["with_empty"] = p.with_empty();
  nlohmann::json els = nlohmann::json::array();
  for (const auto& e : p.elements()) {
    if (e.is_empty())
      els.push_back(nullptr);
    else
      els.push_back(nlohmann::json::array({e.lo(), e.hi()}));
  }
  j["elements"] = els;
  j["minimal_order"] = p.minimal_order();
  nlohmann::json cov = nlohmann::json::array();
  for (auto [lo, hi] : p.covers()) cov.push_back(nlohmann::json::array({lo, hi}));
  j["covers"] = cov;
  return j.dump();
}

} // namespace ivp
