#include "ivp/decomposition.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <cctype>
#include <stdexcept>

#include "ivp/errors.hpp"

namespace ivp {

DecompositionTree DecompositionTree::leaf() { return {Label::leaf, std::nullopt, {}}; }
DecompositionTree DecompositionTree::plus(std::vector<DecompositionTree> ch) {
  return {Label::plus, std::nullopt, std::move(ch)};
}
DecompositionTree DecompositionTree::minus(std::vector<DecompositionTree> ch) {
  return {Label::minus, std::nullopt, std::move(ch)};
}
DecompositionTree DecompositionTree::simple(Permutation label, std::vector<DecompositionTree> ch) {
  return {Label::simple, std::move(label), std::move(ch)};
}

int DecompositionTree::leaf_count() const {
  if (is_leaf()) return 1;
  int n = 0;
  for (const auto& c : children_) n += c.leaf_count();
  return n;
}

Skeleton Skeleton::leaf() { return {Kind::leaf, {}}; }
Skeleton Skeleton::linear(std::vector<Skeleton> ch) { return {Kind::linear, std::move(ch)}; }
Skeleton Skeleton::prime(std::vector<Skeleton> ch) { return {Kind::prime, std::move(ch)}; }

int Skeleton::leaf_count() const {
  if (is_leaf()) return 1;
  int n = 0;
  for (const auto& c : children_) n += c.leaf_count();
  return n;
}

bool Skeleton::operator<(const Skeleton& other) const {
  return format_skeleton(*this) < format_skeleton(other);
}

std::vector<ValueInterval> strong_intervals(const Permutation& p) {
  auto ivs = intervals(p);
  std::vector<ValueInterval> out;
  for (const auto& a : ivs) {
    bool strong = true;
    for (const auto& b : ivs) {
      if (proper_overlap(a, b)) {
        strong = false;
        break;
      }
    }
    if (strong) out.push_back(a);
  }
  return out;
}

namespace {

// window of positions (0-based, inclusive) occupied by the values of iv
std::pair<int, int> window_of(const Permutation& p, const ValueInterval& iv) {
  int lo = p.size(), hi = -1;
  for (int i = 0; i < p.size(); ++i) {
    if (iv.contains_value(p.at(i))) {
      lo = std::min(lo, i);
      hi = std::max(hi, i);
    }
  }
  return {lo, hi};
}

} // namespace

DecompositionTree decomposition_tree(const Permutation& p) {
  const int n = p.size();
  if (n == 1) return DecompositionTree::leaf();

  auto strong = strong_intervals(p);
  std::sort(strong.begin(), strong.end(),
            [](const ValueInterval& a, const ValueInterval& b) { return a.size() < b.size(); });

  // parent = smallest strong interval strictly containing it (laminar family)
  const int m = static_cast<int>(strong.size());
  std::vector<std::vector<int>> children(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (strong[static_cast<std::size_t>(i)].contained_in(strong[static_cast<std::size_t>(j)]) &&
          strong[static_cast<std::size_t>(j)].size() > strong[static_cast<std::size_t>(i)].size()) {
        children[static_cast<std::size_t>(j)].push_back(i);
        break;
      }
    }
  }

  auto build = [&](auto&& self, int idx) -> DecompositionTree {
    auto kids = children[static_cast<std::size_t>(idx)];
    if (kids.empty()) return DecompositionTree::leaf();
    std::sort(kids.begin(), kids.end(), [&](int a, int b) {
      return window_of(p, strong[static_cast<std::size_t>(a)]).first <
             window_of(p, strong[static_cast<std::size_t>(b)]).first;
    });
    std::vector<DecompositionTree> sub;
    std::vector<int> lows;
    for (int k : kids) {
      sub.push_back(self(self, k));
      lows.push_back(strong[static_cast<std::size_t>(k)].lo());
    }
    // quotient pattern: standardization of the children's value ranges
    std::vector<int> sorted_lows = lows;
    std::sort(sorted_lows.begin(), sorted_lows.end());
    std::vector<int> pat;
    for (int v : lows)
      pat.push_back(static_cast<int>(std::lower_bound(sorted_lows.begin(), sorted_lows.end(), v) -
                                     sorted_lows.begin()) +
                    1);
    const int k = static_cast<int>(pat.size());
    bool inc = true, dec = true;
    for (int i = 0; i < k; ++i) {
      inc = inc && pat[static_cast<std::size_t>(i)] == i + 1;
      dec = dec && pat[static_cast<std::size_t>(i)] == k - i;
    }
    if (inc) return DecompositionTree::plus(std::move(sub));
    if (dec) return DecompositionTree::minus(std::move(sub));
    Permutation quotient(pat);
    assert(is_simple(quotient));
    return DecompositionTree::simple(std::move(quotient), std::move(sub));
  };

  // root is the unique strong interval of full size
  return build(build, m - 1);
}

namespace {

void validate_tree(const DecompositionTree& t, DecompositionTree::Label parent) {
  using L = DecompositionTree::Label;
  switch (t.label()) {
    case L::leaf:
      if (!t.children().empty()) throw std::invalid_argument("leaf with children");
      return;
    case L::plus:
    case L::minus:
      if (t.children().size() < 2)
        throw std::invalid_argument("monotone node needs at least 2 children");
      if (t.label() == parent)
        throw std::invalid_argument(std::string("forbidden ") +
                                    (parent == L::plus ? "+/+" : "-/-") + " edge");
      break;
    case L::simple:
      if (!is_simple(t.simple_label()))
        throw std::invalid_argument("node label " + format_permutation(t.simple_label()) +
                                    " is not a simple permutation");
      if (static_cast<int>(t.children().size()) != t.simple_label().size())
        throw std::invalid_argument("simple node arity mismatch");
      break;
  }
  for (const auto& c : t.children()) validate_tree(c, t.label());
}

Permutation realize_tree(const DecompositionTree& t) {
  using L = DecompositionTree::Label;
  if (t.is_leaf()) return Permutation({1});
  std::vector<Permutation> parts;
  parts.reserve(t.children().size());
  for (const auto& c : t.children()) parts.push_back(realize_tree(c));
  const int k = static_cast<int>(parts.size());
  switch (t.label()) {
    case L::plus: return inflate(Permutation::identity(k), parts);
    case L::minus: return inflate(Permutation::decreasing(k), parts);
    default: return inflate(t.simple_label(), parts);
  }
}

} // namespace

Permutation tree_to_permutation(const DecompositionTree& t) {
  validate_tree(t, DecompositionTree::Label::leaf);
  return realize_tree(t);
}

Skeleton skeleton(const DecompositionTree& t) {
  if (t.is_leaf()) return Skeleton::leaf();
  std::vector<Skeleton> ch;
  ch.reserve(t.children().size());
  for (const auto& c : t.children()) ch.push_back(skeleton(c));
  if (t.label() == DecompositionTree::Label::simple) return Skeleton::prime(std::move(ch));
  return Skeleton::linear(std::move(ch));
}

namespace {

bool tree_has_simple(const DecompositionTree& t) {
  if (t.label() == DecompositionTree::Label::simple) return true;
  for (const auto& c : t.children())
    if (tree_has_simple(c)) return true;
  return false;
}

} // namespace

bool is_separable(const Permutation& p) { return !tree_has_simple(decomposition_tree(p)); }

bool has_prime_node(const Skeleton& s) {
  if (s.kind() == Skeleton::Kind::prime) return true;
  for (const auto& c : s.children())
    if (has_prime_node(c)) return true;
  return false;
}

bool has_wide_linear_node(const Skeleton& s) {
  if (s.kind() == Skeleton::Kind::linear && s.children().size() >= 3) return true;
  for (const auto& c : s.children())
    if (has_wide_linear_node(c)) return true;
  return false;
}

std::string format_tree(const DecompositionTree& t) {
  using L = DecompositionTree::Label;
  if (t.is_leaf()) return "1";
  std::string out;
  switch (t.label()) {
    case L::plus: out = "+"; break;
    case L::minus: out = "-"; break;
    default: out = format_permutation(t.simple_label()); break;
  }
  out += '[';
  for (std::size_t i = 0; i < t.children().size(); ++i) {
    if (i) out += ',';
    out += format_tree(t.children()[i]);
  }
  out += ']';
  return out;
}

std::string format_skeleton(const Skeleton& s) {
  if (s.is_leaf()) return "1";
  std::string out = s.kind() == Skeleton::Kind::prime ? "P" : "L";
  out += '[';
  for (std::size_t i = 0; i < s.children().size(); ++i) {
    if (i) out += ',';
    out += format_skeleton(s.children()[i]);
  }
  out += ']';
  return out;
}

namespace {

class TermParser {
public:
  explicit TermParser(std::string_view text) : text_(text) {}

  DecompositionTree parse_tree_term() {
    auto t = tree_node();
    expect_end();
    return t;
  }

  Skeleton parse_skeleton_term() {
    auto s = skeleton_node();
    expect_end();
    return s;
  }

private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char get() { return pos_ < text_.size() ? text_[pos_++] : '\0'; }
  void expect(char c) {
    if (get() != c) fail(std::string("expected '") + c + "'");
  }
  void expect_end() {
    if (pos_ != text_.size()) fail("trailing characters");
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("term parse error at offset " + std::to_string(pos_) + ": " + why);
  }

  long read_int() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
    long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) v = v * 10 + (get() - '0');
    return v;
  }

  std::string_view read_token() {
    std::size_t start = pos_;
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
    while (std::isdigit(static_cast<unsigned char>(peek()))) get();
    return text_.substr(start, pos_ - start);
  }

  DecompositionTree tree_node() {
    char c = peek();
    if (c == '+') {
      get();
      return DecompositionTree::plus(tree_children());
    }
    if (c == '-') {
      get();
      return DecompositionTree::minus(tree_children());
    }
    if (!std::isdigit(static_cast<unsigned char>(c))) fail("expected node");
    std::string_view first = read_token();
    // A lone "1" is a leaf: simple labels never start with the value 1,
    // since such a permutation is +-decomposable.
    if (first == "1" && peek() != '[') return DecompositionTree::leaf();
    std::vector<int> word;
    if (peek() == '[') {
      // digit-string label, one value per decimal digit
      for (char d : first) word.push_back(d - '0');
    } else {
      // comma-separated label (values above 9)
      word.push_back(static_cast<int>(parse_long(first)));
      while (peek() == ',') {
        get();
        word.push_back(static_cast<int>(read_int()));
        if (peek() == '[') break;
        if (peek() != ',') fail("malformed simple label");
      }
      if (peek() != '[') fail("simple label must be followed by children");
    }
    Permutation label{word};
    auto ch = tree_children();
    return DecompositionTree::simple(std::move(label), std::move(ch));
  }

  static long parse_long(std::string_view s) {
    long v = 0;
    for (char d : s) v = v * 10 + (d - '0');
    return v;
  }

  std::vector<DecompositionTree> tree_children() {
    expect('[');
    std::vector<DecompositionTree> ch;
    ch.push_back(tree_node());
    while (peek() == ',') {
      get();
      ch.push_back(tree_node());
    }
    expect(']');
    return ch;
  }

  Skeleton skeleton_node() {
    char c = peek();
    if (c == '1') {
      get();
      return Skeleton::leaf();
    }
    if (c != 'P' && c != 'L') fail("expected 'P', 'L' or '1'");
    get();
    expect('[');
    std::vector<Skeleton> ch;
    ch.push_back(skeleton_node());
    while (peek() == ',') {
      get();
      ch.push_back(skeleton_node());
    }
    expect(']');
    return c == 'P' ? Skeleton::prime(std::move(ch)) : Skeleton::linear(std::move(ch));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

} // namespace

DecompositionTree parse_tree(std::string_view text) { return TermParser(text).parse_tree_term(); }

Skeleton parse_skeleton(std::string_view text) { return TermParser(text).parse_skeleton_term(); }

Skeleton canonical_skeleton(const Skeleton& s) {
  if (s.is_leaf()) return Skeleton::leaf();
  std::vector<Skeleton> ch;
  ch.reserve(s.children().size());
  for (const auto& c : s.children()) ch.push_back(canonical_skeleton(c));
  std::sort(ch.begin(), ch.end(), [](const Skeleton& a, const Skeleton& b) {
    return format_skeleton(a) < format_skeleton(b);
  });
  return s.kind() == Skeleton::Kind::prime ? Skeleton::prime(std::move(ch))
                                           : Skeleton::linear(std::move(ch));
}

namespace {

mpz_class realizer_count_rec(const Skeleton& s, Skeleton::Kind parent) {
  if (s.is_leaf()) return 1;
  mpz_class r = 1;
  if (s.kind() == Skeleton::Kind::prime) {
    r = static_cast<unsigned long>(
        enumerate_simple(static_cast<int>(s.children().size())).size());
  } else if (parent != Skeleton::Kind::linear) {
    r = 2; // a linear node under a linear parent has its label forced
  }
  for (const auto& c : s.children()) r *= realizer_count_rec(c, s.kind());
  return r;
}

} // namespace

mpz_class realizer_count(const Skeleton& s) {
  return realizer_count_rec(s, Skeleton::Kind::leaf);
}

namespace {
std::atomic<std::uint64_t> g_realizer_cap{1000000};
}

std::uint64_t realizer_output_cap() { return g_realizer_cap.load(); }
void set_realizer_output_cap(std::uint64_t cap) { g_realizer_cap.store(cap); }

namespace {

// one free choice per prime node and per linear node without a linear parent
struct ChoiceSlot {
  const Skeleton* node;
  bool prime;
};

void collect_slots(const Skeleton& s, Skeleton::Kind parent, std::vector<ChoiceSlot>& slots) {
  if (s.is_leaf()) return;
  if (s.kind() == Skeleton::Kind::prime)
    slots.push_back({&s, true});
  else if (parent != Skeleton::Kind::linear)
    slots.push_back({&s, false});
  for (const auto& c : s.children()) collect_slots(c, s.kind(), slots);
}

DecompositionTree assign_labels(const Skeleton& s, bool plus_here,
                                const std::vector<const Skeleton*>& order,
                                const std::vector<std::size_t>& choice, std::size_t& slot_pos) {
  if (s.is_leaf()) return DecompositionTree::leaf();
  bool is_slot = slot_pos < order.size() && order[slot_pos] == &s;
  std::size_t my_choice = is_slot ? choice[slot_pos] : 0;
  if (is_slot) ++slot_pos;

  if (s.kind() == Skeleton::Kind::prime) {
    const auto& simples = enumerate_simple(static_cast<int>(s.children().size()));
    std::vector<DecompositionTree> ch;
    for (const auto& c : s.children())
      ch.push_back(assign_labels(c, true, order, choice, slot_pos)); // children of prime: free
    return DecompositionTree::simple(simples[my_choice], std::move(ch));
  }
  // linear: either a free slot (choice 0 = +, 1 = -) or forced opposite of parent
  bool plus = is_slot ? my_choice == 0 : plus_here;
  std::vector<DecompositionTree> ch;
  for (const auto& c : s.children())
    ch.push_back(assign_labels(c, !plus, order, choice, slot_pos));
  return plus ? DecompositionTree::plus(std::move(ch)) : DecompositionTree::minus(std::move(ch));
}

} // namespace

std::vector<Permutation> enumerate_realizers(const Skeleton& s) {
  mpz_class count = realizer_count(s);
  if (count > realizer_output_cap())
    throw FeasibilityError("realizer count " + count.get_str() + " exceeds the output cap " +
                           std::to_string(realizer_output_cap()));

  std::vector<ChoiceSlot> slots;
  collect_slots(s, Skeleton::Kind::leaf, slots);
  std::vector<const Skeleton*> order;
  std::vector<std::size_t> radix;
  for (const auto& slot : slots) {
    order.push_back(slot.node);
    radix.push_back(slot.prime
                        ? enumerate_simple(static_cast<int>(slot.node->children().size())).size()
                        : 2);
  }

  std::vector<Permutation> out;
  std::vector<std::size_t> choice(slots.size(), 0);
  while (true) {
    std::size_t slot_pos = 0;
    out.push_back(tree_to_permutation(assign_labels(s, true, order, choice, slot_pos)));
    // odometer, last slot fastest: lexicographic order of assignments
    std::size_t i = choice.size();
    while (i > 0) {
      --i;
      if (++choice[i] < radix[i]) break;
      choice[i] = 0;
      if (i == 0) return out;
    }
    if (choice.empty()) return out;
  }
}

} // namespace ivp
