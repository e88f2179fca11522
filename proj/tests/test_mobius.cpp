#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ivp/mobius.hpp"
#include "test_support.hpp"

using namespace ivp;
using ivp_test::for_each_permutation;

TEST_CASE("restriction") {
  auto sigma = parse_permutation("456793128");
  CHECK(restrict_to(sigma, ValueInterval(4, 7)) == parse_permutation("1234"));
  CHECK(restrict_to(sigma, ValueInterval(1, 9)) == sigma);
  CHECK(restrict_to(sigma, ValueInterval::single(3)) == parse_permutation("1"));
  CHECK(restrict_to(parse_permutation("456793128"), ValueInterval(1, 3)) ==
        parse_permutation("312"));
  CHECK_THROWS_AS(restrict_to(sigma, ValueInterval(2, 5)), std::invalid_argument);
  CHECK_THROWS_AS(restrict_to(sigma, ValueInterval::empty()), std::invalid_argument);

  SUBCASE("the subposet below J is the interval poset of the restriction") {
    for (int n = 1; n <= 5; ++n)
      for_each_permutation(n, [](const Permutation& p) {
        auto poset = poset_of(p, Variant::modified, true);
        for (const auto& J : intervals(p)) {
          auto tau = restrict_to(p, J);
          auto sub = poset_of(tau, Variant::modified, true);
          // count elements below J and match the restricted poset size
          int below = 0;
          int jidx = poset.index_of(J);
          for (int x = 0; x < static_cast<int>(poset.elements().size()); ++x)
            if (poset.leq(x, jidx)) ++below;
          REQUIRE(below == static_cast<int>(sub.elements().size()));
        }
      });
  }
}

TEST_CASE("generic Mobius values") {
  auto pointed = [](const char* w) {
    return poset_of(parse_permutation(w), Variant::modified, true);
  };

  auto p2413 = pointed("2413");
  CHECK(mobius_generic(p2413, ValueInterval::empty(), ValueInterval(1, 4)) == 3);
  CHECK(mobius_generic(p2413, ValueInterval(1, 4), ValueInterval(1, 4)) == 1);
  CHECK(mobius_generic(p2413, ValueInterval::single(2), ValueInterval(1, 4)) == -1);

  auto p123 = pointed("123");
  CHECK(mobius_generic(p123, ValueInterval::single(2), ValueInterval(1, 3)) == 1);
  CHECK(mobius_generic(p123, ValueInterval::empty(), ValueInterval(1, 3)) == 0);
  CHECK(mobius_generic(p123, ValueInterval(1, 2), ValueInterval(1, 3)) == -1);
  // incomparable pair
  CHECK(mobius_generic(p123, ValueInterval(2, 3), ValueInterval(1, 2)) == 0);

  for (const auto& e : p123.elements()) CHECK(mobius_generic(p123, e, e) == 1);

  CHECK_THROWS_AS(mobius_generic(p123, ValueInterval(2, 4), ValueInterval(1, 3)),
                  std::invalid_argument);

  SUBCASE("column sums vanish above non-minimal elements") {
    for (int n = 1; n <= 5; ++n)
      for_each_permutation(n, [](const Permutation& p) {
        auto poset = poset_of(p, Variant::modified, true);
        for (int b = 0; b < static_cast<int>(poset.elements().size()); ++b) {
          auto col = mobius_column(poset, poset.elements()[static_cast<std::size_t>(b)]);
          long long sum = 0;
          for (int a = 0; a < static_cast<int>(poset.elements().size()); ++a)
            if (poset.leq(a, b)) sum += col[static_cast<std::size_t>(a)];
          REQUIRE(sum == (poset.elements()[static_cast<std::size_t>(b)].is_empty() ? 1 : 0));
        }
      });
  }

  SUBCASE("zero lemma: an inner element comparable to the whole interval") {
    for (int n = 1; n <= 5; ++n)
      for_each_permutation(n, [](const Permutation& p) {
        auto poset = poset_of(p, Variant::modified, true);
        const int m = static_cast<int>(poset.elements().size());
        for (int a = 0; a < m; ++a)
          for (int b = 0; b < m; ++b) {
            if (a == b || !poset.leq(a, b)) continue;
            bool has_dominating_inner = false;
            for (int x = 0; x < m && !has_dominating_inner; ++x) {
              if (x == a || x == b || !poset.leq(a, x) || !poset.leq(x, b)) continue;
              bool comparable_to_all = true;
              for (int y = 0; y < m && comparable_to_all; ++y) {
                if (!poset.leq(a, y) || !poset.leq(y, b)) continue;
                comparable_to_all = poset.leq(x, y) || poset.leq(y, x);
              }
              has_dominating_inner = comparable_to_all;
            }
            if (has_dominating_inner)
              REQUIRE(mobius_generic(poset, poset.elements()[static_cast<std::size_t>(a)],
                                     poset.elements()[static_cast<std::size_t>(b)]) == 0);
          }
      });
  }
}

TEST_CASE("closed-form Mobius") {
  auto sigma = parse_permutation("456793128");
  // worked restriction: J = [4,7] restricts to 1234
  CHECK(mobius_closed(sigma, ValueInterval::single(5), ValueInterval(4, 7)) == 0);

  CHECK(mobius_closed(sigma, ValueInterval(1, 9), ValueInterval(1, 9)) == 1);
  CHECK(mobius_closed(sigma, ValueInterval(4, 7), ValueInterval(1, 9)) == -1); // coatom
  CHECK(mobius_closed(parse_permutation("123"), ValueInterval::empty(), ValueInterval(1, 3)) == 0);
  CHECK(mobius_closed(parse_permutation("2413"), ValueInterval::empty(), ValueInterval(1, 4)) == 3);
  CHECK(mobius_closed(parse_permutation("12"), ValueInterval::empty(), ValueInterval(1, 2)) == 1);
  CHECK(mobius_closed(parse_permutation("1"), ValueInterval::empty(), ValueInterval(1, 1)) == -1);
  // the element covered by both coatoms of an argyle block
  CHECK(mobius_closed(parse_permutation("1234"), ValueInterval(2, 3), ValueInterval(1, 4)) == 1);
  CHECK(mobius_closed(parse_permutation("123"), ValueInterval::single(2), ValueInterval(1, 3)) == 1);

  CHECK_THROWS_AS(mobius_closed(sigma, ValueInterval(2, 5), ValueInterval(1, 9)),
                  std::invalid_argument);

  SUBCASE("agrees with the generic recursion everywhere") {
    for (int n = 1; n <= 5; ++n)
      for_each_permutation(n, [](const Permutation& p) {
        auto poset = poset_of(p, Variant::modified, true);
        for (const auto& J : poset.elements()) {
          auto col = mobius_column(poset, J);
          for (std::size_t i = 0; i < poset.elements().size(); ++i)
            REQUIRE(mobius_closed(p, poset.elements()[i], J) == col[i]);
        }
      });
  }
}
