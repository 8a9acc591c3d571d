#include <catch2/catch_amalgamated.hpp>

#include <gmpxx.h>

#include <random>
#include <vector>

#include "oracles.hpp"
#include "ramsel/workbench.hpp"

using namespace ramsel;

TEST_CASE("point enumerations") {
  OrderedEnumeration sb = stern_brocot_unit();
  REQUIRE(sb.point(0) == mpq_class(1, 2));
  REQUIRE(sb.point(1) == mpq_class(1, 3));
  REQUIRE(sb.point(2) == mpq_class(2, 3));
  REQUIRE(sb.point(3) == mpq_class(1, 4));
  REQUIRE(sb.point(4) == mpq_class(2, 5));
  REQUIRE(sb.point(5) == mpq_class(3, 5));
  REQUIRE(sb.point(6) == mpq_class(3, 4));

  OrderedEnumeration r = rationals_unit();
  REQUIRE(r.point(0) == mpq_class(0));
  REQUIRE(r.point(1) == mpq_class(1));
  REQUIRE(r.point(2) == mpq_class(1, 2));
  REQUIRE(r.point(3) == mpq_class(1, 3));

  OrderedEnumeration a = alternating_approach();
  REQUIRE(a.point(0) == mpq_class(0));
  REQUIRE(a.point(1) == mpq_class(1));
  REQUIRE(a.point(2) == mpq_class(1, 6));
  REQUIRE(a.point(3) == mpq_class(5, 6));
  REQUIRE(a.point(4) == mpq_class(1, 4));

  // distinct points across a window, for every registered enumeration
  for (const char* name : {"stern-brocot", "alternating", "rationals"}) {
    OrderedEnumeration E = enumeration_by_name(name);
    for (nat i = 0; i < 24; ++i)
      for (nat j = i + 1; j < 24; ++j) REQUIRE(E.point(i) != E.point(j));
  }
  REQUIRE_THROWS_AS(enumeration_by_name("nope"), std::invalid_argument);
}

TEST_CASE("order-agreement family") {
  auto famRat = sierpinski_family(rationals_unit());
  REQUIRE(famRat(FinSet{0, 1}));
  REQUIRE_FALSE(famRat(FinSet{2, 3}));
  REQUIRE_FALSE(famRat(FinSet{5}));
  REQUIRE_FALSE(famRat(FinSet{1, 2, 3}));
}

TEST_CASE("pair homogeneity for order agreement is monotonicity") {
  for (const char* name : {"stern-brocot", "alternating"}) {
    OrderedEnumeration E = enumeration_by_name(name);
    auto fam = sierpinski_family(E);
    for (nat m = 0; m < (nat{1} << 12); ++m) {
      FinSet s = index_set(m);
      if (s.size() < 2) continue;
      bool inc = true, dec = true;
      for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        if (E.point(s[i]) < E.point(s[i + 1]))
          dec = false;
        else
          inc = false;
      }
      REQUIRE(oracles::monochromatic(fam, s, 2, true) == inc);
      REQUIRE(oracles::monochromatic(fam, s, 2, false) == dec);
    }
  }
}

TEST_CASE("threshold pair coloring") {
  REQUIRE(cy_pair_color(NatStream::powers(2), 1, 3) == 0);
  REQUIRE(cy_pair_color(NatStream::powers(2), 3, 1) == 0);
  REQUIRE(cy_pair_color(NatStream::powers(2), 2, 3) == 1);
  REQUIRE(cy_pair_color(NatStream::powers(2), 0, 9) == 1);

  auto fam = cy_family(NatStream::powers(2));
  for (nat k = 0; k < 12; ++k)
    for (nat l = k + 1; l < 12; ++l)
      REQUIRE(fam(FinSet{k, l}) ==
              (cy_pair_color(NatStream::powers(2), k, l) == 1));
  REQUIRE_FALSE(fam(FinSet{3}));
}

TEST_CASE("gap-dominance membership") {
  REQUIRE(cy_member(NatStream::powers(2), FinSet{1, 3, 7}));
  REQUIRE_FALSE(cy_member(NatStream::powers(2), FinSet{1, 2, 3}));
  REQUIRE_FALSE(cy_member(NatStream::powers(2), FinSet{0, 5}));
  REQUIRE(cy_member(NatStream::powers(2), FinSet{5}));
  REQUIRE(cy_member(NatStream::powers(2), FinSet{}));
}

TEST_CASE("spread-side homogeneous sets satisfy gap dominance") {
  for (nat m = 0; m < (nat{1} << 13); ++m) {
    FinSet z = index_set(m);
    if (z.size() < 2) continue;
    bool zeroHom = true;
    for (std::size_t i = 0; i < z.size() && zeroHom; ++i)
      for (std::size_t j = i + 1; j < z.size() && zeroHom; ++j)
        if (cy_pair_color(NatStream::powers(2), z[i], z[j]) != 0)
          zeroHom = false;
    if (zeroHom) REQUIRE(cy_member(NatStream::powers(2), z));
  }
}

TEST_CASE("position image") {
  REQUIRE(gamma_map(NatStream::arithmetic(0, 2), NatStream::arithmetic(1, 2),
                    3) == FinSet{2, 6, 10});
  REQUIRE(gamma_map(NatStream::naturals(), NatStream::arithmetic(0, 2), 3) ==
          FinSet{0, 2, 4});
  REQUIRE(gamma_map(NatStream::powers(2), NatStream::naturals(), 4) ==
          FinSet{1, 2, 4, 8});
  REQUIRE(gamma_map(NatStream::naturals(), NatStream::powers(3), 0) ==
          FinSet{});

  // the image picks from the ground stream's values
  FinSet img = gamma_map(NatStream::from_nth([](nat k) { return k * k; }),
                         NatStream::powers(2), 4);
  REQUIRE(img.subset_of(take(NatStream::from_nth([](nat k) { return k * k; }),
                             1 << 10)));
}

TEST_CASE("monochromatic closed tree") {
  ClosedFamilyTree K =
      mono_color_tree(sierpinski_family(stern_brocot_unit()), "hom");
  REQUIRE(down_member(K, FinSet{}));
  REQUIRE(down_member(K, FinSet{7}));
  REQUIRE(down_member(K, FinSet{1, 4, 5}));
  REQUIRE_FALSE(down_member(K, FinSet{0, 1, 2}));
  for (nat m = 0; m < (nat{1} << 10); ++m) {
    FinSet s = index_set(m);
    if (!down_member(K, s)) continue;
    for (nat e : s) REQUIRE(down_member(K, s.without(e)));
  }
}

TEST_CASE("convergent index selection") {
  SelectorReport r = convergent_select(alternating_approach(), 16);
  REQUIRE(r.verdict != HomVerdict::Neither);
  REQUIRE(r.output.size() >= 6);
  OrderedEnumeration E = alternating_approach();
  for (std::size_t i = 0; i + 1 < r.output.size(); ++i) {
    if (r.verdict == HomVerdict::Hom1)
      REQUIRE(E.point(r.output[i]) < E.point(r.output[i + 1]));
    else
      REQUIRE(E.point(r.output[i]) > E.point(r.output[i + 1]));
  }
}

TEST_CASE("restricted index selection returns a homogeneous whole prefix") {
  NatStream x = NatStream::prefix_then(FinSet{1, 4, 5, 6},
                                       NatStream::arithmetic(100, 1));
  SelectorReport r = nwd_select(stern_brocot_unit(), x, 7);
  REQUIRE(r.output == FinSet{1, 4, 5, 6});
  REQUIRE(r.verdict == HomVerdict::Hom1);
}

TEST_CASE("registered names resolve") {
  REQUIRE(take(stream_by_name("naturals"), 3) == FinSet{0, 1, 2});
  REQUIRE(take(stream_by_name("evens"), 6) == FinSet{0, 2, 4});
  REQUIRE(take(stream_by_name("odds"), 6) == FinSet{1, 3, 5});
  REQUIRE(take(stream_by_name("powers-2"), 5) == FinSet{1, 2, 4});
  REQUIRE(take(stream_by_name("powers-3"), 10) == FinSet{1, 3, 9});
  REQUIRE(take(stream_by_name("squares"), 5) == FinSet{0, 1, 4});
  REQUIRE_THROWS_AS(stream_by_name("nope"), std::invalid_argument);

  REQUIRE(even_sum_family()(FinSet{0, 2}));
  REQUIRE_FALSE(even_sum_family()(FinSet{0, 1}));
  REQUIRE_FALSE(even_sum_family()(FinSet{0, 2, 4}));
  REQUIRE(family_by_name("even-sum")(FinSet{1, 3}));
  REQUIRE(family_by_name("sierpinski-stern-brocot")(FinSet{1, 0}) ==
          sierpinski_family(stern_brocot_unit())(FinSet{0, 1}));
  REQUIRE_THROWS_AS(family_by_name("nope"), std::invalid_argument);

  REQUIRE(down_member(closed_by_name("subset-evens"), FinSet{0, 2}));
  REQUIRE(down_member(closed_by_name("hom-sierpinski"), FinSet{1, 4}));
  REQUIRE_THROWS_AS(closed_by_name("nope"), std::invalid_argument);
}
