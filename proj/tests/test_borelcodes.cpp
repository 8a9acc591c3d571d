#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "ramsel/borelcodes.hpp"
#include "ramsel/io.hpp"

using namespace ramsel;

namespace {

bool same_tree(const LabeledTree& a, const LabeledTree& b) {
  return io::tree_to_json(a) == io::tree_to_json(b);
}

std::vector<bool> bits(const std::string& s) {
  return io::bits_from_string(s);
}

}  // namespace

TEST_CASE("basic cylinder words") {
  REQUIRE(basic_open(0).empty());
  REQUIRE(basic_open(1) == bits("0"));
  REQUIRE(basic_open(2) == bits("1"));
  REQUIRE(basic_open(3) == bits("00"));
  REQUIRE(basic_open(4) == bits("01"));
  REQUIRE(basic_open(5) == bits("10"));
  REQUIRE(basic_open(6) == bits("11"));
  REQUIRE(basic_open(7) == bits("000"));
}

TEST_CASE("structural validation") {
  std::string why;
  REQUIRE(validate_tree(whole_space_tree(), &why));
  REQUIRE(validate_tree(empty_set_tree(), &why));
  REQUIRE(validate_tree(cylinder_union_tree({3, 5}), &why));

  LabeledTree twoKids;
  twoKids.nodes.push_back({1, 0, {1, 2}});
  twoKids.nodes.push_back({0, 0, {}});
  twoKids.nodes.push_back({0, 1, {}});
  REQUIRE_FALSE(validate_tree(twoKids, &why));

  LabeledTree sameCoord;
  sameCoord.nodes.push_back({0, 0, {1, 2}});
  sameCoord.nodes.push_back({0, 3, {}});
  sameCoord.nodes.push_back({0, 3, {}});
  REQUIRE_FALSE(validate_tree(sameCoord, &why));
  REQUIRE(why.find("increase") != std::string::npos);

  LabeledTree negChild;
  negChild.nodes.push_back({1, 0, {1}});
  negChild.nodes.push_back({1, 0, {2}});
  negChild.nodes.push_back({0, 0, {}});
  REQUIRE_FALSE(validate_tree(negChild, &why));

  LabeledTree orphan;
  orphan.nodes.push_back({0, 0, {}});
  orphan.nodes.push_back({0, 1, {}});
  REQUIRE_FALSE(validate_tree(orphan, &why));
  REQUIRE(why.find("unreachable") != std::string::npos);

  REQUIRE_FALSE(validate_tree(LabeledTree{}, &why));
}

TEST_CASE("membership labels on frozen codes") {
  REQUIRE(tree_member(bits("0101"), whole_space_tree()));
  REQUIRE(tree_member(bits("1111"), whole_space_tree()));
  REQUIRE_FALSE(tree_member(bits("0101"), empty_set_tree()));

  LabeledTree u = cylinder_union_tree({3, 5});  // words 00 and 10
  REQUIRE_FALSE(tree_member(bits("01"), u));
  REQUIRE(tree_member(bits("00"), u));
  REQUIRE(tree_member(bits("10"), u));
  std::vector<int> S = label_run(bits("01"), u);
  REQUIRE(S == std::vector<int>{0, 0, 0});
  REQUIRE(label_run(bits("00"), u) == std::vector<int>{1, 1, 0});

  REQUIRE_THROWS_AS(tree_member(bits("0"), cylinder_tree(3)),
                    PrefixTooShort);
}

TEST_CASE("complement wraps and unwraps") {
  REQUIRE(same_tree(empty_set_tree(), complement_tree(whole_space_tree())));
  REQUIRE(same_tree(complement_tree(empty_set_tree()), whole_space_tree()));

  LabeledTree u = cylinder_union_tree({3, 5});
  LabeledTree cu = complement_tree(u);
  REQUIRE(cu.nodes.front().label == 1);
  REQUIRE(validate_tree(cu));
  REQUIRE(same_tree(complement_tree(cu), u));
  REQUIRE(tree_member(bits("01"), cu));
  REQUIRE_FALSE(tree_member(bits("00"), cu));
}

TEST_CASE("complement flips membership on random codes") {
  std::mt19937_64 rng(8086);
  for (int round = 0; round < 200; ++round) {
    LabeledTree T = oracles::random_tree(rng, 3, 10, 3);
    REQUIRE(validate_tree(T));
    LabeledTree G = complement_tree(T);
    REQUIRE(validate_tree(G));
    std::vector<bool> x;
    for (int b = 0; b < 8; ++b) x.push_back(rng() % 2 == 1);
    REQUIRE(tree_member(x, G) == !tree_member(x, T));
  }
}

TEST_CASE("both evaluation orders agree") {
  std::mt19937_64 rng(5150);
  for (int round = 0; round < 500; ++round) {
    LabeledTree T = oracles::random_tree(rng, 3, 10, 3);
    std::vector<bool> x;
    for (int b = 0; b < 8; ++b) x.push_back(rng() % 2 == 1);
    REQUIRE(label_run(x, T, EvalOrder::BottomUp) ==
            label_run(x, T, EvalOrder::TopDown));
  }
}

TEST_CASE("labels agree with direct set semantics on small codes") {
  std::vector<LabeledTree> trees = oracles::all_trees(2, 4, 5);
  REQUIRE(trees.size() > 50);
  for (const auto& T : trees) {
    REQUIRE(validate_tree(T));
    for (unsigned v = 0; v < 16; ++v) {
      std::vector<bool> x;
      for (std::size_t b = 0; b < 4; ++b) x.push_back((v >> b) & 1u);
      REQUIRE(tree_member(x, T) == oracles::direct_member4(x, T));
    }
  }
}

TEST_CASE("coded functions evaluate coordinatewise") {
  FuncCode all;
  all.coords = {whole_space_tree(), whole_space_tree(), whole_space_tree()};
  REQUIRE(io::bits_to_string(omega_eval(bits("0101"), all, 3)) == "111");

  FuncCode alt;
  alt.coords = {whole_space_tree(), empty_set_tree(), whole_space_tree(),
                empty_set_tree()};
  REQUIRE(io::bits_to_string(omega_eval(bits("0101"), alt, 4)) == "1010");

  FuncCode zeros;
  zeros.coords = {cylinder_tree(0), cylinder_tree(1), cylinder_tree(3)};
  REQUIRE(io::bits_to_string(omega_eval(bits("000"), zeros, 3)) == "111");
  REQUIRE(io::bits_to_string(omega_eval(bits("010"), zeros, 3)) == "110");

  // beyond the explicit list the default coordinate is the empty set
  FuncCode one;
  one.coords = {whole_space_tree()};
  REQUIRE(io::bits_to_string(omega_eval(bits("0101"), one, 3)) == "100");
}

TEST_CASE("tree files round-trip") {
  std::mt19937_64 rng(1234);
  for (int round = 0; round < 50; ++round) {
    LabeledTree T = oracles::random_tree(rng, 3, 8, 3);
    REQUIRE(same_tree(io::tree_from_json(io::tree_to_json(T)), T));
  }
  REQUIRE_THROWS_AS(
      io::tree_from_json(io::json::parse("[1,[[0,0,[]],[1,1,[]]]]")),
      std::invalid_argument);
  REQUIRE_THROWS_AS(io::tree_from_json(io::json::parse("[0]")),
                    std::invalid_argument);
}
