#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "streams.hpp"

namespace ramsel {

// Fixed enumeration of basic cylinders: t(n) is the binary expansion of n+1
// with the leading 1 removed, most significant digit first. t(0) is the
// empty word (the whole space).
inline std::vector<bool> basic_open(nat n) {
  nat v = n + 1;
  std::vector<bool> w;
  while (v > 1) {
    w.push_back(v & 1);
    v >>= 1;
  }
  std::reverse(w.begin(), w.end());
  return w;
}

// Set code on a finite labeled tree. Node semantics: a 0-labeled leaf is the
// cylinder of its incoming coordinate (the root as leaf is the whole space);
// a 0-labeled internal node is the union of its children; a 1-labeled node
// is the complement of its single 0-labeled child at coordinate 0.
// Structural invariants (validate_tree): parents precede children, every
// non-root node is a child exactly once, child coordinates strictly increase.
struct LabeledTree {
  struct Node {
    int label = 0;
    nat coord = 0;  // incoming edge coordinate; unused for the root
    std::vector<std::size_t> kids;
  };
  std::vector<Node> nodes;
};

inline bool validate_tree(const LabeledTree& T, std::string* why = nullptr) {
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  if (T.nodes.empty()) return fail("no nodes");
  std::vector<int> seen(T.nodes.size(), 0);
  for (std::size_t i = 0; i < T.nodes.size(); ++i) {
    const auto& nd = T.nodes[i];
    if (nd.label != 0 && nd.label != 1) return fail("label out of range");
    for (std::size_t j = 0; j < nd.kids.size(); ++j) {
      std::size_t c = nd.kids[j];
      if (c <= i || c >= T.nodes.size())
        return fail("child index must exceed its parent");
      if (seen[c]++) return fail("node is a child twice");
      if (j && T.nodes[c].coord <= T.nodes[nd.kids[j - 1]].coord)
        return fail("child coordinates must strictly increase");
    }
    if (nd.label == 1) {
      if (nd.kids.size() != 1)
        return fail("1-labeled node must have exactly one child");
      const auto& c = T.nodes[nd.kids[0]];
      if (c.coord != 0 || c.label != 0)
        return fail("1-labeled node's child must be 0-labeled at coordinate 0");
    }
  }
  for (std::size_t i = 1; i < T.nodes.size(); ++i)
    if (!seen[i]) return fail("unreachable node");
  if (why) why->clear();
  return true;
}

enum class EvalOrder { BottomUp, TopDown };

namespace detail {

inline bool cylinder_hit(nat coord, const std::vector<bool>& x) {
  std::vector<bool> w = basic_open(coord);
  if (w.size() > x.size())
    throw PrefixTooShort("labeled tree: cylinder needs " +
                         std::to_string(w.size()) + " digits, prefix has " +
                         std::to_string(x.size()));
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] != x[i]) return false;
  return true;
}

}  // namespace detail

// Membership labels for every node on the given prefix. Either evaluation
// order yields the same labels; both are provided so that can be checked.
inline std::vector<int> label_run(const std::vector<bool>& x,
                                  const LabeledTree& T,
                                  EvalOrder order = EvalOrder::BottomUp) {
  std::vector<int> S(T.nodes.size(), -1);
  auto eval_leaf = [&](std::size_t i) {
    nat coord = i == 0 ? 0 : T.nodes[i].coord;
    return detail::cylinder_hit(coord, x) ? 1 : 0;
  };
  if (order == EvalOrder::BottomUp) {
    for (std::size_t r = T.nodes.size(); r-- > 0;) {
      const auto& nd = T.nodes[r];
      if (nd.kids.empty()) {
        S[r] = eval_leaf(r);
      } else if (nd.label == 1) {
        S[r] = 1 - S[nd.kids[0]];
      } else {
        int v = 0;
        for (std::size_t c : nd.kids) v = v || S[c];
        S[r] = v;
      }
    }
    return S;
  }
  std::function<int(std::size_t)> go = [&](std::size_t i) -> int {
    if (S[i] != -1) return S[i];
    const auto& nd = T.nodes[i];
    if (nd.kids.empty()) return S[i] = eval_leaf(i);
    if (nd.label == 1) return S[i] = 1 - go(nd.kids[0]);
    int v = 0;
    for (std::size_t c : nd.kids) v = v || go(c);
    return S[i] = v;
  };
  go(0);
  for (std::size_t i = 0; i < T.nodes.size(); ++i)
    if (S[i] == -1) go(i);
  return S;
}

inline bool tree_member(const std::vector<bool>& x, const LabeledTree& T) {
  return label_run(x, T).front() == 1;
}

// Complement: wrap a 0-rooted tree under a fresh 1-root; unwrap a 1-rooted
// tree to its only child's subtree.
inline LabeledTree complement_tree(const LabeledTree& T) {
  LabeledTree R;
  if (T.nodes.front().label == 1) {
    // re-extract the child subtree, re-indexed
    std::vector<std::size_t> map(T.nodes.size(), 0);
    std::vector<std::size_t> order;
    std::function<void(std::size_t)> collect = [&](std::size_t i) {
      map[i] = order.size();
      order.push_back(i);
      for (std::size_t c : T.nodes[i].kids) collect(c);
    };
    collect(T.nodes.front().kids[0]);
    for (std::size_t i : order) {
      LabeledTree::Node nd = T.nodes[i];
      for (auto& c : nd.kids) c = map[c];
      R.nodes.push_back(std::move(nd));
    }
    R.nodes.front().coord = 0;
    return R;
  }
  R.nodes.push_back(LabeledTree::Node{1, 0, {1}});
  for (const auto& nd : T.nodes) {
    LabeledTree::Node m = nd;
    for (auto& c : m.kids) c += 1;
    R.nodes.push_back(std::move(m));
  }
  R.nodes[1].coord = 0;
  return R;
}

inline LabeledTree whole_space_tree() {
  LabeledTree T;
  T.nodes.push_back(LabeledTree::Node{0, 0, {}});
  return T;
}

inline LabeledTree empty_set_tree() {
  return complement_tree(whole_space_tree());
}

// The cylinder t(n) as a tree: for n = 0 the root leaf, otherwise a union
// with a single leaf child at coordinate n.
inline LabeledTree cylinder_tree(nat n) {
  if (n == 0) return whole_space_tree();
  LabeledTree T;
  T.nodes.push_back(LabeledTree::Node{0, 0, {1}});
  T.nodes.push_back(LabeledTree::Node{0, n, {}});
  return T;
}

// Union of cylinders at the given coordinates (strictly increasing).
inline LabeledTree cylinder_union_tree(const std::vector<nat>& coords) {
  LabeledTree T;
  T.nodes.push_back(LabeledTree::Node{0, 0, {}});
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i && coords[i] <= coords[i - 1])
      throw std::invalid_argument(
          "cylinder_union_tree: coordinates must strictly increase");
    T.nodes.front().kids.push_back(T.nodes.size());
    T.nodes.push_back(LabeledTree::Node{0, coords[i], {}});
  }
  return T;
}

// Code of a function into set codes: one tree per coordinate below the
// explicit list's length, a default tree beyond it.
struct FuncCode {
  std::vector<LabeledTree> coords;
  LabeledTree dflt = empty_set_tree();
  const LabeledTree& at(nat n) const {
    return n < coords.size() ? coords[n] : dflt;
  }
};

// First m digits of the image point: digit n is membership in the n-th tree.
inline std::vector<bool> omega_eval(const std::vector<bool>& x,
                                    const FuncCode& F, nat m) {
  std::vector<bool> out;
  out.reserve(m);
  for (nat n = 0; n < m; ++n) out.push_back(tree_member(x, F.at(n)));
  return out;
}

}  // namespace ramsel
