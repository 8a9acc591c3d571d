#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "fronts.hpp"
#include "ideals.hpp"
#include "streams.hpp"

namespace ramsel {

struct TraceEntry {
  nat step;
  nat branch;
  HomVerdict verdict;
};

struct SelectorReport {
  FinSet output;
  HomVerdict verdict = HomVerdict::Hom0;
  std::vector<TraceEntry> trace;
};

// Classify, then drop top elements until one homogeneity flag holds.
// The empty set carries both flags, so this always lands.
inline std::pair<FinSet, HomFlags> shrink_to_homogeneous(const ColorFamily& C,
                                                         FinSet s) {
  HomFlags f = classify_hom_set(C, s);
  while (f.verdict() == HomVerdict::Neither && !s.empty()) {
    s = s.without_max();
    f = classify_hom_set(C, s);
  }
  return {std::move(s), f};
}

// Split of the prefix by a singleton predicate: the predicate side is taken
// exactly when the positivity callback certifies it, otherwise the other
// side. Default positivity is the majority rule (ties favor the predicate
// side), so some side of size at least half the prefix is always available.
inline SelectorReport select_base(const std::function<bool(const FinSet&)>& f1,
                                  NatStream x,
                                  const std::function<bool(const FinSet&)>&
                                      positive,
                                  nat bound) {
  FinSet p = take(std::move(x), bound);
  std::vector<nat> s1, s0;
  for (nat m : p) (f1(FinSet{m}) ? s1 : s0).push_back(m);
  FinSet side1 = FinSet::from_sorted(std::move(s1));
  FinSet side0 = FinSet::from_sorted(std::move(s0));
  auto majority = [&p](const FinSet& s) { return 2 * s.size() >= p.size(); };
  SelectorReport r;
  if (!p.empty() && !side1.empty() &&
      (positive ? positive(side1) : majority(side1))) {
    r.output = std::move(side1);
    r.verdict = HomVerdict::Hom1;
  } else {
    r.output = std::move(side0);
    r.verdict = HomVerdict::Hom0;
  }
  r.trace.push_back(TraceEntry{
      0, r.verdict == HomVerdict::Hom1 ? nat{1} : nat{0}, r.verdict});
  return r;
}

namespace detail {

struct NwNode {
  FinSet out;
  HomFlags flags;
};

class NwRun {
 public:
  explicit NwRun(std::vector<TraceEntry>* trace) : trace_(trace) {}

  NwNode node(const ColorFamily& C, const FinSet& A, nat budget) {
    if (A.empty()) return NwNode{FinSet(), HomFlags{true, true}};
    bool singletonLevel = true;
    for (nat m : A)
      if (!C.front.member(FinSet{m})) {
        singletonLevel = false;
        break;
      }
    if (singletonLevel) return base(C, A);
    if (budget == 0)
      throw DepthExhausted("nw_select: derivative budget exhausted at " +
                           A.str());
    // fuse: each pivot's branch runs inside the previous branch's output
    std::vector<nat> pivots;
    std::vector<HomFlags> branchFlags;
    FinSet cur = A;
    while (!cur.empty()) {
      nat a = cur.min();
      FinSet rest = cur.above(a);
      NwNode b;
      if (C.front.member(FinSet{a})) {
        // {a} is itself a member: its branch is settled by its color and
        // constrains nothing above it
        bool c = C.in_family(FinSet{a});
        b = NwNode{std::move(rest), HomFlags{!c, c}};
      } else {
        ColorFamily D = derive_family(C, a);
        b = node(D, rest, budget - 1);
      }
      record(a, b.flags);
      pivots.push_back(a);
      branchFlags.push_back(b.flags);
      cur = b.out;
    }
    std::vector<nat> f1, f0, flex;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      bool h0 = branchFlags[i].hom0, h1 = branchFlags[i].hom1;
      if (h1 && !h0)
        f1.push_back(pivots[i]);
      else if (h0 && !h1)
        f0.push_back(pivots[i]);
      else
        flex.push_back(pivots[i]);
    }
    bool oneBigger = f1.size() >= f0.size();
    FinSet cand1 = FinSet(f1), cand0 = FinSet(f0);
    FinSet flexSet(flex);
    if (oneBigger)
      cand1 = cand1.union_with(flexSet);
    else
      cand0 = cand0.union_with(flexSet);
    auto [s1, fl1] = shrink_to_homogeneous(C, cand1);
    auto [s0, fl0] = shrink_to_homogeneous(C, cand0);
    if (s1.size() >= s0.size()) return NwNode{std::move(s1), fl1};
    return NwNode{std::move(s0), fl0};
  }

 private:
  // Every singleton is a front member: split by family color, keep the
  // larger side, ties to the 1-side. Flags are exact for an antichain front.
  NwNode base(const ColorFamily& C, const FinSet& A) {
    std::vector<nat> s1, s0;
    for (nat m : A) (C.in_family(FinSet{m}) ? s1 : s0).push_back(m);
    FinSet side1 = FinSet::from_sorted(std::move(s1));
    FinSet side0 = FinSet::from_sorted(std::move(s0));
    if (side1.size() >= side0.size())
      return NwNode{side1, HomFlags{side1.empty(), true}};
    return NwNode{side0, HomFlags{true, side0.empty()}};
  }

  void record(nat branch, const HomFlags& f) {
    if (trace_) trace_->push_back(TraceEntry{step_++, branch, f.verdict()});
  }

  std::vector<TraceEntry>* trace_;
  nat step_ = 0;
};

}  // namespace detail

// Homogeneous-set search along a front: recursive fusion over pivots, each
// branch restricted to the previous branch's output, followed by a verified
// side assembly. The reported verdict is the classifier's verdict of the
// final output, so the report is sound whenever classification is exact.
inline SelectorReport nw_select(const ColorFamily& C, NatStream x, nat bound) {
  SelectorReport r;
  FinSet p = take(std::move(x), bound);
  detail::NwRun run(&r.trace);
  nat budget = C.front.depth > 0 ? C.front.depth : 1;
  detail::NwNode n = run.node(C, p, budget);
  r.output = std::move(n.out);
  r.verdict = n.flags.verdict();
  return r;
}

namespace detail {

// Largest subset of p all of whose rank-size subsets have the given family
// color; among largest, the lexicographically least. Bitmask dynamic
// programming, so |p| must be small.
inline std::optional<FinSet> best_monochromatic(
    const std::function<bool(const FinSet&)>& fam, const FinSet& p, nat rank,
    bool color) {
  const std::size_t k = p.size();
  const nat lim = nat{1} << k;
  std::vector<char> mono(lim, 1);
  std::vector<nat> buf;
  std::optional<FinSet> best;
  for (nat m = 1; m < lim; ++m) {
    nat cnt = 0;
    for (nat t = m; t; t &= t - 1) ++cnt;
    nat top = 0;
    {
      nat t = m;
      while (t >>= 1) ++top;
    }
    const nat dt = m & ~(nat{1} << top);
    if (cnt < rank) {
      mono[m] = 1;
    } else {
      mono[m] = mono[dt];
      if (mono[m]) {
        // every rank-subset of m containing its top element
        std::vector<nat> below;
        for (nat i = 0; i < top; ++i)
          if ((dt >> i) & 1) below.push_back(i);
        buf.clear();
        std::function<bool(std::size_t, nat)> combos = [&](std::size_t start,
                                                           nat need) {
          if (need == 0) {
            std::vector<nat> v;
            for (nat b : buf) v.push_back(p[b]);
            v.push_back(p[top]);
            return fam(FinSet(std::move(v))) == color;
          }
          for (std::size_t i = start; i + need <= below.size(); ++i) {
            buf.push_back(below[i]);
            bool ok = combos(i + 1, need - 1);
            buf.pop_back();
            if (!ok) return false;
          }
          return true;
        };
        mono[m] = combos(0, rank - 1) ? 1 : 0;
      }
    }
    if (mono[m] && cnt >= rank) {
      std::vector<nat> v;
      for (std::size_t i = 0; i < k; ++i)
        if ((m >> i) & 1) v.push_back(p[i]);
      FinSet s = FinSet::from_sorted(std::move(v));
      if (!best || s.size() > best->size() ||
          (s.size() == best->size() && lex_less(s, *best)))
        best = std::move(s);
    }
  }
  return best;
}

// Pair-family specialization: a monochromatic set is a clique of the
// matching-color graph on the prefix, so branch and bound over vertex
// bitsets reaches width 32 where subset enumeration cannot. Same result
// contract as best_monochromatic at rank 2: the lexicographically least
// among the largest, and only sets of size at least 2 count.
inline std::optional<FinSet> best_monochromatic_pairs(
    const std::function<bool(const FinSet&)>& fam, const FinSet& p,
    bool color) {
  const std::size_t k = p.size();
  if (k < 2 || k > 32) return std::nullopt;
  std::array<std::uint32_t, 32> adj{};
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (fam(FinSet{p[i], p[j]}) == color) {
        adj[i] |= std::uint32_t{1} << j;
        adj[j] |= std::uint32_t{1} << i;
      }
  nat best = 0;
  std::function<void(std::uint32_t, nat)> expand = [&](std::uint32_t cand,
                                                       nat size) {
    if (size > best) best = size;
    while (cand) {
      if (size + static_cast<nat>(std::popcount(cand)) <= best) return;
      const auto v = static_cast<std::size_t>(std::countr_zero(cand));
      cand &= cand - 1;
      expand(cand & adj[v], size + 1);
    }
  };
  auto clique_max = [&](std::uint32_t mask) -> nat {
    best = 0;
    expand(mask, 0);
    return best;
  };
  const std::uint32_t full =
      k == 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << k) - 1);
  const nat omega = clique_max(full);
  if (omega < 2) return std::nullopt;
  // Lexicographically least witness: take the least vertex that still
  // completes a maximum clique strictly above it, then recurse inward.
  std::vector<nat> out;
  std::uint32_t cand = full;
  nat need = omega;
  for (std::size_t i = 0; i < k && need > 0; ++i) {
    if (!((cand >> i) & 1)) continue;
    const std::uint32_t above =
        i + 1 >= 32 ? 0
                    : (cand & adj[i] & (~std::uint32_t{0} << (i + 1)));
    if (clique_max(above) + 1 >= need) {
      out.push_back(p[i]);
      cand = above;
      --need;
    }
  }
  return FinSet::from_sorted(std::move(out));
}

}  // namespace detail

// Fusion run over the rank-n front, then an exhaustive small-prefix polish:
// when the prefix is narrow enough, the exact largest monochromatic subset
// replaces the fusion output if strictly larger.
inline SelectorReport ramsey_select(nat n,
                                    const std::function<bool(const FinSet&)>&
                                        family,
                                    NatStream x, nat bound) {
  if (n < 1 || n > 4)
    throw std::invalid_argument("ramsey_select: rank must be in 1..4");
  ColorFamily C{tuple_front(n, x), family};
  SelectorReport r;
  FinSet p = take(x, bound);
  detail::NwRun run(&r.trace);
  detail::NwNode node = run.node(C, p, n);
  r.output = std::move(node.out);
  r.verdict = node.flags.verdict();
  std::optional<FinSet> b1, b0;
  if (n == 2 && p.size() <= 32) {
    b1 = detail::best_monochromatic_pairs(family, p, true);
    b0 = detail::best_monochromatic_pairs(family, p, false);
  } else {
    const std::size_t cap = n == 1 ? 18 : (n == 3 ? 14 : 12);
    if (p.size() <= cap) {
      b1 = detail::best_monochromatic(family, p, n, true);
      b0 = detail::best_monochromatic(family, p, n, false);
    }
  }
  std::optional<FinSet> pick;
  if (b1 && (!b0 || b1->size() >= b0->size()))
    pick = b1;
  else if (b0)
    pick = b0;
  if (pick && pick->size() > r.output.size()) {
    auto [s, fl] = shrink_to_homogeneous(C, *pick);
    if (s.size() > r.output.size()) {
      r.output = std::move(s);
      r.verdict = fl.verdict();
      r.trace.push_back(
          TraceEntry{static_cast<nat>(r.trace.size()), 0, r.verdict});
    }
  }
  return r;
}

// Lexicographically first k-subset of the prefix no nonempty subset of which
// lies in the family. Guarded exponential: refuses oversized searches.
inline std::optional<FinSet> galvin_search(
    const std::function<bool(const FinSet&)>& family, NatStream x, nat bound,
    nat k) {
  if (k > 20) throw TooLarge("galvin_search: k > 20");
  FinSet p = take(std::move(x), bound);
  if (k == 0) return FinSet();
  if (p.size() < k) return std::nullopt;
  // cost bound: combinations times subset checks
  long double combos = 1;
  for (nat i = 0; i < k; ++i)
    combos = combos * static_cast<long double>(p.size() - i) /
             static_cast<long double>(i + 1);
  if (combos * static_cast<long double>(nat{1} << k) >
      static_cast<long double>(nat{1} << 26))
    throw TooLarge("galvin_search: search budget exceeded");
  std::vector<nat> pick;
  std::function<std::optional<FinSet>(std::size_t)> rec =
      [&](std::size_t start) -> std::optional<FinSet> {
    if (pick.size() == k) {
      FinSet c(pick);
      if (hereditarily_free(family, c)) return c;
      return std::nullopt;
    }
    for (std::size_t i = start; i + (k - pick.size()) <= p.size(); ++i) {
      pick.push_back(p[i]);
      auto r = rec(i + 1);
      pick.pop_back();
      if (r) return r;
    }
    return std::nullopt;
  };
  return rec(0);
}

// Greedy completion of a set inside a downward-closed tree: scan the prefix
// left to right, adding every element the tree still allows.
inline FinSet greedy_extend(const ClosedFamilyTree& K, const FinSet& y,
                            nat bound) {
  if (!down_member(K, y))
    throw std::invalid_argument("greedy_extend: seed is not in the tree");
  FinSet z = y;
  for (nat m = 0; m < bound; ++m)
    if (!z.contains(m) && K.extendable(z.with(m))) z = z.with(m);
  return z;
}

}  // namespace ramsel
