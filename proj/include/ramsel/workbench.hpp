#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "fronts.hpp"
#include "ideals.hpp"
#include "selectors.hpp"
#include "streams.hpp"

namespace ramsel {

// Injective enumeration of rational points.
struct OrderedEnumeration {
  std::string name;
  std::function<mpq_class(nat)> point;
};

// Mediant breadth-first sweep of the open unit interval: 1/2, 1/3, 2/3,
// 1/4, 2/5, 3/5, 3/4, ... Every rational in (0,1) appears exactly once.
inline OrderedEnumeration stern_brocot_unit() {
  return OrderedEnumeration{
      "stern-brocot", [](nat n) {
        std::vector<std::array<unsigned long, 4>> q{{0, 1, 1, 1}};
        std::size_t head = 0;
        for (;; ++head) {
          auto [a, b, c, d] = q[head];
          unsigned long mn = a + c, md = b + d;
          if (head == n) return mpq_class(mn, md);
          q.push_back({a, b, mn, md});
          q.push_back({mn, md, c, d});
        }
      }};
}

// 0, 1, then both-sided approach to 1/2: even indices climb from below,
// odd indices descend from above.
inline OrderedEnumeration alternating_approach() {
  return OrderedEnumeration{
      "alternating", [](nat n) -> mpq_class {
        nat k = n / 2;
        mpq_class step(1, static_cast<unsigned long>(k + 2));
        mpq_class half(1, 2);
        if (n % 2 == 0) return half - step;
        return half + step;
      }};
}

// 0, 1, then the unit-interval mediant sweep: covers the rationals in [0,1].
inline OrderedEnumeration rationals_unit() {
  OrderedEnumeration sb = stern_brocot_unit();
  return OrderedEnumeration{"rationals", [pt = sb.point](nat n) {
                              if (n == 0) return mpq_class(0);
                              if (n == 1) return mpq_class(1);
                              return pt(n - 2);
                            }};
}

inline OrderedEnumeration enumeration_by_name(const std::string& name) {
  if (name == "stern-brocot") return stern_brocot_unit();
  if (name == "alternating") return alternating_approach();
  if (name == "rationals") return rationals_unit();
  throw std::invalid_argument("unknown enumeration: " + name);
}

// Pairs whose point order agrees with their index order. Copies share a
// memo of the enumeration's points.
inline std::function<bool(const FinSet&)> sierpinski_family(
    const OrderedEnumeration& E) {
  auto cache = std::make_shared<std::map<nat, mpq_class>>();
  auto pt = [point = E.point, cache](nat i) -> mpq_class {
    auto it = cache->find(i);
    if (it == cache->end()) it = cache->emplace(i, point(i)).first;
    return it->second;
  };
  return [pt](const FinSet& s) {
    return s.size() == 2 && pt(s[0]) < pt(s[1]);
  };
}

// Pair color from a threshold stream: 0 when the pair starts past y's first
// element and its spread reaches y's value at the lower point, 1 otherwise.
inline int cy_pair_color(NatStream y, nat k, nat l) {
  if (l < k) std::swap(k, l);
  std::vector<nat> ys;
  for (nat i = 0; i <= k; ++i) ys.push_back(y.next());
  return (k >= ys[0] && l - k >= ys[k]) ? 0 : 1;
}

// Sparse-set test: z starts no earlier than y and the consecutive gaps of z
// dominate the consecutive gaps of y, position by position.
inline bool cy_member(NatStream y, const FinSet& z) {
  if (z.empty()) return true;
  std::vector<nat> ys;
  for (std::size_t i = 0; i < z.size(); ++i) ys.push_back(y.next());
  if (z.min() < ys[0]) return false;
  for (std::size_t i = 0; i + 1 < z.size(); ++i)
    if (z[i + 1] - z[i] < ys[i + 1] - ys[i]) return false;
  return true;
}

// The 1-colored (clustered) pairs as a selector family.
inline std::function<bool(const FinSet&)> cy_family(NatStream y) {
  auto cache = std::make_shared<std::vector<nat>>();
  auto src = std::make_shared<NatStream>(std::move(y));
  auto yk = [cache, src](nat k) {
    while (cache->size() <= k) cache->push_back(src->next());
    return (*cache)[k];
  };
  return [yk](const FinSet& s) {
    if (s.size() != 2) return false;
    nat k = s[0], l = s[1];
    return !(k >= yk(0) && l - k >= yk(k));
  };
}

// Image of index positions: the y_i-th elements of x, first `count` of them.
inline FinSet gamma_map(NatStream x, NatStream y, nat count) {
  if (count == 0) return FinSet();
  std::vector<nat> pos;
  for (nat i = 0; i < count; ++i) pos.push_back(y.next());
  std::vector<nat> out;
  nat idx = 0;
  std::size_t want = 0;
  while (want < pos.size()) {
    nat v = x.next();
    if (idx == pos[want]) {
      out.push_back(v);
      ++want;
    }
    ++idx;
  }
  return FinSet::from_sorted(std::move(out));
}

// Downward-closed tree of the sets monochromatic for a pair family.
inline ClosedFamilyTree mono_color_tree(
    std::function<bool(const FinSet&)> pairFamily, const std::string& name) {
  return ClosedFamilyTree{
      name, [fam = std::move(pairFamily)](const FinSet& s) {
        if (s.size() <= 1) return true;
        bool c = fam(FinSet{s[0], s[1]});
        for (std::size_t i = 0; i < s.size(); ++i)
          for (std::size_t j = i + 1; j < s.size(); ++j)
            if (fam(FinSet{s[i], s[j]}) != c) return false;
        return true;
      }};
}

// Index set whose enumeration points increase (or decrease) together with
// the indices: the pair selector run on the order-agreement family.
inline SelectorReport convergent_select(const OrderedEnumeration& E,
                                        nat bound) {
  return ramsey_select(2, sierpinski_family(E), NatStream::naturals(), bound);
}

// Same run restricted to a substream of indices.
inline SelectorReport nwd_select(const OrderedEnumeration& E, NatStream x,
                                 nat bound) {
  return ramsey_select(2, sierpinski_family(E), std::move(x), bound);
}

inline NatStream stream_by_name(const std::string& name) {
  if (name == "naturals") return NatStream::naturals();
  if (name == "evens") return NatStream::arithmetic(0, 2);
  if (name == "odds") return NatStream::arithmetic(1, 2);
  if (name == "powers-2") return NatStream::powers(2);
  if (name == "powers-3") return NatStream::powers(3);
  if (name == "squares")
    return NatStream::from_nth([](nat k) { return k * k; });
  throw std::invalid_argument("unknown stream: " + name);
}

// Pairs with an even sum.
inline std::function<bool(const FinSet&)> even_sum_family() {
  return [](const FinSet& s) {
    return s.size() == 2 && (s[0] + s[1]) % 2 == 0;
  };
}

inline std::function<bool(const FinSet&)> family_by_name(
    const std::string& name) {
  if (name == "even-sum") return even_sum_family();
  if (name == "sierpinski-stern-brocot")
    return sierpinski_family(stern_brocot_unit());
  if (name == "sierpinski-alternating")
    return sierpinski_family(alternating_approach());
  if (name == "cy-pow2") return cy_family(NatStream::powers(2));
  throw std::invalid_argument("unknown family: " + name);
}

inline ClosedFamilyTree closed_by_name(const std::string& name) {
  if (name == "hom-sierpinski")
    return mono_color_tree(sierpinski_family(stern_brocot_unit()),
                           "hom-sierpinski");
  if (name == "subset-evens")
    return closed_subsets_of(NatStream::arithmetic(0, 2));
  throw std::invalid_argument("unknown closed family: " + name);
}

}  // namespace ramsel
