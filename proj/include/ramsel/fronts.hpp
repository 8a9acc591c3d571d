#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "ideals.hpp"
#include "streams.hpp"

namespace ramsel {

// Thin family of finite sets over a base stream. Members are nonempty; for a
// genuine front they form an initial-segment antichain and every big enough
// subset of the base has a member as initial segment (checked by is_front,
// not assumed). depth bounds how many derivative levels a selector run may
// take. uniform_rank is set when every member has exactly that size, which
// unlocks wide-prefix classification.
struct Front {
  std::function<bool(const FinSet&)> member;
  nat depth = 0;
  NatStream base = NatStream::naturals();
  std::optional<nat> uniform_rank;
};

// Front members get a binary color: in the distinguished family or not.
// Invariant: the family is contained in the closure of the front under
// initial segments of members.
struct ColorFamily {
  Front front;
  std::function<bool(const FinSet&)> in_family;
};

enum class HomVerdict { Hom0, Hom1, Neither };

inline std::string to_string(HomVerdict v) {
  switch (v) {
    case HomVerdict::Hom0:
      return "Hom0";
    case HomVerdict::Hom1:
      return "Hom1";
    default:
      return "Neither";
  }
}

// Both homogeneity facts about one set; both can hold vacuously.
// Verdict precedence: Hom0 first.
struct HomFlags {
  bool hom0 = false;
  bool hom1 = false;
  HomVerdict verdict() const {
    if (hom0) return HomVerdict::Hom0;
    if (hom1) return HomVerdict::Hom1;
    return HomVerdict::Neither;
  }
};

inline Front tuple_front(nat n, NatStream base) {
  if (n == 0) throw std::invalid_argument("tuple_front: rank must be >= 1");
  return Front{[n](const FinSet& s) { return s.size() == n; }, n,
               std::move(base), n};
}

// Members are the sets with |s| = min(s) + offset.
inline Front schreier_front(nat offset, NatStream base, nat depth) {
  if (offset == 0)
    throw std::invalid_argument("schreier_front: offset must be >= 1");
  return Front{[offset](const FinSet& s) {
                 return !s.empty() && s.size() == s.min() + offset;
               },
               depth, std::move(base), std::nullopt};
}

// Members are the nonempty sets that fall out of a downward-closed tree.
inline Front front_from_closed(const ClosedFamilyTree& K, NatStream base,
                               nat depth) {
  return Front{[ext = K.extendable](const FinSet& s) {
                 return !s.empty() && !ext(s);
               },
               depth, std::move(base), std::nullopt};
}

// Members t of the derivative correspond to members {n} ∪ t of the original
// with every element of t above n.
inline Front derive(const Front& B, nat n) {
  std::optional<nat> rank;
  if (B.uniform_rank && *B.uniform_rank > 1) rank = *B.uniform_rank - 1;
  return Front{[mem = B.member, n](const FinSet& t) {
                 return !t.empty() && t.min() > n && mem(t.with(n));
               },
               B.depth > 0 ? B.depth - 1 : 0, tail(B.base, n), rank};
}

inline ColorFamily derive_family(const ColorFamily& C, nat n) {
  return ColorFamily{derive(C.front, n),
                     [f = C.in_family, n](const FinSet& t) {
                       return f(t.with(n));
                     }};
}

// Some member of the front inside take(base, bound) has s as an initial
// segment.
inline bool in_bar_closure(const Front& B, const FinSet& s, nat bound) {
  FinSet p = take(B.base, bound);
  if (!s.subset_of(p)) return false;
  FinSet room = s.empty() ? p : p.above(s.max());
  if (room.size() > 22) throw TooLarge("in_bar_closure: prefix too wide");
  const nat lim = nat{1} << room.size();
  for (nat m = 0; m < lim; ++m) {
    FinSet t = s;
    for (nat i = 0; i < room.size(); ++i)
      if ((m >> i) & 1) t = t.with(room[i]);
    if (!t.empty() && B.member(t)) return true;
  }
  return false;
}

// Exhaustive front check on the prefix below `bound`: every subset with at
// least min_size elements has an initial segment in the front, and members
// form an initial-segment antichain.
inline bool is_front(const Front& B, nat bound, nat min_size,
                     std::string* why = nullptr) {
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  FinSet p = take(B.base, bound);
  const std::size_t k = p.size();
  if (k > 22) throw TooLarge("is_front: prefix too wide");
  const nat lim = nat{1} << k;
  std::vector<char> mem(lim, 0);
  for (nat m = 1; m < lim; ++m) {
    std::vector<nat> v;
    for (std::size_t i = 0; i < k; ++i)
      if ((m >> i) & 1) v.push_back(p[i]);
    mem[m] = B.member(FinSet::from_sorted(std::move(v))) ? 1 : 0;
  }
  auto drop_top = [](nat m) {
    nat t = m;
    nat top = 0;
    while (t >>= 1) ++top;
    return m & ~(nat{1} << top);
  };
  // completeness: some initial segment is a member
  std::vector<char> hasPrefix(lim, 0);
  for (nat m = 1; m < lim; ++m)
    hasPrefix[m] = mem[m] || hasPrefix[drop_top(m)];
  for (nat m = 1; m < lim; ++m) {
    nat cnt = 0;
    for (nat t = m; t; t &= t - 1) ++cnt;
    if (cnt >= min_size && !hasPrefix[m]) {
      std::vector<nat> v;
      for (std::size_t i = 0; i < k; ++i)
        if ((m >> i) & 1) v.push_back(p[i]);
      return fail("no member is an initial segment of " +
                  FinSet::from_sorted(std::move(v)).str());
    }
  }
  // antichain: no member has a shorter member as initial segment
  for (nat m = 1; m < lim; ++m) {
    if (!mem[m]) continue;
    for (nat u = drop_top(m); u; u = drop_top(u))
      if (mem[u]) return fail("members violate the initial-segment antichain");
  }
  if (why) why->clear();
  return true;
}

namespace detail {

// Exact classification by bitmask dynamic programming over subsets of p.
inline HomFlags classify_dense(const ColorFamily& C, const FinSet& p) {
  const std::size_t k = p.size();
  const nat lim = nat{1} << k;
  std::vector<char> memB(lim, 0), memF(lim, 0);
  for (nat m = 1; m < lim; ++m) {
    std::vector<nat> v;
    for (std::size_t i = 0; i < k; ++i)
      if ((m >> i) & 1) v.push_back(p[i]);
    FinSet s = FinSet::from_sorted(std::move(v));
    memB[m] = C.front.member(s) ? 1 : 0;
    memF[m] = C.in_family(s) ? 1 : 0;
  }
  auto top_of = [](nat m) {
    nat t = 0;
    while (m >>= 1) ++t;
    return t;
  };
  // barX[m]: extension of m above its top, within p, belongs to X
  std::vector<char> barB(lim, 0), barF(lim, 0);
  for (nat m = lim - 1; m >= 1; --m) {
    barB[m] = memB[m];
    barF[m] = memF[m];
    for (nat j = top_of(m) + 1; j < k; ++j) {
      barB[m] = barB[m] || barB[m | (nat{1} << j)];
      barF[m] = barF[m] || barF[m | (nat{1} << j)];
    }
  }
  // prefF[m]: some nonempty initial segment of m lies in the family
  std::vector<char> prefF(lim, 0);
  for (nat m = 1; m < lim; ++m) {
    nat dt = m & ~(nat{1} << top_of(m));
    prefF[m] = memF[m] || (dt && prefF[dt]);
  }
  HomFlags f{true, true};
  for (nat m = 1; m < lim; ++m) {
    if (memF[m]) f.hom0 = false;
    if (barB[m] && !(barF[m] || (prefF[m] && barB[m]))) f.hom1 = false;
  }
  return f;
}

// Wide-prefix classification for size-uniform fronts: every front member has
// exactly `rank` elements, so family members have at most that many and
// subsets of size at most the rank carry the whole question.
inline HomFlags classify_uniform(const ColorFamily& C, const FinSet& p,
                                 nat rank) {
  const std::size_t k = p.size();
  HomFlags f{true, true};
  std::vector<nat> cur;
  // some set extending cur above its max (by at most `room` elements,
  // positions >= start) lies in the family; tests cur itself as well
  std::function<bool(std::size_t, std::size_t)> extInF =
      [&](std::size_t start, std::size_t room) -> bool {
    if (C.in_family(FinSet(cur))) return true;
    if (room == 0) return false;
    for (std::size_t i = start; i < k; ++i) {
      cur.push_back(p[i]);
      bool ok = extInF(i + 1, room - 1);
      cur.pop_back();
      if (ok) return true;
    }
    return false;
  };
  std::function<void(std::size_t)> visit = [&](std::size_t start) {
    if (!f.hom0 && !f.hom1) return;
    if (!cur.empty()) {
      if (C.in_family(FinSet(cur))) f.hom0 = false;
      const bool barB =
          cur.size() == rank ||
          (cur.size() < rank && k - start >= rank - cur.size());
      if (barB && f.hom1) {
        bool covered = false;
        for (std::size_t j = 1; j < cur.size() && !covered; ++j)
          covered = C.in_family(
              FinSet(std::vector<nat>(cur.begin(), cur.begin() + j)));
        if (!covered) covered = extInF(start, rank - cur.size());
        if (!covered) f.hom1 = false;
      }
    }
    if (cur.size() == rank) return;
    for (std::size_t i = start; i < k; ++i) {
      cur.push_back(p[i]);
      visit(i + 1);
      cur.pop_back();
    }
  };
  visit(0);
  return f;
}

}  // namespace detail

// Decides both homogeneity facts for the given finite set: no subset lies in
// the family (Hom0), and every subset extendable to a front member inside
// the set is covered by the family's member-or-initial-segment closure
// (Hom1). Witnesses are drawn from the set itself.
inline HomFlags classify_hom_set(const ColorFamily& C, const FinSet& p) {
  if (p.size() <= 22) return detail::classify_dense(C, p);
  if (C.front.uniform_rank) {
    nat r = *C.front.uniform_rank;
    if (r <= 2 || (r == 3 && p.size() <= 40) || (r == 4 && p.size() <= 30))
      return detail::classify_uniform(C, p, r);
  }
  throw TooLarge("classify_hom_set: prefix too wide for exact classification");
}

inline HomVerdict classify_hom(const ColorFamily& C, NatStream x, nat bound) {
  return classify_hom_set(C, take(std::move(x), bound)).verdict();
}

// No nonempty subset of s belongs to the family.
inline bool hereditarily_free(const std::function<bool(const FinSet&)>& family,
                              const FinSet& s) {
  const std::size_t k = s.size();
  if (k > 24) throw TooLarge("hereditarily_free: set too wide");
  const nat lim = nat{1} << k;
  for (nat m = 1; m < lim; ++m) {
    std::vector<nat> v;
    for (std::size_t i = 0; i < k; ++i)
      if ((m >> i) & 1) v.push_back(s[i]);
    if (family(FinSet::from_sorted(std::move(v)))) return false;
  }
  return true;
}

}  // namespace ramsel
