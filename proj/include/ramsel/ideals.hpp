#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"
#include "streams.hpp"

namespace ramsel {

// Monotone subadditive set function with eval(empty) = 0, valued in the
// nonnegative rationals extended by +infinity. `atom` is optional: when set,
// eval must equal the sum of atom over the elements (checked by the
// validator), which unlocks an exact fast path in the selector search.
struct Submeasure {
  std::string name;
  std::function<ExtRat(const FinSet&)> eval;
  std::function<ExtRat(nat)> atom;
};

inline Submeasure counting_measure() {
  return Submeasure{
      "counting",
      [](const FinSet& s) { return ExtRat(static_cast<long>(s.size())); },
      [](nat) { return ExtRat(1); }};
}

inline Submeasure summable_measure() {
  return Submeasure{"summable",
                    [](const FinSet& s) {
                      mpq_class total = 0;
                      for (nat e : s) total += mpq_class(1, e + 1);
                      return ExtRat(total);
                    },
                    [](nat e) { return ExtRat(mpq_class(1, e + 1)); }};
}

inline Submeasure max_id_measure() {
  return Submeasure{"max-id",
                    [](const FinSet& s) {
                      if (s.empty()) return ExtRat(0);
                      return ExtRat(static_cast<long>(s.max() + 1));
                    },
                    nullptr};
}

inline Submeasure submeasure_by_name(const std::string& name) {
  if (name == "counting") return counting_measure();
  if (name == "summable") return summable_measure();
  if (name == "max-id") return max_id_measure();
  throw std::invalid_argument("unknown submeasure: " + name);
}

// Checks the submeasure axioms exhaustively on subsets of {0..n}:
// eval(empty) = 0, nonnegativity, monotonicity, subadditivity, and atom
// consistency when an atom function is present. n <= 12 to bound the sweep.
inline bool validate_submeasure(const Submeasure& phi, nat n,
                                std::string* why = nullptr) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (n > 12) throw TooLarge("validate_submeasure: n > 12");
  const nat full = (nat{1} << (n + 1)) - 1;
  std::vector<ExtRat> val(full + 1);
  for (nat m = 0; m <= full; ++m) {
    val[m] = phi.eval(index_set(m));
    if (val[m] < ExtRat(0))
      return fail("negative value on " + index_set(m).str());
  }
  if (!(val[0] == ExtRat(0))) return fail("eval(empty) != 0");
  for (nat m = 1; m <= full; ++m)
    for (nat i = 0; i <= n; ++i) {
      if (!((m >> i) & 1)) continue;
      if (val[m & ~(nat{1} << i)] > val[m])
        return fail("not monotone at " + index_set(m).str());
    }
  for (nat a = 0; a <= full; ++a)
    for (nat b = 0; b <= full; ++b)
      if (val[a | b] > val[a] + val[b])
        return fail("not subadditive at " + index_set(a).str() + " , " +
                    index_set(b).str());
  if (phi.atom) {
    for (nat m = 0; m <= full; ++m) {
      ExtRat sum(0);
      for (nat i = 0; i <= n; ++i)
        if ((m >> i) & 1) sum += phi.atom(i);
      if (!(sum == val[m]))
        return fail("atom sum disagrees with eval on " + index_set(m).str());
    }
  }
  if (why) why->clear();
  return true;
}

inline ExtRat phi_prefix(const Submeasure& phi, NatStream x, nat n) {
  return phi.eval(take(std::move(x), n));
}

// The subset of take(x, horizon) with phi-mass >= n whose canonical index is
// least. Exact for any monotone phi: each chosen element is the least
// possible maximum of a feasible set given what is already chosen, found by
// binary search. Throws HorizonExhausted when the whole prefix falls short.
inline FinSet least_mass_subset(const Submeasure& phi, NatStream x, nat n,
                                nat horizon) {
  const ExtRat target(static_cast<long>(n));
  const std::vector<nat> X = take(std::move(x), horizon).elements();
  FinSet F;
  std::size_t bound = X.size();
  // Chosen indices stay >= bound, so slices X[0..j) with j <= bound never
  // meet F; additivity then gives eval(F u slice) = eval(F) + prefix sum.
  std::vector<ExtRat> pre;
  if (phi.atom) {
    pre.reserve(X.size() + 1);
    pre.push_back(ExtRat(0));
    for (nat e : X) pre.push_back(pre.back() + phi.atom(e));
  }
  ExtRat haveF(0);
  auto have = [&] { return phi.atom ? haveF : phi.eval(F); };
  auto value = [&](std::size_t j) {
    if (phi.atom) return haveF + pre[j];
    std::vector<nat> v(X.begin(), X.begin() + j);
    return phi.eval(F.union_with(FinSet::from_sorted(std::move(v))));
  };
  while (have() < target) {
    if (bound == 0 || value(bound) < target)
      throw HorizonExhausted("least_mass_subset: phi=" + phi.name +
                             " cannot reach " + std::to_string(n) +
                             " below horizon " + std::to_string(horizon));
    std::size_t lo = 0, hi = bound - 1;
    while (lo < hi) {
      std::size_t mid = lo + (hi - lo) / 2;
      if (value(mid + 1) < target)
        lo = mid + 1;
      else
        hi = mid;
    }
    F = F.with(X[lo]);
    if (phi.atom) haveF += phi.atom(X[lo]);
    bound = lo;
  }
  return F;
}

// Decreasing chain of streams: at(n+1) enumerates a subset of at(n).
struct DecreasingSeq {
  std::string name;
  std::function<NatStream(nat)> at;
};

// at(n) = elements of base >= offsets[n]; offsets nondecreasing, saturating
// at the last entry.
inline DecreasingSeq tail_chain(NatStream base, std::vector<nat> offsets) {
  if (offsets.empty()) throw std::invalid_argument("tail_chain: no offsets");
  for (std::size_t i = 1; i < offsets.size(); ++i)
    if (offsets[i] < offsets[i - 1])
      throw std::invalid_argument("tail_chain: offsets must be nondecreasing");
  return DecreasingSeq{
      "tail-chain",
      [base = std::move(base), offsets = std::move(offsets)](nat nidx) {
        nat o = offsets[std::min<std::size_t>(nidx, offsets.size() - 1)];
        if (o == 0) return base;
        return tail(base, o - 1);
      }};
}

// at(n) = {m : m >= b^n}.
inline DecreasingSeq geometric_tails(nat b) {
  if (b < 2) throw std::invalid_argument("geometric_tails: base must be >= 2");
  return DecreasingSeq{"geometric-tails", [b](nat nidx) {
                         nat t = 1;
                         for (nat i = 0; i < nidx; ++i) t *= b;
                         return tail(NatStream::naturals(), t - 1);
                       }};
}

// Union of per-level greedy picks: level n contributes the least-index
// subset of seq.at(n) with mass >= n.
inline FinSet uniform_p(const Submeasure& phi, const DecreasingSeq& seq,
                        nat levels, nat horizon) {
  FinSet out;
  for (nat n = 0; n < levels; ++n)
    out = out.union_with(least_mass_subset(phi, seq.at(n), n, horizon));
  return out;
}

// Partition of a ground stream into finite pieces. piece(i) is the i-th
// piece; piece_of maps a ground element to its piece index.
struct PartitionSeq {
  std::string name;
  std::function<FinSet(nat)> piece;
  std::function<std::optional<nat>(nat)> piece_of;
};

// Pieces are blocks of `width` consecutive naturals.
inline PartitionSeq block_partition(nat width) {
  if (width == 0) throw std::invalid_argument("block_partition: width 0");
  return PartitionSeq{
      "blocks",
      [width](nat i) {
        std::vector<nat> v;
        for (nat e = i * width; e < (i + 1) * width; ++e) v.push_back(e);
        return FinSet::from_sorted(std::move(v));
      },
      [width](nat e) { return std::optional<nat>(e / width); }};
}

// Pieces over a ground stream split at the given cuts: piece 0 is
// ground ∩ [0, cuts[0]], piece i is ground ∩ (cuts[i-1], cuts[i]], and past
// the last cut every ground element is its own piece. piece_of requires a
// ground element.
inline PartitionSeq cut_partition(NatStream ground, std::vector<nat> cuts) {
  for (std::size_t i = 1; i < cuts.size(); ++i)
    if (cuts[i] <= cuts[i - 1])
      throw std::invalid_argument("cut_partition: cuts must increase");
  auto piece = [ground, cuts](nat i) {
    if (i < cuts.size()) {
      NatStream g = i == 0 ? ground : tail(ground, cuts[i - 1]);
      return take(std::move(g), cuts[i] + 1);
    }
    NatStream g = cuts.empty() ? ground : tail(ground, cuts.back());
    return FinSet{nth_element(std::move(g), i - cuts.size())};
  };
  auto piece_of = [ground, cuts](nat e) -> std::optional<nat> {
    if (!cuts.empty() && e <= cuts.back()) {
      auto it = std::lower_bound(cuts.begin(), cuts.end(), e);
      return static_cast<nat>(it - cuts.begin());
    }
    NatStream g = cuts.empty() ? ground : tail(ground, cuts.back());
    for (nat k = 0;; ++k) {
      nat v = g.next();
      if (v == e) return cuts.size() + k;
      if (v > e) return std::nullopt;
    }
  };
  return PartitionSeq{"cuts", std::move(piece), std::move(piece_of)};
}

namespace detail {

// Exclude-first depth-first search for the least-index selector, used when
// phi has no additive atoms. Upper bound for pruning: phi of the committed
// set joined with every still-pickable element (valid by monotonicity).
class SelectorSearch {
 public:
  SelectorSearch(const Submeasure& phi, const std::vector<nat>& X,
                 const std::vector<nat>& pid, const std::vector<bool>& forced,
                 std::size_t npieces, ExtRat target)
      : phi_(phi), X_(X), pid_(pid), forced_(forced), target_(target) {
    blocked_.assign(npieces, false);
    for (std::size_t i = 0; i < X_.size(); ++i)
      if (forced_[i]) blocked_[pid_[i]] = true;
  }

  std::optional<FinSet> run() {
    if (step(static_cast<std::ptrdiff_t>(X_.size()) - 1, FinSet()))
      return result_;
    return std::nullopt;
  }

 private:
  bool step(std::ptrdiff_t i, const FinSet& committed) {
    if (++nodes_ > kBudget)
      throw TooLarge("least_mass_selector: search budget exceeded");
    if (i < 0) {
      if (phi_.eval(committed) >= target_) {
        result_ = committed;
        return true;
      }
      return false;
    }
    const nat p = pid_[i];
    if (forced_[static_cast<std::size_t>(i)])
      return step(i - 1, committed.with(X_[i]));
    FinSet pool = committed;
    for (std::ptrdiff_t j = i - 1; j >= 0; --j)
      if (forced_[static_cast<std::size_t>(j)] || !blocked_[pid_[j]])
        pool = pool.with(X_[j]);
    if (phi_.eval(pool) >= target_ && step(i - 1, committed)) return true;
    if (!blocked_[p]) {
      blocked_[p] = true;
      bool ok = step(i - 1, committed.with(X_[i]));
      blocked_[p] = false;
      if (ok) return true;
    }
    return false;
  }

  static constexpr nat kBudget = nat{1} << 20;
  const Submeasure& phi_;
  const std::vector<nat>& X_;
  const std::vector<nat>& pid_;
  const std::vector<bool>& forced_;
  ExtRat target_;
  std::vector<bool> blocked_;
  FinSet result_;
  nat nodes_ = 0;
};

}  // namespace detail

// Least-index partial selector extension: the subset s of take(x, horizon)
// with prev ⊆ s, at most one element per partition piece, and phi(s) >= n,
// minimizing the canonical index. Exact both ways: a linear sweep when phi
// carries finite additive atoms, otherwise a pruned exhaustive search.
inline FinSet least_mass_selector(const Submeasure& phi, NatStream x,
                                  const PartitionSeq& parts, nat n,
                                  const FinSet& prev, nat horizon) {
  const std::vector<nat> X = take(std::move(x), horizon).elements();
  const std::size_t k = X.size();

  std::vector<nat> rawPid(k);
  for (std::size_t i = 0; i < k; ++i) {
    auto p = parts.piece_of(X[i]);
    if (!p)
      throw std::invalid_argument("least_mass_selector: element " +
                                  std::to_string(X[i]) +
                                  " not covered by the partition");
    rawPid[i] = *p;
  }
  std::map<nat, nat> dense;
  for (nat p : rawPid) dense.emplace(p, dense.size());
  std::vector<nat> pid(k);
  for (std::size_t i = 0; i < k; ++i) pid[i] = dense[rawPid[i]];
  const std::size_t npieces = dense.size();

  std::vector<bool> forced(k, false);
  {
    std::vector<bool> seen(npieces, false);
    for (nat e : prev) {
      auto it = std::lower_bound(X.begin(), X.end(), e);
      if (it == X.end() || *it != e)
        throw std::invalid_argument(
            "least_mass_selector: prev element outside the stream prefix");
      std::size_t i = static_cast<std::size_t>(it - X.begin());
      if (seen[pid[i]])
        throw std::invalid_argument(
            "least_mass_selector: prev is not a partial selector");
      seen[pid[i]] = true;
      forced[i] = true;
    }
  }

  bool additive = static_cast<bool>(phi.atom);
  std::vector<mpq_class> atomv;
  if (additive) {
    atomv.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
      ExtRat a = phi.atom(X[i]);
      if (a.is_infinite()) {
        additive = false;
        break;
      }
      atomv[i] = a.value();
    }
  }

  if (!additive) {
    detail::SelectorSearch search(phi, X, pid, forced, npieces,
                                  ExtRat(static_cast<long>(n)));
    auto r = search.run();
    if (!r)
      throw HorizonExhausted("least_mass_selector: phi=" + phi.name +
                             " cannot reach " + std::to_string(n) +
                             " below horizon " + std::to_string(horizon));
    return *r;
  }

  // Additive sweep from the highest element down, excluding whenever a
  // feasible completion below remains. Per piece the pool loses its top
  // index as the sweep passes it, so prefix maxima of atom values give each
  // pool's best remaining contribution in O(1).
  const mpq_class target(static_cast<unsigned long>(n));
  std::vector<std::vector<std::size_t>> members(npieces);
  for (std::size_t i = 0; i < k; ++i) members[pid[i]].push_back(i);
  std::vector<std::vector<mpq_class>> prefMax(npieces);
  for (std::size_t p = 0; p < npieces; ++p) {
    prefMax[p].reserve(members[p].size());
    for (std::size_t j = 0; j < members[p].size(); ++j) {
      mpq_class v = atomv[members[p][j]];
      if (j && prefMax[p][j - 1] > v) v = prefMax[p][j - 1];
      prefMax[p].push_back(v);
    }
  }
  std::vector<std::size_t> poolSize(npieces);
  std::vector<bool> blocked(npieces, false);
  for (std::size_t p = 0; p < npieces; ++p) poolSize[p] = members[p].size();
  mpq_class have = 0;  // forced plus included so far
  for (std::size_t i = 0; i < k; ++i)
    if (forced[i]) {
      blocked[pid[i]] = true;
      have += atomv[i];
    }
  mpq_class ub = 0;  // best contribution of unblocked pools
  for (std::size_t p = 0; p < npieces; ++p)
    if (!blocked[p] && poolSize[p]) ub += prefMax[p][poolSize[p] - 1];

  std::vector<bool> inc(k, false);
  for (std::ptrdiff_t i = static_cast<std::ptrdiff_t>(k) - 1; i >= 0; --i) {
    const nat p = pid[i];
    if (forced[i]) {
      inc[i] = true;
      --poolSize[p];
      continue;
    }
    if (blocked[p]) {
      --poolSize[p];
      continue;
    }
    const mpq_class cur = prefMax[p][poolSize[p] - 1];
    const mpq_class next =
        poolSize[p] >= 2 ? prefMax[p][poolSize[p] - 2] : mpq_class(0);
    if (have + ub - cur + next >= target) {
      ub += next - cur;
      --poolSize[p];
    } else {
      inc[i] = true;
      have += atomv[i];
      blocked[p] = true;
      ub -= cur;
      --poolSize[p];
    }
  }
  if (have < target)
    throw HorizonExhausted("least_mass_selector: phi=" + phi.name +
                           " cannot reach " + std::to_string(n) +
                           " below horizon " + std::to_string(horizon));
  std::vector<nat> out;
  for (std::size_t i = 0; i < k; ++i)
    if (inc[i]) out.push_back(X[i]);
  return FinSet::from_sorted(std::move(out));
}

// Chained selector growth: F_0 = empty, F_{m+1} extends F_m to mass m+1.
inline FinSet uniform_q(const Submeasure& phi, const NatStream& x,
                        const PartitionSeq& parts, nat levels, nat horizon) {
  FinSet F;
  for (nat m = 1; m <= levels; ++m)
    F = least_mass_selector(phi, x, parts, m, F, horizon);
  return F;
}

// uniform_p output, then a selector run against the interval partition its
// gaps induce on the level-0 stream.
inline FinSet uniform_selective(const Submeasure& phi, const DecreasingSeq& seq,
                                nat levels, nat horizon) {
  FinSet y = uniform_p(phi, seq, levels, horizon);
  PartitionSeq parts = cut_partition(seq.at(0), y.elements());
  return uniform_q(phi, seq.at(0), parts, levels, horizon);
}

// a_0 = first element of at(0); a_{k+1} = first element of at(a_k) above a_k.
inline FinSet diagonalize(const DecreasingSeq& seq, nat count) {
  std::vector<nat> out;
  if (count == 0) return FinSet();
  NatStream s0 = seq.at(0);
  nat a = s0.next();
  out.push_back(a);
  while (out.size() < count) {
    NatStream s = tail(seq.at(a), a);
    a = s.next();
    out.push_back(a);
  }
  return FinSet::from_sorted(std::move(out));
}

// Downward-closed family presented by an extendability predicate.
// extendable(empty) must be true; extendable is hereditary under subsets.
struct ClosedFamilyTree {
  std::string name;
  std::function<bool(const FinSet&)> extendable;
};

inline bool down_member(const ClosedFamilyTree& K, const FinSet& s) {
  return K.extendable(s);
}

// Downward closure of the subsets of a stream.
inline ClosedFamilyTree closed_subsets_of(NatStream x) {
  return ClosedFamilyTree{"subset-of", [x](const FinSet& s) {
                            if (s.empty()) return true;
                            return s.subset_of(take(x, s.max() + 1));
                          }};
}

// Indices (smallest size first, then lexicographically first) of a subfamily
// of the generators whose prefixes below n jointly cover x's prefix below n.
inline std::vector<std::size_t> cover_decompose(
    const std::vector<NatStream>& gens, NatStream x, nat n) {
  if (gens.size() > 24)
    throw TooLarge("cover_decompose: more than 24 generators");
  FinSet t = take(std::move(x), n);
  std::vector<FinSet> g;
  g.reserve(gens.size());
  for (const auto& s : gens) g.push_back(take(s, n));
  const std::size_t G = g.size();
  std::vector<std::size_t> pick;
  std::function<bool(std::size_t, std::size_t, FinSet)> combos =
      [&](std::size_t start, std::size_t need, FinSet acc) {
        if (need == 0) return t.subset_of(acc);
        for (std::size_t i = start; i + need <= G; ++i) {
          pick.push_back(i);
          if (combos(i + 1, need - 1, acc.union_with(g[i]))) return true;
          pick.pop_back();
        }
        return false;
      };
  for (std::size_t r = 0; r <= G; ++r) {
    pick.clear();
    if (combos(0, r, FinSet())) return pick;
  }
  throw NotCovered("cover_decompose: no subfamily covers the prefix below " +
                   std::to_string(n));
}

// One almost-disjoint set per branch: positions along x are the binary-tree
// node codes of y's nonempty bit prefixes, code(b1..bn) = int(1 b1 .. bn).
// Two branches share exactly the codes of their common prefix, so distinct
// branches meet in at most prefix-length many elements.
inline FinSet branch_image(NatStream x, NatStream y, nat count) {
  if (count > 24) throw TooLarge("branch_image: count > 24");
  if (count == 0) return FinSet();
  std::vector<bool> bits(count, false);
  {
    FinSet yp = take(std::move(y), count);
    for (nat e : yp) bits[e] = true;
  }
  std::vector<nat> pos;
  nat code = 1;
  for (nat i = 0; i < count; ++i) {
    code = (code << 1) | (bits[i] ? 1 : 0);
    pos.push_back(code);
  }
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

}  // namespace ramsel
