#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace ramsel {

using nat = std::uint64_t;

// Finite set of naturals, stored strictly increasing.
class FinSet {
 public:
  FinSet() = default;
  FinSet(std::initializer_list<nat> xs) : elems_(xs) { normalize(); }
  explicit FinSet(std::vector<nat> xs) : elems_(std::move(xs)) { normalize(); }

  static FinSet from_sorted(std::vector<nat> xs) {
    FinSet s;
    s.elems_ = std::move(xs);
    return s;
  }

  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  nat operator[](std::size_t i) const { return elems_[i]; }
  nat min() const { return elems_.front(); }
  nat max() const { return elems_.back(); }
  const std::vector<nat>& elements() const { return elems_; }
  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }

  bool contains(nat e) const {
    return std::binary_search(elems_.begin(), elems_.end(), e);
  }

  FinSet with(nat e) const {
    FinSet r = *this;
    auto it = std::lower_bound(r.elems_.begin(), r.elems_.end(), e);
    if (it == r.elems_.end() || *it != e) r.elems_.insert(it, e);
    return r;
  }

  FinSet without(nat e) const {
    FinSet r = *this;
    auto it = std::lower_bound(r.elems_.begin(), r.elems_.end(), e);
    if (it != r.elems_.end() && *it == e) r.elems_.erase(it);
    return r;
  }

  FinSet without_max() const {
    FinSet r = *this;
    if (!r.elems_.empty()) r.elems_.pop_back();
    return r;
  }

  FinSet union_with(const FinSet& o) const {
    std::vector<nat> out;
    out.reserve(size() + o.size());
    std::set_union(begin(), end(), o.begin(), o.end(), std::back_inserter(out));
    return from_sorted(std::move(out));
  }

  FinSet intersect(const FinSet& o) const {
    std::vector<nat> out;
    std::set_intersection(begin(), end(), o.begin(), o.end(),
                          std::back_inserter(out));
    return from_sorted(std::move(out));
  }

  // Elements strictly below bound.
  FinSet below(nat bound) const {
    auto it = std::lower_bound(elems_.begin(), elems_.end(), bound);
    return from_sorted(std::vector<nat>(elems_.begin(), it));
  }

  // Elements strictly above e.
  FinSet above(nat e) const {
    auto it = std::upper_bound(elems_.begin(), elems_.end(), e);
    return from_sorted(std::vector<nat>(it, elems_.end()));
  }

  bool subset_of(const FinSet& o) const {
    return std::includes(o.begin(), o.end(), begin(), end());
  }

  // Initial-segment order: s is t restricted below some cut.
  // Empty is an initial segment of everything.
  bool initial_segment_of(const FinSet& o) const {
    if (size() > o.size()) return false;
    return std::equal(begin(), end(), o.begin());
  }

  friend bool operator==(const FinSet& a, const FinSet& b) {
    return a.elems_ == b.elems_;
  }
  friend bool operator!=(const FinSet& a, const FinSet& b) {
    return !(a == b);
  }

  // Elementwise lexicographic order, used for deterministic tie-breaks.
  friend bool lex_less(const FinSet& a, const FinSet& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(),
                                        b.end());
  }

  std::string str() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      if (i) os << ',';
      os << elems_[i];
    }
    os << '}';
    return os.str();
  }

 private:
  void normalize() {
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  }

  std::vector<nat> elems_;
};

// Canonical enumeration of finite sets: the set at index k has exactly the
// bit positions of k as elements. Requires max element < 64.
inline nat set_index(const FinSet& s) {
  nat k = 0;
  for (nat e : s) {
    if (e >= 64) throw TooLarge("set_index: element " + std::to_string(e) +
                                " does not fit a 64-bit index");
    k |= nat{1} << e;
  }
  return k;
}

inline FinSet index_set(nat k) {
  std::vector<nat> xs;
  for (nat i = 0; k >> i; ++i)
    if ((k >> i) & 1) xs.push_back(i);
  return FinSet::from_sorted(std::move(xs));
}

// Strictly increasing infinite stream of naturals. A copy is an independent
// cursor: producers must capture all state by value.
class NatStream {
 public:
  explicit NatStream(std::function<nat()> next) : next_(std::move(next)) {}

  nat next() { return next_(); }

  static NatStream naturals() { return arithmetic(0, 1); }

  // a, a+d, a+2d, ...  Requires d >= 1.
  static NatStream arithmetic(nat a, nat d) {
    if (d == 0) throw std::invalid_argument("arithmetic: step must be >= 1");
    return NatStream([cur = a, d]() mutable {
      nat v = cur;
      if (cur > std::numeric_limits<nat>::max() - d)
        throw std::overflow_error("arithmetic stream overflow");
      cur += d;
      return v;
    });
  }

  // 1, b, b^2, ...  Requires b >= 2.
  static NatStream powers(nat b) {
    if (b < 2) throw std::invalid_argument("powers: base must be >= 2");
    return NatStream([cur = nat{1}, b]() mutable {
      nat v = cur;
      if (cur > std::numeric_limits<nat>::max() / b)
        throw std::overflow_error("powers stream overflow");
      cur *= b;
      return v;
    });
  }

  // Values f(0) < f(1) < ... ; f must be strictly increasing.
  static NatStream from_nth(std::function<nat(nat)> f) {
    return NatStream([f = std::move(f), k = nat{0}]() mutable {
      return f(k++);
    });
  }

  // Yields the prefix, then the elements of rest above the prefix's max.
  static NatStream prefix_then(FinSet prefix, NatStream rest) {
    return NatStream(
        [prefix = std::move(prefix), rest = std::move(rest),
         i = std::size_t{0}]() mutable {
          if (i < prefix.size()) return prefix[i++];
          for (;;) {
            nat v = rest.next();
            if (prefix.empty() || v > prefix.max()) return v;
          }
        });
  }

 private:
  std::function<nat()> next_;
};

// Elements of x strictly below bound, in order.
inline FinSet take(NatStream x, nat bound) {
  std::vector<nat> xs;
  for (;;) {
    nat v = x.next();
    if (v >= bound) break;
    xs.push_back(v);
  }
  return FinSet::from_sorted(std::move(xs));
}

// The stream of elements of x strictly above n.
inline NatStream tail(NatStream x, nat n) {
  return NatStream([x = std::move(x), n]() mutable {
    for (;;) {
      nat v = x.next();
      if (v > n) return v;
    }
  });
}

// k-th element of x (0-based).
inline nat nth_element(NatStream x, nat k) {
  for (nat i = 0; i < k; ++i) x.next();
  return x.next();
}

}  // namespace ramsel
