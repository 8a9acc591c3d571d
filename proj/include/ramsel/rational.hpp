#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <utility>

namespace ramsel {

// Exact rational extended with a single absorbing +infinity.
// Finite values are arbitrary-precision (GMP); infinity compares greater
// than every finite value and is absorbing under addition.
class ExtRat {
 public:
  ExtRat() : q_(0) {}
  ExtRat(long num, long den = 1) : q_(num, den) { q_.canonicalize(); }
  explicit ExtRat(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  static ExtRat infinity() {
    ExtRat r;
    r.inf_ = true;
    return r;
  }

  bool is_infinite() const { return inf_; }

  // Precondition: finite.
  const mpq_class& value() const { return q_; }

  ExtRat& operator+=(const ExtRat& o) {
    if (o.inf_) inf_ = true;
    if (!inf_) q_ += o.q_;
    return *this;
  }
  friend ExtRat operator+(ExtRat a, const ExtRat& b) { return a += b; }

  friend bool operator==(const ExtRat& a, const ExtRat& b) {
    if (a.inf_ || b.inf_) return a.inf_ && b.inf_;
    return a.q_ == b.q_;
  }
  friend bool operator!=(const ExtRat& a, const ExtRat& b) { return !(a == b); }
  friend bool operator<(const ExtRat& a, const ExtRat& b) {
    if (a.inf_) return false;
    if (b.inf_) return true;
    return a.q_ < b.q_;
  }
  friend bool operator>(const ExtRat& a, const ExtRat& b) { return b < a; }
  friend bool operator<=(const ExtRat& a, const ExtRat& b) { return !(b < a); }
  friend bool operator>=(const ExtRat& a, const ExtRat& b) { return !(a < b); }

  std::string str() const {
    if (inf_) return "inf";
    return q_.get_str();
  }

 private:
  bool inf_ = false;
  mpq_class q_;
};

}  // namespace ramsel
