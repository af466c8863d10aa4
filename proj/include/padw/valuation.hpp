#pragma once

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <string>

namespace padw {

/// An element of Q ∪ {+inf} used as ord_p; |x|_p = p^(-ord).
class ExtendedValuation {
 public:
  ExtendedValuation() : value_(0), infinite_(false) {}
  ExtendedValuation(const mpq_class& q) : value_(q), infinite_(false) {
    value_.canonicalize();
  }
  ExtendedValuation(long n) : value_(n), infinite_(false) {}

  static ExtendedValuation infinity() {
    ExtendedValuation v;
    v.infinite_ = true;
    return v;
  }

  bool is_infinite() const noexcept { return infinite_; }

  /// Finite value. Throws InvalidArgument on +inf.
  const mpq_class& rational() const;

  friend ExtendedValuation operator+(const ExtendedValuation& a,
                                     const ExtendedValuation& b);
  friend bool operator==(const ExtendedValuation& a,
                         const ExtendedValuation& b);
  friend std::strong_ordering operator<=>(const ExtendedValuation& a,
                                          const ExtendedValuation& b);

  /// "inf", "n" or "a/b".
  std::string to_string() const;

 private:
  mpq_class value_;
  bool infinite_;
};

ExtendedValuation min(const ExtendedValuation& a, const ExtendedValuation& b);

std::ostream& operator<<(std::ostream& os, const ExtendedValuation& v);

}  // namespace padw
