#include "padw/valuation.hpp"

#include "padw/error.hpp"

namespace padw {

const mpq_class& ExtendedValuation::rational() const {
  if (infinite_) {
    throw Error(ErrorCode::InvalidArgument, "valuation is +inf");
  }
  return value_;
}

ExtendedValuation operator+(const ExtendedValuation& a,
                            const ExtendedValuation& b) {
  if (a.infinite_ || b.infinite_) return ExtendedValuation::infinity();
  return ExtendedValuation(mpq_class(a.value_ + b.value_));
}

bool operator==(const ExtendedValuation& a, const ExtendedValuation& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
  return a.value_ == b.value_;
}

std::strong_ordering operator<=>(const ExtendedValuation& a,
                                 const ExtendedValuation& b) {
  if (a.infinite_ || b.infinite_) {
    return static_cast<int>(a.infinite_) <=> static_cast<int>(b.infinite_);
  }
  const int c = cmp(a.value_, b.value_);
  return c <=> 0;
}

std::string ExtendedValuation::to_string() const {
  if (infinite_) return "inf";
  return value_.get_str();
}

ExtendedValuation min(const ExtendedValuation& a, const ExtendedValuation& b) {
  return b < a ? b : a;
}

std::ostream& operator<<(std::ostream& os, const ExtendedValuation& v) {
  return os << v.to_string();
}

}  // namespace padw
