#ifndef NSMB_RAT_HPP
#define NSMB_RAT_HPP

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace nsmb {

// Exact rational number. All index and relation values live in [0,1];
// comparisons are exact, never floating point.
class Rat {
 public:
  constexpr Rat() = default;
  Rat(std::int64_t num, std::int64_t den) : num_(num), den_(den) { normalize(); }
  Rat(std::int64_t num) : num_(num), den_(1) {}  // NOLINT: implicit on purpose

  // Accepts "3/10", "0.3", "1".
  static Rat parse(std::string_view text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool in_unit() const { return num_ >= 0 && num_ <= den_; }

  // "n" when integral, "n/d" otherwise.
  std::string str() const;

  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    __int128 l = static_cast<__int128>(a.num_) * b.den_;
    __int128 r = static_cast<__int128>(b.num_) * a.den_;
    return l < r ? std::strong_ordering::less
         : l > r ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }
  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  friend Rat midpoint(const Rat& a, const Rat& b) {
    return Rat(a.num_ * b.den_ + b.num_ * a.den_, 2 * a.den_ * b.den_);
  }

 private:
  void normalize() {
    if (den_ == 0) throw std::invalid_argument("rational with zero denominator");
    if (den_ < 0) { num_ = -num_; den_ = -den_; }
    std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) { num_ /= g; den_ /= g; }
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace nsmb

#endif
