#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dehnkit {

// Exact non-negative-denominator fraction; printed and parsed as `p/q`.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1) : num_(num), den_(den) {
    if (den_ == 0) {
      throw std::invalid_argument("rational with zero denominator");
    }
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    auto g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  // Accepts `p/q`, `p`, or a decimal like `0.1`.
  static Rational parse(std::string_view text);
  std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    __int128 l = static_cast<__int128>(a.num_) * b.den_;
    __int128 r = static_cast<__int128>(b.num_) * a.den_;
    return l < r ? std::strong_ordering::less
                 : (l == r ? std::strong_ordering::equal : std::strong_ordering::greater);
  }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline Rational Rational::parse(std::string_view text) {
  auto to_int = [&](std::string_view s) {
    std::size_t used = 0;
    std::string str(s);
    long long v = 0;
    try {
      v = std::stoll(str, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad rational '" + std::string(text) + "'");
    }
    if (used != str.size()) {
      throw std::invalid_argument("bad rational '" + std::string(text) + "'");
    }
    return static_cast<std::int64_t>(v);
  };
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    return Rational(to_int(text.substr(0, slash)), to_int(text.substr(slash + 1)));
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view frac = text.substr(dot + 1);
    if (frac.size() > 15) {
      throw std::invalid_argument("bad rational '" + std::string(text) + "'");
    }
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    std::int64_t whole = dot == 0 ? 0 : to_int(text.substr(0, dot));
    std::int64_t part = frac.empty() ? 0 : to_int(frac);
    return Rational(whole * scale + (text.front() == '-' ? -part : part), scale);
  }
  return Rational(to_int(text));
}

}  // namespace dehnkit
