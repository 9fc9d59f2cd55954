#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hamtough {

/// Exact non-negative fraction in lowest terms, or the distinguished Infinite
/// value used for the toughness of complete graphs. Comparisons cross-multiply.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t num, std::int64_t den = 1) : num_(num), den_(den) {
    if (den_ <= 0 || num_ < 0) throw std::invalid_argument("Rational needs num >= 0, den >= 1");
    const std::int64_t g = std::gcd(num_, den_);
    num_ /= g;
    den_ /= g;
  }

  static constexpr Rational infinite() {
    Rational r;
    r.infinite_ = true;
    return r;
  }

  constexpr bool is_infinite() const { return infinite_; }
  constexpr std::int64_t num() const { return num_; }
  constexpr std::int64_t den() const { return den_; }

  constexpr bool operator==(const Rational& o) const {
    if (infinite_ || o.infinite_) return infinite_ == o.infinite_;
    return num_ == o.num_ && den_ == o.den_;
  }
  constexpr std::strong_ordering operator<=>(const Rational& o) const {
    if (infinite_ || o.infinite_) return int(infinite_) <=> int(o.infinite_);
    return num_ * o.den_ <=> o.num_ * den_;
  }

  /// "num/den", or "inf".
  std::string to_string() const {
    if (infinite_) return "inf";
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  /// Accepts "a/b", "a", or "inf".
  static Rational parse(std::string_view s) {
    if (s == "inf") return infinite();
    const auto slash = s.find('/');
    try {
      if (slash == std::string_view::npos) return Rational(std::stoll(std::string(s)));
      return Rational(std::stoll(std::string(s.substr(0, slash))),
                      std::stoll(std::string(s.substr(slash + 1))));
    } catch (const std::logic_error&) {
      throw std::invalid_argument("not a rational: " + std::string(s));
    }
  }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  bool infinite_ = false;
};

}  // namespace hamtough
