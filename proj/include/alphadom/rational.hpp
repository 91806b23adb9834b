#ifndef ALPHADOM_RATIONAL_HPP_
#define ALPHADOM_RATIONAL_HPP_

#include <cstdint>
#include <numeric>
#include <string>

#include "alphadom/error.hpp"

namespace alphadom {

// Exact fraction p/q with q > 0, kept in lowest terms. All guard comparisons
// in the protocol go through integer cross-multiplication; no floating point
// enters a scheduling decision.
class Rational {
 public:
  constexpr Rational() : p_(0), q_(1) {}
  Rational(std::int64_t p, std::int64_t q) : p_(p), q_(q) {
    if (q_ == 0) throw Error(Errc::BadArgument, "rational with zero denominator");
    if (q_ < 0) {
      p_ = -p_;
      q_ = -q_;
    }
    const std::int64_t g = std::gcd(p_ < 0 ? -p_ : p_, q_);
    if (g > 1) {
      p_ /= g;
      q_ /= g;
    }
  }

  std::int64_t num() const { return p_; }
  std::int64_t den() const { return q_; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.p_ == b.p_ && a.q_ == b.q_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.p_) * b.q_ < static_cast<__int128>(b.p_) * a.q_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  Rational operator-(const Rational& o) const {
    return Rational(p_ * o.q_ - o.p_ * q_, q_ * o.q_);
  }

  double to_double() const { return static_cast<double>(p_) / static_cast<double>(q_); }

  std::string str() const {
    return std::to_string(p_) + "/" + std::to_string(q_);
  }

 private:
  std::int64_t p_;
  std::int64_t q_;
};

// Threshold alpha with the protocol's constraint 0 < alpha <= 1.
class Alpha {
 public:
  Alpha(std::int64_t p, std::int64_t q) : value_(p, q) {
    if (value_ <= Rational(0, 1) || value_ > Rational(1, 1))
      throw Error(Errc::BadAlpha,
                  "alpha must satisfy 0 < alpha <= 1, got " + Rational(p, q).str());
  }

  // Accepts "p/q" only. Decimal inputs get a targeted hint because they are
  // the common mistake at the command line.
  static Alpha parse(const std::string& text) {
    if (text.find('.') != std::string::npos)
      throw Error(Errc::BadAlpha, "alpha must be a fraction like 1/2, not a decimal: '" +
                                      text + "' (try e.g. 45/100 for 0.45)");
    const auto slash = text.find('/');
    if (slash == std::string::npos || slash == 0 || slash + 1 == text.size())
      throw Error(Errc::BadAlpha, "alpha must be of the form p/q, got '" + text + "'");
    std::int64_t p = 0, q = 0;
    try {
      std::size_t pos = 0;
      p = std::stoll(text.substr(0, slash), &pos);
      if (pos != slash) throw std::invalid_argument("");
      const std::string den = text.substr(slash + 1);
      q = std::stoll(den, &pos);
      if (pos != den.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw Error(Errc::BadAlpha, "alpha must be of the form p/q, got '" + text + "'");
    }
    return Alpha(p, q);
  }

  const Rational& value() const { return value_; }
  std::string str() const { return value_.str(); }
  double to_double() const { return value_.to_double(); }

  friend bool operator==(const Alpha& a, const Alpha& b) { return a.value_ == b.value_; }

 private:
  Rational value_;
};

}  // namespace alphadom

#endif  // ALPHADOM_RATIONAL_HPP_
