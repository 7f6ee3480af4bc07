// rational.hpp -- exact rational arithmetic on int64 with overflow checks.
//
// All [0,1]-valued calculus in the residuation and fuzzy-function modules runs
// on this type; there is no floating point anywhere in those paths.
#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "latkit/errors.hpp"

namespace latkit {

class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t n) : num_(n), den_(1) {}
  Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    normalize();
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(checked(checked(a.num_, b.den_, Mul::yes),
                            checked(b.num_, a.den_, Mul::yes), Mul::no),
                    checked(a.den_, b.den_, Mul::yes));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return a + Rational(-b.num_, b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    // Cross-reduce before multiplying; keeps intermediates small.
    std::int64_t g1 = std::gcd(a.num_ < 0 ? -a.num_ : a.num_, b.den_);
    std::int64_t g2 = std::gcd(b.num_ < 0 ? -b.num_ : b.num_, a.den_);
    return Rational(checked(a.num_ / g1, b.num_ / g2, Mul::yes),
                    checked(a.den_ / g2, b.den_ / g1, Mul::yes));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw OutOfRange("division by zero rational");
    return a * Rational(b.den_, b.num_);
  }
  Rational operator-() const { return Rational(-num_, den_); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return (__int128)a.num_ * b.den_ < (__int128)b.num_ * a.den_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  /// Parses "p", "p/q" or a signed variant; rejects anything else.
  static Rational parse(const std::string& text);

private:
  enum class Mul { yes, no };

  static std::int64_t checked(std::int64_t a, std::int64_t b, Mul mul) {
    __int128 r = mul == Mul::yes ? (__int128)a * b : (__int128)a + b;
    if (r > INT64_MAX || r < INT64_MIN)
      throw OutOfRange("rational arithmetic overflow");
    return (std::int64_t)r;
  }

  void normalize() {
    if (den_ == 0) throw OutOfRange("rational with zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  std::int64_t num_;
  std::int64_t den_;
};

inline Rational Rational::parse(const std::string& text) {
  std::size_t slash = text.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      std::int64_t n = std::stoll(text, &used);
      if (used != text.size()) throw OutOfRange("trailing junk in rational: " + text);
      return Rational(n);
    }
    std::int64_t n = std::stoll(text.substr(0, slash), &used);
    if (used != slash) throw OutOfRange("bad rational numerator: " + text);
    std::int64_t d = std::stoll(text.substr(slash + 1), &used);
    if (used != text.size() - slash - 1 || d <= 0)
      throw OutOfRange("bad rational denominator: " + text);
    return Rational(n, d);
  } catch (const std::invalid_argument&) {
    throw OutOfRange("not a rational: " + text);
  } catch (const std::out_of_range&) {
    throw OutOfRange("rational out of range: " + text);
  }
}

inline Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace latkit
