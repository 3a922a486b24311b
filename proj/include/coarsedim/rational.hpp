#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace coarsedim {

// Exact rational arithmetic on 64-bit numerator/denominator.  All metric
// comparisons in this library go through Rat; no floating point is allowed
// anywhere a verdict depends on it.
class Rat {
 public:
  Rat() : num_(0), den_(1) {}
  Rat(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rat(long long n, long long d) : num_(n), den_(d) { normalize(); }

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }

  Rat operator-() const { return Rat(-num_, den_, already_normal_tag{}); }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return make_reduced(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                        i128(a.den_) * b.den_);
  }
  friend Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return make_reduced(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num_ == 0) throw std::domain_error("Rat: division by zero");
    return make_reduced(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }

  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
  friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

  // Largest integer <= value.
  long long floor() const {
    long long q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
  }
  long long ceil() const {
    long long q = num_ / den_;
    if (num_ % den_ != 0 && num_ > 0) ++q;
    return q;
  }
  Rat abs() const { return num_ < 0 ? -*this : *this; }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }
  double approx() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  static Rat parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(std::stoll(s));
    return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  }

 private:
  using i128 = __int128;
  struct already_normal_tag {};
  Rat(long long n, long long d, already_normal_tag) : num_(n), den_(d) {}

  static long long checked(i128 v) {
    if (v > i128(INT64_MAX) || v < i128(INT64_MIN))
      throw std::overflow_error("Rat: 64-bit overflow");
    return static_cast<long long>(v);
  }

  static Rat make_reduced(i128 n, i128 d) {
    if (d == 0) throw std::domain_error("Rat: zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    i128 a = n < 0 ? -n : n;
    i128 b = d;
    while (b != 0) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      n /= a;
      d /= a;
    }
    return Rat(checked(n), checked(d), already_normal_tag{});
  }

  void normalize() {
    if (den_ == 0) throw std::domain_error("Rat: zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  long long num_;
  long long den_;
};

}  // namespace coarsedim
