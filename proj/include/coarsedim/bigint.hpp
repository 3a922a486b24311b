#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace coarsedim {

// Non-negative arbitrary-precision integer.  Lattice-point counts and the
// expansion bound (1+eps)^(lambda/2) overflow 64 bits well inside the range
// the CLI accepts, so these quantities are carried exactly.
class BigNat {
 public:
  BigNat() = default;
  BigNat(unsigned long long v) {  // NOLINT: implicit by design
    while (v) {
      limbs_.push_back(static_cast<uint32_t>(v & 0xffffffffu));
      v >>= 32;
    }
  }

  bool is_zero() const { return limbs_.empty(); }

  friend bool operator==(const BigNat& a, const BigNat& b) { return a.limbs_ == b.limbs_; }
  friend bool operator!=(const BigNat& a, const BigNat& b) { return !(a == b); }
  friend bool operator<(const BigNat& a, const BigNat& b) {
    if (a.limbs_.size() != b.limbs_.size()) return a.limbs_.size() < b.limbs_.size();
    for (size_t i = a.limbs_.size(); i-- > 0;)
      if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i];
    return false;
  }
  friend bool operator>(const BigNat& a, const BigNat& b) { return b < a; }
  friend bool operator<=(const BigNat& a, const BigNat& b) { return !(b < a); }
  friend bool operator>=(const BigNat& a, const BigNat& b) { return !(a < b); }

  friend BigNat operator+(const BigNat& a, const BigNat& b) {
    BigNat r;
    r.limbs_.resize(std::max(a.limbs_.size(), b.limbs_.size()), 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < r.limbs_.size(); ++i) {
      uint64_t s = carry;
      if (i < a.limbs_.size()) s += a.limbs_[i];
      if (i < b.limbs_.size()) s += b.limbs_[i];
      r.limbs_[i] = static_cast<uint32_t>(s & 0xffffffffu);
      carry = s >> 32;
    }
    if (carry) r.limbs_.push_back(static_cast<uint32_t>(carry));
    return r;
  }

  // Requires a >= b.
  friend BigNat operator-(const BigNat& a, const BigNat& b) {
    if (a < b) throw std::domain_error("BigNat: negative result");
    BigNat r;
    r.limbs_.resize(a.limbs_.size(), 0);
    int64_t borrow = 0;
    for (size_t i = 0; i < a.limbs_.size(); ++i) {
      int64_t s = int64_t(a.limbs_[i]) - borrow - (i < b.limbs_.size() ? b.limbs_[i] : 0);
      borrow = 0;
      if (s < 0) {
        s += (int64_t(1) << 32);
        borrow = 1;
      }
      r.limbs_[i] = static_cast<uint32_t>(s);
    }
    r.trim();
    return r;
  }

  friend BigNat operator*(const BigNat& a, const BigNat& b) {
    if (a.is_zero() || b.is_zero()) return BigNat();
    BigNat r;
    r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (size_t i = 0; i < a.limbs_.size(); ++i) {
      uint64_t carry = 0;
      for (size_t j = 0; j < b.limbs_.size(); ++j) {
        uint64_t cur = r.limbs_[i + j] + uint64_t(a.limbs_[i]) * b.limbs_[j] + carry;
        r.limbs_[i + j] = static_cast<uint32_t>(cur & 0xffffffffu);
        carry = cur >> 32;
      }
      size_t k = i + b.limbs_.size();
      while (carry) {
        uint64_t cur = r.limbs_[k] + carry;
        r.limbs_[k] = static_cast<uint32_t>(cur & 0xffffffffu);
        carry = cur >> 32;
        ++k;
      }
    }
    r.trim();
    return r;
  }

  BigNat& operator+=(const BigNat& o) { return *this = *this + o; }
  BigNat& operator*=(const BigNat& o) { return *this = *this * o; }

  // Quotient and remainder; schoolbook bit-by-bit long division.
  static std::pair<BigNat, BigNat> divmod(const BigNat& a, const BigNat& b) {
    if (b.is_zero()) throw std::domain_error("BigNat: division by zero");
    BigNat q, rem;
    q.limbs_.assign(a.limbs_.size(), 0);
    for (size_t bit = a.limbs_.size() * 32; bit-- > 0;) {
      rem.shift_left_one();
      if ((a.limbs_[bit / 32] >> (bit % 32)) & 1u) rem.set_low_bit();
      if (!(rem < b)) {
        rem = rem - b;
        q.limbs_[bit / 32] |= (1u << (bit % 32));
      }
    }
    q.trim();
    return {q, rem};
  }

  static BigNat pow(const BigNat& base, unsigned long long e) {
    BigNat r(1), b = base;
    while (e) {
      if (e & 1) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }

  // Binomial coefficient C(n, k), exact (division at every step is exact).
  static BigNat binomial(unsigned long long n, unsigned long long k) {
    if (k > n) return BigNat();
    if (k > n - k) k = n - k;
    BigNat r(1);
    for (unsigned long long i = 1; i <= k; ++i) {
      r = r * BigNat(n - k + i);
      auto [q, rem] = divmod(r, BigNat(i));
      if (!rem.is_zero()) throw std::logic_error("BigNat: binomial not exact");
      r = q;
    }
    return r;
  }

  bool fits_u64() const { return limbs_.size() <= 2; }
  unsigned long long as_u64() const {
    if (!fits_u64()) throw std::overflow_error("BigNat: exceeds 64 bits");
    unsigned long long v = 0;
    for (size_t i = limbs_.size(); i-- > 0;) v = (v << 32) | limbs_[i];
    return v;
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    BigNat cur = *this;
    const BigNat chunk(1000000000ull);
    while (!cur.is_zero()) {
      auto [q, r] = divmod(cur, chunk);
      unsigned long long digits = r.is_zero() ? 0 : r.as_u64();
      std::string part = std::to_string(digits);
      if (!q.is_zero()) part = std::string(9 - part.size(), '0') + part;
      out = part + out;
      cur = q;
    }
    return out;
  }

 private:
  void trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  }
  void shift_left_one() {
    uint32_t carry = 0;
    for (auto& limb : limbs_) {
      uint32_t next = limb >> 31;
      limb = (limb << 1) | carry;
      carry = next;
    }
    if (carry) limbs_.push_back(carry);
  }
  void set_low_bit() {
    if (limbs_.empty()) limbs_.push_back(1);
    else limbs_[0] |= 1u;
  }

  std::vector<uint32_t> limbs_;  // little-endian, base 2^32, no leading zeros
};

}  // namespace coarsedim
