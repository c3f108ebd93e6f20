#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pdr {

// Unsigned big integer, base 2^32. Only the handful of operations the bound
// formulas need: +, *, pow, comparison, bit length, decimal/2^n printing.
class BigInt {
 public:
  BigInt() = default;
  BigInt(std::uint64_t v) {
    while (v) {
      limbs_.push_back(static_cast<std::uint32_t>(v));
      v >>= 32;
    }
  }

  bool is_zero() const { return limbs_.empty(); }

  friend BigInt operator+(const BigInt& a, const BigInt& b) {
    BigInt r;
    std::uint64_t carry = 0;
    size_t n = std::max(a.limbs_.size(), b.limbs_.size());
    r.limbs_.reserve(n + 1);
    for (size_t i = 0; i < n || carry; ++i) {
      std::uint64_t s = carry;
      if (i < a.limbs_.size()) s += a.limbs_[i];
      if (i < b.limbs_.size()) s += b.limbs_[i];
      r.limbs_.push_back(static_cast<std::uint32_t>(s));
      carry = s >> 32;
    }
    return r;
  }

  friend BigInt operator*(const BigInt& a, const BigInt& b) {
    BigInt r;
    if (a.is_zero() || b.is_zero()) return r;
    r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (size_t i = 0; i < a.limbs_.size(); ++i) {
      std::uint64_t carry = 0;
      for (size_t j = 0; j < b.limbs_.size() || carry; ++j) {
        std::uint64_t cur = r.limbs_[i + j] + carry;
        if (j < b.limbs_.size())
          cur += static_cast<std::uint64_t>(a.limbs_[i]) * b.limbs_[j];
        r.limbs_[i + j] = static_cast<std::uint32_t>(cur);
        carry = cur >> 32;
      }
    }
    r.trim();
    return r;
  }

  static BigInt pow(const BigInt& base, std::uint64_t exp) {
    BigInt r(1), b = base;
    while (exp) {
      if (exp & 1) r = r * b;
      exp >>= 1;
      if (exp) b = b * b;
    }
    return r;
  }

  friend bool operator==(const BigInt& a, const BigInt& b) {
    return a.limbs_ == b.limbs_;
  }
  friend bool operator<(const BigInt& a, const BigInt& b) {
    if (a.limbs_.size() != b.limbs_.size())
      return a.limbs_.size() < b.limbs_.size();
    for (size_t i = a.limbs_.size(); i-- > 0;)
      if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i];
    return false;
  }
  friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
  friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
  friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }
  friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }

  // Number of bits in the binary representation (0 for zero).
  std::uint64_t bit_length() const {
    if (limbs_.empty()) return 0;
    std::uint32_t top = limbs_.back();
    std::uint64_t bits = (limbs_.size() - 1) * 32ull;
    while (top) {
      ++bits;
      top >>= 1;
    }
    return bits;
  }

  bool fits_u64() const { return limbs_.size() <= 2; }
  std::uint64_t as_u64() const {
    if (!fits_u64()) throw std::overflow_error("BigInt does not fit in u64");
    std::uint64_t v = 0;
    if (limbs_.size() > 1) v = static_cast<std::uint64_t>(limbs_[1]) << 32;
    if (!limbs_.empty()) v |= limbs_[0];
    return v;
  }

  std::string to_decimal() const {
    if (limbs_.empty()) return "0";
    std::vector<std::uint32_t> work(limbs_);
    std::string out;
    while (!work.empty()) {
      // divide by 10^9 in place
      std::uint64_t rem = 0;
      for (size_t i = work.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | work[i];
        work[i] = static_cast<std::uint32_t>(cur / 1000000000ull);
        rem = cur % 1000000000ull;
      }
      while (!work.empty() && work.back() == 0) work.pop_back();
      std::string chunk = std::to_string(rem);
      if (!work.empty()) chunk = std::string(9 - chunk.size(), '0') + chunk;
      out = chunk + out;
    }
    return out;
  }

  // Short human-readable form: exact decimal if small, "~2^<bits>" otherwise.
  std::string to_report(size_t decimal_limit = 40) const {
    std::string dec = limbs_.size() <= 5 ? to_decimal() : std::string();
    if (!dec.empty() && dec.size() <= decimal_limit) return dec;
    return "~2^" + std::to_string(bit_length());
  }

 private:
  void trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  }
  std::vector<std::uint32_t> limbs_;  // little-endian
};

}  // namespace pdr
