#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace kdm {

// Nonnegative arbitrary-precision integer. Limbs are base 10^9, little-endian,
// trimmed so equality works structurally; zero is the single limb 0.
class BigUint {
 public:
  BigUint() : limbs_{0} {}

  BigUint(unsigned long long v) {
    do {
      limbs_.push_back(static_cast<std::uint32_t>(v % kBase));
      v /= kBase;
    } while (v > 0);
  }

  static BigUint factorial(unsigned n) {
    BigUint r(1);
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
  }

  static BigUint pow2(unsigned n) {
    BigUint r(1);
    for (unsigned i = 0; i < n; ++i) r *= 2;
    return r;
  }

  bool is_zero() const { return limbs_.size() == 1 && limbs_[0] == 0; }

  BigUint& operator*=(unsigned long long v) { return *this *= BigUint(v); }

  BigUint& operator*=(const BigUint& other) {
    if (is_zero() || other.is_zero()) {
      limbs_ = {0};
      return *this;
    }
    std::vector<std::uint64_t> acc(limbs_.size() + other.limbs_.size(), 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
      std::uint64_t carry = 0;
      for (std::size_t j = 0; j < other.limbs_.size(); ++j) {
        std::uint64_t cur = acc[i + j] +
                            static_cast<std::uint64_t>(limbs_[i]) * other.limbs_[j] +
                            carry;
        acc[i + j] = cur % kBase;
        carry = cur / kBase;
      }
      std::size_t pos = i + other.limbs_.size();
      while (carry > 0) {
        std::uint64_t cur = acc[pos] + carry;
        acc[pos] = cur % kBase;
        carry = cur / kBase;
        ++pos;
      }
    }
    limbs_.assign(acc.begin(), acc.end());
    trim();
    return *this;
  }

  friend BigUint operator*(BigUint a, const BigUint& b) { return a *= b; }

  BigUint& operator+=(const BigUint& other) {
    if (limbs_.size() < other.limbs_.size()) limbs_.resize(other.limbs_.size(), 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
      std::uint64_t cur = carry + limbs_[i] +
                          (i < other.limbs_.size() ? other.limbs_[i] : 0);
      limbs_[i] = static_cast<std::uint32_t>(cur % kBase);
      carry = cur / kBase;
    }
    if (carry > 0) limbs_.push_back(static_cast<std::uint32_t>(carry));
    return *this;
  }

  friend BigUint operator+(BigUint a, const BigUint& b) { return a += b; }

  bool operator==(const BigUint&) const = default;

  std::string to_string() const {
    std::string out = std::to_string(limbs_.back());
    for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
      std::string chunk = std::to_string(limbs_[i]);
      out += std::string(9 - chunk.size(), '0') + chunk;
    }
    return out;
  }

 private:
  static constexpr std::uint64_t kBase = 1000000000ull;

  void trim() {
    while (limbs_.size() > 1 && limbs_.back() == 0) limbs_.pop_back();
  }

  std::vector<std::uint32_t> limbs_;
};

}  // namespace kdm
