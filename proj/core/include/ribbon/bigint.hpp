#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace ribbon {

// Arbitrary-precision signed integer, sign + little-endian base-2^32 magnitude.
// Subset sums over 2^e spanning subgraphs can exceed machine words, so
// polynomial coefficients use this type throughout.
class BigInt {
 public:
  BigInt() = default;
  BigInt(long long value);  // NOLINT: implicit by design, coefficients are written as literals

  static BigInt from_string(const std::string& decimal);

  bool is_zero() const { return limbs_.empty(); }
  bool is_negative() const { return negative_; }
  int sign() const { return is_zero() ? 0 : (negative_ ? -1 : 1); }

  BigInt operator-() const;
  BigInt& operator+=(const BigInt& rhs);
  BigInt& operator-=(const BigInt& rhs);
  BigInt& operator*=(const BigInt& rhs);

  friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
  friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
  friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }

  friend bool operator==(const BigInt& a, const BigInt& b) {
    return a.negative_ == b.negative_ && a.limbs_ == b.limbs_;
  }
  friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
  friend bool operator<(const BigInt& a, const BigInt& b);

  std::string str() const;
  // Exact conversion; throws std::overflow_error when out of range.
  long long to_int64() const;

  friend std::ostream& operator<<(std::ostream& os, const BigInt& v);

 private:
  void trim();
  static int compare_magnitude(const BigInt& a, const BigInt& b);
  static std::vector<std::uint32_t> add_magnitude(const std::vector<std::uint32_t>& a,
                                                  const std::vector<std::uint32_t>& b);
  // Requires |a| >= |b|.
  static std::vector<std::uint32_t> sub_magnitude(const std::vector<std::uint32_t>& a,
                                                  const std::vector<std::uint32_t>& b);

  bool negative_ = false;
  std::vector<std::uint32_t> limbs_;  // empty means zero
};

}  // namespace ribbon
