#include "ribbon/bigint.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace ribbon {

namespace {
constexpr std::uint64_t kBase = 1ull << 32;
}

BigInt::BigInt(long long value) {
  negative_ = value < 0;
  // Avoid overflow on LLONG_MIN.
  std::uint64_t mag = negative_ ? ~static_cast<std::uint64_t>(value) + 1 : static_cast<std::uint64_t>(value);
  while (mag != 0) {
    limbs_.push_back(static_cast<std::uint32_t>(mag & 0xffffffffu));
    mag >>= 32;
  }
}

BigInt BigInt::from_string(const std::string& decimal) {
  BigInt out;
  std::size_t i = 0;
  bool neg = false;
  if (i < decimal.size() && (decimal[i] == '+' || decimal[i] == '-')) {
    neg = decimal[i] == '-';
    ++i;
  }
  if (i == decimal.size()) throw std::invalid_argument("BigInt: empty numeral");
  for (; i < decimal.size(); ++i) {
    char ch = decimal[i];
    if (ch < '0' || ch > '9') throw std::invalid_argument("BigInt: bad digit");
    out *= BigInt(10);
    out += BigInt(ch - '0');
  }
  if (neg) out = -out;
  return out;
}

void BigInt::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  if (limbs_.empty()) negative_ = false;
}

int BigInt::compare_magnitude(const BigInt& a, const BigInt& b) {
  if (a.limbs_.size() != b.limbs_.size()) return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
  for (std::size_t i = a.limbs_.size(); i-- > 0;) {
    if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
  }
  return 0;
}

std::vector<std::uint32_t> BigInt::add_magnitude(const std::vector<std::uint32_t>& a,
                                                 const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> out;
  out.reserve(std::max(a.size(), b.size()) + 1);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < std::max(a.size(), b.size()) || carry; ++i) {
    std::uint64_t sum = carry;
    if (i < a.size()) sum += a[i];
    if (i < b.size()) sum += b[i];
    out.push_back(static_cast<std::uint32_t>(sum % kBase));
    carry = sum / kBase;
  }
  return out;
}

std::vector<std::uint32_t> BigInt::sub_magnitude(const std::vector<std::uint32_t>& a,
                                                 const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> out = a;
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int64_t cur = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
    borrow = 0;
    if (cur < 0) {
      cur += static_cast<std::int64_t>(kBase);
      borrow = 1;
    }
    out[i] = static_cast<std::uint32_t>(cur);
  }
  return out;
}

BigInt BigInt::operator-() const {
  BigInt out = *this;
  if (!out.is_zero()) out.negative_ = !out.negative_;
  return out;
}

BigInt& BigInt::operator+=(const BigInt& rhs) {
  if (negative_ == rhs.negative_) {
    limbs_ = add_magnitude(limbs_, rhs.limbs_);
  } else {
    int cmp = compare_magnitude(*this, rhs);
    if (cmp == 0) {
      limbs_.clear();
      negative_ = false;
      return *this;
    }
    if (cmp > 0) {
      limbs_ = sub_magnitude(limbs_, rhs.limbs_);
    } else {
      limbs_ = sub_magnitude(rhs.limbs_, limbs_);
      negative_ = rhs.negative_;
    }
  }
  trim();
  return *this;
}

BigInt& BigInt::operator-=(const BigInt& rhs) { return *this += -rhs; }

BigInt& BigInt::operator*=(const BigInt& rhs) {
  if (is_zero() || rhs.is_zero()) {
    limbs_.clear();
    negative_ = false;
    return *this;
  }
  std::vector<std::uint32_t> out(limbs_.size() + rhs.limbs_.size(), 0);
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < rhs.limbs_.size() || carry; ++j) {
      std::uint64_t cur = out[i + j] + carry;
      if (j < rhs.limbs_.size())
        cur += static_cast<std::uint64_t>(limbs_[i]) * rhs.limbs_[j];
      out[i + j] = static_cast<std::uint32_t>(cur % kBase);
      carry = cur / kBase;
    }
  }
  limbs_ = std::move(out);
  negative_ = negative_ != rhs.negative_;
  trim();
  return *this;
}

bool operator<(const BigInt& a, const BigInt& b) {
  if (a.negative_ != b.negative_) return a.negative_;
  int cmp = BigInt::compare_magnitude(a, b);
  return a.negative_ ? cmp > 0 : cmp < 0;
}

std::string BigInt::str() const {
  if (is_zero()) return "0";
  // Repeated division by 10^9.
  std::vector<std::uint32_t> work = limbs_;
  std::string out;
  while (!work.empty()) {
    std::uint64_t rem = 0;
    for (std::size_t i = work.size(); i-- > 0;) {
      std::uint64_t cur = (rem << 32) | work[i];
      work[i] = static_cast<std::uint32_t>(cur / 1000000000ull);
      rem = cur % 1000000000ull;
    }
    while (!work.empty() && work.back() == 0) work.pop_back();
    std::string chunk = std::to_string(rem);
    if (!work.empty()) chunk.insert(chunk.begin(), 9 - chunk.size(), '0');
    out = chunk + out;
  }
  return negative_ ? "-" + out : out;
}

long long BigInt::to_int64() const {
  if (limbs_.size() > 2) throw std::overflow_error("BigInt: does not fit in int64");
  std::uint64_t mag = 0;
  if (limbs_.size() >= 1) mag = limbs_[0];
  if (limbs_.size() == 2) mag |= static_cast<std::uint64_t>(limbs_[1]) << 32;
  if (negative_) {
    if (mag > 0x8000000000000000ull) throw std::overflow_error("BigInt: does not fit in int64");
    return static_cast<long long>(~mag + 1);
  }
  if (mag > 0x7fffffffffffffffull) throw std::overflow_error("BigInt: does not fit in int64");
  return static_cast<long long>(mag);
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.str(); }

}  // namespace ribbon
