#include "ribbon/laurent.hpp"

#include <array>
#include <ostream>
#include <sstream>

namespace ribbon {

int VarLess::rank(const std::string& name) {
  static const std::array<const char*, 9> fixed = {"x", "y", "z", "w", "q", "c", "d", "A", "B"};
  for (std::size_t i = 0; i < fixed.size(); ++i)
    if (name == fixed[i]) return static_cast<int>(i);
  return static_cast<int>(fixed.size());
}

bool VarLess::operator()(const std::string& a, const std::string& b) const {
  int ra = rank(a), rb = rank(b);
  if (ra != rb) return ra < rb;
  return a < b;
}

namespace {

long long total_degree(const Exponents& exps) {
  long long sum = 0;
  for (const auto& [name, h] : exps) sum += h;
  return sum;
}

bool any_negative(const Exponents& exps) {
  for (const auto& [name, h] : exps)
    if (h < 0) return true;
  return false;
}

}  // namespace

// Terms with a negative exponent print last, then by total degree, then by
// exponent vector in the fixed variable order. This makes e.g.
// "1 + 3*y + y^2 + x*z + x^-1*y" the canonical rendering.
bool MonomialLess::operator()(const Exponents& a, const Exponents& b) const {
  bool na = any_negative(a), nb = any_negative(b);
  if (na != nb) return nb;
  long long da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  auto ia = a.begin();
  auto ib = b.begin();
  VarLess vl;
  while (ia != a.end() && ib != b.end()) {
    if (ia->first != ib->first) {
      // The term that lacks the earlier variable has exponent 0 there.
      return vl(ia->first, ib->first) ? ia->second < 0 : 0 < ib->second;
    }
    if (ia->second != ib->second) return ia->second < ib->second;
    ++ia;
    ++ib;
  }
  if (ia != a.end()) return ia->second < 0;
  if (ib != b.end()) return 0 < ib->second;
  return false;
}

void Laurent::insert_term(const Exponents& exps, const BigInt& coeff) {
  if (coeff.is_zero()) return;
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    terms_.emplace(exps, coeff);
  } else {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Laurent Laurent::constant(BigInt value) {
  Laurent out;
  out.insert_term({}, value);
  return out;
}

Laurent Laurent::var(const std::string& name) { return var_pow_half(name, 2); }

Laurent Laurent::var_pow_half(const std::string& name, int halves) {
  Laurent out;
  Exponents exps;
  if (halves != 0) exps[name] = halves;
  out.insert_term(exps, 1);
  return out;
}

Laurent Laurent::monomial(BigInt coeff, Exponents exps) {
  for (auto it = exps.begin(); it != exps.end();) {
    if (it->second == 0)
      it = exps.erase(it);
    else
      ++it;
  }
  Laurent out;
  out.insert_term(exps, coeff);
  return out;
}

Laurent Laurent::operator-() const {
  Laurent out;
  for (const auto& [exps, coeff] : terms_) out.terms_.emplace(exps, -coeff);
  return out;
}

Laurent& Laurent::operator+=(const Laurent& rhs) {
  for (const auto& [exps, coeff] : rhs.terms_) insert_term(exps, coeff);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& rhs) {
  for (const auto& [exps, coeff] : rhs.terms_) insert_term(exps, -coeff);
  return *this;
}

Laurent& Laurent::operator*=(const Laurent& rhs) {
  Laurent out;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      Exponents exps = ea;
      for (const auto& [name, h] : eb) {
        int& slot = exps[name];
        slot += h;
        if (slot == 0) exps.erase(name);
      }
      out.insert_term(exps, ca * cb);
    }
  }
  terms_ = std::move(out.terms_);
  return *this;
}

Laurent Laurent::pow(unsigned exponent) const {
  Laurent out = one();
  Laurent base = *this;
  while (exponent != 0) {
    if (exponent & 1u) out *= base;
    base *= base;
    exponent >>= 1u;
  }
  return out;
}

Laurent Laurent::pow_half(int halves) const {
  if (halves == 0) return one();
  if (halves % 2 == 0 && halves > 0) return pow(static_cast<unsigned>(halves / 2));
  if (!is_monomial())
    throw precondition_error("pow_half: fractional or negative power of a non-monomial");
  const auto& [exps, coeff] = *terms_.begin();
  BigInt out_coeff = 1;
  if (coeff == BigInt(-1)) {
    if (halves % 2 != 0) throw precondition_error("pow_half: fractional power of a negative unit");
    if ((halves / 2) % 2 != 0) out_coeff = -1;
  } else if (!(coeff == BigInt(1))) {
    throw precondition_error("pow_half: fractional or negative power of a coefficient != 1");
  }
  Exponents out;
  for (const auto& [name, h] : exps) {
    long long scaled = static_cast<long long>(h) * halves;
    if (scaled % 2 != 0) throw precondition_error("pow_half: non-representable fractional power");
    if (scaled != 0) out[name] = static_cast<int>(scaled / 2);
  }
  return monomial(out_coeff, std::move(out));
}

bool Laurent::has_integral_exponents() const {
  for (const auto& [exps, coeff] : terms_)
    for (const auto& [name, h] : exps)
      if (h % 2 != 0) return false;
  return true;
}

Laurent Laurent::substituted(const std::map<std::string, Laurent>& bindings) const {
  Laurent out;
  for (const auto& [exps, coeff] : terms_) {
    Laurent term = constant(coeff);
    Exponents kept;
    for (const auto& [name, h] : exps) {
      auto bound = bindings.find(name);
      if (bound == bindings.end()) {
        kept[name] = h;
        continue;
      }
      const Laurent& value = bound->second;
      if (h % 2 == 0 && h >= 0) {
        term *= value.pow(static_cast<unsigned>(h / 2));
      } else {
        term *= value.pow_half(h);
      }
    }
    term *= monomial(1, std::move(kept));
    out += term;
  }
  return out;
}

Laurent Laurent::w_reduced() const {
  Laurent out;
  for (const auto& [exps, coeff] : terms_) {
    Exponents reduced = exps;
    auto it = reduced.find("w");
    if (it != reduced.end()) {
      if (it->second < 0 || it->second % 2 != 0)
        throw precondition_error("w_reduced: negative or fractional power of w");
      it->second = 2;  // w^k -> w for k >= 1
    }
    out.insert_term(reduced, coeff);
  }
  return out;
}

namespace {

void append_power(std::ostream& os, const std::string& name, int halves) {
  os << name;
  if (halves == 2) return;
  if (halves % 2 == 0) {
    os << '^' << halves / 2;
  } else {
    os << "^(" << halves << "/2)";
  }
}

}  // namespace

std::string Laurent::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [exps, coeff] : terms_) {
    BigInt mag = coeff;
    if (first) {
      if (coeff.is_negative()) {
        os << '-';
        mag = -coeff;
      }
    } else {
      os << (coeff.is_negative() ? " - " : " + ");
      if (coeff.is_negative()) mag = -coeff;
    }
    bool unit = mag == BigInt(1);
    if (!unit || exps.empty()) os << mag.str();
    bool need_star = !unit && !exps.empty();
    for (const auto& [name, h] : exps) {
      if (need_star) os << '*';
      append_power(os, name, h);
      need_star = true;
    }
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Laurent& p) { return os << p.str(); }

}  // namespace ribbon
