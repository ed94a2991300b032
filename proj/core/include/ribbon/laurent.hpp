#pragma once

#include <map>
#include <string>
#include <vector>

#include "ribbon/bigint.hpp"
#include "ribbon/errors.hpp"

namespace ribbon {

// Variables are interned by name. The fixed names x,y,z,w,q,c,d,A,B sort
// first (in that order), every other name after them lexicographically;
// per-edge indeterminates use the names "alpha:<edge>" and "beta:<edge>".
struct VarLess {
  static int rank(const std::string& name);
  bool operator()(const std::string& a, const std::string& b) const;
};

// Exponents are stored in half-units: a stored exponent h means the true
// power is h/2, so x^(1/2) is representable and all arithmetic stays exact.
using Exponents = std::map<std::string, int, VarLess>;

struct MonomialLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

// Exact multivariate Laurent polynomial with BigInt coefficients.
class Laurent {
 public:
  Laurent() = default;

  static Laurent zero() { return Laurent(); }
  static Laurent constant(BigInt value);
  static Laurent one() { return constant(1); }
  static Laurent var(const std::string& name);           // name^1
  static Laurent var_pow_half(const std::string& name, int halves);  // name^(halves/2)
  static Laurent monomial(BigInt coeff, Exponents exps);

  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Exponents, BigInt, MonomialLess>& terms() const { return terms_; }

  Laurent operator-() const;
  Laurent& operator+=(const Laurent& rhs);
  Laurent& operator-=(const Laurent& rhs);
  Laurent& operator*=(const Laurent& rhs);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(Laurent a, const Laurent& b) { return a *= b; }

  friend bool operator==(const Laurent& a, const Laurent& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

  Laurent pow(unsigned exponent) const;
  // Raises to the power halves/2. The base must be a single term; fractional
  // results that would need an odd stored exponent on a coefficient != 1 or a
  // non-representable power raise precondition_error.
  Laurent pow_half(int halves) const;

  // True when every stored exponent is even, i.e. no fractional powers remain.
  bool has_integral_exponents() const;

  // Simultaneous substitution. A variable occurring with fractional exponent
  // may only be replaced by a coefficient-1 monomial.
  Laurent substituted(const std::map<std::string, Laurent>& bindings) const;

  // Reduces modulo w^2 - w: clamps every positive w power to 1. Rejects
  // negative or fractional w powers.
  Laurent w_reduced() const;

  std::string str() const;

 private:
  void insert_term(const Exponents& exps, const BigInt& coeff);
  std::map<Exponents, BigInt, MonomialLess> terms_;
};

std::ostream& operator<<(std::ostream& os, const Laurent& p);

}  // namespace ribbon
