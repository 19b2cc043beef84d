#pragma once

// Finite fields F_q with q = p^e <= 256.
//
// Elements are stored as small integer codes in [0, q). For prime fields the
// code is the residue itself; for extension fields it packs the coefficient
// vector of the polynomial representative in base p (c0 + c1*p + ...).

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace edgecodes::gf {

using Code = std::uint8_t;

class FieldMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Field {
 public:
  /// Builds F_q. Throws std::invalid_argument unless q is a prime power in
  /// [2, 256] with a built-in reduction polynomial.
  static std::shared_ptr<const Field> make(unsigned q);

  unsigned p() const { return p_; }
  unsigned e() const { return e_; }
  unsigned q() const { return q_; }
  bool is_prime() const { return e_ == 1; }

  /// Monic reduction polynomial, coefficients low to high (length e + 1).
  /// For prime fields this is the identity convention x.
  const std::vector<unsigned>& reduction_polynomial() const { return modulus_; }

  Code zero() const { return 0; }
  Code one() const { return 1; }
  /// Smallest code that generates the multiplicative group.
  Code generator() const { return generator_; }

  Code add(Code a, Code b) const { return add_[index(a, b)]; }
  Code sub(Code a, Code b) const { return add_[index(a, neg_[b])]; }
  Code neg(Code a) const { return neg_[a]; }
  Code mul(Code a, Code b) const { return mul_[index(a, b)]; }
  Code inv(Code a) const;
  Code pow(Code a, unsigned long long k) const;

  /// Discrete log base generator(); a must be nonzero.
  unsigned log(Code a) const;
  /// generator()^k, k reduced modulo q - 1.
  Code exp(long long k) const;

  /// Multiplication by polynomial product and reduction modulo the
  /// reduction polynomial. Independent of the tables; used for checking them.
  Code mul_reference(Code a, Code b) const;

  /// 1, g, g^2, ..., g^(q-2).
  std::vector<Code> nonzero_elements() const;

  /// Row of the multiplication table for a fixed left factor.
  const Code* mul_row(Code a) const { return &mul_[std::size_t(a) * q_]; }
  const Code* add_row(Code a) const { return &add_[std::size_t(a) * q_]; }

  std::string to_string(Code a) const;

  bool operator==(const Field& other) const { return p_ == other.p_ && e_ == other.e_; }

 private:
  Field(unsigned p, unsigned e, std::vector<unsigned> modulus);
  std::size_t index(Code a, Code b) const { return std::size_t(a) * q_ + b; }
  std::vector<unsigned> digits(Code a) const;
  Code from_digits(const std::vector<unsigned>& d) const;

  unsigned p_;
  unsigned e_;
  unsigned q_;
  std::vector<unsigned> modulus_;
  Code generator_ = 1;
  std::vector<Code> add_;
  std::vector<Code> mul_;
  std::vector<Code> neg_;
  std::vector<Code> exp_;       // length q - 1
  std::vector<unsigned> log_;   // indexed by code, log_[0] unused
};

using FieldPtr = std::shared_ptr<const Field>;

/// Throws FieldMismatch when the two fields differ.
void require_same(const Field& a, const Field& b);

/// True when the polynomial (coefficients low to high, over F_p) has no
/// factor of degree 1..deg/2. Exhaustive trial division.
bool is_irreducible(const std::vector<unsigned>& poly, unsigned p);

/// Returns (p, e) with q = p^e, or throws std::invalid_argument.
std::pair<unsigned, unsigned> prime_power(unsigned q);

/// A field element bound to its field.
class Elem {
 public:
  Elem(FieldPtr field, Code value);

  const FieldPtr& field() const { return field_; }
  Code value() const { return value_; }
  bool is_zero() const { return value_ == 0; }

  Elem operator+(const Elem& o) const;
  Elem operator-(const Elem& o) const;
  Elem operator*(const Elem& o) const;
  Elem operator-() const { return {field_, field_->neg(value_)}; }
  Elem inv() const;
  Elem pow(unsigned long long k) const { return {field_, field_->pow(value_, k)}; }

  bool operator==(const Elem& o) const { return *field_ == *o.field_ && value_ == o.value_; }

  std::string to_string() const { return field_->to_string(value_); }

 private:
  FieldPtr field_;
  Code value_;
};

Elem add(const Elem& a, const Elem& b);
Elem mul(const Elem& a, const Elem& b);
Elem inv(const Elem& a);
std::vector<Elem> nonzero_elements(const FieldPtr& field);

}  // namespace edgecodes::gf
