#include "edgecodes/gf.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>

namespace edgecodes::gf {

namespace {

// Conway polynomials, coefficients low to high.
const std::map<std::pair<unsigned, unsigned>, std::vector<unsigned>>& conway_table() {
  static const std::map<std::pair<unsigned, unsigned>, std::vector<unsigned>> table = {
      {{2, 2}, {1, 1, 1}},
      {{2, 3}, {1, 1, 0, 1}},
      {{2, 4}, {1, 1, 0, 0, 1}},
      {{2, 5}, {1, 0, 1, 0, 0, 1}},
      {{2, 6}, {1, 1, 0, 1, 1, 0, 1}},
      {{2, 7}, {1, 1, 0, 0, 0, 0, 0, 1}},
      {{2, 8}, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
      {{3, 2}, {2, 2, 1}},
      {{3, 3}, {1, 2, 0, 1}},
      {{3, 4}, {2, 0, 0, 2, 1}},
      {{3, 5}, {1, 2, 0, 0, 0, 1}},
      {{5, 2}, {2, 4, 1}},
      {{5, 3}, {3, 3, 0, 1}},
      {{7, 2}, {3, 6, 1}},
      {{11, 2}, {2, 7, 1}},
      {{13, 2}, {2, 12, 1}},
  };
  return table;
}

unsigned pow_mod(unsigned base, unsigned exp, unsigned mod) {
  unsigned long long result = 1, b = base % mod;
  while (exp) {
    if (exp & 1u) result = result * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return unsigned(result);
}

// Remainder of a modulo b over F_p; b monic is not required, only a nonzero
// leading coefficient. Coefficients low to high.
std::vector<unsigned> poly_rem(std::vector<unsigned> a, const std::vector<unsigned>& b, unsigned p) {
  const std::size_t db = b.size() - 1;
  const unsigned lead_inv = pow_mod(b.back(), p - 2, p);
  while (a.size() > db && !a.empty()) {
    const unsigned c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i)
      a[shift + i] = (a[shift + i] + p - (c * b[i]) % p) % p;
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return a;
}

}  // namespace

std::pair<unsigned, unsigned> prime_power(unsigned q) {
  if (q < 2) throw std::invalid_argument("field size must be at least 2");
  unsigned p = 2;
  while (q % p != 0) ++p;
  unsigned e = 0, rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1) throw std::invalid_argument("field size " + std::to_string(q) + " is not a prime power");
  return {p, e};
}

bool is_irreducible(const std::vector<unsigned>& poly, unsigned p) {
  const std::size_t deg = poly.size() - 1;
  if (deg <= 1) return deg == 1;
  // Every monic divisor of degree t, 1 <= t <= deg/2.
  for (std::size_t t = 1; t <= deg / 2; ++t) {
    std::vector<unsigned> divisor(t + 1, 0);
    divisor[t] = 1;
    std::size_t combos = 1;
    for (std::size_t i = 0; i < t; ++i) combos *= p;
    for (std::size_t c = 0; c < combos; ++c) {
      std::size_t v = c;
      for (std::size_t i = 0; i < t; ++i) {
        divisor[i] = unsigned(v % p);
        v /= p;
      }
      if (poly_rem(poly, divisor, p).empty()) return false;
    }
  }
  return true;
}

void require_same(const Field& a, const Field& b) {
  if (!(a == b))
    throw FieldMismatch("elements belong to different fields (GF(" + std::to_string(a.q()) + ") vs GF(" +
                        std::to_string(b.q()) + "))");
}

std::shared_ptr<const Field> Field::make(unsigned q) {
  if (q > 256) throw std::invalid_argument("field size " + std::to_string(q) + " exceeds 256");
  auto [p, e] = prime_power(q);
  std::vector<unsigned> modulus;
  if (e == 1) {
    modulus = {0, 1};
  } else {
    auto it = conway_table().find({p, e});
    if (it == conway_table().end())
      throw std::invalid_argument("no reduction polynomial for GF(" + std::to_string(q) + ")");
    modulus = it->second;
    if (!is_irreducible(modulus, p))
      throw std::logic_error("reduction polynomial for GF(" + std::to_string(q) + ") is reducible");
  }
  return std::shared_ptr<const Field>(new Field(p, e, std::move(modulus)));
}

Field::Field(unsigned p, unsigned e, std::vector<unsigned> modulus)
    : p_(p), e_(e), q_(1), modulus_(std::move(modulus)) {
  for (unsigned i = 0; i < e_; ++i) q_ *= p_;

  add_.resize(std::size_t(q_) * q_);
  neg_.resize(q_);
  for (unsigned a = 0; a < q_; ++a) {
    auto da = digits(Code(a));
    std::vector<unsigned> dn(e_);
    for (unsigned i = 0; i < e_; ++i) dn[i] = (p_ - da[i]) % p_;
    neg_[a] = from_digits(dn);
    for (unsigned b = 0; b < q_; ++b) {
      auto db = digits(Code(b));
      std::vector<unsigned> ds(e_);
      for (unsigned i = 0; i < e_; ++i) ds[i] = (da[i] + db[i]) % p_;
      add_[index(Code(a), Code(b))] = from_digits(ds);
    }
  }

  // Smallest generator of the multiplicative group, found with the reference
  // multiplication; exp/log tables follow from its powers.
  const unsigned order = q_ - 1;
  for (unsigned g = 1; g < q_; ++g) {
    std::vector<Code> powers;
    powers.reserve(order);
    Code x = 1;
    bool ok = true;
    for (unsigned k = 0; k < order; ++k) {
      if (k > 0 && x == 1) {
        ok = false;
        break;
      }
      powers.push_back(x);
      x = mul_reference(x, Code(g));
    }
    if (ok && x == 1) {
      generator_ = Code(g);
      exp_ = std::move(powers);
      break;
    }
  }
  if (exp_.size() != order) throw std::logic_error("multiplicative group is not cyclic; reduction polynomial broken");
  log_.assign(q_, 0);
  for (unsigned k = 0; k < order; ++k) log_[exp_[k]] = k;

  mul_.assign(std::size_t(q_) * q_, 0);
  for (unsigned a = 1; a < q_; ++a)
    for (unsigned b = 1; b < q_; ++b)
      mul_[index(Code(a), Code(b))] = exp_[(log_[a] + log_[b]) % order];
}

std::vector<unsigned> Field::digits(Code a) const {
  std::vector<unsigned> d(e_);
  unsigned v = a;
  for (unsigned i = 0; i < e_; ++i) {
    d[i] = v % p_;
    v /= p_;
  }
  return d;
}

Code Field::from_digits(const std::vector<unsigned>& d) const {
  unsigned v = 0;
  for (unsigned i = e_; i-- > 0;) v = v * p_ + d[i];
  return Code(v);
}

Code Field::mul_reference(Code a, Code b) const {
  if (e_ == 1) return Code((unsigned(a) * unsigned(b)) % p_);
  auto da = digits(a), db = digits(b);
  std::vector<unsigned> prod(2 * e_ - 1, 0);
  for (unsigned i = 0; i < e_; ++i)
    for (unsigned j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
  while (!prod.empty() && prod.back() == 0) prod.pop_back();
  auto rem = poly_rem(prod, modulus_, p_);
  rem.resize(e_, 0);
  return from_digits(rem);
}

Code Field::inv(Code a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  const unsigned order = q_ - 1;
  return exp_[(order - log_[a]) % order];
}

Code Field::pow(Code a, unsigned long long k) const {
  if (k == 0) return 1;
  if (a == 0) return 0;
  const unsigned order = q_ - 1;
  return exp_[(log_[a] * (k % order)) % order];
}

unsigned Field::log(Code a) const {
  if (a == 0) throw std::domain_error("logarithm of zero");
  return log_[a];
}

Code Field::exp(long long k) const {
  const long long order = q_ - 1;
  long long r = k % order;
  if (r < 0) r += order;
  return exp_[std::size_t(r)];
}

std::vector<Code> Field::nonzero_elements() const { return exp_; }

std::string Field::to_string(Code a) const {
  if (e_ == 1) return std::to_string(unsigned(a));
  auto d = digits(a);
  std::ostringstream out;
  bool first = true;
  for (unsigned i = e_; i-- > 0;) {
    if (d[i] == 0) continue;
    if (!first) out << '+';
    first = false;
    if (i == 0) {
      out << d[i];
      continue;
    }
    if (d[i] != 1) out << d[i];
    out << 'a';
    if (i > 1) out << '^' << i;
  }
  return first ? "0" : out.str();
}

Elem::Elem(FieldPtr field, Code value) : field_(std::move(field)), value_(value) {
  if (!field_) throw std::invalid_argument("element without a field");
  if (value_ >= field_->q()) throw std::out_of_range("element code out of range");
}

Elem Elem::operator+(const Elem& o) const {
  require_same(*field_, *o.field_);
  return {field_, field_->add(value_, o.value_)};
}

Elem Elem::operator-(const Elem& o) const {
  require_same(*field_, *o.field_);
  return {field_, field_->sub(value_, o.value_)};
}

Elem Elem::operator*(const Elem& o) const {
  require_same(*field_, *o.field_);
  return {field_, field_->mul(value_, o.value_)};
}

Elem Elem::inv() const { return {field_, field_->inv(value_)}; }

Elem add(const Elem& a, const Elem& b) { return a + b; }
Elem mul(const Elem& a, const Elem& b) { return a * b; }
Elem inv(const Elem& a) { return a.inv(); }

std::vector<Elem> nonzero_elements(const FieldPtr& field) {
  std::vector<Elem> out;
  for (Code c : field->nonzero_elements()) out.emplace_back(field, c);
  return out;
}

}  // namespace edgecodes::gf
