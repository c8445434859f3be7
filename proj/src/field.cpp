#include "glie/field.hpp"

#include <cassert>
#include <cstdlib>

namespace glie {

std::string Scalar::str() const {
  if (is_residue()) return std::to_string(residue_value());
  const mpq_class& q = fraction_value();
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

int scalar_cmp(const Scalar& a, const Scalar& b) {
  assert(a.is_residue() == b.is_residue());
  if (a.is_residue()) {
    if (a.residue_value() < b.residue_value()) return -1;
    if (a.residue_value() > b.residue_value()) return 1;
    return 0;
  }
  return cmp(a.fraction_value(), b.fraction_value());
}

namespace {

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// extended Euclid, a in [1, p)
std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  assert(r == 1);
  return t < 0 ? t + p : t;
}

}  // namespace

FieldSpec FieldSpec::prime(std::int64_t p) {
  if (p < 2 || p > 97 || !is_prime(p))
    throw std::invalid_argument("field modulus must be a prime in [2, 97], got " +
                                std::to_string(p));
  return FieldSpec(FieldKind::prime, p);
}

void FieldSpec::check(const Scalar& a) const {
  assert(a.is_residue() == finite());
  (void)a;
}

Scalar FieldSpec::zero() const {
  return finite() ? Scalar::residue(0) : Scalar::fraction(mpq_class(0));
}

Scalar FieldSpec::one() const {
  return finite() ? Scalar::residue(1) : Scalar::fraction(mpq_class(1));
}

Scalar FieldSpec::from_int(std::int64_t n) const {
  if (!finite()) return Scalar::fraction(mpq_class(static_cast<long>(n)));
  std::int64_t r = n % p_;
  if (r < 0) r += p_;
  return Scalar::residue(r);
}

Scalar FieldSpec::add(const Scalar& a, const Scalar& b) const {
  check(a), check(b);
  if (finite()) return Scalar::residue((a.residue_value() + b.residue_value()) % p_);
  return Scalar::fraction(a.fraction_value() + b.fraction_value());
}

Scalar FieldSpec::sub(const Scalar& a, const Scalar& b) const {
  check(a), check(b);
  if (finite()) {
    std::int64_t r = (a.residue_value() - b.residue_value()) % p_;
    if (r < 0) r += p_;
    return Scalar::residue(r);
  }
  return Scalar::fraction(a.fraction_value() - b.fraction_value());
}

Scalar FieldSpec::mul(const Scalar& a, const Scalar& b) const {
  check(a), check(b);
  if (finite()) return Scalar::residue((a.residue_value() * b.residue_value()) % p_);
  return Scalar::fraction(a.fraction_value() * b.fraction_value());
}

Scalar FieldSpec::neg(const Scalar& a) const {
  check(a);
  if (finite()) return a.residue_value() == 0 ? a : Scalar::residue(p_ - a.residue_value());
  return Scalar::fraction(-a.fraction_value());
}

Scalar FieldSpec::inv(const Scalar& a) const {
  check(a);
  if (a.is_zero()) throw std::domain_error("division by zero");
  if (finite()) return Scalar::residue(mod_inverse(a.residue_value(), p_));
  return Scalar::fraction(1 / a.fraction_value());
}

Scalar FieldSpec::div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

Scalar FieldSpec::parse(const std::string& text) const {
  if (finite()) {
    std::size_t pos = 0;
    long long v;
    try {
      v = std::stoll(text, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("not a valid " + name() + " scalar: '" + text + "'");
    }
    if (pos != text.size() || v < 0 || v >= p_)
      throw std::invalid_argument("scalar '" + text + "' out of range for " + name());
    return Scalar::residue(v);
  }
  mpq_class q;
  if (q.set_str(text, 10) != 0 || (text.find('/') != std::string::npos && q.get_den() == 0))
    throw std::invalid_argument("not a valid rational scalar: '" + text + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  q.canonicalize();
  return Scalar::fraction(std::move(q));
}

std::string FieldSpec::name() const {
  return finite() ? "F_" + std::to_string(p_) : "Q";
}

}  // namespace glie
