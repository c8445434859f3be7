#ifndef GLIE_FIELD_HPP
#define GLIE_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace glie {

/// Thrown when an enumeration would exceed a configured resource guard.
class guard_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class FieldKind { prime, rational };

/// A field element: residue in [0,p) for prime fields, exact fraction in
/// lowest terms with positive denominator for the rationals. Which
/// alternative is active is fixed by the field the value belongs to.
class Scalar {
 public:
  Scalar() : v_(std::int64_t{0}) {}

  static Scalar residue(std::int64_t r) { return Scalar(Repr(r)); }
  static Scalar fraction(mpq_class q) { return Scalar(Repr(std::move(q))); }

  bool is_residue() const { return v_.index() == 0; }
  std::int64_t residue_value() const { return std::get<0>(v_); }
  const mpq_class& fraction_value() const { return std::get<1>(v_); }

  bool is_zero() const {
    return is_residue() ? residue_value() == 0 : fraction_value() == 0;
  }

  /// Canonical text form: residues as decimal, fractions as "n" or "n/d".
  std::string str() const;

  bool operator==(const Scalar&) const = default;

 private:
  using Repr = std::variant<std::int64_t, mpq_class>;
  explicit Scalar(Repr v) : v_(std::move(v)) {}
  Repr v_;
};

/// Total order used for all canonical enumeration and witness ordering.
int scalar_cmp(const Scalar& a, const Scalar& b);

/// The scalar domain: F_p for a prime 2 <= p <= 97, or the rationals.
/// All scalar arithmetic goes through the field so residues stay reduced
/// and fractions stay in lowest terms.
class FieldSpec {
 public:
  static FieldSpec prime(std::int64_t p);
  static FieldSpec rational() { return FieldSpec(FieldKind::rational, 0); }

  FieldKind kind() const { return kind_; }
  bool finite() const { return kind_ == FieldKind::prime; }
  std::int64_t modulus() const { return p_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t n) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const;

  /// Parses the canonical text form; rejects residues outside [0,p).
  Scalar parse(const std::string& text) const;

  std::string name() const;  // "F_p" or "Q"

  bool operator==(const FieldSpec&) const = default;

 private:
  FieldSpec(FieldKind k, std::int64_t p) : kind_(k), p_(p) {}
  void check(const Scalar& a) const;
  FieldKind kind_;
  std::int64_t p_;
};

}  // namespace glie

#endif
