#ifndef JTYPE_FIELD_HPP
#define JTYPE_FIELD_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace jtype {

enum class FieldKind { rationals, prime };

/// Description of the coefficient field: the rationals or GF(p), p < 2^32.
class Field {
 public:
  static Field rationals() { return Field(FieldKind::rationals, 0); }
  static Field prime(std::uint64_t p);
  /// Accepts "q" (also "Q", "rationals") or "gfp:P".
  static Field parse(std::string_view text);
  /// GF(32003).
  static Field default_field() { return prime(32003); }

  FieldKind kind() const noexcept { return kind_; }
  std::uint64_t modulus() const noexcept { return modulus_; }
  std::uint64_t characteristic() const noexcept { return modulus_; }
  bool is_prime() const noexcept { return kind_ == FieldKind::prime; }

  // char 0 or char > d
  bool admits_degree(int d) const noexcept {
    return kind_ == FieldKind::rationals || modulus_ > static_cast<std::uint64_t>(d);
  }

  std::string to_string() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  Field(FieldKind kind, std::uint64_t modulus) : kind_(kind), modulus_(modulus) {}

  FieldKind kind_;
  std::uint64_t modulus_;
};

bool is_prime_number(std::uint64_t n);

/// An exact element of a Field. Rationals are kept reduced with positive
/// denominator, residues in [0, p).
class Scalar {
 public:
  explicit Scalar(Field field);
  Scalar(Field field, long long value);
  Scalar(Field field, const mpq_class& value);

  /// Decimal integer or fraction "a/b".
  static Scalar parse(Field field, std::string_view text);

  const Field& field() const noexcept { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& other) const;
  Scalar operator-(const Scalar& other) const;
  Scalar operator*(const Scalar& other) const;
  Scalar operator/(const Scalar& other) const { return *this * other.inverse(); }
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& other) { return *this = *this + other; }
  Scalar& operator-=(const Scalar& other) { return *this = *this - other; }
  Scalar& operator*=(const Scalar& other) { return *this = *this * other; }
  Scalar inverse() const;

  bool operator==(const Scalar& other) const;
  bool operator!=(const Scalar& other) const { return !(*this == other); }

  // Only meaningful for the matching field kind.
  std::uint64_t residue() const { return std::get<std::uint64_t>(value_); }
  const mpq_class& rational() const { return std::get<mpq_class>(value_); }

  std::string to_string() const;

 private:
  void check_same_field(const Scalar& other) const;

  Field field_;
  std::variant<std::uint64_t, mpq_class> value_;
};

}  // namespace jtype

#endif
