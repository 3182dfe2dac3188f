#include "jtype/field.hpp"

#include <cctype>
#include <sstream>

#include "jtype/error.hpp"

namespace jtype {

bool is_prime_number(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t f = 3; f * f <= n; f += 2)
    if (n % f == 0) return false;
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 32))
    fail(Errc::invalid_argument, "modulus " + std::to_string(p) + " exceeds 2^32");
  if (!is_prime_number(p)) fail(Errc::invalid_argument, "modulus " + std::to_string(p) + " is not prime");
  return Field(FieldKind::prime, p);
}

Field Field::parse(std::string_view text) {
  if (text == "q" || text == "Q" || text == "rationals") return rationals();
  constexpr std::string_view prefix = "gfp:";
  if (text.substr(0, prefix.size()) == prefix) {
    auto digits = text.substr(prefix.size());
    if (digits.empty() || digits.size() > 12)
      fail(Errc::parse_error, "field: bad modulus in '" + std::string(text) + "'");
    std::uint64_t p = 0;
    for (char c : digits) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        fail(Errc::parse_error, "field: bad modulus in '" + std::string(text) + "'");
      p = p * 10 + static_cast<std::uint64_t>(c - '0');
    }
    return prime(p);
  }
  fail(Errc::parse_error, "field: expected 'q' or 'gfp:P', got '" + std::string(text) + "'");
}

std::string Field::to_string() const {
  if (kind_ == FieldKind::rationals) return "q";
  return "gfp:" + std::to_string(modulus_);
}

namespace {

std::uint64_t reduce(const mpz_class& z, std::uint64_t p) {
  mpz_class m(static_cast<unsigned long>(p));
  mpz_class r = z % m;
  if (r < 0) r += m;
  return r.get_ui();
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  // extended Euclid on signed 64-bit; p < 2^32
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

}  // namespace

Scalar::Scalar(Field field) : field_(field) {
  if (field_.is_prime())
    value_ = std::uint64_t{0};
  else
    value_ = mpq_class(0);
}

Scalar::Scalar(Field field, long long value) : field_(field) {
  if (field_.is_prime()) {
    auto p = static_cast<long long>(field_.modulus());
    long long r = value % p;
    if (r < 0) r += p;
    value_ = static_cast<std::uint64_t>(r);
  } else {
    value_ = mpq_class(static_cast<long>(value));
  }
}

Scalar::Scalar(Field field, const mpq_class& value) : field_(field) {
  if (field_.is_prime()) {
    std::uint64_t num = reduce(value.get_num(), field_.modulus());
    std::uint64_t den = reduce(value.get_den(), field_.modulus());
    if (den == 0) fail(Errc::division_by_zero, "denominator vanishes in " + field_.to_string());
    value_ = num * inverse_mod(den, field_.modulus()) % field_.modulus();
  } else {
    mpq_class q = value;
    q.canonicalize();
    value_ = q;
  }
}

Scalar Scalar::parse(Field field, std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  auto valid_int = [](std::string_view t) {
    if (!t.empty() && (t[0] == '-' || t[0] == '+')) t.remove_prefix(1);
    if (t.empty()) return false;
    for (char c : t)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    fail(Errc::parse_error, "not a decimal integer or fraction: '" + std::string(text) + "'");
  if (num[0] == '+') num.erase(0, 1);
  mpz_class n(num), d(den);
  if (d == 0) fail(Errc::division_by_zero, "zero denominator in '" + std::string(text) + "'");
  return Scalar(field, mpq_class(n, d));
}

void Scalar::check_same_field(const Scalar& other) const {
  if (!(field_ == other.field_))
    fail(Errc::field_mismatch, "field mismatch: " + field_.to_string() + " vs " + other.field_.to_string());
}

bool Scalar::is_zero() const {
  if (field_.is_prime()) return std::get<std::uint64_t>(value_) == 0;
  return std::get<mpq_class>(value_) == 0;
}

bool Scalar::is_one() const {
  if (field_.is_prime()) return std::get<std::uint64_t>(value_) == 1;
  return std::get<mpq_class>(value_) == 1;
}

Scalar Scalar::operator+(const Scalar& other) const {
  check_same_field(other);
  Scalar out(field_);
  if (field_.is_prime()) {
    std::uint64_t s = residue() + other.residue();
    if (s >= field_.modulus()) s -= field_.modulus();
    out.value_ = s;
  } else {
    out.value_ = mpq_class(rational() + other.rational());
  }
  return out;
}

Scalar Scalar::operator-(const Scalar& other) const {
  check_same_field(other);
  Scalar out(field_);
  if (field_.is_prime()) {
    std::uint64_t a = residue(), b = other.residue();
    out.value_ = a >= b ? a - b : a + field_.modulus() - b;
  } else {
    out.value_ = mpq_class(rational() - other.rational());
  }
  return out;
}

Scalar Scalar::operator*(const Scalar& other) const {
  check_same_field(other);
  Scalar out(field_);
  if (field_.is_prime())
    out.value_ = residue() * other.residue() % field_.modulus();
  else
    out.value_ = mpq_class(rational() * other.rational());
  return out;
}

Scalar Scalar::operator-() const { return Scalar(field_) - *this; }

Scalar Scalar::inverse() const {
  if (is_zero()) fail(Errc::division_by_zero, "inverse of zero in " + field_.to_string());
  Scalar out(field_);
  if (field_.is_prime())
    out.value_ = inverse_mod(residue(), field_.modulus());
  else
    out.value_ = mpq_class(1 / rational());
  return out;
}

bool Scalar::operator==(const Scalar& other) const {
  check_same_field(other);
  if (field_.is_prime()) return residue() == other.residue();
  return rational() == other.rational();
}

std::string Scalar::to_string() const {
  if (field_.is_prime()) return std::to_string(residue());
  return rational().get_str();
}

}  // namespace jtype
