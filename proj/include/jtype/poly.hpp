#ifndef JTYPE_POLY_HPP
#define JTYPE_POLY_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jtype/field.hpp"
#include "jtype/matrix.hpp"

namespace jtype {

/// Variables of R (lowercase) and of its divided-power dual S (uppercase).
///
/// Perazzo mode: an x-block indexed by exponent tuples (i_1..i_m) with
/// sum d-1, sorted descending lexicographically, followed by y1..ym.
/// Generic mode: a plain list of names, all treated as one block.
class VariableSet {
 public:
  static std::shared_ptr<const VariableSet> perazzo(int m, int d);
  static std::shared_ptr<const VariableSet> generic(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  bool is_perazzo() const noexcept { return perazzo_; }
  int y_count() const noexcept { return m_; }
  int perazzo_degree() const noexcept { return d_; }
  std::size_t x_count() const noexcept { return x_index_set_.size(); }
  const std::vector<std::vector<int>>& x_index_set() const noexcept { return x_index_set_; }

  /// Position of x_{tuple} / y_j (1-based j) in Perazzo mode.
  std::optional<std::size_t> x_position(const std::vector<int>& tuple) const;
  std::size_t y_position(int j) const { return x_index_set_.size() + static_cast<std::size_t>(j - 1); }

  /// "x[2,0]", "y1" for the ring side; "X[2,0]", "Y1" for the dual side.
  std::string name(std::size_t var, bool dual) const;
  /// Resolves a variable token in either case; nullopt if unknown.
  std::optional<std::size_t> find(std::string_view token) const;

  friend bool operator==(const VariableSet& a, const VariableSet& b) {
    return a.perazzo_ == b.perazzo_ && a.m_ == b.m_ && a.d_ == b.d_ && a.names_ == b.names_;
  }

 private:
  VariableSet() = default;

  bool perazzo_ = false;
  int m_ = 0;
  int d_ = 0;
  std::vector<std::vector<int>> x_index_set_;
  std::vector<std::string> names_;  // ring-side spelling
};

using VarsPtr = std::shared_ptr<const VariableSet>;

/// Exponent vector indexed by VariableSet position.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents);
  static Monomial one(std::size_t nvars) { return Monomial(std::vector<int>(nvars, 0)); }
  static Monomial variable(std::size_t nvars, std::size_t var, int power = 1);

  const std::vector<int>& exponents() const noexcept { return exp_; }
  int degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return exp_.size(); }
  int operator[](std::size_t i) const { return exp_[i]; }

  /// Componentwise >=.
  bool divisible_by(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Exponent decrement; requires divisible_by(other).
  Monomial operator/(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<int> exp_;
  int degree_ = 0;
};

/// Canonical term order: higher degree first, then lexicographically larger
/// exponent vectors first (variables in VariableSet order).
struct CanonicalOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// All monomials of degree t in n variables, in canonical order.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, int t);

enum class Side { ring, dual };

class Polynomial {
 public:
  using Terms = std::map<Monomial, Scalar, CanonicalOrder>;

  Polynomial(VarsPtr vars, Side side, Field field);
  static Polynomial constant(VarsPtr vars, Side side, const Scalar& c);
  static Polynomial variable(VarsPtr vars, Side side, Field field, std::size_t var);
  static Polynomial term(VarsPtr vars, Side side, const Monomial& mono, const Scalar& c);
  /// "2*X[1,1]*Y1^2 - 1/2*Y2^3 + ..."; variable tokens in either case.
  static Polynomial parse(VarsPtr vars, Side side, Field field, std::string_view text);

  const VarsPtr& vars() const noexcept { return vars_; }
  Side side() const noexcept { return side_; }
  const Field& field() const noexcept { return field_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  /// Coefficient of a monomial (zero if absent).
  Scalar coefficient(const Monomial& mono) const;
  void add_term(const Monomial& mono, const Scalar& c);

  /// Common degree of all terms; nullopt for inhomogeneous input. The zero
  /// polynomial reports nullopt as well.
  std::optional<int> homogeneous_degree() const;
  /// Degree of a homogeneous polynomial; throws Errc::inhomogeneous otherwise.
  int require_homogeneous(const char* what) const;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial scaled(const Scalar& c) const;
  Polynomial pow(int k) const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void check_compatible(const Polynomial& other) const;

  VarsPtr vars_;
  Side side_;
  Field field_;
  Terms terms_;
};

/// Contraction action of R on S: x^a o X^b = X^(b-a) when b >= a, else 0,
/// extended bilinearly. No multinomial factors.
Polynomial contract(const Polynomial& f, const Polynomial& F);

/// Linear form on R: one coefficient per variable. In Perazzo mode the
/// x-block holds the a-coefficients and the y-block the b-coefficients.
class LinearForm {
 public:
  LinearForm(VarsPtr vars, Vector coefficients);
  static LinearForm zero(VarsPtr vars, Field field);
  /// Comma-separated assignments: "a[2,0]=1, b1=-1/2" in Perazzo mode
  /// (x[..]/y.. spellings also accepted), "x=1,y=1" in generic mode.
  static LinearForm parse(VarsPtr vars, Field field, std::string_view text);

  const VarsPtr& vars() const noexcept { return vars_; }
  const Field& field() const noexcept { return field_; }
  const Vector& coefficients() const noexcept { return coeffs_; }
  const Scalar& coefficient(std::size_t var) const { return coeffs_[var]; }
  void set(std::size_t var, const Scalar& c) { coeffs_[var] = c; }
  bool is_zero() const;

  // Perazzo accessors
  const Scalar& a(std::size_t x_index) const { return coeffs_[x_index]; }
  const Scalar& b(int j) const { return coeffs_[vars_->y_position(j)]; }

  Polynomial as_polynomial() const;
  /// "a[2,0]=1,b1=1" (Perazzo) or "x=1,y=1"; zero coefficients omitted.
  std::string to_string() const;

 private:
  VarsPtr vars_;
  Field field_;
  Vector coeffs_;
};

/// Contraction by a linear form, F -> l o F.
Polynomial contract(const LinearForm& l, const Polynomial& F);

}  // namespace jtype

#endif
