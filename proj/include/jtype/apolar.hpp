#ifndef JTYPE_APOLAR_HPP
#define JTYPE_APOLAR_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jtype/matrix.hpp"
#include "jtype/poly.hpp"

namespace jtype {

/// Hilbert function h_0..h_d of an Artinian graded algebra.
struct HVector {
  std::vector<std::size_t> values;

  std::size_t size() const noexcept { return values.size(); }
  std::size_t operator[](std::size_t i) const { return values[i]; }
  /// h_i, zero outside the stored range.
  std::size_t at_or_zero(long long i) const;
  std::size_t sum() const;
  std::string to_string() const;

  friend bool operator==(const HVector&, const HVector&) = default;
};

/// Matrix of R_t -> S_{d-t}, g -> g o F. Rows are the degree d-t monomials
/// of S and columns the degree t monomials of R, both in canonical order.
Matrix catalecticant(const Polynomial& F, int t);

HVector hilbert_function(const Polynomial& F);

struct AnnBasis {
  int degree = 0;
  std::vector<Polynomial> generators;
};

/// Basis of (Ann F)_t from the kernel of the catalecticant.
AnnBasis annihilator_basis(const Polynomial& F, int t);

/// Largest Gorenstein h-vector for codimension c and socle degree d.
HVector compressed_hf(int c, int d);

struct HfStats {
  std::size_t sperner = 0;
  bool unimodal = false;
  bool symmetric = false;
  std::optional<bool> compressed;  // set only when a codimension is supplied
};

HfStats hf_stats(const HVector& h, std::optional<int> codimension = std::nullopt);

/// Graded coordinate model of A = R/Ann(F) or A = R/I.
///
/// Dual-generator models identify A_t with W_t = span{x^a o F : |a| = t}
/// inside S_{d-t}; the basis tags are the x-monomials a whose contractions
/// were picked as pivots. Ideal models use standard (non-pivot) monomials
/// of I_t as coset representatives.
class GradedAlgebraModel {
 public:
  enum class Source { dual_generator, ideal };

  static GradedAlgebraModel from_dual(const Polynomial& F, Field field);
  /// Fails with Errc::not_artinian when A_bound is nonzero.
  static GradedAlgebraModel from_ideal(const std::vector<Polynomial>& generators, int bound);

  Source source() const noexcept { return source_; }
  const Field& field() const noexcept { return field_; }
  const VarsPtr& vars() const noexcept { return vars_; }
  int socle_degree() const noexcept { return static_cast<int>(hilbert_.size()) - 1; }
  const HVector& hilbert() const noexcept { return hilbert_; }
  std::size_t dimension() const { return hilbert_.sum(); }
  const std::optional<Polynomial>& dual_generator() const noexcept { return dual_; }

  /// Monomials whose classes form the basis of A_t.
  const std::vector<Monomial>& basis_monomials(int t) const;

  /// Coordinates in A_t of a homogeneous ring element of degree t.
  Vector coordinates(const Polynomial& g) const;

  /// Matrix of x l^k : A_i -> A_{i+k} (h_{i+k} rows, h_i columns).
  Matrix mult_matrix(const LinearForm& l, int i, int k) const;

 private:
  struct Piece {
    std::vector<Monomial> basis;
    // dual models: x^a o F for each basis tag, and a compact index of S_{d-t}
    std::vector<Polynomial> images;
    // ideal models: index of all degree-t monomials of R
    std::map<Monomial, std::size_t, CanonicalOrder> index;
    std::vector<std::size_t> standard;  // positions of the basis monomials in index
    std::optional<SpanSolver> solver;   // over W_t (dual) or I_t (ideal)
  };

  GradedAlgebraModel(Source source, Field field, VarsPtr vars) : source_(source), field_(field), vars_(std::move(vars)) {}

  Vector dual_coordinates(const Piece& piece, const Polynomial& w) const;
  Vector ideal_coordinates(const Piece& piece, const Polynomial& g) const;
  void check_form(const LinearForm& l) const;

  Source source_;
  Field field_;
  VarsPtr vars_;
  std::optional<Polynomial> dual_;
  HVector hilbert_;
  std::vector<Piece> pieces_;
};

}  // namespace jtype

#endif
