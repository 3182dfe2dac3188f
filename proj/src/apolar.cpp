#include "jtype/apolar.hpp"

#include <algorithm>
#include <numeric>

#include "jtype/binomial.hpp"
#include "jtype/error.hpp"

namespace jtype {

namespace {

using MonomialIndex = std::map<Monomial, std::size_t, CanonicalOrder>;

MonomialIndex index_of(const std::vector<Monomial>& monos) {
  MonomialIndex idx;
  for (std::size_t i = 0; i < monos.size(); ++i) idx.emplace(monos[i], i);
  return idx;
}

std::optional<Vector> to_vector(const Polynomial& p, const MonomialIndex& index) {
  Vector v = zero_vector(p.field(), index.size());
  for (const auto& [mono, c] : p.terms()) {
    auto it = index.find(mono);
    if (it == index.end()) return std::nullopt;
    v[it->second] = c;
  }
  return v;
}

Polynomial monomial_poly(const VarsPtr& vars, Side side, Field field, const Monomial& m) {
  return Polynomial::term(vars, side, m, Scalar(field, 1));
}

void check_degree_range(const Polynomial& F, int t, int d) {
  if (t < 0 || t > d)
    fail(Errc::out_of_range, "degree " + std::to_string(t) + " outside 0.." + std::to_string(d) + " for " + F.to_string());
}

}  // namespace

// -------------------------------------------------------------------- HVector

std::size_t HVector::at_or_zero(long long i) const {
  if (i < 0 || i >= static_cast<long long>(values.size())) return 0;
  return values[static_cast<std::size_t>(i)];
}

std::size_t HVector::sum() const { return std::accumulate(values.begin(), values.end(), std::size_t{0}); }

std::string HVector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(values[i]);
  }
  return s + ")";
}

// ----------------------------------------------------- catalecticant & co.

Matrix catalecticant(const Polynomial& F, int t) {
  if (F.side() != Side::dual) fail(Errc::variable_mismatch, "catalecticant needs a dual generator");
  int d = F.require_homogeneous("catalecticant");
  check_degree_range(F, t, d);
  const std::size_t n = F.vars()->size();
  auto cols = monomials_of_degree(n, t);
  auto rows = index_of(monomials_of_degree(n, d - t));
  Matrix m(F.field(), rows.size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (const auto& [mono, coeff] : F.terms())
      if (mono.divisible_by(cols[c])) m.at(rows.at(mono / cols[c]), c) = coeff;
  return m;
}

HVector hilbert_function(const Polynomial& F) {
  int d = F.require_homogeneous("hilbert_function");
  HVector h;
  for (int t = 0; t <= d; ++t) h.values.push_back(rank(catalecticant(F, t)));
  return h;
}

AnnBasis annihilator_basis(const Polynomial& F, int t) {
  Matrix cat = catalecticant(F, t);
  auto cols = monomials_of_degree(F.vars()->size(), t);
  AnnBasis out{t, {}};
  for (const auto& v : kernel_basis(cat)) {
    Polynomial g(F.vars(), Side::ring, F.field());
    for (std::size_t c = 0; c < cols.size(); ++c) g.add_term(cols[c], v[c]);
    out.generators.push_back(std::move(g));
  }
  return out;
}

HVector compressed_hf(int c, int d) {
  if (c < 1 || d < 0) fail(Errc::invalid_argument, "compressed_hf needs c >= 1 and d >= 0");
  HVector h;
  for (int i = 0; i <= d; ++i) h.values.push_back(binomial(std::min(i, d - i) + c - 1, c - 1));
  return h;
}

HfStats hf_stats(const HVector& h, std::optional<int> codimension) {
  if (h.values.empty()) fail(Errc::invalid_argument, "empty h-vector");
  HfStats s;
  s.sperner = *std::max_element(h.values.begin(), h.values.end());
  std::size_t i = 0;
  while (i + 1 < h.size() && h[i] <= h[i + 1]) ++i;
  while (i + 1 < h.size() && h[i] >= h[i + 1]) ++i;
  s.unimodal = i + 1 == h.size();
  s.symmetric = std::equal(h.values.begin(), h.values.end(), h.values.rbegin());
  if (codimension) s.compressed = h == compressed_hf(*codimension, static_cast<int>(h.size()) - 1);
  return s;
}

// --------------------------------------------------------- GradedAlgebraModel

GradedAlgebraModel GradedAlgebraModel::from_dual(const Polynomial& F, Field field) {
  if (F.side() != Side::dual) fail(Errc::variable_mismatch, "dual generator must live in the divided-power ring");
  if (!(F.field() == field)) fail(Errc::field_mismatch, "dual generator is not defined over " + field.to_string());
  int d = F.require_homogeneous("model_from_dual");
  if (!field.admits_degree(d))
    fail(Errc::characteristic, "characteristic " + std::to_string(field.characteristic()) + " must exceed socle degree " + std::to_string(d));

  GradedAlgebraModel model(Source::dual_generator, field, F.vars());
  model.dual_ = F;
  const std::size_t n = F.vars()->size();
  for (int t = 0; t <= d; ++t) {
    Piece piece;
    auto monos = monomials_of_degree(n, t);
    std::vector<Polynomial> contractions;
    contractions.reserve(monos.size());
    for (const auto& mono : monos) {
      Polynomial c(F.vars(), Side::dual, field);
      for (const auto& [b, cb] : F.terms())
        if (b.divisible_by(mono)) c.add_term(b / mono, cb);
      contractions.push_back(std::move(c));
    }
    std::vector<Monomial> support;
    for (const auto& c : contractions)
      for (const auto& [mono, coeff] : c.terms()) support.push_back(mono);
    std::sort(support.begin(), support.end(), CanonicalOrder{});
    support.erase(std::unique(support.begin(), support.end()), support.end());
    piece.index = index_of(support);

    std::vector<Vector> vectors;
    vectors.reserve(contractions.size());
    for (const auto& c : contractions) vectors.push_back(*to_vector(c, piece.index));
    piece.solver.emplace(field, support.size(), vectors);
    for (auto g : piece.solver->independent()) {
      piece.basis.push_back(monos[g]);
      piece.images.push_back(contractions[g]);
    }
    model.hilbert_.values.push_back(piece.basis.size());
    model.pieces_.push_back(std::move(piece));
  }
  return model;
}

GradedAlgebraModel GradedAlgebraModel::from_ideal(const std::vector<Polynomial>& generators, int bound) {
  if (generators.empty()) fail(Errc::invalid_argument, "ideal needs at least one generator");
  if (bound < 1) fail(Errc::invalid_argument, "degree bound must be positive");
  const auto& first = generators.front();
  std::vector<std::pair<int, const Polynomial*>> gens;
  for (const auto& g : generators) {
    if (g.side() != Side::ring) fail(Errc::variable_mismatch, "ideal generators must live in the polynomial ring");
    if (!(*g.vars() == *first.vars())) fail(Errc::variable_mismatch, "ideal generators use different variable sets");
    if (!(g.field() == first.field())) fail(Errc::field_mismatch, "ideal generators over different fields");
    if (g.is_zero()) continue;
    int deg = g.require_homogeneous("model_from_ideal");
    if (deg == 0) fail(Errc::invalid_argument, "ideal contains a unit; the quotient is zero");
    gens.emplace_back(deg, &g);
  }

  GradedAlgebraModel model(Source::ideal, first.field(), first.vars());
  const Field field = first.field();
  const std::size_t n = first.vars()->size();
  for (int t = 0; t <= bound; ++t) {
    Piece piece;
    auto monos = monomials_of_degree(n, t);
    piece.index = index_of(monos);
    std::vector<Vector> spanning;
    for (const auto& [deg, g] : gens) {
      if (deg > t) continue;
      for (const auto& mult : monomials_of_degree(n, t - deg)) {
        Polynomial p = monomial_poly(model.vars_, Side::ring, field, mult) * *g;
        spanning.push_back(*to_vector(p, piece.index));
      }
    }
    piece.solver.emplace(field, monos.size(), spanning);
    std::vector<bool> pivot(monos.size(), false);
    for (auto c : piece.solver->pivot_columns()) pivot[c] = true;
    for (std::size_t c = 0; c < monos.size(); ++c)
      if (!pivot[c]) {
        piece.standard.push_back(c);
        piece.basis.push_back(monos[c]);
      }
    if (piece.basis.empty()) break;
    if (t == bound)
      fail(Errc::not_artinian, "algebra does not vanish in degree " + std::to_string(bound) + " (h = " +
                                   std::to_string(piece.basis.size()) + ")");
    model.hilbert_.values.push_back(piece.basis.size());
    model.pieces_.push_back(std::move(piece));
  }
  return model;
}

const std::vector<Monomial>& GradedAlgebraModel::basis_monomials(int t) const {
  if (t < 0 || t > socle_degree()) fail(Errc::out_of_range, "degree " + std::to_string(t) + " outside the algebra");
  return pieces_[static_cast<std::size_t>(t)].basis;
}

Vector GradedAlgebraModel::dual_coordinates(const Piece& piece, const Polynomial& w) const {
  auto v = to_vector(w, piece.index);
  std::optional<Vector> coords;
  if (v) coords = piece.solver->coordinates(*v);
  if (!coords) fail(Errc::internal, "contraction left the inverse system: " + w.to_string());
  return *coords;
}

Vector GradedAlgebraModel::ideal_coordinates(const Piece& piece, const Polynomial& g) const {
  auto v = to_vector(g, piece.index);
  if (!v) fail(Errc::internal, "element of unexpected degree: " + g.to_string());
  Vector rem = piece.solver->reduce(std::move(*v));
  Vector coords;
  coords.reserve(piece.standard.size());
  for (auto c : piece.standard) coords.push_back(rem[c]);
  return coords;
}

Vector GradedAlgebraModel::coordinates(const Polynomial& g) const {
  if (g.side() != Side::ring || !(*g.vars() == *vars_)) fail(Errc::variable_mismatch, "element is not in the model's ring");
  if (!(g.field() == field_)) fail(Errc::field_mismatch, "element is not over the model's field");
  if (g.is_zero()) fail(Errc::invalid_argument, "degree of the zero element is undefined");
  int t = g.require_homogeneous("coordinates");
  if (t > socle_degree()) return {};
  const Piece& piece = pieces_[static_cast<std::size_t>(t)];
  if (source_ == Source::dual_generator) return dual_coordinates(piece, contract(g, *dual_));
  return ideal_coordinates(piece, g);
}

void GradedAlgebraModel::check_form(const LinearForm& l) const {
  if (!(*l.vars() == *vars_)) fail(Errc::variable_mismatch, "linear form uses a different variable set");
  if (!(l.field() == field_)) fail(Errc::field_mismatch, "linear form is not over the model's field");
  if (l.is_zero()) fail(Errc::zero_form, "linear form is zero");
}

Matrix GradedAlgebraModel::mult_matrix(const LinearForm& l, int i, int k) const {
  check_form(l);
  if (i < 0 || k < 0) fail(Errc::out_of_range, "negative degree or power");
  const int d = socle_degree();
  const std::size_t cols = i <= d ? hilbert_[static_cast<std::size_t>(i)] : 0;
  if (i > d || i + k > d) return Matrix(field_, 0, cols);
  const Piece& src = pieces_[static_cast<std::size_t>(i)];
  const Piece& dst = pieces_[static_cast<std::size_t>(i + k)];
  Matrix m(field_, dst.basis.size(), cols);

  std::optional<Polynomial> power;
  if (source_ == Source::ideal) power = l.as_polynomial().pow(k);
  for (std::size_t j = 0; j < cols; ++j) {
    Vector col;
    if (source_ == Source::dual_generator) {
      Polynomial w = src.images[j];
      for (int s = 0; s < k; ++s) w = contract(l, w);
      col = dual_coordinates(dst, w);
    } else {
      Polynomial p = *power * monomial_poly(vars_, Side::ring, field_, src.basis[j]);
      col = ideal_coordinates(dst, p);
    }
    for (std::size_t r = 0; r < col.size(); ++r) m.at(r, j) = col[r];
  }
  return m;
}

}  // namespace jtype
