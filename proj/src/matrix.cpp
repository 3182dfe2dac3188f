#include "jtype/matrix.hpp"

#include <algorithm>
#include <utility>

#include "jtype/error.hpp"

namespace jtype {

Vector zero_vector(Field field, std::size_t n) { return Vector(n, Scalar(field)); }

bool is_zero_vector(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, Scalar(field)) {}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(field, 1);
  return m;
}

Matrix Matrix::from_rows(Field field, std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) fail(Errc::invalid_argument, "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(Field field, std::size_t rows, const std::vector<Vector>& columns) {
  Matrix m(field, rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) fail(Errc::invalid_argument, "ragged matrix columns");
    for (std::size_t r = 0; r < rows; ++r) m.at(r, c) = columns[c][r];
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back(at(r, c));
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) fail(Errc::invalid_argument, "vector length does not match matrix columns");
  Vector out = zero_vector(field_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (!v[c].is_zero()) out[r] += at(r, c) * v[c];
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (!(a.field_ == b.field_)) fail(Errc::field_mismatch, "matrix product over different fields");
  if (a.cols_ != b.rows_) fail(Errc::invalid_argument, "matrix product shape mismatch");
  Matrix out(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out.at(i, j) += aik * b.at(k, j);
    }
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

EchelonForm row_reduce(const Matrix& m) {
  const Field& field = m.field();
  std::vector<Vector> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));

  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < m.cols() && lead < rows.size(); ++c) {
    std::size_t p = lead;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[lead]);
    Scalar inv = rows[lead][c].inverse();
    for (auto& x : rows[lead]) x *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == lead || rows[r][c].is_zero()) continue;
      Scalar f = rows[r][c];
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!rows[lead][j].is_zero()) rows[r][j] -= f * rows[lead][j];
    }
    pivots.push_back(c);
    ++lead;
  }
  rows.resize(lead);
  return EchelonForm{Matrix::from_rows(field, m.cols(), rows), std::move(pivots)};
}

namespace {

std::size_t rank_prime(const Matrix& m) {
  const std::uint64_t p = m.field().modulus();
  std::vector<std::vector<std::uint64_t>> a(m.rows(), std::vector<std::uint64_t>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m.at(r, c).residue();

  std::size_t lead = 0;
  for (std::size_t c = 0; c < m.cols() && lead < a.size(); ++c) {
    std::size_t piv = lead;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[lead]);
    std::uint64_t inv = Scalar(m.field(), static_cast<long long>(a[lead][c])).inverse().residue();
    for (std::size_t r = lead + 1; r < a.size(); ++r) {
      if (a[r][c] == 0) continue;
      std::uint64_t f = a[r][c] * inv % p;
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (a[lead][j] == 0) continue;
        a[r][j] = (a[r][j] + (p - f) * a[lead][j]) % p;
      }
    }
    ++lead;
  }
  return lead;
}

// Fraction-free (Bareiss) elimination on the integer matrix obtained by
// clearing the denominators of each row.
std::size_t rank_rational(const Matrix& m) {
  std::vector<std::vector<mpz_class>> a(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class den = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), m.at(r, c).rational().get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const mpq_class& q = m.at(r, c).rational();
      a[r][c] = q.get_num() * (den / q.get_den());
    }
  }

  mpz_class prev = 1;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < m.cols() && lead < a.size(); ++c) {
    std::size_t piv = lead;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[lead]);
    for (std::size_t r = lead + 1; r < a.size(); ++r) {
      for (std::size_t j = c + 1; j < m.cols(); ++j) {
        a[r][j] = a[lead][c] * a[r][j] - a[r][c] * a[lead][j];
        mpz_divexact(a[r][j].get_mpz_t(), a[r][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[r][c] = 0;
    }
    prev = a[lead][c];
    ++lead;
  }
  return lead;
}

}  // namespace

std::size_t rank(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return m.field().is_prime() ? rank_prime(m) : rank_rational(m);
}

std::vector<Vector> kernel_basis(const Matrix& m) {
  EchelonForm ef = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : ef.pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(m.field(), m.cols());
    v[free] = Scalar(m.field(), 1);
    for (std::size_t r = 0; r < ef.pivots.size(); ++r) v[ef.pivots[r]] = -ef.reduced.at(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

SpanSolver::SpanSolver(Field field, std::size_t ambient, const std::vector<Vector>& generators)
    : field_(field), ambient_(ambient) {
  for (std::size_t g = 0; g < generators.size(); ++g) {
    if (generators[g].size() != ambient_) fail(Errc::invalid_argument, "generator length does not match ambient space");
    Vector v = generators[g];
    Vector combo = zero_vector(field_, independent_.size() + 1);
    combo.back() = Scalar(field_, 1);
    for (std::size_t j = 0; j < rows_.size(); ++j) {
      Scalar f = v[pivots_[j]];
      if (f.is_zero()) continue;
      for (std::size_t c = 0; c < ambient_; ++c)
        if (!rows_[j][c].is_zero()) v[c] -= f * rows_[j][c];
      for (std::size_t i = 0; i < combos_[j].size(); ++i) combo[i] -= f * combos_[j][i];
    }
    auto lead = std::find_if(v.begin(), v.end(), [](const Scalar& s) { return !s.is_zero(); });
    if (lead == v.end()) continue;
    Scalar inv = lead->inverse();
    for (auto& x : v) x *= inv;
    for (auto& x : combo) x *= inv;
    pivots_.push_back(static_cast<std::size_t>(lead - v.begin()));
    rows_.push_back(std::move(v));
    combos_.push_back(std::move(combo));
    independent_.push_back(g);
  }
  for (auto& combo : combos_) combo.resize(independent_.size(), Scalar(field_));
}

Vector SpanSolver::reduce(Vector v) const {
  if (v.size() != ambient_) fail(Errc::invalid_argument, "vector length does not match ambient space");
  for (std::size_t j = 0; j < rows_.size(); ++j) {
    Scalar f = v[pivots_[j]];
    if (f.is_zero()) continue;
    for (std::size_t c = 0; c < ambient_; ++c)
      if (!rows_[j][c].is_zero()) v[c] -= f * rows_[j][c];
  }
  return v;
}

std::optional<Vector> SpanSolver::coordinates(const Vector& v) const {
  if (v.size() != ambient_) fail(Errc::invalid_argument, "vector length does not match ambient space");
  Vector rem = v;
  Vector coords = zero_vector(field_, independent_.size());
  for (std::size_t j = 0; j < rows_.size(); ++j) {
    Scalar f = rem[pivots_[j]];
    if (f.is_zero()) continue;
    for (std::size_t c = 0; c < ambient_; ++c)
      if (!rows_[j][c].is_zero()) rem[c] -= f * rows_[j][c];
    for (std::size_t i = 0; i < coords.size(); ++i)
      if (!combos_[j][i].is_zero()) coords[i] += f * combos_[j][i];
  }
  if (!is_zero_vector(rem)) return std::nullopt;
  return coords;
}

}  // namespace jtype
