#include "jtype/jordan.hpp"

#include <algorithm>

#include "jtype/error.hpp"

namespace jtype {

RankProfile::RankProfile(HVector h, std::vector<std::vector<std::size_t>> table) : h_(std::move(h)), table_(std::move(table)) {
  const int d = socle_degree();
  if (table_.size() != h_.size()) fail(Errc::internal, "rank profile: row count differs from h-vector length");
  for (int i = 0; i <= d; ++i) {
    const auto& row = table_[static_cast<std::size_t>(i)];
    if (row.size() != static_cast<std::size_t>(d + 2) || row[0] != h_[static_cast<std::size_t>(i)])
      fail(Errc::internal, "rank profile: malformed row " + std::to_string(i));
    for (int k = 0; k <= d; ++k) {
      if (row[static_cast<std::size_t>(k)] < row[static_cast<std::size_t>(k + 1)])
        fail(Errc::internal, "rank profile: ranks increase with the power");
      if (row[static_cast<std::size_t>(k)] > std::min(h_[static_cast<std::size_t>(i)], h_.at_or_zero(i + k)))
        fail(Errc::internal, "rank profile: rank exceeds the piece dimensions");
    }
  }
}

std::size_t RankProfile::operator()(int i, int k) const {
  const int d = socle_degree();
  if (i < 0 || i > d || k < 0 || i + k > d) return 0;
  return table_[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
}

std::size_t RankProfile::total(int k) const {
  std::size_t s = 0;
  for (int i = 0; i <= socle_degree(); ++i) s += (*this)(i, k);
  return s;
}

RankProfile rank_profile(const GradedAlgebraModel& model, const LinearForm& l) {
  if (l.is_zero()) fail(Errc::zero_form, "linear form is zero");
  const int d = model.socle_degree();
  std::vector<std::vector<std::size_t>> table(static_cast<std::size_t>(d + 1), std::vector<std::size_t>(static_cast<std::size_t>(d + 2), 0));
  for (int i = 0; i <= d; ++i) {
    table[static_cast<std::size_t>(i)][0] = model.hilbert()[static_cast<std::size_t>(i)];
    for (int k = 1; i + k <= d; ++k) {
      std::size_t r = rank(model.mult_matrix(l, i, k));
      table[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = r;
      if (r == 0) break;  // higher powers vanish too
    }
  }
  return RankProfile(model.hilbert(), std::move(table));
}

Partition jordan_type(const RankProfile& ranks) {
  const int d = ranks.socle_degree();
  std::vector<std::size_t> parts;
  for (int k = 1; k <= d + 1; ++k) {
    // parts >= k minus parts >= k+1
    std::size_t at_least_k = ranks.total(k - 1) - ranks.total(k);
    std::size_t at_least_next = ranks.total(k) - ranks.total(k + 1);
    if (at_least_k < at_least_next) fail(Errc::internal, "rank totals are not convex");
    parts.insert(parts.end(), at_least_k - at_least_next, static_cast<std::size_t>(k));
  }
  return Partition(std::move(parts));
}

Partition jordan_type(const GradedAlgebraModel& model, const LinearForm& l) { return jordan_type(rank_profile(model, l)); }

JordanDegreeType jordan_degree_type(const RankProfile& r) {
  const int d = r.socle_degree();
  std::vector<JordanDegreeType::Entry> entries;
  for (int i = 0; i <= d; ++i)
    for (int p = 1; i + p - 1 <= d; ++p) {
      long long here = static_cast<long long>(r(i, p - 1)) - static_cast<long long>(r(i, p));
      long long before = static_cast<long long>(r(i - 1, p)) - static_cast<long long>(r(i - 1, p + 1));
      long long s = here - before;
      if (s < 0)
        fail(Errc::internal, "negative string count at degree " + std::to_string(i) + ", length " + std::to_string(p));
      entries.insert(entries.end(), static_cast<std::size_t>(s), {static_cast<std::size_t>(p), i});
    }
  JordanDegreeType jdt(std::move(entries));
  auto beads = jdt.bead_counts(d);
  for (int i = 0; i <= d; ++i)
    if (beads[static_cast<std::size_t>(i)] != r.hilbert()[static_cast<std::size_t>(i)])
      fail(Errc::internal, "bead count differs from h_" + std::to_string(i));
  return jdt;
}

JordanDegreeType jordan_degree_type(const GradedAlgebraModel& model, const LinearForm& l) {
  return jordan_degree_type(rank_profile(model, l));
}

namespace {

// Multiplication by l between consecutive pieces, and its powers.
class GradedOperator {
 public:
  GradedOperator(const GradedAlgebraModel& model, const LinearForm& l) : model_(model) {
    for (int i = 0; i <= model.socle_degree(); ++i) steps_.push_back(model.mult_matrix(l, i, 1));
  }

  int top() const { return model_.socle_degree(); }
  std::size_t dim(int i) const { return model_.hilbert().at_or_zero(i); }

  Vector apply(int i, const Vector& v) const {
    if (i >= top()) return {};
    return steps_[static_cast<std::size_t>(i)].apply(v);
  }

  // ker l^p on A_i
  std::vector<Vector> kernel(int i, int p) const {
    const Field& field = model_.field();
    if (i + p > top()) {
      std::vector<Vector> all;
      for (std::size_t c = 0; c < dim(i); ++c) {
        Vector e = zero_vector(field, dim(i));
        e[c] = Scalar(field, 1);
        all.push_back(std::move(e));
      }
      return all;
    }
    Matrix power = Matrix::identity(field, dim(i));
    for (int s = 0; s < p; ++s) power = steps_[static_cast<std::size_t>(i + s)] * power;
    return kernel_basis(power);
  }

 private:
  const GradedAlgebraModel& model_;
  std::vector<Matrix> steps_;
};

}  // namespace

std::vector<JordanString> jordan_strings(const GradedAlgebraModel& model, const LinearForm& l) {
  if (l.is_zero()) fail(Errc::zero_form, "linear form is zero");
  GradedOperator op(model, l);
  const Field& field = model.field();
  const int d = op.top();
  std::vector<JordanString> strings;
  for (int p = d + 1; p >= 1; --p) {
    for (int i = 0; i + p - 1 <= d; ++i) {
      std::vector<Vector> generators = op.kernel(i, p - 1);
      if (i > 0)
        for (const auto& v : op.kernel(i - 1, p + 1)) generators.push_back(op.apply(i - 1, v));
      const std::size_t spanned = generators.size();
      auto candidates = op.kernel(i, p);
      generators.insert(generators.end(), candidates.begin(), candidates.end());
      SpanSolver solver(field, op.dim(i), generators);
      for (auto g : solver.independent()) {
        if (g < spanned) continue;
        JordanString s;
        s.start = i;
        Vector bead = generators[g];
        for (int b = 0; b < p; ++b) {
          s.beads.push_back(bead);
          if (b + 1 < p) bead = op.apply(i + b, bead);
        }
        strings.push_back(std::move(s));
      }
    }
  }
  if (!is_jordan_basis(model, l, strings)) fail(Errc::internal, "string extraction did not produce a Jordan basis");
  return strings;
}

JordanDegreeType degree_type_of(const std::vector<JordanString>& strings) {
  std::vector<JordanDegreeType::Entry> entries;
  for (const auto& s : strings) entries.emplace_back(s.length(), s.start);
  return JordanDegreeType(std::move(entries));
}

bool is_jordan_basis(const GradedAlgebraModel& model, const LinearForm& l, const std::vector<JordanString>& strings) {
  GradedOperator op(model, l);
  const int d = op.top();
  std::vector<std::vector<Vector>> per_degree(static_cast<std::size_t>(d + 1));
  for (const auto& s : strings) {
    if (s.beads.empty() || s.start < 0 || s.start + static_cast<int>(s.length()) - 1 > d) return false;
    for (std::size_t b = 0; b < s.length(); ++b) {
      int deg = s.start + static_cast<int>(b);
      if (s.beads[b].size() != op.dim(deg)) return false;
      if (b + 1 < s.length() && op.apply(deg, s.beads[b]) != s.beads[b + 1]) return false;
      per_degree[static_cast<std::size_t>(deg)].push_back(s.beads[b]);
    }
    int last = s.start + static_cast<int>(s.length()) - 1;
    Vector next = op.apply(last, s.beads.back());
    if (!is_zero_vector(next)) return false;
  }
  for (int i = 0; i <= d; ++i) {
    const auto& beads = per_degree[static_cast<std::size_t>(i)];
    if (beads.size() != op.dim(i)) return false;
    if (beads.empty()) continue;
    if (rank(Matrix::from_columns(model.field(), op.dim(i), beads)) != op.dim(i)) return false;
  }
  return true;
}

LefschetzResult lefschetz_check(const RankProfile& r) {
  const auto& h = r.hilbert();
  LefschetzResult out;
  out.weak = true;
  for (int i = 0; i < r.socle_degree(); ++i)
    if (r(i, 1) != std::min(h[static_cast<std::size_t>(i)], h[static_cast<std::size_t>(i + 1)])) out.weak = false;
  out.strong = jordan_type(r) == conjugate_partition(Partition(h.values));
  return out;
}

LefschetzResult lefschetz_check(const GradedAlgebraModel& model, const LinearForm& l) {
  return lefschetz_check(rank_profile(model, l));
}

}  // namespace jtype
