#ifndef JTYPE_JORDAN_HPP
#define JTYPE_JORDAN_HPP

#include <cstddef>
#include <vector>

#include "jtype/apolar.hpp"
#include "jtype/partition.hpp"

namespace jtype {

/// r(i, k) = rank of x l^k : A_i -> A_{i+k}, with r(i, 0) = h_i and zero
/// whenever i < 0 or i + k exceeds the socle degree.
class RankProfile {
 public:
  RankProfile(HVector h, std::vector<std::vector<std::size_t>> table);

  int socle_degree() const noexcept { return static_cast<int>(h_.size()) - 1; }
  const HVector& hilbert() const noexcept { return h_; }
  std::size_t operator()(int i, int k) const;
  /// Sum over i of r(i, k).
  std::size_t total(int k) const;

 private:
  HVector h_;
  std::vector<std::vector<std::size_t>> table_;  // table_[i][k], 0 <= k <= d + 1
};

RankProfile rank_profile(const GradedAlgebraModel& model, const LinearForm& l);

Partition jordan_type(const GradedAlgebraModel& model, const LinearForm& l);
Partition jordan_type(const RankProfile& ranks);

/// Jordan degree type from the double difference
///   s(i, p) = (r(i, p-1) - r(i, p)) - (r(i-1, p) - r(i-1, p+1)).
JordanDegreeType jordan_degree_type(const GradedAlgebraModel& model, const LinearForm& l);
JordanDegreeType jordan_degree_type(const RankProfile& ranks);

/// One string (z, l z, ..., l^{p-1} z) of a graded Jordan basis; beads are
/// coordinate vectors in A_start, A_start+1, ...
struct JordanString {
  int start = 0;
  std::vector<Vector> beads;
  std::size_t length() const noexcept { return beads.size(); }
};

/// Explicit graded Jordan basis built from kernel filtrations, independent of
/// the rank formula. Heads of length-p strings in degree i span a complement
/// of ker(l^{p-1}) + l ker(l^{p+1}) inside ker(l^p) on A_i; lengths are
/// processed longest first, degrees lowest first.
std::vector<JordanString> jordan_strings(const GradedAlgebraModel& model, const LinearForm& l);

JordanDegreeType degree_type_of(const std::vector<JordanString>& strings);

/// True when the beads form a basis of A and l^p z = 0 for every string.
bool is_jordan_basis(const GradedAlgebraModel& model, const LinearForm& l, const std::vector<JordanString>& strings);

struct LefschetzResult {
  bool weak = false;
  bool strong = false;
};

LefschetzResult lefschetz_check(const GradedAlgebraModel& model, const LinearForm& l);
LefschetzResult lefschetz_check(const RankProfile& ranks);

}  // namespace jtype

#endif
