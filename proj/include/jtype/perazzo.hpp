#ifndef JTYPE_PERAZZO_HPP
#define JTYPE_PERAZZO_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "jtype/apolar.hpp"
#include "jtype/partition.hpp"
#include "jtype/poly.hpp"

namespace jtype {

/// Full Perazzo family: m >= 2 Y-variables, degree d >= 3.
struct PerazzoParams {
  int m = 2;
  int d = 3;

  /// Validates m >= 2, d >= 3.
  static PerazzoParams make(int m, int d);
  /// Accepts "m=2,d=3".
  static PerazzoParams parse(const std::string& text);

  /// Number of X-variables, C(d+m-2, m-1).
  std::size_t n_plus_1() const;
  std::string to_string() const;

  friend bool operator==(const PerazzoParams&, const PerazzoParams&) = default;
};

/// F = sum over |i| = d-1 of X_i * Y^i, all coefficients 1.
Polynomial full_perazzo_form(const PerazzoParams& params, Field field);

/// Closed-form Hilbert function C(i+m-1, m-1) + C(d-i+m-1, m-1) for
/// 1 <= i <= d/2, completed by symmetry.
HVector perazzo_hf(const PerazzoParams& params);
/// 2 C(d+m-1, m)
std::size_t perazzo_dim(const PerazzoParams& params);

enum class CaseTag { case_i, case_ii, case_iii };

const char* to_string(CaseTag tag);

struct TheoremCase {
  CaseTag tag = CaseTag::case_i;
  std::optional<int> witness;  // k with b_k != 0 and a_{(d-1)e_k} != 0 (case II)
  bool literal_match = false;
};

/// Case III when every b vanishes; case II when some k has both b_k and the
/// pure-power coefficient a_{(d-1)e_k} nonzero; case I otherwise.
TheoremCase classify_linear_form(const LinearForm& l, const PerazzoParams& params);

struct PredictedJordan {
  Partition partition;
  std::optional<JordanDegreeType> jdt;  // cases I and II
  std::optional<std::size_t> a;         // case III: dim A_{l o F}
};

Partition case_i_partition(const PerazzoParams& params);
Partition case_ii_partition(const PerazzoParams& params);
JordanDegreeType case_i_degree_type(const PerazzoParams& params);
JordanDegreeType case_ii_degree_type(const PerazzoParams& params);
/// (2^a, 1^b) with 2a + b = dim A_F.
Partition case_iii_partition(const PerazzoParams& params, std::size_t a);

PredictedJordan predicted_jordan(const TheoremCase& theorem_case, const PerazzoParams& params, const LinearForm& l,
                                 Field field);

struct ABounds {
  std::size_t a_min = 0;
  std::size_t a_max = 0;
};

ABounds a_bounds(const PerazzoParams& params);

/// 2 (n+1)
std::size_t generic_part_count(const PerazzoParams& params);

/// m = 2 only. x_coefficients are a_{d-1,0}, a_{d-2,1}, ..., a_{0,d-1}; the
/// h-vector of A_{l o F} from the rank of their Hankel matrix.
HVector hankel_hf(const std::vector<Scalar>& x_coefficients, int d);

/// Divided-power form of the complete symmetric polynomial,
/// sum of i_1!...i_m! Y^i over |i| = t, in generic variables y1..ym.
Polynomial symmetric_dual_generator(int m, int t, Field field);
/// Same, placed in the y-block of a Perazzo variable set.
Polynomial symmetric_dual_generator(const VarsPtr& vars, int t, Field field);

/// The x-only linear form l with l o F = G for the canonical full Perazzo F;
/// G must be a degree d-1 form in the Y-variables of F's variable set.
LinearForm form_with_contraction(const PerazzoParams& params, const Polynomial& G);

/// Copy of a dual polynomial supported on the Y-variables into generic
/// variables y1..ym.
Polynomial restrict_to_y_block(const Polynomial& G);

/// Where a partition of dim A_F sits in the chain
///   (2^a_min, 1^..) < ... < (2^a_max, 1^..) < case I < case II.
struct ChainPosition {
  bool in_chain = false;
  std::optional<CaseTag> tag;
  std::optional<std::size_t> a;  // for case III members
};

ChainPosition chain_position(const Partition& p, const PerazzoParams& params);

}  // namespace jtype

#endif
