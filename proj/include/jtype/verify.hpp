#ifndef JTYPE_VERIFY_HPP
#define JTYPE_VERIFY_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jtype/jordan.hpp"
#include "jtype/perazzo.hpp"

namespace jtype {

enum class VerifyMode { sample, enumerate };

const char* to_string(VerifyMode mode);
VerifyMode parse_verify_mode(const std::string& text);

struct VerifyOptions {
  std::size_t samples = 500;  // per stream in sample mode
  std::uint64_t seed = 1;
  VerifyMode mode = VerifyMode::sample;
  unsigned threads = 1;  // 0 picks the hardware concurrency
  std::uint64_t enumeration_cap = 1000000;
  bool string_oracle = true;
  bool keep_samples = true;
};

/// Sampling streams, in report order. Each structured stream rejects draws
/// until the coefficient pattern of its case holds.
enum class SampleOrigin { uniform, case_i, case_i_nonliteral, case_ii, case_iii, enumeration };

const char* to_string(SampleOrigin origin);

struct SampleRecord {
  std::size_t index = 0;
  SampleOrigin origin = SampleOrigin::uniform;
  std::string ell;
  TheoremCase theorem_case;
  PredictedJordan predicted;
  Partition computed;
  JordanDegreeType computed_jdt;
  /// Degree type of the explicit string basis equals the rank-formula one.
  bool oracle_agrees = true;
  /// l^d is nonzero in A_F, i.e. a string of length d+1 exists.
  bool top_power_nonzero = false;
  LefschetzResult lefschetz;
  bool match = false;
};

struct ObservedType {
  Partition partition;
  std::size_t count = 0;
};

struct VerifySummary {
  std::size_t total = 0;
  std::size_t case_counts[3] = {0, 0, 0};
  std::size_t literal = 0;
  std::size_t mismatches = 0;  // literal samples only
  std::size_t non_literal = 0;
  std::size_t non_literal_matching = 0;
  std::size_t oracle_disagreements = 0;
  /// Samples with some b_j != 0 whose type is not the case II partition when
  /// l^d != 0 and the case I partition otherwise.
  std::size_t top_power_rule_violations = 0;
  std::vector<std::size_t> mismatch_indices;
  std::vector<ObservedType> observed;  // sorted so dominance increases
  std::optional<Partition> maximum;    // dominates every observed type
  bool case_iii_within_bounds = true;
  bool chain_consistent = true;
  bool maximum_is_case_ii = false;
  bool maximum_part_count = false;
  bool strong_lefschetz_never = true;

  bool passed() const;
};

struct VerificationReport {
  PerazzoParams params;
  Field field = Field::default_field();
  VerifyOptions options;
  std::size_t candidate_count = 0;
  std::vector<SampleRecord> samples;  // empty unless options.keep_samples
  VerifySummary summary;
};

/// Classify, predict and compute the Jordan type of every sampled or
/// enumerated l on the canonical full Perazzo form. Sample i is drawn from
/// its own generator seeded by (seed, stream, i), so the report does not
/// depend on the thread count.
VerificationReport verify_full_perazzo(const PerazzoParams& params, Field field, const VerifyOptions& options);

/// Evaluate a single linear form the way the harness does.
SampleRecord evaluate_linear_form(const GradedAlgebraModel& model, const PerazzoParams& params, const LinearForm& l,
                                  bool string_oracle = true);

/// Draw sample i of a stream; exposed for tests.
LinearForm draw_linear_form(const VarsPtr& vars, const PerazzoParams& params, Field field, SampleOrigin origin,
                            std::uint64_t seed, std::size_t i);

std::string report_to_json(const VerificationReport& report, int indent = 2);

}  // namespace jtype

#endif
