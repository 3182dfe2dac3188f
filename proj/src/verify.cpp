#include "jtype/verify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <random>
#include <thread>

#include "jtype/error.hpp"
#include "serialize.hpp"

namespace jtype {

namespace {

constexpr SampleOrigin sampled_streams[] = {SampleOrigin::uniform, SampleOrigin::case_i, SampleOrigin::case_i_nonliteral,
                                            SampleOrigin::case_ii, SampleOrigin::case_iii};

class Draw {
 public:
  Draw(Field field, std::uint64_t seed, SampleOrigin origin, std::size_t i) : field_(field) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(origin), static_cast<std::uint32_t>(i),
                      static_cast<std::uint32_t>(static_cast<std::uint64_t>(i) >> 32)};
    rng_.seed(seq);
  }

  // Rationals draw integers in [-50, 50].
  Scalar any() {
    if (field_.kind() == FieldKind::rationals) {
      std::uniform_int_distribution<long long> dist(-50, 50);
      return Scalar(field_, dist(rng_));
    }
    std::uniform_int_distribution<std::uint64_t> dist(0, field_.modulus() - 1);
    return Scalar(field_, static_cast<long long>(dist(rng_)));
  }

  Scalar nonzero() {
    for (;;) {
      Scalar s = any();
      if (!s.is_zero()) return s;
    }
  }

  int index(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }
  bool coin() { return std::uniform_int_distribution<int>(0, 1)(rng_) == 1; }

 private:
  Field field_;
  std::mt19937_64 rng_;
};

std::size_t pure_power(const VariableSet& vars, const PerazzoParams& params, int k) {
  std::vector<int> tuple(static_cast<std::size_t>(params.m), 0);
  tuple[static_cast<std::size_t>(k - 1)] = params.d - 1;
  return *vars.x_position(tuple);
}

bool is_nonliteral_case_i(const LinearForm& l, const PerazzoParams& params) {
  auto c = classify_linear_form(l, params);
  return c.tag == CaseTag::case_i && !c.literal_match;
}

LinearForm draw_once(const VarsPtr& vars, const PerazzoParams& params, Field field, SampleOrigin origin, Draw& draw) {
  const std::size_t nx = vars->x_count();
  LinearForm l = LinearForm::zero(vars, field);
  Scalar zero(field);
  switch (origin) {
    case SampleOrigin::uniform:
    case SampleOrigin::enumeration:
      for (std::size_t v = 0; v < vars->size(); ++v) l.set(v, draw.any());
      break;
    case SampleOrigin::case_i:
      if (draw.coin()) {
        for (int j = 1; j <= params.m; ++j) l.set(vars->y_position(j), draw.any());
      } else {
        int k = 1 + draw.index(params.m);
        for (std::size_t i = 0; i < nx; ++i) l.set(i, draw.any());
        l.set(pure_power(*vars, params, k), zero);
        l.set(vars->y_position(k), draw.nonzero());
      }
      break;
    case SampleOrigin::case_i_nonliteral:
      for (int j = 1; j <= params.m; ++j)
        if (draw.coin()) l.set(vars->y_position(j), draw.nonzero());
      for (std::size_t i = 0; i < nx; ++i) l.set(i, draw.any());
      for (int j = 1; j <= params.m; ++j)
        if (!l.b(j).is_zero()) l.set(pure_power(*vars, params, j), zero);
      break;
    case SampleOrigin::case_ii: {
      int k = 1 + draw.index(params.m);
      for (std::size_t v = 0; v < vars->size(); ++v) l.set(v, draw.any());
      l.set(pure_power(*vars, params, k), draw.nonzero());
      l.set(vars->y_position(k), draw.nonzero());
      break;
    }
    case SampleOrigin::case_iii:
      for (std::size_t i = 0; i < nx; ++i) l.set(i, draw.any());
      break;
  }
  return l;
}

bool fits_pattern(const LinearForm& l, const PerazzoParams& params, SampleOrigin origin) {
  if (l.is_zero()) return false;
  switch (origin) {
    case SampleOrigin::case_i: return classify_linear_form(l, params).tag == CaseTag::case_i;
    case SampleOrigin::case_i_nonliteral: return is_nonliteral_case_i(l, params);
    default: return true;
  }
}

// Representatives of the projective space of l, first nonzero coefficient 1.
std::uint64_t projective_count(std::uint64_t p, std::size_t n, std::uint64_t cap) {
  std::uint64_t total = 0, power = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total += power;
    if (total > cap) return cap + 1;
    if (i + 1 < n) {
      if (power > (cap + 1) / p + 1) return cap + 1;
      power *= p;
    }
  }
  return total;
}

LinearForm enumerated_form(const VarsPtr& vars, Field field, std::uint64_t index) {
  const std::uint64_t p = field.modulus();
  const std::size_t n = vars->size();
  LinearForm l = LinearForm::zero(vars, field);
  // Leading position lead leaves p^(n-1-lead) completions; later leads first.
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t lead = n - 1 - k;
    std::uint64_t block = 1;
    for (std::size_t j = lead + 1; j < n; ++j) block *= p;
    if (index < block) {
      l.set(lead, Scalar(field, 1));
      for (std::size_t j = n; j-- > lead + 1;) {
        l.set(j, Scalar(field, static_cast<long long>(index % p)));
        index /= p;
      }
      return l;
    }
    index -= block;
  }
  fail(Errc::internal, "enumeration index out of range");
}

bool is_two_one(const Partition& p) { return p.parts().empty() || p.parts().front() <= 2; }

}  // namespace

const char* to_string(VerifyMode mode) { return mode == VerifyMode::sample ? "sample" : "enumerate"; }

VerifyMode parse_verify_mode(const std::string& text) {
  if (text == "sample") return VerifyMode::sample;
  if (text == "enumerate") return VerifyMode::enumerate;
  fail(Errc::parse_error, "mode: expected 'sample' or 'enumerate', got '" + text + "'");
}

const char* to_string(SampleOrigin origin) {
  switch (origin) {
    case SampleOrigin::uniform: return "uniform";
    case SampleOrigin::case_i: return "case_i";
    case SampleOrigin::case_i_nonliteral: return "case_i_nonliteral";
    case SampleOrigin::case_ii: return "case_ii";
    case SampleOrigin::case_iii: return "case_iii";
    case SampleOrigin::enumeration: return "enumeration";
  }
  return "?";
}

LinearForm draw_linear_form(const VarsPtr& vars, const PerazzoParams& params, Field field, SampleOrigin origin,
                            std::uint64_t seed, std::size_t i) {
  Draw draw(field, seed, origin, i);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    LinearForm l = draw_once(vars, params, field, origin, draw);
    if (fits_pattern(l, params, origin)) return l;
  }
  fail(Errc::internal, std::string("sampler could not satisfy pattern ") + to_string(origin));
}

SampleRecord evaluate_linear_form(const GradedAlgebraModel& model, const PerazzoParams& params, const LinearForm& l,
                                  bool string_oracle) {
  SampleRecord rec;
  rec.ell = l.to_string();
  rec.theorem_case = classify_linear_form(l, params);
  rec.predicted = predicted_jordan(rec.theorem_case, params, l, model.field());
  auto ranks = rank_profile(model, l);
  rec.computed = jordan_type(ranks);
  rec.computed_jdt = jordan_degree_type(ranks);
  if (string_oracle) rec.oracle_agrees = degree_type_of(jordan_strings(model, l)) == rec.computed_jdt;
  rec.top_power_nonzero = ranks(0, params.d) > 0;
  rec.lefschetz = lefschetz_check(ranks);
  rec.match = rec.computed == rec.predicted.partition && (!rec.predicted.jdt || *rec.predicted.jdt == rec.computed_jdt);
  return rec;
}

bool VerifySummary::passed() const {
  return mismatches == 0 && oracle_disagreements == 0 && case_iii_within_bounds && chain_consistent &&
         maximum_is_case_ii && maximum_part_count && strong_lefschetz_never;
}

VerificationReport verify_full_perazzo(const PerazzoParams& params, Field field, const VerifyOptions& options) {
  if (!field.admits_degree(params.d))
    fail(Errc::characteristic, "characteristic " + std::to_string(field.characteristic()) + " must exceed d=" +
                                   std::to_string(params.d));
  const Polynomial F = full_perazzo_form(params, field);
  const VarsPtr vars = F.vars();
  const auto model = GradedAlgebraModel::from_dual(F, field);

  VerificationReport report;
  report.params = params;
  report.field = field;
  report.options = options;

  std::vector<std::pair<SampleOrigin, std::size_t>> jobs;
  if (options.mode == VerifyMode::enumerate) {
    if (field.kind() == FieldKind::rationals)
      fail(Errc::invalid_argument, "mode: enumeration needs a finite field");
    std::uint64_t count = projective_count(field.modulus(), vars->size(), options.enumeration_cap);
    if (count > options.enumeration_cap)
      fail(Errc::out_of_range, "mode: more than " + std::to_string(options.enumeration_cap) +
                                   " linear forms to enumerate; use sampling");
    for (std::uint64_t i = 0; i < count; ++i) jobs.emplace_back(SampleOrigin::enumeration, i);
  } else {
    if (options.samples == 0) fail(Errc::invalid_argument, "samples: must be positive");
    for (auto origin : sampled_streams)
      for (std::size_t i = 0; i < options.samples; ++i) jobs.emplace_back(origin, i);
  }
  report.candidate_count = jobs.size();

  std::vector<std::optional<SampleRecord>> results(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t j; (j = next.fetch_add(1)) < jobs.size();) {
      try {
        auto [origin, i] = jobs[j];
        LinearForm l = origin == SampleOrigin::enumeration ? enumerated_form(vars, field, i)
                                                           : draw_linear_form(vars, params, field, origin, options.seed, i);
        SampleRecord rec = evaluate_linear_form(model, params, l, options.string_oracle);
        rec.index = j;
        rec.origin = origin;
        results[j] = std::move(rec);
      } catch (...) {
        errors[j] = std::current_exception();
      }
    }
  };
  unsigned threads = options.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.threads;
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, jobs.size()));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  auto& s = report.summary;
  const auto bounds = a_bounds(params);
  const Partition case_i = case_i_partition(params);
  const Partition case_ii = case_ii_partition(params);
  for (auto& slot : results) {
    SampleRecord& rec = *slot;
    ++s.total;
    ++s.case_counts[static_cast<int>(rec.theorem_case.tag)];
    if (rec.theorem_case.literal_match) {
      ++s.literal;
      if (!rec.match) {
        ++s.mismatches;
        s.mismatch_indices.push_back(rec.index);
      }
    } else {
      ++s.non_literal;
      if (rec.match) ++s.non_literal_matching;
    }
    if (!rec.oracle_agrees) ++s.oracle_disagreements;
    if (rec.theorem_case.tag != CaseTag::case_iii &&
        rec.computed != (rec.top_power_nonzero ? case_ii : case_i))
      ++s.top_power_rule_violations;
    if (rec.lefschetz.strong) s.strong_lefschetz_never = false;
    if (rec.theorem_case.tag == CaseTag::case_iii) {
      std::size_t a = rec.computed.count_at_least(2);
      if (!is_two_one(rec.computed) || a < bounds.a_min || a > bounds.a_max) s.case_iii_within_bounds = false;
    }
    auto it = std::find_if(s.observed.begin(), s.observed.end(),
                           [&](const ObservedType& o) { return o.partition == rec.computed; });
    if (it == s.observed.end())
      s.observed.push_back({rec.computed, 1});
    else
      ++it->count;
  }
  // Lexicographic order extends dominance.
  std::sort(s.observed.begin(), s.observed.end(),
            [](const ObservedType& x, const ObservedType& y) { return x.partition.parts() < y.partition.parts(); });
  for (std::size_t i = 0; i < s.observed.size(); ++i) {
    if (!chain_position(s.observed[i].partition, params).in_chain) s.chain_consistent = false;
    if (i > 0 && dominance_compare(s.observed[i - 1].partition, s.observed[i].partition) != Dominance::less)
      s.chain_consistent = false;
  }
  if (!s.observed.empty()) {
    const Partition& top = s.observed.back().partition;
    bool dominates_all = std::all_of(s.observed.begin(), s.observed.end(), [&](const ObservedType& o) {
      auto c = dominance_compare(top, o.partition);
      return c == Dominance::greater || c == Dominance::equal;
    });
    if (dominates_all) s.maximum = top;
  }
  s.maximum_is_case_ii = s.maximum && *s.maximum == case_ii;
  s.maximum_part_count = s.maximum && s.maximum->size() == generic_part_count(params);

  if (options.keep_samples) {
    report.samples.reserve(results.size());
    for (auto& slot : results) report.samples.push_back(std::move(*slot));
  }
  return report;
}

std::string report_to_json(const VerificationReport& report, int indent) {
  const auto& s = report.summary;
  Json per_case{{"CASE_I", s.case_counts[0]}, {"CASE_II", s.case_counts[1]}, {"CASE_III", s.case_counts[2]}};
  Json observed = Json::array();
  for (const auto& o : s.observed) {
    Json j = to_json(o.partition);
    j["count"] = o.count;
    j["chain"] = to_json(chain_position(o.partition, report.params));
    observed.push_back(j);
  }
  Json summary{{"total", s.total},
               {"per_case", per_case},
               {"literal", s.literal},
               {"mismatches", s.mismatches},
               {"mismatch_indices", s.mismatch_indices},
               {"non_literal", s.non_literal},
               {"non_literal_matching_prediction", s.non_literal_matching},
               {"oracle_disagreements", s.oracle_disagreements},
               {"top_power_rule_violations", s.top_power_rule_violations},
               {"distinct_types", observed.size()},
               {"observed_types", observed}};
  summary["maximum_observed"] = s.maximum ? to_json(*s.maximum) : Json(nullptr);
  summary["checks"] = Json{{"case_iii_within_bounds", s.case_iii_within_bounds},
                           {"chain_consistent", s.chain_consistent},
                           {"maximum_is_case_ii", s.maximum_is_case_ii},
                           {"maximum_part_count", s.maximum_part_count},
                           {"strong_lefschetz_never", s.strong_lefschetz_never}};
  summary["passed"] = s.passed();

  Json samples = Json::array();
  for (const auto& rec : report.samples) {
    Json j{{"index", rec.index}, {"origin", to_string(rec.origin)}, {"ell", rec.ell}};
    j.update(to_json(rec.theorem_case));
    j["predicted"] = to_json(rec.predicted);
    j["computed"] = Json{{"partition", to_json(rec.computed)}, {"jdt", to_json(rec.computed_jdt)}};
    j["oracle_agrees"] = rec.oracle_agrees;
    j["top_power_nonzero"] = rec.top_power_nonzero;
    j["lefschetz"] = to_json(rec.lefschetz);
    j["match"] = rec.match;
    samples.push_back(std::move(j));
  }

  Json out{{"version", record_version},
           {"kind", "verification_report"},
           {"params", to_json(report.params)},
           {"field", report.field.to_string()},
           {"mode", to_string(report.options.mode)},
           {"seed", report.options.seed},
           {"samples_per_stream", report.options.mode == VerifyMode::sample ? Json(report.options.samples) : Json(nullptr)},
           {"candidates", report.candidate_count},
           {"hilbert", to_json(perazzo_hf(report.params))},
           {"predictions", Json{{"case_i", Json{{"partition", to_json(case_i_partition(report.params))},
                                                {"jdt", to_json(case_i_degree_type(report.params))}}},
                                {"case_ii", Json{{"partition", to_json(case_ii_partition(report.params))},
                                                 {"jdt", to_json(case_ii_degree_type(report.params))}}},
                                {"a_min", a_bounds(report.params).a_min},
                                {"a_max", a_bounds(report.params).a_max},
                                {"generic_part_count", generic_part_count(report.params)}}},
           {"summary", summary},
           {"samples", samples}};
  return out.dump(indent);
}

}  // namespace jtype
