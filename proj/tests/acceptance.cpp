// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "jtype/binomial.hpp"
#include "jtype/error.hpp"
#include "jtype/jordan.hpp"
#include "jtype/perazzo.hpp"
#include "jtype/verify.hpp"

using namespace jtype;

namespace {

const std::vector<std::pair<int, int>> conformance_params{{2, 3}, {2, 4}, {2, 5}, {3, 3}, {3, 4}};

// Collects failed sub-checks of one criterion.
struct Criterion {
  int number;
  std::string title;
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  void note(const std::string& s) { notes.push_back(s); }
};

Scalar random_scalar(Field f, std::mt19937_64& rng) {
  if (f.kind() == FieldKind::rationals) return Scalar(f, std::uniform_int_distribution<long long>(-9, 9)(rng));
  return Scalar(f, static_cast<long long>(std::uniform_int_distribution<std::uint64_t>(0, f.modulus() - 1)(rng)));
}

Polynomial random_form(const VarsPtr& vars, Side side, Field f, int t, std::size_t terms, std::mt19937_64& rng) {
  auto monos = monomials_of_degree(vars->size(), t);
  Polynomial out(vars, side, f);
  std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
  for (std::size_t i = 0; i < terms; ++i) out.add_term(monos[pick(rng)], random_scalar(f, rng));
  return out;
}

// Sparse coefficients now and then, so special forms get drawn too.
LinearForm random_linear_form(const VarsPtr& vars, Field f, std::mt19937_64& rng) {
  std::bernoulli_distribution sparse(0.3), keep(0.5);
  for (;;) {
    const bool thin = sparse(rng);
    LinearForm l = LinearForm::zero(vars, f);
    for (std::size_t v = 0; v < vars->size(); ++v)
      if (!thin || keep(rng)) l.set(v, random_scalar(f, rng));
    if (!l.is_zero()) return l;
  }
}

// Independent count of a_max: sum of min over the compressed shape of
// codimension m and socle degree d-1.
std::size_t a_max_reference(int m, int d) {
  std::size_t total = 0;
  for (int i = 0; i <= d - 1; ++i)
    total += std::min(binomial(i + m - 1, m - 1), binomial(d - 1 - i + m - 1, m - 1));
  return total;
}

void criterion_1(Criterion& c) {
  Field q = Field::rationals();
  auto g = VariableSet::generic({"x", "y"});
  std::vector<Polynomial> gens;
  for (const char* s : {"x^3", "x*y^2", "y^3"}) gens.push_back(Polynomial::parse(g, Side::ring, q, s));
  auto A = GradedAlgebraModel::from_ideal(gens, 4);
  auto l = LinearForm::parse(A.vars(), q, "x=1,y=1");
  c.expect(A.hilbert().values == std::vector<std::size_t>{1, 2, 3, 1}, "h = " + A.hilbert().to_string());
  auto p = jordan_type(A, l);
  c.expect(p == Partition({4, 2, 1}), "P = " + p.to_string());
  auto s = jordan_degree_type(A, l);
  c.expect(s == JordanDegreeType({{4, 0}, {2, 1}, {1, 2}}), "JDT = " + s.to_string());
  c.note("h " + A.hilbert().to_string() + ", P " + p.to_string() + ", JDT " + s.to_string());
}

void criterion_2(Criterion& c) {
  auto params = PerazzoParams::make(2, 3);
  VerifyOptions o;
  o.mode = VerifyMode::enumerate;
  o.threads = 0;
  o.keep_samples = false;
  auto r = verify_full_perazzo(params, Field::prime(7), o);
  const std::vector<std::string> chain{"(2^3,1^6)", "(2^4,1^4)", "(3^2,2^2,1^2)", "(4,2^3,1^2)"};
  std::vector<std::string> seen;
  for (const auto& t : r.summary.observed) seen.push_back(t.partition.to_string());
  c.expect(seen == chain, "GF(7) enumeration types differ from the four-type chain");
  std::string list;
  for (const auto& s : seen) list += (list.empty() ? "" : " ") + s;
  c.note("GF(7) enumeration: " + std::to_string(r.summary.total) + " forms, types " + list);
  for (std::size_t i = 0; i < chain.size(); ++i)
    for (std::size_t j = i + 1; j < chain.size(); ++j)
      c.expect(dominance_compare(Partition::parse(chain[i]), Partition::parse(chain[j])) == Dominance::less,
               chain[i] + " is not below " + chain[j]);

  Field q = Field::rationals();
  auto A = GradedAlgebraModel::from_dual(full_perazzo_form(params, q), q);
  auto check = [&](const char* label, const char* ell, const std::string& displayed) {
    auto l = LinearForm::parse(A.vars(), q, ell);
    auto s = jordan_degree_type(A, l);
    const bool ok = s.to_string() == displayed;
    c.expect(ok, std::string("case ") + label + " (" + ell + "): computed " + s.to_string() + ", displayed " + displayed);
    c.note(std::string("case ") + label + " JDT " + s.to_string() + (ok ? " matches" : " DIFFERS from ") +
           (ok ? "" : displayed));
  };
  check("(a)", "b1=1", "3_0,3_1,2_1^2,1_1,1_2");
  check("(a) second form", "a[1,1]=1,a[0,2]=1,b1=1", "3_0,3_1,2_1^2,1_1,1_2");
  check("(b)", "a[2,0]=1,b1=1", "4_0,2_1^3,1_1,1_2");
  check("(c) a=4", "a[2,0]=1,a[0,2]=1", "2_0,2_1^2,2_2,1_1^3,1_2");
  check("(c) a=3", "a[2,0]=1", "2_0,2_1,2_2,1_1^6");
}

void criterion_3_4_5(Criterion& c3, Criterion& c4, Criterion& c5) {
  for (auto [m, d] : conformance_params) {
    auto params = PerazzoParams::make(m, d);
    auto start = std::chrono::steady_clock::now();
    VerifyOptions o;
    o.samples = 500;
    o.seed = 1;
    o.threads = 0;
    auto r = verify_full_perazzo(params, Field::default_field(), o);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const auto tag = params.to_string();

    std::size_t literal = 0, bad = 0, per_case[3] = {0, 0, 0}, case_ii = 0, case_ii_bad = 0;
    const std::size_t parts = 2 * binomial(d + m - 2, m - 1);
    for (const auto& s : r.samples) {
      if (!s.theorem_case.literal_match) continue;
      ++literal;
      ++per_case[static_cast<int>(s.theorem_case.tag)];
      bool ok = s.computed == s.predicted.partition;
      if (s.predicted.jdt) ok = ok && s.computed_jdt == *s.predicted.jdt;
      if (!ok) ++bad;
      if (s.theorem_case.tag == CaseTag::case_ii) {
        ++case_ii;
        if (s.computed.size() != parts) ++case_ii_bad;
      }
    }
    c3.expect(bad == 0, tag + ": " + std::to_string(bad) + " literal mismatches");
    for (int k = 0; k < 3; ++k)
      c3.expect(per_case[k] >= 500, tag + ": only " + std::to_string(per_case[k]) + " literal samples of " +
                                        to_string(static_cast<CaseTag>(k)));
    c3.expect(r.summary.oracle_disagreements == 0, tag + ": string oracle disagreements");
    c3.expect(secs < 60.0, tag + ": took " + std::to_string(secs) + " s");
    char buf[200];
    std::snprintf(buf, sizeof buf, "%s: %zu literal samples (I %zu, II %zu, III %zu), %zu mismatches, %.1f s",
                  tag.c_str(), literal, per_case[0], per_case[1], per_case[2], bad, secs);
    c3.note(buf);

    c4.expect(case_ii > 0 && case_ii_bad == 0, tag + ": case II part count differs from " + std::to_string(parts));
    c4.note(tag + ": " + std::to_string(case_ii) + " case II samples with " + std::to_string(parts) + " parts");

    auto bounds = a_bounds(params);
    c5.expect(bounds.a_min == static_cast<std::size_t>(d), tag + ": a_min");
    c5.expect(bounds.a_max == a_max_reference(m, d), tag + ": a_max");
    c5.expect(r.summary.case_iii_within_bounds, tag + ": observed case III type outside bounds");
    for (const auto& s : r.samples) {
      if (s.theorem_case.tag != CaseTag::case_iii) continue;
      const std::size_t a = s.computed.count_at_least(2);
      c5.expect(s.computed.parts().front() <= 2 && a >= bounds.a_min && a <= bounds.a_max,
                tag + ": sample " + s.ell + " has type " + s.computed.to_string());
    }

    Field f = Field::default_field();
    auto F = full_perazzo_form(params, f);
    auto A = GradedAlgebraModel::from_dual(F, f);
    auto realize = [&](const Polynomial& G, std::size_t want, const char* what) {
      auto l = form_with_contraction(params, G);
      const bool ok = contract(l, F) == G && jordan_type(A, l) == case_iii_partition(params, want) &&
                      hilbert_function(restrict_to_y_block(G)).sum() == want;
      c5.expect(ok, tag + ": " + what + " does not realize a = " + std::to_string(want));
    };
    const auto& vars = F.vars();
    realize(Polynomial::term(vars, Side::dual, Monomial::variable(vars->size(), vars->y_position(m), d - 1), Scalar(f, 1)),
            bounds.a_min, "Y_m^(d-1)");
    realize(symmetric_dual_generator(vars, d - 1, f), bounds.a_max, "symmetric generator");
    c5.note(tag + ": a in [" + std::to_string(bounds.a_min) + ", " + std::to_string(bounds.a_max) + "], both ends realized");
  }
}

void criterion_6(Criterion& c) {
  const int d = 5;
  auto params = PerazzoParams::make(2, d);
  Field f = Field::default_field();
  auto F = full_perazzo_form(params, f);
  auto against = [&](const std::vector<Scalar>& a) {
    LinearForm l = LinearForm::zero(F.vars(), f);
    for (std::size_t i = 0; i < a.size(); ++i) l.set(i, a[i]);
    return hankel_hf(a, d) == hilbert_function(contract(l, F));
  };
  auto ints = [&](std::vector<long long> v) {
    std::vector<Scalar> out;
    for (auto x : v) out.emplace_back(f, x);
    return out;
  };
  c.expect(hankel_hf(ints({1, 0, 0, 0, 0}), d).values == std::vector<std::size_t>{1, 1, 1, 1, 1}, "rank 1 example");
  c.expect(hankel_hf(ints({1, 0, 0, 0, 1}), d).values == std::vector<std::size_t>{1, 2, 2, 2, 1}, "rank 2 example");
  c.expect(against(ints({1, 0, 0, 0, 0})) && against(ints({1, 0, 0, 0, 1})), "structured examples vs contraction");
  std::mt19937_64 rng(6);
  std::size_t trials = 0, agree = 0;
  while (trials < 200) {
    std::vector<Scalar> a;
    for (int i = 0; i < d; ++i) a.push_back(random_scalar(f, rng));
    if (std::all_of(a.begin(), a.end(), [](const Scalar& s) { return s.is_zero(); })) continue;
    ++trials;
    if (against(a)) ++agree;
  }
  c.expect(agree == trials, std::to_string(trials - agree) + " random vectors disagree");
  c.note(std::to_string(agree) + "/" + std::to_string(trials) + " random a-vectors agree");
}

void criterion_7(Criterion& c) {
  for (auto [m, d] : conformance_params) {
    auto params = PerazzoParams::make(m, d);
    auto h = hilbert_function(full_perazzo_form(params, Field::rationals()));
    c.expect(perazzo_hf(params) == h, params.to_string() + ": closed form " + perazzo_hf(params).to_string() +
                                          " vs catalecticant " + h.to_string());
    c.expect(perazzo_dim(params) == h.sum() && h.sum() == 2 * binomial(d + m - 1, m), params.to_string() + ": dim");
    c.note(params.to_string() + ": h " + h.to_string() + ", dim " + std::to_string(h.sum()));
  }
  c.expect(perazzo_hf(PerazzoParams::make(3, 4)).values == std::vector<std::size_t>{1, 13, 12, 13, 1},
           "(3,4) non-unimodal shape");
}

void criterion_8(Criterion& c) {
  const std::size_t trials = 1000;
  Field f = Field::prime(101);
  std::mt19937_64 rng(8);

  {
    auto vars = VariableSet::generic({"x", "y", "z"});
    std::size_t bad = 0;
    for (std::size_t t = 0; t < trials; ++t) {
      const int a = static_cast<int>(rng() % 3), b = static_cast<int>(rng() % 3);
      auto g1 = random_form(vars, Side::ring, f, a, 3, rng);
      auto g2 = random_form(vars, Side::ring, f, b, 3, rng);
      auto F = random_form(vars, Side::dual, f, a + b + static_cast<int>(rng() % 3), 6, rng);
      if (!(contract(g1 * g2, F) == contract(g1, contract(g2, F)))) ++bad;
    }
    c.expect(bad == 0, "module action law failed " + std::to_string(bad) + " times");
  }

  std::size_t monotone_bad = 0, oracle_bad = 0, bead_bad = 0, sum_bad = 0;
  auto invariants = [&](const GradedAlgebraModel& A, const LinearForm& l) {
    auto r = rank_profile(A, l);
    const int d = A.socle_degree();
    for (int i = 0; i <= d; ++i)
      for (int k = 0; k <= d; ++k)
        if (r(i, k + 1) > r(i, k)) {
          ++monotone_bad;
          i = d + 1;
          break;
        }
    auto s = jordan_degree_type(r);
    if (!(degree_type_of(jordan_strings(A, l)) == s)) ++oracle_bad;
    if (s.bead_counts(d) != A.hilbert().values) ++bead_bad;
    if (jordan_type(r).total() != A.dimension()) ++sum_bad;
    return r;
  };
  {
    auto vars = VariableSet::generic({"x", "y", "z"});
    for (std::size_t t = 0; t < trials; ++t) {
      Polynomial F(vars, Side::dual, f);
      while (F.term_count() == 0) F = random_form(vars, Side::dual, f, 2 + static_cast<int>(rng() % 3), 1 + rng() % 6, rng);
      auto A = GradedAlgebraModel::from_dual(F, f);
      invariants(A, random_linear_form(vars, f, rng));
    }
  }

  std::size_t strong_seen = 0;
  {
    std::vector<std::pair<PerazzoParams, GradedAlgebraModel>> models;
    for (auto [m, d] : std::vector<std::pair<int, int>>{{2, 3}, {2, 4}, {3, 3}, {2, 5}}) {
      auto params = PerazzoParams::make(m, d);
      models.emplace_back(params, GradedAlgebraModel::from_dual(full_perazzo_form(params, f), f));
    }
    const SampleOrigin streams[] = {SampleOrigin::uniform, SampleOrigin::case_i, SampleOrigin::case_ii,
                                    SampleOrigin::case_iii};
    for (std::size_t t = 0; t < trials; ++t) {
      auto& [params, A] = models[t % models.size()];
      auto l = draw_linear_form(A.vars(), params, f, streams[(t / models.size()) % 4], 8, t);
      auto r = invariants(A, l);
      if (lefschetz_check(r).strong) ++strong_seen;
    }
  }

  std::size_t strong_without_weak = 0, strong_count = 0;
  {
    for (std::size_t t = 0; t < trials; ++t) {
      const std::size_t n = 2 + rng() % 2;
      std::vector<std::string> names{"x", "y", "z"};
      names.resize(n);
      auto vars = VariableSet::generic(names);
      std::vector<Polynomial> gens;
      int bound = 1;
      for (std::size_t v = 0; v < n; ++v) {
        const int e = 1 + static_cast<int>(rng() % 4);
        bound += e - 1;
        gens.push_back(Polynomial::term(vars, Side::ring, Monomial::variable(n, v, e), Scalar(f, 1)));
      }
      auto A = GradedAlgebraModel::from_ideal(gens, bound + 1);
      auto r = invariants(A, random_linear_form(vars, f, rng));
      auto lf = lefschetz_check(r);
      if (lf.strong) ++strong_count;
      if (lf.strong && !lf.weak) ++strong_without_weak;
    }
  }

  c.expect(monotone_bad == 0, "rank profile not monotone " + std::to_string(monotone_bad) + " times");
  c.expect(oracle_bad == 0, "JDT differs from string extraction " + std::to_string(oracle_bad) + " times");
  c.expect(bead_bad == 0, "bead conservation failed " + std::to_string(bead_bad) + " times");
  c.expect(sum_bad == 0, "partition sum differs from dim A " + std::to_string(sum_bad) + " times");
  c.expect(strong_seen == 0, "strong Lefschetz held on a full Perazzo model " + std::to_string(strong_seen) + " times");
  c.expect(strong_without_weak == 0, "strong without weak " + std::to_string(strong_without_weak) + " times");
  c.note(std::to_string(trials) + " trials per suite; " + std::to_string(strong_count) +
         " strong Lefschetz forms on complete intersections, all weak");
}

}  // namespace

int main() {
  std::vector<Criterion> all;
  for (int i = 1; i <= 8; ++i) all.push_back({i, "", {}, {}});
  all[0].title = "ideal (x^3, xy^2, y^3), l = x + y";
  all[1].title = "F_toy: four Jordan types, chain order, displayed degree types";
  all[2].title = "classification conformance, 500 literal samples per case";
  all[3].title = "case II part count 2(n+1)";
  all[4].title = "a bounds and their realization";
  all[5].title = "Hankel rank Hilbert function, m = 2, d = 5";
  all[6].title = "closed-form Hilbert function and dimension";
  all[7].title = "property suites";

  auto guard = [](Criterion& c, const std::function<void()>& fn) {
    try {
      fn();
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
  };
  guard(all[0], [&] { criterion_1(all[0]); });
  guard(all[1], [&] { criterion_2(all[1]); });
  guard(all[2], [&] { criterion_3_4_5(all[2], all[3], all[4]); });
  guard(all[5], [&] { criterion_6(all[5]); });
  guard(all[6], [&] { criterion_7(all[6]); });
  guard(all[7], [&] { criterion_8(all[7]); });

  int failed = 0;
  for (const auto& c : all) {
    const bool ok = c.failures.empty();
    failed += ok ? 0 : 1;
    std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", c.number, c.title.c_str());
    for (const auto& n : c.notes) std::printf("    %s\n", n.c_str());
    for (const auto& f : c.failures) std::printf("    failed: %s\n", f.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(all.size()) - failed, all.size());
  return failed == 0 ? 0 : 1;
}
