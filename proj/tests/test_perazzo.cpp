#include <doctest.h>

#include <functional>

#include "helpers.hpp"
#include "jtype/binomial.hpp"
#include "jtype/error.hpp"
#include "jtype/jordan.hpp"

using namespace jtype;
using namespace testing_support;

namespace {

Partition P(std::vector<std::size_t> parts) { return Partition(std::move(parts)); }
HVector hv(std::vector<std::size_t> v) { return HVector{std::move(v)}; }

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::internal;
}

const std::vector<std::pair<int, int>> desk_params{{2, 3}, {2, 4}, {2, 5}, {3, 3}, {3, 4}, {4, 3}, {2, 6}};

std::vector<Scalar> ints(Field f, std::vector<long long> v) {
  std::vector<Scalar> out;
  for (auto x : v) out.emplace_back(f, x);
  return out;
}

}  // namespace

TEST_CASE("parameters") {
  auto p = PerazzoParams::parse("m=3, d=4");
  CHECK(p.m == 3);
  CHECK(p.d == 4);
  CHECK(p.n_plus_1() == 10);
  CHECK(p.to_string() == "m=3,d=4");
  CHECK(code_of([] { PerazzoParams::make(1, 3); }) == Errc::invalid_argument);
  CHECK(code_of([] { PerazzoParams::make(2, 2); }) == Errc::invalid_argument);
  CHECK(code_of([] { PerazzoParams::parse("m=2"); }) == Errc::parse_error);
  CHECK(code_of([] { PerazzoParams::parse("m=2,d=x"); }) == Errc::parse_error);
  CHECK(code_of([] { PerazzoParams::parse("m=2,d=3,k=1"); }) == Errc::parse_error);
}

TEST_CASE("full Perazzo form examples") {
  CHECK(full_perazzo_form(PerazzoParams::make(2, 3), Field::rationals()).to_string() ==
        "X[2,0]*Y1^2 + X[1,1]*Y1*Y2 + X[0,2]*Y2^2");
  auto F25 = full_perazzo_form(PerazzoParams::make(2, 5), Field::rationals());
  CHECK(F25.term_count() == 5);
  CHECK(F25.vars()->x_count() == 5);
  CHECK(full_perazzo_form(PerazzoParams::make(3, 3), Field::rationals()).term_count() == 6);
}

TEST_CASE("closed-form Hilbert function and dimension") {
  CHECK(perazzo_hf(PerazzoParams::make(2, 3)) == hv({1, 5, 5, 1}));
  CHECK(perazzo_dim(PerazzoParams::make(2, 3)) == 12);
  CHECK(perazzo_hf(PerazzoParams::make(3, 4)) == hv({1, 13, 12, 13, 1}));
  CHECK(perazzo_dim(PerazzoParams::make(3, 4)) == 40);
  CHECK(perazzo_hf(PerazzoParams::make(2, 4)) == hv({1, 6, 6, 6, 1}));
  CHECK(perazzo_dim(PerazzoParams::make(2, 4)) == 20);
  for (auto [m, d] : desk_params) {
    auto params = PerazzoParams::make(m, d);
    auto h = hilbert_function(full_perazzo_form(params, Field::default_field()));
    CHECK(perazzo_hf(params) == h);
    CHECK(perazzo_dim(params) == h.sum());
    // d = 3 special shape (1, n+m+1, n+m+1, 1)
    if (d == 3) CHECK(h[1] == params.n_plus_1() + static_cast<std::size_t>(m));
  }
}

TEST_CASE("classification examples") {
  auto T = f_toy();
  auto v = T.vars();
  Field q = Field::rationals();
  auto params = PerazzoParams::make(2, 3);
  auto c = classify_linear_form(LinearForm::parse(v, q, "b1=1,b2=1"), params);
  CHECK(c.tag == CaseTag::case_i);
  CHECK(c.literal_match);
  c = classify_linear_form(LinearForm::parse(v, q, "a[2,0]=1,b1=1"), params);
  CHECK(c.tag == CaseTag::case_ii);
  CHECK(c.witness == std::optional<int>(1));
  CHECK(c.literal_match);
  c = classify_linear_form(LinearForm::parse(v, q, "a[1,1]=1,b1=1,b2=1"), params);
  CHECK(c.tag == CaseTag::case_i);
  CHECK_FALSE(c.literal_match);
  c = classify_linear_form(LinearForm::parse(v, q, "a[1,1]=3,a[0,2]=1,b1=2"), params);
  CHECK(c.tag == CaseTag::case_i);
  CHECK(c.literal_match);
  c = classify_linear_form(LinearForm::parse(v, q, "a[2,0]=1,a[0,2]=1"), params);
  CHECK(c.tag == CaseTag::case_iii);
  CHECK(c.literal_match);
  CHECK(code_of([&] { classify_linear_form(LinearForm::zero(v, q), params); }) == Errc::zero_form);
  CHECK(std::string(to_string(CaseTag::case_ii)) == "CASE_II");
}

TEST_CASE("prediction examples") {
  auto params = PerazzoParams::make(2, 3);
  Field q = Field::rationals();
  auto v = f_toy().vars();
  auto predict = [&](const char* text) {
    auto l = LinearForm::parse(v, q, text);
    return predicted_jordan(classify_linear_form(l, params), params, l, q);
  };
  auto one = predict("b1=1");
  CHECK(one.partition == P({3, 3, 2, 2, 1, 1}));
  CHECK(one.jdt->to_string() == "3_0,3_1,2_1^2,1_1,1_2");
  auto two = predict("a[2,0]=1,b1=1");
  CHECK(two.partition == P({4, 2, 2, 2, 1, 1}));
  CHECK(two.jdt->to_string() == "4_0,2_1^3,1_1,1_2");
  auto three = predict("a[2,0]=1,a[0,2]=1");
  CHECK(three.a == std::optional<std::size_t>(4));
  CHECK(three.partition == P({2, 2, 2, 2, 1, 1, 1, 1}));
  CHECK(!three.jdt.has_value());
  CHECK(predict("a[2,0]=1").partition.to_string() == "(2^3,1^6)");
}

TEST_CASE("prediction invariants") {
  for (auto [m, d] : desk_params) {
    auto params = PerazzoParams::make(m, d);
    auto h = perazzo_hf(params);
    auto one = case_i_partition(params), two = case_ii_partition(params);
    CHECK(one.total() == perazzo_dim(params));
    CHECK(two.total() == 2 * binomial(m + d - 1, m));
    CHECK(case_i_degree_type(params).partition() == one);
    CHECK(case_ii_degree_type(params).partition() == two);
    CHECK(case_i_degree_type(params).bead_counts(d) == h.values);
    CHECK(case_ii_degree_type(params).bead_counts(d) == h.values);
    CHECK(dominance_compare(two, one) == Dominance::greater);
    auto bounds = a_bounds(params);
    for (std::size_t a = bounds.a_min; a <= bounds.a_max; ++a) {
      auto p = case_iii_partition(params, a);
      CHECK(p.total() == perazzo_dim(params));
      CHECK(p.parts().front() <= 2);
      CHECK(dominance_compare(one, p) == Dominance::greater);
      if (a > bounds.a_min) CHECK(dominance_compare(p, case_iii_partition(params, a - 1)) == Dominance::greater);
      CHECK(chain_position(p, params).tag == std::optional<CaseTag>(CaseTag::case_iii));
    }
    CHECK(two.size() == generic_part_count(params));
    CHECK(chain_position(one, params).tag == std::optional<CaseTag>(CaseTag::case_i));
    CHECK(chain_position(two, params).tag == std::optional<CaseTag>(CaseTag::case_ii));
  }
  CHECK(!chain_position(P({5, 1, 1, 1, 1, 1, 1, 1}), PerazzoParams::make(2, 3)).in_chain);
  CHECK(!chain_position(P({2, 2, 2, 2, 2, 1, 1}), PerazzoParams::make(2, 3)).in_chain);
}

TEST_CASE("a bounds and part counts") {
  auto b = a_bounds(PerazzoParams::make(2, 3));
  CHECK(b.a_min == 3);
  CHECK(b.a_max == 4);
  b = a_bounds(PerazzoParams::make(2, 5));
  CHECK(b.a_min == 5);
  CHECK(b.a_max == 9);
  b = a_bounds(PerazzoParams::make(2, 4));
  CHECK(b.a_min == 4);
  CHECK(b.a_max == 6);
  for (auto [m, d] : desk_params)
    CHECK(a_bounds(PerazzoParams::make(m, d)).a_max == compressed_hf(m, d - 1).sum());
  CHECK(generic_part_count(PerazzoParams::make(2, 3)) == 6);
  CHECK(generic_part_count(PerazzoParams::make(3, 3)) == 12);
  CHECK(generic_part_count(PerazzoParams::make(2, 5)) == 10);
}

TEST_CASE("Hankel rank examples") {
  Field q = Field::rationals();
  CHECK(hankel_hf(ints(q, {1, 0, 1}), 3) == hv({1, 2, 1}));
  CHECK(hankel_hf(ints(q, {1, 0, 0, 0, 1}), 5) == hv({1, 2, 2, 2, 1}));
  CHECK(hankel_hf(ints(q, {1, 0, 0, 0, 0}), 5) == hv({1, 1, 1, 1, 1}));
  CHECK(code_of([&] { hankel_hf(ints(q, {0, 0, 0}), 3); }) == Errc::zero_form);
  CHECK(code_of([&] { hankel_hf(ints(q, {1, 0}), 3); }) == Errc::invalid_argument);
}

TEST_CASE("Hankel rank agrees with the Hilbert function of l o F") {
  std::mt19937_64 rng(55);
  for (int d = 3; d <= 7; ++d) {
    auto params = PerazzoParams::make(2, d);
    Field f = Field::default_field();
    auto F = full_perazzo_form(params, f);
    for (int trial = 0; trial < 40; ++trial) {
      LinearForm l = LinearForm::zero(F.vars(), f);
      std::vector<Scalar> a;
      for (int i = 0; i < d; ++i) {
        // low-rank coefficient vectors now and then
        Scalar s = trial % 4 == 0 && i > 1 ? Scalar(f) : random_scalar(f, rng);
        a.push_back(s);
        l.set(static_cast<std::size_t>(i), s);
      }
      if (l.is_zero()) continue;
      CHECK(hankel_hf(a, d) == hilbert_function(contract(l, F)));
    }
  }
}

TEST_CASE("symmetric dual generator examples") {
  Field q = Field::rationals();
  CHECK(symmetric_dual_generator(2, 2, q).to_string() == "2*Y1^2 + Y1*Y2 + 2*Y2^2");
  auto g13 = symmetric_dual_generator(1, 3, q);
  CHECK(g13.to_string() == "6*Y1^3");
  CHECK(hilbert_function(g13) == hv({1, 1, 1, 1}));
  CHECK(hilbert_function(symmetric_dual_generator(2, 4, q)) == hv({1, 2, 3, 2, 1}));
  CHECK(hilbert_function(symmetric_dual_generator(3, 5, q)) == compressed_hf(3, 5));
  CHECK(code_of([] { symmetric_dual_generator(2, 5, Field::prime(5)); }) == Errc::characteristic);
}

TEST_CASE("forms with prescribed contraction") {
  Field f = Field::default_field();
  for (auto [m, d] : desk_params) {
    auto params = PerazzoParams::make(m, d);
    auto F = full_perazzo_form(params, f);
    auto G = symmetric_dual_generator(F.vars(), d - 1, f);
    auto l = form_with_contraction(params, G);
    CHECK(contract(l, F) == G);
    CHECK(classify_linear_form(l, params).tag == CaseTag::case_iii);
    CHECK(hilbert_function(restrict_to_y_block(G)).sum() == a_bounds(params).a_max);
  }
}

TEST_CASE("case II pattern with vanishing top power gives the case I type") {
  // b1 = b2 = 1, a20 = 1, a02 = -1: l^3 o F = 3(a20 + 2 a11 + a02) = 0.
  auto T = GradedAlgebraModel::from_dual(f_toy(), Field::rationals());
  auto params = PerazzoParams::make(2, 3);
  auto l = LinearForm::parse(T.vars(), T.field(), "a[2,0]=1,a[0,2]=-1,b1=1,b2=1");
  auto c = classify_linear_form(l, params);
  CHECK(c.tag == CaseTag::case_ii);
  CHECK(c.literal_match);
  CHECK(rank_profile(T, l)(0, 3) == 0);
  CHECK(jordan_type(T, l) == case_i_partition(params));
  CHECK(jordan_degree_type(T, l) == case_i_degree_type(params));
  // and two nonzero b's without the pattern still reach the maximum
  auto n = LinearForm::parse(T.vars(), T.field(), "a[1,1]=1,b1=1,b2=1");
  CHECK_FALSE(classify_linear_form(n, params).literal_match);
  CHECK(jordan_type(T, n) == case_ii_partition(params));
}
