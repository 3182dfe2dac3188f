#include "jtype/perazzo.hpp"

#include <algorithm>
#include <sstream>

#include "jtype/binomial.hpp"
#include "jtype/error.hpp"
#include "jtype/matrix.hpp"

namespace jtype {

PerazzoParams PerazzoParams::make(int m, int d) {
  if (m < 2) fail(Errc::invalid_argument, "full Perazzo forms need m >= 2, got m=" + std::to_string(m));
  if (d < 3) fail(Errc::invalid_argument, "full Perazzo forms need d >= 3, got d=" + std::to_string(d));
  if (m > 12 || d > 24) fail(Errc::out_of_range, "parameters beyond desk scale: m=" + std::to_string(m) + ", d=" + std::to_string(d));
  return PerazzoParams{m, d};
}

PerazzoParams PerazzoParams::parse(const std::string& text) {
  std::optional<int> m, d;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }), item.end());
    auto eq = item.find('=');
    if (eq == std::string::npos) fail(Errc::parse_error, "perazzo: expected key=value, got '" + item + "'");
    std::string key = item.substr(0, eq), value = item.substr(eq + 1);
    if (value.empty() || value.size() > 4 || !std::all_of(value.begin(), value.end(), [](unsigned char c) { return std::isdigit(c); }))
      fail(Errc::parse_error, "perazzo: bad value for '" + key + "'");
    if (key == "m")
      m = std::stoi(value);
    else if (key == "d")
      d = std::stoi(value);
    else
      fail(Errc::parse_error, "perazzo: unknown key '" + key + "'");
  }
  if (!m || !d) fail(Errc::parse_error, "perazzo: both m and d are required");
  return make(*m, *d);
}

std::size_t PerazzoParams::n_plus_1() const { return binomial(d + m - 2, m - 1); }

std::string PerazzoParams::to_string() const { return "m=" + std::to_string(m) + ",d=" + std::to_string(d); }

Polynomial full_perazzo_form(const PerazzoParams& params, Field field) {
  auto vars = VariableSet::perazzo(params.m, params.d);
  Polynomial F(vars, Side::dual, field);
  const auto& xs = vars->x_index_set();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    std::vector<int> e(vars->size(), 0);
    e[i] = 1;
    for (int j = 1; j <= params.m; ++j) e[vars->y_position(j)] = xs[i][static_cast<std::size_t>(j - 1)];
    F.add_term(Monomial(std::move(e)), Scalar(field, 1));
  }
  return F;
}

HVector perazzo_hf(const PerazzoParams& params) {
  const int m = params.m, d = params.d;
  HVector h;
  h.values.assign(static_cast<std::size_t>(d + 1), 0);
  h.values.front() = h.values.back() = 1;
  for (int i = 1; i <= d / 2; ++i) {
    std::size_t v = binomial(i + m - 1, m - 1) + binomial(d - i + m - 1, m - 1);
    h.values[static_cast<std::size_t>(i)] = v;
    h.values[static_cast<std::size_t>(d - i)] = v;
  }
  return h;
}

std::size_t perazzo_dim(const PerazzoParams& params) { return 2 * binomial(params.d + params.m - 1, params.m); }

const char* to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::case_i: return "CASE_I";
    case CaseTag::case_ii: return "CASE_II";
    case CaseTag::case_iii: return "CASE_III";
  }
  return "?";
}

namespace {

void check_perazzo_form(const LinearForm& l, const PerazzoParams& params) {
  const auto& vars = *l.vars();
  if (!vars.is_perazzo() || vars.y_count() != params.m || vars.perazzo_degree() != params.d)
    fail(Errc::variable_mismatch, "linear form does not live in the full Perazzo ring for " + params.to_string());
  if (l.is_zero()) fail(Errc::zero_form, "linear form is zero");
}

// position of x_{(d-1) e_k}
std::size_t pure_power_index(const VariableSet& vars, int k) {
  std::vector<int> tuple(static_cast<std::size_t>(vars.y_count()), 0);
  tuple[static_cast<std::size_t>(k - 1)] = vars.perazzo_degree() - 1;
  return *vars.x_position(tuple);
}

// Parts shared by cases I and II: lengths d-j, j >= 2, with C(m-2+j, m-2)
// strings starting in degree 1 and as many in degree j.
void append_tail(const PerazzoParams& p, std::vector<JordanDegreeType::Entry>& out) {
  for (int j = 2; j <= p.d - 1; ++j) {
    std::size_t mult = binomial(p.m - 2 + j, p.m - 2);
    auto len = static_cast<std::size_t>(p.d - j);
    out.insert(out.end(), mult, {len, 1});
    out.insert(out.end(), mult, {len, j});
  }
}

}  // namespace

TheoremCase classify_linear_form(const LinearForm& l, const PerazzoParams& params) {
  check_perazzo_form(l, params);
  const auto& vars = *l.vars();
  std::vector<int> nonzero_b;
  for (int j = 1; j <= params.m; ++j)
    if (!l.b(j).is_zero()) nonzero_b.push_back(j);

  TheoremCase out;
  if (nonzero_b.empty()) {
    out.tag = CaseTag::case_iii;
    out.literal_match = true;
    return out;
  }
  for (int k : nonzero_b)
    if (!l.a(pure_power_index(vars, k)).is_zero()) {
      out.tag = CaseTag::case_ii;
      out.witness = k;
      out.literal_match = true;
      return out;
    }
  out.tag = CaseTag::case_i;
  bool pure_y = true;
  for (std::size_t i = 0; i < vars.x_count(); ++i)
    if (!l.a(i).is_zero()) pure_y = false;
  out.literal_match = pure_y || nonzero_b.size() == 1;
  return out;
}

JordanDegreeType case_i_degree_type(const PerazzoParams& p) {
  std::vector<JordanDegreeType::Entry> e;
  const auto d = static_cast<std::size_t>(p.d);
  e.push_back({d, 0});
  e.push_back({d, 1});
  e.insert(e.end(), 2 * binomial(p.m - 1, p.m - 2), {d - 1, 1});
  append_tail(p, e);
  return JordanDegreeType(std::move(e));
}

JordanDegreeType case_ii_degree_type(const PerazzoParams& p) {
  std::vector<JordanDegreeType::Entry> e;
  const auto d = static_cast<std::size_t>(p.d);
  e.push_back({d + 1, 0});
  e.insert(e.end(), static_cast<std::size_t>(2 * p.m - 1), {d - 1, 1});
  append_tail(p, e);
  return JordanDegreeType(std::move(e));
}

Partition case_i_partition(const PerazzoParams& params) {
  std::vector<std::size_t> parts(2, static_cast<std::size_t>(params.d));
  for (int j = 1; j <= params.d - 1; ++j)
    parts.insert(parts.end(), 2 * binomial(params.m - 2 + j, params.m - 2), static_cast<std::size_t>(params.d - j));
  return Partition(std::move(parts));
}

Partition case_ii_partition(const PerazzoParams& params) {
  std::vector<std::size_t> parts{static_cast<std::size_t>(params.d + 1)};
  parts.insert(parts.end(), static_cast<std::size_t>(2 * params.m - 1), static_cast<std::size_t>(params.d - 1));
  for (int j = 2; j <= params.d - 1; ++j)
    parts.insert(parts.end(), 2 * binomial(params.m - 2 + j, params.m - 2), static_cast<std::size_t>(params.d - j));
  return Partition(std::move(parts));
}

Partition case_iii_partition(const PerazzoParams& params, std::size_t a) {
  const std::size_t dim = perazzo_dim(params);
  if (2 * a > dim) fail(Errc::out_of_range, "a = " + std::to_string(a) + " exceeds half the algebra dimension");
  std::vector<std::size_t> parts(a, 2);
  parts.insert(parts.end(), dim - 2 * a, 1);
  return Partition(std::move(parts));
}

Polynomial restrict_to_y_block(const Polynomial& G) {
  const auto& vars = *G.vars();
  if (!vars.is_perazzo()) fail(Errc::variable_mismatch, "restriction needs a Perazzo variable set");
  std::vector<std::string> names;
  for (int j = 1; j <= vars.y_count(); ++j) names.push_back("y" + std::to_string(j));
  auto ys = VariableSet::generic(names);
  Polynomial out(ys, G.side(), G.field());
  for (const auto& [mono, c] : G.terms()) {
    for (std::size_t i = 0; i < vars.x_count(); ++i)
      if (mono[i] != 0) fail(Errc::variable_mismatch, "polynomial involves x-block variables: " + G.to_string());
    std::vector<int> e;
    for (int j = 1; j <= vars.y_count(); ++j) e.push_back(mono[vars.y_position(j)]);
    out.add_term(Monomial(std::move(e)), c);
  }
  return out;
}

PredictedJordan predicted_jordan(const TheoremCase& theorem_case, const PerazzoParams& params, const LinearForm& l,
                                 Field field) {
  check_perazzo_form(l, params);
  PredictedJordan out;
  switch (theorem_case.tag) {
    case CaseTag::case_i:
      out.partition = case_i_partition(params);
      out.jdt = case_i_degree_type(params);
      break;
    case CaseTag::case_ii:
      out.partition = case_ii_partition(params);
      out.jdt = case_ii_degree_type(params);
      break;
    case CaseTag::case_iii: {
      Polynomial G = contract(l, full_perazzo_form(params, field));
      if (G.is_zero()) fail(Errc::internal, "l o F vanishes for a nonzero x-only form");
      out.a = hilbert_function(restrict_to_y_block(G)).sum();
      out.partition = case_iii_partition(params, *out.a);
      break;
    }
  }
  return out;
}

ABounds a_bounds(const PerazzoParams& params) {
  const int m = params.m, d = params.d;
  ABounds out;
  out.a_min = static_cast<std::size_t>(d);
  std::size_t sum = 0;
  if (d % 2 == 1) {
    for (int i = 0; i <= (d - 3) / 2; ++i) sum += binomial(i + m - 1, m - 1);
    out.a_max = binomial((d - 1) / 2 + m - 1, m - 1) + 2 * sum;
  } else {
    for (int i = 0; i <= (d - 2) / 2; ++i) sum += binomial(i + m - 1, m - 1);
    out.a_max = 2 * sum;
  }
  return out;
}

std::size_t generic_part_count(const PerazzoParams& params) { return 2 * params.n_plus_1(); }

HVector hankel_hf(const std::vector<Scalar>& a, int d) {
  if (d < 3) fail(Errc::invalid_argument, "hankel_hf needs d >= 3");
  if (a.size() != static_cast<std::size_t>(d))
    fail(Errc::invalid_argument, "hankel_hf needs d = " + std::to_string(d) + " coefficients, got " + std::to_string(a.size()));
  if (std::all_of(a.begin(), a.end(), [](const Scalar& s) { return s.is_zero(); }))
    fail(Errc::zero_form, "hankel_hf: all coefficients vanish");
  const int r = d % 2 == 1 ? (d - 1) / 2 : (d - 2) / 2;
  Matrix hankel(a.front().field(), static_cast<std::size_t>(d - r), static_cast<std::size_t>(r + 1));
  for (int row = 0; row < d - r; ++row)
    for (int col = 0; col <= r; ++col)
      hankel.at(static_cast<std::size_t>(row), static_cast<std::size_t>(col)) = a[static_cast<std::size_t>(row + col)];
  const auto s = static_cast<long long>(rank(hankel));
  HVector h;
  for (long long i = 0; i <= d - 1; ++i) h.values.push_back(static_cast<std::size_t>(std::min({i + 1, s, d - i})));
  return h;
}

namespace {

Scalar factorial(Field field, int n) {
  Scalar f(field, 1);
  for (int i = 2; i <= n; ++i) f *= Scalar(field, i);
  return f;
}

Polynomial symmetric_on(const VarsPtr& vars, const std::vector<std::size_t>& positions, int t, Field field) {
  if (t < 0) fail(Errc::invalid_argument, "negative degree");
  if (!field.admits_degree(t))
    fail(Errc::characteristic, "factorials up to " + std::to_string(t) + "! vanish in " + field.to_string());
  Polynomial G(vars, Side::dual, field);
  for (const auto& mono : monomials_of_degree(positions.size(), t)) {
    std::vector<int> e(vars->size(), 0);
    Scalar c(field, 1);
    for (std::size_t j = 0; j < positions.size(); ++j) {
      e[positions[j]] = mono[j];
      c *= factorial(field, mono[j]);
    }
    G.add_term(Monomial(std::move(e)), c);
  }
  return G;
}

}  // namespace

Polynomial symmetric_dual_generator(int m, int t, Field field) {
  if (m < 1) fail(Errc::invalid_argument, "symmetric_dual_generator needs m >= 1");
  std::vector<std::string> names;
  std::vector<std::size_t> positions;
  for (int j = 1; j <= m; ++j) {
    names.push_back("y" + std::to_string(j));
    positions.push_back(static_cast<std::size_t>(j - 1));
  }
  return symmetric_on(VariableSet::generic(names), positions, t, field);
}

Polynomial symmetric_dual_generator(const VarsPtr& vars, int t, Field field) {
  if (!vars->is_perazzo()) fail(Errc::variable_mismatch, "expected a Perazzo variable set");
  std::vector<std::size_t> positions;
  for (int j = 1; j <= vars->y_count(); ++j) positions.push_back(vars->y_position(j));
  return symmetric_on(vars, positions, t, field);
}

LinearForm form_with_contraction(const PerazzoParams& params, const Polynomial& G) {
  const auto& vars = *G.vars();
  if (!vars.is_perazzo() || vars.y_count() != params.m || vars.perazzo_degree() != params.d || G.side() != Side::dual)
    fail(Errc::variable_mismatch, "target must be a dual form in the full Perazzo ring for " + params.to_string());
  if (G.require_homogeneous("form_with_contraction") != params.d - 1)
    fail(Errc::invalid_argument, "target must have degree d-1");
  LinearForm l = LinearForm::zero(G.vars(), G.field());
  for (const auto& [mono, c] : G.terms()) {
    std::vector<int> tuple;
    for (std::size_t i = 0; i < vars.x_count(); ++i)
      if (mono[i] != 0) fail(Errc::variable_mismatch, "target involves x-block variables");
    for (int j = 1; j <= params.m; ++j) tuple.push_back(mono[vars.y_position(j)]);
    l.set(*vars.x_position(tuple), c);
  }
  return l;
}

ChainPosition chain_position(const Partition& p, const PerazzoParams& params) {
  ChainPosition out;
  if (p.total() != perazzo_dim(params)) return out;
  if (p == case_ii_partition(params)) {
    out.in_chain = true;
    out.tag = CaseTag::case_ii;
  } else if (p == case_i_partition(params)) {
    out.in_chain = true;
    out.tag = CaseTag::case_i;
  } else if (p.size() > 0 && p.parts().front() <= 2) {
    std::size_t a = p.count_at_least(2);
    auto bounds = a_bounds(params);
    if (a >= bounds.a_min && a <= bounds.a_max) {
      out.in_chain = true;
      out.tag = CaseTag::case_iii;
      out.a = a;
    }
  }
  return out;
}

}  // namespace jtype
