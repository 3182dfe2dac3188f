#include "jtype/poly.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <sstream>

#include "jtype/error.hpp"

namespace jtype {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string lower(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::string upper(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

int to_int(std::string_view s, std::string_view context) {
  if (!all_digits(s) || s.size() > 6) fail(Errc::parse_error, "bad integer '" + std::string(s) + "' in '" + std::string(context) + "'");
  return std::stoi(std::string(s));
}

// Exponent tuples of length m summing to total, descending lexicographic.
void tuples_desc(int m, int total, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == m - 1) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int first = total; first >= 0; --first) {
    cur.push_back(first);
    tuples_desc(m, total - first, cur, out);
    cur.pop_back();
  }
}

std::string tuple_string(const std::vector<int>& t) {
  std::string s = "[";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(t[i]);
  }
  return s + "]";
}

}  // namespace

// ---------------------------------------------------------------- VariableSet

std::shared_ptr<const VariableSet> VariableSet::perazzo(int m, int d) {
  if (m < 1 || d < 1) fail(Errc::invalid_argument, "Perazzo variable set needs m >= 1 and d >= 1");
  auto vs = std::shared_ptr<VariableSet>(new VariableSet());
  vs->perazzo_ = true;
  vs->m_ = m;
  vs->d_ = d;
  std::vector<int> cur;
  tuples_desc(m, d - 1, cur, vs->x_index_set_);
  for (const auto& t : vs->x_index_set_) vs->names_.push_back("x" + tuple_string(t));
  for (int j = 1; j <= m; ++j) vs->names_.push_back("y" + std::to_string(j));
  return vs;
}

std::shared_ptr<const VariableSet> VariableSet::generic(std::vector<std::string> names) {
  if (names.empty()) fail(Errc::invalid_argument, "variable list is empty");
  std::set<std::string> seen;
  for (auto& n : names) {
    n = trim(n);
    if (n.empty() || !std::isalpha(static_cast<unsigned char>(n[0])) ||
        !std::all_of(n.begin(), n.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }))
      fail(Errc::parse_error, "invalid variable name '" + n + "'");
    if (!seen.insert(lower(n)).second) fail(Errc::parse_error, "duplicate variable name '" + n + "'");
  }
  auto vs = std::shared_ptr<VariableSet>(new VariableSet());
  for (auto& n : names) vs->names_.push_back(lower(n));
  return vs;
}

std::optional<std::size_t> VariableSet::x_position(const std::vector<int>& tuple) const {
  auto it = std::find(x_index_set_.begin(), x_index_set_.end(), tuple);
  if (it == x_index_set_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - x_index_set_.begin());
}

std::string VariableSet::name(std::size_t var, bool dual) const {
  if (var >= names_.size()) fail(Errc::out_of_range, "variable index out of range");
  return dual ? upper(names_[var]) : names_[var];
}

std::optional<std::size_t> VariableSet::find(std::string_view token) const {
  std::string t = lower(trim(token));
  if (t.empty()) return std::nullopt;
  if (perazzo_) {
    if (t[0] == 'x' && t.size() > 2 && t[1] == '[' && t.back() == ']') {
      std::vector<int> tuple;
      std::stringstream ss(t.substr(2, t.size() - 3));
      std::string part;
      while (std::getline(ss, part, ',')) {
        part = trim(part);
        if (!all_digits(part) || part.size() > 6) return std::nullopt;
        tuple.push_back(std::stoi(part));
      }
      return x_position(tuple);
    }
    if (t[0] == 'y' && all_digits(std::string_view(t).substr(1)) && t.size() < 8) {
      int j = std::stoi(t.substr(1));
      if (j >= 1 && j <= m_) return y_position(j);
    }
    return std::nullopt;
  }
  auto it = std::find(names_.begin(), names_.end(), t);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

// ------------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<int> exponents) : exp_(std::move(exponents)) {
  for (int e : exp_) {
    if (e < 0) fail(Errc::invalid_argument, "negative exponent");
    degree_ += e;
  }
}

Monomial Monomial::variable(std::size_t nvars, std::size_t var, int power) {
  std::vector<int> e(nvars, 0);
  e.at(var) = power;
  return Monomial(std::move(e));
}

bool Monomial::divisible_by(const Monomial& other) const {
  for (std::size_t i = 0; i < exp_.size(); ++i)
    if (exp_[i] < other.exp_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  std::vector<int> e(exp_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.exp_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::operator/(const Monomial& other) const {
  std::vector<int> e(exp_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] -= other.exp_[i];
  return Monomial(std::move(e));
}

bool CanonicalOrder::operator()(const Monomial& a, const Monomial& b) const {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  return a.exponents() > b.exponents();
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, int t) {
  std::vector<Monomial> out;
  if (t < 0) return out;
  if (nvars == 0) {
    if (t == 0) out.push_back(Monomial::one(0));
    return out;
  }
  std::vector<std::vector<int>> tuples;
  std::vector<int> cur;
  tuples_desc(static_cast<int>(nvars), t, cur, tuples);
  out.reserve(tuples.size());
  for (auto& e : tuples) out.emplace_back(std::move(e));
  return out;
}

// ----------------------------------------------------------------- Polynomial

Polynomial::Polynomial(VarsPtr vars, Side side, Field field)
    : vars_(std::move(vars)), side_(side), field_(field) {
  if (!vars_) fail(Errc::invalid_argument, "polynomial without a variable set");
}

Polynomial Polynomial::constant(VarsPtr vars, Side side, const Scalar& c) {
  Polynomial p(vars, side, c.field());
  p.add_term(Monomial::one(p.vars_->size()), c);
  return p;
}

Polynomial Polynomial::variable(VarsPtr vars, Side side, Field field, std::size_t var) {
  Polynomial p(vars, side, field);
  p.add_term(Monomial::variable(p.vars_->size(), var), Scalar(field, 1));
  return p;
}

Polynomial Polynomial::term(VarsPtr vars, Side side, const Monomial& mono, const Scalar& c) {
  Polynomial p(vars, side, c.field());
  p.add_term(mono, c);
  return p;
}

Scalar Polynomial::coefficient(const Monomial& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? Scalar(field_) : it->second;
}

void Polynomial::add_term(const Monomial& mono, const Scalar& c) {
  if (mono.size() != vars_->size()) fail(Errc::variable_mismatch, "monomial length does not match variable set");
  if (!(c.field() == field_)) fail(Errc::field_mismatch, "coefficient field differs from polynomial field");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(mono, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::optional<int> Polynomial::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  int d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_)
    if (m.degree() != d) return std::nullopt;
  return d;
}

int Polynomial::require_homogeneous(const char* what) const {
  if (terms_.empty()) fail(Errc::zero_form, std::string(what) + ": polynomial is zero");
  auto d = homogeneous_degree();
  if (!d) fail(Errc::inhomogeneous, std::string(what) + ": polynomial is not homogeneous");
  return *d;
}

void Polynomial::check_compatible(const Polynomial& other) const {
  if (!(*vars_ == *other.vars_) || side_ != other.side_)
    fail(Errc::variable_mismatch, "polynomials live in different rings");
  if (!(field_ == other.field_)) fail(Errc::field_mismatch, "polynomials over different fields");
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  check_compatible(other);
  Polynomial out = *this;
  for (const auto& [m, c] : other.terms_) out.add_term(m, c);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  check_compatible(other);
  Polynomial out = *this;
  for (const auto& [m, c] : other.terms_) out.add_term(m, -c);
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  check_compatible(other);
  if (side_ != Side::ring) fail(Errc::variable_mismatch, "multiplication is defined on the ring side only");
  Polynomial out(vars_, side_, field_);
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : other.terms_) out.add_term(m1 * m2, c1 * c2);
  return out;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  Polynomial out(vars_, side_, field_);
  for (const auto& [m, coeff] : terms_) out.add_term(m, coeff * c);
  return out;
}

Polynomial Polynomial::pow(int k) const {
  if (k < 0) fail(Errc::invalid_argument, "negative power");
  Polynomial out = constant(vars_, side_, Scalar(field_, 1));
  for (int i = 0; i < k; ++i) out = out * *this;
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!(*a.vars_ == *b.vars_) || a.side_ != b.side_ || !(a.field_ == b.field_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  auto ib = b.terms_.begin();
  for (auto ia = a.terms_.begin(); ia != a.terms_.end(); ++ia, ++ib)
    if (!(ia->first == ib->first) || ia->second != ib->second) return false;
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  const bool dual = side_ == Side::dual;
  std::string out;
  bool first = true;
  for (const auto& [mono, coeff] : terms_) {
    Scalar c = coeff;
    bool negative = !field_.is_prime() && c.rational() < 0;
    if (negative) c = -c;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;

    std::string factors;
    for (std::size_t v = 0; v < mono.size(); ++v) {
      if (mono[v] == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += vars_->name(v, dual);
      if (mono[v] > 1) factors += "^" + std::to_string(mono[v]);
    }
    if (factors.empty())
      out += c.to_string();
    else if (c.is_one())
      out += factors;
    else
      out += c.to_string() + "*" + factors;
  }
  return out;
}

Polynomial Polynomial::parse(VarsPtr vars, Side side, Field field, std::string_view text) {
  Polynomial out(vars, side, field);
  const std::string src(text);
  if (trim(src).empty()) fail(Errc::parse_error, "empty polynomial");

  // split into signed terms at top-level + / -
  std::vector<std::pair<bool, std::string>> pieces;
  std::string cur;
  bool negative = false;
  bool pending_sign = false;
  int depth = 0;
  for (char ch : src) {
    if (ch == '[') ++depth;
    if (ch == ']') --depth;
    if (depth == 0 && (ch == '+' || ch == '-')) {
      if (trim(cur).empty()) {
        if (pending_sign) fail(Errc::parse_error, "dangling sign in '" + src + "'");
      } else {
        pieces.emplace_back(negative, cur);
      }
      pending_sign = true;
      negative = ch == '-';
      cur.clear();
      continue;
    }
    cur.push_back(ch);
  }
  if (trim(cur).empty()) fail(Errc::parse_error, "dangling sign in '" + src + "'");
  pieces.emplace_back(negative, cur);

  for (const auto& [neg, body] : pieces) {
    Scalar coeff(field, neg ? -1 : 1);
    std::vector<int> exps(vars->size(), 0);
    std::stringstream ss(body);
    std::string factor;
    while (std::getline(ss, factor, '*')) {
      factor = trim(factor);
      if (factor.empty()) fail(Errc::parse_error, "empty factor in '" + src + "'");
      if (std::isdigit(static_cast<unsigned char>(factor[0]))) {
        coeff *= Scalar::parse(field, factor);
        continue;
      }
      std::string base = factor;
      int power = 1;
      auto caret = factor.find('^');
      if (caret != std::string::npos) {
        base = trim(factor.substr(0, caret));
        power = to_int(trim(factor.substr(caret + 1)), src);
      }
      auto var = vars->find(base);
      if (!var) fail(Errc::parse_error, "unknown variable '" + base + "' in '" + src + "'");
      exps[*var] += power;
    }
    out.add_term(Monomial(std::move(exps)), coeff);
  }
  return out;
}

Polynomial contract(const Polynomial& f, const Polynomial& F) {
  if (f.side() != Side::ring || F.side() != Side::dual)
    fail(Errc::variable_mismatch, "contraction needs a ring element acting on a dual element");
  if (!(*f.vars() == *F.vars())) fail(Errc::variable_mismatch, "contraction across different variable sets");
  if (!(f.field() == F.field())) fail(Errc::field_mismatch, "contraction across different fields");
  Polynomial out(F.vars(), Side::dual, F.field());
  for (const auto& [a, ca] : f.terms())
    for (const auto& [b, cb] : F.terms())
      if (b.divisible_by(a)) out.add_term(b / a, ca * cb);
  return out;
}

// ----------------------------------------------------------------- LinearForm

LinearForm::LinearForm(VarsPtr vars, Vector coefficients)
    : vars_(std::move(vars)), field_(coefficients.empty() ? Field::default_field() : coefficients.front().field()),
      coeffs_(std::move(coefficients)) {
  if (!vars_ || coeffs_.size() != vars_->size())
    fail(Errc::variable_mismatch, "linear form needs one coefficient per variable");
  for (const auto& c : coeffs_)
    if (!(c.field() == field_)) fail(Errc::field_mismatch, "linear form coefficients over different fields");
}

LinearForm LinearForm::zero(VarsPtr vars, Field field) {
  std::size_t n = vars->size();
  return LinearForm(std::move(vars), Vector(n, Scalar(field)));
}

LinearForm LinearForm::parse(VarsPtr vars, Field field, std::string_view text) {
  LinearForm l = zero(vars, field);
  // commas also separate tuple entries, so re-join inside brackets
  std::vector<std::string> items;
  std::string cur;
  int depth = 0;
  for (char ch : std::string(text)) {
    if (ch == '[') ++depth;
    if (ch == ']') --depth;
    if ((ch == ',' || ch == ';') && depth == 0) {
      items.push_back(cur);
      cur.clear();
      continue;
    }
    cur.push_back(ch);
  }
  items.push_back(cur);
  bool any = false;
  for (auto& raw : items) {
    std::string it = trim(raw);
    if (it.empty()) continue;
    auto eq = it.find('=');
    if (eq == std::string::npos) fail(Errc::parse_error, "linear form: expected key=value, got '" + it + "'");
    std::string key = trim(it.substr(0, eq));
    std::string value = trim(it.substr(eq + 1));
    std::optional<std::size_t> var;
    if (vars->is_perazzo() && !key.empty() && (key[0] == 'a' || key[0] == 'A') && key.size() > 1 && key[1] == '[')
      var = vars->find("x" + key.substr(1));
    else if (vars->is_perazzo() && !key.empty() && (key[0] == 'b' || key[0] == 'B'))
      var = vars->find("y" + key.substr(1));
    else
      var = vars->find(key);
    if (!var) fail(Errc::parse_error, "linear form: unknown coefficient '" + key + "'");
    l.coeffs_[*var] = Scalar::parse(field, value);
    any = true;
  }
  if (!any) fail(Errc::parse_error, "linear form: no coefficients given");
  return l;
}

bool LinearForm::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Scalar& c) { return c.is_zero(); });
}

Polynomial LinearForm::as_polynomial() const {
  Polynomial p(vars_, Side::ring, field_);
  for (std::size_t v = 0; v < coeffs_.size(); ++v) p.add_term(Monomial::variable(coeffs_.size(), v), coeffs_[v]);
  return p;
}

std::string LinearForm::to_string() const {
  std::string out;
  for (std::size_t v = 0; v < coeffs_.size(); ++v) {
    if (coeffs_[v].is_zero()) continue;
    if (!out.empty()) out += ",";
    std::string key = vars_->name(v, false);
    if (vars_->is_perazzo()) key = v < vars_->x_count() ? "a" + key.substr(1) : "b" + key.substr(1);
    out += key + "=" + coeffs_[v].to_string();
  }
  return out.empty() ? "0" : out;
}

Polynomial contract(const LinearForm& l, const Polynomial& F) {
  if (F.side() != Side::dual) fail(Errc::variable_mismatch, "contraction target must be a dual element");
  if (!(*l.vars() == *F.vars())) fail(Errc::variable_mismatch, "contraction across different variable sets");
  if (!(l.field() == F.field())) fail(Errc::field_mismatch, "contraction across different fields");
  Polynomial out(F.vars(), Side::dual, F.field());
  for (const auto& [b, cb] : F.terms()) {
    std::vector<int> e = b.exponents();
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0 || l.coefficient(v).is_zero()) continue;
      --e[v];
      out.add_term(Monomial(e), l.coefficient(v) * cb);
      ++e[v];
    }
  }
  return out;
}

}  // namespace jtype
