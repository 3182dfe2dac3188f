#ifndef JTYPE_TESTS_HELPERS_HPP
#define JTYPE_TESTS_HELPERS_HPP

#include <random>
#include <vector>

#include "jtype/apolar.hpp"
#include "jtype/perazzo.hpp"
#include "jtype/poly.hpp"
#include "oracle.hpp"

namespace testing_support {

using namespace jtype;

inline Scalar random_scalar(Field f, std::mt19937_64& rng, long long spread = 20) {
  if (f.kind() == FieldKind::rationals) return Scalar(f, std::uniform_int_distribution<long long>(-spread, spread)(rng));
  return Scalar(f, static_cast<long long>(std::uniform_int_distribution<std::uint64_t>(0, f.modulus() - 1)(rng)));
}

inline Matrix random_matrix(Field f, std::size_t rows, std::size_t cols, std::mt19937_64& rng, double density = 0.6) {
  Matrix m(f, rows, cols);
  std::bernoulli_distribution keep(density);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (keep(rng)) m.at(r, c) = random_scalar(f, rng, 5);
  return m;
}

/// Random homogeneous polynomial of degree t with roughly `terms` terms.
inline Polynomial random_form(const VarsPtr& vars, Side side, Field f, int t, std::size_t terms, std::mt19937_64& rng) {
  auto monos = monomials_of_degree(vars->size(), t);
  Polynomial out(vars, side, f);
  std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
  for (std::size_t i = 0; i < terms; ++i) out.add_term(monos[pick(rng)], random_scalar(f, rng, 9));
  return out;
}

inline LinearForm random_linear_form(const VarsPtr& vars, Field f, std::mt19937_64& rng) {
  for (;;) {
    LinearForm l = LinearForm::zero(vars, f);
    for (std::size_t v = 0; v < vars->size(); ++v) l.set(v, random_scalar(f, rng));
    if (!l.is_zero()) return l;
  }
}

inline oracle::Poly to_oracle(const Polynomial& F) {
  oracle::Poly out;
  for (const auto& [mono, c] : F.terms()) out[mono.exponents()] = static_cast<oracle::i64>(c.residue());
  return out;
}

inline std::vector<oracle::i64> to_oracle(const LinearForm& l) {
  std::vector<oracle::i64> out;
  for (const auto& c : l.coefficients()) out.push_back(static_cast<oracle::i64>(c.residue()));
  return out;
}

inline Polynomial f_toy(Field f = Field::rationals()) { return full_perazzo_form(PerazzoParams::make(2, 3), f); }

}  // namespace testing_support

#endif
