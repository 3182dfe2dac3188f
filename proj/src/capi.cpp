#include "jtype/jtype.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <sstream>
#include <string>

#include "jtype/apolar.hpp"
#include "jtype/error.hpp"
#include "jtype/jordan.hpp"
#include "jtype/perazzo.hpp"
#include "jtype/verify.hpp"
#include "serialize.hpp"

using namespace jtype;

struct jt_model {
  GradedAlgebraModel model;
  std::optional<PerazzoParams> params;
};

struct jt_form {
  LinearForm form;
};

namespace {

thread_local std::string last_error;

template <class Fn>
jt_status guarded(Fn&& fn) {
  try {
    fn();
    last_error.clear();
    return JT_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return static_cast<jt_status>(static_cast<int>(e.code()));
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  } catch (...) {
    last_error = "unknown failure";
  }
  return JT_INTERNAL;
}

void require(const void* p, const char* what) {
  if (!p) fail(Errc::invalid_argument, std::string(what) + ": null pointer");
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

Field field_of(const char* text) { return text ? Field::parse(text) : Field::default_field(); }

VarsPtr generic_vars(const char* list) {
  require(list, "vars");
  std::vector<std::string> names;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto b = item.find_first_not_of(" \t"), e = item.find_last_not_of(" \t");
    if (b == std::string::npos) fail(Errc::parse_error, "vars: empty variable name");
    names.push_back(item.substr(b, e - b + 1));
  }
  return VariableSet::generic(std::move(names));
}

const PerazzoParams& perazzo_of(const jt_model* m) {
  if (!m->params) fail(Errc::invalid_argument, "model: operation needs a full Perazzo model");
  return *m->params;
}

template <class T>
void copy_out(const std::vector<T>& src, T* dst, std::size_t capacity, std::size_t* count) {
  if (count) *count = src.size();
  if (!dst) return;
  for (std::size_t i = 0; i < src.size() && i < capacity; ++i) dst[i] = src[i];
}

}  // namespace

extern "C" {

const char* jt_version(void) { return "1.0.0"; }

const char* jt_status_name(jt_status status) {
  switch (status) {
    case JT_OK: return "ok";
    case JT_INVALID_ARGUMENT: return "invalid_argument";
    case JT_PARSE_ERROR: return "parse_error";
    case JT_DIVISION_BY_ZERO: return "division_by_zero";
    case JT_FIELD_MISMATCH: return "field_mismatch";
    case JT_VARIABLE_MISMATCH: return "variable_mismatch";
    case JT_INHOMOGENEOUS: return "inhomogeneous";
    case JT_CHARACTERISTIC: return "characteristic";
    case JT_NOT_ARTINIAN: return "not_artinian";
    case JT_ZERO_FORM: return "zero_form";
    case JT_OUT_OF_RANGE: return "out_of_range";
    case JT_INCOMPARABLE: return "incomparable";
    case JT_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* jt_last_error(void) { return last_error.c_str(); }

void jt_string_free(char* s) { std::free(s); }

jt_status jt_field_check(const char* field) {
  return guarded([&] {
    require(field, "field");
    Field::parse(field);
  });
}

jt_status jt_model_perazzo(const char* params, const char* field, jt_model** out) {
  return guarded([&] {
    require(params, "perazzo");
    require(out, "out");
    auto p = PerazzoParams::parse(params);
    Field f = field_of(field);
    auto model = GradedAlgebraModel::from_dual(full_perazzo_form(p, f), f);
    *out = new jt_model{std::move(model), p};
  });
}

jt_status jt_model_dual(const char* vars, const char* polynomial, const char* field, jt_model** out) {
  return guarded([&] {
    require(polynomial, "dual");
    require(out, "out");
    Field f = field_of(field);
    auto F = Polynomial::parse(generic_vars(vars), Side::dual, f, polynomial);
    *out = new jt_model{GradedAlgebraModel::from_dual(F, f), std::nullopt};
  });
}

jt_status jt_model_ideal(const char* vars, const char* generators, int bound, const char* field, jt_model** out) {
  return guarded([&] {
    require(generators, "ideal");
    require(out, "out");
    Field f = field_of(field);
    auto v = generic_vars(vars);
    std::vector<Polynomial> gens;
    std::stringstream ss(generators);
    std::string item;
    while (std::getline(ss, item, ';'))
      if (item.find_first_not_of(" \t") != std::string::npos) gens.push_back(Polynomial::parse(v, Side::ring, f, item));
    if (gens.empty()) fail(Errc::parse_error, "ideal: no generators");
    *out = new jt_model{GradedAlgebraModel::from_ideal(gens, bound), std::nullopt};
  });
}

void jt_model_free(jt_model* model) { delete model; }

int jt_model_socle_degree(const jt_model* model) { return model ? model->model.socle_degree() : -1; }

size_t jt_model_dimension(const jt_model* model) { return model ? model->model.dimension() : 0; }

int jt_model_is_perazzo(const jt_model* model) { return model && model->params ? 1 : 0; }

jt_status jt_model_hilbert(const jt_model* model, size_t* values, size_t capacity, size_t* count) {
  return guarded([&] {
    require(model, "model");
    copy_out(model->model.hilbert().values, values, capacity, count);
  });
}

jt_status jt_form_parse(const jt_model* model, const char* text, jt_form** out) {
  return guarded([&] {
    require(model, "model");
    require(text, "ell");
    require(out, "out");
    *out = new jt_form{LinearForm::parse(model->model.vars(), model->model.field(), text)};
  });
}

void jt_form_free(jt_form* form) { delete form; }

jt_status jt_jordan_type(const jt_model* model, const jt_form* form, size_t* parts, size_t capacity, size_t* count) {
  return guarded([&] {
    require(model, "model");
    require(form, "ell");
    copy_out(jordan_type(model->model, form->form).parts(), parts, capacity, count);
  });
}

jt_status jt_jordan_degree_type(const jt_model* model, const jt_form* form, size_t* lengths, int* degrees,
                                size_t capacity, size_t* count) {
  return guarded([&] {
    require(model, "model");
    require(form, "ell");
    const auto s = jordan_degree_type(model->model, form->form);
    const auto& e = s.entries();
    if (count) *count = e.size();
    for (std::size_t i = 0; i < e.size() && i < capacity; ++i) {
      if (lengths) lengths[i] = e[i].first;
      if (degrees) degrees[i] = e[i].second;
    }
  });
}

jt_status jt_lefschetz(const jt_model* model, const jt_form* form, int* weak, int* strong) {
  return guarded([&] {
    require(model, "model");
    require(form, "ell");
    auto r = lefschetz_check(model->model, form->form);
    if (weak) *weak = r.weak ? 1 : 0;
    if (strong) *strong = r.strong ? 1 : 0;
  });
}

jt_status jt_hf_json(const jt_model* model, char** out) {
  return guarded([&] {
    require(model, "model");
    require(out, "out");
    const auto& m = model->model;
    Json j{{"hilbert", to_json(m.hilbert())},
           {"dimension", m.dimension()},
           {"socle_degree", m.socle_degree()},
           {"stats", to_json(hf_stats(m.hilbert(), static_cast<int>(m.vars()->size())))}};
    if (model->params) {
      auto closed = perazzo_hf(*model->params);
      j["closed_form"] = Json{{"hilbert", to_json(closed)},
                              {"dimension", perazzo_dim(*model->params)},
                              {"agrees", closed == m.hilbert() && perazzo_dim(*model->params) == m.dimension()}};
    }
    *out = duplicate(j.dump());
  });
}

jt_status jt_jordan_json(const jt_model* model, const jt_form* form, char** out) {
  return guarded([&] {
    require(model, "model");
    require(form, "ell");
    require(out, "out");
    const auto& m = model->model;
    auto ranks = rank_profile(m, form->form);
    auto p = jordan_type(ranks);
    auto s = jordan_degree_type(ranks);
    Json j{{"ell", form->form.to_string()},
           {"partition", to_json(p)},
           {"jdt", to_json(s)},
           {"string_oracle_agrees", degree_type_of(jordan_strings(m, form->form)) == s},
           {"lefschetz", to_json(lefschetz_check(ranks))},
           {"conjugate_hilbert", to_json(conjugate_partition(Partition(m.hilbert().values)))}};
    if (model->params) j["chain"] = to_json(chain_position(p, *model->params));
    *out = duplicate(j.dump());
  });
}

jt_status jt_ann_json(const jt_model* model, int degree, char** out) {
  return guarded([&] {
    require(model, "model");
    require(out, "out");
    const auto& dual = model->model.dual_generator();
    if (!dual) fail(Errc::invalid_argument, "ann: needs a model given by a dual generator");
    *out = duplicate(to_json(annihilator_basis(*dual, degree)).dump());
  });
}

jt_status jt_classify_json(const jt_model* model, const jt_form* form, char** out) {
  return guarded([&] {
    require(model, "model");
    require(form, "ell");
    require(out, "out");
    Json j{{"ell", form->form.to_string()}};
    j.update(to_json(classify_linear_form(form->form, perazzo_of(model))));
    *out = duplicate(j.dump());
  });
}

jt_status jt_predict_json(const jt_model* model, const jt_form* form, char** out) {
  return guarded([&] {
    require(model, "model");
    require(form, "ell");
    require(out, "out");
    const auto& params = perazzo_of(model);
    auto c = classify_linear_form(form->form, params);
    Json j{{"ell", form->form.to_string()}};
    j.update(to_json(c));
    j["predicted"] = to_json(predicted_jordan(c, params, form->form, model->model.field()));
    *out = duplicate(j.dump());
  });
}

jt_status jt_chain_json(const char* params, const char* partition, char** out) {
  return guarded([&] {
    require(params, "perazzo");
    require(out, "out");
    auto p = PerazzoParams::parse(params);
    Json j = chain_json(p);
    if (partition) {
      auto q = Partition::parse(partition);
      if (q.total() != perazzo_dim(p))
        fail(Errc::incomparable, "partition: sums to " + std::to_string(q.total()) + ", dim A_F is " +
                                     std::to_string(perazzo_dim(p)));
      Json query = to_json(q);
      query["position"] = to_json(chain_position(q, p));
      query["versus_maximum"] = to_string(dominance_compare(q, case_ii_partition(p)));
      j["query"] = query;
    }
    *out = duplicate(j.dump());
  });
}

jt_status jt_dominance(const char* p, const char* q, int* order) {
  return guarded([&] {
    require(p, "p");
    require(q, "q");
    require(order, "order");
    switch (dominance_compare(Partition::parse(p), Partition::parse(q))) {
      case Dominance::less: *order = -1; break;
      case Dominance::equal: *order = 0; break;
      case Dominance::greater: *order = 1; break;
      case Dominance::incomparable: *order = 2; break;
    }
  });
}

jt_status jt_verify_json(const char* params, const char* field, const jt_verify_options* options, char** out,
                         int* passed) {
  return guarded([&] {
    require(params, "perazzo");
    require(out, "out");
    VerifyOptions o;
    if (options) {
      o.samples = options->samples;
      o.seed = options->seed;
      o.mode = options->mode == JT_VERIFY_ENUMERATE ? VerifyMode::enumerate : VerifyMode::sample;
      o.threads = options->threads;
      o.keep_samples = options->keep_samples != 0;
    }
    auto report = verify_full_perazzo(PerazzoParams::parse(params), field_of(field), o);
    if (passed) *passed = report.summary.passed() ? 1 : 0;
    *out = duplicate(report_to_json(report, -1));
  });
}

}  // extern "C"
