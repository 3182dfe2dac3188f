// Command-line front end over the jtype C API.
#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <type_traits>

#include "jtype/jtype.h"

using Json = nlohmann::ordered_json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_input = 1;
constexpr int exit_mismatch = 2;

// Input problem attributed to one field of the job.
struct InputError {
  std::string field;
  std::string message;
};

struct Job {
  std::optional<std::string> perazzo, vars, dual, ideal, ell, partition, field, mode, out;
  std::optional<int> bound, degree;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> samples;
  std::optional<unsigned> threads;
  std::string spec_file;
};

void check(jt_status st, const std::string& field) {
  if (st != JT_OK) throw InputError{field, std::string(jt_status_name(st)) + ": " + jt_last_error()};
}

struct ModelDeleter {
  void operator()(jt_model* m) const { jt_model_free(m); }
};
struct FormDeleter {
  void operator()(jt_form* f) const { jt_form_free(f); }
};
using ModelPtr = std::unique_ptr<jt_model, ModelDeleter>;
using FormPtr = std::unique_ptr<jt_form, FormDeleter>;

Json take_json(char* raw) {
  std::unique_ptr<char, void (*)(char*)> guard(raw, jt_string_free);
  return Json::parse(raw);
}

// Spec documents may spell structured values as objects: {"m": 2, "d": 3}.
std::string assignment_list(const Json& value, const std::string& field) {
  if (value.is_string()) return value.get<std::string>();
  if (!value.is_object()) throw InputError{field, "expected a string or an object"};
  std::string out;
  for (const auto& [key, v] : value.items()) {
    if (!out.empty()) out += ',';
    out += key + '=' + (v.is_string() ? v.get<std::string>() : v.dump());
  }
  return out;
}

std::string list_value(const Json& value, const std::string& field, char sep) {
  if (value.is_string()) return value.get<std::string>();
  if (!value.is_array()) throw InputError{field, "expected a string or an array"};
  std::string out;
  for (const auto& v : value) {
    if (!v.is_string()) throw InputError{field, "array entries must be strings"};
    if (!out.empty()) out += sep;
    out += v.get<std::string>();
  }
  return out;
}

template <class T>
void fill_number(std::optional<T>& slot, const Json& doc, const char* key) {
  if (slot || !doc.contains(key)) return;
  const auto& v = doc[key];
  if (!v.is_number_integer()) throw InputError{key, "expected an integer"};
  if (std::is_unsigned_v<T> && v.is_number_integer() && !v.is_number_unsigned() && v.get<long long>() < 0)
    throw InputError{key, "expected a non-negative integer"};
  slot = v.get<T>();
}

// Flags win over the document. A ResultRecord is accepted too: its job echo
// supplies the inputs and its result supplies the partition for `chain`.
void merge_spec(Job& job) {
  std::ifstream in(job.spec_file);
  if (!in) throw InputError{"spec", "cannot open '" + job.spec_file + "'"};
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError{"spec", e.what()};
  }
  if (!doc.is_object()) throw InputError{"spec", "expected a JSON object"};
  std::optional<std::string> record_partition;
  if (doc.contains("job") && doc.contains("version")) {
    const auto& result = doc["result"];
    if (result.is_object() && result.contains("partition") && result["partition"].is_object())
      record_partition = result["partition"].value("notation", "");
    doc = doc["job"];
  }
  auto fill = [&](std::optional<std::string>& slot, const char* key) {
    if (!slot && doc.contains(key)) slot = assignment_list(doc[key], key);
  };
  fill(job.perazzo, "perazzo");
  fill(job.ell, "ell");
  fill(job.field, "field");
  fill(job.mode, "mode");
  fill(job.out, "out");
  fill(job.dual, "dual");
  if (!job.vars && doc.contains("vars")) job.vars = list_value(doc["vars"], "vars", ',');
  if (!job.ideal && doc.contains("ideal")) job.ideal = list_value(doc["ideal"], "ideal", ';');
  if (!job.partition && doc.contains("partition")) {
    const auto& p = doc["partition"];
    if (p.is_array()) {
      std::string s;
      for (const auto& v : p) s += (s.empty() ? "" : ",") + v.dump();
      job.partition = s;
    } else {
      job.partition = assignment_list(p, "partition");
    }
  }
  if (!job.partition && record_partition && !record_partition->empty()) job.partition = record_partition;
  fill_number(job.bound, doc, "bound");
  fill_number(job.degree, doc, "degree");
  fill_number(job.seed, doc, "seed");
  fill_number(job.samples, doc, "samples");
  fill_number(job.threads, doc, "threads");
}

// Echo of the inputs that determine the result; thread count is left out so
// records do not depend on it.
Json echo(const Job& job, const std::string& command) {
  Json j = Json::object();
  auto put = [&](const char* key, const auto& slot) {
    if (slot) j[key] = *slot;
  };
  put("perazzo", job.perazzo);
  put("vars", job.vars);
  put("dual", job.dual);
  put("ideal", job.ideal);
  put("bound", job.bound);
  j["field"] = job.field.value_or("gfp:32003");
  put("ell", job.ell);
  put("degree", job.degree);
  put("partition", job.partition);
  if (command == "verify") {
    j["mode"] = job.mode.value_or("sample");
    j["seed"] = job.seed.value_or(1);
    j["samples"] = job.samples.value_or(500);
  }
  return j;
}

ModelPtr build_model(const Job& job) {
  int sources = (job.perazzo ? 1 : 0) + (job.dual ? 1 : 0) + (job.ideal ? 1 : 0);
  if (sources != 1) throw InputError{"source", "give exactly one of --perazzo, --dual, --ideal"};
  const char* field = job.field ? job.field->c_str() : nullptr;
  jt_model* raw = nullptr;
  if (job.perazzo) {
    auto st = jt_model_perazzo(job.perazzo->c_str(), field, &raw);
    check(st, st == JT_CHARACTERISTIC ? "field" : "perazzo");
  } else if (job.dual) {
    if (!job.vars) throw InputError{"vars", "--dual needs --vars"};
    auto st = jt_model_dual(job.vars->c_str(), job.dual->c_str(), field, &raw);
    check(st, st == JT_CHARACTERISTIC ? "field" : "dual");
  } else {
    if (!job.vars) throw InputError{"vars", "--ideal needs --vars"};
    if (!job.bound) throw InputError{"bound", "--ideal needs --bound"};
    auto st = jt_model_ideal(job.vars->c_str(), job.ideal->c_str(), *job.bound, field, &raw);
    check(st, st == JT_NOT_ARTINIAN ? "bound" : "ideal");
  }
  return ModelPtr(raw);
}

FormPtr build_form(const jt_model* model, const Job& job) {
  if (!job.ell) throw InputError{"ell", "this command needs --ell"};
  jt_form* raw = nullptr;
  check(jt_form_parse(model, job.ell->c_str(), &raw), "ell");
  return FormPtr(raw);
}

void flatten(const Json& j, const std::string& prefix, std::ostream& os) {
  if (j.is_object()) {
    for (const auto& [key, v] : j.items()) flatten(v, prefix.empty() ? key : prefix + "." + key, os);
  } else if (j.is_array() && std::all_of(j.begin(), j.end(), [](const Json& v) { return v.is_primitive(); })) {
    os << prefix << '\t';
    for (std::size_t i = 0; i < j.size(); ++i) os << (i ? "," : "") << (j[i].is_string() ? j[i].get<std::string>() : j[i].dump());
    os << '\n';
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "." + std::to_string(i), os);
  } else {
    os << prefix << '\t' << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

int run(const std::string& command, Job& job) {
  if (!job.spec_file.empty()) merge_spec(job);
  if (job.field) check(jt_field_check(job.field->c_str()), "field");
  const std::string out = job.out.value_or("tsv");
  if (out != "json" && out != "tsv") throw InputError{"out", "expected 'json' or 'tsv', got '" + out + "'"};

  Json result;
  int status = exit_ok;
  char* raw = nullptr;
  if (command == "chain") {
    if (!job.perazzo) throw InputError{"perazzo", "chain needs --perazzo"};
    if (job.partition) {
      int order = 0;
      check(jt_dominance(job.partition->c_str(), job.partition->c_str(), &order), "partition");
    }
    auto st = jt_chain_json(job.perazzo->c_str(), job.partition ? job.partition->c_str() : nullptr, &raw);
    check(st, st == JT_INCOMPARABLE ? "partition" : "perazzo");
    result = take_json(raw);
  } else if (command == "verify") {
    if (!job.perazzo) throw InputError{"perazzo", "verify needs --perazzo"};
    jt_verify_options options{job.samples.value_or(500), job.seed.value_or(1), JT_VERIFY_SAMPLE, job.threads.value_or(1), 1};
    const std::string mode = job.mode.value_or("sample");
    if (mode == "enumerate")
      options.mode = JT_VERIFY_ENUMERATE;
    else if (mode != "sample")
      throw InputError{"mode", "expected 'sample' or 'enumerate', got '" + mode + "'"};
    if (options.samples == 0) throw InputError{"samples", "must be positive"};
    int passed = 0;
    auto st = jt_verify_json(job.perazzo->c_str(), job.field ? job.field->c_str() : nullptr, &options, &raw, &passed);
    const char* blame = st == JT_CHARACTERISTIC ? "field" : st == JT_OUT_OF_RANGE || (st == JT_INVALID_ARGUMENT && mode == "enumerate") ? "mode" : "perazzo";
    check(st, blame);
    result = take_json(raw);
    if (!passed) status = exit_mismatch;
  } else {
    auto model = build_model(job);
    if (command == "hf") {
      check(jt_hf_json(model.get(), &raw), "model");
    } else if (command == "ann") {
      if (!job.degree) throw InputError{"degree", "ann needs --degree"};
      auto st = jt_ann_json(model.get(), *job.degree, &raw);
      check(st, st == JT_OUT_OF_RANGE ? "degree" : "source");
    } else {
      auto form = build_form(model.get(), job);
      jt_status st = JT_OK;
      if (command == "jordan" || command == "jdt")
        st = jt_jordan_json(model.get(), form.get(), &raw);
      else if (command == "classify")
        st = jt_classify_json(model.get(), form.get(), &raw);
      else
        st = jt_predict_json(model.get(), form.get(), &raw);
      check(st, st == JT_INVALID_ARGUMENT ? "source" : "ell");
    }
    result = take_json(raw);
    if (command == "jordan") {
      result.erase("jdt");
      result.erase("string_oracle_agrees");
    }
  }

  Json record{{"version", 1}, {"library_version", jt_version()}, {"command", command}, {"job", echo(job, command)},
              {"result", result}};
  if (out == "json") {
    std::cout << record.dump(2) << '\n';
  } else {
    if (command == "verify") record["result"].erase("samples");
    flatten(record, "", std::cout);
  }
  return status;
}

void add_job_options(CLI::App* sub, Job& job) {
  sub->add_option("--perazzo", job.perazzo, "Full Perazzo parameters, m=..,d=..");
  sub->add_option("--vars", job.vars, "Comma-separated variable names for --dual/--ideal");
  sub->add_option("--dual", job.dual, "Dual generator in the uppercase variables");
  sub->add_option("--ideal", job.ideal, "Ideal generators separated by ';'");
  sub->add_option("--bound", job.bound, "Degree by which the quotient must vanish");
  sub->add_option("--ell", job.ell, "Linear form, e.g. \"a[2,0]=1,b1=1\" or \"x=1,y=1\"");
  sub->add_option("--field", job.field, "gfp:P or q (default gfp:32003)");
  sub->add_option("--out", job.out, "json or tsv (default tsv)");
  sub->add_option("--seed", job.seed, "Sampling seed (default 1)");
  sub->add_option("--samples", job.samples, "Samples per stream (default 500)");
  sub->add_option("--mode", job.mode, "sample or enumerate");
  sub->add_option("--threads", job.threads, "Worker threads for verify, 0 = all cores");
  sub->add_option("--degree", job.degree, "Degree for ann");
  sub->add_option("--partition", job.partition, "Partition for chain, e.g. (3^2,2^2,1^2)");
  sub->add_option("--spec", job.spec_file, "JSON job document or a previous result record");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jordan types of linear forms in Artinian algebras"};
  app.require_subcommand(1);
  app.set_version_flag("--version", jt_version());
  Job job;
  const char* commands[][2] = {{"hf", "Hilbert function and its statistics"},
                               {"jordan", "Jordan type of --ell"},
                               {"jdt", "Jordan degree type of --ell"},
                               {"ann", "Annihilator basis in --degree"},
                               {"classify", "Theorem case of --ell on a full Perazzo form"},
                               {"predict", "Predicted Jordan type of --ell on a full Perazzo form"},
                               {"verify", "Compare predictions with computed types"},
                               {"chain", "Dominance chain of possible types"}};
  for (auto& [name, help] : commands) add_job_options(app.add_subcommand(name, help), job);
  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_input;
  }
  try {
    return run(app.get_subcommands().front()->get_name(), job);
  } catch (const InputError& e) {
    std::cerr << "jtype: error in " << e.field << ": " << e.message << '\n';
    return exit_input;
  }
}
