#include "serialize.hpp"

#include "jtype/binomial.hpp"

namespace jtype {

Json to_json(const Partition& p) {
  return Json{{"parts", p.parts()}, {"notation", p.to_string()}};
}

Json to_json(const JordanDegreeType& s) {
  Json entries = Json::array();
  for (const auto& [length, degree] : s.entries()) entries.push_back(Json::array({length, degree}));
  return Json{{"entries", entries}, {"notation", s.to_string()}};
}

Json to_json(const HVector& h) { return Json{{"values", h.values}, {"notation", h.to_string()}, {"sum", h.sum()}}; }

Json to_json(const HfStats& stats) {
  Json j{{"sperner", stats.sperner}, {"unimodal", stats.unimodal}, {"symmetric", stats.symmetric}};
  j["compressed"] = stats.compressed ? Json(*stats.compressed) : Json(nullptr);
  return j;
}

Json to_json(const PerazzoParams& params) {
  return Json{{"m", params.m}, {"d", params.d}, {"n_plus_1", params.n_plus_1()}};
}

Json to_json(const TheoremCase& c) {
  Json j{{"case", to_string(c.tag)}};
  j["witness"] = c.witness ? Json(*c.witness) : Json(nullptr);
  j["literal_match"] = c.literal_match;
  return j;
}

Json to_json(const PredictedJordan& p) {
  Json j{{"partition", to_json(p.partition)}};
  j["jdt"] = p.jdt ? to_json(*p.jdt) : Json(nullptr);
  j["a"] = p.a ? Json(*p.a) : Json(nullptr);
  return j;
}

Json to_json(const LefschetzResult& l) { return Json{{"weak", l.weak}, {"strong", l.strong}}; }

Json to_json(const AnnBasis& basis) {
  Json gens = Json::array();
  for (const auto& g : basis.generators) gens.push_back(g.to_string());
  return Json{{"degree", basis.degree}, {"dimension", basis.generators.size()}, {"generators", gens}};
}

Json to_json(const ChainPosition& pos) {
  Json j{{"in_chain", pos.in_chain}};
  j["case"] = pos.tag ? Json(to_string(*pos.tag)) : Json(nullptr);
  j["a"] = pos.a ? Json(*pos.a) : Json(nullptr);
  return j;
}

Json chain_json(const PerazzoParams& params) {
  auto bounds = a_bounds(params);
  Json chain = Json::array();
  for (std::size_t a = bounds.a_min; a <= bounds.a_max; ++a) {
    Json member = to_json(case_iii_partition(params, a));
    member["case"] = "CASE_III";
    member["a"] = a;
    chain.push_back(member);
  }
  Json one = to_json(case_i_partition(params));
  one["case"] = "CASE_I";
  chain.push_back(one);
  Json two = to_json(case_ii_partition(params));
  two["case"] = "CASE_II";
  chain.push_back(two);
  return Json{{"a_min", bounds.a_min},
              {"a_max", bounds.a_max},
              {"minimum", to_json(case_iii_partition(params, bounds.a_min))},
              {"maximum", to_json(case_ii_partition(params))},
              {"generic_part_count", generic_part_count(params)},
              {"chain", chain}};
}

}  // namespace jtype
