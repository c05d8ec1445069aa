// JSON encodings of the public value types. Rationals cross the boundary
// as exact "p/q" strings, never as floats. Every emitter here has a
// matching parser so CLI output re-parses into the emitting type.

#pragma once

#include <json.hpp>

#include "klein/moment_fiber.hpp"
#include "klein/params.hpp"
#include "klein/preproj.hpp"
#include "klein/quiver.hpp"
#include "klein/roots.hpp"
#include "klein/weyl.hpp"
#include "klein/zalgebra.hpp"

namespace klein {

using Json = nlohmann::json;

// --- scalars ---

inline Json rat_to_json(const Rat& x) { return rat_str(x); }
inline Rat rat_from_json(const Json& j) { return parse_rat(j.get<std::string>()); }

inline Json rat_vec_to_json(const std::vector<Rat>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(rat_to_json(x));
  return a;
}
inline std::vector<Rat> rat_vec_from_json(const Json& j) {
  std::vector<Rat> v;
  for (const auto& e : j) v.push_back(rat_from_json(e));
  return v;
}

// --- quiver ---

inline Json to_json(const QuiverSpec& q) {
  Json arrows = Json::array();
  for (const auto& a : q.arrows)
    arrows.push_back({{"tail", a.tail}, {"head", a.head}, {"dual", a.dual}});
  return Json{{"type", q.type_label},
              {"vertices", q.vertex_count},
              {"extending", 0},
              {"arrows", arrows}};
}

inline QuiverSpec quiver_from_json(const Json& j) {
  QuiverSpec q;
  q.type_label = j.at("type").get<std::string>();
  q.vertex_count = j.at("vertices").get<int>();
  for (const auto& a : j.at("arrows")) {
    Arrow ar;
    ar.tail = a.at("tail").get<int>();
    ar.head = a.at("head").get<int>();
    ar.dual = a.at("dual").get<bool>();
    q.arrows.push_back(ar);
    if (ar.dual) q.doubled = true;
  }
  return q;
}

// --- roots ---

inline Json to_json(const Root& r) {
  return Json{{"coords", r.coords},
              {"real", r.is_real},
              {"dynkin", r.is_dynkin},
              {"positive", r.is_positive}};
}

inline Root root_from_json(const Json& j) {
  Root r;
  r.coords = j.at("coords").get<IntVec>();
  r.is_real = j.at("real").get<bool>();
  r.is_dynkin = j.at("dynkin").get<bool>();
  r.is_positive = j.at("positive").get<bool>();
  return r;
}

inline Json roots_to_json(const std::vector<Root>& roots) {
  Json a = Json::array();
  for (const auto& r : roots) a.push_back(to_json(r));
  return a;
}

inline std::vector<Root> roots_from_json(const Json& j) {
  std::vector<Root> out;
  for (const auto& e : j) out.push_back(root_from_json(e));
  return out;
}

inline std::string weight_class_name(WeightClass w) {
  switch (w) {
    case WeightClass::NotInLambda: return "not_in_lambda";
    case WeightClass::LambdaOnly: return "lambda";
    case WeightClass::LambdaPlus: return "lambda_plus";
    case WeightClass::LambdaPlusPlus: return "lambda_plus_plus";
  }
  return "?";
}

inline WeightClass weight_class_from_name(const std::string& s) {
  if (s == "not_in_lambda") return WeightClass::NotInLambda;
  if (s == "lambda") return WeightClass::LambdaOnly;
  if (s == "lambda_plus") return WeightClass::LambdaPlus;
  if (s == "lambda_plus_plus") return WeightClass::LambdaPlusPlus;
  throw std::invalid_argument("unknown weight class '" + s + "'");
}

// --- parameters ---

inline Json to_json(const ParamVector& p) {
  Json j{{"re", rat_vec_to_json(p.re)}};
  if (!p.is_real()) j["im"] = rat_vec_to_json(p.im);
  return j;
}

inline ParamVector param_from_json(const Json& j) {
  std::vector<Rat> re = rat_vec_from_json(j.at("re"));
  if (j.contains("im")) return {std::move(re), rat_vec_from_json(j.at("im"))};
  return ParamVector(std::move(re));
}

inline Json to_json(const ParamReport& r) {
  return Json{{"regular", r.regular},
              {"no_findim", r.no_findim},
              {"dominant", r.dominant},
              {"simple_dims", std::vector<Int>(r.simple_dims.begin(),
                                               r.simple_dims.end())},
              {"annihilated_roots", roots_to_json(r.annihilated)}};
}

inline ParamReport param_report_from_json(const Json& j) {
  ParamReport r;
  r.regular = j.at("regular").get<bool>();
  r.no_findim = j.at("no_findim").get<bool>();
  r.dominant = j.at("dominant").get<bool>();
  for (Int d : j.at("simple_dims").get<std::vector<Int>>()) r.simple_dims.insert(d);
  r.annihilated = roots_from_json(j.at("annihilated_roots"));
  return r;
}

// --- Weyl words ---

inline Json to_json(const WeylWord& w) {
  return Json{{"automorphism", w.automorphism}, {"reflections", w.reflections}};
}

inline WeylWord word_from_json(const Json& j) {
  WeylWord w;
  w.automorphism = j.at("automorphism").get<std::vector<int>>();
  w.reflections = j.at("reflections").get<std::vector<int>>();
  return w;
}

inline Json to_json(const TranslationWord& t) {
  Json j = to_json(t.word);
  j["verified"] = t.verified;
  j["walk_steps"] = t.walk_steps;
  return j;
}

inline TranslationWord translation_from_json(const Json& j) {
  TranslationWord t;
  t.word = word_from_json(j);
  t.verified = j.at("verified").get<bool>();
  t.walk_steps = j.at("walk_steps").get<int>();
  return t;
}

// --- moment fiber reports ---

inline Json witness_to_json(const std::optional<BidegreeWitness>& w) {
  if (!w) return nullptr;
  return Json{{"degree", w->degree}, {"monomial", w->monomial}};
}

inline std::optional<BidegreeWitness> witness_from_json(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return BidegreeWitness{j.at("degree").get<int>(),
                         j.at("monomial").get<std::string>()};
}

inline Json to_json(const MultSurjReport& r) {
  return Json{{"m", r.m},
              {"k", r.k},
              {"dmax", r.d_max},
              {"surjective", r.surjective},
              {"first_failure", witness_to_json(r.first_failure)}};
}

inline MultSurjReport mult_report_from_json(const Json& j) {
  MultSurjReport r;
  r.m = j.at("m").get<Int>();
  r.k = j.at("k").get<Int>();
  r.d_max = j.at("dmax").get<int>();
  r.surjective = j.at("surjective").get<bool>();
  r.first_failure = witness_from_json(j.at("first_failure"));
  return r;
}

inline Json to_json(const MultScanReport& r) {
  Json pairs = Json::array();
  for (const auto& p : r.pair_reports) pairs.push_back(to_json(p));
  return Json{{"mn_max", r.mn_max},
              {"dmax", r.d_max},
              {"minimal_passing_N", r.minimal_passing_n},
              {"pairs", pairs}};
}

inline MultScanReport mult_scan_from_json(const Json& j) {
  MultScanReport r;
  r.mn_max = j.at("mn_max").get<int>();
  r.d_max = j.at("dmax").get<int>();
  r.minimal_passing_n = j.at("minimal_passing_N").get<int>();
  for (const auto& p : j.at("pairs")) r.pair_reports.push_back(mult_report_from_json(p));
  return r;
}

inline Json to_json(const PowerReport& r) {
  return Json{{"N", r.n_power},
              {"jmax", r.j_max},
              {"dmax", r.d_max},
              {"holds", r.holds},
              {"first_failing_j", r.first_failing_j},
              {"first_failure", witness_to_json(r.first_failure)},
              {"minimal_passing_N", r.minimal_passing_n}};
}

inline PowerReport power_report_from_json(const Json& j) {
  PowerReport r;
  r.n_power = j.at("N").get<Int>();
  r.j_max = j.at("jmax").get<int>();
  r.d_max = j.at("dmax").get<int>();
  r.holds = j.at("holds").get<bool>();
  r.first_failing_j = j.at("first_failing_j").get<int>();
  r.first_failure = witness_from_json(j.at("first_failure"));
  r.minimal_passing_n = j.at("minimal_passing_N").get<int>();
  return r;
}

inline Json to_json(const KleinianReport& r) {
  return Json{{"n", r.n},
              {"dmax", r.d_max},
              {"product_relation", r.product_relation},
              {"invariants_spanned", r.invariants_spanned},
              {"first_failure", witness_to_json(r.first_failure)}};
}

inline KleinianReport kleinian_from_json(const Json& j) {
  KleinianReport r;
  r.n = j.at("n").get<int>();
  r.d_max = j.at("dmax").get<int>();
  r.product_relation = j.at("product_relation").get<bool>();
  r.invariants_spanned = j.at("invariants_spanned").get<bool>();
  r.first_failure = witness_from_json(j.at("first_failure"));
  return r;
}

// --- filtration tables ---

inline Json to_json(const FiltrationTable& t) {
  Json blocks = Json::array();
  for (int i = 0; i < t.vertex_count; ++i)
    for (int j = 0; j < t.vertex_count; ++j)
      if (t.has_block(i, j))
        blocks.push_back(
            Json{{"target", i}, {"source", j}, {"dims", t.dims[i][j]}});
  return Json{{"vertices", t.vertex_count},
              {"L", t.max_length},
              {"buffer", t.buffer},
              {"blocks", blocks}};
}

inline FiltrationTable filtration_from_json(const Json& j) {
  FiltrationTable t;
  t.vertex_count = j.at("vertices").get<int>();
  t.max_length = j.at("L").get<int>();
  t.buffer = j.at("buffer").get<int>();
  t.dims.assign(t.vertex_count,
                std::vector<std::vector<Int>>(t.vertex_count));
  for (const auto& b : j.at("blocks"))
    t.dims[b.at("target").get<int>()][b.at("source").get<int>()] =
        b.at("dims").get<std::vector<Int>>();
  return t;
}

// --- Z-algebra reports ---

struct ZalgCheckReport {
  bool associative = false;
  std::string morita_ii;
  bool vacuous = false;
  std::vector<std::string> witnesses;
};

inline Json to_json(const ZalgCheckReport& r) {
  return Json{{"associative", r.associative},
              {"morita_ii", r.morita_ii},
              {"vacuous", r.vacuous},
              {"witnesses", r.witnesses}};
}

inline ZalgCheckReport zalg_report_from_json(const Json& j) {
  ZalgCheckReport r;
  r.associative = j.at("associative").get<bool>();
  r.morita_ii = j.at("morita_ii").get<std::string>();
  r.vacuous = j.at("vacuous").get<bool>();
  r.witnesses = j.at("witnesses").get<std::vector<std::string>>();
  return r;
}

}  // namespace klein
