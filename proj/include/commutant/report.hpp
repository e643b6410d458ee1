#pragma once

#include <json.hpp>

#include <string>

#include "commutant/cache.hpp"
#include "commutant/closure.hpp"
#include "commutant/labels.hpp"
#include "commutant/serialize.hpp"

namespace commutant {

using Json = nlohmann::ordered_json;

inline Json chain_summary_json(const ChainSpec& chain) {
  Json j;
  j["name"] = chain.algebra().name();
  j["dimension"] = chain.algebra().dim();
  j["generators"] = chain.algebra().generators();
  Json sub = Json::array();
  for (int u : chain.subalgebra()) sub.push_back(chain.algebra().generators()[u]);
  j["subalgebra"] = sub;
  j["content_hash"] = hash_hex(chain_content_hash(chain));
  return j;
}

inline Json validation_json(const ValidationReport& rep,
                            const ChainSpec& chain) {
  Json j;
  j["passed"] = rep.passed;
  j["triples_checked"] = rep.triples_checked;
  Json fails = Json::array();
  for (const auto& t : rep.failing_triples) {
    Json names = Json::array();
    for (int v : t) names.push_back(chain.algebra().generators()[v]);
    fails.push_back(names);
  }
  j["failing_triples"] = fails;
  return j;
}

inline Json bidegree_set_json(const std::set<Bidegree>& bds) {
  Json a = Json::array();
  for (const auto& [s, c] : bds) a.push_back(Json::array({s, c}));
  return a;
}

inline Json commutant_json(const GradedCommutant& com, const ChainSpec& chain) {
  Json j;
  Json per = Json::array();
  for (const auto& d : com.diagnostics) {
    Json e;
    e["degree"] = d.degree;
    e["dimension"] = d.dimension;
    e["decomposable_rank"] = d.decomposable_rank;
    e["indecomposable_count"] = d.indecomposable_count;
    e["monomial_columns"] = d.columns;
    e["from_cache"] = d.from_cache;
    per.push_back(e);
  }
  j["per_degree"] = per;
  Json indec = Json::array();
  for (const auto& [k, list] : com.indecomposables) {
    for (const auto& p : list) {
      Json e;
      e["degree"] = k;
      e["grading"] = bidegree_set_json(bidegree_components(p, chain));
      e["polynomial"] = p.str(chain.algebra().generators());
      indec.push_back(e);
    }
  }
  j["indecomposables"] = indec;
  if (com.resource_failure) {
    j["resource_failure"] = {{"degree", com.resource_failure->first},
                             {"message", com.resource_failure->second}};
  }
  return j;
}

inline std::string generator_monomial_str(const GeneratorSet& gens,
                                          const GeneratorMonomial& e) {
  std::string s;
  for (std::size_t g = 0; g < e.size(); ++g) {
    if (!e[g]) continue;
    if (!s.empty()) s += "*";
    s += gens.entries[g].label;
    if (e[g] > 1) s += "^" + std::to_string(e[g]);
  }
  return s.empty() ? "1" : s;
}

inline Json generator_set_json(const GeneratorSet& gens,
                               const ChainSpec& chain) {
  Json a = Json::array();
  for (const auto& e : gens.entries) {
    Json g;
    g["label"] = e.label;
    g["degree"] = e.degree;
    g["central"] = e.is_central;
    g["algebra_central"] = e.is_algebra_central;
    g["grading"] = bidegree_set_json(bidegree_components(e.poly, chain));
    g["polynomial"] = e.poly.str(chain.algebra().generators());
    a.push_back(g);
  }
  return a;
}

inline Json closure_json(const StructureReport& rep, const ChainSpec& chain) {
  Json j;
  j["generators"] = generator_set_json(rep.generators, chain);
  Json rels = Json::array();
  for (const auto& r : rep.relations) {
    Json e;
    e["left"] = r.left;
    e["right"] = r.right;
    Json terms = Json::array();
    for (const auto& [mono, c] : r.expansion) {
      Json t;
      t["monomial"] = generator_monomial_str(rep.generators, mono);
      t["coefficient"] = c.str();
      terms.push_back(t);
    }
    e["expansion"] = terms;
    e["residual"] = r.residual.str(chain.algebra().generators());
    e["closes"] = r.residual.is_zero();
    e["max_total_degree"] = r.max_total_degree;
    e["max_noncentral_degree"] = r.max_noncentral_degree;
    rels.push_back(e);
  }
  j["relations"] = rels;
  Json nc = Json::array();
  for (const auto& [a, b] : rep.non_closing) nc.push_back(Json::array({a, b}));
  j["non_closing_pairs"] = nc;
  j["zero_rows"] = rep.zero_rows;
  return j;
}

inline Json label_counts_json(const LabelCounts& c) {
  Json j;
  j["dim_g"] = c.dim_g;
  j["rank_g"] = c.rank_g;
  j["dim_subalgebra"] = c.dim_sub;
  j["rank_subalgebra"] = c.rank_sub;
  j["common_casimirs_l0"] = c.common_casimirs;
  j["i0"] = c.i0;
  j["rho0"] = c.rho0;
  j["n0"] = c.n0;
  return j;
}

}  // namespace commutant
