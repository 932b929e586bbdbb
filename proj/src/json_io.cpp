#include "wsi/json_io.hpp"

namespace wsi {

RootSystemPtr root_system_from_json(const Json& j) {
  if (j.contains("type")) {
    std::string type = j.at("type").get<std::string>();
    size_t rank = j.at("rank").get<size_t>();
    return RootSystem::make_named(type, rank);
  }
  CustomSystemData data;
  data.rank = j.at("rank").get<size_t>();
  for (const auto& row : j.at("base_roots"))
    data.base_roots.push_back(row.get<std::vector<long>>());
  long den = j.at("S_den").get<long>();
  for (const auto& row : j.at("S_num")) {
    std::vector<Rational> r;
    for (const auto& v : row) r.push_back(make_rational(v.get<long>(), den));
    data.S.push_back(std::move(r));
  }
  return RootSystem::make_custom(data);
}

ProblemSpec parse_problem_spec(const Json& j) {
  ProblemSpec spec;
  spec.rep.basis = basis_from_name(j.at("basis").get<std::string>());
  if (j.contains("root_system")) {
    spec.system_json = j.at("root_system");
    spec.rep.rs = root_system_from_json(spec.system_json);
  } else if (spec.rep.basis != Basis::monomial) {
    throw std::invalid_argument("Chebyshev bases need a root_system");
  }
  for (const auto& t : j.at("terms")) {
    Rational c = parse_rational(t.at("coeff").get<std::string>());
    Weight w = t.at("weight").get<std::vector<long>>();
    spec.rep.terms.emplace_back(c, w);
  }
  if (spec.rep.terms.empty()) throw std::invalid_argument("no terms in spec");
  size_t n = spec.rep.rs ? spec.rep.rs->rank() : spec.rep.terms.front().second.size();
  for (const auto& [c, w] : spec.rep.terms)
    if (w.size() != n) throw std::invalid_argument("weight length mismatch");
  spec.rep.validate();
  spec.r = j.value("r", spec.rep.terms.size());
  if (spec.r < spec.rep.terms.size())
    throw std::invalid_argument("r below the number of terms");
  spec.xi0 = j.value("xi0", 0L);
  if (j.contains("xi")) spec.xi = parse_rational(j.at("xi").get<std::string>());
  spec.precision_bits = j.value("precision_bits", 0);  // 0 = use the default
  return spec;
}

Json terms_to_json(const SparseRepresentation& rep) {
  Json arr = Json::array();
  for (const auto& [c, w] : rep.terms) {
    Json t;
    t["coeff"] = rational_to_string(c);
    t["weight"] = w;
    arr.push_back(std::move(t));
  }
  return arr;
}

Json problem_spec_to_json(const ProblemSpec& spec) {
  Json j;
  if (!spec.system_json.is_null()) j["root_system"] = spec.system_json;
  j["basis"] = basis_name(spec.rep.basis);
  j["terms"] = terms_to_json(spec.rep);
  j["r"] = spec.r;
  if (spec.xi0 != 0) j["xi0"] = spec.xi0;
  if (spec.xi != 0) j["xi"] = rational_to_string(spec.xi);
  if (spec.precision_bits != 0) j["precision_bits"] = static_cast<long>(spec.precision_bits);
  return j;
}

Json run_report_to_json(const RunReport& r) {
  Json j;
  j["basis"] = basis_name(r.basis);
  j["recovered"] = terms_to_json(r.recovered);
  j["match"] = r.match;
  j["evaluations_used"] = r.evaluations_used;
  j["gamma"] = r.gamma;
  j["xi_used"] = rational_to_string(r.xi_used);
  j["precision_used"] = static_cast<long>(r.precision_used);
  j["rank_retry"] = r.rank_retry;
  if (r.wall_time_ms >= 0) j["wall_time_ms"] = r.wall_time_ms;
  return j;
}

}  // namespace wsi
