#ifndef WSI_JSON_IO_HPP
#define WSI_JSON_IO_HPP

#include <json.hpp>

#include <string>

#include "wsi/interp.hpp"

namespace wsi {

using Json = nlohmann::ordered_json;

// {"type":"A","rank":n} | {"type":"B","rank":2} |
// {"rank":n,"base_roots":[[..]],"S_num":[[..]],"S_den":d}
RootSystemPtr root_system_from_json(const Json& j);

struct ProblemSpec {
  SparseRepresentation rep;
  size_t r = 0;                // defaults to the term count
  long xi0 = 0;                // 0 = per-system default (Chebyshev bases)
  Rational xi = 0;             // 0 = default (monomial basis)
  mpfr_prec_t precision_bits = 0;  // 0 = default (WSI_BITS or 256)
  Json system_json;            // as parsed, for reserialization
};

ProblemSpec parse_problem_spec(const Json& j);
Json problem_spec_to_json(const ProblemSpec& spec);

Json terms_to_json(const SparseRepresentation& rep);

struct RunReport {
  Basis basis = Basis::monomial;
  SparseRepresentation recovered;
  bool match = false;
  long evaluations_used = 0;
  std::vector<std::vector<long>> gamma;
  Rational xi_used;
  mpfr_prec_t precision_used = 0;
  bool rank_retry = false;
  long wall_time_ms = -1;  // emitted only when >= 0
};

Json run_report_to_json(const RunReport& r);

}  // namespace wsi

#endif
