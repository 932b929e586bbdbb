#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "wsi/json_io.hpp"
#include "wsi/selftest.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitSelftest = 1;
constexpr int kExitUsage = 2;
constexpr int kExitRecovery = 3;

wsi::RootSystemPtr system_from_arg(const std::string& arg) {
  if (!arg.empty() && std::isalpha(static_cast<unsigned char>(arg[0])) &&
      arg.find('.') == std::string::npos) {
    std::string type(1, arg[0]);
    size_t rank = std::stoul(arg.substr(1));
    return wsi::RootSystem::make_named(type, rank);
  }
  std::ifstream in(arg);
  if (!in) throw std::invalid_argument("cannot open system file: " + arg);
  wsi::Json j = wsi::Json::parse(in);
  return wsi::root_system_from_json(j);
}

wsi::Weight parse_weight(const std::string& s) {
  wsi::Weight w;
  std::string cur;
  for (char c : s + ",") {
    if (c == ',') {
      if (cur.empty()) throw std::invalid_argument("bad weight: " + s);
      w.push_back(std::stol(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  return w;
}

mpfr_prec_t default_bits() {
  if (const char* env = std::getenv("WSI_BITS")) {
    long v = std::atol(env);
    if (v >= 64) return static_cast<mpfr_prec_t>(v);
  }
  return 256;
}

int cmd_interp(const std::string& spec_path, long xi0_flag, long bits_flag, bool timing) {
  wsi::ProblemSpec spec;
  try {
    std::ifstream in(spec_path);
    if (!in) throw std::invalid_argument("cannot open spec file: " + spec_path);
    spec = wsi::parse_problem_spec(wsi::Json::parse(in));
  } catch (const std::exception& e) {
    std::cerr << "spec error: " << e.what() << "\n";
    return kExitUsage;
  }

  mpfr_prec_t bits = spec.precision_bits ? spec.precision_bits : default_bits();
  if (bits_flag > 0) bits = static_cast<mpfr_prec_t>(bits_flag);

  try {
    wsi::BlackBox bb = wsi::blackbox_from(spec.rep);
    auto t0 = std::chrono::steady_clock::now();
    wsi::InterpResult res;
    wsi::Rational xi_used;
    if (spec.rep.basis == wsi::Basis::monomial) {
      wsi::Rational xi = spec.xi != 0 ? spec.xi : wsi::monomial_xi_default().xi;
      size_t n = spec.rep.terms.front().second.size();
      res = wsi::laurent_interpolate(spec.r, xi, bb, n, bits);
      xi_used = xi;
    } else {
      long xi0 = xi0_flag > 0 ? xi0_flag
                              : (spec.xi0 > 0 ? spec.xi0 : wsi::default_xi0(*spec.rep.rs));
      if (spec.rep.basis == wsi::Basis::cheb1)
        res = wsi::first_kind_interpolate(spec.rep.rs, spec.r, xi0, bb, bits);
      else
        res = wsi::second_kind_interpolate(spec.rep.rs, spec.r, xi0, bb, bits);
      xi_used = res.collected.xi.xi;
    }
    auto t1 = std::chrono::steady_clock::now();

    wsi::SparseRepresentation want = spec.rep;
    want.canonicalize();
    wsi::RunReport report;
    report.basis = spec.rep.basis;
    report.recovered = res.rep;
    report.match = res.rep.same_terms(want);
    report.evaluations_used = res.evaluations;
    report.gamma = res.gamma;
    report.xi_used = xi_used;
    report.precision_used = res.precision_used;
    report.rank_retry = res.rank_retry;
    if (timing)
      report.wall_time_ms =
          std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    std::cout << wsi::run_report_to_json(report).dump(2) << "\n";
    return kExitOk;
  } catch (const std::exception& e) {
    std::cerr << "recovery error: " << e.what() << "\n";
    return kExitRecovery;
  }
}

int cmd_cheb(const std::string& system, const std::string& kind, const std::string& weight) {
  auto rs = system_from_arg(system);
  wsi::Weight w = parse_weight(weight);
  if (w.size() != rs->rank()) throw std::invalid_argument("weight length mismatch");
  if (!wsi::is_dominant(w)) throw std::invalid_argument("weight must be dominant");
  wsi::DensePoly p = kind == "U" ? wsi::chebyshev_U(*rs, w) : wsi::chebyshev_T(*rs, w);
  std::cout << wsi::dense_to_string(*rs, p) << "\n";
  return kExitOk;
}

int cmd_sets(const std::string& system, size_t n_flag, const std::string& which,
             size_t r, bool plain) {
  wsi::IndexSet out;
  if (which == "hypercross" || which == "sum2" || which == "sum3") {
    size_t n = n_flag;
    if (n == 0 && !system.empty()) n = system_from_arg(system)->rank();
    if (n == 0) throw std::invalid_argument("need --n or --system for this set");
    wsi::IndexSet h = wsi::hypercross(n, r);
    if (which == "hypercross")
      out = h;
    else if (which == "sum2")
      out = wsi::minkowski_sum(h, h);
    else
      out = wsi::minkowski_sum(wsi::minkowski_sum(h, h), wsi::hypercross(n, 2));
  } else {
    if (system.empty()) throw std::invalid_argument("need --system for this set");
    auto rs = system_from_arg(system);
    if (which == "wcross") {
      out = wsi::wcross(*rs, r, wsi::ComboKind::plain);
    } else if (which == "wcross-skew") {
      out = wsi::wcross(*rs, r, wsi::ComboKind::skew);
    } else if (which == "wcross-diff") {
      wsi::IndexSet wc = wsi::wcross(*rs, r, wsi::ComboKind::plain);
      wsi::IndexSet h = wsi::hypercross(rs->rank(), r);
      wsi::IndexSet s3 =
          wsi::minkowski_sum(wsi::minkowski_sum(h, h), wsi::hypercross(rs->rank(), 2));
      out.n = wc.n;
      out.r = wc.r;
      for (const auto& p : wc.points)
        if (!s3.contains(p)) out.points.insert(p);
    } else {
      throw std::invalid_argument("unknown set kind: " + which);
    }
  }
  if (plain) {
    for (const auto& p : out.points) {
      for (size_t i = 0; i < p.size(); ++i) std::cout << (i ? " " : "") << p[i];
      std::cout << "\n";
    }
  } else {
    wsi::Json arr = wsi::Json::array();
    for (const auto& p : out.points) arr.push_back(p);
    std::cout << arr.dump() << "\n";
  }
  return kExitOk;
}

int cmd_group(const std::string& system) {
  auto rs = system_from_arg(system);
  wsi::Json j;
  j["name"] = rs->name();
  j["rank"] = rs->rank();
  j["order"] = rs->group_order();
  j["D"] = rs->denominator();
  wsi::Json s = wsi::Json::array();
  for (const auto& row : rs->gram()) {
    wsi::Json r = wsi::Json::array();
    for (const auto& q : row) r.push_back(wsi::rational_to_string(q));
    s.push_back(std::move(r));
  }
  j["S"] = std::move(s);
  wsi::Json gens = wsi::Json::array();
  for (const auto& g : rs->generators()) gens.push_back(g.mat);
  j["generators"] = std::move(gens);
  j["base_roots"] = [&] {
    wsi::Json b = wsi::Json::array();
    for (const auto& r : rs->base_roots()) b.push_back(r);
    return b;
  }();
  std::cout << j.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sparse interpolation in monomial and generalized Chebyshev bases"};
  app.require_subcommand(1);

  auto* interp = app.add_subcommand("interp", "run an interpolation round trip from a spec file");
  std::string spec_path;
  long xi0_flag = 0, bits_flag = 0;
  bool timing = false;
  interp->add_option("--spec", spec_path, "problem spec (JSON)")->required();
  interp->add_option("--xi0", xi0_flag, "evaluation grid base override");
  interp->add_option("--bits", bits_flag, "working precision override");
  interp->add_flag("--timing", timing, "include wall_time_ms in the report");

  auto* cheb = app.add_subcommand("cheb", "print a generalized Chebyshev polynomial");
  std::string system, kind = "T", weight;
  cheb->add_option("--system", system, "root system (A1, A2, B2, A3, ... or JSON file)")
      ->required();
  cheb->add_option("--kind", kind, "T or U")->check(CLI::IsMember({"T", "U"}));
  cheb->add_option("--weight", weight, "dominant weight, comma separated")->required();

  auto* sets = app.add_subcommand("sets", "emit evaluation-index sets as JSON points");
  std::string sets_system, which = "hypercross";
  size_t n_flag = 0, r_arg = 1;
  bool plain = false;
  sets->add_option("--system", sets_system, "root system for wcross variants");
  sets->add_option("--n", n_flag, "dimension for hypercross/sum sets");
  sets->add_option("--which", which,
                   "hypercross|sum2|sum3|wcross|wcross-skew|wcross-diff");
  sets->add_option("--r", r_arg, "order")->required();
  sets->add_flag("--plain", plain, "whitespace separated points instead of JSON");

  auto* group = app.add_subcommand("group", "print Weyl group data");
  std::string group_system;
  group->add_option("--system", group_system, "root system")->required();

  auto* selftest = app.add_subcommand("selftest", "run the identity suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (interp->parsed()) return cmd_interp(spec_path, xi0_flag, bits_flag, timing);
    if (cheb->parsed()) return cmd_cheb(system, kind, weight);
    if (sets->parsed()) return cmd_sets(sets_system, n_flag, which, r_arg, plain);
    if (group->parsed()) return cmd_group(group_system);
    if (selftest->parsed()) return wsi::run_selftest(std::cout) == 0 ? kExitOk : kExitSelftest;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const wsi::Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRecovery;
  }
  return kExitUsage;
}
