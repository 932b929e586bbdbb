#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "wsi/json_io.hpp"

using namespace wsi;

namespace {

struct RunOutput {
  int code;
  std::string out;
};

RunOutput run(const std::string& args) {
  std::string cmd = std::string(WSI_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = std::string("/tmp/wsi_test_") + name;
  std::ofstream f(path);
  f << content;
  return path;
}

}  // namespace

TEST_CASE("cheb subcommand prints canonical tables") {
  auto r = run("cheb --system A2 --kind T --weight 1,1");
  CHECK(r.code == 0);
  CHECK(r.out == "1/4*X1*X2 - 3\n");
  r = run("cheb --system A2 --kind U --weight 1,1");
  CHECK(r.out == "1/4*X1*X2 - 1\n");
  r = run("cheb --system B2 --kind T --weight 0,0");
  CHECK(r.out == "8\n");
  r = run("cheb --system A2 --kind T --weight 1,-1");
  CHECK(r.code == 2);
}

TEST_CASE("sets subcommand") {
  auto r = run("sets --n 2 --which hypercross --r 2");
  CHECK(r.code == 0);
  CHECK(r.out == "[[0,0],[0,1],[1,0]]\n");
  r = run("sets --system B2 --which wcross-diff --r 6");
  CHECK(r.code == 0);
  CHECK(r.out != "[]\n");
  r = run("sets --system A2 --which wcross-diff --r 13");
  CHECK(r.out == "[]\n");
  r = run("sets --system A2 --which wcross --r 2 --plain");
  CHECK(r.out.find("0 0\n") != std::string::npos);
}

TEST_CASE("group subcommand") {
  auto r = run("group --system B2");
  CHECK(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j.at("order") == 8);
  CHECK(j.at("D") == 2);
  CHECK(j.at("S")[0][1] == "1/2");
}

TEST_CASE("interp subcommand round trips and is byte-stable") {
  std::string spec = R"({"root_system":{"type":"A","rank":2},"basis":"cheb1",
    "terms":[{"coeff":"2","weight":[2,1]},{"coeff":"5","weight":[1,3]}]})";
  std::string path = write_temp("spec_cheb1.json", spec);
  auto r1 = run("interp --spec " + path);
  CHECK(r1.code == 0);
  Json j = Json::parse(r1.out);
  CHECK(j.at("match") == true);
  CHECK(j.at("evaluations_used").get<long>() <= 10);
  CHECK_FALSE(j.contains("wall_time_ms"));

  auto r2 = run("interp --spec " + path);
  CHECK(r1.out == r2.out);

  // monomial with defaults
  std::string mono = R"({"basis":"monomial",
    "terms":[{"coeff":"5","weight":[2,-1]},{"coeff":"-3","weight":[-1,3]}]})";
  auto r3 = run("interp --spec " + write_temp("spec_mono.json", mono));
  CHECK(r3.code == 0);
  CHECK(Json::parse(r3.out).at("match") == true);

  // duplicate weights are a spec error
  std::string dup = R"({"basis":"monomial",
    "terms":[{"coeff":"5","weight":[1,0]},{"coeff":"3","weight":[1,0]}]})";
  CHECK(run("interp --spec " + write_temp("spec_dup.json", dup)).code == 2);

  CHECK(run("interp --spec /nonexistent.json").code == 2);
}

TEST_CASE("spec parsing round trip") {
  Json j = Json::parse(R"({"root_system":{"type":"B","rank":2},"basis":"cheb2",
    "terms":[{"coeff":"-7/3","weight":[2,0]}],"r":1,"xi0":145,"precision_bits":128})");
  ProblemSpec spec = parse_problem_spec(j);
  CHECK(spec.rep.basis == Basis::cheb2);
  CHECK(spec.rep.rs->group_order() == 8);
  CHECK(spec.rep.terms[0].first == make_rational(-7, 3));
  CHECK(spec.r == 1);
  CHECK(spec.xi0 == 145);
  CHECK(spec.precision_bits == 128);
  Json back = problem_spec_to_json(spec);
  CHECK(parse_problem_spec(back).rep.same_terms(spec.rep));

  CHECK_THROWS_AS(parse_problem_spec(Json::parse(R"({"basis":"cheb1","terms":[]})")),
                  std::invalid_argument);
}

TEST_CASE("malformed JSON is a usage error") {
  std::string path = write_temp("broken.json", "{not json");
  CHECK(run("group --system " + path).code == 2);
  CHECK(run("interp --spec " + path).code == 2);
}

TEST_CASE("custom system file") {
  std::string path = write_temp("custom_a2.json", R"({"rank":2,
    "base_roots":[[2,-1],[-1,2]],
    "S_num":[[2,1],[1,2]],"S_den":3})");
  auto r = run("group --system " + path);
  CHECK(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j.at("order") == 6);
  CHECK(j.at("D") == 3);
}

TEST_CASE("WSI_BITS overrides the default precision") {
  std::string spec = R"({"root_system":{"type":"A","rank":2},"basis":"cheb1",
    "terms":[{"coeff":"3","weight":[1,1]}]})";
  std::string path = write_temp("spec_bits.json", spec);
  auto r = run("interp --spec " + path);
  CHECK(Json::parse(r.out).at("precision_used") == 256);
  setenv("WSI_BITS", "512", 1);
  auto r2 = run("interp --spec " + path);
  unsetenv("WSI_BITS");
  CHECK(Json::parse(r2.out).at("precision_used") == 512);
}

TEST_CASE("selftest subcommand") {
  auto r = run("selftest");
  CHECK(r.code == 0);
  CHECK(r.out.find("[ok]   group-catalog") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
}
