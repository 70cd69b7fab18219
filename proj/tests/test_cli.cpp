#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "exinv/cli.hpp"

namespace {

struct CliRun {
  int code;
  std::string out, err;
};

CliRun run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = exinv::cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

int count_lines(const std::string& text) {
  int n = 0;
  for (char c : text) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("usage errors exit with 2") {
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"no-such-command"}).code == 2);
  CHECK(run_cli({"verify", "--suite", "nosuch"}).code == 2);
  CHECK(run_cli({"verify", "--algebra", "sedenion"}).code == 2);
  CHECK(run_cli({"scan-freeness", "--dim", "7"}).code == 2);
  CHECK(run_cli({"figure-data", "--point", "bogus"}).code == 2);
  CHECK(run_cli({"figure-data", "--point", "p=1,0,0;w=1,0,0"}).code == 2);
  CHECK(run_cli({"orbit", "--point", "p=1,0,0;w=0,0,0", "--k", "2..-2"}).code == 2);
  CHECK(run_cli({"gamma", "--dim", "7", "frobnicate"}).code == 2);
  CHECK(run_cli({"gamma", "--dim", "7", "add", "1"}).code == 2);
  CHECK(run_cli({"gamma", "--dim", "15", "census"}).code == 2);
  CHECK(run_cli({"help"}).code == 2);
  CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("verify emits one json line per case and exits 0 on pass") {
  const CliRun r = run_cli({"verify", "--suite", "gamma", "--samples", "50", "--seed", "7"});
  CHECK(r.code == 0);
  CHECK(count_lines(r.out) == 6);
  CHECK(r.out.find("\"suite\":\"gamma\"") != std::string::npos);
  CHECK(r.out.find("\"max_error\":0") != std::string::npos);
  CHECK(r.out.find("\"pass\":true") != std::string::npos);
  CHECK(r.out.find("\"seed\":7") != std::string::npos);
  CHECK(r.out.find("\"ms\":0") != std::string::npos);
  // frozen field order
  const std::string first = r.out.substr(0, r.out.find('\n'));
  CHECK(first.find("\"suite\"") < first.find("\"case\""));
  CHECK(first.find("\"case\"") < first.find("\"samples\""));
  CHECK(first.find("\"samples\"") < first.find("\"max_error\""));
  CHECK(first.find("\"max_error\"") < first.find("\"tol\""));
  CHECK(first.find("\"tol\"") < first.find("\"pass\""));
  CHECK(first.find("\"pass\"") < first.find("\"seed\""));
  CHECK(first.find("\"seed\"") < first.find("\"ms\""));
}

TEST_CASE("identical seeds give byte-identical reports; tol override forces failures") {
  const std::vector<std::string> args{"verify", "--suite", "involution", "--samples", "60",
                                      "--seed", "11"};
  const CliRun a = run_cli(args), b = run_cli(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const CliRun c = run_cli({"verify", "--suite", "involution", "--samples", "60", "--seed", "12"});
  CHECK(c.out != a.out);
  // an impossible tolerance turns the exit code into 1
  const CliRun d = run_cli({"verify", "--suite", "involution", "--samples", "60", "--seed", "11",
                            "--tol", "0"});
  CHECK(d.code == 1);
  CHECK(d.out.find("\"pass\":false") != std::string::npos);
  CHECK(d.out.find("\"tol\":0") != std::string::npos);
}

TEST_CASE("algebra filter trims the case list") {
  const CliRun both = run_cli({"verify", "--suite", "involution", "--samples", "40"});
  const CliRun quat = run_cli({"verify", "--suite", "involution", "--samples", "40",
                               "--algebra", "quat"});
  CHECK(both.code == 0);
  CHECK(quat.code == 0);
  CHECK(count_lines(both.out) == 4);
  CHECK(count_lines(quat.out) == 2);
  CHECK(quat.out.find("s14") == std::string::npos);
  // gamma cases are exact and survive any algebra filter
  const CliRun g = run_cli({"verify", "--suite", "gamma", "--algebra", "quat", "--samples", "10"});
  CHECK(count_lines(g.out) == 6);
}

TEST_CASE("human mode renders a table") {
  const CliRun r = run_cli({"verify", "--suite", "gamma", "--samples", "10", "--human"});
  CHECK(r.code == 0);
  CHECK(r.out.find("case") != std::string::npos);
  CHECK(r.out.find("6 cases, 0 failed") != std::string::npos);
}

TEST_CASE("figure-data reports the pictorial stages") {
  const CliRun pole = run_cli({"figure-data", "--point", "p=1,0,0;w=0,0,0"});
  CHECK(pole.code == 0);
  CHECK(pole.out.find("\"final_p\":[-1,0,0]") != std::string::npos);
  CHECK(pole.out.find("\"final_w\":[0,0,0]") != std::string::npos);
  const CliRun par = run_cli({"figure-data", "--point", "p=0.6,0,0;w=0.8,0,0"});
  CHECK(par.code == 0);
  CHECK(par.out.find("\"final_p\":[-0.6") != std::string::npos);
  CHECK(par.out.find("\"final_w\":[-0.8") != std::string::npos);
  const CliRun gen = run_cli({"figure-data", "--point", "p=0.5,0,0;w=0,0.8660254037844386,0"});
  CHECK(gen.code == 0);
  const auto pos = gen.out.find("\"max_deviation\":");
  REQUIRE(pos != std::string::npos);
  CHECK(std::stod(gen.out.substr(pos + 16)) < 1e-10);
}

TEST_CASE("orbit of a sigma-fixed point is constant") {
  const CliRun r = run_cli({"orbit", "--point", "p=0,0,0;w=1,0,0,0", "--k", "-2..2"});
  CHECK(r.code == 0);
  CHECK(count_lines(r.out) == 5);
  std::istringstream lines(r.out);
  std::string line;
  while (std::getline(lines, line)) {
    CHECK(line.find("\"p\":[0,0,0]") != std::string::npos);
    CHECK(line.find("\"w\":[1,0,0,0]") != std::string::npos);
  }
}

TEST_CASE("gamma calculators through the cli") {
  const CliRun census = run_cli({"gamma", "--dim", "7", "census"});
  CHECK(census.code == 0);
  CHECK(census.out.find("\"total_components\":56") != std::string::npos);
  CHECK(census.out.find("\"fixed_classes\":[0,14]") != std::string::npos);
  const CliRun thm2 = run_cli({"gamma", "--dim", "7", "solve-thm2"});
  CHECK(thm2.out.find("\"solutions\":[]") != std::string::npos);
  const CliRun thm215 = run_cli({"gamma", "--dim", "15", "solve-thm2"});
  CHECK(thm215.out.find("\"count\":0") != std::string::npos);
  const CliRun lemma = run_cli({"gamma", "--dim", "15", "lemma2"});
  CHECK(lemma.out.find("\"quotient_order\":4064") != std::string::npos);
  const CliRun amb = run_cli({"gamma", "--dim", "15", "A", "0,1"});
  CHECK(amb.out.find("\"determined\":false") != std::string::npos);
  CHECK(amb.out.find("\"alternate\":[4064,1]") != std::string::npos);
  const CliRun pinned = run_cli({"gamma", "--dim", "15", "--tau", "zero", "A", "0,1"});
  CHECK(pinned.out.find("\"determined\":true") != std::string::npos);
  const CliRun parity = run_cli({"gamma", "--dim", "7", "rho-class", "-1"});
  CHECK(parity.out.find("\"parity\":1") != std::string::npos);
  const CliRun add = run_cli({"gamma", "--dim", "7", "add", "20", "15"});
  CHECK(add.out.find("\"result\":7") != std::string::npos);
}

TEST_CASE("scan-freeness smoke run emits a scan result") {
  const CliRun r = run_cli({"scan-freeness", "--dim", "5", "--grid", "2000", "--refine", "40",
                            "--starts", "6", "--seed", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"dim\":5") != std::string::npos);
  const auto pos = r.out.find("\"min_displacement\":");
  REQUIRE(pos != std::string::npos);
  const double got = std::stod(r.out.substr(pos + 19));
  CHECK(got > 0.5);
  CHECK(got < 1.1);
  // deterministic per seed
  const CliRun again = run_cli({"scan-freeness", "--dim", "5", "--grid", "2000", "--refine", "40",
                                "--starts", "6", "--seed", "3"});
  CHECK(again.out == r.out);
}
