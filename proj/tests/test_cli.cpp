#include <doctest.h>

#include "angelesco/cli.hpp"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using namespace angelesco;
using namespace angelesco::cli;

namespace {

int parse_code(std::vector<const char*> args) {
  args.insert(args.begin(), "angelesco");
  try {
    parse_args(static_cast<int>(args.size()), args.data());
    return 0;
  } catch (const UsageError& e) {
    return e.code();
  }
}

std::string cli_path() {
  const char* p = std::getenv("ANGELESCO_CLI");
  return p ? p : "";
}

// Runs the binary, returns (exit code, stdout).
std::pair<int, std::string> run(const std::string& args) {
  const std::string cmd = cli_path() + " " + args + " 2>/dev/null";
  std::string out;
  FILE* f = popen(cmd.c_str(), "r");
  REQUIRE(f != nullptr);
  std::array<char, 4096> buf{};
  std::size_t k;
  while ((k = fread(buf.data(), 1, buf.size(), f)) > 0) out.append(buf.data(), k);
  const int status = pclose(f);
  return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("cli: complex and ladder parsing") {
  PrecisionGuard g(30);
  CHECK(parse_complex("1+0.5i") == Complex(Real(1), Real(0.5)));
  CHECK(parse_complex("1,0.5") == Complex(Real(1), Real(0.5)));
  CHECK(parse_complex("-2i") == Complex(Real(0), Real(-2)));
  CHECK(parse_complex("1e-1-i") == Complex(Real(1) / 10, Real(-1)));
  CHECK(parse_complex("0") == Complex(0));
  CHECK(parse_ladder("16,64,256") == std::vector<unsigned long>{16, 64, 256});
  CHECK_THROWS_AS(parse_ladder("16,8"), UsageError);
  CHECK_THROWS_AS(parse_ladder("16,x"), UsageError);
}

TEST_CASE("cli: argument validation") {
  CHECK(parse_code({"mop", "--n", "4", "--a", "-1", "--digits", "160"}) == 0);
  CHECK(parse_code({"equilibrium", "--a", "0.5"}) == kExitUsage);
  CHECK(parse_code({"mehler-heine", "--tau", "0", "--ladder", "16,64,256", "--z", "0"}) == 0);
  CHECK(parse_code({"mop", "--n", "4", "--a", "-1", "--bogus"}) == kExitUsage);
  CHECK(parse_code({"mop", "--n", "four", "--a", "-1"}) == kExitUsage);
  CHECK(parse_code({"curve", "--a", "-2", "--digits", "10"}) == kExitUsage);
  CHECK(parse_code({"curve", "--a", "-2", "--format", "xml"}) == kExitUsage);
  CHECK(parse_code({"q-eval", "--beta", "-1"}) == kExitUsage);
  CHECK(parse_code({"--help"}) == kExitOk);
}

TEST_CASE("cli: config fields") {
  std::vector<const char*> a{"angelesco", "mop", "--n", "3", "--n2", "2", "--a", "-0.25", "--alpha", "1/2"};
  const auto cfg = parse_args(static_cast<int>(a.size()), a.data());
  CHECK(cfg.subcommand == "mop");
  CHECK(cfg.n == 3);
  CHECK(cfg.n2 == 2);
  CHECK(cfg.params.a == Rational(-1, 4));
  CHECK(cfg.params.alpha == Rational(1, 2));
}

TEST_CASE("cli: report rendering") {
  Report r;
  r.kind = "x";
  r.columns = {"n", "value"};
  CHECK(render_csv(r) == "n,value\n");
  r.rows = {{"1", "2.5e-01"}, {"2", "a,b"}};
  r.data["v"] = "1.25";
  CHECK(render_csv(r) == "n,value\n1,2.5e-01\n2,\"a,b\"\n");
  const Report back = report_from_json(render_json(r));
  CHECK(back.kind == r.kind);
  CHECK(back.rows == r.rows);
  CHECK(back.data == r.data);
  CHECK(render_json(back) == render_json(r));
}

TEST_CASE("cli: curve command through the run layer") {
  std::vector<const char*> a{"angelesco", "curve", "--a", "-2", "--digits", "40"};
  const auto rep = run_command(parse_args(static_cast<int>(a.size()), a.data()));
  CHECK(rep.pass);
  CHECK(rep.data["b"].get<std::string>().rfind("-1.587301587301587301587301587301587301587e-02", 0) == 0);
  // Numeric strings carry the requested digits.
  const std::string z = rep.data["zstar"].get<std::string>();
  CHECK(z.substr(0, z.find('e')).size() == 41);
}

TEST_CASE("cli: binary exit codes and determinism") {
  if (cli_path().empty()) return;
  const auto a = run("curve --a -2 --digits 30");
  CHECK(a.first == 0);
  CHECK(a.second.find("\"zstar\": \"4.33292801285898977859359254054e-03\"") != std::string::npos);
  CHECK(run("curve --a -2 --digits 30").second == a.second);
  CHECK(run("equilibrium --a 0.5").first == 2);
  CHECK(run("curve --a -2 --out /nonexistent-dir/x.json").first == 3);
  const auto mh = run("mehler-heine --tau 0 --z 0 --ladder 16,64 --format csv --digits 30");
  CHECK(mh.first == 0);
  CHECK(mh.second.rfind("n,lhs_re,lhs_im,rhs_re,rhs_im,ratio_minus_1,ratio_minus_1_sqrt_n\n16,", 0) == 0);
  const auto empty = run("mehler-heine --tau 0 --z 0 --ladder '' --format csv --digits 30");
  CHECK(empty.first == 0);
  CHECK(empty.second == "n,lhs_re,lhs_im,rhs_re,rhs_im,ratio_minus_1,ratio_minus_1_sqrt_n\n");
  const auto q = run("q-eval --z 1 --method both --digits 30");
  CHECK(q.first == 0);
  CHECK(q.second.find("4.7449325040935696809678285") != std::string::npos);
}
