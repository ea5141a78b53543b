#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(LUCASKIT_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("cli binom") {
  const auto ext = run_cli("binom 15683463 10824637 --mod 251 --method extended");
  CHECK(ext.exit_code == 0);
  CHECK(ext.out ==
        "111\n"
        "factors: -C(79,2) * +C(45,15) * -C(31,11)\n"
        "residues: 182 * 27 * 25\n");
  const auto plain = run_cli("binom 5 0 --mod 7");
  CHECK(plain.exit_code == 0);
  CHECK(plain.out == "1\n");
  const auto m101 = run_cli("binom 87 40 --mod 101 --method extended");
  CHECK(m101.exit_code == 0);
  CHECK(m101.out.substr(0, 3) == "40\n");
}

TEST_CASE("cli exit codes: 2 for a bad modulus, 3 for a size violation") {
  CHECK(run_cli("binom 10 2 --mod 15").exit_code == 2);
  CHECK(run_cli("binom 300 2 --mod 251 --method table").exit_code == 3);
  CHECK(run_cli("triangle --mod 1013").exit_code == 3);
  CHECK(run_cli("reduce 10 2 --mod 7").exit_code == 3);  // m >= p
}

TEST_CASE("cli reduce") {
  const auto traced = run_cli("reduce 33 20 --mod 37 --trace");
  CHECK(traced.exit_code == 0);
  CHECK(traced.out ==
        "S0: +C(33,13)\n"
        "S1: +C(23,3)\n"
        "S2: -C(16,3)\n"
        "-C(16,3) = 32 (mod 37)\n");
  CHECK(run_cli("reduce 5 2 --mod 13").out == "+C(5,2) = 10 (mod 13)\n");
  CHECK(run_cli("reduce 248 171 --mod 251").out == "-C(79,2) = 182 (mod 251)\n");
}

TEST_CASE("cli region") {
  CHECK(run_cli("region 33 13 --mod 37").out == "C\n");
  CHECK(run_cli("region 23 3 --mod 37").out == "B\n");
  CHECK(run_cli("region 0 0 --mod 11").out == "A (on S0)\n");
}

TEST_CASE("cli triangle csv") {
  CHECK(run_cli("triangle --mod 2 --format csv").out == "1\n1,1\n");
  const auto seven = run_cli("triangle --mod 7 --format csv");
  CHECK(seven.out.find("1,4,6,4,1\n") != std::string::npos);
}

TEST_CASE("cli verify sweeps and the failure exit code") {
  const auto ident = run_cli("verify identity thm31 --n 0..20");
  CHECK(ident.exit_code == 0);
  std::size_t lines = 0;
  for (char c : ident.out) lines += c == '\n';
  CHECK(lines == 21);
  CHECK(ident.out.find("FAIL") == std::string::npos);

  const auto cong = run_cli("verify congruence thm41 --prime 7 --s 2");
  CHECK(cong.exit_code == 0);
  CHECK(cong.out == "PASS thm41 p=7 s=2 lhs=2 rhs=2\n");

  const auto skipped = run_cli("verify congruence thm43 --prime 5");
  CHECK(skipped.out.find("case-table skipped") != std::string::npos);
}

TEST_CASE("cli bench is deterministic apart from timings") {
  const auto a = run_cli("bench --mod 3 --count 10 --bits 8 --seed 1");
  CHECK(a.exit_code == 0);
  CHECK(a.out.find("agreement: OK") != std::string::npos);
  CHECK(a.out.find("factors with top >= p: 0") != std::string::npos);
}

TEST_CASE("LUCASKIT_MAX_PRIME caps the table paths") {
  // popen goes through /bin/sh, so an env prefix works
  const std::string cmd = "LUCASKIT_MAX_PRIME=10 " + std::string(LUCASKIT_CLI_PATH) +
                          " binom 5 2 --mod 13 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 256> buf{};
  while (fread(buf.data(), 1, buf.size(), pipe) > 0) {
  }
  const int status = pclose(pipe);
  CHECK(WIFEXITED(status));
  CHECK(WEXITSTATUS(status) == 3);
}
