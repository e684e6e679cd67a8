#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(SP6_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  while (size_t n = fread(buf.data(), 1, buf.size(), pipe)) r.output.append(buf.data(), n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("boundary as json") {
  RunResult r = run_cli("boundary --format json");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "{\"H\":[1,0,1,0,1,2,2,1,0,1,0,1]}\n");
}

TEST_CASE("kostant listing") {
  RunResult r = run_cli("kostant --parabolic a1");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("s12321") != std::string::npos);
  // Six data rows, the longest one last.
  size_t rows = 0, pos = 0;
  std::string last;
  while ((pos = r.output.find("\n| ", pos)) != std::string::npos) {
    ++rows;
    ++pos;
    last = r.output.substr(pos, r.output.find('\n', pos) - pos);
  }
  CHECK(rows == 6);
  CHECK(last.find("s12321") != std::string::npos);
}

TEST_CASE("weyl table prints all 48 rows") {
  RunResult r = run_cli("weyl-table --format csv");
  CHECK(r.exit_code == 0);
  size_t lines = 0;
  for (char c : r.output)
    if (c == '\n') ++lines;
  CHECK(lines == 49);  // header + 48
}

TEST_CASE("verify passes under the default policy") {
  RunResult r = run_cli("verify");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("FAIL") == std::string::npos);
  CHECK(r.output.find("all checks passed") != std::string::npos);
}

TEST_CASE("verify flags the plain-epsilon signs at q=6") {
  RunResult r = run_cli("verify --sign-policy pure-epsilon");
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("FAIL") != std::string::npos);
  CHECK(r.output.find("d1^{0,6}") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli("kostant").exit_code == 2);
  CHECK(run_cli("kostant --parabolic a9").exit_code == 2);
  CHECK(run_cli("no-such-command").exit_code == 2);
}

TEST_CASE("unknown facts exit 3 and name the offending pair") {
  RunResult r = run_cli("face --parabolic a1 --lambda 2 0 0");
  CHECK(r.exit_code == 3);
  CHECK(r.output.find("Sp4") != std::string::npos);
}

TEST_CASE("symbolic weights table") {
  RunResult r = run_cli("weights --parabolic a2 --symbolic");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("1/2 n1 + 1/2 n2 + n3 - 1/2") != std::string::npos);
}

TEST_CASE("evaluated weights at a nonzero highest weight") {
  // At (n1,n2,n3) = (1,2,3): row e gives (n1, n1/2+n2+n3, n3) = (1, 11/2, 3)
  // and row s2 gives (n1+n2+1, n1/2+n2/2+n3-1/2, n2+n3+1) = (4, 4, 6).
  RunResult r = run_cli("weights --parabolic a2 --lambda 1 2 3 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("e,1,11/2,3") != std::string::npos);
  CHECK(r.output.find("s2,4,4,6") != std::string::npos);
}

TEST_CASE("parity prints the surviving set") {
  RunResult r = run_cli("parity --parabolic a12");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("e s121 s232 s1213 s2132 s12321 s21323 s12132132") != std::string::npos);
}

TEST_CASE("a reference matrix outside the combinatorial support is rejected") {
  namespace fs = std::filesystem;
  fs::path src = fs::path(SP6_DEFAULT_DATA_DIR);
  fs::path tmp = fs::temp_directory_path() / "sp6_corrupt_data";
  fs::remove_all(tmp);
  fs::copy(src, tmp, fs::copy_options::recursive);

  // Place a unit at an unsupported position of the q=4 block.
  fs::path file = tmp / "fixtures" / "d1_matrices.json";
  std::ifstream in(file);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  in.close();
  const std::string before = "[\"0\", \"0\", \"0\"]]";  // the s2323 row at q=4
  auto pos = text.find(before);
  REQUIRE(pos != std::string::npos);
  text.replace(pos, before.size(), "[\"1\", \"0\", \"0\"]]");
  std::ofstream(file) << text;

  RunResult r = run_cli("--data-dir " + tmp.string() + " e1 --sign-policy paper-fixture");
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("support disagrees") != std::string::npos);
  fs::remove_all(tmp);
}
