// End-to-end checks of the command-line binary via subprocesses: output
// format, determinism, and the 0/1/2/3 exit-code contract.

#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return std::string((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
}

void put(const fs::path& p, const std::string& content) {
  std::ofstream out(p, std::ios::binary);
  out << content;
}

fs::path work_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() /
                 ("unimetric_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

RunResult run(const std::string& args) {
  static int counter = 0;
  const fs::path out = work_dir() / ("out" + std::to_string(counter));
  const fs::path err = work_dir() / ("err" + std::to_string(counter));
  ++counter;
  const std::string cmd = std::string("\"") + UNIMETRIC_CLI_PATH + "\" " +
                          args + " > " + out.string() + " 2> " + err.string();
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

std::vector<std::string> fields_of(const std::string& line) {
  std::vector<std::string> fields;
  std::istringstream in(line);
  std::string field;
  while (std::getline(in, field, ',')) fields.push_back(field);
  return fields;
}

}  // namespace

TEST_CASE("bare invocation and unknown flags exit 2, help exits 0") {
  CHECK(run("").code == 2);
  CHECK(run("--help").code == 0);
  CHECK(run("metrics --no-such-flag x.csv").code == 2);
  CHECK(run("frobnicate").code == 2);
}

TEST_CASE("metrics reports the analytic values for tiny files") {
  const fs::path anti = work_dir() / "antipodal.csv";
  put(anti, "1,0,0\n-1,0,0\n");
  RunResult r = run("metrics " + anti.string());
  REQUIRE(r.code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == "n,m,minus_lu,minus_w2");
  const auto fields = fields_of(lines[1]);
  REQUIRE(fields.size() == 4);
  CHECK(fields[0] == "2");
  CHECK(fields[1] == "3");
  CHECK(std::abs(std::stod(fields[2]) - 8.0) <= 1e-12);

  const fs::path constant = work_dir() / "constant.csv";
  put(constant, "1,0\n1,0\n1,0\n");
  r = run("metrics " + constant.string());
  REQUIRE(r.code == 0);
  const auto cfields = fields_of(lines_of(r.out)[1]);
  CHECK(std::abs(std::stod(cfields[3]) + std::sqrt(2.0)) <= 1e-12);
}

TEST_CASE("metrics honors the temperature flag") {
  const fs::path anti = work_dir() / "anti_t1.csv";
  put(anti, "2,0\n-2,0\n");
  const RunResult r = run("metrics --t 1 " + anti.string());
  REQUIRE(r.code == 0);
  CHECK(std::abs(std::stod(fields_of(lines_of(r.out)[1])[2]) - 4.0) <= 1e-12);
}

TEST_CASE("metrics adds alignment and spectrum columns on request") {
  const fs::path a = work_dir() / "pa.csv";
  const fs::path b = work_dir() / "pb.csv";
  put(a, "1,0\n0,1\n");
  put(b, "1,0\n0,-1\n");
  RunResult r = run("metrics --pairs " + b.string() + " " + a.string());
  REQUIRE(r.code == 0);
  auto lines = lines_of(r.out);
  CHECK(lines[0] == "n,m,minus_lu,minus_w2,alignment");
  // pair 0 identical, pair 1 antipodal: mean squared distance = (0+4)/2
  CHECK(std::abs(std::stod(fields_of(lines[1])[4]) - 2.0) <= 1e-12);

  r = run("metrics --spectrum " + a.string());
  REQUIRE(r.code == 0);
  lines = lines_of(r.out);
  CHECK(lines[0] == "n,m,minus_lu,minus_w2,lambda0,lambda1");
  CHECK(fields_of(lines[1]).size() == 6);

  const fs::path c = work_dir() / "pc.csv";
  put(c, "1,0\n0,1\n1,1\n");
  CHECK(run("metrics --pairs " + c.string() + " " + a.string()).code == 2);
}

TEST_CASE("metrics exit codes distinguish parse and zero-row failures") {
  const fs::path bad = work_dir() / "bad.csv";
  put(bad, "1,x,3\n");
  RunResult r = run("metrics " + bad.string());
  CHECK(r.code == 2);
  CHECK(r.err.find("line 1") != std::string::npos);

  const fs::path zero = work_dir() / "zero.csv";
  put(zero, "1,1\n0,0\n");
  r = run("metrics " + zero.string());
  CHECK(r.code == 3);
  CHECK(r.err.find("1") != std::string::npos);

  const fs::path single = work_dir() / "single.csv";
  put(single, "1,1\n");
  CHECK(run("metrics " + single.string()).code == 2);

  CHECK(run("metrics " + (work_dir() / "missing.csv").string()).code == 2);
}

TEST_CASE("synth writes the requested shape with masked tail") {
  const RunResult r = run("synth --n 3 --m 4 --eta 0.5");
  REQUIRE(r.code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 3);
  for (const auto& line : lines) {
    const auto fields = fields_of(line);
    REQUIRE(fields.size() == 4);
    CHECK(fields[2] == "0");
    CHECK(fields[3] == "0");
  }
}

TEST_CASE("synth is byte-deterministic and validates flags") {
  const fs::path f1 = work_dir() / "s1.csv";
  const fs::path f2 = work_dir() / "s2.csv";
  CHECK(run("synth --n 20 --m 6 --eta 0.3 --dist mixture --seed 99 -o " +
            f1.string())
            .code == 0);
  CHECK(run("synth --n 20 --m 6 --eta 0.3 --dist mixture --seed 99 -o " +
            f2.string())
            .code == 0);
  const std::string c1 = slurp(f1);
  CHECK(!c1.empty());
  CHECK(c1 == slurp(f2));

  CHECK(run("synth --n 3 --m 4 --eta 1.0").code == 2);
  CHECK(run("synth --n 0 --m 4").code == 2);
  CHECK(run("synth --n 3 --m 4 --dist nonsense").code == 2);
}

TEST_CASE("synth output feeds back into metrics") {
  const fs::path f = work_dir() / "pipe.csv";
  REQUIRE(run("synth --n 50 --m 8 --seed 5 -o " + f.string()).code == 0);
  const RunResult r = run("metrics " + f.string());
  CHECK(r.code == 0);
  const auto fields = fields_of(lines_of(r.out)[1]);
  CHECK(fields[0] == "50");
  CHECK(fields[1] == "8");
}

TEST_CASE("experiment writes a meta-headed table and self-checks") {
  const fs::path f = work_dir() / "t1.csv";
  const RunResult r =
      run("experiment table1 --trials 2 --n 64 --m 8 -o " + f.string());
  REQUIRE(r.code == 0);
  const auto lines = lines_of(slurp(f));
  std::size_t meta_lines = 0;
  while (meta_lines < lines.size() && lines[meta_lines].starts_with("#")) {
    ++meta_lines;
  }
  CHECK(meta_lines >= 4);  // name + trials + n + m at least
  CHECK(lines[meta_lines] == "property,metric,satisfied");
  CHECK(lines.size() == meta_lines + 1 + 10);
}

TEST_CASE("experiment accepts grid overrides and rejects bad invocations") {
  const fs::path f = work_dir() / "cs.csv";
  const RunResult r = run(
      "experiment collapse-sweep --etas 0 0.4 0.8 --m 32 --n 400 -o " +
      f.string());
  CHECK(r.code == 0);
  CHECK(slurp(f).find("eta,minus_lu,minus_w2") != std::string::npos);

  CHECK(run("experiment no-such-study").code == 2);
  CHECK(run("experiment table1 --bogus 3").code == 2);
  CHECK(run("experiment collapse-sweep --etas 2.0 --n 100 -o " +
            (work_dir() / "x.csv").string())
            .code == 2);
}

TEST_CASE("experiment exits 1 when an assertion fails") {
  // n < m makes the covariance rank-deficient at m=256: at least 156
  // eigenvalues are exactly zero, so w2 at m=256 exceeds w2 at m=16 by ~0.7
  // and the across-dimension spread check cannot hold
  const fs::path f = work_dir() / "fail.csv";
  const RunResult r = run(
      "experiment dimension-sweep --ms 16 256 --etas 0 --n 100 -o " +
      f.string());
  CHECK(r.code == 1);
  CHECK(!r.err.empty());
  CHECK(fs::exists(f));  // the table is still written before checking
}
