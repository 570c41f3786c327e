// CSV serialization: 17-digit round trip, strict parsing with 1-based line
// errors, table emission with meta headers, and atomic writes.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <doctest.h>

#include "unimetric/csv.hpp"

using namespace unimetric;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name)
      : path((std::filesystem::temp_directory_path() /
              ("unimetric_test_" + name))
                 .string()) {}
  ~TempFile() { std::remove(path.c_str()); }
};

void put(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
}

}  // namespace

TEST_CASE("doubles round-trip through their decimal form") {
  for (const double v : {0.1, 1.0 / 3.0, -2.5e-300, 1.7976931348623157e308,
                         0.0, -1.0, 123456789.123456789}) {
    CHECK(std::stod(format_double(v)) == v);
  }
}

TEST_CASE("embedding csv round trip is exact") {
  Eigen::MatrixXd X(3, 2);
  X << 0.1, 1.0 / 3.0, -7.25e-12, 2.0, 1e8, -0.0;
  const EmbeddingSet E(X);
  TempFile f("roundtrip.csv");
  put(f.path, embeddings_to_csv(E));
  const EmbeddingSet back = read_embeddings_csv(f.path);
  CHECK(back.n() == 3);
  CHECK(back.m() == 2);
  CHECK((back.data() - X).lpNorm<Eigen::Infinity>() == 0.0);
}

TEST_CASE("parser accepts scientific notation and windows line endings") {
  TempFile f("crlf.csv");
  put(f.path, "1.5e-3,2\r\n-3E4,+0.0\r\n");
  // '+0.0' has a leading plus, which strict parsing rejects
  CHECK_THROWS_AS(read_embeddings_csv(f.path), CsvParseError);

  put(f.path, "1.5e-3,2\r\n-3E4,0.0\r\n");
  const EmbeddingSet E = read_embeddings_csv(f.path);
  CHECK(E.data()(0, 0) == 1.5e-3);
  CHECK(E.data()(1, 0) == -3e4);
}

TEST_CASE("parse failures carry 1-based line numbers") {
  TempFile f("bad.csv");

  put(f.path, "1,2\n1,x,3\n");
  try {
    read_embeddings_csv(f.path);
    FAIL("expected CsvParseError");
  } catch (const CsvParseError& e) {
    CHECK(e.line == 2);
    CHECK(std::string(e.what()).find("2") != std::string::npos);
  }

  put(f.path, "1,2\n3\n");  // ragged
  try {
    read_embeddings_csv(f.path);
    FAIL("expected CsvParseError");
  } catch (const CsvParseError& e) {
    CHECK(e.line == 2);
  }

  put(f.path, "");
  CHECK_THROWS_AS(read_embeddings_csv(f.path), CsvParseError);

  put(f.path, "1,2\n\n3,4\n");  // blank interior line
  try {
    read_embeddings_csv(f.path);
    FAIL("expected CsvParseError");
  } catch (const CsvParseError& e) {
    CHECK(e.line == 2);
  }

  put(f.path, "1,inf\n");  // non-finite
  CHECK_THROWS_AS(read_embeddings_csv(f.path), CsvParseError);
  put(f.path, "1,nan\n");
  CHECK_THROWS_AS(read_embeddings_csv(f.path), CsvParseError);
  put(f.path, "1,,2\n");  // empty field
  CHECK_THROWS_AS(read_embeddings_csv(f.path), CsvParseError);
}

TEST_CASE("missing files raise a library error") {
  CHECK_THROWS_AS(read_embeddings_csv("/nonexistent/nope.csv"), Error);
}

TEST_CASE("table serialization writes meta, header, then rows") {
  ExperimentTable t;
  t.name = "demo";
  t.columns = {"label", "value"};
  t.meta = {{"n", "3"}, {"seed", "1"}};
  t.rows.push_back({std::string("a"), 0.5});
  t.rows.push_back({std::string("b"), -1.0 / 3.0});

  const std::string csv = table_to_csv(t);
  CHECK(csv.find("# name=demo\n") == 0);
  CHECK(csv.find("# n=3\n") != std::string::npos);
  CHECK(csv.find("# seed=1\n") != std::string::npos);
  CHECK(csv.find("label,value\n") != std::string::npos);
  CHECK(csv.find("a,0.5\n") != std::string::npos);
  CHECK(csv.find(format_double(-1.0 / 3.0)) != std::string::npos);
  CHECK(csv.find('\r') == std::string::npos);
  CHECK(csv.back() == '\n');
}

TEST_CASE("atomic writes land complete and replace prior content") {
  TempFile f("atomic.txt");
  write_text_atomic(f.path, "first\n");
  CHECK(slurp(f.path) == "first\n");
  write_text_atomic(f.path, "second\n");
  CHECK(slurp(f.path) == "second\n");
  CHECK_FALSE(std::filesystem::exists(f.path + ".tmp"));
}
