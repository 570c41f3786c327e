#include "unimetric/csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string_view>
#include <system_error>
#include <vector>

namespace unimetric {

std::string format_double(double value) {
  if (value == 0.0) value = 0.0;  // one spelling for both signed zeros
  char buffer[32];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, ptr);
}

namespace {

double parse_field(std::string_view field, std::size_t line) {
  if (field.empty()) throw CsvParseError(line, "empty field");
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw CsvParseError(line, "not a number: '" + std::string(field) + "'");
  }
  if (!std::isfinite(value)) {
    throw CsvParseError(line, "non-finite value: '" + std::string(field) + "'");
  }
  return value;
}

std::string read_file(const std::string& path) {
  std::error_code ec;
  if (std::filesystem::is_directory(path, ec)) {
    throw Error("cannot read " + path + ": is a directory");
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::string content((std::istreambuf_iterator<char>(in)),
                      std::istreambuf_iterator<char>());
  if (in.bad()) throw Error("cannot read " + path);
  return content;
}

}  // namespace

EmbeddingSet read_embeddings_csv(const std::string& path) {
  const std::string content = read_file(path);

  std::vector<double> values;
  Eigen::Index rows = 0;
  Eigen::Index cols = 0;
  std::size_t line_number = 0;
  std::size_t pos = 0;
  while (pos < content.size()) {
    std::size_t end = content.find('\n', pos);
    if (end == std::string::npos) end = content.size();
    std::string_view line(content.data() + pos, end - pos);
    pos = end + 1;
    ++line_number;
    if (line.ends_with('\r')) line.remove_suffix(1);
    if (line.empty()) throw CsvParseError(line_number, "empty line");

    Eigen::Index fields = 0;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = line.find(',', start);
      const std::string_view field =
          comma == std::string_view::npos
              ? line.substr(start)
              : line.substr(start, comma - start);
      values.push_back(parse_field(field, line_number));
      ++fields;
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (rows == 0) {
      cols = fields;
    } else if (fields != cols) {
      throw CsvParseError(line_number,
                          "expected " + std::to_string(cols) +
                              " fields, found " + std::to_string(fields));
    }
    ++rows;
  }
  if (rows == 0) throw CsvParseError(1, "empty input");

  Eigen::MatrixXd data(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      data(i, j) = values[static_cast<std::size_t>(i * cols + j)];
    }
  }
  return EmbeddingSet(std::move(data));
}

std::string embeddings_to_csv(const EmbeddingSet& embeddings) {
  const Eigen::MatrixXd& data = embeddings.data();
  std::string out;
  out.reserve(static_cast<std::size_t>(data.size()) * 26);
  for (Eigen::Index i = 0; i < data.rows(); ++i) {
    for (Eigen::Index j = 0; j < data.cols(); ++j) {
      if (j > 0) out += ',';
      out += format_double(data(i, j));
    }
    out += '\n';
  }
  return out;
}

std::string table_to_csv(const ExperimentTable& table) {
  std::string out;
  out += "# name=" + table.name + '\n';
  for (const auto& [key, value] : table.meta) {
    out += "# " + key + '=' + value + '\n';
  }
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c > 0) out += ',';
    out += table.columns[c];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out += ',';
      if (const double* num = std::get_if<double>(&row[c])) {
        out += format_double(*num);
      } else {
        out += std::get<std::string>(row[c]);
      }
    }
    out += '\n';
  }
  return out;
}

void write_text_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open " + tmp + " for writing");
    out.write(content.data(),
              static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out.good()) {
      std::remove(tmp.c_str());
      throw Error("cannot write " + tmp);
    }
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw Error("cannot rename " + tmp + " to " + path);
  }
}

}  // namespace unimetric
