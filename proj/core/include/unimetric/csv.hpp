#pragma once

#include <string>

#include "unimetric/embedding.hpp"
#include "unimetric/experiments.hpp"

namespace unimetric {

// Shortest decimal form with 17 significant digits: parsing it back yields
// the identical double.
std::string format_double(double value);

// Comma-separated, no quoting, LF line endings, no header. Throws
// CsvParseError with a 1-based line number on ragged rows, non-numeric or
// non-finite fields, or an empty file.
EmbeddingSet read_embeddings_csv(const std::string& path);

std::string embeddings_to_csv(const EmbeddingSet& embeddings);

// '#'-prefixed key=value meta lines, then the column header, then the rows.
std::string table_to_csv(const ExperimentTable& table);

// Writes via a sibling temp file and rename, so readers never observe a
// partial file.
void write_text_atomic(const std::string& path, const std::string& content);

}  // namespace unimetric
