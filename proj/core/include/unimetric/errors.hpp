#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace unimetric {

// Base class for every contract violation raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A row whose Euclidean norm is at or below the normalization floor (1e-12).
struct ZeroNormRow : Error {
  explicit ZeroNormRow(std::size_t row_index)
      : Error("zero-norm row at index " + std::to_string(row_index)),
        row(row_index) {}
  std::size_t row;
};

// Pairwise statistics need at least two rows.
struct TooFewInstances : Error {
  using Error::Error;
};

// Input to a symmetric-matrix routine has asymmetry above tolerance.
struct NotSymmetric : Error {
  using Error::Error;
};

// The iterative eigensolver failed to converge.
struct NoConvergence : Error {
  using Error::Error;
};

// An eigenvalue is negative beyond round-off tolerance.
struct NotPSD : Error {
  using Error::Error;
};

// Paired inputs disagree in extent.
struct ShapeMismatch : Error {
  using Error::Error;
};

// A covariance is rank deficient at the 1e-12 relative eigenvalue cutoff.
struct SingularCovariance : Error {
  using Error::Error;
};

// Index list is not a bijection on row indices.
struct InvalidPermutation : Error {
  using Error::Error;
};

// A row scaling factor is not strictly positive.
struct NonPositiveScale : Error {
  explicit NonPositiveScale(std::size_t scale_index)
      : Error("non-positive scale at index " + std::to_string(scale_index)),
        index(scale_index) {}
  std::size_t index;
};

// No sample landed inside the binning interval.
struct EmptyInRange : Error {
  using Error::Error;
};

// Histograms with different lo/hi/bin-count cannot be compared.
struct GridMismatch : Error {
  using Error::Error;
};

// CSV input that does not parse; line numbers are 1-based.
struct CsvParseError : Error {
  CsvParseError(std::size_t line_number, const std::string& what)
      : Error("line " + std::to_string(line_number) + ": " + what),
        line(line_number) {}
  std::size_t line;
};

}  // namespace unimetric
