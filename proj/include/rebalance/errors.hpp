#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rebalance {

// Base class for every error the engine raises.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Dataset does not contain exactly two distinct labels.
class ClassCountError : public Error {
public:
    using Error::Error;
};

// Target ratio outside (0, 1].
class RatioError : public Error {
public:
    using Error::Error;
};

// Row index out of range.
class IndexError : public Error {
public:
    using Error::Error;
};

// Mismatched point dimensionality.
class DimensionError : public Error {
public:
    using Error::Error;
};

// k (or m) incompatible with the number of eligible rows.
class NeighborCountError : public Error {
public:
    using Error::Error;
};

// k-means cannot produce the requested number of clusters.
class ClusterError : public Error {
public:
    using Error::Error;
};

// Sampler has no eligible seed rows (e.g. borderline SMOTE with no danger
// samples); raised explicitly instead of silently returning the input.
class DegenerateInputError : public Error {
public:
    using Error::Error;
};

// Invalid class weights passed to the generator.
class WeightError : public Error {
public:
    using Error::Error;
};

// Malformed CSV cell; carries 1-based file row and column.
class ParseError : public Error {
public:
    ParseError(std::string message, std::size_t row, std::size_t column)
        : Error(std::move(message)), row_(row), column_(column) {}

    std::size_t row() const { return row_; }
    std::size_t column() const { return column_; }

private:
    std::size_t row_;
    std::size_t column_;
};

// Non-rectangular or empty tabular input.
class ShapeError : public Error {
public:
    using Error::Error;
};

// Non-finite feature value.
class ValueError : public Error {
public:
    using Error::Error;
};

// File I/O failure.
class IoError : public Error {
public:
    using Error::Error;
};

// A pipeline stage failed; carries the 0-based stage index.
class PipelineError : public Error {
public:
    PipelineError(std::size_t stage, const std::string& message)
        : Error("stage " + std::to_string(stage) + ": " + message), stage_(stage) {}

    explicit PipelineError(const std::string& message) : Error(message), stage_(0) {}

    std::size_t stage() const { return stage_; }

private:
    std::size_t stage_;
};

}  // namespace rebalance
