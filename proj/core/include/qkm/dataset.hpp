#pragma once

#include <cstddef>
#include <vector>

namespace qkm {

/// A real vector, zero-padded to a power-of-two dimension, with its
/// Euclidean norm cached. Padding never changes the norm.
struct DataPoint {
    std::vector<double> coords;
    double norm = 0.0;
};

/// A validated collection of points sharing one padded dimension.
struct DataSet {
    std::vector<DataPoint> points;
    std::size_t original_dim = 0;
    std::size_t padded_dim = 0; // power of two >= 2

    std::size_t size() const { return points.size(); } // M
};

/// Validates raw vectors and zero-pads each to the next power-of-two
/// dimension (minimum 2). Rejects empty input, ragged rows, non-finite
/// values, and all-zero vectors, naming the offending row.
DataSet prepare_dataset(const std::vector<std::vector<double>>& raw);

/// Pads a query vector the same way as `set`; its raw dimension must equal
/// the set's original dimension.
DataPoint prepare_query(const std::vector<double>& raw, const DataSet& set);

/// One-point DataSet holding set.points[index] (padding preserved).
DataSet singleton_of(const DataSet& set, std::size_t index);

/// Coordinate-wise mean of the set, in padded coordinates.
std::vector<double> mean_point(const DataSet& set);

} // namespace qkm
