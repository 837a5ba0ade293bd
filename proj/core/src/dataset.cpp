#include "qkm/dataset.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "qkm/errors.hpp"

namespace qkm {

namespace {

double euclidean_norm(const std::vector<double>& coords) {
    double s = 0.0;
    for (double c : coords) s += c * c;
    return std::sqrt(s);
}

DataPoint pad_point(const std::vector<double>& raw, std::size_t padded_dim,
                    std::size_t row) {
    DataPoint point;
    point.coords = raw;
    point.coords.resize(padded_dim, 0.0);
    for (double c : raw) {
        if (!std::isfinite(c)) {
            throw IngestionError("row " + std::to_string(row) +
                                 ": non-finite value");
        }
    }
    point.norm = euclidean_norm(point.coords);
    if (point.norm == 0.0) {
        throw IngestionError("row " + std::to_string(row) +
                             ": zero vector cannot be amplitude-encoded");
    }
    return point;
}

} // namespace

DataSet prepare_dataset(const std::vector<std::vector<double>>& raw) {
    if (raw.empty()) {
        throw IngestionError("dataset is empty");
    }
    const std::size_t dim = raw.front().size();
    if (dim == 0) {
        throw IngestionError("row 0: vector has no coordinates");
    }
    DataSet set;
    set.original_dim = dim;
    set.padded_dim = std::bit_ceil(std::max<std::size_t>(dim, 2));
    set.points.reserve(raw.size());
    for (std::size_t row = 0; row < raw.size(); ++row) {
        if (raw[row].size() != dim) {
            throw IngestionError("row " + std::to_string(row) + " has " +
                                 std::to_string(raw[row].size()) +
                                 " coordinates, expected " +
                                 std::to_string(dim));
        }
        set.points.push_back(pad_point(raw[row], set.padded_dim, row));
    }
    return set;
}

DataPoint prepare_query(const std::vector<double>& raw, const DataSet& set) {
    if (raw.size() != set.original_dim) {
        throw ValidationError("query vector has " +
                              std::to_string(raw.size()) +
                              " coordinates, dataset expects " +
                              std::to_string(set.original_dim));
    }
    return pad_point(raw, set.padded_dim, 0);
}

DataSet singleton_of(const DataSet& set, std::size_t index) {
    if (index >= set.size()) {
        throw ValidationError("point index " + std::to_string(index) +
                              " out of range");
    }
    DataSet one;
    one.points.push_back(set.points[index]);
    one.original_dim = set.original_dim;
    one.padded_dim = set.padded_dim;
    return one;
}

std::vector<double> mean_point(const DataSet& set) {
    std::vector<double> mean(set.padded_dim, 0.0);
    for (const DataPoint& p : set.points) {
        for (std::size_t i = 0; i < set.padded_dim; ++i) {
            mean[i] += p.coords[i];
        }
    }
    for (double& m : mean) m /= static_cast<double>(set.size());
    return mean;
}

} // namespace qkm
