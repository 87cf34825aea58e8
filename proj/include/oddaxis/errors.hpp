#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace oddaxis {

/// Shape mismatch between matrices/vectors (non-square input, bad sizes).
class DimensionError : public std::invalid_argument {
public:
    explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

/// Out-of-range or malformed parameter (mesh level, grid size, polynomial degree, ...).
class ParameterError : public std::invalid_argument {
public:
    explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

/// null_vector was asked for a kernel direction of a matrix that is not singular enough.
class NoNullVectorError : public std::runtime_error {
public:
    explicit NoNullVectorError(const std::string& what) : std::runtime_error(what) {}
};

/// A map produced a value of norm < 1e-9 before normalization: the map is not
/// sphere-valued at that point. Upstream code treats this as a rank-drop signal.
class DegenerateMapValue : public std::runtime_error {
public:
    explicit DegenerateMapValue(const std::string& what) : std::runtime_error(what) {}
};

/// Consecutive circle samples jump by >= pi even at the finest grid.
class UndersampledMapError : public std::runtime_error {
public:
    explicit UndersampledMapError(const std::string& what) : std::runtime_error(what) {}
};

/// Degree integral does not settle near an integer at the finest mesh level.
class NonConvergentDegreeError : public std::runtime_error {
public:
    explicit NonConvergentDegreeError(const std::string& what) : std::runtime_error(what) {}
};

/// A preimage of the requested target value has an ill-conditioned local Jacobian.
class IrregularValueError : public std::runtime_error {
public:
    explicit IrregularValueError(const std::string& what) : std::runtime_error(what) {}
};

/// A sphere search ended above its acceptance threshold. Carries the best
/// witness seen so the caller can inspect it.
class SearchFailure : public std::runtime_error {
public:
    SearchFailure(const std::string& what, double best_value,
                  std::array<double, 3> best_point = {0.0, 0.0, 0.0})
        : std::runtime_error(what), best_value(best_value), best_point(best_point) {}
    double best_value;
    std::array<double, 3> best_point;
};

}  // namespace oddaxis
