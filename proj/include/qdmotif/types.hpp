#pragma once

#include <Eigen/Dense>

namespace qdmotif {

using Scalar = double;

// One row per motif position, one column per nucleotide (A, C, G, T).
// Row-major so a row can be scanned as a contiguous lookup table.
using ProbMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, 4, Eigen::RowMajor>;

using Vector4 = Eigen::Matrix<Scalar, 4, 1>;
using Vector2 = Eigen::Matrix<Scalar, 2, 1>;

inline constexpr int kAlphabetSize = 4;

}  // namespace qdmotif
