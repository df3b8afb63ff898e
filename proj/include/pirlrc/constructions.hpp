#pragma once

#include "pirlrc/codes.hpp"

namespace pirlrc {

/// K = alpha*(M+1) + beta with 0 <= beta < M+1.
struct PacLayout {
    std::size_t K = 0;
    std::size_t M = 0;
    std::size_t alpha = 0;
    std::size_t beta = 0;
};

PacLayout pac_layout(std::size_t K, std::size_t M);

/// ceil(K/(M+1)) x K block matrix: consecutive all-ones blocks of width
/// M+1 and a final block of width beta when beta > 0. Deterministic; the
/// randomness of the scheme lives in the query permutation.
Matrix partition_and_code(std::size_t K, std::size_t M, const Field& field);

/// Binary simplex code: generator columns are all 2^m - 1 nonzero vectors
/// of GF(2)^m in ascending integer order, least significant bit = first row.
LinearCode simplex_code(std::size_t m);

/// (K-M) x K Vandermonde matrix on evaluation points 0..K-1 (ascending
/// field encoding); every K-M columns are linearly independent.
Matrix grs_mds_parity_check(std::size_t K, std::size_t M, const Field& field);

}  // namespace pirlrc
