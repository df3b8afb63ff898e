#include "pirlrc/constructions.hpp"

#include <stdexcept>

namespace pirlrc {

PacLayout pac_layout(std::size_t K, std::size_t M) {
    if (M < 1 || M > K - 1 || K < 2) throw std::invalid_argument("require 1 <= M <= K-1");
    PacLayout l;
    l.K = K;
    l.M = M;
    l.alpha = K / (M + 1);
    l.beta = K - l.alpha * (M + 1);
    return l;
}

Matrix partition_and_code(std::size_t K, std::size_t M, const Field& field) {
    PacLayout l = pac_layout(K, M);
    std::size_t rows = (K + M) / (M + 1);  // ceil(K/(M+1))
    Matrix e(field, rows, K);
    for (std::size_t j = 0; j < K; ++j) e.set(j / (M + 1), j, 1);
    return e;
}

LinearCode simplex_code(std::size_t m) {
    if (m < 2 || m > 12) throw std::invalid_argument("simplex degree must be in [2, 12]");
    Field f2 = Field::make(2, 1);
    std::size_t n = (std::size_t{1} << m) - 1;
    Matrix g(f2, m, n);
    for (std::size_t j = 0; j < n; ++j) {
        std::size_t col = j + 1;  // nonzero vectors in ascending integer order
        for (std::size_t t = 0; t < m; ++t) g.set(t, j, (col >> t) & 1);
    }
    return LinearCode::from_generator(g);
}

Matrix grs_mds_parity_check(std::size_t K, std::size_t M, const Field& field) {
    if (field.q() < K) throw std::invalid_argument("need q >= K distinct evaluation points");
    if (M >= K) throw std::invalid_argument("require 0 <= M < K");
    std::size_t rows = K - M;
    Matrix h(field, rows, K);
    for (std::size_t j = 0; j < K; ++j) {
        Elem x = static_cast<Elem>(j);
        Elem acc = 1;
        for (std::size_t i = 0; i < rows; ++i) {
            h.set(i, j, acc);
            acc = field.mul(acc, x);
        }
    }
    return h;
}

}  // namespace pirlrc
