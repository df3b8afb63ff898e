#pragma once

#include <functional>
#include <unordered_map>

#include "pirlrc/pir_linear.hpp"

namespace pirlrc {

/// Possibly non-linear code with explicit codewords and per-coordinate
/// repair lookup tables. Codewords are kept sorted; the encoder is the
/// index bijection between GF(q)^k' and the sorted codeword list.
struct GeneralLrc {
    Field field;
    std::size_t n = 0;
    std::size_t r = 0;
    std::vector<Vec> codewords;                       // sorted lexicographically
    std::vector<std::vector<std::size_t>> groups;     // R(i), ascending
    std::vector<std::unordered_map<std::uint64_t, Elem>> repair;  // key = packed R(i) values

    std::uint64_t pack(const Vec& values) const;
    Elem repair_coordinate(std::size_t i, const Vec& group_values) const;
    bool contains(const Vec& v) const;
    /// log_q |codewords|; throws when the size is not a power of q.
    std::size_t dimension() const;
};

GeneralLrc general_from_linear(const LinearCode& code, const RepairPlan& plan);

/// Greedy coordinate partition: P2 collects the lowest-index coordinate not
/// yet covered, P1 its repair group; accepted only for optimal codes, where
/// |P2| = ceil(n/(r+1)).
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> greedy_partition(
    const GeneralLrc& lrc, std::size_t r);

/// Translations u_j: zero on P1, the j-th lexicographic vector on P2
/// (P2 sorted ascending, first P2 coordinate = least significant digit).
/// Construction verifies by exhaustive enumeration of GF(q)^n that the
/// translations partition the space. Guard: q^n <= 2^20.
struct CosetSystem {
    GeneralLrc base;
    std::size_t t_opt = 0;
    std::vector<std::size_t> p1, p2;  // sorted
    std::unordered_map<std::uint64_t, std::size_t> p1_index;  // packed P1 projection -> codeword

    Vec translation(std::uint64_t a) const;  // u_a, length n
    /// unique a with y in C + u_a
    std::uint64_t coset_of(const Vec& y) const;
};

CosetSystem coset_system(const GeneralLrc& lrc, std::size_t r);

/// General PIR code of Definition 5: the coset system plus the same
/// permutation query generator as the linear schemes (D = 1).
struct GeneralPirCode {
    std::size_t K = 0, M = 0;
    CosetSystem cosets;
    AprioriTable table;  // padded a-priori groups for query generation
};

GeneralPirCode make_general_pir(const GeneralLrc& lrc, std::size_t M);

PirQuery generate_query(const GeneralPirCode& code, std::size_t w,
                        const std::vector<std::size_t>& s, std::mt19937_64& rng);

/// Answer: the base-q expansion (least significant digit first) of the
/// index a of the coset containing the permuted database.
PirAnswer answer_encode(const GeneralPirCode& code, const std::vector<std::size_t>& pi, const Vec& x);

Elem recover_general(const GeneralPirCode& code, const std::vector<std::size_t>& pi,
                     const PirAnswer& answer, std::size_t w, const std::vector<std::size_t>& s,
                     const Vec& x_s);

/// Fiber extraction: picks the most popular answer value (lexicographically
/// smallest among maximal fibers) and rebuilds repair groups and lookup
/// decoders from the fiber members. Guard: q^K <= 2^20.
GeneralLrc extract_lrc_from_pir(
    const std::function<Vec(const Vec&)>& answer_function, std::size_t K, std::size_t T,
    std::size_t M, const Field& field);

/// Coordinate-wise relabeling by per-coordinate bijections; preserves
/// locality and cardinality, and generally breaks linearity.
GeneralLrc wrap_nonlinear(const GeneralLrc& lrc, const std::vector<std::vector<Elem>>& sigmas);

}  // namespace pirlrc
