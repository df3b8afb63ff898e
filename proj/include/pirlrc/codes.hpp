#pragma once

#include <map>
#include <optional>
#include <vector>

#include "pirlrc/matrix.hpp"
#include "pirlrc/rational.hpp"

namespace pirlrc {

/// Linear [n, k] code given by generator and parity check matrices
/// (whichever is missing at construction is derived via the null space).
/// Immutable after construction; the minimum distance is cached.
class LinearCode {
public:
    static LinearCode from_generator(const Matrix& g);
    static LinearCode from_parity_check(const Matrix& h);

    const Field& field() const { return generator_.field(); }
    std::size_t n() const { return generator_.cols(); }
    std::size_t k() const { return generator_.rows(); }

    const Matrix& generator() const { return generator_; }
    const Matrix& parity_check() const { return parity_check_; }

    /// Minimum Hamming weight over nonzero codewords, by enumerating all
    /// q^k messages. Guard: q^k <= 2^20.
    std::size_t min_distance() const;

    /// All q^k codewords in message order. Guard: q^k <= 2^20.
    std::vector<Vec> codewords() const;

private:
    LinearCode(Matrix g, Matrix h);
    Matrix generator_;
    Matrix parity_check_;
    mutable std::optional<std::size_t> d_;
};

/// Per-coordinate repair group with coefficients realizing
/// c_i = sum_l lambda_l c_l. An empty group means the coordinate is
/// identically zero on the code (locality 0); reports note this case.
struct RepairEntry {
    std::vector<std::size_t> group;  // R(i), ascending, i excluded
    Vec coefficients;                // aligned with group
};

/// A-priori repair-group table shared by client and server.
struct RepairPlan {
    std::size_t r = 0;                        // locality budget the plan verifies
    std::vector<RepairEntry> entries;         // index = coordinate
    std::size_t ell = 1;                      // cooperative set size, 1 = classical
    std::map<std::vector<std::size_t>, std::vector<std::size_t>> cooperative;  // Delta -> Gamma
};

struct BoundCheck {
    Rational value;
    bool satisfied = false;
};

struct BoundsReport {
    BoundCheck singleton_lrc_bound;      // d <= n - k - ceil(k/r) + 2
    std::optional<BoundCheck> cooperative_bound;  // d <= n - k + 1 - ell(ceil(k/r) - 1), r >= ell
    BoundCheck max_size_bound;           // q^k <= q^(n - ceil(n/(r+1)))
    BoundCheck rate_bound_classical;     // k/n <= r/(r+1)
    std::optional<BoundCheck> rate_bound_cooperative_large_ell;  // k/n <= r/n, ell > r
};

enum class StructureCheck { applicable_pass, applicable_fail, not_applicable };

/// Searches the dual for a codeword of weight <= r+1 whose support contains i
/// and returns R(i) = supp \ {i}. Deterministic tie-break: lexicographically
/// smallest support, then smallest coefficient vector.
/// Guard: q^(n-k) <= 2^20 dual enumeration.
std::optional<RepairEntry> find_repair_group(const LinearCode& c, std::size_t i, std::size_t r);

/// True iff every coordinate has a repair group within budget r; the plan
/// records the groups used by PIR schemes.
std::pair<bool, RepairPlan> verify_all_symbol_locality(const LinearCode& c, std::size_t r);

/// (r, ell)-cooperative locality: for every Delta of size ell finds the
/// lexicographically first Gamma disjoint from Delta with |Gamma| <= r and
/// rank(G_Gamma) = rank(G_{Delta u Gamma}).
std::pair<bool, RepairPlan> cooperative_locality(const LinearCode& c, std::size_t r, std::size_t ell);

BoundsReport check_bounds(const LinearCode& c, const RepairPlan& plan);

StructureCheck check_structure_theorem(const LinearCode& c, const RepairPlan& plan);

/// Pads a repair group to exactly m indices using the lexicographically
/// smallest coordinates outside {i} u group; pads carry zero coefficients.
RepairEntry pad_repair_entry(const RepairEntry& e, std::size_t i, std::size_t m, std::size_t n);

/// Same padding for a cooperative set Gamma(Delta).
std::vector<std::size_t> pad_cooperative_set(const std::vector<std::size_t>& gamma,
                                             const std::vector<std::size_t>& delta, std::size_t m,
                                             std::size_t n);

}  // namespace pirlrc
