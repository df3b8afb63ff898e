#pragma once

#include "pirlrc/pir_general.hpp"
#include "pirlrc/pir_linear.hpp"
#include "pirlrc/rational.hpp"

namespace pirlrc {

enum class AuditKind { recoverability, w_privacy, ws_privacy, rate };

/// Exact audit outcome. Probabilities are exact rationals; privacy audits
/// enumerate the full choice space, never sample.
struct AuditReport {
    AuditKind kind = AuditKind::recoverability;
    bool pass = false;
    std::map<std::string, std::string> detail;
    std::optional<Rational> measured_rate;
    std::optional<Rational> bound;
    /// Exact query distribution for the first demand set (identical across
    /// demands when the audit passes).
    std::map<std::vector<std::size_t>, Rational> query_distribution;

    /// Structured text with machine-readable key=value lines.
    std::string render() const;
};

enum class DatabaseDomain { all, sample };

/// Iterates all (W, S) pairs with the declared sizes and all (or sampled)
/// databases; passes iff every recovery equals X_W exactly.
AuditReport audit_recoverability(const PirScheme& scheme, DatabaseDomain domain = DatabaseDomain::all,
                                 std::size_t sample_count = 0, std::uint64_t seed = 1);

AuditReport audit_recoverability(const GeneralPirCode& code, std::uint64_t seed = 1);

using PermutationGenerator = std::function<std::vector<std::size_t>(
    const std::vector<std::size_t>&, const std::vector<std::size_t>&, const QueryChoice&)>;

/// Enumerates, for each demand set, the Bayes-derived conditional side
/// distribution and every generator branch, accumulating exact rational
/// probabilities per permutation. Passes iff the distribution is the
/// uniform 1/K! for every demand. Guard: K! <= 10^7.
/// The generator argument exists so tests can audit a broken generator;
/// by default the table's real generator is used.
AuditReport audit_w_privacy(const AprioriTable& table, PermutationGenerator generator = nullptr);

AuditReport audit_w_privacy(const PirScheme& scheme);
AuditReport audit_w_privacy(const GeneralPirCode& code);

/// The WS query is constant by construction; the audit verifies the
/// decodability requirement that every K-M columns of E are
/// independent, reporting the first offending side set otherwise.
AuditReport audit_ws_privacy(const Matrix& e, std::size_t M);
AuditReport audit_ws_privacy(const PirScheme& scheme);

/// Rate D/T_effective against the applicable capacity bound:
/// 1/ceil(K/(M+1)) for D = 1, D/ceil(DK/(M+D)) for 2 <= D <= M, and the
/// K-M download floor for D > M.
AuditReport measure_rate(const PirScheme& scheme);
AuditReport measure_rate(const GeneralPirCode& code);

}  // namespace pirlrc
