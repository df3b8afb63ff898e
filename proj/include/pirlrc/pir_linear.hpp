#pragma once

#include <random>
#include <string>

#include "pirlrc/codes.hpp"

namespace pirlrc {

enum class PrivacyMode { w_private, ws_private };

/// Query: a permutation of [K] (W-private) or the constant query (WS-private).
/// Queries never carry message values.
struct PirQuery {
    PrivacyMode mode = PrivacyMode::w_private;
    std::vector<std::size_t> pi;  // 0-based images; empty in ws mode
};

struct PirAnswer {
    Vec values;  // length T
};

/// A-priori mapped-set table shared by client and server: sorted demand
/// set W' -> its repair/cooperative set padded to exactly M indices.
struct AprioriTable {
    std::size_t K = 0, M = 0, D = 1;
    std::map<std::vector<std::size_t>, std::vector<std::size_t>> gamma;
};

struct PirScheme {
    std::size_t K = 0, M = 0, D = 1;
    Field field;
    PrivacyMode mode = PrivacyMode::w_private;
    LinearCode code;   // C = nullspace(H)
    Matrix h;          // full-rank T x K solution source
    RepairPlan plan;   // verified, unpadded
    AprioriTable table;
};

/// One branch of the query generator's finite choice space. The sampled
/// path draws each rank uniformly; the privacy auditor enumerates all
/// branches exactly.
struct QueryChoice {
    std::uint64_t subset_rank = 0;      // W' among C(K, D) subsets
    std::uint64_t demand_perm_rank = 0; // ordering of W'
    std::uint64_t side_perm_rank = 0;   // ordering of the padded set
    std::uint64_t rest_perm_rank = 0;   // ordering of the remainder
};

struct ChoiceSpace {
    std::uint64_t subsets = 1, demand_perms = 1, side_perms = 1, rest_perms = 1;
    std::uint64_t total() const { return subsets * demand_perms * side_perms * rest_perms; }
};

ChoiceSpace query_choice_space(const AprioriTable& table);

/// Deterministic permutation for a given branch: sorted W maps onto the
/// chosen ordering of W', sorted S onto the chosen ordering of the padded
/// set, the remaining sorted indices onto the chosen ordering of the rest.
std::vector<std::size_t> permutation_from_choice(const AprioriTable& table,
                                                 const std::vector<std::size_t>& w,
                                                 const std::vector<std::size_t>& s,
                                                 const QueryChoice& choice);

/// Builds a W-private scheme from an LRC parity check (D = 1 needs
/// all-symbol locality M; D >= 2 needs (M, D)-cooperative locality).
PirScheme make_w_private_scheme(const Matrix& h, std::size_t M, std::size_t D);

/// Builds the constant-query scheme from an MDS parity check: H is
/// (K-M) x K with every K-M columns independent.
PirScheme make_ws_private_scheme(const Matrix& h, std::size_t M, std::size_t D = 1);

PirQuery generate_query(const PirScheme& scheme, const std::vector<std::size_t>& w,
                        const std::vector<std::size_t>& s, std::mt19937_64& rng);

/// The solution matrix the server applies: permute_columns(H, pi) in
/// W-private mode (pull convention E_i = H_pi(i)), H itself in WS mode.
Matrix solution_matrix(const PirScheme& scheme, const PirQuery& q);

PirAnswer server_answer(const PirScheme& scheme, const PirQuery& q, const Vec& x);

/// X_w = u_answer . A + u_side . X_S; depends only on (E, W, S), so the
/// exhaustive auditors compute it once per pair.
struct RecoveryCertificate {
    Vec u_answer;
    Vec u_side;
};

std::vector<RecoveryCertificate> recovery_certificates(const PirScheme& scheme, const PirQuery& q,
                                                       const std::vector<std::size_t>& w,
                                                       const std::vector<std::size_t>& s);

Vec recover(const PirScheme& scheme, const PirQuery& q, const PirAnswer& a,
            const std::vector<std::size_t>& w, const std::vector<std::size_t>& s, const Vec& x_s);

struct PirToLrcReport {
    bool ok = false;
    std::string detail;
    RepairPlan plan;
};

/// Null space of a solution matrix, with the advertised property verified:
/// all-symbol locality M (D = 1), (M, D)-cooperative locality (D >= 2), or
/// the (K, M)-MDS condition (WS mode). An all-zero column is a privacy
/// violation and is rejected outright.
std::pair<LinearCode, PirToLrcReport> pir_to_lrc(const Matrix& e, std::size_t M, std::size_t D,
                                                 PrivacyMode mode = PrivacyMode::w_private);

/// Uniform draw from [0, n) by rejection; the documented RNG primitive for
/// reproducible sessions.
std::uint64_t bounded_uniform(std::mt19937_64& rng, std::uint64_t n);

}  // namespace pirlrc
