#include "pirlrc/pir_linear.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "pirlrc/combinatorics.hpp"

namespace pirlrc {

namespace {

void check_demand_side(std::size_t K, std::size_t D, std::size_t M,
                       const std::vector<std::size_t>& w, const std::vector<std::size_t>& s) {
    if (w.size() != D) throw std::invalid_argument("demand set must have size D");
    if (s.size() != M) throw std::invalid_argument("side set must have size M");
    std::vector<std::size_t> all = w;
    all.insert(all.end(), s.begin(), s.end());
    std::sort(all.begin(), all.end());
    for (std::size_t i = 0; i < all.size(); ++i) {
        if (all[i] >= K) throw std::invalid_argument("index out of range");
        if (i > 0 && all[i] == all[i - 1]) throw std::invalid_argument("demand and side sets must be disjoint");
    }
}

AprioriTable build_table(const LinearCode& code, const RepairPlan& plan, std::size_t M, std::size_t D) {
    AprioriTable table;
    table.K = code.n();
    table.M = M;
    table.D = D;
    std::size_t n = code.n();
    if (D == 1) {
        for (std::size_t i = 0; i < n; ++i) {
            RepairEntry padded = pad_repair_entry(plan.entries[i], i, M, n);
            table.gamma[{i}] = padded.group;
        }
    } else {
        for (const auto& [delta, gamma] : plan.cooperative)
            table.gamma[delta] = pad_cooperative_set(gamma, delta, M, n);
    }
    return table;
}

}  // namespace

std::uint64_t bounded_uniform(std::mt19937_64& rng, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("empty range");
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return v % n;
}

ChoiceSpace query_choice_space(const AprioriTable& table) {
    ChoiceSpace cs;
    cs.subsets = binomial(table.K, table.D);
    cs.demand_perms = factorial(table.D);
    cs.side_perms = factorial(table.M);
    cs.rest_perms = factorial(table.K - table.D - table.M);
    return cs;
}

std::vector<std::size_t> permutation_from_choice(const AprioriTable& table,
                                                 const std::vector<std::size_t>& w,
                                                 const std::vector<std::size_t>& s,
                                                 const QueryChoice& choice) {
    std::size_t K = table.K;
    check_demand_side(K, table.D, table.M, w, s);

    std::vector<std::size_t> w_sorted = w, s_sorted = s;
    std::sort(w_sorted.begin(), w_sorted.end());
    std::sort(s_sorted.begin(), s_sorted.end());

    std::vector<std::size_t> w_prime = unrank_subset(K, table.D, choice.subset_rank);
    auto it = table.gamma.find(w_prime);
    if (it == table.gamma.end()) throw std::logic_error("mapped set missing from a-priori table");
    const std::vector<std::size_t>& gamma = it->second;

    std::vector<std::size_t> demand_images = unrank_permutation(w_prime, choice.demand_perm_rank);
    std::vector<std::size_t> side_images = unrank_permutation(gamma, choice.side_perm_rank);

    std::vector<bool> used(K, false);
    for (std::size_t v : demand_images) used[v] = true;
    for (std::size_t v : side_images) used[v] = true;
    std::vector<std::size_t> rest_targets;
    for (std::size_t v = 0; v < K; ++v)
        if (!used[v]) rest_targets.push_back(v);
    std::vector<std::size_t> rest_images = unrank_permutation(rest_targets, choice.rest_perm_rank);

    std::vector<std::size_t> pi(K, K);
    for (std::size_t t = 0; t < w_sorted.size(); ++t) pi[w_sorted[t]] = demand_images[t];
    for (std::size_t t = 0; t < s_sorted.size(); ++t) pi[s_sorted[t]] = side_images[t];
    std::vector<bool> in_ws(K, false);
    for (std::size_t v : w_sorted) in_ws[v] = true;
    for (std::size_t v : s_sorted) in_ws[v] = true;
    std::size_t t = 0;
    for (std::size_t i = 0; i < K; ++i)
        if (!in_ws[i]) pi[i] = rest_images[t++];
    return pi;
}

PirScheme make_w_private_scheme(const Matrix& h, std::size_t M, std::size_t D) {
    Matrix basis = h.row_basis();
    LinearCode code = LinearCode::from_parity_check(basis);
    std::size_t K = code.n();
    if (D < 1 || D + M > K) throw std::invalid_argument("require D >= 1 and D + M <= K");

    RepairPlan plan;
    if (D == 1) {
        auto [ok, p] = verify_all_symbol_locality(code, M);
        if (!ok) throw std::invalid_argument("parity check is not an LRC with locality M");
        plan = std::move(p);
    } else {
        auto [ok, p] = cooperative_locality(code, M, D);
        if (!ok) throw std::invalid_argument("parity check lacks (M,D)-cooperative locality");
        plan = std::move(p);
    }

    AprioriTable table = build_table(code, plan, M, D);
    return PirScheme{K,    M, D, code.field(), PrivacyMode::w_private,
                     code, std::move(basis), std::move(plan), std::move(table)};
}

PirScheme make_ws_private_scheme(const Matrix& h, std::size_t M, std::size_t D) {
    Matrix basis = h.row_basis();
    std::size_t K = basis.cols();
    if (basis.rows() != K - M)
        throw std::invalid_argument("WS-private solution must have rank K - M");
    bool ok = true;
    for_each_subset(K, K - M, [&](const std::vector<std::size_t>& cols) {
        if (basis.submatrix_cols(cols).rank() != K - M) ok = false;
    });
    if (!ok) throw std::invalid_argument("some K-M columns of H are dependent: not an MDS parity check");
    LinearCode code = LinearCode::from_parity_check(basis);
    return PirScheme{K,    M, D, code.field(), PrivacyMode::ws_private,
                     code, std::move(basis), RepairPlan{}, AprioriTable{}};
}

PirQuery generate_query(const PirScheme& scheme, const std::vector<std::size_t>& w,
                        const std::vector<std::size_t>& s, std::mt19937_64& rng) {
    if (scheme.mode == PrivacyMode::ws_private) return PirQuery{PrivacyMode::ws_private, {}};
    ChoiceSpace cs = query_choice_space(scheme.table);
    QueryChoice choice;
    choice.subset_rank = bounded_uniform(rng, cs.subsets);
    choice.demand_perm_rank = bounded_uniform(rng, cs.demand_perms);
    choice.side_perm_rank = bounded_uniform(rng, cs.side_perms);
    choice.rest_perm_rank = bounded_uniform(rng, cs.rest_perms);
    return PirQuery{PrivacyMode::w_private, permutation_from_choice(scheme.table, w, s, choice)};
}

Matrix solution_matrix(const PirScheme& scheme, const PirQuery& q) {
    if (scheme.mode == PrivacyMode::ws_private) return scheme.h;
    return scheme.h.permute_columns(q.pi);
}

PirAnswer server_answer(const PirScheme& scheme, const PirQuery& q, const Vec& x) {
    if (x.size() != scheme.K) throw std::invalid_argument("database must have K entries");
    return PirAnswer{solution_matrix(scheme, q).mul_vec(x)};
}

std::vector<RecoveryCertificate> recovery_certificates(const PirScheme& scheme, const PirQuery& q,
                                                       const std::vector<std::size_t>& w,
                                                       const std::vector<std::size_t>& s) {
    check_demand_side(scheme.K, w.size(), scheme.M, w, s);
    Matrix e = solution_matrix(scheme, q);
    Matrix stacked = e.vstack(unit_selector(scheme.field, s, scheme.K));
    std::size_t t_rows = e.rows();

    std::vector<RecoveryCertificate> certs;
    for (std::size_t wi : w) {
        Vec unit(scheme.K, 0);
        unit[wi] = 1;
        MembershipCertificate cert = stacked.row_space_membership(unit);
        if (!cert.member)
            throw std::runtime_error("recovery certificate not found: scheme construction bug");
        RecoveryCertificate rc;
        rc.u_answer.assign(cert.coefficients.begin(), cert.coefficients.begin() + t_rows);
        rc.u_side.assign(cert.coefficients.begin() + t_rows, cert.coefficients.end());
        certs.push_back(std::move(rc));
    }
    return certs;
}

Vec recover(const PirScheme& scheme, const PirQuery& q, const PirAnswer& a,
            const std::vector<std::size_t>& w, const std::vector<std::size_t>& s, const Vec& x_s) {
    if (x_s.size() != s.size()) throw std::invalid_argument("side values length mismatch");
    const Field& f = scheme.field;
    auto certs = recovery_certificates(scheme, q, w, s);
    Vec out;
    for (const auto& rc : certs) {
        Elem v = 0;
        for (std::size_t t = 0; t < rc.u_answer.size(); ++t)
            v = f.add(v, f.mul(rc.u_answer[t], a.values[t]));
        for (std::size_t t = 0; t < rc.u_side.size(); ++t)
            v = f.add(v, f.mul(rc.u_side[t], x_s[t]));
        out.push_back(v);
    }
    return out;
}

std::pair<LinearCode, PirToLrcReport> pir_to_lrc(const Matrix& e, std::size_t M, std::size_t D,
                                                 PrivacyMode mode) {
    for (std::size_t c = 0; c < e.cols(); ++c) {
        bool all_zero = true;
        for (std::size_t r = 0; r < e.rows(); ++r)
            if (e.at(r, c) != 0) all_zero = false;
        if (all_zero)
            throw std::invalid_argument("solution matrix has an all-zero column: privacy violation");
    }
    Matrix basis = e.row_basis();
    LinearCode code = LinearCode::from_parity_check(basis);
    PirToLrcReport report;
    if (mode == PrivacyMode::ws_private) {
        std::size_t K = e.cols();
        bool ok = basis.rows() == K - M;
        if (ok)
            for_each_subset(K, K - M, [&](const std::vector<std::size_t>& cols) {
                if (basis.submatrix_cols(cols).rank() != K - M) ok = false;
            });
        report.ok = ok;
        report.detail = ok ? "(K,M) MDS parity check verified"
                           : "not a (K,M) MDS parity check";
    } else if (D == 1) {
        auto [ok, plan] = verify_all_symbol_locality(code, M);
        report.ok = ok;
        report.plan = std::move(plan);
        report.detail = ok ? "all-symbol locality M verified" : "locality verification failed";
    } else {
        auto [ok, plan] = cooperative_locality(code, M, D);
        report.ok = ok;
        report.plan = std::move(plan);
        report.detail = ok ? "(M,D)-cooperative locality verified"
                           : "cooperative locality verification failed";
    }
    return {std::move(code), std::move(report)};
}

}  // namespace pirlrc
