#include "pirlrc/audit.hpp"

#include <algorithm>
#include <sstream>

#include "pirlrc/combinatorics.hpp"

namespace pirlrc {

namespace {

constexpr std::uint64_t kEnumGuard = 1u << 20;

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t guard) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        r *= base;
        if (r > guard) throw std::invalid_argument("enumeration guard exceeded");
    }
    return r;
}

Vec vector_of(std::uint64_t idx, std::uint32_t q, std::size_t n) {
    Vec v(n);
    for (std::size_t t = 0; t < n; ++t) {
        v[t] = static_cast<Elem>(idx % q);
        idx /= q;
    }
    return v;
}

std::string join_indices(const std::vector<std::size_t>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i] + 1;
    return os.str();
}

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

/// Conditional distribution of S given W, by exact Bayes over the model
/// priors: p_S uniform over M-subsets of [K], p_{W|S} uniform over
/// D-subsets of [K] \ S. The result is uniform over M-subsets disjoint
/// from W; the audit derives this rather than assuming it.
std::map<std::vector<std::size_t>, Rational> side_conditional(std::size_t K, std::size_t M,
                                                              const std::vector<std::size_t>& w) {
    std::map<std::vector<std::size_t>, Rational> weights;
    Rational total(0);
    Rational p_s(1, static_cast<std::int64_t>(binomial(K, M)));
    Rational p_w_given_s(1, static_cast<std::int64_t>(binomial(K - M, w.size())));
    for_each_subset(K, M, [&](const std::vector<std::size_t>& s) {
        for (std::size_t wi : w)
            if (std::binary_search(s.begin(), s.end(), wi)) return;
        Rational weight = p_s * p_w_given_s;
        weights[s] = weight;
        total += weight;
    });
    for (auto& [s, p] : weights) p /= total;
    return weights;
}

std::vector<Vec> databases(const Field& field, std::size_t K, DatabaseDomain domain,
                           std::size_t sample_count, std::uint64_t seed) {
    std::vector<Vec> out;
    if (domain == DatabaseDomain::all) {
        std::uint64_t space = checked_pow(field.q(), K, kEnumGuard);
        out.reserve(space);
        for (std::uint64_t idx = 0; idx < space; ++idx) out.push_back(vector_of(idx, field.q(), K));
    } else {
        std::mt19937_64 rng(seed);
        for (std::size_t i = 0; i < sample_count; ++i) {
            Vec x(K);
            for (auto& v : x) v = static_cast<Elem>(bounded_uniform(rng, field.q()));
            out.push_back(std::move(x));
        }
    }
    return out;
}

}  // namespace

std::string AuditReport::render() const {
    std::ostringstream os;
    const char* names[] = {"recoverability", "w_privacy", "ws_privacy", "rate"};
    os << "kind=" << names[static_cast<int>(kind)] << "\n";
    os << "pass=" << (pass ? "true" : "false") << "\n";
    for (const auto& [k, v] : detail) os << k << "=" << v << "\n";
    if (measured_rate) os << "measured_rate=" << to_string(*measured_rate) << "\n";
    if (bound) os << "bound=" << to_string(*bound) << "\n";
    if (!query_distribution.empty()) {
        // uniform distributions render as a single exact probability
        bool uniform = true;
        const Rational& first = query_distribution.begin()->second;
        for (const auto& [pi, p] : query_distribution)
            if (p != first) uniform = false;
        if (uniform)
            os << "query_distribution=uniform p = " << to_string(first) << " over "
               << query_distribution.size() << " permutations\n";
        else
            os << "query_distribution=non-uniform over " << query_distribution.size()
               << " permutations\n";
    }
    return os.str();
}

AuditReport audit_recoverability(const PirScheme& scheme, DatabaseDomain domain,
                                 std::size_t sample_count, std::uint64_t seed) {
    AuditReport rep;
    rep.kind = AuditKind::recoverability;
    std::vector<Vec> xs = databases(scheme.field, scheme.K, domain, sample_count, seed);

    std::mt19937_64 rng(seed);
    std::uint64_t cases = 0, failures = 0;
    for_each_subset(scheme.K, scheme.D, [&](const std::vector<std::size_t>& w) {
        std::vector<std::size_t> rest;
        for (std::size_t j = 0; j < scheme.K; ++j)
            if (!std::binary_search(w.begin(), w.end(), j)) rest.push_back(j);
        for_each_subset(rest.size(), scheme.M, [&](const std::vector<std::size_t>& pick) {
            std::vector<std::size_t> s;
            for (std::size_t t : pick) s.push_back(rest[t]);
            PirQuery q = generate_query(scheme, w, s, rng);
            Matrix e = solution_matrix(scheme, q);
            auto certs = recovery_certificates(scheme, q, w, s);
            for (const Vec& x : xs) {
                Vec a = e.mul_vec(x);
                Vec x_s;
                for (std::size_t si : s) x_s.push_back(x[si]);
                for (std::size_t t = 0; t < w.size(); ++t) {
                    Elem v = 0;
                    for (std::size_t j = 0; j < certs[t].u_answer.size(); ++j)
                        v = scheme.field.add(v, scheme.field.mul(certs[t].u_answer[j], a[j]));
                    for (std::size_t j = 0; j < certs[t].u_side.size(); ++j)
                        v = scheme.field.add(v, scheme.field.mul(certs[t].u_side[j], x_s[j]));
                    ++cases;
                    if (v != x[w[t]]) ++failures;
                }
            }
        });
    });
    rep.pass = failures == 0;
    rep.detail["cases"] = std::to_string(cases);
    rep.detail["failures"] = std::to_string(failures);
    rep.detail["databases"] = std::to_string(xs.size());
    return rep;
}

AuditReport audit_recoverability(const GeneralPirCode& code, std::uint64_t seed) {
    AuditReport rep;
    rep.kind = AuditKind::recoverability;
    const Field& f = code.cosets.base.field;
    std::vector<Vec> xs = databases(f, code.K, DatabaseDomain::all, 0, seed);

    std::mt19937_64 rng(seed);
    std::uint64_t cases = 0, failures = 0;
    for (std::size_t w = 0; w < code.K; ++w) {
        std::vector<std::size_t> rest;
        for (std::size_t j = 0; j < code.K; ++j)
            if (j != w) rest.push_back(j);
        for_each_subset(rest.size(), code.M, [&](const std::vector<std::size_t>& pick) {
            std::vector<std::size_t> s;
            for (std::size_t t : pick) s.push_back(rest[t]);
            PirQuery q = generate_query(code, w, s, rng);
            for (const Vec& x : xs) {
                PirAnswer a = answer_encode(code, q.pi, x);
                Vec x_s;
                for (std::size_t si : s) x_s.push_back(x[si]);
                ++cases;
                if (recover_general(code, q.pi, a, w, s, x_s) != x[w]) ++failures;
            }
        });
    }
    rep.pass = failures == 0;
    rep.detail["cases"] = std::to_string(cases);
    rep.detail["failures"] = std::to_string(failures);
    rep.detail["databases"] = std::to_string(xs.size());
    return rep;
}

AuditReport audit_w_privacy(const AprioriTable& table, PermutationGenerator generator) {
    AuditReport rep;
    rep.kind = AuditKind::w_privacy;
    std::size_t K = table.K;
    if (factorial(K) > 10'000'000ull) throw std::invalid_argument("per-demand enumeration guard exceeded");
    if (!generator)
        generator = [&table](const std::vector<std::size_t>& w, const std::vector<std::size_t>& s,
                             const QueryChoice& choice) {
            return permutation_from_choice(table, w, s, choice);
        };

    ChoiceSpace cs = query_choice_space(table);
    Rational branch_prob(1, static_cast<std::int64_t>(cs.total()));
    Rational uniform(1, static_cast<std::int64_t>(factorial(K)));

    bool pass = true;
    std::map<std::vector<std::size_t>, Rational> reference;
    bool have_reference = false;
    std::size_t demands = 0;

    for_each_subset(K, table.D, [&](const std::vector<std::size_t>& w) {
        ++demands;
        auto side_dist = side_conditional(K, table.M, w);
        std::map<std::vector<std::size_t>, Rational> dist;
        for (const auto& [s, p_s] : side_dist) {
            QueryChoice choice;
            for (choice.subset_rank = 0; choice.subset_rank < cs.subsets; ++choice.subset_rank)
                for (choice.demand_perm_rank = 0; choice.demand_perm_rank < cs.demand_perms;
                     ++choice.demand_perm_rank)
                    for (choice.side_perm_rank = 0; choice.side_perm_rank < cs.side_perms;
                         ++choice.side_perm_rank)
                        for (choice.rest_perm_rank = 0; choice.rest_perm_rank < cs.rest_perms;
                             ++choice.rest_perm_rank)
                            dist[generator(w, s, choice)] += p_s * branch_prob;
        }
        for (const auto& [pi, p] : dist)
            if (p != uniform) pass = false;
        if (dist.size() != factorial(K)) pass = false;
        if (!have_reference) {
            reference = dist;
            have_reference = true;
        } else if (dist != reference) {
            pass = false;
        }
    });

    rep.pass = pass;
    rep.query_distribution = std::move(reference);
    rep.detail["demands"] = std::to_string(demands);
    rep.detail["branches_per_pair"] = std::to_string(cs.total());
    rep.detail["uniform_target"] = "1/" + std::to_string(factorial(K));
    return rep;
}

AuditReport audit_w_privacy(const PirScheme& scheme) {
    if (scheme.mode != PrivacyMode::w_private)
        throw std::invalid_argument("W-privacy audit applies to W-private schemes");
    return audit_w_privacy(scheme.table);
}

AuditReport audit_w_privacy(const GeneralPirCode& code) { return audit_w_privacy(code.table); }

AuditReport audit_ws_privacy(const Matrix& e, std::size_t M) {
    AuditReport rep;
    rep.kind = AuditKind::ws_privacy;
    std::size_t K = e.cols();
    rep.detail["query"] = "constant";
    if (e.rank() != K - M) {
        rep.pass = false;
        rep.detail["reason"] = "rank != K - M";
        return rep;
    }
    bool ok = true;
    std::vector<std::size_t> offending;
    for_each_subset(K, K - M, [&](const std::vector<std::size_t>& cols) {
        if (!ok) return;
        if (e.submatrix_cols(cols).rank() != K - M) {
            ok = false;
            // the offending side set is the complement of the dependent columns
            for (std::size_t j = 0; j < K; ++j)
                if (!std::binary_search(cols.begin(), cols.end(), j)) offending.push_back(j);
        }
    });
    rep.pass = ok;
    if (!ok) rep.detail["offending_side_set"] = join_indices(offending);
    rep.detail["column_subsets_checked"] = std::to_string(binomial(K, K - M));
    return rep;
}

AuditReport audit_ws_privacy(const PirScheme& scheme) {
    if (scheme.mode != PrivacyMode::ws_private)
        throw std::invalid_argument("WS-privacy audit applies to WS-private schemes");
    return audit_ws_privacy(scheme.h, scheme.M);
}

AuditReport measure_rate(const PirScheme& scheme) {
    AuditReport rep;
    rep.kind = AuditKind::rate;
    std::int64_t K = static_cast<std::int64_t>(scheme.K);
    std::int64_t M = static_cast<std::int64_t>(scheme.M);
    std::int64_t D = static_cast<std::int64_t>(scheme.D);
    std::int64_t t_eff = static_cast<std::int64_t>(scheme.h.rows());
    rep.measured_rate = Rational(D, t_eff);
    if (D == 1) {
        rep.bound = Rational(1, static_cast<std::int64_t>(ceil_div(scheme.K, scheme.M + 1)));
        rep.detail["bound_kind"] = "single_message_capacity";
    } else if (D <= M) {
        rep.bound = Rational(D, static_cast<std::int64_t>(ceil_div(scheme.D * scheme.K, scheme.M + scheme.D)));
        rep.detail["bound_kind"] = "multi_message_capacity";
    } else {
        rep.bound = Rational(D, K - M);
        rep.detail["bound_kind"] = "download_floor";
        rep.detail["download_floor"] = std::to_string(K - M);
    }
    rep.pass = *rep.measured_rate <= *rep.bound;
    rep.detail["equality"] = (*rep.measured_rate == *rep.bound) ? "true" : "false";
    rep.detail["t_effective"] = std::to_string(t_eff);
    return rep;
}

AuditReport measure_rate(const GeneralPirCode& code) {
    AuditReport rep;
    rep.kind = AuditKind::rate;
    std::int64_t t_eff = static_cast<std::int64_t>(code.cosets.t_opt);
    rep.measured_rate = Rational(1, t_eff);
    rep.bound = Rational(1, static_cast<std::int64_t>(ceil_div(code.K, code.M + 1)));
    rep.detail["bound_kind"] = "single_message_capacity";
    rep.pass = *rep.measured_rate <= *rep.bound;
    rep.detail["equality"] = (*rep.measured_rate == *rep.bound) ? "true" : "false";
    rep.detail["t_effective"] = std::to_string(t_eff);
    return rep;
}

}  // namespace pirlrc
