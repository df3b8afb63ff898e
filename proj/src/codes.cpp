#include "pirlrc/codes.hpp"

#include <algorithm>
#include <stdexcept>

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

// message vector for index idx, base-q digits, first coordinate least significant
Vec message_of(std::uint64_t idx, std::uint32_t q, std::size_t k) {
    Vec m(k);
    for (std::size_t t = 0; t < k; ++t) {
        m[t] = static_cast<Elem>(idx % q);
        idx /= q;
    }
    return m;
}

std::size_t weight(const Vec& v) {
    std::size_t w = 0;
    for (Elem e : v)
        if (e != 0) ++w;
    return w;
}

}  // namespace

LinearCode::LinearCode(Matrix g, Matrix h) : generator_(std::move(g)), parity_check_(std::move(h)) {}

LinearCode LinearCode::from_generator(const Matrix& g) {
    Matrix basis = g.row_basis();
    Matrix h = basis.null_space_basis();
    return LinearCode(std::move(basis), std::move(h));
}

LinearCode LinearCode::from_parity_check(const Matrix& h) {
    Matrix basis = h.row_basis();
    Matrix g = basis.null_space_basis();
    return LinearCode(std::move(g), std::move(basis));
}

std::vector<Vec> LinearCode::codewords() const {
    std::uint64_t count = checked_pow(field().q(), k(), kEnumGuard);
    std::vector<Vec> out;
    out.reserve(count);
    for (std::uint64_t idx = 0; idx < count; ++idx)
        out.push_back(generator_.vec_mul(message_of(idx, field().q(), k())));
    return out;
}

std::size_t LinearCode::min_distance() const {
    if (d_) return *d_;
    std::uint64_t count = checked_pow(field().q(), k(), kEnumGuard);
    std::size_t best = n();
    for (std::uint64_t idx = 1; idx < count; ++idx) {
        std::size_t w = weight(generator_.vec_mul(message_of(idx, field().q(), k())));
        if (w < best) best = w;
    }
    d_ = best;
    return best;
}

std::optional<RepairEntry> find_repair_group(const LinearCode& c, std::size_t i, std::size_t r) {
    if (i >= c.n()) throw std::invalid_argument("coordinate out of range");
    const Field& f = c.field();
    const Matrix& h = c.parity_check();
    std::uint64_t count = checked_pow(f.q(), h.rows(), kEnumGuard);

    bool found = false;
    std::vector<std::size_t> best_support;
    Vec best_coeffs;
    for (std::uint64_t idx = 1; idx < count; ++idx) {
        Vec v = h.vec_mul(message_of(idx, f.q(), h.rows()));
        if (v[i] == 0 || weight(v) > r + 1) continue;
        std::vector<std::size_t> support;
        for (std::size_t j = 0; j < v.size(); ++j)
            if (v[j] != 0 && j != i) support.push_back(j);
        // lambda_l = -v_l / v_i, scale invariant
        Vec coeffs(support.size());
        for (std::size_t t = 0; t < support.size(); ++t)
            coeffs[t] = f.div(f.neg(v[support[t]]), v[i]);
        if (!found || support < best_support || (support == best_support && coeffs < best_coeffs)) {
            found = true;
            best_support = std::move(support);
            best_coeffs = std::move(coeffs);
        }
    }
    if (!found) return std::nullopt;
    return RepairEntry{std::move(best_support), std::move(best_coeffs)};
}

std::pair<bool, RepairPlan> verify_all_symbol_locality(const LinearCode& c, std::size_t r) {
    RepairPlan plan;
    plan.r = r;
    plan.ell = 1;
    for (std::size_t i = 0; i < c.n(); ++i) {
        auto entry = find_repair_group(c, i, r);
        if (!entry) return {false, RepairPlan{}};
        plan.entries.push_back(std::move(*entry));
    }
    return {true, std::move(plan)};
}

std::pair<bool, RepairPlan> cooperative_locality(const LinearCode& c, std::size_t r, std::size_t ell) {
    std::size_t n = c.n();
    if (ell > n - 1) throw std::invalid_argument("ell must be <= n-1");
    std::uint64_t gamma_count = 0;
    for (std::size_t s = 0; s <= r && s <= n - ell; ++s) gamma_count += binomial(n - ell, s);
    if (binomial(n, ell) * gamma_count > 10'000'000ull)
        throw std::invalid_argument("cooperative search guard exceeded");

    const Matrix& g = c.generator();
    RepairPlan plan;
    plan.r = r;
    plan.ell = ell;
    bool ok = true;
    for_each_subset(n, ell, [&](const std::vector<std::size_t>& delta) {
        if (!ok) return;
        std::vector<std::size_t> complement;
        for (std::size_t j = 0; j < n; ++j)
            if (!std::binary_search(delta.begin(), delta.end(), j)) complement.push_back(j);
        for (std::size_t s = 0; s <= r && s <= complement.size(); ++s) {
            bool found = false;
            for_each_subset(complement.size(), s, [&](const std::vector<std::size_t>& pick) {
                if (found) return;
                std::vector<std::size_t> gamma;
                for (std::size_t t : pick) gamma.push_back(complement[t]);
                std::vector<std::size_t> both = gamma;
                both.insert(both.end(), delta.begin(), delta.end());
                std::size_t rg = s == 0 ? 0 : g.submatrix_cols(gamma).rank();
                if (rg == g.submatrix_cols(both).rank()) {
                    plan.cooperative[delta] = gamma;
                    found = true;
                }
            });
            if (found) break;
            if (s == std::min<std::size_t>(r, complement.size())) ok = false;
        }
    });
    if (!ok) return {false, RepairPlan{}};
    return {true, std::move(plan)};
}

BoundsReport check_bounds(const LinearCode& c, const RepairPlan& plan) {
    std::int64_t n = static_cast<std::int64_t>(c.n());
    std::int64_t k = static_cast<std::int64_t>(c.k());
    std::int64_t r = static_cast<std::int64_t>(plan.r);
    std::int64_t ell = static_cast<std::int64_t>(plan.ell);
    std::int64_t d = static_cast<std::int64_t>(c.min_distance());
    if (r < 1) throw std::invalid_argument("bounds require locality r >= 1");

    auto ceil_div = [](std::int64_t a, std::int64_t b) { return (a + b - 1) / b; };

    BoundsReport rep;
    rep.singleton_lrc_bound.value = Rational(n - k - ceil_div(k, r) + 2);
    rep.singleton_lrc_bound.satisfied = Rational(d) <= rep.singleton_lrc_bound.value;

    if (r >= ell) {
        BoundCheck coop;
        coop.value = Rational(n - k + 1 - ell * (ceil_div(k, r) - 1));
        coop.satisfied = Rational(d) <= coop.value;
        rep.cooperative_bound = coop;
    }

    std::int64_t exponent = n - ceil_div(n, r + 1);
    std::int64_t max_size = 1;
    for (std::int64_t i = 0; i < exponent; ++i) {
        max_size *= c.field().q();
        if (max_size > (1ll << 40)) throw std::invalid_argument("max-size bound overflows desk scale");
    }
    rep.max_size_bound.value = Rational(max_size);
    rep.max_size_bound.satisfied = k <= exponent;

    rep.rate_bound_classical.value = Rational(r, r + 1);
    rep.rate_bound_classical.satisfied = Rational(k, n) <= rep.rate_bound_classical.value;

    if (ell > r) {
        BoundCheck coop_rate;
        coop_rate.value = Rational(r, n);
        coop_rate.satisfied = Rational(k, n) <= coop_rate.value;
        rep.rate_bound_cooperative_large_ell = coop_rate;
    }
    return rep;
}

StructureCheck check_structure_theorem(const LinearCode& c, const RepairPlan& plan) {
    std::size_t n = c.n(), k = c.k(), r = plan.r;
    if (r == 0 || k % r != 0 || r >= k || n != k + k / r) return StructureCheck::not_applicable;
    std::vector<std::vector<std::size_t>> gammas;
    for (std::size_t i = 0; i < plan.entries.size(); ++i) {
        std::vector<std::size_t> g = plan.entries[i].group;
        g.push_back(i);
        std::sort(g.begin(), g.end());
        gammas.push_back(std::move(g));
    }
    for (std::size_t i = 0; i < gammas.size(); ++i)
        for (std::size_t j = i + 1; j < gammas.size(); ++j) {
            if (gammas[i] == gammas[j]) continue;
            std::vector<std::size_t> inter;
            std::set_intersection(gammas[i].begin(), gammas[i].end(), gammas[j].begin(),
                                  gammas[j].end(), std::back_inserter(inter));
            if (!inter.empty()) return StructureCheck::applicable_fail;
        }
    return StructureCheck::applicable_pass;
}

RepairEntry pad_repair_entry(const RepairEntry& e, std::size_t i, std::size_t m, std::size_t n) {
    if (e.group.size() > m) throw std::invalid_argument("repair group larger than pad target");
    RepairEntry out = e;
    for (std::size_t j = 0; j < n && out.group.size() < m; ++j) {
        if (j == i || std::find(e.group.begin(), e.group.end(), j) != e.group.end()) continue;
        out.group.push_back(j);
        out.coefficients.push_back(0);
    }
    if (out.group.size() < m) throw std::invalid_argument("cannot pad repair group to size m");
    // keep group sorted with coefficients aligned
    std::vector<std::size_t> order(out.group.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return out.group[a] < out.group[b]; });
    RepairEntry sorted;
    for (std::size_t t : order) {
        sorted.group.push_back(out.group[t]);
        sorted.coefficients.push_back(out.coefficients[t]);
    }
    return sorted;
}

std::vector<std::size_t> pad_cooperative_set(const std::vector<std::size_t>& gamma,
                                             const std::vector<std::size_t>& delta, std::size_t m,
                                             std::size_t n) {
    if (gamma.size() > m) throw std::invalid_argument("cooperative set larger than pad target");
    std::vector<std::size_t> out = gamma;
    for (std::size_t j = 0; j < n && out.size() < m; ++j) {
        if (std::find(gamma.begin(), gamma.end(), j) != gamma.end()) continue;
        if (std::find(delta.begin(), delta.end(), j) != delta.end()) continue;
        out.push_back(j);
    }
    if (out.size() < m) throw std::invalid_argument("cannot pad cooperative set to size m");
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace pirlrc
