#include "pirlrc/pir_general.hpp"

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

Vec vector_of(std::uint64_t idx, std::uint32_t q, std::size_t n) {
    Vec v(n);
    for (std::size_t t = 0; t < n; ++t) {
        v[t] = static_cast<Elem>(idx % q);
        idx /= q;
    }
    return v;
}

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

// true iff the coordinates in group functionally determine coordinate i on
// every codeword
bool determines(const GeneralLrc& lrc, const std::vector<std::size_t>& group, std::size_t i) {
    std::unordered_map<std::uint64_t, Elem> table;
    for (const Vec& c : lrc.codewords) {
        Vec proj;
        for (std::size_t l : group) proj.push_back(c[l]);
        auto [it, inserted] = table.emplace(lrc.pack(proj), c[i]);
        if (!inserted && it->second != c[i]) return false;
    }
    return true;
}

}  // namespace

std::uint64_t GeneralLrc::pack(const Vec& values) const {
    std::uint64_t key = 0, scale = 1;
    for (Elem v : values) {
        key += scale * v;
        scale *= field.q();
    }
    return key;
}

Elem GeneralLrc::repair_coordinate(std::size_t i, const Vec& group_values) const {
    auto it = repair[i].find(pack(group_values));
    if (it == repair[i].end())
        throw std::runtime_error("repair lookup undefined: inconsistent side values");
    return it->second;
}

bool GeneralLrc::contains(const Vec& v) const {
    return std::binary_search(codewords.begin(), codewords.end(), v);
}

std::size_t GeneralLrc::dimension() const {
    std::uint64_t count = codewords.size();
    std::size_t k = 0;
    while (count > 1) {
        if (count % field.q() != 0)
            throw std::invalid_argument("codeword count is not a power of q");
        count /= field.q();
        ++k;
    }
    return k;
}

GeneralLrc general_from_linear(const LinearCode& code, const RepairPlan& plan) {
    GeneralLrc lrc{code.field(), code.n(), plan.r, code.codewords(), {}, {}};
    std::sort(lrc.codewords.begin(), lrc.codewords.end());
    for (std::size_t i = 0; i < lrc.n; ++i) {
        lrc.groups.push_back(plan.entries[i].group);
        std::unordered_map<std::uint64_t, Elem> table;
        for (const Vec& c : lrc.codewords) {
            Vec proj;
            for (std::size_t l : plan.entries[i].group) proj.push_back(c[l]);
            std::uint64_t key = lrc.pack(proj);
            auto [it, inserted] = table.emplace(key, c[i]);
            if (!inserted && it->second != c[i])
                throw std::runtime_error("repair relation does not hold on all codewords");
        }
        lrc.repair.push_back(std::move(table));
    }
    return lrc;
}

std::pair<std::vector<std::size_t>, std::vector<std::size_t>> greedy_partition(
    const GeneralLrc& lrc, std::size_t r) {
    std::size_t n = lrc.n;
    std::size_t t_opt = ceil_div(n, r + 1);
    std::uint64_t expected = checked_pow(lrc.field.q(), n - t_opt, kEnumGuard);
    if (lrc.codewords.size() != expected)
        throw std::invalid_argument("greedy partition requires an optimal code: |C| = q^(n - ceil(n/(r+1)))");

    std::vector<bool> in_p1(n, false), in_p2(n, false);
    std::vector<std::size_t> p1, p2;
    std::size_t covered = 0;
    while (covered < n) {
        std::size_t i = 0;
        while (in_p1[i] || in_p2[i]) ++i;

        // any repair group of i works for the construction, provided it
        // avoids P2; prefer the stored group, else search the candidates
        std::vector<std::size_t> group = lrc.groups[i];
        bool clashes = std::any_of(group.begin(), group.end(),
                                   [&](std::size_t l) { return in_p2[l]; });
        if (clashes) {
            std::vector<std::size_t> candidates;
            for (std::size_t l = 0; l < n; ++l)
                if (l != i && !in_p2[l]) candidates.push_back(l);
            bool found = false;
            for (std::size_t size = 0; size <= r && !found; ++size) {
                for_each_subset(candidates.size(), size, [&](const std::vector<std::size_t>& pick) {
                    if (found) return;
                    std::vector<std::size_t> g;
                    for (std::size_t t : pick) g.push_back(candidates[t]);
                    if (determines(lrc, g, i)) {
                        group = std::move(g);
                        found = true;
                    }
                });
            }
            if (!found)
                throw std::invalid_argument("greedy partition failed: no repair group avoids P2");
        }

        for (std::size_t l : group) {
            if (!in_p1[l]) {
                in_p1[l] = true;
                p1.push_back(l);
            }
        }
        in_p2[i] = true;
        p2.push_back(i);
        covered = p1.size() + p2.size();
    }
    if (p2.size() != t_opt)
        throw std::invalid_argument("greedy partition failed: |P2| != ceil(n/(r+1))");
    std::sort(p1.begin(), p1.end());
    std::sort(p2.begin(), p2.end());
    return {std::move(p1), std::move(p2)};
}

Vec CosetSystem::translation(std::uint64_t a) const {
    Vec u(base.n, 0);
    std::uint32_t q = base.field.q();
    for (std::size_t t = 0; t < p2.size(); ++t) {
        u[p2[t]] = static_cast<Elem>(a % q);
        a /= q;
    }
    return u;
}

std::uint64_t CosetSystem::coset_of(const Vec& y) const {
    Vec proj;
    for (std::size_t l : p1) proj.push_back(y[l]);
    auto it = p1_index.find(base.pack(proj));
    if (it == p1_index.end()) throw std::runtime_error("vector not covered by any coset");
    const Vec& c = base.codewords[it->second];
    const Field& f = base.field;
    std::uint64_t a = 0, scale = 1;
    for (std::size_t l : p2) {
        a += scale * f.sub(y[l], c[l]);
        scale *= f.q();
    }
    return a;
}

CosetSystem coset_system(const GeneralLrc& lrc, std::size_t r) {
    auto [p1, p2] = greedy_partition(lrc, r);
    CosetSystem cs{lrc, p2.size(), std::move(p1), std::move(p2), {}};

    for (std::size_t idx = 0; idx < cs.base.codewords.size(); ++idx) {
        Vec proj;
        for (std::size_t l : cs.p1) proj.push_back(cs.base.codewords[idx][l]);
        auto [it, inserted] = cs.p1_index.emplace(cs.base.pack(proj), idx);
        if (!inserted)
            throw std::invalid_argument("coordinates P2 are not a function of P1 on the code");
    }

    // exhaustive partition check over GF(q)^n
    std::uint64_t space = checked_pow(lrc.field.q(), lrc.n, kEnumGuard);
    std::uint64_t translations = checked_pow(lrc.field.q(), cs.t_opt, kEnumGuard);
    std::vector<std::uint64_t> counts(translations, 0);
    const Field& f = lrc.field;
    for (std::uint64_t idx = 0; idx < space; ++idx) {
        Vec y = vector_of(idx, f.q(), lrc.n);
        std::uint64_t a = cs.coset_of(y);
        Vec u = cs.translation(a);
        Vec c(lrc.n);
        for (std::size_t t = 0; t < lrc.n; ++t) c[t] = f.sub(y[t], u[t]);
        if (!lrc.contains(c)) throw std::runtime_error("coset coverage check failed");
        counts[a] += 1;
    }
    for (std::uint64_t cnt : counts)
        if (cnt != lrc.codewords.size()) throw std::runtime_error("cosets do not partition the space");
    return cs;
}

GeneralPirCode make_general_pir(const GeneralLrc& lrc, std::size_t M) {
    if (lrc.r > M) throw std::invalid_argument("base code locality exceeds side information size");
    CosetSystem cs = coset_system(lrc, lrc.r);
    if (cs.t_opt != ceil_div(lrc.n, M + 1))
        throw std::invalid_argument("answer length does not match ceil(K/(M+1))");
    AprioriTable table;
    table.K = lrc.n;
    table.M = M;
    table.D = 1;
    for (std::size_t i = 0; i < lrc.n; ++i) {
        RepairEntry e{lrc.groups[i], Vec(lrc.groups[i].size(), 0)};
        table.gamma[{i}] = pad_repair_entry(e, i, M, lrc.n).group;
    }
    return GeneralPirCode{lrc.n, M, std::move(cs), std::move(table)};
}

PirQuery generate_query(const GeneralPirCode& code, std::size_t w,
                        const std::vector<std::size_t>& s, std::mt19937_64& rng) {
    ChoiceSpace cs = query_choice_space(code.table);
    QueryChoice choice;
    choice.subset_rank = bounded_uniform(rng, cs.subsets);
    choice.demand_perm_rank = bounded_uniform(rng, cs.demand_perms);
    choice.side_perm_rank = bounded_uniform(rng, cs.side_perms);
    choice.rest_perm_rank = bounded_uniform(rng, cs.rest_perms);
    return PirQuery{PrivacyMode::w_private, permutation_from_choice(code.table, {w}, s, choice)};
}

PirAnswer answer_encode(const GeneralPirCode& code, const std::vector<std::size_t>& pi, const Vec& x) {
    if (x.size() != code.K) throw std::invalid_argument("database must have K entries");
    Vec y(code.K);
    for (std::size_t i = 0; i < code.K; ++i) y[pi[i]] = x[i];
    std::uint64_t a = code.cosets.coset_of(y);
    return PirAnswer{vector_of(a, code.cosets.base.field.q(), code.cosets.t_opt)};
}

Elem recover_general(const GeneralPirCode& code, const std::vector<std::size_t>& pi,
                     const PirAnswer& answer, std::size_t w, const std::vector<std::size_t>& s,
                     const Vec& x_s) {
    const GeneralLrc& base = code.cosets.base;
    const Field& f = base.field;
    std::uint64_t a = 0, scale = 1;
    for (Elem digit : answer.values) {
        a += scale * digit;
        scale *= f.q();
    }
    Vec u = code.cosets.translation(a);

    std::size_t w_prime = pi[w];
    const std::vector<std::size_t>& group = base.groups[w_prime];
    Vec group_codeword_values;
    for (std::size_t l : group) {
        bool found = false;
        for (std::size_t t = 0; t < s.size(); ++t) {
            if (pi[s[t]] == l) {
                group_codeword_values.push_back(f.sub(x_s[t], u[l]));
                found = true;
                break;
            }
        }
        if (!found) throw std::runtime_error("side information does not cover the repair group");
    }
    Elem c_w = base.repair_coordinate(w_prime, group_codeword_values);
    return f.add(c_w, u[w_prime]);
}

GeneralLrc extract_lrc_from_pir(const std::function<Vec(const Vec&)>& answer_function,
                                std::size_t K, std::size_t T, std::size_t M, const Field& field) {
    if (T == 0 || T >= K) throw std::invalid_argument("require 0 < T < K");
    std::uint64_t space = checked_pow(field.q(), K, kEnumGuard);

    std::map<Vec, std::vector<Vec>> fibers;
    for (std::uint64_t idx = 0; idx < space; ++idx) {
        Vec x = vector_of(idx, field.q(), K);
        Vec a = answer_function(x);
        if (a.size() != T) throw std::invalid_argument("answer function length != T");
        fibers[a].push_back(std::move(x));
    }
    // most popular answer; ties go to the lexicographically smallest answer
    const std::vector<Vec>* best = nullptr;
    for (const auto& [a, members] : fibers)
        if (!best || members.size() > best->size()) best = &members;

    GeneralLrc lrc{field, K, M, *best, {}, {}};
    std::sort(lrc.codewords.begin(), lrc.codewords.end());

    for (std::size_t i = 0; i < K; ++i) {
        std::vector<std::size_t> others;
        for (std::size_t j = 0; j < K; ++j)
            if (j != i) others.push_back(j);
        bool done = false;
        for_each_subset(others.size(), M, [&](const std::vector<std::size_t>& pick) {
            if (done) return;
            std::vector<std::size_t> group;
            for (std::size_t t : pick) group.push_back(others[t]);
            std::unordered_map<std::uint64_t, Elem> table;
            for (const Vec& c : lrc.codewords) {
                Vec proj;
                for (std::size_t l : group) proj.push_back(c[l]);
                auto [it, inserted] = table.emplace(lrc.pack(proj), c[i]);
                if (!inserted && it->second != c[i]) return;  // not a decoder, try next set
            }
            lrc.groups.push_back(group);
            lrc.repair.push_back(std::move(table));
            done = true;
        });
        if (!done)
            throw std::runtime_error("no decoder exists for coordinate " + std::to_string(i + 1) +
                                     ": input violates the necessary condition");
    }
    return lrc;
}

GeneralLrc wrap_nonlinear(const GeneralLrc& lrc, const std::vector<std::vector<Elem>>& sigmas) {
    if (sigmas.size() != lrc.n) throw std::invalid_argument("need one bijection per coordinate");
    std::uint32_t q = lrc.field.q();
    for (const auto& sigma : sigmas) {
        if (sigma.size() != q) throw std::invalid_argument("bijection must cover all field elements");
        std::vector<bool> seen(q, false);
        for (Elem v : sigma) {
            if (v >= q || seen[v]) throw std::invalid_argument("sigma is not a bijection");
            seen[v] = true;
        }
    }
    GeneralLrc out{lrc.field, lrc.n, lrc.r, {}, lrc.groups, {}};
    for (const Vec& c : lrc.codewords) {
        Vec mapped(lrc.n);
        for (std::size_t i = 0; i < lrc.n; ++i) mapped[i] = sigmas[i][c[i]];
        out.codewords.push_back(std::move(mapped));
    }
    std::sort(out.codewords.begin(), out.codewords.end());
    for (std::size_t i = 0; i < lrc.n; ++i) {
        std::unordered_map<std::uint64_t, Elem> table;
        const auto& group = lrc.groups[i];
        for (const auto& [key, value] : lrc.repair[i]) {
            std::uint64_t old_key = key, new_key = 0, scale = 1;
            for (std::size_t l : group) {
                Elem digit = static_cast<Elem>(old_key % q);
                old_key /= q;
                new_key += scale * sigmas[l][digit];
                scale *= q;
            }
            table.emplace(new_key, sigmas[i][value]);
        }
        out.repair.push_back(std::move(table));
    }
    return out;
}

}  // namespace pirlrc
