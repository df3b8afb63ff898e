#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pirlrc/constructions.hpp"
#include "pirlrc/pir_general.hpp"

using namespace pirlrc;

namespace {

Field f2() { return Field::make(2, 1); }

// the (3,1) repetition code {000, 111} with locality-1 repair
GeneralLrc repetition_lrc() {
    LinearCode code = LinearCode::from_generator(Matrix(f2(), 1, 3, {1, 1, 1}));
    auto [ok, plan] = verify_all_symbol_locality(code, 1);
    REQUIRE(ok);
    return general_from_linear(code, plan);
}

GeneralLrc pac_lrc() {
    LinearCode code = LinearCode::from_parity_check(partition_and_code(6, 2, f2()));
    auto [ok, plan] = verify_all_symbol_locality(code, 2);
    REQUIRE(ok);
    return general_from_linear(code, plan);
}

void enumerate_databases(const Field& f, std::size_t K, const std::function<void(const Vec&)>& fn) {
    Vec x(K, 0);
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < K; ++i) total *= f.q();
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t v = idx;
        for (std::size_t i = 0; i < K; ++i) {
            x[i] = static_cast<Elem>(v % f.q());
            v /= f.q();
        }
        fn(x);
    }
}

Vec side_values(const Vec& x, const std::vector<std::size_t>& s) {
    Vec out;
    for (std::size_t i : s) out.push_back(x[i]);
    return out;
}

}  // namespace

TEST_CASE("general LRC from a linear code") {
    GeneralLrc g = repetition_lrc();
    CHECK(g.n == 3);
    CHECK(g.codewords == std::vector<Vec>{{0, 0, 0}, {1, 1, 1}});
    CHECK(g.dimension() == 1);
    CHECK(g.contains({1, 1, 1}));
    CHECK_FALSE(g.contains({1, 0, 1}));
    for (const Vec& cw : g.codewords)
        for (std::size_t i = 0; i < 3; ++i)
            CHECK(g.repair_coordinate(i, side_values(cw, g.groups[i])) == cw[i]);
}

TEST_CASE("greedy partition") {
    auto [p1, p2] = greedy_partition(repetition_lrc(), 1);
    CHECK(p2 == std::vector<std::size_t>{0, 2});
    CHECK(p1 == std::vector<std::size_t>{1});

    auto [q1, q2] = greedy_partition(pac_lrc(), 2);
    CHECK(q2 == std::vector<std::size_t>{0, 3});
    CHECK(q1 == std::vector<std::size_t>{1, 2, 4, 5});

    // non-optimal code: (7,4) Hamming has locality 3 but 2^4 != 2^(7-2)
    LinearCode hamming = LinearCode::from_parity_check(simplex_code(3).generator());
    auto [ok, plan] = verify_all_symbol_locality(hamming, 3);
    REQUIRE(ok);
    CHECK_THROWS(greedy_partition(general_from_linear(hamming, plan), 3));
}

TEST_CASE("coset system on the repetition code") {
    CosetSystem cs = coset_system(repetition_lrc(), 1);
    CHECK(cs.t_opt == 2);
    CHECK(cs.p2 == std::vector<std::size_t>{0, 2});

    // translations supported on P2, least significant digit on coordinate 0
    CHECK(cs.translation(0) == Vec{0, 0, 0});
    CHECK(cs.translation(1) == Vec{1, 0, 0});
    CHECK(cs.translation(2) == Vec{0, 0, 1});
    CHECK(cs.translation(3) == Vec{1, 0, 1});

    // cosets partition GF(2)^3: every vector has exactly one home
    std::vector<std::size_t> seen(4, 0);
    enumerate_databases(f2(), 3, [&](const Vec& y) { seen[cs.coset_of(y)]++; });
    CHECK(seen == std::vector<std::size_t>{2, 2, 2, 2});

    CHECK(cs.coset_of({0, 1, 0}) == 3);  // 010 = 111 + 101
    CHECK(cs.coset_of({1, 1, 1}) == 0);
}

TEST_CASE("general PIR answer and recovery, exhaustive K=3") {
    GeneralPirCode code = make_general_pir(repetition_lrc(), 1);
    CHECK(code.K == 3);

    std::vector<std::size_t> identity{0, 1, 2};
    CHECK(answer_encode(code, identity, {0, 1, 0}).values == Vec{1, 1});
    CHECK(answer_encode(code, identity, {1, 1, 1}).values == Vec{0, 0});

    // a generally changes under another permutation for the same X
    CHECK(answer_encode(code, {1, 0, 2}, {0, 1, 0}).values != Vec{1, 1});

    std::mt19937_64 rng(5);
    for (std::size_t w = 0; w < 3; ++w)
        for (std::size_t si = 0; si < 3; ++si) {
            if (si == w) continue;
            std::vector<std::size_t> S{si};
            for (int rep = 0; rep < 6; ++rep) {
                PirQuery q = generate_query(code, w, S, rng);
                enumerate_databases(f2(), 3, [&](const Vec& x) {
                    PirAnswer a = answer_encode(code, q.pi, x);
                    CHECK(recover_general(code, q.pi, a, w, S, side_values(x, S)) == x[w]);
                });
            }
        }
}

TEST_CASE("PaC-based coset code recovers over all 4096 databases") {
    GeneralPirCode code = make_general_pir(pac_lrc(), 2);
    CHECK(code.cosets.t_opt == 2);
    std::mt19937_64 rng(17);
    std::size_t w = 4;
    std::vector<std::size_t> S{1, 2};
    PirQuery q = generate_query(code, w, S, rng);
    enumerate_databases(f2(), 6, [&](const Vec& x) {
        PirAnswer a = answer_encode(code, q.pi, x);
        CHECK(recover_general(code, q.pi, a, w, S, side_values(x, S)) == x[w]);
    });
}

TEST_CASE("extraction recovers the base code from the answer map") {
    GeneralPirCode code = make_general_pir(pac_lrc(), 2);
    std::vector<std::size_t> identity{0, 1, 2, 3, 4, 5};
    auto answer_map = [&](const Vec& x) { return answer_encode(code, identity, x).values; };
    GeneralLrc extracted = extract_lrc_from_pir(answer_map, 6, 2, 2, f2());
    CHECK(extracted.codewords.size() == 16);  // >= 2^(6-2), met with equality
    CHECK(extracted.codewords == pac_lrc().codewords);
    for (const Vec& cw : extracted.codewords)
        for (std::size_t i = 0; i < 6; ++i)
            CHECK(extracted.repair_coordinate(i, side_values(cw, extracted.groups[i])) == cw[i]);

    CHECK_THROWS(extract_lrc_from_pir(answer_map, 6, 0, 2, f2()));  // T = 0 degenerate
    CHECK_THROWS(extract_lrc_from_pir(answer_map, 6, 6, 2, f2()));
}

TEST_CASE("wrap_nonlinear produces a genuinely non-linear relabeling") {
    GeneralLrc base = repetition_lrc();
    std::vector<std::vector<Elem>> flip_first{{1, 0}, {0, 1}, {0, 1}};
    GeneralLrc wrapped = wrap_nonlinear(base, flip_first);
    CHECK(wrapped.contains({1, 0, 0}));
    CHECK(wrapped.contains({0, 1, 1}));
    CHECK(wrapped.codewords.size() == 2);
    // 100 + 011 = 111 is not a codeword: not closed under addition
    CHECK_FALSE(wrapped.contains({1, 1, 1}));
    for (const Vec& cw : wrapped.codewords)
        for (std::size_t i = 0; i < 3; ++i)
            CHECK(wrapped.repair_coordinate(i, side_values(cw, wrapped.groups[i])) == cw[i]);

    std::vector<std::vector<Elem>> ident{{0, 1}, {0, 1}, {0, 1}};
    CHECK(wrap_nonlinear(base, ident).codewords == base.codewords);

    std::vector<std::vector<Elem>> bad{{0, 0}, {0, 1}, {0, 1}};
    CHECK_THROWS(wrap_nonlinear(base, bad));
}

TEST_CASE("coset machinery works on the non-linear relabeling") {
    GeneralLrc wrapped = repetition_lrc();
    wrapped = wrap_nonlinear(wrapped, {{1, 0}, {0, 1}, {0, 1}});
    CosetSystem cs = coset_system(wrapped, 1);
    std::vector<std::size_t> seen(4, 0);
    enumerate_databases(f2(), 3, [&](const Vec& y) { seen[cs.coset_of(y)]++; });
    CHECK(seen == std::vector<std::size_t>{2, 2, 2, 2});

    GeneralPirCode code = make_general_pir(wrapped, 1);
    std::mt19937_64 rng(23);
    for (std::size_t w = 0; w < 3; ++w) {
        std::vector<std::size_t> S{w == 0 ? 1u : 0u};
        PirQuery q = generate_query(code, w, S, rng);
        enumerate_databases(f2(), 3, [&](const Vec& x) {
            PirAnswer a = answer_encode(code, q.pi, x);
            CHECK(recover_general(code, q.pi, a, w, S, side_values(x, S)) == x[w]);
        });
    }
}
