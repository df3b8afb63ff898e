#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pirlrc/audit.hpp"
#include "pirlrc/combinatorics.hpp"
#include "pirlrc/constructions.hpp"

using namespace pirlrc;

namespace {

Field f2() { return Field::make(2, 1); }

PirScheme repetition_scheme() {
    return make_w_private_scheme(Matrix(f2(), 2, 3, {1, 1, 0, 0, 1, 1}), 1, 1);
}

PirScheme pac62_scheme() {
    return make_w_private_scheme(partition_and_code(6, 2, f2()), 2, 1);
}

}  // namespace

TEST_CASE("recoverability audit passes exhaustively on PaC (6,2)") {
    AuditReport r = audit_recoverability(pac62_scheme());
    CHECK(r.pass);
    CHECK(r.kind == AuditKind::recoverability);
    // 6 demands x C(5,2) sides x 2^6 databases
    CHECK(r.detail.at("cases") == std::to_string(6 * 10 * 64));
    CHECK(r.detail.at("failures") == "0");
}

TEST_CASE("recoverability audit on the general coset scheme") {
    LinearCode code = LinearCode::from_parity_check(partition_and_code(6, 2, f2()));
    auto [ok, plan] = verify_all_symbol_locality(code, 2);
    REQUIRE(ok);
    GeneralPirCode g = make_general_pir(general_from_linear(code, plan), 2);
    CHECK(audit_recoverability(g).pass);
}

TEST_CASE("W-privacy is exactly uniform 1/K!") {
    AuditReport r = audit_w_privacy(repetition_scheme());
    CHECK(r.pass);
    CHECK(r.query_distribution.size() == 6);
    for (const auto& [pi, p] : r.query_distribution) CHECK(p == Rational(1, 6));

    AuditReport r2 = audit_w_privacy(pac62_scheme());
    CHECK(r2.pass);
    CHECK(r2.query_distribution.size() == 720);
    for (const auto& [pi, p] : r2.query_distribution) CHECK(p == Rational(1, 720));
}

TEST_CASE("query distribution sums to one") {
    AuditReport r = audit_w_privacy(pac62_scheme());
    Rational total(0);
    for (const auto& [pi, p] : r.query_distribution) total += p;
    CHECK(total == Rational(1));
}

TEST_CASE("the general coset scheme inherits exact privacy") {
    LinearCode code = LinearCode::from_generator(Matrix(f2(), 1, 3, {1, 1, 1}));
    auto [ok, plan] = verify_all_symbol_locality(code, 1);
    REQUIRE(ok);
    GeneralPirCode g = make_general_pir(general_from_linear(code, plan), 1);
    AuditReport r = audit_w_privacy(g);
    CHECK(r.pass);
    for (const auto& [pi, p] : r.query_distribution) CHECK(p == Rational(1, 6));
}

TEST_CASE("a broken generator is caught") {
    PirScheme s = repetition_scheme();
    PermutationGenerator identity_only = [&](const std::vector<std::size_t>&,
                                             const std::vector<std::size_t>&,
                                             const QueryChoice&) {
        return std::vector<std::size_t>{0, 1, 2};
    };
    AuditReport r = audit_w_privacy(s.table, identity_only);
    CHECK_FALSE(r.pass);
    CHECK(r.query_distribution.at({0, 1, 2}) == Rational(1));
}

TEST_CASE("WS-privacy audit") {
    Field f5 = Field::make(5, 1);
    PirScheme s = make_ws_private_scheme(grs_mds_parity_check(4, 2, f5), 2, 1);
    CHECK(audit_ws_privacy(s).pass);

    // one dependent column pair -> fail, reporting the offending side set
    Matrix bad(f2(), 2, 4, {1, 1, 0, 0, 0, 0, 1, 1});
    AuditReport r = audit_ws_privacy(bad, 2);
    CHECK_FALSE(r.pass);
    CHECK(r.detail.count("offending_side_set") == 1);

    // M = 0 degenerate: E must have rank K
    Field f7 = Field::make(7, 1);
    CHECK(audit_ws_privacy(grs_mds_parity_check(4, 0, f7), 0).pass);
}

TEST_CASE("rate measurement against the capacity bounds") {
    AuditReport pac = measure_rate(pac62_scheme());
    CHECK(pac.measured_rate == Rational(1, 2));
    CHECK(pac.bound == Rational(1, 2));  // 1/ceil(6/3), met with equality
    CHECK(pac.pass);

    PirScheme mm = make_w_private_scheme(simplex_code(3).parity_check(), 3, 2);
    AuditReport r = measure_rate(mm);
    CHECK(r.measured_rate == Rational(1, 2));  // D/T = 2/4
    CHECK(r.bound == Rational(2, 3));          // 2/ceil(14/5), strict
    CHECK(r.pass);

    Field f5 = Field::make(5, 1);
    PirScheme ws = make_ws_private_scheme(grs_mds_parity_check(4, 2, f5), 2, 1);
    AuditReport wr = measure_rate(ws);
    CHECK(wr.measured_rate == Rational(1, 2));  // T = K - M = 2
    CHECK(wr.pass);
}

TEST_CASE("reports render machine-readable lines") {
    AuditReport r = audit_w_privacy(repetition_scheme());
    std::string text = r.render();
    CHECK(text.find("pass=true") != std::string::npos);
    CHECK(text.find("1/6") != std::string::npos);
}

TEST_CASE("download floors") {
    // single message: T >= ceil(K/(M+1)) on every shipped scheme
    CHECK(pac62_scheme().h.rows() == 2);
    PirScheme simplex = make_w_private_scheme(simplex_code(3).parity_check(), 2, 1);
    CHECK(simplex.h.rows() >= (7 + 2) / 3);
    // D > M: T >= K - M
    Field f5 = Field::make(5, 1);
    PirScheme ws = make_ws_private_scheme(grs_mds_parity_check(5, 2, f5), 2, 3);
    CHECK(ws.h.rows() >= 3);
}
