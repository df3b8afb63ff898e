#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pirlrc/constructions.hpp"
#include "pirlrc/io.hpp"
#include "pirlrc/protocol.hpp"
#include "pirlrc/session.hpp"

using namespace pirlrc;

TEST_CASE("frame codec round trip") {
    Frame f{FrameType::query, "2 3 1"};
    std::string wire = encode_frame(f);
    CHECK(wire.size() == 4 + 1 + 4 + 5);
    CHECK(wire.substr(0, 4) == "PIR1");
    std::string buf = wire;
    auto decoded = try_decode_frame(buf);
    REQUIRE(decoded.has_value());
    CHECK(*decoded == f);
    CHECK(buf.empty());
}

TEST_CASE("hello frame with empty payload is 9 bytes") {
    CHECK(encode_frame(Frame{FrameType::hello, ""}).size() == 9);
}

TEST_CASE("partial frames buffer until the length is satisfied") {
    std::string wire = encode_frame(Frame{FrameType::answer, "1 0"});
    std::string buf;
    for (std::size_t i = 0; i + 1 < wire.size(); ++i) {
        buf.push_back(wire[i]);
        CHECK_FALSE(try_decode_frame(buf).has_value());
    }
    buf.push_back(wire.back());
    CHECK(try_decode_frame(buf).has_value());
}

TEST_CASE("corrupted magic and unknown types are rejected") {
    std::string wire = encode_frame(Frame{FrameType::hello, "x"});
    std::string bad = wire;
    bad[0] = 'Q';
    CHECK_THROWS(try_decode_frame(bad));

    std::string badtype = wire;
    badtype[4] = 0x7f;
    CHECK_THROWS(try_decode_frame(badtype));
}

TEST_CASE("matrix text format") {
    Matrix m = parse_matrix("2 1 3\n1 1 1\n");
    CHECK(m == Matrix(Field::make(2, 1), 1, 3, {1, 1, 1}));
    CHECK(serialize_matrix(m) == "2 1 3\n1 1 1\n");

    Field f5 = Field::make(5, 1);
    Matrix grs = grs_mds_parity_check(4, 2, f5);
    CHECK(parse_matrix(serialize_matrix(grs)) == grs);

    CHECK_THROWS(parse_matrix("5 1 2\n5 0\n"));   // entry out of range
    CHECK_THROWS(parse_matrix("2 2 2\n1 0\n"));   // wrong count
    CHECK_THROWS(parse_matrix("junk"));
}

TEST_CASE("code format round trip") {
    LinearCode c = simplex_code(3);
    LinearCode back = parse_code(serialize_code(c));
    CHECK(back.generator() == c.generator());
    CHECK(back.parity_check() == c.parity_check());
}

TEST_CASE("general code format round trip") {
    LinearCode code = LinearCode::from_generator(Matrix(Field::make(2, 1), 1, 3, {1, 1, 1}));
    auto [ok, plan] = verify_all_symbol_locality(code, 1);
    REQUIRE(ok);
    GeneralLrc g = general_from_linear(code, plan);
    GeneralLrc back = parse_general(serialize_general(g));
    CHECK(back.codewords == g.codewords);
    CHECK(back.groups == g.groups);
    for (const Vec& cw : g.codewords)
        for (std::size_t i = 0; i < 3; ++i) {
            Vec vals;
            for (std::size_t l : back.groups[i]) vals.push_back(cw[l]);
            CHECK(back.repair_coordinate(i, vals) == cw[i]);
        }
}

TEST_CASE("query and answer formats") {
    PirQuery q = parse_query("2 3 1", 3);
    CHECK(q.pi == std::vector<std::size_t>{1, 2, 0});
    CHECK(serialize_query(q) == "2 3 1");

    PirQuery c = parse_query("const", 4);
    CHECK(c.mode == PrivacyMode::ws_private);
    CHECK(c.pi.empty());
    CHECK(serialize_query(c) == "const");

    CHECK_THROWS(parse_query("1 1 2", 3));  // not a bijection
    CHECK_THROWS(parse_query("1 2", 3));

    Field f5 = Field::make(5, 1);
    PirAnswer a = parse_answer("3 0 4", f5);
    CHECK(a.values == Vec{3, 0, 4});
    CHECK(serialize_answer(a) == "3 0 4");
    CHECK_THROWS(parse_answer("5", f5));
}

TEST_CASE("database format") {
    Field f3 = Field::make(3, 1);
    Vec x{0, 2, 1, 1};
    auto [f, back] = parse_database(serialize_database(f3, x));
    CHECK(f == f3);
    CHECK(back == x);
    CHECK_THROWS(parse_database("3 2\n0 3\n"));
}

TEST_CASE("field from order") {
    CHECK(field_from_order(2) == Field::make(2, 1));
    CHECK(field_from_order(9) == Field::make(3, 2));
    CHECK(field_from_order(16) == Field::make(2, 4));
    CHECK_THROWS(field_from_order(12));
    CHECK_THROWS(field_from_order(1));
}

TEST_CASE("demo transcripts are reproducible byte for byte") {
    SessionConfig cfg;
    cfg.scheme = "pac";
    cfg.k = 6;
    cfg.m = 2;
    cfg.q = 2;
    cfg.seed = 7;
    cfg.w = {3};
    cfg.s = {0, 1};
    Vec db = load_database(cfg, Field::make(2, 1));
    std::string t1 = run_demo(cfg, db);
    std::string t2 = run_demo(cfg, db);
    CHECK(t1 == t2);
    CHECK(t1.find("query: ") == 0);
    CHECK(t1.find("recovered: ") != std::string::npos);

    cfg.seed = 8;
    CHECK(run_demo(cfg, db) != t1);  // different seed, different permutation
}

TEST_CASE("session config builds every scheme family") {
    SessionConfig cfg;
    cfg.k = 6, cfg.m = 2, cfg.q = 2;
    for (const char* scheme : {"pac", "coset"}) {
        cfg.scheme = scheme;
        CHECK(build_scheme(cfg).K() == 6);
    }
    cfg.scheme = "simplex";
    cfg.k = 7;
    CHECK(build_scheme(cfg).K() == 7);
    cfg.scheme = "grs";
    cfg.k = 5, cfg.q = 7;
    CHECK(build_scheme(cfg).K() == 5);
    cfg.scheme = "nope";
    CHECK_THROWS(build_scheme(cfg));
}
