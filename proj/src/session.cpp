#include "pirlrc/session.hpp"

#include <arpa/inet.h>
#include <netinet/in.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "pirlrc/constructions.hpp"
#include "pirlrc/protocol.hpp"

namespace pirlrc {

namespace {

struct FdGuard {
    int fd = -1;
    ~FdGuard() {
        if (fd >= 0) ::close(fd);
    }
};

std::size_t simplex_degree(std::size_t k) {
    for (std::size_t t = 2; t <= 12; ++t)
        if (((std::size_t{1} << t) - 1) == k) return t;
    throw std::invalid_argument("simplex scheme needs K = 2^t - 1");
}

Vec side_values(const Vec& database, const std::vector<std::size_t>& s) {
    Vec out;
    for (std::size_t i : s) out.push_back(database[i]);
    return out;
}

std::string transcript(const std::string& query, const std::string& answer, const Vec& recovered) {
    std::ostringstream os;
    os << "query: " << query << "\n";
    os << "answer: " << answer << "\n";
    os << "recovered:";
    for (Elem v : recovered) os << " " << v;
    os << "\n";
    return os.str();
}

PirAnswer compute_answer(const BuiltScheme& scheme, const PirQuery& q, const Vec& database) {
    if (scheme.linear) return server_answer(*scheme.linear, q, database);
    return answer_encode(*scheme.general, q.pi, database);
}

}  // namespace

std::string SessionConfig::config_line() const {
    std::ostringstream os;
    os << scheme << " " << k << " " << m << " " << d << " " << q;
    return os.str();
}

std::size_t BuiltScheme::K() const { return linear ? linear->K : general->K; }

const Field& BuiltScheme::field() const {
    return linear ? linear->field : general->cosets.base.field;
}

BuiltScheme build_scheme(const SessionConfig& config) {
    Field field = field_from_order(config.q);
    BuiltScheme out;
    if (config.scheme == "pac") {
        out.linear = make_w_private_scheme(partition_and_code(config.k, config.m, field), config.m,
                                           config.d);
    } else if (config.scheme == "simplex") {
        if (config.q != 2) throw std::invalid_argument("simplex scheme is binary");
        LinearCode code = simplex_code(simplex_degree(config.k));
        out.linear = make_w_private_scheme(code.parity_check(), config.m, config.d);
    } else if (config.scheme == "grs") {
        out.linear = make_ws_private_scheme(grs_mds_parity_check(config.k, config.m, field),
                                            config.m, config.d);
    } else if (config.scheme == "coset") {
        if (config.d != 1) throw std::invalid_argument("coset scheme is single-message");
        LinearCode code =
            LinearCode::from_parity_check(partition_and_code(config.k, config.m, field));
        auto [ok, plan] = verify_all_symbol_locality(code, config.m);
        if (!ok) throw std::invalid_argument("coset base code lacks locality M");
        out.general = make_general_pir(general_from_linear(code, plan), config.m);
    } else {
        throw std::invalid_argument("unknown scheme: " + config.scheme);
    }
    return out;
}

Vec load_database(const SessionConfig& config, const Field& field) {
    if (!config.db_path.empty()) {
        auto [db_field, x] = parse_database(read_file(config.db_path));
        if (db_field != field || x.size() != config.k)
            throw std::invalid_argument("database file does not match scheme parameters");
        return x;
    }
    // seed-derived database, on an RNG stream separate from the query RNG
    std::mt19937_64 rng(config.seed * 0x9e3779b97f4a7c15ull + 1);
    Vec x(config.k);
    for (auto& v : x) v = static_cast<Elem>(bounded_uniform(rng, field.q()));
    return x;
}

std::string run_demo(const SessionConfig& config, const Vec& database) {
    BuiltScheme scheme = build_scheme(config);
    std::mt19937_64 rng(config.seed);
    PirQuery q;
    if (scheme.linear)
        q = generate_query(*scheme.linear, config.w, config.s, rng);
    else
        q = generate_query(*scheme.general, config.w.at(0), config.s, rng);

    PirAnswer a = compute_answer(scheme, q, database);

    Vec recovered;
    Vec x_s = side_values(database, config.s);
    if (scheme.linear)
        recovered = recover(*scheme.linear, q, a, config.w, config.s, x_s);
    else
        recovered = {recover_general(*scheme.general, q.pi, a, config.w.at(0), config.s, x_s)};

    return transcript(serialize_query(q), serialize_answer(a), recovered);
}

void serve(const SessionConfig& config, const Vec& database, std::uint16_t port) {
    BuiltScheme scheme = build_scheme(config);
    std::string expected_hello = config.config_line();

    FdGuard listener{::socket(AF_INET, SOCK_STREAM, 0)};
    if (listener.fd < 0) throw std::runtime_error("socket() failed");
    int on = 1;
    ::setsockopt(listener.fd, SOL_SOCKET, SO_REUSEADDR, &on, sizeof(on));
    sockaddr_in addr{};
    addr.sin_family = AF_INET;
    addr.sin_port = htons(port);
    addr.sin_addr.s_addr = htonl(INADDR_LOOPBACK);
    if (::bind(listener.fd, reinterpret_cast<sockaddr*>(&addr), sizeof(addr)) != 0)
        throw std::runtime_error("bind() failed");
    if (::listen(listener.fd, 16) != 0) throw std::runtime_error("listen() failed");

    socklen_t len = sizeof(addr);
    ::getsockname(listener.fd, reinterpret_cast<sockaddr*>(&addr), &len);
    std::printf("listening on port %u\n", ntohs(addr.sin_port));
    std::fflush(stdout);

    while (true) {
        int conn = ::accept(listener.fd, nullptr, nullptr);
        if (conn < 0) continue;
        std::thread([conn, &scheme, &database, &expected_hello] {
            FdGuard guard{conn};
            try {
                Frame hello = recv_frame(conn);
                if (hello.type != FrameType::hello || hello.payload != expected_hello) {
                    send_frame(conn, Frame{FrameType::error, "configuration mismatch"});
                    return;
                }
                send_frame(conn, Frame{FrameType::hello, expected_hello});
                Frame qf = recv_frame(conn);
                if (qf.type != FrameType::query) {
                    send_frame(conn, Frame{FrameType::error, "expected query frame"});
                    return;
                }
                PirQuery q = parse_query(qf.payload, database.size());
                PirAnswer a = compute_answer(scheme, q, database);
                send_frame(conn, Frame{FrameType::answer, serialize_answer(a)});
            } catch (const std::exception& e) {
                try {
                    send_frame(conn, Frame{FrameType::error, e.what()});
                } catch (...) {
                }
            }
        }).detach();
    }
}

std::string fetch(const SessionConfig& config, const Vec& side_source, const std::string& host,
                  std::uint16_t port) {
    BuiltScheme scheme = build_scheme(config);
    std::mt19937_64 rng(config.seed);
    PirQuery q;
    if (scheme.linear)
        q = generate_query(*scheme.linear, config.w, config.s, rng);
    else
        q = generate_query(*scheme.general, config.w.at(0), config.s, rng);

    FdGuard sock{::socket(AF_INET, SOCK_STREAM, 0)};
    if (sock.fd < 0) throw std::runtime_error("socket() failed");
    sockaddr_in addr{};
    addr.sin_family = AF_INET;
    addr.sin_port = htons(port);
    if (::inet_pton(AF_INET, host.c_str(), &addr.sin_addr) != 1)
        throw std::invalid_argument("bad host address: " + host);
    if (::connect(sock.fd, reinterpret_cast<sockaddr*>(&addr), sizeof(addr)) != 0)
        throw std::runtime_error("connect() failed");

    send_frame(sock.fd, Frame{FrameType::hello, config.config_line()});
    Frame ack = recv_frame(sock.fd);
    if (ack.type == FrameType::error) throw std::runtime_error("server error: " + ack.payload);
    if (ack.type != FrameType::hello) throw std::runtime_error("unexpected frame in handshake");

    send_frame(sock.fd, Frame{FrameType::query, serialize_query(q)});
    Frame af = recv_frame(sock.fd);
    if (af.type == FrameType::error) throw std::runtime_error("server error: " + af.payload);
    if (af.type != FrameType::answer) throw std::runtime_error("unexpected frame type");
    PirAnswer a = parse_answer(af.payload, scheme.field());

    Vec x_s = side_values(side_source, config.s);
    Vec recovered;
    if (scheme.linear)
        recovered = recover(*scheme.linear, q, a, config.w, config.s, x_s);
    else
        recovered = {recover_general(*scheme.general, q.pi, a, config.w.at(0), config.s, x_s)};

    return transcript(serialize_query(q), serialize_answer(a), recovered);
}

}  // namespace pirlrc
