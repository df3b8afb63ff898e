#pragma once

#include "pirlrc/audit.hpp"
#include "pirlrc/io.hpp"

namespace pirlrc {

/// Configuration shared by client and server; the seed drives the
/// client-side query RNG and makes sessions reproducible.
struct SessionConfig {
    std::string scheme = "pac";  // pac | simplex | grs | coset
    std::size_t k = 0, m = 0, d = 1;
    std::uint32_t q = 2;
    std::uint64_t seed = 0;
    std::string db_path;
    std::vector<std::size_t> w, s;  // 0-based

    /// Scheme identity exchanged in the hello frame.
    std::string config_line() const;
};

struct BuiltScheme {
    std::optional<PirScheme> linear;
    std::optional<GeneralPirCode> general;

    std::size_t K() const;
    const Field& field() const;
};

BuiltScheme build_scheme(const SessionConfig& config);

/// Database from the configured file, or a seed-derived deterministic one
/// when no file is given.
Vec load_database(const SessionConfig& config, const Field& field);

/// In-process session: query, answer, recovery; the returned transcript is
/// byte-identical to what a socket fetch against the same config prints.
std::string run_demo(const SessionConfig& config, const Vec& database);

/// Serves sessions forever on 127.0.0.1:port (port 0 picks an ephemeral
/// port); prints "listening on port N" once bound. One thread per
/// connection; the database snapshot is immutable.
[[noreturn]] void serve(const SessionConfig& config, const Vec& database, std::uint16_t port);

/// Client side of one framed session.
std::string fetch(const SessionConfig& config, const Vec& side_source, const std::string& host,
                  std::uint16_t port);

}  // namespace pirlrc
