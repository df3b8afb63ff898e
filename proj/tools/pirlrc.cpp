// pirlrc: constructions, verification, audits, and framed PIR sessions.
//
// Exit codes: 0 pass, 1 verification failure, 2 usage error.

#include <cstdio>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pirlrc/audit.hpp"
#include "pirlrc/constructions.hpp"
#include "pirlrc/session.hpp"

using namespace pirlrc;

namespace {

std::vector<std::size_t> parse_index_list(const std::string& text) {
    // comma-separated 1-based indices on the CLI surface, 0-based inside
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t v = std::stoull(tok);
        if (v == 0) throw std::invalid_argument("indices are 1-based");
        out.push_back(v - 1);
    }
    if (out.empty()) throw std::invalid_argument("empty index list");
    return out;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty())
        std::cout << text;
    else
        write_file(out_path, text);
}

std::string bound_line(const char* name, const BoundCheck& b) {
    std::ostringstream os;
    os << name << " = " << to_string(b.value) << " : "
       << (b.satisfied ? "satisfied" : "violated") << "\n";
    return os.str();
}

std::size_t simplex_degree_for(std::size_t k) {
    for (std::size_t t = 2; t <= 12; ++t)
        if (((std::size_t{1} << t) - 1) == k) return t;
    throw std::invalid_argument("simplex needs --k = 2^t - 1");
}

int report_and_exit(const AuditReport& report) {
    std::cout << report.render();
    return report.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"PIR with side information <-> locally recoverable codes toolkit"};
    app.require_subcommand(1);

    SessionConfig cfg;
    std::string out_path, code_path, matrix_path, w_list = "1", s_list;
    std::string host = "127.0.0.1";
    std::size_t r = 0, ell = 1;
    std::uint16_t port = 0;

    auto add_scheme_flags = [&](CLI::App* cmd, bool with_sets) {
        cmd->add_option("--k", cfg.k, "number of messages K")->required();
        cmd->add_option("--m", cfg.m, "side information size M")->required();
        cmd->add_option("--d", cfg.d, "demand size D");
        cmd->add_option("--q", cfg.q, "field order");
        cmd->add_option("--scheme", cfg.scheme, "pac | simplex | grs | coset");
        cmd->add_option("--seed", cfg.seed, "session seed");
        if (with_sets) {
            cmd->add_option("--w", w_list, "demand indices, 1-based, comma-separated");
            cmd->add_option("--s", s_list, "side indices, 1-based, comma-separated")->required();
            cmd->add_option("--db", cfg.db_path, "database file (seed-derived when absent)");
        }
    };

    // construct <kind>
    auto* construct = app.add_subcommand("construct", "emit a construction in the text format");
    std::string kind;
    construct->add_option("kind", kind, "pac | simplex | grs")->required();
    construct->add_option("--k", cfg.k)->required();
    construct->add_option("--m", cfg.m);
    construct->add_option("--q", cfg.q);
    construct->add_option("--out", out_path);

    // verify --code <file> --r N [--ell L]
    auto* verify = app.add_subcommand("verify", "check (cooperative) locality of a code file");
    verify->add_option("--code", code_path)->required();
    verify->add_option("--r", r)->required();
    verify->add_option("--ell", ell);

    // bounds --code <file> --r N [--ell L]
    auto* bounds = app.add_subcommand("bounds", "evaluate distance/size/rate bounds");
    bounds->add_option("--code", code_path)->required();
    bounds->add_option("--r", r)->required();
    bounds->add_option("--ell", ell);

    // transform <direction>
    auto* transform = app.add_subcommand("transform", "pir-to-lrc | lrc-to-pir | extract");
    std::string direction;
    transform->add_option("direction", direction)->required();
    transform->add_option("--matrix", matrix_path);
    transform->add_option("--code", code_path);
    transform->add_option("--m", cfg.m)->required();
    transform->add_option("--d", cfg.d);
    transform->add_option("--k", cfg.k);
    transform->add_option("--q", cfg.q);
    transform->add_option("--scheme", cfg.scheme);
    std::string mode = "w";
    transform->add_option("--mode", mode, "w | ws");
    transform->add_option("--out", out_path);

    // audit <what> on a constructed scheme
    auto* audit = app.add_subcommand("audit", "recoverability | privacy | ws-privacy | rate");
    std::string what;
    audit->add_option("what", what)->required();
    add_scheme_flags(audit, false);

    auto* demo = app.add_subcommand("demo", "in-process session with transcript");
    add_scheme_flags(demo, true);

    auto* serve = app.add_subcommand("serve", "serve framed PIR sessions on localhost");
    add_scheme_flags(serve, false);
    serve->add_option("--db", cfg.db_path, "database file (seed-derived when absent)");
    serve->add_option("--port", port, "0 picks an ephemeral port");

    auto* fetchc = app.add_subcommand("fetch", "run one session against a server");
    add_scheme_flags(fetchc, true);
    fetchc->add_option("--port", port)->required();
    fetchc->add_option("--host", host);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*construct) {
            Field field = field_from_order(cfg.q);
            if (kind == "pac") {
                emit(serialize_matrix(partition_and_code(cfg.k, cfg.m, field)), out_path);
            } else if (kind == "simplex") {
                emit(serialize_code(simplex_code(simplex_degree_for(cfg.k))), out_path);
            } else if (kind == "grs") {
                emit(serialize_matrix(grs_mds_parity_check(cfg.k, cfg.m, field)), out_path);
            } else {
                throw std::invalid_argument("unknown construction: " + kind);
            }
            return 0;
        }
        if (*verify) {
            LinearCode code = parse_code(read_file(code_path));
            auto [ok, plan] = ell <= 1 ? verify_all_symbol_locality(code, r)
                                       : cooperative_locality(code, r, ell);
            std::cout << (ell <= 1 ? "locality" : "cooperative locality") << " r=" << r;
            if (ell > 1) std::cout << " ell=" << ell;
            std::cout << " : " << (ok ? "PASS" : "FAIL") << "\n";
            return ok ? 0 : 1;
        }
        if (*bounds) {
            LinearCode code = parse_code(read_file(code_path));
            auto [ok, plan] = ell <= 1 ? verify_all_symbol_locality(code, r)
                                       : cooperative_locality(code, r, ell);
            if (!ok) {
                std::cout << "code does not have the claimed locality\n";
                return 1;
            }
            BoundsReport report = check_bounds(code, plan);
            std::cout << bound_line("singleton_lrc_bound", report.singleton_lrc_bound);
            if (report.cooperative_bound)
                std::cout << bound_line("cooperative_bound", *report.cooperative_bound);
            std::cout << bound_line("max_size_bound", report.max_size_bound);
            std::cout << bound_line("rate_bound_classical", report.rate_bound_classical);
            if (report.rate_bound_cooperative_large_ell)
                std::cout << bound_line("rate_bound_cooperative_large_ell",
                                        *report.rate_bound_cooperative_large_ell);
            bool all = report.singleton_lrc_bound.satisfied && report.max_size_bound.satisfied &&
                       report.rate_bound_classical.satisfied &&
                       (!report.cooperative_bound || report.cooperative_bound->satisfied) &&
                       (!report.rate_bound_cooperative_large_ell ||
                        report.rate_bound_cooperative_large_ell->satisfied);
            return all ? 0 : 1;
        }
        if (*transform) {
            if (direction == "pir-to-lrc") {
                if (matrix_path.empty()) throw std::invalid_argument("pir-to-lrc needs --matrix");
                Matrix e = parse_matrix(read_file(matrix_path));
                auto [code, report] = pir_to_lrc(
                    e, cfg.m, cfg.d, mode == "ws" ? PrivacyMode::ws_private : PrivacyMode::w_private);
                if (!report.ok) {
                    std::cout << report.detail << "\n";
                    return 1;
                }
                emit(serialize_code(code), out_path);
                return 0;
            }
            if (direction == "lrc-to-pir") {
                if (code_path.empty()) throw std::invalid_argument("lrc-to-pir needs --code");
                LinearCode code = parse_code(read_file(code_path));
                PirScheme scheme = mode == "ws"
                                       ? make_ws_private_scheme(code.parity_check(), cfg.m, cfg.d)
                                       : make_w_private_scheme(code.parity_check(), cfg.m, cfg.d);
                emit(serialize_matrix(scheme.h), out_path);
                return 0;
            }
            if (direction == "extract") {
                // rebuild the underlying LRC from a constructed scheme's answer map
                if (cfg.k == 0) throw std::invalid_argument("extract needs --k");
                SessionConfig sub = cfg;
                BuiltScheme scheme = build_scheme(sub);
                Field field = scheme.field();
                std::size_t T = scheme.linear ? scheme.linear->h.rows()
                                              : scheme.general->cosets.t_opt;
                std::vector<std::size_t> identity(cfg.k);
                for (std::size_t i = 0; i < cfg.k; ++i) identity[i] = i;
                auto answer_map = [&](const Vec& x) {
                    if (scheme.linear) {
                        PirQuery q{scheme.linear->mode, identity};
                        return server_answer(*scheme.linear, q, x).values;
                    }
                    return answer_encode(*scheme.general, identity, x).values;
                };
                GeneralLrc lrc = extract_lrc_from_pir(answer_map, cfg.k, T, cfg.m, field);
                emit(serialize_general(lrc), out_path);
                return 0;
            }
            throw std::invalid_argument("unknown direction: " + direction);
        }
        if (*audit) {
            BuiltScheme scheme = build_scheme(cfg);
            if (what == "recoverability") {
                return report_and_exit(scheme.linear ? audit_recoverability(*scheme.linear)
                                                     : audit_recoverability(*scheme.general));
            }
            if (what == "privacy") {
                return report_and_exit(scheme.linear ? audit_w_privacy(*scheme.linear)
                                                     : audit_w_privacy(*scheme.general));
            }
            if (what == "ws-privacy") {
                if (!scheme.linear) throw std::invalid_argument("ws-privacy needs a linear scheme");
                return report_and_exit(audit_ws_privacy(*scheme.linear));
            }
            if (what == "rate") {
                return report_and_exit(scheme.linear ? measure_rate(*scheme.linear)
                                                     : measure_rate(*scheme.general));
            }
            throw std::invalid_argument("unknown audit: " + what);
        }
        if (*demo) {
            cfg.w = parse_index_list(w_list);
            cfg.s = parse_index_list(s_list);
            BuiltScheme scheme = build_scheme(cfg);
            Vec database = load_database(cfg, scheme.field());
            std::cout << run_demo(cfg, database);
            return 0;
        }
        if (*serve) {
            BuiltScheme scheme = build_scheme(cfg);
            Vec database = load_database(cfg, scheme.field());
            pirlrc::serve(cfg, database, port);
        }
        if (*fetchc) {
            cfg.w = parse_index_list(w_list);
            cfg.s = parse_index_list(s_list);
            BuiltScheme scheme = build_scheme(cfg);
            Vec side_source = load_database(cfg, scheme.field());
            std::cout << fetch(cfg, side_source, host, port);
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
