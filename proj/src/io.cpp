#include "pirlrc/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace pirlrc {

namespace {

std::uint64_t parse_uint(std::istream& in, const char* what) {
    std::int64_t v;
    if (!(in >> v) || v < 0) throw std::invalid_argument(std::string("malformed ") + what);
    return static_cast<std::uint64_t>(v);
}

Elem parse_element(std::istream& in, const Field& field) {
    std::int64_t v;
    if (!(in >> v)) throw std::invalid_argument("missing matrix entry");
    if (v < 0 || static_cast<std::uint64_t>(v) >= field.q())
        throw std::invalid_argument("entry " + std::to_string(v) + " out of range for " + field.to_string());
    return static_cast<Elem>(v);
}

void expect_end(std::istream& in, const char* what) {
    std::string extra;
    if (in >> extra) throw std::invalid_argument(std::string("trailing content in ") + what);
}

Matrix parse_matrix_stream(std::istream& in) {
    std::uint64_t q = parse_uint(in, "matrix header");
    std::uint64_t rows = parse_uint(in, "matrix header");
    std::uint64_t cols = parse_uint(in, "matrix header");
    Field field = field_from_order(static_cast<std::uint32_t>(q));
    Vec entries;
    entries.reserve(rows * cols);
    for (std::uint64_t i = 0; i < rows * cols; ++i) entries.push_back(parse_element(in, field));
    return Matrix(field, rows, cols, std::move(entries));
}

}  // namespace

Field field_from_order(std::uint32_t q) {
    if (q < 2) throw std::invalid_argument("field order must be >= 2");
    std::uint32_t p = 2;
    while (q % p != 0) ++p;
    std::uint32_t m = 0, rest = q;
    while (rest > 1) {
        if (rest % p != 0) throw std::invalid_argument("field order is not a prime power: " + std::to_string(q));
        rest /= p;
        ++m;
    }
    return Field::make(p, m);
}

std::string serialize_matrix(const Matrix& m) {
    std::ostringstream os;
    os << m.field().q() << " " << m.rows() << " " << m.cols() << "\n";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m.at(r, c);
        os << "\n";
    }
    return os.str();
}

Matrix parse_matrix(const std::string& text) {
    std::istringstream in(text);
    Matrix m = parse_matrix_stream(in);
    expect_end(in, "matrix file");
    return m;
}

std::string serialize_code(const LinearCode& c) {
    std::ostringstream os;
    os << "code " << c.n() << " " << c.k() << " " << c.field().q() << "\n";
    os << serialize_matrix(c.generator());
    os << serialize_matrix(c.parity_check());
    return os.str();
}

LinearCode parse_code(const std::string& text) {
    std::istringstream in(text);
    std::string tag;
    in >> tag;
    if (tag != "code") throw std::invalid_argument("expected code header");
    std::uint64_t n = parse_uint(in, "code header");
    std::uint64_t k = parse_uint(in, "code header");
    std::uint64_t q = parse_uint(in, "code header");
    Matrix g = parse_matrix_stream(in);
    Matrix h = parse_matrix_stream(in);
    expect_end(in, "code file");
    if (g.rows() != k || g.cols() != n || g.field().q() != q)
        throw std::invalid_argument("generator block does not match code header");
    LinearCode code = LinearCode::from_generator(g);
    // the stored parity check must describe the same code
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < h.rows(); ++j) {
            Elem acc = 0;
            for (std::size_t t = 0; t < g.cols(); ++t)
                acc = g.field().add(acc, g.field().mul(g.at(i, t), h.at(j, t)));
            if (acc != 0) throw std::invalid_argument("generator and parity check are inconsistent");
        }
    return code;
}

std::string serialize_general(const GeneralLrc& lrc) {
    std::ostringstream os;
    os << "gcode " << lrc.n << " " << lrc.field.q() << " " << lrc.codewords.size() << "\n";
    for (const Vec& c : lrc.codewords) {
        for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
        os << "\n";
    }
    for (std::size_t i = 0; i < lrc.n; ++i) {
        os << i + 1 << " |";
        for (std::size_t l : lrc.groups[i]) os << " " << l + 1;
        os << " |";
        std::uint64_t keys = 1;
        for (std::size_t t = 0; t < lrc.groups[i].size(); ++t) keys *= lrc.field.q();
        for (std::uint64_t key = 0; key < keys; ++key) {
            auto it = lrc.repair[i].find(key);
            if (it == lrc.repair[i].end())
                os << " -";
            else
                os << " " << it->second;
        }
        os << "\n";
    }
    return os.str();
}

GeneralLrc parse_general(const std::string& text) {
    std::istringstream in(text);
    std::string tag;
    in >> tag;
    if (tag != "gcode") throw std::invalid_argument("expected gcode header");
    std::uint64_t n = parse_uint(in, "gcode header");
    std::uint64_t q = parse_uint(in, "gcode header");
    std::uint64_t count = parse_uint(in, "gcode header");
    Field field = field_from_order(static_cast<std::uint32_t>(q));
    GeneralLrc lrc{field, n, 0, {}, {}, {}};
    for (std::uint64_t c = 0; c < count; ++c) {
        Vec v;
        for (std::uint64_t i = 0; i < n; ++i) v.push_back(parse_element(in, field));
        lrc.codewords.push_back(std::move(v));
    }
    std::string line;
    std::getline(in, line);  // consume rest of last codeword line
    for (std::uint64_t i = 0; i < n; ++i) {
        if (!std::getline(in, line)) throw std::invalid_argument("missing repair line");
        std::istringstream ls(line);
        std::uint64_t idx = parse_uint(ls, "repair line");
        if (idx != i + 1) throw std::invalid_argument("repair lines out of order");
        std::string bar;
        ls >> bar;
        if (bar != "|") throw std::invalid_argument("malformed repair line");
        std::vector<std::size_t> group;
        std::string token;
        while (ls >> token && token != "|") group.push_back(std::stoull(token) - 1);
        std::unordered_map<std::uint64_t, Elem> table;
        std::uint64_t key = 0;
        while (ls >> token) {
            if (token != "-") table.emplace(key, static_cast<Elem>(std::stoul(token)));
            ++key;
        }
        lrc.r = std::max(lrc.r, group.size());
        lrc.groups.push_back(std::move(group));
        lrc.repair.push_back(std::move(table));
    }
    return lrc;
}

std::string serialize_query(const PirQuery& q) {
    if (q.mode == PrivacyMode::ws_private) return "const";
    std::ostringstream os;
    for (std::size_t i = 0; i < q.pi.size(); ++i) os << (i ? " " : "") << q.pi[i] + 1;
    return os.str();
}

PirQuery parse_query(const std::string& text, std::size_t K) {
    std::istringstream in(text);
    std::string first;
    if (!(in >> first)) throw std::invalid_argument("empty query");
    if (first == "const") {
        expect_end(in, "query");
        return PirQuery{PrivacyMode::ws_private, {}};
    }
    PirQuery q;
    q.mode = PrivacyMode::w_private;
    q.pi.push_back(std::stoull(first) - 1);
    std::uint64_t v;
    while (in >> v) q.pi.push_back(v - 1);
    if (q.pi.size() != K) throw std::invalid_argument("query permutation length != K");
    std::vector<bool> seen(K, false);
    for (std::size_t img : q.pi) {
        if (img >= K || seen[img]) throw std::invalid_argument("query is not a permutation");
        seen[img] = true;
    }
    return q;
}

std::string serialize_answer(const PirAnswer& a) {
    std::ostringstream os;
    for (std::size_t i = 0; i < a.values.size(); ++i) os << (i ? " " : "") << a.values[i];
    return os.str();
}

PirAnswer parse_answer(const std::string& text, const Field& field) {
    std::istringstream in(text);
    PirAnswer a;
    std::int64_t v;
    while (in >> v) {
        if (v < 0 || static_cast<std::uint64_t>(v) >= field.q())
            throw std::invalid_argument("answer value out of range");
        a.values.push_back(static_cast<Elem>(v));
    }
    return a;
}

std::string serialize_database(const Field& field, const Vec& x) {
    std::ostringstream os;
    os << field.q() << " " << x.size() << "\n";
    for (std::size_t i = 0; i < x.size(); ++i) os << (i ? " " : "") << x[i];
    os << "\n";
    return os.str();
}

std::pair<Field, Vec> parse_database(const std::string& text) {
    std::istringstream in(text);
    std::uint64_t q = parse_uint(in, "database header");
    std::uint64_t k = parse_uint(in, "database header");
    Field field = field_from_order(static_cast<std::uint32_t>(q));
    Vec x;
    for (std::uint64_t i = 0; i < k; ++i) x.push_back(parse_element(in, field));
    expect_end(in, "database file");
    return {field, std::move(x)};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

}  // namespace pirlrc
