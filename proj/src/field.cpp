#include "pirlrc/field.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

namespace pirlrc {

namespace {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

struct ModulusEntry {
    std::uint32_t p, m;
    std::vector<std::uint16_t> coeffs;  // LSB first, degree m
};

// Normative modulus table for extension fields.
const std::array<ModulusEntry, 4>& modulus_table() {
    static const std::array<ModulusEntry, 4> table = {{
        {2, 2, {1, 1, 1}},        // x^2 + x + 1
        {2, 3, {1, 1, 0, 1}},     // x^3 + x + 1
        {3, 2, {1, 0, 1}},        // x^2 + 1
        {2, 4, {1, 1, 0, 0, 1}},  // x^4 + x + 1
    }};
    return table;
}

std::vector<std::uint16_t> digits_of(std::uint32_t v, std::uint32_t p, std::uint32_t m) {
    std::vector<std::uint16_t> d(m);
    for (std::uint32_t i = 0; i < m; ++i) {
        d[i] = static_cast<std::uint16_t>(v % p);
        v /= p;
    }
    return d;
}

std::uint32_t value_of(const std::vector<std::uint16_t>& d, std::uint32_t p, std::uint32_t m) {
    std::uint32_t v = 0;
    for (std::uint32_t i = m; i-- > 0;) v = v * p + d[i];
    return v;
}

// Product of the polynomials encoded by a and b, reduced mod the modulus.
std::uint32_t poly_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p, std::uint32_t m,
                       const std::vector<std::uint16_t>& mod) {
    auto da = digits_of(a, p, m);
    auto db = digits_of(b, p, m);
    std::vector<std::uint32_t> prod(2 * m - 1, 0);
    for (std::uint32_t i = 0; i < m; ++i)
        for (std::uint32_t j = 0; j < m; ++j)
            prod[i + j] = (prod[i + j] + static_cast<std::uint32_t>(da[i]) * db[j]) % p;
    // reduce: modulus is monic of degree m
    for (std::uint32_t deg = 2 * m - 2; deg >= m; --deg) {
        std::uint32_t c = prod[deg];
        if (c) {
            for (std::uint32_t t = 0; t <= m; ++t) {
                std::uint32_t idx = deg - m + t;
                prod[idx] = (prod[idx] + p * p - c * mod[t] % p) % p;
            }
        }
        if (deg == m) break;
    }
    std::vector<std::uint16_t> out(m);
    for (std::uint32_t i = 0; i < m; ++i) out[i] = static_cast<std::uint16_t>(prod[i]);
    return value_of(out, p, m);
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
    // extended Euclid on (a, p)
    std::int64_t t = 0, newt = 1, r = p, newr = a;
    while (newr != 0) {
        std::int64_t quot = r / newr;
        std::int64_t tmp = t - quot * newt;
        t = newt;
        newt = tmp;
        tmp = r - quot * newr;
        r = newr;
        newr = tmp;
    }
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
}

}  // namespace

struct Field::Impl {
    std::uint32_t p = 0, m = 0, q = 0;
    std::vector<std::uint16_t> modulus;  // empty for m == 1
    // full tables for extension fields (q <= 16 from the table)
    std::vector<Elem> mul_table;
    std::vector<Elem> inv_table;
};

Field Field::make(std::uint32_t p, std::uint32_t m) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime: " + std::to_string(p));
    if (m < 1) throw std::invalid_argument("extension degree must be >= 1");
    // guard q <= 2^16
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > (1u << 16)) throw std::invalid_argument("field order exceeds 2^16");
    }
    auto impl = std::make_shared<Impl>();
    impl->p = p;
    impl->m = m;
    impl->q = static_cast<std::uint32_t>(q);
    if (m > 1) {
        const ModulusEntry* entry = nullptr;
        for (const auto& e : modulus_table())
            if (e.p == p && e.m == m) entry = &e;
        if (!entry)
            throw std::invalid_argument("no modulus table entry for GF(" + std::to_string(p) + "^" +
                                        std::to_string(m) + ")");
        impl->modulus = entry->coeffs;
        impl->mul_table.resize(q * q);
        impl->inv_table.assign(q, 0);
        for (std::uint32_t a = 0; a < q; ++a)
            for (std::uint32_t b = 0; b < q; ++b) {
                Elem r = static_cast<Elem>(poly_mul(a, b, p, m, impl->modulus));
                impl->mul_table[a * q + b] = r;
                if (r == 1) impl->inv_table[a] = static_cast<Elem>(b);
            }
    }
    return Field(std::move(impl));
}

std::uint32_t Field::p() const { return impl_->p; }
std::uint32_t Field::m() const { return impl_->m; }
std::uint32_t Field::q() const { return impl_->q; }
const std::vector<std::uint16_t>& Field::modulus() const { return impl_->modulus; }

void Field::check_element(std::uint64_t value) const {
    if (value >= impl_->q)
        throw std::invalid_argument("element " + std::to_string(value) + " out of range for " + to_string());
}

Elem Field::add(Elem a, Elem b) const {
    if (impl_->m == 1) return static_cast<Elem>((a + b) % impl_->p);
    std::uint32_t out = 0, scale = 1;
    std::uint32_t x = a, y = b;
    for (std::uint32_t i = 0; i < impl_->m; ++i) {
        out += scale * ((x % impl_->p + y % impl_->p) % impl_->p);
        x /= impl_->p;
        y /= impl_->p;
        scale *= impl_->p;
    }
    return static_cast<Elem>(out);
}

Elem Field::neg(Elem a) const {
    if (impl_->m == 1) return static_cast<Elem>((impl_->p - a) % impl_->p);
    std::uint32_t out = 0, scale = 1, x = a;
    for (std::uint32_t i = 0; i < impl_->m; ++i) {
        out += scale * ((impl_->p - x % impl_->p) % impl_->p);
        x /= impl_->p;
        scale *= impl_->p;
    }
    return static_cast<Elem>(out);
}

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::mul(Elem a, Elem b) const {
    if (impl_->m == 1)
        return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % impl_->p);
    return impl_->mul_table[static_cast<std::uint32_t>(a) * impl_->q + b];
}

Elem Field::inv(Elem a) const {
    if (a == 0) throw std::domain_error("division by zero in " + to_string());
    if (impl_->m == 1) return static_cast<Elem>(mod_inverse(a, impl_->p));
    return impl_->inv_table[a];
}

Elem Field::div(Elem a, Elem b) const { return mul(a, inv(b)); }

Elem Field::pow(Elem a, std::uint64_t e) const {
    Elem r = 1, base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

std::vector<Elem> Field::elements() const {
    std::vector<Elem> out(impl_->q);
    for (std::uint32_t i = 0; i < impl_->q; ++i) out[i] = static_cast<Elem>(i);
    return out;
}

bool Field::operator==(const Field& other) const {
    return impl_->p == other.impl_->p && impl_->m == other.impl_->m;
}

std::string Field::to_string() const {
    std::ostringstream os;
    os << "GF(" << impl_->q << ")";
    return os.str();
}

namespace {
void require_same(const Field& a, const Field& b) {
    if (a != b) throw std::invalid_argument("field mismatch: " + a.to_string() + " vs " + b.to_string());
}
}  // namespace

FieldElement FieldElement::operator+(const FieldElement& o) const {
    require_same(field, o.field);
    return {field, field.add(value, o.value)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
    require_same(field, o.field);
    return {field, field.sub(value, o.value)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
    require_same(field, o.field);
    return {field, field.mul(value, o.value)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
    require_same(field, o.field);
    return {field, field.div(value, o.value)};
}

}  // namespace pirlrc
