#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace pirlrc {

/// Integer encoding of a field element: the base-p digits are the
/// polynomial coefficients, least-significant first. For m = 1 this is
/// the residue itself.
using Elem = std::uint16_t;

/// GF(p^m) with exact arithmetic and a fixed modulus per (p, m).
///
/// Prime fields are supported for any prime p with p^m <= 2^16.
/// Extension fields come from the built-in modulus table:
///   GF(4): x^2+x+1,  GF(8): x^3+x+1,  GF(9): x^2+1,  GF(16): x^4+x+1.
/// The table is normative; adding entries is a versioned change.
class Field {
public:
    static Field make(std::uint32_t p, std::uint32_t m);

    std::uint32_t p() const;
    std::uint32_t m() const;
    std::uint32_t q() const;

    /// Modulus coefficients over GF(p), least-significant first; empty when m == 1.
    const std::vector<std::uint16_t>& modulus() const;

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem mul(Elem a, Elem b) const;
    Elem div(Elem a, Elem b) const;  // throws on b == 0
    Elem neg(Elem a) const;
    Elem inv(Elem a) const;          // throws on a == 0
    Elem pow(Elem a, std::uint64_t e) const;

    /// All q elements in ascending integer encoding.
    std::vector<Elem> elements() const;

    bool contains(std::uint64_t value) const { return value < q(); }
    void check_element(std::uint64_t value) const;

    bool operator==(const Field& other) const;
    bool operator!=(const Field& other) const { return !(*this == other); }

    std::string to_string() const;

private:
    struct Impl;
    explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

/// Value + field pair; mixing elements of distinct fields throws.
struct FieldElement {
    Field field;
    Elem value;

    FieldElement(Field f, Elem v) : field(std::move(f)), value(v) {
        field.check_element(v);
    }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    bool operator==(const FieldElement& o) const {
        return field == o.field && value == o.value;
    }
};

}  // namespace pirlrc
