#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Finite field GF(p^m) with integer-encoded elements.
//
// An element sum_j c_j * alpha^j (alpha a root of the modulus polynomial)
// is encoded as the integer sum_j c_j * p^j, so encodings run over [0, q).
// Encoding 0 is the additive identity and encoding 1 the multiplicative
// identity. Fields are immutable after construction and safe for
// concurrent reads.

namespace pncc::gf {

using Elem = std::uint16_t;

// Supported order cap. Dense add/mul tables are built for small fields,
// log/antilog tables for moderate ones, and plain polynomial arithmetic
// is used above that.
inline constexpr std::uint32_t kMaxOrder = 1u << 16;
inline constexpr std::uint32_t kDenseTableMax = 256;
inline constexpr std::uint32_t kLogTableMax = 1u << 12;

class Field {
public:
    // Construct GF(p^m). When modulus is empty the lexicographically
    // smallest monic irreducible of degree m over GF(p) is selected
    // (coefficient lists compared from highest to lowest degree), which
    // makes construction deterministic. A given modulus must be monic of
    // degree m (constant term first) and irreducible; irreducibility is
    // verified by trial division against all monic polynomials of degree
    // <= m/2.
    Field(int p, int m, std::vector<int> modulus = {});

    int characteristic() const { return p_; }
    int degree() const { return m_; }
    std::uint32_t order() const { return q_; }
    const std::vector<int>& modulus() const { return modulus_; }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;  // throws std::domain_error on 0
    Elem div(Elem a, Elem b) const;
    // pow(0,0) = 1; negative exponents invert (nonzero base required).
    Elem pow(Elem a, long long e) const;

    // The d elements fixed by x -> x^d, sorted by encoding. d must be p^r
    // with r dividing m.
    std::vector<Elem> subfield_elements(std::uint32_t d) const;

    bool is_subfield_order(std::uint32_t d) const;

    // Row of the dense multiplication table for a fixed factor, or nullptr
    // when the field is too large for dense tables. Used by elimination
    // and codeword-enumeration inner loops.
    const Elem* mul_row(Elem c) const {
        return mul_table_.empty() ? nullptr : mul_table_.data() + std::size_t(c) * q_;
    }
    const Elem* add_row(Elem c) const {
        return add_table_.empty() ? nullptr : add_table_.data() + std::size_t(c) * q_;
    }
    const Elem* add_table() const { return add_table_.empty() ? nullptr : add_table_.data(); }

    std::string name() const;  // "GF(q)"

    friend bool operator==(const Field& a, const Field& b) {
        return a.p_ == b.p_ && a.m_ == b.m_ && a.modulus_ == b.modulus_;
    }
    friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

private:
    int p_ = 0;
    int m_ = 0;
    std::uint32_t q_ = 0;
    std::vector<int> modulus_;  // length m+1, constant term first, monic

    std::vector<Elem> add_table_;  // q*q when q <= kDenseTableMax
    std::vector<Elem> mul_table_;
    std::vector<Elem> neg_table_;  // always built, q entries
    std::vector<Elem> inv_table_;  // built when q <= kLogTableMax
    std::vector<Elem> exp_table_;  // generator powers, q-1 entries, q <= kLogTableMax
    std::vector<Elem> log_table_;

    std::vector<int> to_digits(Elem a) const;
    Elem from_digits(const std::vector<int>& c) const;
    Elem mul_poly(Elem a, Elem b) const;  // table-free multiply
    void build_tables();
};

bool is_prime(std::uint64_t n);

// Splits a prime power q = p^r; returns false when q is not one.
bool prime_power(std::uint64_t q, std::uint64_t& p, int& r);

}  // namespace pncc::gf
