#include "pncc/gf.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pncc::gf {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

bool prime_power(std::uint64_t q, std::uint64_t& p, int& r) {
    if (q < 2) return false;
    std::uint64_t base = q;
    for (std::uint64_t d = 2; d * d <= base; ++d) {
        if (base % d == 0) {
            base = d;
            break;
        }
    }
    // base is now the smallest prime factor of q (or q itself when prime).
    std::uint64_t t = q;
    int e = 0;
    while (t % base == 0) {
        t /= base;
        ++e;
    }
    if (t != 1) return false;
    p = base;
    r = e;
    return true;
}

namespace {

// Dense polynomial arithmetic over GF(p), coefficients constant term first.
// Used only during field construction, so clarity beats speed.

using Poly = std::vector<int>;

int poly_deg(const Poly& f) {
    for (int i = int(f.size()) - 1; i >= 0; --i)
        if (f[std::size_t(i)] != 0) return i;
    return -1;
}

Poly poly_mod(Poly r, const Poly& g, int p) {
    int dg = poly_deg(g);
    for (int i = poly_deg(r); i >= dg; --i) {
        int lead = r[std::size_t(i)];
        if (lead == 0) continue;
        // g is monic in every call site.
        for (int j = 0; j <= dg; ++j) {
            int& c = r[std::size_t(i - dg + j)];
            c = ((c - lead * g[std::size_t(j)]) % p + p) % p;
        }
    }
    return r;
}

bool divides(const Poly& g, const Poly& f, int p) {
    Poly r = poly_mod(f, g, p);
    return poly_deg(r) < 0;
}

// Trial division by every monic polynomial of degree 1..deg(f)/2.
bool is_irreducible(const Poly& f, int p) {
    int df = poly_deg(f);
    if (df <= 0) return false;
    for (int k = 1; 2 * k <= df; ++k) {
        std::uint64_t count = 1;
        for (int i = 0; i < k; ++i) count *= std::uint64_t(p);
        for (std::uint64_t t = 0; t < count; ++t) {
            Poly g(std::size_t(k) + 1, 0);
            g[std::size_t(k)] = 1;
            std::uint64_t v = t;
            for (int i = 0; i < k; ++i) {
                g[std::size_t(i)] = int(v % std::uint64_t(p));
                v /= std::uint64_t(p);
            }
            if (divides(g, f, p)) return false;
        }
    }
    return true;
}

// Smallest monic irreducible of degree m, comparing coefficient lists from
// the highest degree down. Placing the i-th base-p digit of t at x^i makes
// increasing t exactly that order: the most significant digit of t is the
// coefficient of x^(m-1).
Poly smallest_irreducible(int p, int m) {
    std::uint64_t count = 1;
    for (int i = 0; i < m; ++i) count *= std::uint64_t(p);
    for (std::uint64_t t = 0; t < count; ++t) {
        Poly f(std::size_t(m) + 1, 0);
        f[std::size_t(m)] = 1;
        std::uint64_t v = t;
        for (int i = 0; i < m; ++i) {
            f[std::size_t(i)] = int(v % std::uint64_t(p));
            v /= std::uint64_t(p);
        }
        if (is_irreducible(f, p)) return f;
    }
    throw std::logic_error("no irreducible polynomial found");
}

}  // namespace

std::vector<int> Field::to_digits(Elem a) const {
    std::vector<int> c(std::size_t(m_), 0);
    std::uint32_t v = a;
    for (int i = 0; i < m_; ++i) {
        c[std::size_t(i)] = int(v % std::uint32_t(p_));
        v /= std::uint32_t(p_);
    }
    return c;
}

Elem Field::from_digits(const std::vector<int>& c) const {
    std::uint32_t v = 0;
    for (int i = int(c.size()) - 1; i >= 0; --i)
        v = v * std::uint32_t(p_) + std::uint32_t(c[std::size_t(i)]);
    return Elem(v);
}

Elem Field::mul_poly(Elem a, Elem b) const {
    std::vector<int> ca = to_digits(a), cb = to_digits(b);
    std::vector<int> prod(std::size_t(2 * m_ - 1), 0);
    for (int i = 0; i < m_; ++i) {
        if (ca[std::size_t(i)] == 0) continue;
        for (int j = 0; j < m_; ++j) {
            // 64-bit accumulate: digit products reach (p-1)^2 ~ 2^32 for
            // one-digit fields near the order limit.
            long long v = prod[std::size_t(i + j)] +
                          static_cast<long long>(ca[std::size_t(i)]) * cb[std::size_t(j)];
            prod[std::size_t(i + j)] = static_cast<int>(v % p_);
        }
    }
    // Reduce using x^m = -(modulus without leading term).
    for (int i = 2 * m_ - 2; i >= m_; --i) {
        int lead = prod[std::size_t(i)];
        if (lead == 0) continue;
        prod[std::size_t(i)] = 0;
        for (int j = 0; j < m_; ++j) {
            int& c = prod[std::size_t(i - m_ + j)];
            c = ((c - lead * modulus_[std::size_t(j)]) % p_ + p_) % p_;
        }
    }
    prod.resize(std::size_t(m_));
    return from_digits(prod);
}

Field::Field(int p, int m, std::vector<int> modulus) : p_(p), m_(m) {
    if (!is_prime(std::uint64_t(p))) throw std::invalid_argument("characteristic must be prime");
    if (m < 1) throw std::invalid_argument("extension degree must be positive");
    std::uint64_t q = 1;
    for (int i = 0; i < m; ++i) {
        q *= std::uint64_t(p);
        if (q > kMaxOrder) throw std::invalid_argument("field order exceeds 2^16");
    }
    q_ = std::uint32_t(q);

    if (modulus.empty()) {
        modulus_ = m == 1 ? Poly{0, 1} : smallest_irreducible(p, m);
    } else {
        if (int(modulus.size()) != m + 1) throw std::invalid_argument("modulus must have degree m");
        for (int c : modulus)
            if (c < 0 || c >= p) throw std::invalid_argument("modulus coefficient out of range");
        if (modulus[std::size_t(m)] != 1) throw std::invalid_argument("modulus must be monic");
        if (m > 1 && !is_irreducible(modulus, p))
            throw std::invalid_argument("modulus is reducible");
        if (m == 1 && poly_deg(modulus) != 1)
            throw std::invalid_argument("modulus must have degree m");
        modulus_ = std::move(modulus);
    }
    build_tables();
}

void Field::build_tables() {
    neg_table_.assign(q_, 0);
    for (std::uint32_t a = 0; a < q_; ++a) {
        auto c = to_digits(Elem(a));
        for (int& d : c) d = (p_ - d) % p_;
        neg_table_[a] = from_digits(c);
    }

    if (q_ <= kDenseTableMax) {
        add_table_.assign(std::size_t(q_) * q_, 0);
        mul_table_.assign(std::size_t(q_) * q_, 0);
        for (std::uint32_t a = 0; a < q_; ++a) {
            auto ca = to_digits(Elem(a));
            for (std::uint32_t b = 0; b < q_; ++b) {
                auto cb = to_digits(Elem(b));
                std::vector<int> cs(static_cast<std::size_t>(m_), 0);
                for (int i = 0; i < m_; ++i)
                    cs[std::size_t(i)] = (ca[std::size_t(i)] + cb[std::size_t(i)]) % p_;
                add_table_[std::size_t(a) * q_ + b] = from_digits(cs);
                mul_table_[std::size_t(a) * q_ + b] = mul_poly(Elem(a), Elem(b));
            }
        }
    }

    if (q_ <= kLogTableMax) {
        // Find the smallest generator of the multiplicative group.
        std::uint32_t n = q_ - 1;
        std::vector<std::uint32_t> prime_factors;
        {
            std::uint32_t t = n;
            for (std::uint32_t d = 2; d * d <= t; ++d)
                while (t % d == 0) {
                    if (prime_factors.empty() || prime_factors.back() != d)
                        prime_factors.push_back(d);
                    t /= d;
                }
            if (t > 1) prime_factors.push_back(t);
        }
        auto pow_nolog = [&](Elem a, std::uint32_t e) {
            Elem r = 1, base = a;
            while (e) {
                if (e & 1u) r = mul_poly(r, base);
                base = mul_poly(base, base);
                e >>= 1;
            }
            return r;
        };
        Elem g = 1;
        if (n > 1) {
            for (std::uint32_t cand = 2; cand < q_; ++cand) {
                bool ok = true;
                for (std::uint32_t r : prime_factors)
                    if (pow_nolog(Elem(cand), n / r) == 1) {
                        ok = false;
                        break;
                    }
                if (ok) {
                    g = Elem(cand);
                    break;
                }
            }
        }
        exp_table_.assign(n, 0);
        log_table_.assign(q_, 0);
        Elem cur = 1;
        for (std::uint32_t i = 0; i < n; ++i) {
            exp_table_[i] = cur;
            log_table_[cur] = Elem(i);
            cur = mul_poly(cur, g);
        }
        inv_table_.assign(q_, 0);
        for (std::uint32_t a = 1; a < q_; ++a)
            inv_table_[a] = exp_table_[(n - log_table_[a]) % n];
    }
}

Elem Field::add(Elem a, Elem b) const {
    if (!add_table_.empty()) return add_table_[std::size_t(a) * q_ + b];
    if (p_ == 2) return Elem(a ^ b);
    auto ca = to_digits(a), cb = to_digits(b);
    for (int i = 0; i < m_; ++i) ca[std::size_t(i)] = (ca[std::size_t(i)] + cb[std::size_t(i)]) % p_;
    return from_digits(ca);
}

Elem Field::neg(Elem a) const { return neg_table_[a]; }

Elem Field::sub(Elem a, Elem b) const { return add(a, neg_table_[b]); }

Elem Field::mul(Elem a, Elem b) const {
    if (!mul_table_.empty()) return mul_table_[std::size_t(a) * q_ + b];
    if (a == 0 || b == 0) return 0;
    if (!exp_table_.empty()) {
        std::uint32_t n = q_ - 1;
        std::uint32_t s = std::uint32_t(log_table_[a]) + std::uint32_t(log_table_[b]);
        return exp_table_[s >= n ? s - n : s];
    }
    return mul_poly(a, b);
}

Elem Field::inv(Elem a) const {
    if (a == 0) throw std::domain_error("division by zero in GF(q)");
    if (!inv_table_.empty()) return inv_table_[a];
    return pow(a, (long long)(q_)-2);
}

Elem Field::div(Elem a, Elem b) const { return mul(a, inv(b)); }

Elem Field::pow(Elem a, long long e) const {
    if (a == 0) {
        if (e == 0) return 1;
        if (e < 0) throw std::domain_error("division by zero in GF(q)");
        return 0;
    }
    long long n = (long long)(q_)-1;
    long long r = e % n;
    if (r < 0) r += n;
    if (!exp_table_.empty())
        return exp_table_[std::size_t((std::uint64_t(log_table_[a]) * std::uint64_t(r)) % std::uint64_t(n))];
    Elem result = 1, base = a;
    std::uint64_t k = std::uint64_t(r);
    while (k) {
        if (k & 1u) result = mul_poly(result, base);
        base = mul_poly(base, base);
        k >>= 1;
    }
    return result;
}

bool Field::is_subfield_order(std::uint32_t d) const {
    if (d < 2) return false;
    std::uint64_t base;
    int r;
    if (!prime_power(d, base, r)) return false;
    return base == std::uint64_t(p_) && m_ % r == 0;
}

std::vector<Elem> Field::subfield_elements(std::uint32_t d) const {
    if (!is_subfield_order(d))
        throw std::invalid_argument("not a subfield order of this field");
    std::vector<Elem> out;
    out.reserve(d);
    for (std::uint32_t a = 0; a < q_; ++a)
        if (pow(Elem(a), (long long)d) == Elem(a)) out.push_back(Elem(a));
    if (out.size() != d) throw std::logic_error("subfield element count mismatch");
    return out;
}

std::string Field::name() const { return "GF(" + std::to_string(q_) + ")"; }

}  // namespace pncc::gf
