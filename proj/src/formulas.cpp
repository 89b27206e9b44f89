#include "pncc/formulas.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "pncc/gf.hpp"

namespace pncc::formulas {

namespace {

void check_sizes(const Sizes& sizes, bool require_nonempty) {
    if (require_nonempty && sizes.empty())
        throw std::invalid_argument("at least one coordinate set required");
    if (sizes.size() > 30) throw std::invalid_argument("too many coordinate sets");
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (sizes[i] < 2) throw std::invalid_argument("set sizes must be at least 2");
        if (i > 0 && sizes[i] < sizes[i - 1])
            throw std::invalid_argument("set sizes must be nondecreasing");
    }
}

Sizes tail_of(const Sizes& full_sizes) {
    check_sizes(full_sizes, true);
    return Sizes(full_sizes.begin() + 1, full_sizes.end());
}

Int ipow(long long base, long long e) {
    Int r = 1;
    for (long long i = 0; i < e; ++i) r *= base;
    return r;
}

}  // namespace

Int binomial(long long a, long long b) {
    if (b < 0 || b > a) return 0;
    long long k = std::min(b, a - b);
    Int r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= a - k + i;
        r /= i;  // exact: r is C(a-k+i, i) after this step
    }
    return r;
}

long long size_cap(const Sizes& sizes) {
    long long cap = 0;
    for (long long di : sizes) cap += di - 1;
    return cap;
}

KL decompose(long long s, const Sizes& sizes) {
    check_sizes(sizes, true);
    if (s < 0 || s >= size_cap(sizes))
        throw std::invalid_argument("value out of decomposition range");
    KL kl;
    kl.ell = s;
    while (kl.ell >= sizes[kl.k] - 1) {
        kl.ell -= sizes[kl.k] - 1;
        ++kl.k;  // stays < sizes.size() because s < size_cap
    }
    return kl;
}

KL kl_decompose(long long d, const Sizes& full_sizes) {
    return decompose(d - 1, tail_of(full_sizes));
}

Int min_product(const Sizes& sizes, long long s) {
    check_sizes(sizes, true);
    if (s < 0 || s > size_cap(sizes))
        throw std::invalid_argument("value out of decomposition range");
    if (s == size_cap(sizes)) return 1;
    KL kl = decompose(s, sizes);
    Int r = sizes[kl.k] - kl.ell;
    for (std::size_t i = kl.k + 1; i < sizes.size(); ++i) r *= sizes[i];
    return r;
}

Int length_formula(const Sizes& full_sizes) {
    check_sizes(full_sizes, true);
    Int total = 1, suffix = 1;
    for (std::size_t i = full_sizes.size(); i-- > 1;) {
        suffix *= full_sizes[i];
        total += suffix;
    }
    return total;
}

Int dimension_formula(const Sizes& full_sizes, long long d) {
    const Sizes tail = tail_of(full_sizes);
    if (d < 0) throw std::invalid_argument("degree must be nonnegative");
    const std::size_t n = tail.size();
    Int total = 1;
    for (std::size_t j = 1; j <= n; ++j) {
        // Subsets T of the last j tail indices {n-j,...,n-1} (zero-based).
        for (std::uint32_t mask = 0; mask < (1u << j); ++mask) {
            long long s = 0;
            for (std::size_t b = 0; b < j; ++b)
                if (mask & (1u << b)) s += tail[n - j + b];
            Int term = binomial(static_cast<long long>(j) + d - 1 - s, d - 1 - s);
            if (std::popcount(mask) % 2)
                total -= term;
            else
                total += term;
        }
    }
    return total;
}

Int footprint_count_formula(const Sizes& full_sizes, long long d) {
    const Sizes tail = tail_of(full_sizes);
    if (d < 0) throw std::invalid_argument("degree must be nonnegative");
    const std::size_t n = tail.size();
    const long long nn = static_cast<long long>(n);
    Int total = binomial(nn + d, nn);
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        const int k = std::popcount(mask);
        long long s = 0;
        int j1 = -1;  // smallest selected index, one-based
        for (std::size_t b = 0; b < n; ++b)
            if (mask & (1u << b)) {
                s += tail[b];
                if (j1 < 0) j1 = static_cast<int>(b) + 1;
            }
        Int term;
        if (k == static_cast<int>(n)) {
            // The pair of binomials collapses to a single one here.
            term = binomial(nn + d - (s + 1), nn);
        } else {
            term = binomial(nn + d - s, nn) - binomial(nn - j1 + d - s, nn - j1);
        }
        if (k % 2)
            total -= term;
        else
            total += term;
    }
    return total;
}

Distance projective_min_distance(const Sizes& full_sizes, long long d,
                                 bool product_of_fields) {
    const Sizes tail = tail_of(full_sizes);
    if (d < 0) throw std::invalid_argument("degree must be nonnegative");
    if (d == 0) return {length_formula(full_sizes), DistanceStatus::ExactTheorem};
    if (tail.empty() || d > size_cap(tail)) return {Int(1), DistanceStatus::TrivialOne};
    return {min_product(tail, d - 1),
            product_of_fields ? DistanceStatus::ExactTheorem : DistanceStatus::Conjectured};
}

Int affine_length(const Sizes& sizes) {
    check_sizes(sizes, false);
    Int total = 1;
    for (long long di : sizes) total *= di;
    return total;
}

Int affine_dimension(const Sizes& sizes, long long d) {
    check_sizes(sizes, false);
    if (d < 0) return 0;
    const std::size_t n = sizes.size();
    if (d >= size_cap(sizes)) return affine_length(sizes);
    Int total = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        long long s = 0;
        for (std::size_t b = 0; b < n; ++b)
            if (mask & (1u << b)) s += sizes[b];
        Int term = binomial(static_cast<long long>(n) + d - s, d - s);
        if (std::popcount(mask) % 2)
            total -= term;
        else
            total += term;
    }
    return total;
}

Int affine_min_distance(const Sizes& sizes, long long d) {
    check_sizes(sizes, false);
    if (d < 0) throw std::invalid_argument("degree must be nonnegative");
    if (sizes.empty()) return 1;
    return min_product(sizes, std::min(d, size_cap(sizes)));
}

PrmParams prm_parameters(int n, long long q, long long d) {
    if (n < 1) throw std::invalid_argument("projective dimension must be positive");
    if (d < 1) throw std::invalid_argument("degree must be positive");
    std::uint64_t p = 0;
    int r = 0;
    if (q < 2 || !gf::prime_power(static_cast<std::uint64_t>(q), p, r))
        throw std::invalid_argument("field order must be a prime power");
    PrmParams out;
    out.length = (ipow(q, n + 1) - 1) / (q - 1);
    out.dimension = 0;
    for (long long j = 0; j <= n; ++j)
        for (long long k = 0; k <= j; ++k) {
            Int term = binomial(j, k) * binomial(j + d - 1 - k * q, d - 1 - k * q);
            if (k % 2)
                out.dimension -= term;
            else
                out.dimension += term;
        }
    const long long cap = static_cast<long long>(n) * (q - 1);
    if (d == 1) {
        out.distance = ipow(q, n);
    } else if (d <= cap) {
        // d = 1 + k(q-1) + ell with 0 <= k <= n-1 and 1 <= ell <= q-1.
        long long k = (d - 2) / (q - 1);
        long long ell = d - 1 - k * (q - 1);
        out.distance = (q - ell) * ipow(q, n - k - 1);
    } else {
        out.distance = 1;
    }
    return out;
}

}  // namespace pncc::formulas
