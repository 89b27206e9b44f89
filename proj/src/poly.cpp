#include "pncc/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pncc::poly {

int Monomial::degree() const {
    int d = 0;
    for (int e : exponents) d += e;
    return d;
}

bool grlex_less(const Monomial& a, const Monomial& b) {
    if (a.exponents.size() != b.exponents.size())
        throw std::invalid_argument("monomials over different variable counts");
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    for (std::size_t i = a.exponents.size(); i-- > 0;) {
        if (a.exponents[i] != b.exponents[i]) return a.exponents[i] < b.exponents[i];
    }
    return false;
}

int Polynomial::degree() const {
    if (terms_.empty()) return -1;
    return terms_.begin()->first.degree();  // leading term has maximal degree
}

bool Polynomial::homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.begin()->first.degree();
    for (const auto& [mono, coef] : terms_)
        if (mono.degree() != d) return false;
    return true;
}

const Monomial& Polynomial::leading_monomial() const {
    if (terms_.empty()) throw std::logic_error("zero polynomial has no leading monomial");
    return terms_.begin()->first;
}

void Polynomial::add_term(const gf::Field& field, const Monomial& mono, Elem coef) {
    if (mono.exponents.size() != nvars_)
        throw std::invalid_argument("monomial variable count mismatch");
    if (coef == 0) return;
    auto [it, inserted] = terms_.emplace(mono, coef);
    if (!inserted) {
        it->second = field.add(it->second, coef);
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::monomial(std::size_t nvars, const Monomial& mono, Elem coef) {
    Polynomial f(nvars);
    if (coef != 0) f.terms_.emplace(mono, coef);
    return f;
}

Polynomial Polynomial::binomial_form(std::size_t nvars, std::size_t a, Elem c1,
                                     std::size_t b, Elem c0) {
    Polynomial f(nvars);
    Monomial ma{std::vector<int>(nvars, 0)};
    ma.exponents[a] = 1;
    Monomial mb{std::vector<int>(nvars, 0)};
    mb.exponents[b] = 1;
    if (c1 != 0) f.terms_.emplace(ma, c1);
    if (c0 != 0) f.terms_.emplace(mb, c0);
    return f;
}

Polynomial Polynomial::multiply(const gf::Field& field, const Polynomial& other) const {
    if (nvars_ != other.nvars_)
        throw std::invalid_argument("polynomial variable count mismatch");
    Polynomial out(nvars_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : other.terms_) {
            Monomial m{std::vector<int>(nvars_)};
            for (std::size_t i = 0; i < nvars_; ++i)
                m.exponents[i] = ma.exponents[i] + mb.exponents[i];
            out.add_term(field, m, field.mul(ca, cb));
        }
    return out;
}

Elem Polynomial::evaluate(const gf::Field& field, const std::vector<Elem>& coords) const {
    if (coords.size() != nvars_)
        throw std::invalid_argument("coordinate count mismatch");
    Elem total = 0;
    for (const auto& [mono, coef] : terms_)
        total = field.add(total, field.mul(coef, evaluate_monomial(field, mono, coords)));
    return total;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mono, coef] : terms_) {
        if (!first) os << "+";
        first = false;
        os << int(coef);
        for (std::size_t i = 0; i < nvars_; ++i)
            os << "*X" << i << "^" << mono.exponents[i];
    }
    return os.str();
}

namespace {

void basis_recurse(int var, long long remaining, std::vector<int>& exps,
                   std::vector<Monomial>& out) {
    if (var == 0) {
        exps[0] = static_cast<int>(remaining);
        out.push_back(Monomial{exps});
        return;
    }
    // Descending grlex: the most significant variable takes the largest
    // exponent first.
    for (long long e = remaining; e >= 0; --e) {
        exps[std::size_t(var)] = static_cast<int>(e);
        basis_recurse(var - 1, remaining - e, exps, out);
    }
}

}  // namespace

std::vector<Monomial> monomial_basis(int n, long long d) {
    if (n < 0 || d < 0) throw std::invalid_argument("monomial basis needs n, d >= 0");
    std::vector<Monomial> out;
    std::vector<int> exps(std::size_t(n) + 1, 0);
    basis_recurse(n, d, exps, out);
    return out;
}

Elem evaluate_monomial(const gf::Field& field, const Monomial& mono,
                       const std::vector<Elem>& coords) {
    Elem r = 1;
    for (std::size_t i = 0; i < mono.exponents.size(); ++i) {
        int e = mono.exponents[i];
        if (e == 0) continue;
        if (coords[i] == 0) return 0;
        r = field.mul(r, field.pow(coords[i], e));
    }
    return r;
}

std::vector<Polynomial> ideal_generators(const sets::CartesianSpec& spec) {
    const std::size_t nvars = spec.sets.size();
    const gf::Field& K = spec.field;
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < nvars; ++i)
        for (std::size_t j = i + 1; j < nvars; ++j) {
            Monomial xi{std::vector<int>(nvars, 0)};
            xi.exponents[i] = 1;
            Polynomial g = Polynomial::monomial(nvars, xi, 1);
            for (Elem a : spec.sets[j])
                g = g.multiply(K, Polynomial::binomial_form(nvars, j, 1, i, K.neg(a)));
            gens.push_back(std::move(g));
        }
    return gens;
}

Polynomial witness_polynomial(const sets::CartesianSpec& spec, long long d,
                              const std::optional<WitnessChoices>& choices) {
    const gf::Field& K = spec.field;
    const std::size_t nvars = spec.sets.size();
    const std::size_t n = spec.n();
    const formulas::Sizes tail = spec.tail_sizes();
    const long long cap = formulas::size_cap(tail);
    if (d < 1 || d > cap + 1)
        throw std::invalid_argument("witness degree out of range");

    std::size_t k;
    long long ell;
    if (d == cap + 1) {
        k = n;  // full product over every A_i, no partial block
        ell = 0;
    } else {
        formulas::KL kl = formulas::kl_decompose(d, spec.sizes());
        k = kl.k;
        ell = kl.ell;
    }

    std::vector<Elem> a(n, 0);
    if (choices && !choices->a.empty()) {
        if (choices->a.size() != n)
            throw std::invalid_argument("witness choices: need one a_i per tail set");
        a = choices->a;
        for (std::size_t i = 0; i < n; ++i)
            if (!std::binary_search(spec.sets[i + 1].begin(), spec.sets[i + 1].end(), a[i]))
                throw std::invalid_argument("witness choices: a_i must lie in A_i");
    }

    Monomial x0{std::vector<int>(nvars, 0)};
    x0.exponents[0] = 1;
    Polynomial f = Polynomial::monomial(nvars, x0, 1);
    for (std::size_t i = 1; i <= k; ++i)
        for (Elem e : spec.sets[i]) {
            if (e == a[i - 1]) continue;
            f = f.multiply(K, Polynomial::binomial_form(nvars, i, 1, 0, K.neg(e)));
        }

    if (k < n && ell > 0) {
        std::vector<Elem> B;
        if (choices && !choices->B.empty()) {
            B = choices->B;
            std::sort(B.begin(), B.end());
            B.erase(std::unique(B.begin(), B.end()), B.end());
            if (static_cast<long long>(B.size()) != ell)
                throw std::invalid_argument("witness choices: B must have exactly ell elements");
            for (Elem e : B)
                if (!std::binary_search(spec.sets[k + 1].begin(), spec.sets[k + 1].end(), e))
                    throw std::invalid_argument("witness choices: B must lie inside A_{k+1}");
        } else {
            for (Elem e : spec.sets[k + 1]) {
                if (e == 0) continue;
                B.push_back(e);
                if (static_cast<long long>(B.size()) == ell) break;
            }
        }
        for (Elem e : B)
            f = f.multiply(K, Polynomial::binomial_form(nvars, k + 1, 1, 0, K.neg(e)));
    }
    return f;
}

long long footprint_count_direct(const sets::CartesianSpec& spec, long long d) {
    if (d < 0) throw std::invalid_argument("degree must be nonnegative");
    const formulas::Sizes sizes = spec.sizes();
    const int n = static_cast<int>(spec.n());
    long long count = 0;
    for (const Monomial& mono : monomial_basis(n, d)) {
        bool survives = true;
        for (int j = 1; j <= n && survives; ++j) {
            if (mono.exponents[std::size_t(j)] < sizes[std::size_t(j)]) continue;
            for (int i = 0; i < j; ++i)
                if (mono.exponents[std::size_t(i)] != 0) {
                    survives = false;
                    break;
                }
        }
        if (survives) ++count;
    }
    return count;
}

}  // namespace pncc::poly
