#include "pncc/sets.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace pncc::sets {

namespace {

bool contains(const std::vector<Elem>& sorted_set, Elem x) {
    return std::binary_search(sorted_set.begin(), sorted_set.end(), x);
}

std::string set_name(int i) { return "A_" + std::to_string(i); }

}  // namespace

formulas::Sizes CartesianSpec::sizes() const {
    formulas::Sizes out;
    out.reserve(sets.size());
    for (const auto& s : sets) out.push_back(static_cast<long long>(s.size()));
    return out;
}

formulas::Sizes CartesianSpec::tail_sizes() const {
    formulas::Sizes out = sizes();
    out.erase(out.begin());
    return out;
}

CartesianSpec make_spec(gf::Field field, std::vector<std::vector<Elem>> raw_sets) {
    if (raw_sets.empty()) throw std::invalid_argument("at least one coordinate set required");
    for (auto& s : raw_sets) {
        if (s.empty()) throw std::invalid_argument("coordinate sets must be nonempty");
        for (Elem x : s)
            if (x >= field.order())
                throw std::invalid_argument("element encoding " + std::to_string(x) +
                                            " outside " + field.name());
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
    }
    return CartesianSpec{std::move(field), std::move(raw_sets)};
}

std::string Violation::message() const {
    std::ostringstream os;
    switch (kind) {
        case ViolationKind::ZeroMembership:
            os << set_name(indices[0]) << " does not contain 0";
            break;
        case ViolationKind::SizeOrder:
            if (indices.size() == 1)
                os << set_name(indices[0]) << " is a non-leading singleton";
            else if (witness.size() == 2)
                os << "sizes must be nondecreasing: |" << set_name(indices[0]) << "| = "
                   << witness[0] << " > |" << set_name(indices[1]) << "| = " << witness[1];
            else
                os << "all sets are singletons: the projective set is empty";
            break;
        case ViolationKind::Closure:
            os << "closure violated: " << witness[0] << " * " << witness[1] << " = "
               << witness[2] << " is in " << set_name(indices[1]) << " * "
               << set_name(indices[0]) << " but not in " << set_name(indices[1]);
            break;
    }
    return os.str();
}

ValidationReport validate(const CartesianSpec& spec) {
    ValidationReport report;
    const auto& sets = spec.sets;
    const int count = static_cast<int>(sets.size());

    for (int i = 0; i < count; ++i)
        if (!contains(sets[std::size_t(i)], 0))
            report.violations.push_back({ViolationKind::ZeroMembership, {i}, {}});

    // Size monotonicity is judged on the part that survives normalization:
    // leading {0} singletons are legitimate and get dropped.
    int first = 0;
    while (first < count && sets[std::size_t(first)].size() == 1) ++first;
    if (first == count) {
        std::vector<int> all(static_cast<std::size_t>(count), 0);
        for (int i = 0; i < count; ++i) all[std::size_t(i)] = i;
        report.violations.push_back({ViolationKind::SizeOrder, all, {}});
    } else {
        for (int i = first; i < count; ++i)
            if (sets[std::size_t(i)].size() == 1)
                report.violations.push_back({ViolationKind::SizeOrder, {i}, {}});
        for (int i = first; i + 1 < count; ++i) {
            long long a = static_cast<long long>(sets[std::size_t(i)].size());
            long long b = static_cast<long long>(sets[std::size_t(i + 1)].size());
            if (a > 1 && b > 1 && a > b)
                report.violations.push_back({ViolationKind::SizeOrder, {i, i + 1}, {a, b}});
        }
    }

    // A_j * A_h <= A_j for h < j; one violation per (h, j) pair, witnessing
    // the first escaping product. b = 0 only ever produces 0, which the
    // zero-membership check already covers.
    const int n = count - 1;
    for (int j = 1; j <= n; ++j)
        for (int h = 0; h < j; ++h) {
            bool done = false;
            for (Elem b : sets[std::size_t(h)]) {
                if (b == 0) continue;
                for (Elem a : sets[std::size_t(j)]) {
                    Elem ab = spec.field.mul(a, b);
                    if (!contains(sets[std::size_t(j)], ab)) {
                        report.violations.push_back(
                            {ViolationKind::Closure, {h, j}, {a, b, ab}});
                        done = true;
                        break;
                    }
                }
                if (done) break;
            }
        }

    report.valid = report.violations.empty();
    return report;
}

CartesianSpec normalize(const CartesianSpec& spec) {
    std::size_t first = 0;
    while (first < spec.sets.size() && spec.sets[first].size() == 1) {
        if (spec.sets[first][0] != 0)
            throw std::invalid_argument("singleton set must be {0}");
        ++first;
    }
    if (first == spec.sets.size())
        throw std::invalid_argument("empty projective set: all sets are singletons");
    for (std::size_t i = first; i < spec.sets.size(); ++i)
        if (spec.sets[i].size() == 1)
            throw std::invalid_argument("non-leading singleton set");
    return CartesianSpec{spec.field, {spec.sets.begin() + long(first), spec.sets.end()}};
}

CartesianSpec scale_spec(const CartesianSpec& spec, const std::vector<Elem>& scalars) {
    if (scalars.size() != spec.sets.size())
        throw std::invalid_argument("one scalar per coordinate set required");
    std::vector<std::vector<Elem>> scaled(spec.sets.size());
    for (std::size_t j = 0; j < spec.sets.size(); ++j) {
        Elem a = scalars[j];
        if (a == 0) throw std::invalid_argument("scaling requires nonzero scalars");
        if (!contains(spec.sets[j], a))
            throw std::invalid_argument("scalar not a member of its set");
        Elem inv = spec.field.inv(a);
        scaled[j].reserve(spec.sets[j].size());
        for (Elem x : spec.sets[j]) scaled[j].push_back(spec.field.mul(inv, x));
    }
    return make_spec(spec.field, std::move(scaled));
}

std::vector<ProjectivePoint> enumerate_projective_points(const CartesianSpec& spec) {
    const std::size_t count = spec.sets.size();
    std::vector<ProjectivePoint> points;
    for (std::size_t pivot = 0; pivot < count; ++pivot) {
        // Odometer over A_{pivot+1} x ... x A_n, rightmost coordinate
        // fastest, so the leftmost is most significant.
        std::vector<std::size_t> idx(count, 0);
        while (true) {
            ProjectivePoint pt;
            pt.pivot = static_cast<int>(pivot);
            pt.coords.assign(count, 0);
            pt.coords[pivot] = 1;
            for (std::size_t j = pivot + 1; j < count; ++j)
                pt.coords[j] = spec.sets[j][idx[j]];
            points.push_back(std::move(pt));

            std::size_t j = count;
            bool carried_out = true;
            while (j-- > pivot + 1) {
                if (++idx[j] < spec.sets[j].size()) {
                    carried_out = false;
                    break;
                }
                idx[j] = 0;
            }
            if (carried_out) break;
        }
    }
    return points;
}

std::vector<std::vector<Elem>> enumerate_affine_points(
    const std::vector<std::vector<Elem>>& sets) {
    if (sets.empty()) throw std::invalid_argument("affine product needs at least one set");
    for (const auto& s : sets)
        if (s.empty()) throw std::invalid_argument("coordinate sets must be nonempty");
    std::vector<std::vector<Elem>> points;
    std::vector<std::size_t> idx(sets.size(), 0);
    while (true) {
        std::vector<Elem> pt(sets.size());
        for (std::size_t j = 0; j < sets.size(); ++j) pt[j] = sets[j][idx[j]];
        points.push_back(std::move(pt));
        std::size_t j = sets.size();
        bool carried_out = true;
        while (j-- > 0) {
            if (++idx[j] < sets[j].size()) {
                carried_out = false;
                break;
            }
            idx[j] = 0;
        }
        if (carried_out) break;
    }
    return points;
}

Classification classify(const CartesianSpec& spec) {
    Classification out;
    std::vector<long long> degrees;  // d_i = p^{s_i}
    for (const auto& s : spec.sets) {
        std::uint64_t base;
        int r;
        if (!gf::prime_power(s.size(), base, r)) return out;
        if (base != std::uint64_t(spec.field.characteristic())) return out;
        if (spec.field.degree() % r != 0) return out;
        if (s != spec.field.subfield_elements(std::uint32_t(s.size()))) return out;
        degrees.push_back(r);
    }
    std::vector<long long> exponents;
    for (std::size_t i = 0; i + 1 < degrees.size(); ++i) {
        if (degrees[i + 1] % degrees[i] != 0) return out;
        exponents.push_back(degrees[i + 1] / degrees[i]);
    }
    exponents.push_back(spec.field.degree() / degrees.back());
    out.product_of_fields = true;
    out.exponents = std::move(exponents);
    return out;
}

namespace {

[[noreturn]] void config_fail(int line_no, const std::string& what) {
    throw ConfigError("config line " + std::to_string(line_no) + ": " + what);
}

long long parse_int(const std::string& tok, int line_no) {
    try {
        std::size_t pos = 0;
        long long v = std::stoll(tok, &pos);
        if (pos != tok.size()) config_fail(line_no, "not an integer: '" + tok + "'");
        return v;
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception&) {
        config_fail(line_no, "not an integer: '" + tok + "'");
    }
}

std::vector<Elem> expand_set(const gf::Field& field, const std::vector<std::string>& toks,
                             int line_no) {
    if (toks.empty()) config_fail(line_no, "empty set");
    if (toks.size() == 1 && toks[0].rfind("subfield:", 0) == 0) {
        long long d = parse_int(toks[0].substr(9), line_no);
        if (d < 2 || !field.is_subfield_order(std::uint32_t(d)))
            config_fail(line_no, std::to_string(d) + " is not a subfield order of " + field.name());
        return field.subfield_elements(std::uint32_t(d));
    }
    if (toks.size() == 1 && toks[0].rfind("subgroup:", 0) == 0) {
        std::string body = toks[0].substr(9);
        bool withzero = false;
        if (auto comma = body.find(','); comma != std::string::npos) {
            std::string suffix = body.substr(comma + 1);
            if (suffix != "withzero")
                config_fail(line_no, "unknown subgroup suffix '" + suffix + "'");
            withzero = true;
            body = body.substr(0, comma);
        }
        long long g = parse_int(body, line_no);
        if (g <= 0 || g >= field.order())
            config_fail(line_no, "subgroup generator must be a nonzero element encoding");
        std::vector<Elem> out;
        Elem cur = 1;
        do {
            out.push_back(cur);
            cur = field.mul(cur, Elem(g));
        } while (cur != 1);
        if (withzero) out.push_back(0);
        return out;
    }
    std::vector<Elem> out;
    for (const auto& t : toks) {
        long long v = parse_int(t, line_no);
        if (v < 0 || v >= field.order())
            config_fail(line_no, "element encoding " + t + " outside " + field.name());
        out.push_back(Elem(v));
    }
    return out;
}

}  // namespace

CartesianSpec parse_spec_string(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    bool have_field = false;
    int p = 0, m = 0;
    std::vector<int> modulus;
    std::vector<std::vector<std::string>> set_lines;
    std::vector<int> set_line_nos;

    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::vector<std::string> toks;
        for (std::string t; ls >> t;) toks.push_back(t);
        if (toks.empty()) continue;

        if (toks[0] == "field") {
            if (have_field) config_fail(line_no, "duplicate field line");
            for (std::size_t i = 1; i < toks.size(); ++i) {
                auto eq = toks[i].find('=');
                if (eq == std::string::npos)
                    config_fail(line_no, "expected key=value, got '" + toks[i] + "'");
                std::string key = toks[i].substr(0, eq), val = toks[i].substr(eq + 1);
                if (key == "p") {
                    p = static_cast<int>(parse_int(val, line_no));
                } else if (key == "m") {
                    m = static_cast<int>(parse_int(val, line_no));
                } else if (key == "modulus") {
                    std::istringstream ms(val);
                    for (std::string c; std::getline(ms, c, ',');)
                        modulus.push_back(static_cast<int>(parse_int(c, line_no)));
                } else {
                    config_fail(line_no, "unknown field key '" + key + "'");
                }
            }
            if (p == 0 || m == 0) config_fail(line_no, "field line requires p= and m=");
            have_field = true;
        } else if (toks[0] == "set") {
            if (!have_field) config_fail(line_no, "set line before field line");
            set_lines.emplace_back(toks.begin() + 1, toks.end());
            set_line_nos.push_back(line_no);
        } else {
            config_fail(line_no, "unknown directive '" + toks[0] + "'");
        }
    }

    if (!have_field) throw ConfigError("config: missing field line");
    if (set_lines.empty()) throw ConfigError("config: no set lines");

    try {
        gf::Field field(p, m, modulus);
        std::vector<std::vector<Elem>> sets;
        for (std::size_t i = 0; i < set_lines.size(); ++i)
            sets.push_back(expand_set(field, set_lines[i], set_line_nos[i]));
        return make_spec(std::move(field), std::move(sets));
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
}

CartesianSpec parse_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open spec file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_spec_string(buf.str());
}

}  // namespace pncc::sets
