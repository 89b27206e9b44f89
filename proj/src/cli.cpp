#include "pncc/cli.hpp"

#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "pncc/codes.hpp"
#include "pncc/formulas.hpp"
#include "pncc/gf.hpp"
#include "pncc/oracles.hpp"
#include "pncc/poly.hpp"
#include "pncc/sets.hpp"

namespace pncc::cli {

namespace {

using formulas::Int;
using json = nlohmann::ordered_json;

json int_json(const Int& v) {
    static const Int lo = std::numeric_limits<long long>::min();
    static const Int hi = std::numeric_limits<long long>::max();
    if (v >= lo && v <= hi) return static_cast<long long>(v);
    return v.str();
}

bool distance_exact(formulas::DistanceStatus s) {
    return s == formulas::DistanceStatus::ExactTheorem ||
           s == formulas::DistanceStatus::TrivialOne;
}

struct TableRow {
    long long degree = 0;
    Int length;
    Int dimension;
    Int distance;
    bool exact = false;
};

std::string render_rows(const std::vector<TableRow>& rows, const std::string& format) {
    const char* kStatus[2] = {"conjectured", "exact"};
    if (format == "csv") {
        std::ostringstream os;
        os << "degree,length,dimension,distance,status\n";
        for (const auto& r : rows)
            os << r.degree << ',' << r.length << ',' << r.dimension << ','
               << r.distance << ',' << kStatus[r.exact] << '\n';
        return os.str();
    }
    if (format == "json") {
        json arr = json::array();
        for (const auto& r : rows)
            arr.push_back({{"degree", r.degree},
                           {"length", int_json(r.length)},
                           {"dimension", int_json(r.dimension)},
                           {"distance", int_json(r.distance)},
                           {"status", kStatus[r.exact]}});
        json doc;
        doc["rows"] = arr;
        return doc.dump(2) + "\n";
    }
    // Aligned text. Column widths follow the content.
    const std::vector<std::string> head = {"degree", "length", "dimension", "distance",
                                           "status"};
    std::vector<std::vector<std::string>> cells;
    for (const auto& r : rows)
        cells.push_back({std::to_string(r.degree), r.length.str(), r.dimension.str(),
                         r.distance.str(), kStatus[r.exact]});
    std::vector<std::size_t> width(head.size());
    for (std::size_t c = 0; c < head.size(); ++c) {
        width[c] = head[c].size();
        for (const auto& row : cells) width[c] = std::max(width[c], row[c].size());
    }
    std::ostringstream os;
    auto emit = [&](const std::vector<std::string>& row) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) os << "  ";
            // Numbers right-aligned, the trailing status column as-is.
            if (c + 1 < row.size())
                os << std::string(width[c] - row[c].size(), ' ') << row[c];
            else
                os << row[c];
        }
        os << '\n';
    };
    emit(head);
    for (const auto& row : cells) emit(row);
    return os.str();
}

int write_output(const std::string& path, std::ostream& out, std::ostream& err,
                 const std::string& text) {
    if (path.empty()) {
        out << text;
        return 0;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        err << "error: cannot open output file: " << path << '\n';
        return 2;
    }
    f << text;
    f.close();
    if (!f) {
        err << "error: failed writing output file: " << path << '\n';
        return 2;
    }
    return 0;
}

std::optional<sets::CartesianSpec> load_normalized(const std::string& path,
                                                   std::ostream& err) {
    const auto raw = sets::parse_spec_file(path);
    const auto report = sets::validate(raw);
    if (!report.valid) {
        for (const auto& v : report.violations)
            err << "invalid spec: " << v.message() << '\n';
        return std::nullopt;
    }
    return sets::normalize(raw);
}

int cmd_validate(const std::string& path, std::ostream& out, std::ostream& err) {
    const auto raw = sets::parse_spec_file(path);
    const auto report = sets::validate(raw);
    out << "valid=" << (report.valid ? "true" : "false") << '\n';
    if (report.valid) {
        const auto norm = sets::normalize(raw);
        const auto cls = sets::classify(norm);
        out << "classification="
            << (cls.product_of_fields ? "product-of-fields" : "nested-general") << '\n';
        if (cls.product_of_fields) {
            out << "orders=";
            for (std::size_t i = 0; i < norm.sets.size(); ++i)
                out << (i ? "," : "") << norm.sets[i].size();
            out << '\n';
            // Tower exponents: |K_{i+1}| = |K_i|^{r_i}, last entry relative
            // to the ambient field.
            out << "exponents=";
            for (std::size_t i = 0; i < cls.exponents.size(); ++i)
                out << (i ? "," : "") << cls.exponents[i];
            out << '\n';
        }
    }
    for (const auto& v : report.violations) out << "violation=" << v.message() << '\n';
    (void)err;
    return report.valid ? 0 : 1;
}

int cmd_table(const sets::CartesianSpec& spec, const std::vector<long long>& degrees,
              const std::string& format, const std::string& out_path, std::ostream& out,
              std::ostream& err) {
    const auto full = spec.sizes();
    const Int length = formulas::length_formula(full);
    const bool pof = sets::classify(spec).product_of_fields;
    // The dimension column is cross-checked against the elimination rank
    // whenever the matrix stays small enough to build quickly.
    constexpr long long kRankCheckEntries = 4'000'000;

    std::vector<TableRow> rows;
    for (long long d : degrees) {
        const Int dim = formulas::dimension_formula(full, d);
        const auto dist = formulas::projective_min_distance(full, d, pof);
        const Int nrows = formulas::binomial(spec.n() + d, spec.n());
        if (nrows * length <= kRankCheckEntries) {
            const long long rank = oracles::hilbert_by_rank(spec, d);
            if (Int(rank) != dim) {
                err << "error: elimination rank " << rank
                    << " disagrees with dimension " << dim << " at degree " << d << '\n';
                return 1;
            }
        }
        rows.push_back({d, length, dim, dist.value, distance_exact(dist.status)});
    }
    return write_output(out_path, out, err, render_rows(rows, format));
}

int cmd_genmat(const sets::CartesianSpec& spec, long long d, const std::string& out_path,
               std::ostream& out, std::ostream& err) {
    const auto mat = codes::generator_matrix(spec, d);
    std::ostringstream os;
    codes::write_matrix(os, mat);
    const int rc = write_output(out_path, out, err, os.str());
    if (rc) return rc;
    out << "rank=" << codes::gf_rank(mat, spec.field) << '\n';
    return 0;
}

int cmd_mindist(const sets::CartesianSpec& spec, long long d,
                const oracles::SearchBudget& budget, int workers, std::ostream& out,
                std::ostream& err) {
    const auto full = spec.sizes();
    const bool pof = sets::classify(spec).product_of_fields;
    const long long cap = formulas::size_cap(spec.tail_sizes());
    const auto dist = formulas::projective_min_distance(full, d, pof);

    out << "degree=" << d << '\n';
    out << "length=" << formulas::length_formula(full) << '\n';
    out << "formula=" << dist.value << '\n';
    out << "status=" << (distance_exact(dist.status) ? "exact" : "conjectured") << '\n';

    bool internal_fail = false;
    if (d >= 1 && d <= cap + 1) {
        const auto f = poly::witness_polynomial(spec, d);
        const auto points = sets::enumerate_projective_points(spec);
        long long w = 0;
        for (const auto& pt : points) w += (f.evaluate(spec.field, pt.coords) != 0);
        out << "witness_weight=" << w << '\n';
        if (Int(w) != dist.value) {
            err << "error: upper-bound polynomial weight " << w
                << " does not match the formula " << dist.value << '\n';
            internal_fail = true;
        }
    }

    std::string result = "skipped";
    const auto fits = oracles::space_size_within(
        spec.field.order(), formulas::dimension_formula(full, d), budget.max_codewords);
    if (fits) {
        const auto sr = oracles::exhaustive_min_distance(spec, d, budget, workers);
        if (sr.completed) {
            out << "oracle=" << sr.min_weight << '\n';
            if (Int(sr.min_weight) == dist.value) {
                result = "agree";
            } else if (Int(sr.min_weight) < dist.value && !distance_exact(dist.status)) {
                result = "counterexample";
                err << "counterexample: measured distance " << sr.min_weight
                    << " is below the conjectured " << dist.value << '\n';
            } else {
                result = "mismatch";
                err << "error: exhaustive search found " << sr.min_weight
                    << " against exact value " << dist.value << '\n';
            }
        } else if (sr.enumerated > 0 && Int(sr.min_weight) < dist.value) {
            // Partial scan, but the found word already beats the prediction.
            out << "oracle_upper_bound=" << sr.min_weight << '\n';
            if (!distance_exact(dist.status)) {
                result = "counterexample";
                err << "counterexample: codeword of weight " << sr.min_weight
                    << " is below the conjectured " << dist.value << '\n';
            } else {
                result = "mismatch";
                err << "error: codeword of weight " << sr.min_weight
                    << " is below the exact value " << dist.value << '\n';
            }
        } else {
            out << "oracle=skipped-budget" << '\n';
        }
    } else {
        out << "oracle=skipped-budget" << '\n';
    }
    if (internal_fail) result = "mismatch";
    out << "result=" << result << '\n';
    return (result == "mismatch" || result == "counterexample") ? 1 : 0;
}

int cmd_conjecture(const sets::CartesianSpec& spec, const std::vector<long long>& degrees,
                   const oracles::SearchBudget& budget, int workers,
                   const std::string& out_path, std::ostream& out, std::ostream& err) {
    const auto report = oracles::check_conjecture(spec, degrees, budget, workers);
    const int rc = write_output(out_path, out, err, oracles::serialize_report(report));
    if (rc) return rc;
    for (const auto& e : report.entries)
        if (e.status == oracles::EntryStatus::Refuted) {
            err << "counterexample at degree " << e.degree << ": measured "
                << *e.measured << " below conjectured " << e.conjectured << '\n';
            return 1;
        }
    return 0;
}

int cmd_prm(long long n, long long q, const std::vector<long long>& degrees,
            const std::string& format, const std::string& out_path, std::ostream& out,
            std::ostream& err) {
    std::uint64_t p = 0;
    int r = 0;
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (q < 2 || !gf::prime_power(static_cast<std::uint64_t>(q), p, r))
        throw std::invalid_argument("q must be a prime power");

    const formulas::Sizes full(static_cast<std::size_t>(n) + 1, q);
    const Int length = formulas::length_formula(full);
    std::vector<TableRow> rows;
    for (long long d : degrees) {
        if (d < 1) throw std::invalid_argument("degrees must be >= 1");
        const auto pp = formulas::prm_parameters(static_cast<int>(n), q, d);
        const Int dim = formulas::dimension_formula(full, d);
        const auto dist = formulas::projective_min_distance(full, d, true);
        if (pp.length != length || pp.dimension != dim || pp.distance != dist.value) {
            err << "error: closed-form parameters disagree with the general formulas "
                   "at degree " << d << '\n';
            return 1;
        }
        rows.push_back({d, pp.length, pp.dimension, pp.distance, true});
    }
    return write_output(out_path, out, err, render_rows(rows, format));
}

}  // namespace

std::vector<long long> parse_degrees(const std::string& text) {
    constexpr long long kMaxRange = 1'000'000;
    std::vector<long long> out;
    std::stringstream ss(text);
    std::string tok;
    auto parse_ll = [](const std::string& s) {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(s, &used);
        } catch (...) {
            throw std::invalid_argument("bad degree: '" + s + "'");
        }
        if (used != s.size() || v < 0)
            throw std::invalid_argument("bad degree: '" + s + "'");
        return v;
    };
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw std::invalid_argument("empty degree token");
        const auto pos = tok.find("..");
        if (pos == std::string::npos) {
            out.push_back(parse_ll(tok));
            continue;
        }
        const long long a = parse_ll(tok.substr(0, pos));
        const long long b = parse_ll(tok.substr(pos + 2));
        if (a > b) throw std::invalid_argument("descending degree range: " + tok);
        if (b - a >= kMaxRange) throw std::invalid_argument("degree range too large");
        for (long long d = a; d <= b; ++d) out.push_back(d);
    }
    if (out.empty()) throw std::invalid_argument("empty degree list");
    return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"projective nested cartesian codes: parameters, matrices, distance checks"};
    app.require_subcommand(1);

    std::string spec_path;
    std::string degrees_text;
    std::string format = "table";
    std::string out_path;
    long long degree = -1;
    long long budget_codewords = 10'000'000;
    double budget_seconds = 60.0;
    int workers = 1;
    long long prm_n = 0;
    long long prm_q = 0;

    const auto fmt_check = CLI::IsMember({"table", "csv", "json"});

    auto* c_validate = app.add_subcommand("validate", "check and classify a spec file");
    c_validate->add_option("--spec", spec_path, "spec config file")->required();

    auto* c_table = app.add_subcommand("table", "parameter table over degrees");
    c_table->add_option("--spec", spec_path, "spec config file")->required();
    c_table->add_option("--degree", degree, "d_max; table covers 1..d_max");
    c_table->add_option("--degrees", degrees_text, "comma list, a..b ranges allowed");
    c_table->add_option("--format", format, "table|csv|json")->check(fmt_check);
    c_table->add_option("--out", out_path, "write to file instead of stdout");

    auto* c_genmat = app.add_subcommand("genmat", "write a generator matrix file");
    c_genmat->add_option("--spec", spec_path, "spec config file")->required();
    c_genmat->add_option("--degree", degree, "homogeneous degree")
        ->required()
        ->check(CLI::NonNegativeNumber);
    c_genmat->add_option("--out", out_path, "matrix output file")->required();

    auto* c_mindist = app.add_subcommand("mindist", "minimum distance: formula vs search");
    c_mindist->add_option("--spec", spec_path, "spec config file")->required();
    c_mindist->add_option("--degree", degree, "degree, >= 1")->required();
    c_mindist->add_option("--budget-codewords", budget_codewords, "enumeration cap")
        ->check(CLI::PositiveNumber);
    c_mindist->add_option("--budget-seconds", budget_seconds, "wall-clock cap")
        ->check(CLI::PositiveNumber);
    c_mindist->add_option("--workers", workers, "search threads")->check(CLI::PositiveNumber);

    auto* c_conj = app.add_subcommand("conjecture", "distance-conjecture harness");
    c_conj->add_option("--spec", spec_path, "spec config file")->required();
    c_conj->add_option("--degrees", degrees_text, "comma list, a..b ranges allowed")
        ->required();
    c_conj->add_option("--budget-codewords", budget_codewords, "enumeration cap")
        ->check(CLI::PositiveNumber);
    c_conj->add_option("--budget-seconds", budget_seconds, "wall-clock cap")
        ->check(CLI::PositiveNumber);
    c_conj->add_option("--workers", workers, "search threads")->check(CLI::PositiveNumber);
    c_conj->add_option("--out", out_path, "report file instead of stdout");

    auto* c_prm = app.add_subcommand("prm", "projective Reed-Muller parameter table");
    c_prm->add_option("--n", prm_n, "projective dimension")->required();
    c_prm->add_option("--q", prm_q, "field order (prime power)")->required();
    c_prm->add_option("--degree", degree, "d_max; table covers 1..d_max");
    c_prm->add_option("--degrees", degrees_text, "comma list, a..b ranges allowed");
    c_prm->add_option("--format", format, "table|csv|json")->check(fmt_check);
    c_prm->add_option("--out", out_path, "write to file instead of stdout");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("pncc");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        // table/prm take either an explicit degree list or a d_max.
        auto expand_degrees = [&]() -> std::vector<long long> {
            if (!degrees_text.empty()) return parse_degrees(degrees_text);
            if (degree < 0)
                throw std::invalid_argument("one of --degree or --degrees is required");
            std::vector<long long> ds;
            for (long long d = 1; d <= degree; ++d) ds.push_back(d);
            return ds;
        };

        if (*c_validate) return cmd_validate(spec_path, out, err);
        if (*c_table) {
            const auto spec = load_normalized(spec_path, err);
            if (!spec) return 2;
            return cmd_table(*spec, expand_degrees(), format, out_path, out, err);
        }
        if (*c_genmat) {
            const auto spec = load_normalized(spec_path, err);
            if (!spec) return 2;
            return cmd_genmat(*spec, degree, out_path, out, err);
        }
        if (*c_mindist) {
            if (degree < 1) throw std::invalid_argument("mindist needs --degree >= 1");
            const auto spec = load_normalized(spec_path, err);
            if (!spec) return 2;
            return cmd_mindist(*spec, degree, {budget_codewords, budget_seconds}, workers,
                               out, err);
        }
        if (*c_conj) {
            const auto spec = load_normalized(spec_path, err);
            if (!spec) return 2;
            return cmd_conjecture(*spec, parse_degrees(degrees_text),
                                  {budget_codewords, budget_seconds}, workers, out_path,
                                  out, err);
        }
        if (*c_prm) return cmd_prm(prm_n, prm_q, expand_degrees(), format, out_path, out, err);
    } catch (const sets::ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::logic_error& e) {
        err << "internal disagreement: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace pncc::cli
