#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "pncc/oracles.hpp"

using namespace pncc::oracles;
using pncc::codes::EchelonBasis;
using pncc::codes::GeneratorMatrix;
using pncc::formulas::Int;
using pncc::gf::Elem;
using pncc::gf::Field;
using pncc::sets::CartesianSpec;
using pncc::sets::make_spec;

namespace {

CartesianSpec binary_line() {
    return make_spec(Field(2, 1), {{0, 1}, {0, 1}});
}

CartesianSpec binary_plane() {
    return make_spec(Field(2, 1), {{0, 1}, {0, 1}, {0, 1}});
}

CartesianSpec gf7_subgroup_spec() {
    Field k(7, 1);
    std::vector<Elem> squares{0, 1, 2, 4};
    return make_spec(k, {{0, 1}, squares, squares});
}

CartesianSpec tower25_spec() {
    Field k(5, 2);
    auto f5 = k.subfield_elements(5);
    std::vector<Elem> all(k.order());
    for (std::uint32_t a = 0; a < k.order(); ++a) all[a] = Elem(a);
    return make_spec(k, {f5, f5, all});
}

}  // namespace

TEST_CASE("exhaustive search finds the simplex minimum weight") {
    SearchResult res = exhaustive_min_distance(binary_plane(), 1);
    CHECK(res.completed);
    CHECK(res.total == 7);
    CHECK(res.enumerated == 7);
    CHECK(res.min_weight == 4);
    // Lexicographically first message over the echelon basis.
    CHECK(res.message == std::vector<Elem>{0, 0, 1});
    CHECK(res.codeword.size() == 7);
    CHECK(pncc::codes::weight(res.codeword) == 4);

    res = exhaustive_min_distance(binary_line(), 1);
    CHECK(res.completed);
    CHECK(res.total == 3);
    CHECK(res.min_weight == 2);

    CHECK_THROWS_AS(exhaustive_min_distance(binary_line(), 0), std::invalid_argument);
}

TEST_CASE("search responds to the codeword budget") {
    SearchBudget tiny;
    tiny.max_codewords = 3;
    SearchResult res = exhaustive_min_distance(binary_plane(), 1, tiny);
    CHECK_FALSE(res.completed);
    CHECK(res.enumerated == 0);
    CHECK(res.total == 7);
    CHECK(res.message.empty());

    // The order-25 tower at degree 2 is far beyond the default budget.
    res = exhaustive_min_distance(tower25_spec(), 2, {});
    CHECK_FALSE(res.completed);
    CHECK(res.enumerated == 0);
    CHECK(res.total == Int("244140624"));

    CHECK_THROWS_AS(search_min_weight(EchelonBasis{}, Field(2, 1), {-1, 1.0}),
                    std::invalid_argument);
}

TEST_CASE("worker count does not change the search outcome") {
    CartesianSpec spec = gf7_subgroup_spec();
    GeneratorMatrix mat = pncc::codes::generator_matrix(spec, 2);
    EchelonBasis basis = pncc::codes::rref(mat, spec.field);
    REQUIRE(basis.rank == 6);

    SearchResult one = search_min_weight(basis, spec.field, {}, 1);
    CHECK(one.completed);
    CHECK(one.total == 117648);
    CHECK(one.min_weight == 12);

    for (int workers : {2, 3, 8}) {
        SearchResult w = search_min_weight(basis, spec.field, {}, workers);
        CHECK(w.completed);
        CHECK(w.min_weight == one.min_weight);
        CHECK(w.enumerated == one.enumerated);
        CHECK(w.message == one.message);
        CHECK(w.codeword == one.codeword);
    }
    CHECK_THROWS_AS(search_min_weight(basis, spec.field, {}, 0), std::invalid_argument);
}

TEST_CASE("space_size_within gates on the codeword count") {
    CHECK(space_size_within(2, Int(3), 7) == 7);
    CHECK_FALSE(space_size_within(2, Int(3), 6).has_value());
    CHECK(space_size_within(7, Int(6), 10'000'000) == 117648);
    CHECK_FALSE(space_size_within(5, Int(40), 10'000'000).has_value());
    CHECK(space_size_within(2, Int(0), 10) == 0);
}

TEST_CASE("rank oracle matches the dimension formula") {
    CartesianSpec spec = tower25_spec();
    CHECK(hilbert_by_rank(spec, 5) == 21);
    CHECK(hilbert_by_rank(spec, 0) == 1);
    CHECK(hilbert_by_rank(binary_plane(), 2) == 6);
}

TEST_CASE("recursion identity holds degree by degree") {
    CHECK(recursion_check(binary_plane(), 2));  // 6 = 3 + 3
    CHECK(recursion_check(binary_line(), 1));   // 2 = 1 + 1
    for (long long d = 1; d <= 8; ++d) {
        CHECK(recursion_check(gf7_subgroup_spec(), d));
        CHECK(recursion_check(tower25_spec(), d));
    }
    CHECK_THROWS_AS(recursion_check(make_spec(Field(2, 1), {{0, 1}}), 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(recursion_check(binary_line(), 0), std::invalid_argument);
}

TEST_CASE("conjecture harness verifies the subgroup spec at low degrees") {
    CartesianSpec spec = gf7_subgroup_spec();
    ConjectureReport report = check_conjecture(spec, {1, 2, 3, 7, 8});

    REQUIRE(report.entries.size() == 5);
    CHECK(report.p == 7);
    CHECK(report.m_ext == 1);
    CHECK(report.length == 21);
    CHECK(report.sets == spec.sets);

    const ConjectureEntry& d1 = report.entries[0];
    CHECK(d1.degree == 1);
    CHECK(d1.conjectured == 16);
    CHECK(d1.status == EntryStatus::Verified);
    REQUIRE(d1.measured.has_value());
    CHECK(*d1.measured == 16);

    const ConjectureEntry& d2 = report.entries[1];
    CHECK(d2.conjectured == 12);
    CHECK(d2.status == EntryStatus::Verified);
    CHECK(*d2.measured == 12);

    // Degree 3 has 7^10 - 1 candidate codewords: over any sane budget.
    const ConjectureEntry& d3 = report.entries[2];
    CHECK(d3.conjectured == 8);
    CHECK(d3.status == EntryStatus::SkippedBudget);
    CHECK_FALSE(d3.measured.has_value());

    // Degree 7 = cap + 1 is the trivial tail: exact without a theorem label
    // change, measured when the space fits.
    const ConjectureEntry& d7 = report.entries[3];
    CHECK(d7.conjectured == 1);
    CHECK(d7.status == EntryStatus::ExactTheorem);

    const ConjectureEntry& d8 = report.entries[4];
    CHECK(d8.conjectured == 1);
    CHECK(d8.status == EntryStatus::ExactTheorem);

    CHECK_THROWS_AS(check_conjecture(spec, {0}), std::invalid_argument);
}

TEST_CASE("conjecture harness proves product-of-fields specs exactly") {
    ConjectureReport report = check_conjecture(binary_plane(), {1, 2, 3});
    REQUIRE(report.entries.size() == 3);
    const long long expected[] = {4, 2, 1};
    for (int i = 0; i < 3; ++i) {
        CHECK(report.entries[i].status == EntryStatus::ExactTheorem);
        CHECK(report.entries[i].conjectured == expected[i]);
        REQUIRE(report.entries[i].measured.has_value());
        CHECK(*report.entries[i].measured == expected[i]);
        CHECK(report.entries[i].witness.empty());
    }
}

TEST_CASE("reports serialize byte for byte") {
    ConjectureReport report = check_conjecture(binary_plane(), {1, 2, 3});
    CHECK(serialize_report(report) ==
          "spec p=2 m=1 sets=0,1;0,1;0,1 length=7\n"
          "degree=1 conjectured=4 measured=4 status=exact-theorem\n"
          "degree=2 conjectured=2 measured=2 status=exact-theorem\n"
          "degree=3 conjectured=1 measured=1 status=exact-theorem\n");

    ConjectureReport gf7 = check_conjecture(gf7_subgroup_spec(), {1, 3});
    CHECK(serialize_report(gf7) ==
          "spec p=7 m=1 sets=0,1;0,1,2,4;0,1,2,4 length=21\n"
          "degree=1 conjectured=16 measured=16 status=verified\n"
          "degree=3 conjectured=8 status=skipped-budget\n");

    // Hand-built refuted entry: witness text appears at the end of the line.
    ConjectureReport fake;
    fake.p = 2;
    fake.m_ext = 1;
    fake.sets = {{0, 1}, {0, 1}};
    fake.length = 3;
    ConjectureEntry e;
    e.degree = 1;
    e.conjectured = 2;
    e.status = EntryStatus::Refuted;
    e.measured = 1;
    e.witness = "1*X0^1*X1^0";
    fake.entries.push_back(e);
    CHECK(serialize_report(fake) ==
          "spec p=2 m=1 sets=0,1;0,1 length=3\n"
          "degree=1 conjectured=2 measured=1 status=refuted witness=1*X0^1*X1^0\n");

    CHECK(to_string(EntryStatus::Verified) == "verified");
    CHECK(to_string(EntryStatus::Refuted) == "refuted");
    CHECK(to_string(EntryStatus::ExactTheorem) == "exact-theorem");
    CHECK(to_string(EntryStatus::SkippedBudget) == "skipped-budget");
}

TEST_CASE("verified searches reconstruct a witness message") {
    // The measured minimum must come with a consistent codeword.
    CartesianSpec spec = gf7_subgroup_spec();
    GeneratorMatrix mat = pncc::codes::generator_matrix(spec, 1);
    EchelonBasis basis = pncc::codes::rref(mat, spec.field);
    SearchResult res = search_min_weight(basis, spec.field);
    REQUIRE(res.completed);
    CHECK(res.min_weight == 16);
    pncc::codes::Codeword rebuilt = pncc::codes::encode(basis, spec.field, res.message);
    CHECK(rebuilt == res.codeword);
    CHECK(pncc::codes::weight(rebuilt) == 16);
}
