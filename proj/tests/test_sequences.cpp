#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include <nlohmann/json.hpp>

#include "menage/sequences.hpp"

using namespace menage;

namespace {

std::filesystem::path temp_file(const char* name) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::filesystem::remove(path);
    return path;
}

}  // namespace

TEST_CASE("method names round trip") {
    for (Method m : {Method::touchard, Method::inclusion_exclusion, Method::transfer,
                     Method::eigen, Method::b2, Method::diagonal, Method::bruteforce})
        CHECK(method_from_name(method_name(m)) == m);
    CHECK_FALSE(method_from_name("newton").has_value());
}

TEST_CASE("term dispatch and applicability") {
    CHECK(compute_term(2, 3, Method::touchard) == 12);
    CHECK(compute_term(2, 3, Method::inclusion_exclusion) == 12);
    CHECK(compute_term(2, 3, Method::eigen) == 12);
    CHECK(compute_term(2, 3, Method::transfer) == 12);
    CHECK(compute_term(2, 3, Method::bruteforce) == 12);
    CHECK(compute_term(3, 2, Method::b2) == 8);
    CHECK(compute_term(3, 2, Method::diagonal) == 8);

    CHECK_THROWS_AS(compute_term(3, 2, Method::touchard), UsageError);
    CHECK_THROWS_AS(compute_term(2, 2, Method::b2), UsageError);
    CHECK_THROWS_AS(compute_term(2, 6, Method::bruteforce), UsageError);
    CHECK_THROWS_AS(compute_term(1, 2, Method::transfer), UsageError);
}

TEST_CASE("sequence ids and normalization") {
    CHECK(SequenceSpec::from_id("A059375")->k == 2);
    CHECK(SequenceSpec::from_id("A258338")->k == 3);
    CHECK(SequenceSpec::from_id("A114939")->k == 3);
    CHECK_FALSE(SequenceSpec::from_id("A000001").has_value());

    const SequenceSpec a179 = *SequenceSpec::from_id("A000179");
    CHECK(apply_normalization(a179, 5, 3120) == 13);
    CHECK_THROWS_AS(apply_normalization(a179, 0, 1), UsageError);
    CHECK_THROWS_AS(apply_normalization(a179, 3, 13), std::domain_error);

    const SequenceSpec a114939 = *SequenceSpec::from_id("A114939");
    CHECK(apply_normalization(a114939, 7, ExactInt("2324085120")) == ExactInt("83003040"));

    const SequenceSpec a94047 = *SequenceSpec::from_id("A094047");
    CHECK(apply_normalization(a94047, 4, 96) == 12);
}

TEST_CASE("rendering formats") {
    const SequenceSpec spec = *SequenceSpec::from_id("A114939");
    const std::vector<TermRecord> terms = compute_terms(3, 1, 7, Method::transfer);
    REQUIRE(terms.size() == 7);

    CHECK(render_terms(spec, terms, OutputFormat::bfile) ==
          "1 0\n"
          "2 1\n"
          "3 7\n"
          "4 216\n"
          "5 10956\n"
          "6 803400\n"
          "7 83003040\n");

    CHECK(render_terms(spec, {terms.begin(), terms.begin() + 3}, OutputFormat::plain) ==
          "0\n1\n7\n");

    const auto doc = nlohmann::json::parse(render_terms(spec, terms, OutputFormat::json));
    CHECK(doc.at("k") == 3);
    CHECK(doc.at("sequence") == "A114939");
    CHECK(doc.at("method") == "transfer");
    REQUIRE(doc.at("terms").size() == 7);
    CHECK(doc.at("terms")[6].at("n") == 7);
    CHECK(doc.at("terms")[6].at("value") == "83003040");
}

TEST_CASE("verification report") {
    const VerifyReport ok = verify_methods(
        2, 8, {Method::touchard, Method::transfer, Method::eigen, Method::inclusion_exclusion});
    CHECK(ok.all_agree);
    CHECK(ok.rows.size() == 8);
    CHECK(ok.render().find("MISMATCH") == std::string::npos);

    // The mismatch path, fed artificial rows (a correct engine cannot
    // produce disagreeing methods).
    VerifyRow bad;
    bad.n = 3;
    bad.values = {ExactInt(12), ExactInt(13)};
    const VerifyReport report =
        build_verify_report({Method::touchard, Method::transfer}, {bad});
    CHECK_FALSE(report.all_agree);
    CHECK(report.render().find("MISMATCH") != std::string::npos);

    CHECK_THROWS_AS(verify_methods(2, 8, {Method::touchard}), UsageError);
    CHECK_THROWS_AS(verify_methods(2, 8, {Method::touchard, Method::b2}), UsageError);
    CHECK_THROWS_AS(verify_methods(2, 8, {Method::touchard, Method::bruteforce}), UsageError);
}

TEST_CASE("term cache journal") {
    const auto path = temp_file("menage_cache_test.jsonl");

    // Empty file loads as zero records.
    { std::ofstream touch(path); }
    CHECK(TermCache::load(path.string()).size() == 0);

    const ExactInt fresh = compute_term(3, 8, Method::transfer);
    TermCache::append(path.string(), TermRecord{3, 8, fresh, Method::transfer, 17});
    TermCache::append(path.string(), TermRecord{2, 3, ExactInt(12), Method::touchard, 1});

    TermCache cache = TermCache::load(path.string());
    REQUIRE(cache.size() == 2);
    CHECK(cache.find(3, 8, Method::transfer) == fresh);
    CHECK(cache.find(2, 3, Method::touchard) == ExactInt(12));
    CHECK_FALSE(cache.find(3, 9, Method::transfer).has_value());
    CHECK_FALSE(cache.find(3, 8, Method::b2).has_value());

    // A corrupt line is skipped; the valid lines around it survive.
    {
        std::ofstream out(path, std::ios::app);
        out << "{not json at all\n";
    }
    TermCache::append(path.string(), TermRecord{2, 4, ExactInt(96), Method::touchard, 0});
    cache = TermCache::load(path.string());
    CHECK(cache.size() == 3);
    CHECK(cache.find(2, 4, Method::touchard) == ExactInt(96));

    // Missing file: empty cache, no error.
    std::filesystem::remove(path);
    CHECK(TermCache::load(path.string()).size() == 0);
}

TEST_CASE("compute_terms ranges") {
    const std::vector<TermRecord> range = compute_terms(2, 0, 5, Method::touchard);
    REQUIRE(range.size() == 6);
    CHECK(range[0].value == 1);
    CHECK(range[1].value == 0);
    CHECK(range[5].value == 3120);

    const std::vector<TermRecord> swept = compute_terms(3, 2, 6, Method::transfer);
    REQUIRE(swept.size() == 5);
    CHECK(swept[0].n == 2);
    CHECK(swept[0].value == 8);
    CHECK(swept[4].value == ExactInt("19281600"));

    CHECK_THROWS_AS(compute_terms(2, 3, 2, Method::touchard), UsageError);
    CHECK_THROWS_AS(compute_terms(2, -1, 2, Method::touchard), UsageError);
}
