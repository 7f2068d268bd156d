#include "doctest.h"
#include "surfact/report.hpp"

using namespace surfact;

TEST_CASE("JSON output round-trips") {
    for (auto [g, lambda] : {std::pair{8, 6}, std::pair{12, 5}, std::pair{8, 3}}) {
        ClassificationReport report = classify_genus(g, lambda);
        std::string once = report_to_json(report);
        ClassificationReport parsed = report_from_json(once);
        std::string twice = report_to_json(parsed);
        CHECK(once == twice);
        CHECK(parsed.genus == report.genus);
        CHECK(parsed.strata.size() == report.strata.size());
        CHECK(parsed.existence == report.existence);
    }
}

TEST_CASE("output is identical across worker counts") {
    ClassifyOptions one, four;
    one.workers = 1;
    four.workers = 4;
    for (auto [g, lambda] : {std::pair{8, 6}, std::pair{12, 5}}) {
        std::string a = report_to_json(classify_genus(g, lambda, one));
        std::string b = report_to_json(classify_genus(g, lambda, four));
        CHECK(a == b);
    }
}

TEST_CASE("renderings mention the right headline facts") {
    ClassificationReport rep = classify_genus(12, 5);
    std::string table = report_to_table(rep);
    CHECK(table.find("C11:5C5") != std::string::npos);
    CHECK(table.find("orbits=4") != std::string::npos);
    CHECK(table.find("J(S/<a>)") != std::string::npos);

    std::string json = report_to_json(rep);
    CHECK(json.find("\"orbit_count\": 4") != std::string::npos);

    std::string vec_table = vectors_to_table(rep);
    CHECK(vec_table.find("vectors=1320") != std::string::npos);

    std::string jac = jacobians_to_json(rep);
    CHECK(jac.find("\"remainder\": 0") != std::string::npos);
    std::string jactab = jacobians_to_table(rep);
    CHECK(jactab.find("J(S/<c>)^10") != std::string::npos);
}
