#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "cli.hpp"
#include "json.hpp"

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cslab::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string last_line(const std::string& text, int from_end = 0) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        lines.push_back(line);
    return lines.at(lines.size() - 1 - static_cast<std::size_t>(from_end));
}

}  // namespace

TEST_CASE("csf of the claw") {
    auto r = run({"csf", "--graph", "claw", "--basis", "e"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          R"({"basis":"e","degree":4,"terms":[{"partition":[4],"coeff":"4"},{"partition":[3,1],"coeff":"5"},)"
          R"({"partition":[2,2],"coeff":"-2"},{"partition":[2,1,1],"coeff":"1"}]})"
          "\n");
    r = run({"csf", "--graph", "claw", "--basis", "s"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          R"({"basis":"s","degree":4,"terms":[{"partition":[3,1],"coeff":"1"},{"partition":[2,2],"coeff":"-1"},)"
          R"({"partition":[2,1,1],"coeff":"5"},{"partition":[1,1,1,1],"coeff":"8"}]})"
          "\n");
    r = run({"csf", "--graph", "claw", "--basis", "e", "--trace"});
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["graph"] == "claw");
    CHECK(j["route"] == "family-recurrence");
    r = run({"csf", "--graph", "claw", "--basis", "e", "--pretty"});
    CHECK(r.out.find("-2  e_(2,2)\n") != std::string::npos);
    r = run({"csf", "--graph", "path:4", "--route", "edge-p", "--basis", "p"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["basis"] == "p");
}

TEST_CASE("single coefficients") {
    auto r = run({"coeff", "--graph", "claw", "--basis", "e", "--partition", "2,2"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["coeff"] == "-2");
    r = run({"schur-coeff", "--graph", "broom:14,2", "--partition", "8,8,1"});
    CHECK(nlohmann::json::parse(r.out)["coeff"] == "-1");
    r = run({"schur-coeff", "--graph", "broom:6,2", "--partition", "4,4,1", "--trace"});
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["total"] == "3");
    CHECK(j["tabloids"].size() == 3);
}

TEST_CASE("positivity exit codes") {
    auto r = run({"positivity", "--graph", "claw"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["e_positive"] == "no");
    CHECK(j["e_witness"]["partition"] == nlohmann::json::array({2, 2}));
    CHECK(j["e_witness"]["coeff"] == "-2");
    CHECK(run({"positivity", "--graph", "claw", "--expect", "positive"}).code == 2);
    CHECK(run({"positivity", "--graph", "spider:2,1,1", "--expect", "positive"}).code == 0);
    r = run({"positivity", "--graph", "spider:4,4,2", "--kind", "e", "--screen-only"});
    j = nlohmann::json::parse(r.out);
    CHECK(j["e_witness"]["source"] == "leg-length");
    CHECK(j["schur_positive"].is_null());
    CHECK(run({"positivity", "--graph", "cycle:30", "--kind", "e"}).code == 3);
    CHECK(run({"csf", "--graph", "cycle:30"}).code == 3);
}

TEST_CASE("sweep summary") {
    auto r = run({"sweep", "--family", "spider:a,2,1", "--range", "a=2..30", "--kind", "e"});
    CHECK(r.code == 0);
    CHECK(last_line(r.out) == "bound: S(a,2,1) e-positive needs a <= 2b+2 = 6; range covers it");
    CHECK(last_line(r.out, 1) == "positive: 3,6");
    CHECK(r.out.rfind("params,e_verdict,e_witness_partition,e_witness_coeff,s_verdict,", 0) == 0);
    r = run({"sweep", "--family", "spider:a,2,1", "--range", "a=2..8", "--kind", "e", "--out", "json", "--jobs", "3"});
    CHECK(nlohmann::json::parse(r.out)["positive"] == nlohmann::json::array({"3", "6"}));
}

TEST_CASE("conjecture and verify") {
    auto r = run({"conjecture", "--id", "5.4", "--max-p", "3"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["consistent"] == true);
    r = run({"verify", "--suite", "triple-deletion", "--seed", "7", "--count", "50"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["passed"] == true);
    CHECK(run({"verify", "--suite", "path-closed-form"}).code == 0);
}

TEST_CASE("usage errors") {
    auto r = run({});
    CHECK(r.code == 1);
    CHECK(r.err.find("usage: cslab") != std::string::npos);
    CHECK(run({"csf"}).code == 1);
    CHECK(run({"csf", "--graph", "tree:4"}).code == 1);
    CHECK(run({"csf", "--graph", "claw", "--basis", "q"}).code == 1);
    CHECK(run({"coeff", "--graph", "claw", "--partition", "1,2"}).code == 1);
    CHECK(run({"sweep", "--family", "spider:a,2,1"}).code == 1);
    CHECK(run({"verify", "--suite", "nonsense"}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
}
