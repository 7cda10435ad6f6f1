#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "unirat/identities.hpp"

using namespace unirat;
using namespace unirat::identities;

TEST_CASE("the full identity suite passes with zero witnesses") {
    auto reports = verify_all();
    std::set<std::string> ids;
    for (const auto& r : reports) {
        INFO(r.id << " witness: " << r.witness);
        CHECK(r.ok);
        CHECK(r.witness == "0");
        ids.insert(r.id);
    }
    for (const char* expected :
         {"I(1)", "I(2)", "I(3)", "II:g-fixes-b2", "II:g-fixes-w1", "II:g-fixes-lam1", "VIII",
          "IX", "X(2)", "X(3)", "lem3(2):a2^2-b2", "lem3(2):a2^2-b2^3", "**(2)", "**(3)",
          "XI(2)", "XI(3)", "XII", "XIII", "XIV", "H-equiv", "not-square"})
        CHECK(ids.count(expected) == 1);
}

TEST_CASE("the two forms of the H polynomial agree with epsilon = +1") {
    int eps = 0;
    auto rep = check_H_forms(&eps);
    CHECK(rep.ok);
    CHECK(eps == 1);
}

TEST_CASE("perturbed claims are detected") {
    auto reports = mutation_suite();
    CHECK(reports.size() >= 12);
    for (const auto& r : reports) {
        INFO(r.id);
        CHECK(r.ok);
    }
}

TEST_CASE("verdicts are deterministic") {
    auto a = verify_all();
    auto b = verify_all();
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].id == b[i].id);
        CHECK(a[i].ok == b[i].ok);
        CHECK(a[i].witness == b[i].witness);
    }
}

TEST_CASE("valuation details of the non-square certificate") {
    auto rep = check_not_square();
    CHECK(rep.ok);
    CHECK(rep.note.find("val_b3(num)=0") != std::string::npos);
    CHECK(rep.note.find("val_b3(den)=1") != std::string::npos);
}
