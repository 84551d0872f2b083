#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "loopforge/theorems.hpp"

using namespace loopforge;
using namespace loopforge::testing;

namespace {

ScanScope scope_to(int max_order, int threads = 1) {
    ScanScope sc;
    sc.max_order = max_order;
    sc.threads = threads;
    return sc;
}

}  // namespace

TEST_CASE("registry") {
    auto claims = registered_claims();
    CHECK(claims.size() >= 25);
    for (const char* id : {"lem2.1", "lem2.2", "lem2.3", "thm3.1a", "thm3.1b", "cor3.1", "thm3.2",
                           "lem3.2", "cor3.2", "cor3.3", "lem3.3", "lem3.4", "lem3.4c", "cor3.5",
                           "rem3.2", "cor3.6", "lem3.5", "thm3.3", "rem3.3", "thm3.4", "thm3.5",
                           "cor3.7", "lem3.6", "sec4.wip", "sec4.cip"})
        CHECK(is_registered_claim(id));
    CHECK_FALSE(is_registered_claim("thm9.9"));
    CHECK_THROWS_AS(verify("thm9.9", scope_to(3)), UnknownClaim);
}

TEST_CASE("classical lemmas confirm exhaustively at order <= 5") {
    for (const char* id : {"lem2.2", "lem2.3", "lem3.5", "sec4.wip", "sec4.cip"}) {
        auto rep = verify(id, scope_to(5));
        CHECK(rep.status == VerifyStatus::confirmed_exhaustive);
        CHECK(rep.violations == 0);
        CHECK(rep.instances_checked > 0);
    }
}

TEST_CASE("thm3.1a confirms and is non-vacuous from order 1 up") {
    auto rep = verify("thm3.1a", scope_to(5));
    CHECK(rep.status == VerifyStatus::confirmed_exhaustive);
    CHECK(rep.violations == 0);
    // the three Z3 witnesses make order 3 non-vacuous
    CHECK(rep.details.at("hyp_order_3") == 3);
    CHECK(rep.details.at("hyp_order_4") == 4);
    CHECK(rep.instances_checked >= 9);
    // t2 == t3 never diverged anywhere in the scan
    CHECK_FALSE(rep.details.contains("t2_ne_t3_divergences"));
}

TEST_CASE("thm3.2 finds the Z3 isomorphism") {
    auto rep = verify("thm3.2", scope_to(3));
    CHECK(rep.status == VerifyStatus::confirmed_exhaustive);
    CHECK(rep.instances_checked == 5);  // (0,0),(1,1),(2,2) on Z3; (e,e) at orders 1, 2
    CHECK(rep.violations == 0);
}

TEST_CASE("scan results are independent of the thread count") {
    auto a = verify("thm3.1a", scope_to(5, 1));
    auto b = verify("thm3.1a", scope_to(5, 4));
    CHECK(a.to_json() == b.to_json());

    auto c = verify("lem3.4", scope_to(4, 1));
    auto d = verify("lem3.4", scope_to(4, 3));
    CHECK(c.to_json() == d.to_json());
}

TEST_CASE("lem3.4 emits the hypothesis-survival pipeline") {
    auto rep = verify("lem3.4", scope_to(4));
    CHECK(rep.status == VerifyStatus::confirmed_exhaustive);
    bool saw_stage = false;
    for (const auto& [name, count] : rep.stages) {
        if (name == "form1_T") {
            saw_stage = true;
            CHECK(count > 0);
        }
    }
    CHECK(saw_stage);

    for (const char* id : {"lem3.4a", "lem3.4b", "lem3.4c", "lem3.4d", "lem3.4e"}) {
        auto sub = verify(id, scope_to(4));
        CHECK(sub.status == VerifyStatus::confirmed_exhaustive);
        CHECK(sub.violations == 0);
    }
}

TEST_CASE("thm3.3 as literally stated is refuted at order 6") {
    // Under its stated hypothesis (no T condition) the nonabelian group of
    // order 6 provides counterexamples: the isotopes of a group are all
    // isomorphic to it, so the hypothesis holds while g stays non-central.
    auto small = verify("thm3.3", scope_to(5));
    CHECK(small.status == VerifyStatus::confirmed_exhaustive);

    auto rep = verify("thm3.3", scope_to(6, 4));
    CHECK(rep.status == VerifyStatus::counterexample);
    CHECK(rep.violations > 0);
    REQUIRE(!rep.witnesses.empty());
    CHECK(recheck_witness("thm3.3", rep.witnesses.front()));
}

TEST_CASE("thm3.4 replay confirms while the unpaired reading fails") {
    auto rep = verify("thm3.4", scope_to(5));
    CHECK(rep.status == VerifyStatus::confirmed_exhaustive);
    CHECK(rep.violations == 0);
    CHECK(rep.details.at("unpaired_premises").get<long>() > 0);
    CHECK(rep.details.at("unpaired_disjunction_failures").get<long>() > 0);
}

TEST_CASE("lem3.2 measures the literal fourth identity of group (2)") {
    auto rep = verify("lem3.2", scope_to(5));
    CHECK(rep.status == VerifyStatus::confirmed_exhaustive);
    CHECK(rep.violations == 0);
    // the raw-L_f reading fails on most WIP pairs; the derived form passes
    CHECK(rep.details.at("literal_group2_fourth_identity_failures").get<long>() > 0);
}

TEST_CASE("isomorphic-pair claims confirm at order <= 5") {
    for (const char* id : {"thm3.5", "cor3.7", "lem3.6", "cor3.1", "cor3.2", "cor3.3", "thm3.1b",
                           "lem3.3", "cor3.5", "rem3.2", "cor3.6", "rem3.3", "lem2.1"}) {
        auto rep = verify(id, scope_to(5));
        CHECK(rep.violations == 0);
        CHECK((rep.status == VerifyStatus::confirmed_exhaustive ||
               rep.status == VerifyStatus::confirmed_sampled));
        CHECK(rep.instances_checked > 0);
    }
}

TEST_CASE("vacuous scans are labeled loudly, not confirmed") {
    ScanScope sc;
    sc.min_order = 2;
    sc.max_order = 2;
    // at order 2 the only loop is Z2, which is WIP; thm3.3's hypothesis holds;
    // instead make the scope empty to exercise the status path
    sc.min_order = 3;
    sc.max_order = 2;
    auto rep = verify("thm3.1a", sc);
    CHECK(rep.status == VerifyStatus::vacuous);
    CHECK(rep.instances_seen == 0);
    auto table = rep.to_table();
    CHECK(table.find("NOT a confirmation") != std::string::npos);
}

TEST_CASE("find_counterexample") {
    // a classical lemma yields nothing
    CHECK_FALSE(find_counterexample("lem2.2", 60, 7).has_value());

    // budget 0 tries nothing
    CHECK_FALSE(find_counterexample("thm3.3", 0, 1).has_value());

    // determinism for fixed (claim, budget, seed)
    auto a = find_counterexample("thm3.3", 400, 11);
    auto b = find_counterexample("thm3.3", 400, 11);
    CHECK(a.has_value() == b.has_value());
    if (a) {
        CHECK(*a == *b);
        CHECK(recheck_witness("thm3.3", *a));
    }
}

TEST_CASE("witnesses re-verify and reports serialize") {
    auto rep = verify("thm3.3", scope_to(6, 4));
    REQUIRE(rep.status == VerifyStatus::counterexample);
    for (const auto& w : rep.witnesses) CHECK(recheck_witness("thm3.3", w));

    auto j = rep.to_json();
    CHECK(j.at("claim") == "thm3.3");
    CHECK(j.at("status") == "counterexample");
    CHECK(j.at("witnesses").is_array());
    CHECK(rep.to_table().find("counterexample") != std::string::npos);
}

TEST_CASE("reports are deterministic") {
    auto a = verify("cor3.6", scope_to(4));
    auto b = verify("cor3.6", scope_to(4));
    CHECK(a.to_json() == b.to_json());
}
