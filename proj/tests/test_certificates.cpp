#include <doctest.h>

#include "helpers.hpp"
#include "scottforge/certificates.hpp"

using namespace scottforge;

namespace {

ElemJ pr(std::uint64_t i, std::uint64_t j) { return ElemJ::pair(i, j); }

nlohmann::json good_e_cert() {
    return refute_e_box(OpenJ::vset(FnRep::constant_zero()),
                        PointwiseOpenX2::of({{pr(0, 0)}}));
}

nlohmann::json good_sup_cert() {
    const ProductOpenZ d1{{BoxZ{OpenJ::vset(FnRep::constant_zero()),
                                PointwiseOpenX2::of({{}})}}};
    const ProductOpenZ d2{{BoxZ{OpenJ::full(), PointwiseOpenX2::of({{pr(0, 0)}})}}};
    return refute_sup2_box(d1, d2);
}

}  // namespace

TEST_CASE("canonical JSON has sorted keys and no whitespace") {
    nlohmann::json doc;
    doc["zeta"] = 1;
    doc["alpha"] = nlohmann::json{{"b", 2}, {"a", 1}};
    CHECK(canonical_json(doc) == R"({"alpha":{"a":1,"b":2},"zeta":1})");
    CHECK(canonical_json(nlohmann::json(ElemJ::pair(0, NatOrOmega::omega()))) ==
          R"({"i":0,"j":"omega","tag":"pair"})");
    // byte-stable across repeated serialization
    const nlohmann::json cert = good_e_cert();
    CHECK(canonical_json(cert) == canonical_json(nlohmann::json::parse(canonical_json(cert))));
}

TEST_CASE("the check whitelist is closed") {
    for (const char* name : {"leq1", "vf_contains", "subset", "e_contains", "leqZ",
                             "pointwise_contains", "sup2_eval_agrees"})
        CHECK(is_whitelisted_check(name));
    CHECK_FALSE(is_whitelisted_check("system"));
    CHECK_FALSE(is_whitelisted_check("vf_contains "));
    CHECK_FALSE(is_whitelisted_check(""));
}

TEST_CASE("replay dispatches whitelisted primitives only") {
    const OpenJ v0 = OpenJ::vset(FnRep::constant_zero());
    CHECK(replay_evaluation({"leq1", nlohmann::json::array({ElemJ::bot(), pr(0, 0)}), true}));
    CHECK(replay_evaluation({"vf_contains", nlohmann::json::array({v0, pr(0, 0)}), true}));
    CHECK_FALSE(replay_evaluation({"subset", nlohmann::json::array({v0, OpenJ::empty()}), true}));
    CHECK_FALSE(replay_evaluation(
        {"e_contains", nlohmann::json::array({ElemZ::of(pr(1, 0), gi_chain(FnRep::constant_zero(), 1))}),
         false}));
    CHECK(replay_evaluation({"leqZ", nlohmann::json::array({ElemZ::bottom(), ElemZ::top()}), true}));
    CHECK(replay_evaluation(
        {"pointwise_contains",
         nlohmann::json::array({PointwiseOpenX2::of({{pr(0, 0)}}), v0}), true}));
    CHECK(replay_evaluation(
        {"sup2_eval_agrees",
         nlohmann::json::array({ElemZ::of(pr(1, 0), OpenJ::empty()),
                                ElemZ::of(ElemJ::bot(), v0), ElemZ::of(pr(1, 0), v0)}),
         true}));

    CHECK_THROWS_AS(replay_evaluation({"rm_rf", nlohmann::json::array(), true}),
                    std::invalid_argument);
    CHECK_THROWS_AS(replay_evaluation({"leq1", nlohmann::json::array({ElemJ::bot()}), true}),
                    std::invalid_argument);
    CHECK_THROWS_AS(replay_evaluation({"e_contains", nlohmann::json::object(), false}),
                    std::invalid_argument);
}

TEST_CASE("well-formed certificates validate") {
    CHECK(validate(good_e_cert()).ok);
    CHECK(validate(good_sup_cert()).ok);
    CHECK(validate(good_e_cert()).describe() == "certificate valid");
}

TEST_CASE("version and shape are enforced before anything is replayed") {
    CHECK_FALSE(validate(nlohmann::json::array()).ok);
    CHECK_FALSE(validate(nlohmann::json::object()).ok);

    nlohmann::json wrong_version = good_e_cert();
    wrong_version["version"] = 2;
    const auto report = validate(wrong_version);
    CHECK_FALSE(report.ok);
    CHECK(report.error.find("version") != std::string::npos);

    nlohmann::json missing_field = good_e_cert();
    missing_field.erase("witness");
    CHECK_FALSE(validate(missing_field).ok);
}

TEST_CASE("non-whitelisted and missing core checks are rejected") {
    nlohmann::json rogue = good_e_cert();
    rogue["evaluations"].push_back(
        {{"check", "shell_exec"}, {"args", nlohmann::json::array()}, {"result", true}});
    const auto rogue_report = validate(rogue);
    CHECK_FALSE(rogue_report.ok);
    CHECK(rogue_report.error.find("whitelisted") != std::string::npos);

    nlohmann::json gutted = good_e_cert();
    nlohmann::json kept = nlohmann::json::array();
    for (const auto& e : gutted["evaluations"])
        if (e["check"] != "pointwise_contains") kept.push_back(e);
    gutted["evaluations"] = kept;
    const auto gutted_report = validate(gutted);
    CHECK_FALSE(gutted_report.ok);
    CHECK(gutted_report.error.find("pointwise_contains") != std::string::npos);
}

TEST_CASE("the chain member is re-derived, not trusted") {
    nlohmann::json doc = good_e_cert();
    doc["chain_index"] = 7;  // member no longer matches
    const auto report = validate(doc);
    CHECK_FALSE(report.ok);
    CHECK(report.error.find("chain_member") != std::string::npos);

    nlohmann::json member = good_e_cert();
    member["chain_member"]["tail"] = 9;
    CHECK_FALSE(validate(member).ok);
}

TEST_CASE("a flipped evaluation result is caught at its index") {
    nlohmann::json doc = good_e_cert();
    doc["evaluations"][2]["result"] = true;  // claims the witness is in E
    const auto report = validate(doc);
    CHECK_FALSE(report.ok);
    REQUIRE(report.failed_index);
    CHECK(*report.failed_index == 2);
    CHECK(report.failed_check == "e_contains");
}

TEST_CASE("every single-field mutation of a valid certificate fails") {
    const nlohmann::json base = good_sup_cert();
    REQUIRE(validate(base).ok);

    auto mutated = [&](auto&& tweak) {
        nlohmann::json doc = base;
        tweak(doc);
        return validate(doc).ok;
    };
    CHECK_FALSE(mutated([](nlohmann::json& d) { d["witness"]["first"]["i"] = 9; }));
    CHECK_FALSE(mutated([](nlohmann::json& d) { d["witness"]["second"]["tag"] = "full"; }));
    CHECK_FALSE(mutated([](nlohmann::json& d) { d["chain_index"] = 0; }));
    CHECK_FALSE(mutated([](nlohmann::json& d) { d["chain_member"]["prefix"] = {5}; }));
    CHECK_FALSE(mutated([](nlohmann::json& d) { d["base_fn"]["tail"] = 3; }));
    CHECK_FALSE(mutated([](nlohmann::json& d) { d["box"]["u"]["tail"] = 4; }));
    CHECK_FALSE(mutated([](nlohmann::json& d) {
        d["box"]["v"]["generators"] = {{nlohmann::json(ElemJ::top())}};
    }));
    CHECK_FALSE(mutated([](nlohmann::json& d) { d["target"] = "E-not-product-open"; }));
    CHECK_FALSE(mutated([](nlohmann::json& d) { d["version"] = 0; }));
    CHECK_FALSE(mutated([](nlohmann::json& d) {
        d["evaluations"][3]["args"][2]["first"]["i"] = 2;
    }));
}

TEST_CASE("the target is tied to the sup2 agreement evaluation") {
    // E-membership certificates must not smuggle in a sup evaluation...
    nlohmann::json e_doc = good_sup_cert();
    e_doc["target"] = "E-not-product-open";
    CHECK_FALSE(validate(e_doc).ok);

    // ...and discontinuity certificates must carry one.
    nlohmann::json sup_doc = good_e_cert();
    sup_doc["target"] = "sup-discontinuous";
    const auto report = validate(sup_doc);
    CHECK_FALSE(report.ok);
    CHECK(report.error.find("sup2_eval_agrees") != std::string::npos);
}
