#include "scottforge/certificates.hpp"

#include <array>
#include <algorithm>
#include <stdexcept>

namespace scottforge {

std::string canonical_json(const nlohmann::json& value) {
    // nlohmann::json objects keep keys sorted; dump() emits no whitespace.
    return value.dump();
}

std::string ValidationReport::describe() const {
    if (ok) return "certificate valid";
    if (failed_index)
        return "evaluation " + std::to_string(*failed_index) + " (" + failed_check +
               ") does not replay";
    return error;
}

namespace {
constexpr std::array kWhitelist = {
    "leq1", "vf_contains", "subset", "e_contains", "leqZ", "pointwise_contains",
    "sup2_eval_agrees",
};
}

bool is_whitelisted_check(const std::string& name) {
    return std::find(kWhitelist.begin(), kWhitelist.end(), name) != kWhitelist.end();
}

bool replay_evaluation(const Evaluation& e) {
    const auto& a = e.args;
    auto expect_arity = [&](std::size_t n) {
        if (!a.is_array() || a.size() != n)
            throw std::invalid_argument("evaluation " + e.check + " expects " +
                                        std::to_string(n) + " arguments");
    };
    if (e.check == "leq1") {
        expect_arity(2);
        return leq1(a[0].get<ElemJ>(), a[1].get<ElemJ>());
    }
    if (e.check == "vf_contains") {
        expect_arity(2);
        return vf_contains(a[0].get<OpenJ>(), a[1].get<ElemJ>());
    }
    if (e.check == "subset") {
        expect_arity(2);
        return subset(a[0].get<OpenJ>(), a[1].get<OpenJ>());
    }
    if (e.check == "e_contains") {
        expect_arity(1);
        return e_contains(a[0].get<ElemZ>());
    }
    if (e.check == "leqZ") {
        expect_arity(2);
        return leqZ(a[0].get<ElemZ>(), a[1].get<ElemZ>());
    }
    if (e.check == "pointwise_contains") {
        expect_arity(2);
        return pointwise_contains(a[0].get<PointwiseOpenX2>(), a[1].get<OpenJ>());
    }
    if (e.check == "sup2_eval_agrees") {
        expect_arity(3);
        return sup2(a[0].get<ElemZ>(), a[1].get<ElemZ>()) == a[2].get<ElemZ>();
    }
    throw std::invalid_argument("check name not whitelisted: " + e.check);
}

ValidationReport validate(const nlohmann::json& cert_doc) {
    ValidationReport report;
    RefutationCertificate cert;
    try {
        if (!cert_doc.is_object() || cert_doc.value("version", 0) != 1) {
            report.error = "schema violation: missing or unsupported version";
            return report;
        }
        cert = cert_doc.get<RefutationCertificate>();
    } catch (const std::exception& ex) {
        report.error = std::string("parse error: ") + ex.what();
        return report;
    }

    for (const auto& e : cert.evaluations)
        if (!is_whitelisted_check(e.check)) {
            report.error = "security error: check name not whitelisted: " + e.check;
            return report;
        }

    // A certificate must at least carry the three core checks.
    for (const char* required : {"vf_contains", "pointwise_contains", "e_contains"}) {
        const bool present = std::any_of(cert.evaluations.begin(), cert.evaluations.end(),
                                         [&](const Evaluation& e) { return e.check == required; });
        if (!present) {
            report.error = std::string("schema violation: missing core check ") + required;
            return report;
        }
    }

    try {
        if (!(gi_chain(cert.base_fn, cert.chain_index) == cert.chain_member)) {
            report.error = "chain_member does not match gi_chain(base_fn, chain_index)";
            return report;
        }
    } catch (const std::exception& ex) {
        report.error = std::string("chain re-derivation failed: ") + ex.what();
        return report;
    }

    for (std::size_t i = 0; i < cert.evaluations.size(); ++i) {
        const auto& e = cert.evaluations[i];
        bool replayed;
        try {
            replayed = replay_evaluation(e);
        } catch (const std::exception& ex) {
            report.error = std::string("replay error: ") + ex.what();
            report.failed_index = i;
            report.failed_check = e.check;
            return report;
        }
        if (replayed != e.result) {
            report.failed_index = i;
            report.failed_check = e.check;
            return report;
        }
    }

    // Tie the top-level fields to the recorded checks, so mutating a field
    // without rewriting the matching evaluation is caught as well.
    auto find_eval = [&](const std::string& name) -> const Evaluation* {
        for (const auto& e : cert.evaluations)
            if (e.check == name) return &e;
        return nullptr;
    };
    auto fail_consistency = [&](const std::string& name, std::size_t index) {
        report.failed_check = name;
        report.failed_index = index;
        report.error = "evaluation " + name + " is inconsistent with the certificate fields";
        return report;
    };
    const Evaluation* ec = find_eval("e_contains");
    if (ec->result != false || !(ec->args[0].get<ElemZ>() == cert.witness) ||
        !(ec->args[0].get<ElemZ>().second == cert.chain_member))
        return fail_consistency("e_contains",
                                static_cast<std::size_t>(ec - cert.evaluations.data()));
    const Evaluation* vc = find_eval("vf_contains");
    if (vc->result != true || !(vc->args[0].get<OpenJ>() == cert.box_u) ||
        !(vc->args[1].get<ElemJ>() == cert.witness.first))
        return fail_consistency("vf_contains",
                                static_cast<std::size_t>(vc - cert.evaluations.data()));
    const Evaluation* pc = find_eval("pointwise_contains");
    if (pc->result != true || !(pc->args[0].get<PointwiseOpenX2>() == cert.box_v) ||
        !(pc->args[1].get<OpenJ>() == cert.chain_member))
        return fail_consistency("pointwise_contains",
                                static_cast<std::size_t>(pc - cert.evaluations.data()));

    // Supremum-discontinuity certificates carry the sup agreement check and
    // its witness pair must recombine to the stored witness.
    const Evaluation* sup = find_eval("sup2_eval_agrees");
    if (cert.target == RefutationTarget::ENotProductOpen && sup != nullptr) {
        report.error = "target E-not-product-open must not carry a sup2 evaluation";
        return report;
    }
    if (cert.target != RefutationTarget::ENotProductOpen) {
        if (sup == nullptr) {
            report.error = "schema violation: missing core check sup2_eval_agrees";
            return report;
        }
        if (sup->result != true || !(sup->args[2].get<ElemZ>() == cert.witness))
            return fail_consistency("sup2_eval_agrees",
                                    static_cast<std::size_t>(sup - cert.evaluations.data()));
    }

    report.ok = true;
    return report;
}

}  // namespace scottforge
