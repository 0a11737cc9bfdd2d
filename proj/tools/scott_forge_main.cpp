// scott-forge: command-line frontend for the order-theory toolkit.
// Exit codes: 0 pass/certificate produced, 2 check failed, 3 unknown or
// bound exceeded, 4 invalid input.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "scottforge/certificates.hpp"
#include "scottforge/funcspace.hpp"

namespace sf = scottforge;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 2;
constexpr int kExitUnknown = 3;
constexpr int kExitInvalidInput = 4;

// Flags accept inline JSON or @path-to-file.
json parse_json_arg(const std::string& arg) {
    if (!arg.empty() && arg.front() == '@') {
        std::ifstream in(arg.substr(1));
        if (!in) throw std::invalid_argument("cannot open file: " + arg.substr(1));
        return json::parse(in);
    }
    return json::parse(arg);
}

struct Output {
    bool json_mode = false;

    void report(const json& doc, const std::string& human) const {
        if (json_mode)
            std::cout << sf::canonical_json(doc) << "\n";
        else
            std::cout << human;
    }
};

std::uint64_t default_bound(std::uint64_t fallback) {
    if (const char* env = std::getenv("SCOTT_FORGE_BOUND")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw std::invalid_argument("SCOTT_FORGE_BOUND is not a number");
        }
    }
    return fallback;
}

int run_axioms(std::uint64_t n, std::uint64_t bound, const Output& out) {
    const sf::FinitePoset t = sf::truncate(n, bound);  // constructor re-checks the axioms
    const auto elems = sf::truncation_elements(n);
    bool lattice = true;
    bool sup_agrees = true;
    for (const auto& a : elems)
        for (const auto& b : elems) {
            auto s = sf::FiniteSubset::of(t, {sf::elem_id(a), sf::elem_id(b)});
            auto bs = sf::brute_sup(s);
            auto bi = sf::brute_inf(s);
            if (!bs || !bi) lattice = false;
            const sf::ElemJ symbolic = sf::sup_set({a, b});
            if (!bs || t.id_of(*bs) != sf::elem_id(symbolic)) sup_agrees = false;
        }
    const bool ok = lattice && sup_agrees;
    json doc = {{"n", n},
                {"elements", t.size()},
                {"poset_axioms", "pass"},
                {"lattice", lattice},
                {"symbolic_sup_agrees", sup_agrees},
                {"status", ok ? "pass" : "fail"}};
    std::ostringstream human;
    human << "truncate(" << n << "): " << t.size() << " elements, axioms pass, lattice "
          << (lattice ? "yes" : "NO") << ", symbolic sup agreement "
          << (sup_agrees ? "yes" : "NO") << "\n";
    out.report(doc, human.str());
    return ok ? kExitPass : kExitCheckFailed;
}

int run_normal_form(const std::string& open_arg, const Output& out) {
    const sf::OpenJ o = parse_json_arg(open_arg).get<sf::OpenJ>();
    json doc = {{"canonical", o}};
    bool ok = true;
    if (o.tag() == sf::OpenJ::Tag::VSet) {
        const sf::FnRep rebuilt = sf::reconstruct_fnrep(o);
        ok = rebuilt == o.fn();
        doc["reconstructed"] = rebuilt;
        doc["reconstruction_matches"] = ok;
    }
    doc["status"] = ok ? "pass" : "fail";
    std::ostringstream human;
    human << "canonical form: " << sf::canonical_json(json(o)) << "\n";
    if (o.tag() == sf::OpenJ::Tag::VSet)
        human << "membership reconstruction " << (ok ? "matches" : "DOES NOT match") << "\n";
    out.report(doc, human.str());
    return ok ? kExitPass : kExitCheckFailed;
}

int run_chain_demo(const std::string& f_arg, std::uint64_t steps, const Output& out) {
    const sf::FnRep f = parse_json_arg(f_arg).get<sf::FnRep>();
    const auto report = sf::chain_union_check(f, steps);
    json members = json::array();
    for (std::uint64_t i = 0; i < std::min<std::uint64_t>(steps, 8); ++i)
        members.push_back(sf::gi_chain(f, i));
    json doc = {{"f", f},
                {"steps", report.steps},
                {"increasing", report.increasing},
                {"each_below_union", report.each_below_union},
                {"strict", report.strict},
                {"covers", report.covers},
                {"escape_points", report.escape_points},
                {"witness_map", report.witness_map},
                {"chain_prefix", members},
                {"status", report.ok() ? "pass" : "fail"}};
    std::ostringstream human;
    human << "g_i chain over f = " << sf::canonical_json(json(f)) << ", " << steps
          << " steps\n"
          << "  increasing: " << (report.increasing ? "yes" : "NO") << "\n"
          << "  strict inclusions into the union: " << (report.strict ? "yes" : "NO") << "\n"
          << "  union covered with witness map k -> k+1: " << (report.covers ? "yes" : "NO")
          << "\n";
    out.report(doc, human.str());
    return report.ok() ? kExitPass : kExitCheckFailed;
}

int emit_certificate(const sf::RefutationCertificate& cert, const Output& out) {
    const json doc = cert;
    std::ostringstream human;
    human << "refutation certificate (" << sf::to_string(cert.target) << ")\n"
          << "  chain index: " << cert.chain_index << "\n"
          << "  chain member: " << sf::canonical_json(json(cert.chain_member)) << "\n"
          << "  witness: " << sf::canonical_json(json(cert.witness)) << "\n"
          << "  full certificate: " << sf::canonical_json(doc) << "\n";
    out.report(doc, human.str());
    return kExitPass;
}

int run_bc_failure(const Output& out) {
    const auto report = sf::bc_failure_certificate();
    const json doc = report;
    std::ostringstream human;
    for (const auto& item : report.items)
        human << "item " << item.id << " [" << (item.pass ? "pass" : "FAIL") << "] "
              << item.claim << "\n";
    human << "embedded certificate chain index: " << report.certificate.chain_index << "\n";
    out.report(doc, human.str());
    return report.ok ? kExitPass : kExitCheckFailed;
}

int run_finite_bc(const std::string& x_arg, const std::string& z_arg, const Output& out) {
    const sf::FinitePoset x = sf::load_poset_json(parse_json_arg(x_arg));
    const sf::FinitePoset z = sf::load_poset_json(parse_json_arg(z_arg));
    const auto report = sf::check_bounded_complete_finite(x, z);
    json doc = {{"functions", report.function_count},
                {"exhaustive_subsets", report.exhaustive_subsets},
                {"status", report.ok ? "pass" : "fail"},
                {"detail", report.detail}};
    std::ostringstream human;
    human << "C(x,z): " << report.function_count << " continuous maps, bounded completeness "
          << (report.ok ? "holds" : ("FAILS: " + report.detail)) << "\n";
    out.report(doc, human.str());
    return report.ok ? kExitPass : kExitCheckFailed;
}

int run_oracle(std::uint64_t n, std::uint64_t max_subset, std::uint64_t bound,
               const Output& out) {
    const sf::FinitePoset t = sf::truncate(n, bound);
    const auto elems = sf::truncation_elements(n);
    std::uint64_t checked = 0;
    bool ok = true;
    // All subsets of size <= max_subset, via index combinations.
    std::vector<std::size_t> pick;
    auto run_subset = [&](const std::vector<std::size_t>& idxs) {
        std::vector<sf::ElemJ> members;
        std::vector<std::string> ids;
        for (auto i : idxs) {
            members.push_back(elems[i]);
            ids.push_back(sf::elem_id(elems[i]));
        }
        const auto s = sf::FiniteSubset::of(t, ids);
        const auto bs = sf::brute_sup(s);
        const auto bi = sf::brute_inf(s);
        if (!bs || t.id_of(*bs) != sf::elem_id(sf::sup_set(members))) ok = false;
        if (!bi || t.id_of(*bi) != sf::elem_id(sf::inf_set(members))) ok = false;
        ++checked;
    };
    auto recurse = [&](auto&& self, std::size_t from) -> void {
        run_subset(pick);
        if (pick.size() == max_subset) return;
        for (std::size_t i = from; i < elems.size(); ++i) {
            pick.push_back(i);
            self(self, i + 1);
            pick.pop_back();
        }
    };
    recurse(recurse, 0);
    json doc = {{"n", n},
                {"max_subset", max_subset},
                {"subsets_checked", checked},
                {"status", ok ? "pass" : "fail"}};
    std::ostringstream human;
    human << "oracle on truncate(" << n << "): " << checked << " subsets, sup/inf "
          << (ok ? "all agree" : "DISAGREE") << "\n";
    out.report(doc, human.str());
    return ok ? kExitPass : kExitCheckFailed;
}

int run_validate(const std::string& cert_arg, const Output& out) {
    std::ifstream in(cert_arg);
    json doc;
    if (in) {
        doc = json::parse(in);
    } else {
        doc = parse_json_arg(cert_arg);
    }
    const auto report = sf::validate(doc);
    json result = {{"status", report.ok ? "pass" : "fail"}, {"detail", report.describe()}};
    if (report.failed_index) result["failed_evaluation"] = *report.failed_index;
    out.report(result, report.describe() + "\n");
    return report.ok ? kExitPass : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"scott-forge: symbolic order-theory toolkit and refutation certificates"};
    app.require_subcommand(1);

    Output out;
    app.add_flag("--json", out.json_mode, "emit canonical JSON instead of human-readable text");
    std::optional<std::uint64_t> bound_flag;
    app.add_option("--bound", bound_flag, "override search/enumeration bounds");

    auto* axioms = app.add_subcommand("axioms", "truncation lattice-law suite");
    std::uint64_t ax_n = 3;
    axioms->add_option("--n", ax_n, "truncation size");

    auto* normal_form = app.add_subcommand("normal-form", "canonicalize and reconstruct an open");
    std::string nf_open;
    normal_form->add_option("--open", nf_open, "OpenJ as inline JSON or @file")->required();

    auto* chain_demo = app.add_subcommand("chain-demo", "g_i chain and union report");
    std::string cd_f = R"({"start":0,"prefix":[],"tail":0})";
    std::uint64_t cd_steps = 8;
    chain_demo->add_option("--f", cd_f, "base FnRep as inline JSON or @file");
    chain_demo->add_option("--steps", cd_steps, "chain prefix length to verify");

    auto* refute_box = app.add_subcommand("refute-box", "refute u x v subset of E");
    std::string rb_u = R"({"tag":"vset","start":0,"prefix":[],"tail":0})";
    std::string rb_v = R"({"generators":[[{"tag":"pair","i":0,"j":0}]]})";
    refute_box->add_option("--u", rb_u, "OpenJ as inline JSON or @file");
    refute_box->add_option("--v", rb_v, "PointwiseOpenX2 as inline JSON or @file");

    auto* sup_disc = app.add_subcommand("sup-discontinuity",
                                        "refute d1 x d2 subset of sup2^{-1}(E)");
    std::string sd_d1 =
        R"({"boxes":[{"u":{"tag":"vset","start":0,"prefix":[],"tail":0},"v":{"generators":[[]]}}]})";
    std::string sd_d2 =
        R"({"boxes":[{"u":{"tag":"full"},"v":{"generators":[[{"tag":"pair","i":0,"j":0}]]}}]})";
    sup_disc->add_option("--d1", sd_d1, "ProductOpenZ as inline JSON or @file");
    sup_disc->add_option("--d2", sd_d2, "ProductOpenZ as inline JSON or @file");

    auto* bc = app.add_subcommand("bc-failure", "bounded-completeness failure report");

    auto* finite_bc = app.add_subcommand("finite-bc", "finite bounded-completeness check");
    std::string fb_x, fb_z;
    finite_bc->add_option("--x", fb_x, "domain poset JSON or @file")->required();
    finite_bc->add_option("--z", fb_z, "codomain poset JSON or @file")->required();

    auto* oracle = app.add_subcommand("oracle", "cross-check symbolic sup/inf vs brute force");
    std::uint64_t or_n = 2;
    std::uint64_t or_max_subset = 3;
    oracle->add_option("--n", or_n, "truncation size");
    oracle->add_option("--max-subset", or_max_subset, "maximum subset size");

    auto* validate_cmd = app.add_subcommand("validate", "replay a certificate");
    std::string va_cert;
    validate_cmd->add_option("cert", va_cert, "certificate file or inline JSON")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitInvalidInput;
    }

    try {
        const std::uint64_t bound = bound_flag ? *bound_flag : default_bound(6);
        if (*axioms) return run_axioms(ax_n, bound, out);
        if (*normal_form) return run_normal_form(nf_open, out);
        if (*chain_demo) return run_chain_demo(cd_f, cd_steps, out);
        if (*refute_box)
            return emit_certificate(
                sf::refute_e_box(parse_json_arg(rb_u).get<sf::OpenJ>(),
                                 parse_json_arg(rb_v).get<sf::PointwiseOpenX2>()),
                out);
        if (*sup_disc)
            return emit_certificate(
                sf::refute_sup2_box(parse_json_arg(sd_d1).get<sf::ProductOpenZ>(),
                                    parse_json_arg(sd_d2).get<sf::ProductOpenZ>()),
                out);
        if (*bc) return run_bc_failure(out);
        if (*finite_bc) return run_finite_bc(fb_x, fb_z, out);
        if (*oracle) return run_oracle(or_n, or_max_subset, bound, out);
        if (*validate_cmd) return run_validate(va_cert, out);
        std::cerr << "no subcommand given\n";
        return kExitInvalidInput;
    } catch (const sf::bound_exceeded& e) {
        std::cerr << "bound exceeded: " << e.what() << "\n";
        return kExitUnknown;
    } catch (const sf::absorbing_index_not_found& e) {
        std::cerr << "unknown: " << e.what() << "\n";
        return kExitUnknown;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::domain_error& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
}
