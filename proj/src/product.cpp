#include "scottforge/product.hpp"

#include <algorithm>
#include <stdexcept>

namespace scottforge {

bool leqZ(const ElemZ& a, const ElemZ& b) {
    return leq1(a.first, b.first) && subset(a.second, b.second);
}

ElemZ sup2(const ElemZ& a, const ElemZ& b) {
    const ElemJ firsts[] = {a.first, b.first};
    return ElemZ::of(sup_set(std::span<const ElemJ>(firsts)), open_union(a.second, b.second));
}

bool e_contains(const ElemZ& z) { return vf_contains(z.second, z.first); }

bool pointwise_contains(const PointwiseOpenX2& v, const OpenJ& o) {
    for (const auto& generator : v.generators) {
        bool all_in = true;
        for (const auto& x : generator)
            if (!vf_contains(o, x)) {
                all_in = false;
                break;
            }
        if (all_in) return true;
    }
    return false;
}

namespace {

// Index at which a bot-free generator is guaranteed to be absorbed:
// g_i(m) = 0 below i, so every pair of F with column < i is in V_{g_i}.
std::uint64_t guaranteed_index(const std::vector<ElemJ>& generator) {
    std::uint64_t bound = 0;
    for (const auto& x : generator)
        if (x.tag == ElemJ::Tag::Pair) bound = std::max(bound, x.i + 1);
    return bound;
}

bool generator_has_bot(const std::vector<ElemJ>& generator) {
    return std::any_of(generator.begin(), generator.end(),
                       [](const ElemJ& x) { return x.tag == ElemJ::Tag::Bot; });
}

}  // namespace

std::uint64_t find_absorbing_index(const FnRep& f, const PointwiseOpenX2& v) {
    bool have_bound = false;
    std::uint64_t bound = 0;
    for (const auto& generator : v.generators) {
        if (generator_has_bot(generator)) continue;
        const std::uint64_t g = guaranteed_index(generator);
        bound = have_bound ? std::min(bound, g) : g;
        have_bound = true;
    }
    if (!have_bound)
        throw absorbing_index_not_found(
            "every generator contains bot; no chain member can be absorbed");
    for (std::uint64_t i = 0; i <= bound; ++i)
        if (pointwise_contains(v, gi_chain(f, i))) return i;
    throw absorbing_index_not_found("internal: guaranteed index was not absorbing");
}

AbsorbResult find_absorbing_index_oracle(const FnRep& f,
                                         const std::function<bool(const OpenJ&)>& member,
                                         std::uint64_t bound) {
    for (std::uint64_t i = 0; i <= bound; ++i)
        if (member(gi_chain(f, i))) return {AbsorbResult::Status::Found, i};
    // The union of the chain is V_{constant zero}; if the oracle rejects it too,
    // no larger index can succeed for an upward-closed family.
    if (!member(OpenJ::vset(FnRep::constant_zero())))
        return {AbsorbResult::Status::NotFound, 0};
    return {AbsorbResult::Status::BoundExceeded, bound};
}

bool product_open_contains(const ProductOpenZ& d, const ElemZ& z) {
    for (const auto& box : d.boxes)
        if (vf_contains(box.u, z.first) && pointwise_contains(box.v, z.second)) return true;
    return false;
}

std::string to_string(RefutationTarget t) {
    switch (t) {
        case RefutationTarget::ENotProductOpen:
            return "E-not-product-open";
        case RefutationTarget::SupDiscontinuous:
            return "sup-discontinuous";
        case RefutationTarget::BcFailure:
            return "bc-failure";
    }
    throw std::logic_error("bad refutation target");
}

RefutationTarget refutation_target_from_string(const std::string& s) {
    if (s == "E-not-product-open") return RefutationTarget::ENotProductOpen;
    if (s == "sup-discontinuous") return RefutationTarget::SupDiscontinuous;
    if (s == "bc-failure") return RefutationTarget::BcFailure;
    throw std::invalid_argument("bad refutation target: " + s);
}

namespace {

Evaluation record(std::string check, nlohmann::json args, bool result) {
    return Evaluation{std::move(check), std::move(args), result};
}

FnRep witness_function(const OpenJ& u) {
    // Full is handled as the constant-zero function: the refutation only needs
    // a point of u escaping the chain member, and (i, f(i)) works either way.
    if (u.tag() == OpenJ::Tag::Full) return FnRep::constant_zero();
    if (u.tag() == OpenJ::Tag::VSet && u.fn().start() == 0) return u.fn();
    throw std::invalid_argument("refute_e_box: u must be Full or a VSet starting at column 0");
}

}  // namespace

RefutationCertificate refute_e_box(const OpenJ& u, const PointwiseOpenX2& v) {
    if (!vf_contains(u, ElemJ::pair(0, std::uint64_t{0})))
        throw std::invalid_argument("refute_e_box: u must contain (0,0)");
    if (!pointwise_contains(v, OpenJ::vset(FnRep::constant_zero())))
        throw std::invalid_argument("refute_e_box: v must contain V of the constant zero function");
    const FnRep f = witness_function(u);
    const std::uint64_t index = find_absorbing_index(f, v);
    const OpenJ member = gi_chain(f, index);
    const ElemZ witness = ElemZ::of(ElemJ::pair(index, f.eval(index)), member);

    RefutationCertificate cert;
    cert.target = RefutationTarget::ENotProductOpen;
    cert.box_u = u;
    cert.box_v = v;
    cert.base_fn = f;
    cert.chain_index = index;
    cert.chain_member = member;
    cert.witness = witness;
    cert.evaluations.push_back(
        record("vf_contains", nlohmann::json::array({u, witness.first}), true));
    cert.evaluations.push_back(
        record("pointwise_contains", nlohmann::json::array({v, member}), true));
    cert.evaluations.push_back(record("e_contains", nlohmann::json::array({witness}), false));
    return cert;
}

std::pair<OpenJ, PointwiseOpenX2> slice_opens(const ProductOpenZ& d1, const ProductOpenZ& d2) {
    const ElemZ p1 = ElemZ::of(ElemJ::pair(0, std::uint64_t{0}), OpenJ::empty());
    const ElemZ p2 = ElemZ::of(ElemJ::bot(), OpenJ::vset(FnRep::constant_zero()));
    if (!product_open_contains(d1, p1))
        throw std::invalid_argument("slice_opens: d1 must contain ((0,0), empty)");
    if (!product_open_contains(d2, p2))
        throw std::invalid_argument("slice_opens: d2 must contain (bot, V of constant zero)");

    // Empty is in v exactly when v has a vacuous generator; bot is in u exactly
    // when u is Full. Both are decidable, so the slices are exact.
    OpenJ e1 = OpenJ::empty();
    for (const auto& box : d1.boxes) {
        const bool vacuous = std::any_of(box.v.generators.begin(), box.v.generators.end(),
                                         [](const auto& g) { return g.empty(); });
        if (vacuous) e1 = open_union(e1, box.u);
    }
    PointwiseOpenX2 e2;
    for (const auto& box : d2.boxes)
        if (box.u.tag() == OpenJ::Tag::Full)
            for (const auto& g : box.v.generators) e2.generators.push_back(g);
    return {e1, e2};
}

RefutationCertificate refute_sup2_box(const ProductOpenZ& d1, const ProductOpenZ& d2) {
    auto [e1, e2] = slice_opens(d1, d2);
    RefutationCertificate cert = refute_e_box(e1, e2);
    cert.target = RefutationTarget::SupDiscontinuous;
    const ElemZ left = ElemZ::of(cert.witness.first, OpenJ::empty());
    const ElemZ right = ElemZ::of(ElemJ::bot(), cert.chain_member);
    cert.evaluations.push_back(record(
        "sup2_eval_agrees", nlohmann::json::array({left, right, cert.witness}), true));
    return cert;
}

EFiniteReport check_e_scott_open_finite(std::uint64_t n, std::uint64_t max_n) {
    if (n > max_n)
        throw bound_exceeded("check_e_scott_open_finite: n = " + std::to_string(n) +
                             " exceeds bound " + std::to_string(max_n));
    const FinitePoset carrier = truncate(n);
    const auto opens = scott_opens_finite(carrier, carrier.size());

    // Upper-set lattice of the truncation under inclusion, with positional ids.
    auto open_id = [](std::size_t k) {
        std::string digits = std::to_string(k);
        return "O" + std::string(6 - std::min<std::size_t>(6, digits.size()), '0') + digits;
    };
    std::vector<std::string> open_ids;
    for (std::size_t k = 0; k < opens.size(); ++k) open_ids.push_back(open_id(k));
    std::vector<std::pair<std::string, std::string>> incl;
    for (std::size_t a = 0; a < opens.size(); ++a)
        for (std::size_t b = 0; b < opens.size(); ++b) {
            bool sub = true;
            for (std::size_t i = 0; i < carrier.size() && sub; ++i)
                if (opens[a].member(i) && !opens[b].member(i)) sub = false;
            if (sub) incl.emplace_back(open_ids[a], open_ids[b]);
        }
    const FinitePoset open_lattice(open_ids, incl);
    const FinitePoset prod = product_poset(carrier, open_lattice);

    std::vector<std::uint8_t> e_mask(prod.size(), 0);
    for (std::size_t idx = 0; idx < prod.size(); ++idx) {
        auto [xid, oid] = split_product_id(prod.id_of(idx));
        const std::size_t k = std::stoull(oid.substr(1));
        e_mask[idx] = opens[k].member(carrier.index_of(xid));
    }
    EFiniteReport report;
    report.carrier_size = carrier.size();
    report.opens_count = opens.size();
    report.product_size = prod.size();
    report.ok = is_upper_set(FiniteSubset::from_mask(prod, std::move(e_mask)));
    return report;
}

void to_json(nlohmann::json& j, const ElemZ& z) {
    j = nlohmann::json{{"first", z.first}, {"second", z.second}};
}

void from_json(const nlohmann::json& j, ElemZ& z) {
    z.first = j.at("first").get<ElemJ>();
    z.second = j.at("second").get<OpenJ>();
}

void to_json(nlohmann::json& j, const PointwiseOpenX2& v) {
    j = nlohmann::json{{"generators", v.generators}};
}

void from_json(const nlohmann::json& j, PointwiseOpenX2& v) {
    v.generators = j.at("generators").get<std::vector<std::vector<ElemJ>>>();
}

void to_json(nlohmann::json& j, const BoxZ& b) {
    j = nlohmann::json{{"u", b.u}, {"v", b.v}};
}

void from_json(const nlohmann::json& j, BoxZ& b) {
    b.u = j.at("u").get<OpenJ>();
    b.v = j.at("v").get<PointwiseOpenX2>();
}

void to_json(nlohmann::json& j, const ProductOpenZ& d) {
    j = nlohmann::json{{"boxes", d.boxes}};
}

void from_json(const nlohmann::json& j, ProductOpenZ& d) {
    d.boxes = j.at("boxes").get<std::vector<BoxZ>>();
}

void to_json(nlohmann::json& j, const Evaluation& e) {
    j = nlohmann::json{{"check", e.check}, {"args", e.args}, {"result", e.result}};
}

void from_json(const nlohmann::json& j, Evaluation& e) {
    e.check = j.at("check").get<std::string>();
    e.args = j.at("args");
    e.result = j.at("result").get<bool>();
}

void to_json(nlohmann::json& j, const RefutationCertificate& c) {
    j = nlohmann::json{{"version", 1},
                       {"target", to_string(c.target)},
                       {"box", nlohmann::json{{"u", c.box_u}, {"v", c.box_v}}},
                       {"base_fn", c.base_fn},
                       {"chain_index", c.chain_index},
                       {"chain_member", c.chain_member},
                       {"witness", c.witness},
                       {"evaluations", c.evaluations}};
}

void from_json(const nlohmann::json& j, RefutationCertificate& c) {
    c.target = refutation_target_from_string(j.at("target").get<std::string>());
    c.box_u = j.at("box").at("u").get<OpenJ>();
    c.box_v = j.at("box").at("v").get<PointwiseOpenX2>();
    c.base_fn = j.at("base_fn").get<FnRep>();
    c.chain_index = j.at("chain_index").get<std::uint64_t>();
    c.chain_member = j.at("chain_member").get<OpenJ>();
    c.witness = j.at("witness").get<ElemZ>();
    c.evaluations = j.at("evaluations").get<std::vector<Evaluation>>();
}

}  // namespace scottforge
