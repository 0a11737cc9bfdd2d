#include "scottforge/core_order.hpp"

#include <algorithm>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace scottforge {

std::string AxiomReport::describe() const {
    if (ok()) return "all axioms hold";
    std::string out;
    if (!reflexive)
        out += "reflexivity fails at " + reflexivity_witness[0] + "; ";
    if (!transitive)
        out += "transitivity fails at (" + transitivity_witness[0] + "," +
               transitivity_witness[1] + "," + transitivity_witness[2] + "); ";
    if (!antisymmetric)
        out += "antisymmetry fails at (" + antisymmetry_witness[0] + "," +
               antisymmetry_witness[1] + "); ";
    return out;
}

namespace {

std::vector<std::uint8_t> build_matrix(const std::vector<std::string>& sorted_elements,
                                       const std::vector<std::pair<std::string, std::string>>& pairs) {
    const std::size_t n = sorted_elements.size();
    std::vector<std::uint8_t> rel(n * n, 0);
    auto idx = [&](const std::string& id) {
        auto it = std::lower_bound(sorted_elements.begin(), sorted_elements.end(), id);
        if (it == sorted_elements.end() || *it != id)
            throw std::invalid_argument("relation mentions unknown element id: " + id);
        return static_cast<std::size_t>(it - sorted_elements.begin());
    };
    for (const auto& [a, b] : pairs) rel[idx(a) * n + idx(b)] = 1;
    return rel;
}

std::vector<std::string> sorted_unique(std::vector<std::string> elements) {
    std::sort(elements.begin(), elements.end());
    if (std::adjacent_find(elements.begin(), elements.end()) != elements.end())
        throw std::invalid_argument("duplicate element id");
    return elements;
}

}  // namespace

AxiomReport check_poset_axioms(const std::vector<std::string>& elements,
                               const std::vector<std::pair<std::string, std::string>>& leq_pairs) {
    auto sorted = sorted_unique(elements);
    auto rel = build_matrix(sorted, leq_pairs);
    const std::size_t n = sorted.size();
    AxiomReport report;
    for (std::size_t x = 0; x < n && report.reflexive; ++x) {
        if (!rel[x * n + x]) {
            report.reflexive = false;
            report.reflexivity_witness = {sorted[x]};
        }
    }
    for (std::size_t x = 0; x < n && report.antisymmetric; ++x)
        for (std::size_t y = x + 1; y < n && report.antisymmetric; ++y)
            if (rel[x * n + y] && rel[y * n + x]) {
                report.antisymmetric = false;
                report.antisymmetry_witness = {sorted[x], sorted[y]};
            }
    for (std::size_t x = 0; x < n && report.transitive; ++x)
        for (std::size_t y = 0; y < n && report.transitive; ++y) {
            if (!rel[x * n + y]) continue;
            for (std::size_t z = 0; z < n; ++z)
                if (rel[y * n + z] && !rel[x * n + z]) {
                    report.transitive = false;
                    report.transitivity_witness = {sorted[x], sorted[y], sorted[z]};
                    break;
                }
        }
    return report;
}

FinitePoset::FinitePoset(std::vector<std::string> elements,
                         const std::vector<std::pair<std::string, std::string>>& leq_pairs) {
    auto report = check_poset_axioms(elements, leq_pairs);
    if (!report.ok())
        throw std::invalid_argument("not a poset: " + report.describe());
    elements_ = sorted_unique(std::move(elements));
    rel_ = build_matrix(elements_, leq_pairs);
}

std::size_t FinitePoset::index_of(const std::string& id) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), id);
    if (it == elements_.end() || *it != id)
        throw std::invalid_argument("unknown element id: " + id);
    return static_cast<std::size_t>(it - elements_.begin());
}

bool FinitePoset::contains(const std::string& id) const {
    return std::binary_search(elements_.begin(), elements_.end(), id);
}

FiniteSubset FiniteSubset::of(const FinitePoset& p, const std::vector<std::string>& ids) {
    FiniteSubset s;
    s.poset = &p;
    s.mask.assign(p.size(), 0);
    for (const auto& id : ids) s.mask[p.index_of(id)] = 1;
    return s;
}

FiniteSubset FiniteSubset::from_mask(const FinitePoset& p, std::vector<std::uint8_t> mask) {
    if (mask.size() != p.size())
        throw std::invalid_argument("mask size does not match poset carrier");
    FiniteSubset s;
    s.poset = &p;
    s.mask = std::move(mask);
    return s;
}

bool FiniteSubset::empty() const {
    return std::find(mask.begin(), mask.end(), 1) == mask.end();
}

std::vector<std::string> FiniteSubset::ids() const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < mask.size(); ++i)
        if (mask[i]) out.push_back(poset->id_of(i));
    return out;
}

bool is_upper_set(const FiniteSubset& s) {
    const auto& p = *s.poset;
    for (std::size_t x = 0; x < p.size(); ++x) {
        if (!s.member(x)) continue;
        for (std::size_t y = 0; y < p.size(); ++y)
            if (p.leq(x, y) && !s.member(y)) return false;
    }
    return true;
}

bool is_directed(const FiniteSubset& s) {
    if (s.empty()) return false;
    const auto& p = *s.poset;
    for (std::size_t x = 0; x < p.size(); ++x) {
        if (!s.member(x)) continue;
        for (std::size_t y = 0; y < p.size(); ++y) {
            if (!s.member(y)) continue;
            bool has_ub = false;
            for (std::size_t z = 0; z < p.size() && !has_ub; ++z)
                if (s.member(z) && p.leq(x, z) && p.leq(y, z)) has_ub = true;
            if (!has_ub) return false;
        }
    }
    return true;
}

namespace {

bool is_upper_bound(const FinitePoset& p, const FiniteSubset& s, std::size_t z) {
    for (std::size_t x = 0; x < p.size(); ++x)
        if (s.member(x) && !p.leq(x, z)) return false;
    return true;
}

bool is_lower_bound(const FinitePoset& p, const FiniteSubset& s, std::size_t z) {
    for (std::size_t x = 0; x < p.size(); ++x)
        if (s.member(x) && !p.leq(z, x)) return false;
    return true;
}

}  // namespace

std::optional<std::size_t> brute_sup(const FiniteSubset& s) {
    const auto& p = *s.poset;
    for (std::size_t z = 0; z < p.size(); ++z) {
        if (!is_upper_bound(p, s, z)) continue;
        bool least = true;
        for (std::size_t y = 0; y < p.size() && least; ++y)
            if (is_upper_bound(p, s, y) && !p.leq(z, y)) least = false;
        if (least) return z;
    }
    return std::nullopt;
}

std::optional<std::size_t> brute_inf(const FiniteSubset& s) {
    const auto& p = *s.poset;
    for (std::size_t z = 0; z < p.size(); ++z) {
        if (!is_lower_bound(p, s, z)) continue;
        bool greatest = true;
        for (std::size_t y = 0; y < p.size() && greatest; ++y)
            if (is_lower_bound(p, s, y) && !p.leq(y, z)) greatest = false;
        if (greatest) return z;
    }
    return std::nullopt;
}

std::optional<std::size_t> brute_inf_via_sup(const FiniteSubset& s) {
    const auto& p = *s.poset;
    std::vector<std::uint8_t> lower(p.size(), 0);
    for (std::size_t z = 0; z < p.size(); ++z)
        if (is_lower_bound(p, s, z)) lower[z] = 1;
    auto candidate = brute_sup(FiniteSubset::from_mask(p, std::move(lower)));
    // The sup of the lower bounds is the inf only when it is itself a lower bound.
    if (candidate && is_lower_bound(p, s, *candidate)) return candidate;
    return std::nullopt;
}

std::vector<FiniteSubset> scott_opens_finite(const FinitePoset& p, std::size_t max_elements) {
    if (p.size() > max_elements)
        throw bound_exceeded("scott_opens_finite: poset has " + std::to_string(p.size()) +
                             " elements, bound is " + std::to_string(max_elements));
    const std::size_t n = p.size();
    std::vector<FiniteSubset> opens;
    for (std::uint64_t bits = 0; bits < (1ull << n); ++bits) {
        std::vector<std::uint8_t> mask(n, 0);
        for (std::size_t i = 0; i < n; ++i) mask[i] = (bits >> i) & 1;
        auto s = FiniteSubset::from_mask(p, std::move(mask));
        if (is_upper_set(s)) opens.push_back(std::move(s));
    }
    return opens;
}

std::string product_id(const std::string& a, const std::string& b) {
    return "(" + a + ";" + b + ")";
}

std::pair<std::string, std::string> split_product_id(const std::string& id) {
    if (id.size() < 3 || id.front() != '(' || id.back() != ')')
        throw std::invalid_argument("not a product id: " + id);
    auto sep = id.rfind(';');
    if (sep == std::string::npos)
        throw std::invalid_argument("not a product id: " + id);
    return {id.substr(1, sep - 1), id.substr(sep + 1, id.size() - sep - 2)};
}

FinitePoset product_poset(const FinitePoset& p, const FinitePoset& q) {
    std::vector<std::string> elements;
    elements.reserve(p.size() * q.size());
    for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t b = 0; b < q.size(); ++b)
            elements.push_back(product_id(p.id_of(a), q.id_of(b)));
    std::vector<std::pair<std::string, std::string>> pairs;
    for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t b = 0; b < q.size(); ++b)
            for (std::size_t c = 0; c < p.size(); ++c)
                for (std::size_t d = 0; d < q.size(); ++d)
                    if (p.leq(a, c) && q.leq(b, d))
                        pairs.emplace_back(product_id(p.id_of(a), q.id_of(b)),
                                           product_id(p.id_of(c), q.id_of(d)));
    return FinitePoset(std::move(elements), pairs);
}

bool is_monotone(const FinitePoset& dom, const FinitePoset& cod,
                 const std::vector<std::size_t>& table) {
    if (table.size() != dom.size())
        throw std::invalid_argument("map table size does not match domain");
    for (std::size_t x = 0; x < dom.size(); ++x)
        for (std::size_t y = 0; y < dom.size(); ++y)
            if (dom.leq(x, y) && !cod.leq(table[x], table[y])) return false;
    return true;
}

bool is_scott_continuous_finite(const FinitePoset& dom, const FinitePoset& cod,
                                const std::vector<std::size_t>& table) {
    if (table.size() != dom.size())
        throw std::invalid_argument("map table size does not match domain");
    for (const auto& open : scott_opens_finite(cod, cod.size())) {
        std::vector<std::uint8_t> pre(dom.size(), 0);
        for (std::size_t x = 0; x < dom.size(); ++x) pre[x] = open.member(table[x]);
        if (!is_upper_set(FiniteSubset::from_mask(dom, std::move(pre)))) return false;
    }
    return true;
}

FinitePoset load_poset_json(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("elements") || !doc.contains("leq"))
        throw std::invalid_argument("poset document must have \"elements\" and \"leq\"");
    std::vector<std::string> elements;
    for (const auto& e : doc.at("elements")) {
        if (!e.is_string()) throw std::invalid_argument("element ids must be strings");
        elements.push_back(e.get<std::string>());
    }
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const auto& pr : doc.at("leq")) {
        if (!pr.is_array() || pr.size() != 2 || !pr[0].is_string() || !pr[1].is_string())
            throw std::invalid_argument("leq entries must be [id,id] pairs");
        pairs.emplace_back(pr[0].get<std::string>(), pr[1].get<std::string>());
    }
    return FinitePoset(std::move(elements), pairs);
}

}  // namespace scottforge
