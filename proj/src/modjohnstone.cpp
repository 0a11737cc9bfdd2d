#include "scottforge/modjohnstone.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace scottforge {

std::uint64_t NatOrOmega::nat_value() const {
    if (omega_) throw std::logic_error("nat_value() on omega");
    return n_;
}

bool leq1(const ElemJ& x, const ElemJ& y) {
    if (x.tag == ElemJ::Tag::Bot || y.tag == ElemJ::Tag::Top) return true;
    if (x.tag == ElemJ::Tag::Top || y.tag == ElemJ::Tag::Bot) return false;
    if (x.i == y.i && leq(x.j, y.j)) return true;
    return x.i <= y.i && y.j.is_omega();
}

ElemJ sup_set(std::span<const ElemJ> s) {
    bool saw_top = false;
    std::optional<std::uint64_t> col;
    bool single_column = true;
    std::uint64_t max_col = 0;
    NatOrOmega max_j = NatOrOmega::nat(0);
    bool saw_pair = false;
    for (const auto& x : s) {
        switch (x.tag) {
            case ElemJ::Tag::Bot:
                break;
            case ElemJ::Tag::Top:
                saw_top = true;
                break;
            case ElemJ::Tag::Pair:
                if (!saw_pair) {
                    col = x.i;
                    max_j = x.j;
                } else {
                    if (x.i != *col) single_column = false;
                    if (!leq(x.j, max_j)) max_j = x.j;
                }
                max_col = std::max(max_col, x.i);
                saw_pair = true;
                break;
        }
    }
    if (saw_top) return ElemJ::top();
    if (!saw_pair) return ElemJ::bot();
    if (single_column) return ElemJ::pair(*col, max_j);
    return ElemJ::pair(max_col, NatOrOmega::omega());
}

ElemJ sup_set(const std::vector<ElemJ>& s) { return sup_set(std::span<const ElemJ>(s)); }

ElemJ inf_set(std::span<const ElemJ> s) {
    // Drop tops (they impose no constraint); bot forces bot.
    std::vector<ElemJ> pairs;
    for (const auto& x : s) {
        if (x.tag == ElemJ::Tag::Bot) return ElemJ::bot();
        if (x.tag == ElemJ::Tag::Pair) pairs.push_back(x);
    }
    if (pairs.empty()) return ElemJ::top();

    bool single_column = true;
    for (const auto& x : pairs)
        if (x.i != pairs[0].i) single_column = false;
    if (single_column) {
        NatOrOmega min_j = pairs[0].j;
        for (const auto& x : pairs)
            if (leq(x.j, min_j)) min_j = x.j;
        return ElemJ::pair(pairs[0].i, min_j);
    }

    // Several columns. A pair (k,q) is below (i,p) only if k=i, or k<=i with
    // p=omega. So a common pair lower bound must sit in the unique column that
    // holds a finite height, and below every omega column.
    std::optional<std::uint64_t> finite_col;
    NatOrOmega finite_min = NatOrOmega::omega();
    std::uint64_t min_omega_col = 0;
    bool saw_omega = false;
    std::uint64_t min_col_overall = pairs[0].i;
    for (const auto& x : pairs) {
        min_col_overall = std::min(min_col_overall, x.i);
        if (x.j.is_omega()) {
            min_omega_col = saw_omega ? std::min(min_omega_col, x.i) : x.i;
            saw_omega = true;
        } else {
            if (finite_col && *finite_col != x.i) return ElemJ::bot();
            finite_col = x.i;
            if (leq(x.j, finite_min)) finite_min = x.j;
        }
    }
    if (!finite_col) return ElemJ::pair(min_col_overall, NatOrOmega::omega());
    if (saw_omega && *finite_col > min_omega_col) return ElemJ::bot();
    return ElemJ::pair(*finite_col, finite_min);
}

ElemJ inf_set(const std::vector<ElemJ>& s) { return inf_set(std::span<const ElemJ>(s)); }

ElemJ chain_sup(const ChainFamily& c) {
    switch (c.kind) {
        case ChainFamily::Kind::Column:
            return ElemJ::pair(c.column, NatOrOmega::omega());
        case ChainFamily::Kind::OmegaRow:
            return ElemJ::top();
        case ChainFamily::Kind::Finite:
            return sup_set(c.members);
    }
    throw std::invalid_argument("unsupported chain family shape");
}

bool leq_johnstone(const ElemJohnstoneOriginal& x, const ElemJohnstoneOriginal& y) {
    if (x.i == y.i && leq(x.j, y.j)) return true;
    return y.j.is_omega() && leq(x.j, NatOrOmega::nat(y.i));
}

std::string elem_id(const ElemJ& x) {
    switch (x.tag) {
        case ElemJ::Tag::Bot:
            return "bot";
        case ElemJ::Tag::Top:
            return "top";
        case ElemJ::Tag::Pair:
            return "(" + std::to_string(x.i) + "," +
                   (x.j.is_omega() ? std::string("omega") : std::to_string(x.j.nat_value())) + ")";
    }
    throw std::logic_error("bad ElemJ tag");
}

ElemJ parse_elem_id(const std::string& id) {
    if (id == "bot") return ElemJ::bot();
    if (id == "top") return ElemJ::top();
    if (id.size() < 5 || id.front() != '(' || id.back() != ')')
        throw std::invalid_argument("bad element id: " + id);
    auto comma = id.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("bad element id: " + id);
    std::uint64_t i = std::stoull(id.substr(1, comma - 1));
    std::string second = id.substr(comma + 1, id.size() - comma - 2);
    if (second == "omega") return ElemJ::pair(i, NatOrOmega::omega());
    return ElemJ::pair(i, NatOrOmega::nat(std::stoull(second)));
}

std::vector<ElemJ> truncation_elements(std::uint64_t n) {
    std::vector<ElemJ> out;
    out.push_back(ElemJ::bot());
    out.push_back(ElemJ::top());
    for (std::uint64_t i = 0; i <= n; ++i) {
        for (std::uint64_t j = 0; j <= n; ++j) out.push_back(ElemJ::pair(i, j));
        out.push_back(ElemJ::pair(i, NatOrOmega::omega()));
    }
    return out;
}

FinitePoset truncate(std::uint64_t n, std::uint64_t max_n) {
    if (n > max_n)
        throw bound_exceeded("truncate: n = " + std::to_string(n) + " exceeds bound " +
                             std::to_string(max_n));
    auto elems = truncation_elements(n);
    std::vector<std::string> ids;
    ids.reserve(elems.size());
    for (const auto& e : elems) ids.push_back(elem_id(e));
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const auto& a : elems)
        for (const auto& b : elems)
            if (leq1(a, b)) pairs.emplace_back(elem_id(a), elem_id(b));
    return FinitePoset(std::move(ids), pairs);
}

void to_json(nlohmann::json& j, const ElemJ& x) {
    switch (x.tag) {
        case ElemJ::Tag::Bot:
            j = nlohmann::json{{"tag", "bot"}};
            return;
        case ElemJ::Tag::Top:
            j = nlohmann::json{{"tag", "top"}};
            return;
        case ElemJ::Tag::Pair:
            j = nlohmann::json{{"tag", "pair"}, {"i", x.i}};
            if (x.j.is_omega())
                j["j"] = "omega";
            else
                j["j"] = x.j.nat_value();
            return;
    }
}

void from_json(const nlohmann::json& j, ElemJ& x) {
    const auto tag = j.at("tag").get<std::string>();
    if (tag == "bot") {
        x = ElemJ::bot();
    } else if (tag == "top") {
        x = ElemJ::top();
    } else if (tag == "pair") {
        const auto& second = j.at("j");
        NatOrOmega height = second.is_string() && second.get<std::string>() == "omega"
                                ? NatOrOmega::omega()
                                : NatOrOmega::nat(second.get<std::uint64_t>());
        x = ElemJ::pair(j.at("i").get<std::uint64_t>(), height);
    } else {
        throw std::invalid_argument("bad ElemJ tag: " + tag);
    }
}

}  // namespace scottforge
