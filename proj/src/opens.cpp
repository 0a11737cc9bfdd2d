#include "scottforge/opens.hpp"

#include <algorithm>
#include <stdexcept>

namespace scottforge {

FnRep::FnRep(std::uint64_t start, std::vector<std::uint64_t> prefix, std::uint64_t tail)
    : start_(start), prefix_(std::move(prefix)), tail_(tail) {
    while (!prefix_.empty() && prefix_.back() == tail_) prefix_.pop_back();
}

std::uint64_t FnRep::eval(std::uint64_t i) const {
    if (i < start_)
        throw std::domain_error("fn_eval: index " + std::to_string(i) +
                                " below domain start " + std::to_string(start_));
    const std::uint64_t offset = i - start_;
    return offset < prefix_.size() ? prefix_[offset] : tail_;
}

std::uint64_t fn_eval(const FnRep& f, std::uint64_t i) { return f.eval(i); }

const FnRep& OpenJ::fn() const {
    if (tag_ != Tag::VSet) throw std::logic_error("fn() on a non-VSet open");
    return f_;
}

bool vf_contains(const OpenJ& o, const ElemJ& x) {
    switch (o.tag()) {
        case OpenJ::Tag::Empty:
            return false;
        case OpenJ::Tag::Full:
            return true;
        case OpenJ::Tag::VSet:
            break;
    }
    if (x.tag == ElemJ::Tag::Top) return true;
    if (x.tag == ElemJ::Tag::Bot) return false;
    const FnRep& f = o.fn();
    if (x.i < f.start()) return false;
    return leq(NatOrOmega::nat(f.eval(x.i)), x.j);
}

bool subset(const OpenJ& a, const OpenJ& b) {
    if (a.tag() == OpenJ::Tag::Empty || b.tag() == OpenJ::Tag::Full) return true;
    if (b.tag() == OpenJ::Tag::Empty) return false;
    if (a.tag() == OpenJ::Tag::Full) return false;  // Full has bot, no VSet does
    const FnRep& f = a.fn();
    const FnRep& g = b.fn();
    // V_f <= V_g iff g starts no later than f and g <= f pointwise on N_{f.start}.
    if (g.start() > f.start()) return false;
    const std::uint64_t end = std::max(f.prefix_end(), g.prefix_end());
    for (std::uint64_t i = f.start(); i < end; ++i)
        if (g.eval(i) > f.eval(i)) return false;
    return g.tail() <= f.tail();
}

OpenJ open_union(const OpenJ& a, const OpenJ& b) {
    if (a.tag() == OpenJ::Tag::Full || b.tag() == OpenJ::Tag::Full) return OpenJ::full();
    if (a.tag() == OpenJ::Tag::Empty) return b;
    if (b.tag() == OpenJ::Tag::Empty) return a;
    const FnRep& f = a.fn();
    const FnRep& g = b.fn();
    const std::uint64_t start = std::min(f.start(), g.start());
    const std::uint64_t end = std::max(f.prefix_end(), g.prefix_end());
    std::vector<std::uint64_t> prefix;
    for (std::uint64_t i = start; i < end; ++i) {
        if (i < f.start())
            prefix.push_back(g.eval(i));
        else if (i < g.start())
            prefix.push_back(f.eval(i));
        else
            prefix.push_back(std::min(f.eval(i), g.eval(i)));
    }
    return OpenJ::vset(FnRep(start, std::move(prefix), std::min(f.tail(), g.tail())));
}

OpenJ open_intersect(const OpenJ& a, const OpenJ& b) {
    if (a.tag() == OpenJ::Tag::Empty || b.tag() == OpenJ::Tag::Empty) return OpenJ::empty();
    if (a.tag() == OpenJ::Tag::Full) return b;
    if (b.tag() == OpenJ::Tag::Full) return a;
    const FnRep& f = a.fn();
    const FnRep& g = b.fn();
    const std::uint64_t start = std::max(f.start(), g.start());
    const std::uint64_t end = std::max(f.prefix_end(), g.prefix_end());
    std::vector<std::uint64_t> prefix;
    for (std::uint64_t i = start; i < end; ++i)
        prefix.push_back(std::max(f.eval(i), g.eval(i)));
    return OpenJ::vset(FnRep(start, std::move(prefix), std::max(f.tail(), g.tail())));
}

OpenJ gi_chain(const FnRep& f, std::uint64_t i) {
    if (f.start() != 0)
        throw std::invalid_argument("gi_chain: base function must start at 0");
    const std::uint64_t end = std::max(i, f.prefix_end());
    std::vector<std::uint64_t> prefix;
    prefix.reserve(end);
    for (std::uint64_t m = 0; m < end; ++m)
        prefix.push_back(m < i ? 0 : f.eval(m) + 1);
    return OpenJ::vset(FnRep(0, std::move(prefix), f.tail() + 1));
}

ChainUnionReport chain_union_check(const FnRep& f, std::uint64_t steps) {
    if (f.start() != 0)
        throw std::invalid_argument("chain_union_check: base function must start at 0");
    ChainUnionReport report;
    report.steps = steps;
    report.increasing = true;
    report.each_below_union = true;
    report.strict = true;
    report.covers = true;
    const OpenJ target = OpenJ::vset(FnRep::constant_zero());
    for (std::uint64_t i = 0; i < steps; ++i) {
        const OpenJ vi = gi_chain(f, i);
        if (!subset(vi, gi_chain(f, i + 1))) report.increasing = false;
        if (!subset(vi, target)) report.each_below_union = false;
        // (i, f(i)) lies in the target but escapes V_{g_i}, as g_i(i) = f(i)+1.
        const std::uint64_t escape = f.eval(i);
        report.escape_points.emplace_back(i, escape);
        if (!vf_contains(target, ElemJ::pair(i, escape)) ||
            vf_contains(vi, ElemJ::pair(i, escape)))
            report.strict = false;
    }
    // Covering direction: column k is absorbed at index k+1 since g_{k+1}(k) = 0.
    for (std::uint64_t k = 0; k < steps; ++k) {
        report.witness_map.emplace_back(k, k + 1);
        if (!vf_contains(gi_chain(f, k + 1), ElemJ::pair(k, std::uint64_t{0})))
            report.covers = false;
    }
    return report;
}

FnRep reconstruct_fnrep(const OpenJ& o) {
    const FnRep& stored = o.fn();
    // Least occupied column: (i, omega) is a member iff i >= start.
    std::uint64_t start = 0;
    while (!vf_contains(o, ElemJ::pair(start, NatOrOmega::omega()))) ++start;
    // Least height per column, probed up to a bound every representable open respects.
    std::uint64_t probe_bound = stored.tail();
    for (auto v : stored.prefix()) probe_bound = std::max(probe_bound, v);
    ++probe_bound;
    const std::uint64_t columns = stored.prefix().size() + 1;
    std::vector<std::uint64_t> values;
    for (std::uint64_t c = 0; c < columns; ++c) {
        std::uint64_t j = 0;
        while (j <= probe_bound && !vf_contains(o, ElemJ::pair(start + c, j))) ++j;
        values.push_back(j);
    }
    const std::uint64_t tail = values.back();
    values.pop_back();
    return FnRep(start, std::move(values), tail);
}

void to_json(nlohmann::json& j, const FnRep& f) {
    j = nlohmann::json{{"start", f.start()}, {"prefix", f.prefix()}, {"tail", f.tail()}};
}

void from_json(const nlohmann::json& j, FnRep& f) {
    f = FnRep(j.at("start").get<std::uint64_t>(),
              j.at("prefix").get<std::vector<std::uint64_t>>(),
              j.at("tail").get<std::uint64_t>());
}

void to_json(nlohmann::json& j, const OpenJ& o) {
    switch (o.tag()) {
        case OpenJ::Tag::Empty:
            j = nlohmann::json{{"tag", "empty"}};
            return;
        case OpenJ::Tag::Full:
            j = nlohmann::json{{"tag", "full"}};
            return;
        case OpenJ::Tag::VSet:
            j = nlohmann::json{{"tag", "vset"},
                               {"start", o.fn().start()},
                               {"prefix", o.fn().prefix()},
                               {"tail", o.fn().tail()}};
            return;
    }
}

void from_json(const nlohmann::json& j, OpenJ& o) {
    const auto tag = j.at("tag").get<std::string>();
    if (tag == "empty") {
        o = OpenJ::empty();
    } else if (tag == "full") {
        o = OpenJ::full();
    } else if (tag == "vset") {
        o = OpenJ::vset(FnRep(j.at("start").get<std::uint64_t>(),
                              j.at("prefix").get<std::vector<std::uint64_t>>(),
                              j.at("tail").get<std::uint64_t>()));
    } else {
        throw std::invalid_argument("bad OpenJ tag: " + tag);
    }
}

}  // namespace scottforge
