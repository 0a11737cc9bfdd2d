#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "scottforge/modjohnstone.hpp"

namespace scottforge {

/// Eventually-constant function f: N_start -> N, stored as an explicit prefix
/// of values f(start), f(start+1), ... followed by a constant tail. Canonical:
/// trailing prefix entries equal to the tail are trimmed on construction, so
/// structural equality of representations is equality of functions.
class FnRep {
public:
    FnRep() = default;
    FnRep(std::uint64_t start, std::vector<std::uint64_t> prefix, std::uint64_t tail);

    std::uint64_t start() const { return start_; }
    const std::vector<std::uint64_t>& prefix() const { return prefix_; }
    std::uint64_t tail() const { return tail_; }
    /// First index at which the function is already constant.
    std::uint64_t prefix_end() const { return start_ + prefix_.size(); }

    std::uint64_t eval(std::uint64_t i) const;  // throws std::domain_error below start

    /// The constant zero function on all of N; its open is X1 minus bottom.
    static FnRep constant_zero() { return FnRep(0, {}, 0); }

    friend bool operator==(const FnRep&, const FnRep&) = default;

private:
    std::uint64_t start_ = 0;
    std::vector<std::uint64_t> prefix_;
    std::uint64_t tail_ = 0;
};

std::uint64_t fn_eval(const FnRep& f, std::uint64_t i);

/// Representable Scott-open subset of the modified Johnstone lattice:
/// the empty set, the full set, or V_f = {(i,j) : i >= start, j >= f(i)} + {top}.
/// V_f never contains bottom.
class OpenJ {
public:
    enum class Tag { Empty, Full, VSet };

    OpenJ() = default;  // the empty set
    static OpenJ empty() { return OpenJ(Tag::Empty, {}); }
    static OpenJ full() { return OpenJ(Tag::Full, {}); }
    static OpenJ vset(FnRep f) { return OpenJ(Tag::VSet, std::move(f)); }

    Tag tag() const { return tag_; }
    const FnRep& fn() const;  // throws std::logic_error unless VSet

    friend bool operator==(const OpenJ& a, const OpenJ& b) {
        if (a.tag_ != b.tag_) return false;
        return a.tag_ != Tag::VSet || a.f_ == b.f_;
    }

private:
    OpenJ(Tag tag, FnRep f) : tag_(tag), f_(std::move(f)) {}
    Tag tag_ = Tag::Empty;
    FnRep f_;
};

bool vf_contains(const OpenJ& o, const ElemJ& x);

/// Set-theoretic inclusion on representable opens (the X2 order).
bool subset(const OpenJ& a, const OpenJ& b);

/// Exact set union / intersection; the representable class is closed under both.
OpenJ open_union(const OpenJ& a, const OpenJ& b);
OpenJ open_intersect(const OpenJ& a, const OpenJ& b);

/// The refutation chain member V_{g_i} for a base f with start 0:
/// g_i(m) = 0 for m < i and f(m)+1 for m >= i.
OpenJ gi_chain(const FnRep& f, std::uint64_t i);

/// Constructive verification that the chain (V_{g_i}) increases strictly into
/// union V_{constant zero}, with an explicit escape point per step and the
/// column -> index witness map k -> k+1 for the covering direction.
struct ChainUnionReport {
    bool increasing = false;
    bool each_below_union = false;
    bool strict = false;
    bool covers = false;
    std::uint64_t steps = 0;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> escape_points;  // (i, f(i))
    std::vector<std::pair<std::uint64_t, std::uint64_t>> witness_map;    // column k -> k+1

    bool ok() const { return increasing && each_below_union && strict && covers; }
};

ChainUnionReport chain_union_check(const FnRep& f, std::uint64_t steps = 16);

/// Rebuilds the canonical FnRep of a VSet from membership queries alone:
/// start = least occupied column, f(i) = least height present in column i.
FnRep reconstruct_fnrep(const OpenJ& o);

// JSON forms:
//   FnRep  {"prefix":[...],"start":n,"tail":n}
//   OpenJ  {"tag":"empty"} | {"tag":"full"} | {"tag":"vset","start":n,"prefix":[...],"tail":n}
void to_json(nlohmann::json& j, const FnRep& f);
void from_json(const nlohmann::json& j, FnRep& f);
void to_json(nlohmann::json& j, const OpenJ& o);
void from_json(const nlohmann::json& j, OpenJ& o);

}  // namespace scottforge
