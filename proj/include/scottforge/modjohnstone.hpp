#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "scottforge/core_order.hpp"

namespace scottforge {

/// A natural number or the distinguished top symbol omega of the second
/// coordinate order. Every natural is below omega.
class NatOrOmega {
public:
    constexpr NatOrOmega() = default;
    static constexpr NatOrOmega nat(std::uint64_t n) { return NatOrOmega(n, false); }
    static constexpr NatOrOmega omega() { return NatOrOmega(0, true); }

    constexpr bool is_omega() const { return omega_; }
    std::uint64_t nat_value() const;  // throws std::logic_error on omega

    friend constexpr bool operator==(NatOrOmega a, NatOrOmega b) {
        return a.omega_ == b.omega_ && (a.omega_ || a.n_ == b.n_);
    }
    friend constexpr bool leq(NatOrOmega a, NatOrOmega b) {
        if (b.omega_) return true;
        if (a.omega_) return false;
        return a.n_ <= b.n_;
    }

private:
    constexpr NatOrOmega(std::uint64_t n, bool omega) : n_(n), omega_(omega) {}
    std::uint64_t n_ = 0;
    bool omega_ = false;
};

/// Element of the modified Johnstone complete lattice:
/// bottom, top, or a pair (column i, height j) with j possibly omega.
struct ElemJ {
    enum class Tag { Bot, Pair, Top };
    Tag tag = Tag::Bot;
    std::uint64_t i = 0;
    NatOrOmega j{};

    static ElemJ bot() { return {Tag::Bot, 0, {}}; }
    static ElemJ top() { return {Tag::Top, 0, {}}; }
    static ElemJ pair(std::uint64_t i, NatOrOmega j) { return {Tag::Pair, i, j}; }
    static ElemJ pair(std::uint64_t i, std::uint64_t j) {
        return {Tag::Pair, i, NatOrOmega::nat(j)};
    }

    friend bool operator==(const ElemJ& a, const ElemJ& b) {
        if (a.tag != b.tag) return false;
        if (a.tag != Tag::Pair) return true;
        return a.i == b.i && a.j == b.j;
    }
};

/// The lattice order: bottom below everything, everything below top,
/// (i,p) below (j,q) iff (i=j and p<=q) or (i<=j and q=omega).
bool leq1(const ElemJ& x, const ElemJ& y);

/// Supremum of a finite set of elements (empty set gives bottom).
ElemJ sup_set(std::span<const ElemJ> s);
ElemJ sup_set(const std::vector<ElemJ>& s);

/// Infimum of a finite set of elements (empty set gives top).
ElemJ inf_set(std::span<const ElemJ> s);
ElemJ inf_set(const std::vector<ElemJ>& s);

/// Symbolic directed families whose suprema the proofs need:
/// Column(i) = {i} x N, OmegaRow = N x {omega}, or an explicit finite set.
struct ChainFamily {
    enum class Kind { Column, OmegaRow, Finite };
    Kind kind = Kind::Finite;
    std::uint64_t column = 0;
    std::vector<ElemJ> members;

    static ChainFamily column_family(std::uint64_t i) { return {Kind::Column, i, {}}; }
    static ChainFamily omega_row() { return {Kind::OmegaRow, 0, {}}; }
    static ChainFamily finite(std::vector<ElemJ> members) {
        return {Kind::Finite, 0, std::move(members)};
    }
};

/// Column(i) -> (i,omega); OmegaRow -> top; finite sets via sup_set.
ElemJ chain_sup(const ChainFamily& c);

/// Element (i,j) of the original (unmodified) Johnstone space.
struct ElemJohnstoneOriginal {
    std::uint64_t i = 0;
    NatOrOmega j{};
};

/// Original Johnstone order: (i,j) below (k,l) iff (i=k and j<=l)
/// or (l=omega and j<=k).
bool leq_johnstone(const ElemJohnstoneOriginal& x, const ElemJohnstoneOriginal& y);

/// Finite truncation {bot,top} + {0..n} x ({0..n} + {omega}) with the induced
/// order, for the exhaustive core_order oracles. Always a lattice.
FinitePoset truncate(std::uint64_t n, std::uint64_t max_n = 6);

/// The elements of truncate(n), in an order matching elem_id.
std::vector<ElemJ> truncation_elements(std::uint64_t n);

/// Stable string id used in finite truncations: "bot", "top", "(2,omega)", "(2,3)".
std::string elem_id(const ElemJ& x);
ElemJ parse_elem_id(const std::string& id);

// JSON form: {"tag":"bot"} | {"tag":"top"} | {"tag":"pair","i":n,"j":n|"omega"}
void to_json(nlohmann::json& j, const ElemJ& x);
void from_json(const nlohmann::json& j, ElemJ& x);

}  // namespace scottforge
