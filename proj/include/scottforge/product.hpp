#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "scottforge/opens.hpp"

namespace scottforge {

/// Point of Z = X1 x X2, ordered componentwise.
struct ElemZ {
    ElemJ first;
    OpenJ second = OpenJ::empty();

    static ElemZ of(ElemJ a, OpenJ b) { return {std::move(a), std::move(b)}; }
    static ElemZ bottom() { return {ElemJ::bot(), OpenJ::empty()}; }
    static ElemZ top() { return {ElemJ::top(), OpenJ::full()}; }

    friend bool operator==(const ElemZ&, const ElemZ&) = default;
};

bool leqZ(const ElemZ& a, const ElemZ& b);

/// Binary supremum in Z, computed componentwise.
ElemZ sup2(const ElemZ& a, const ElemZ& b);

/// Membership in E = {(x1,x2) : x1 in x2}, decidable for representable opens.
bool e_contains(const ElemZ& z);

/// Representable Scott-open family of X2: a finite union of principal filters
/// {O : F subset of O} given by finite generator sets F of lattice elements.
/// Upward closed in X2; a directed union that lands in such a filter already
/// has a member in it, which is what the refuters exploit.
struct PointwiseOpenX2 {
    std::vector<std::vector<ElemJ>> generators;

    static PointwiseOpenX2 of(std::vector<std::vector<ElemJ>> gens) {
        return {std::move(gens)};
    }
    friend bool operator==(const PointwiseOpenX2&, const PointwiseOpenX2&) = default;
};

bool pointwise_contains(const PointwiseOpenX2& v, const OpenJ& o);

/// Least chain index i with V_{g_i} in v. Total for any v that contains the
/// chain's union: a bot-free generator F is absorbed at 1 + its largest column.
/// Throws absorbing_index_not_found when no generator is free of bot.
std::uint64_t find_absorbing_index(const FnRep& f, const PointwiseOpenX2& v);

/// Oracle-mode search against an arbitrary membership callback, bounded.
struct AbsorbResult {
    enum class Status { Found, NotFound, BoundExceeded };
    Status status = Status::NotFound;
    std::uint64_t index = 0;
};
AbsorbResult find_absorbing_index_oracle(const FnRep& f,
                                         const std::function<bool(const OpenJ&)>& member,
                                         std::uint64_t bound = 64);

/// Box of the product topology on Z and finite unions of boxes.
struct BoxZ {
    OpenJ u = OpenJ::empty();
    PointwiseOpenX2 v;
    friend bool operator==(const BoxZ&, const BoxZ&) = default;
};

struct ProductOpenZ {
    std::vector<BoxZ> boxes;
    friend bool operator==(const ProductOpenZ&, const ProductOpenZ&) = default;
};

bool product_open_contains(const ProductOpenZ& d, const ElemZ& z);

/// One replayable membership check of a whitelisted primitive.
struct Evaluation {
    std::string check;
    nlohmann::json args = nlohmann::json::array();
    bool result = false;
    friend bool operator==(const Evaluation&, const Evaluation&) = default;
};

enum class RefutationTarget { ENotProductOpen, SupDiscontinuous, BcFailure };

std::string to_string(RefutationTarget t);
RefutationTarget refutation_target_from_string(const std::string& s);

/// Serializable witness that a concrete product box escapes the target set.
/// Every recorded evaluation replays with library primitives; chain_member is
/// redundantly derivable from base_fn and chain_index.
struct RefutationCertificate {
    RefutationTarget target = RefutationTarget::ENotProductOpen;
    OpenJ box_u = OpenJ::empty();
    PointwiseOpenX2 box_v;
    FnRep base_fn;
    std::uint64_t chain_index = 0;
    OpenJ chain_member = OpenJ::empty();
    ElemZ witness;
    std::vector<Evaluation> evaluations;
};

/// Refutes u x v subset of E for a box around ((0,0), V_{constant zero}):
/// picks the least absorbed chain member V_{g_i} and the point (i, f(i)) of u
/// escaping it, so ((i,f(i)), V_{g_i}) lies in the box but not in E.
RefutationCertificate refute_e_box(const OpenJ& u, const PointwiseOpenX2& v);

/// Slices E1 = {x : (x, empty) in d1} and E2 = {y : (bot, y) in d2}, exact for
/// the representable classes. Requires ((0,0), empty) in d1 and
/// (bot, V_{constant zero}) in d2.
std::pair<OpenJ, PointwiseOpenX2> slice_opens(const ProductOpenZ& d1, const ProductOpenZ& d2);

/// Refutes d1 x d2 subset of sup2^{-1}(E) by reducing to refute_e_box on the
/// slices: the witness pair ((x, empty), (bot, V_{g_i})) lies in d1 x d2 while
/// its supremum (x, V_{g_i}) escapes E.
RefutationCertificate refute_sup2_box(const ProductOpenZ& d1, const ProductOpenZ& d2);

/// Finite shadow of the Scott-openness of E: forms E on truncate(n) times its
/// upper-set lattice and checks it is an upper set, exhaustively.
struct EFiniteReport {
    bool ok = false;
    std::uint64_t carrier_size = 0;
    std::uint64_t opens_count = 0;
    std::uint64_t product_size = 0;
};
EFiniteReport check_e_scott_open_finite(std::uint64_t n, std::uint64_t max_n = 2);

// JSON forms follow the certificate schema (version 1).
void to_json(nlohmann::json& j, const ElemZ& z);
void from_json(const nlohmann::json& j, ElemZ& z);
void to_json(nlohmann::json& j, const PointwiseOpenX2& v);
void from_json(const nlohmann::json& j, PointwiseOpenX2& v);
void to_json(nlohmann::json& j, const BoxZ& b);
void from_json(const nlohmann::json& j, BoxZ& b);
void to_json(nlohmann::json& j, const ProductOpenZ& d);
void from_json(const nlohmann::json& j, ProductOpenZ& d);
void to_json(nlohmann::json& j, const Evaluation& e);
void from_json(const nlohmann::json& j, Evaluation& e);
void to_json(nlohmann::json& j, const RefutationCertificate& c);
void from_json(const nlohmann::json& j, RefutationCertificate& c);

}  // namespace scottforge
