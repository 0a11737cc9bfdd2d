#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "scottforge/errors.hpp"

namespace scottforge {

/// Result of checking the three poset axioms on a raw relation.
/// Each failing axiom carries one violating witness.
struct AxiomReport {
    bool reflexive = true;
    bool transitive = true;
    bool antisymmetric = true;
    std::vector<std::string> reflexivity_witness;      // [x] with x not<= x
    std::vector<std::string> transitivity_witness;     // [x,y,z] with x<=y, y<=z, not x<=z
    std::vector<std::string> antisymmetry_witness;     // [x,y] with x<=y, y<=x, x != y

    bool ok() const { return reflexive && transitive && antisymmetric; }
    std::string describe() const;
};

/// Finite poset over opaque string ids with a dense boolean relation matrix.
/// Element ids are stored sorted lexicographically; all index-based APIs refer
/// to this order. The constructor rejects relations violating the axioms
/// (no implicit reflexive or transitive closure is taken).
class FinitePoset {
public:
    FinitePoset(std::vector<std::string> elements,
                const std::vector<std::pair<std::string, std::string>>& leq_pairs);

    std::size_t size() const { return elements_.size(); }
    const std::vector<std::string>& elements() const { return elements_; }
    const std::string& id_of(std::size_t i) const { return elements_.at(i); }
    std::size_t index_of(const std::string& id) const;  // throws std::invalid_argument
    bool contains(const std::string& id) const;

    bool leq(std::size_t a, std::size_t b) const { return rel_[a * size() + b] != 0; }
    bool leq_ids(const std::string& a, const std::string& b) const {
        return leq(index_of(a), index_of(b));
    }

private:
    std::vector<std::string> elements_;
    std::vector<std::uint8_t> rel_;  // row-major |E| x |E|
};

/// Subset of a finite poset, as a membership mask over the poset's element order.
struct FiniteSubset {
    const FinitePoset* poset = nullptr;
    std::vector<std::uint8_t> mask;

    static FiniteSubset of(const FinitePoset& p, const std::vector<std::string>& ids);
    static FiniteSubset from_mask(const FinitePoset& p, std::vector<std::uint8_t> mask);
    bool member(std::size_t i) const { return mask[i] != 0; }
    bool empty() const;
    std::vector<std::string> ids() const;
};

AxiomReport check_poset_axioms(const std::vector<std::string>& elements,
                               const std::vector<std::pair<std::string, std::string>>& leq_pairs);

bool is_upper_set(const FiniteSubset& s);
bool is_directed(const FiniteSubset& s);

/// Least upper bound inside the poset, or nullopt when none exists. Index form.
std::optional<std::size_t> brute_sup(const FiniteSubset& s);

/// Greatest lower bound computed by a direct scan.
std::optional<std::size_t> brute_inf(const FiniteSubset& s);

/// Greatest lower bound computed as the supremum of the set of all lower bounds.
/// Agrees with brute_inf on complete lattices; exposed separately for cross-checks.
std::optional<std::size_t> brute_inf_via_sup(const FiniteSubset& s);

/// All Scott opens of a finite poset. For finite posets every directed set
/// contains its supremum, so these are exactly the upper sets; enumeration is
/// in increasing bit-pattern order over the sorted elements.
std::vector<FiniteSubset> scott_opens_finite(const FinitePoset& p, std::size_t max_elements = 12);

/// Componentwise product order on the cartesian product of the carriers.
FinitePoset product_poset(const FinitePoset& p, const FinitePoset& q);

/// Id of the product element built from component ids, and its inverse.
std::string product_id(const std::string& a, const std::string& b);
std::pair<std::string, std::string> split_product_id(const std::string& id);

/// f given as a table: table[i] is the codomain index of domain element i.
bool is_monotone(const FinitePoset& dom, const FinitePoset& cod,
                 const std::vector<std::size_t>& table);

/// Preimage of every upper set is an upper set. Coincides with monotonicity
/// on finite posets.
bool is_scott_continuous_finite(const FinitePoset& dom, const FinitePoset& cod,
                                const std::vector<std::size_t>& table);

/// Loads {"elements":[ids...],"leq":[[a,b],...]}, validating the axioms.
/// Throws std::invalid_argument with a diagnostic naming the violated axiom.
FinitePoset load_poset_json(const nlohmann::json& doc);

}  // namespace scottforge
