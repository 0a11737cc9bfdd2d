#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "scottforge/product.hpp"

namespace scottforge {

/// Monotone (equivalently Scott continuous) total map between finite posets,
/// given by a table over the domain's element order. Posets are referenced,
/// not owned; maps compare spaces by identity.
struct ContinuousFnFinite {
    const FinitePoset* domain = nullptr;
    const FinitePoset* codomain = nullptr;
    std::vector<std::size_t> table;
};

/// Pointwise order on finite function tables. Throws on mismatched spaces.
bool leqC(const ContinuousFnFinite& f, const ContinuousFnFinite& g);

/// All monotone total maps x -> z, ordered lexicographically by table.
std::vector<ContinuousFnFinite> enumerate_continuous_finite(const FinitePoset& x,
                                                            const FinitePoset& z,
                                                            std::uint64_t max_count = 1u << 20);

/// Pointwise supremum of a leqC-directed family; the least upper bound.
/// Throws std::invalid_argument on non-directed input or when a pointwise
/// supremum is missing in the codomain.
ContinuousFnFinite directed_sup_fn(const std::vector<ContinuousFnFinite>& fs);

struct BoundedCompleteReport {
    bool ok = false;
    std::uint64_t function_count = 0;
    bool exhaustive_subsets = false;  // full subset sweep vs. the bounded-pair reduction
    std::string detail;
};

/// Verifies that every leqC-bounded subset of the enumerated C(x,z) has a
/// least upper bound equal to the pointwise supremum. Sweeps all subsets when
/// 2^|C| is small; otherwise checks the least element plus all bounded pairs,
/// which is equivalent on finite posets (iterated binary lubs).
BoundedCompleteReport check_bounded_complete_finite(const FinitePoset& x, const FinitePoset& z,
                                                    std::uint64_t subset_sweep_limit = 1u << 16);

/// Point of X = Z x Z, the domain of the symbolic functions.
struct ElemZPair {
    ElemZ first, second;
    friend bool operator==(const ElemZPair&, const ElemZPair&) = default;
};

/// Total functions X = Z x Z -> Z that the bounded-completeness argument uses:
/// the projections, the binary supremum, step functions, and constants.
/// StepAt returns value on the componentwise down-set of x0 (the closure of
/// {x0} in both candidate topologies) and top elsewhere.
class SymbolicFnZ {
public:
    enum class Kind { Proj1, Proj2, Sup2, StepAt, ConstFn };

    static SymbolicFnZ proj1() { return SymbolicFnZ(Kind::Proj1); }
    static SymbolicFnZ proj2() { return SymbolicFnZ(Kind::Proj2); }
    static SymbolicFnZ sup2_fn() { return SymbolicFnZ(Kind::Sup2); }
    static SymbolicFnZ step_at(ElemZPair x0, ElemZ value, ElemZ top);
    static SymbolicFnZ constant(ElemZ value);

    Kind kind() const { return kind_; }
    const ElemZPair& threshold() const { return x0_; }
    const ElemZ& value() const { return value_; }
    const ElemZ& top_value() const { return top_; }

private:
    explicit SymbolicFnZ(Kind k) : kind_(k) {}
    Kind kind_;
    ElemZPair x0_;
    ElemZ value_;
    ElemZ top_ = ElemZ::top();
};

ElemZ eval_symbolic(const SymbolicFnZ& f, const ElemZPair& x);

/// Step function of the supremum argument: value sup2(f(x0), g(x0)) on the
/// down-set of x0, top of Z elsewhere. Dominates both f and g pointwise.
SymbolicFnZ step_function(const SymbolicFnZ& f, const SymbolicFnZ& g, const ElemZPair& x0);

/// One checkable item of the bounded-completeness failure report.
struct BcItem {
    int id = 0;
    std::string claim;
    bool pass = false;
    nlohmann::json evidence;
};

struct BcFailureReport {
    std::vector<BcItem> items;
    RefutationCertificate certificate;
    bool ok = false;
};

/// Full argument chain that C(Z x Z, Z) is not bounded complete:
/// (1) the projections are continuous (sampled preimage witnesses),
/// (2) their pointwise supremum is the binary supremum map,
/// (3) that map is discontinuous (embedded refutation certificate),
/// (4) hence {proj1, proj2} has no supremum - an inference record.
BcFailureReport bc_failure_certificate();
BcFailureReport bc_failure_certificate(const ProductOpenZ& d1, const ProductOpenZ& d2);

void to_json(nlohmann::json& j, const BcItem& item);
void to_json(nlohmann::json& j, const BcFailureReport& report);

}  // namespace scottforge
