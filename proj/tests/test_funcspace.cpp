#include <doctest.h>

#include "helpers.hpp"
#include "scottforge/funcspace.hpp"

using namespace scottforge;
using sftest::antichain;
using sftest::chain;
using sftest::diamond;

namespace {

ElemJ pr(std::uint64_t i, std::uint64_t j) { return ElemJ::pair(i, j); }

std::vector<ElemZ> sample_z() {
    return {ElemZ::bottom(),
            ElemZ::top(),
            ElemZ::of(pr(0, 0), OpenJ::empty()),
            ElemZ::of(pr(1, 0), OpenJ::vset(FnRep::constant_zero())),
            ElemZ::of(ElemJ::pair(2, NatOrOmega::omega()), gi_chain(FnRep::constant_zero(), 1)),
            ElemZ::of(ElemJ::bot(), OpenJ::vset(FnRep(1, {3}, 2)))};
}

}  // namespace

TEST_CASE("leqC is the pointwise order and rejects mixed spaces") {
    auto c2 = chain(2);
    auto c3 = chain(3);
    const ContinuousFnFinite lo{&c2, &c3, {0, 1}};
    const ContinuousFnFinite hi{&c2, &c3, {1, 2}};
    CHECK(leqC(lo, hi));
    CHECK_FALSE(leqC(hi, lo));
    CHECK(leqC(lo, lo));

    auto c2_other = chain(2);
    const ContinuousFnFinite elsewhere{&c2_other, &c3, {0, 1}};
    CHECK_THROWS_AS(leqC(lo, elsewhere), std::invalid_argument);
}

TEST_CASE("enumeration lists exactly the monotone maps, in table order") {
    auto c2 = chain(2);
    auto a2 = antichain(2);
    auto d = diamond();

    CHECK(enumerate_continuous_finite(c2, c2).size() == 3);
    CHECK(enumerate_continuous_finite(a2, c2).size() == 4);
    CHECK(enumerate_continuous_finite(c2, a2).size() == 2);  // constants only
    CHECK(enumerate_continuous_finite(d, c2).size() == 6);   // upper sets of the diamond

    const auto fns = enumerate_continuous_finite(c2, c2);
    CHECK(fns.front().table == std::vector<std::size_t>{0, 0});
    CHECK(fns.back().table == std::vector<std::size_t>{1, 1});
    for (const auto& f : fns) CHECK(is_monotone(c2, c2, f.table));

    CHECK_THROWS_AS(enumerate_continuous_finite(d, d, 8), bound_exceeded);
}

TEST_CASE("directed_sup_fn is the pointwise least upper bound") {
    auto c2 = chain(2);
    auto c3 = chain(3);
    const std::vector<ContinuousFnFinite> fam = {{&c2, &c3, {0, 1}}, {&c2, &c3, {1, 1}}};
    const auto s = directed_sup_fn(fam);
    CHECK(s.table == std::vector<std::size_t>{1, 1});
    for (const auto& f : fam) CHECK(leqC(f, s));

    CHECK_THROWS_AS(directed_sup_fn({}), std::invalid_argument);

    auto a2 = antichain(2);
    const std::vector<ContinuousFnFinite> not_directed = {{&c2, &a2, {0, 0}}, {&c2, &a2, {1, 1}}};
    CHECK_THROWS_AS(directed_sup_fn(not_directed), std::invalid_argument);
}

TEST_CASE("bounded completeness of finite function spaces") {
    auto c2 = chain(2);
    auto d = diamond();
    const auto r = check_bounded_complete_finite(c2, c2);
    CHECK(r.ok);
    CHECK(r.function_count == 3);
    CHECK(r.exhaustive_subsets);

    CHECK(check_bounded_complete_finite(d, c2).ok);
    CHECK(check_bounded_complete_finite(c2, d).ok);

    // a larger space exercises the bounded-pair reduction
    auto c3 = chain(3);
    const auto big = check_bounded_complete_finite(antichain(3), c3);
    CHECK(big.ok);
    CHECK(big.function_count == 27);
    CHECK_FALSE(big.exhaustive_subsets);

    // the codomain must itself be bounded complete
    CHECK_THROWS_AS(check_bounded_complete_finite(c2, antichain(2)), std::invalid_argument);
}

TEST_CASE("symbolic functions evaluate as defined") {
    const ElemZ a = ElemZ::of(pr(0, 3), OpenJ::empty());
    const ElemZ b = ElemZ::of(pr(2, 1), OpenJ::vset(FnRep::constant_zero()));
    const ElemZPair x{a, b};
    CHECK(eval_symbolic(SymbolicFnZ::proj1(), x) == a);
    CHECK(eval_symbolic(SymbolicFnZ::proj2(), x) == b);
    CHECK(eval_symbolic(SymbolicFnZ::sup2_fn(), x) == sup2(a, b));
    CHECK(eval_symbolic(SymbolicFnZ::constant(a), x) == a);

    const SymbolicFnZ step = SymbolicFnZ::step_at({b, b}, a, ElemZ::top());
    CHECK(eval_symbolic(step, {b, b}) == a);
    CHECK(eval_symbolic(step, {ElemZ::bottom(), b}) == a);
    CHECK(eval_symbolic(step, {ElemZ::top(), b}) == ElemZ::top());
}

TEST_CASE("step_function dominates both arguments pointwise") {
    const SymbolicFnZ p1 = SymbolicFnZ::proj1();
    const SymbolicFnZ p2 = SymbolicFnZ::proj2();
    const auto points = sample_z();
    for (const auto& a : points)
        for (const auto& b : points) {
            const ElemZPair x0{a, b};
            const SymbolicFnZ s = step_function(p1, p2, x0);
            CHECK(eval_symbolic(s, x0) == sup2(a, b));
            for (const auto& c : points)
                for (const auto& e : points) {
                    const ElemZPair x{c, e};
                    CHECK(leqZ(eval_symbolic(p1, x0), eval_symbolic(s, x0)));
                    CHECK(leqZ(eval_symbolic(p2, x0), eval_symbolic(s, x0)));
                    // above the threshold it is top, so it bounds anything there
                    if (!(leqZ(c, a) && leqZ(e, b)))
                        CHECK(eval_symbolic(s, x) == ElemZ::top());
                }
        }
}

TEST_CASE("the bounded-completeness failure report holds end to end") {
    const BcFailureReport report = bc_failure_certificate();
    CHECK(report.ok);
    REQUIRE(report.items.size() == 5);
    for (const auto& item : report.items) CHECK(item.pass);
    CHECK(report.certificate.target == RefutationTarget::SupDiscontinuous);
    CHECK(report.certificate.chain_index == 1);

    nlohmann::json j = report;
    CHECK(j.at("ok") == true);
    CHECK(j.at("items").size() == 5);
    for (const auto& item : j.at("items")) CHECK(item.at("status") == "pass");
    CHECK(j.at("certificate").at("target") == "sup-discontinuous");
}
