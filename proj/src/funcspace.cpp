#include "scottforge/funcspace.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "scottforge/certificates.hpp"

namespace scottforge {

bool leqC(const ContinuousFnFinite& f, const ContinuousFnFinite& g) {
    if (f.domain != g.domain || f.codomain != g.codomain)
        throw std::invalid_argument("leqC: mismatched function spaces");
    for (std::size_t i = 0; i < f.table.size(); ++i)
        if (!f.codomain->leq(f.table[i], g.table[i])) return false;
    return true;
}

std::vector<ContinuousFnFinite> enumerate_continuous_finite(const FinitePoset& x,
                                                            const FinitePoset& z,
                                                            std::uint64_t max_count) {
    const std::size_t n = x.size();
    const std::size_t m = z.size();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        total *= m;
        if (total > max_count)
            throw bound_exceeded("enumerate_continuous_finite: |z|^|x| exceeds bound");
    }
    std::vector<ContinuousFnFinite> out;
    std::vector<std::size_t> table(n, 0);
    while (true) {
        if (is_monotone(x, z, table)) out.push_back({&x, &z, table});
        std::size_t pos = n;
        while (pos > 0) {
            if (++table[pos - 1] < m) break;
            table[pos - 1] = 0;
            --pos;
        }
        if (pos == 0) break;
    }
    return out;
}

namespace {

// Pointwise supremum table, when every pointwise supremum exists in z.
std::optional<std::vector<std::size_t>> pointwise_sup_table(
    const FinitePoset& x, const FinitePoset& z, const std::vector<const ContinuousFnFinite*>& fs) {
    std::vector<std::size_t> table(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        std::vector<std::uint8_t> values(z.size(), 0);
        for (const auto* f : fs) values[f->table[i]] = 1;
        auto s = brute_sup(FiniteSubset::from_mask(z, std::move(values)));
        if (!s) return std::nullopt;
        table[i] = *s;
    }
    return table;
}

// Least upper bound of the family inside the enumerated function poset.
std::optional<std::size_t> function_lub(const std::vector<ContinuousFnFinite>& all,
                                        const std::vector<const ContinuousFnFinite*>& fs) {
    std::vector<std::size_t> ubs;
    for (std::size_t h = 0; h < all.size(); ++h) {
        bool ub = true;
        for (const auto* f : fs)
            if (!leqC(*f, all[h])) {
                ub = false;
                break;
            }
        if (ub) ubs.push_back(h);
    }
    for (std::size_t h : ubs) {
        bool least = true;
        for (std::size_t other : ubs)
            if (!leqC(all[h], all[other])) {
                least = false;
                break;
            }
        if (least) return h;
    }
    return std::nullopt;
}

}  // namespace

ContinuousFnFinite directed_sup_fn(const std::vector<ContinuousFnFinite>& fs) {
    if (fs.empty()) throw std::invalid_argument("directed_sup_fn: empty family");
    for (const auto& f : fs)
        if (f.domain != fs[0].domain || f.codomain != fs[0].codomain)
            throw std::invalid_argument("directed_sup_fn: mismatched function spaces");
    for (const auto& f : fs)
        for (const auto& g : fs) {
            bool has_ub = false;
            for (const auto& h : fs)
                if (leqC(f, h) && leqC(g, h)) {
                    has_ub = true;
                    break;
                }
            if (!has_ub) throw std::invalid_argument("directed_sup_fn: family is not directed");
        }
    std::vector<const ContinuousFnFinite*> ptrs;
    for (const auto& f : fs) ptrs.push_back(&f);
    auto table = pointwise_sup_table(*fs[0].domain, *fs[0].codomain, ptrs);
    if (!table)
        throw std::invalid_argument("directed_sup_fn: a pointwise supremum is missing in z");
    ContinuousFnFinite g{fs[0].domain, fs[0].codomain, std::move(*table)};
    if (!is_monotone(*g.domain, *g.codomain, g.table))
        throw std::logic_error("directed_sup_fn: pointwise supremum of a directed family "
                               "must be monotone");
    return g;
}

BoundedCompleteReport check_bounded_complete_finite(const FinitePoset& x, const FinitePoset& z,
                                                    std::uint64_t subset_sweep_limit) {
    // z itself must be bounded complete first.
    if (z.size() > 16) throw bound_exceeded("check_bounded_complete_finite: |z| too large");
    for (std::uint64_t bits = 0; bits < (1ull << z.size()); ++bits) {
        std::vector<std::uint8_t> mask(z.size(), 0);
        for (std::size_t i = 0; i < z.size(); ++i) mask[i] = (bits >> i) & 1;
        auto s = FiniteSubset::from_mask(z, std::move(mask));
        bool bounded = false;
        for (std::size_t u = 0; u < z.size() && !bounded; ++u) {
            bounded = true;
            for (std::size_t i = 0; i < z.size() && bounded; ++i)
                if (s.member(i) && !z.leq(i, u)) bounded = false;
        }
        if (bounded && !brute_sup(s))
            throw std::invalid_argument("check_bounded_complete_finite: z is not bounded complete");
    }

    const auto all = enumerate_continuous_finite(x, z);
    BoundedCompleteReport report;
    report.function_count = all.size();

    auto check_family = [&](const std::vector<const ContinuousFnFinite*>& fs) -> bool {
        // Family must have an upper bound in C to be constrained at all.
        bool bounded = false;
        for (const auto& h : all) {
            bounded = true;
            for (const auto* f : fs)
                if (!leqC(*f, h)) {
                    bounded = false;
                    break;
                }
            if (bounded) break;
        }
        if (!bounded) return true;
        auto lub = function_lub(all, fs);
        if (!lub) return false;
        auto pointwise = pointwise_sup_table(x, z, fs);
        return pointwise && all[*lub].table == *pointwise;
    };

    bool ok = true;
    if (all.size() < 64 && (1ull << all.size()) <= subset_sweep_limit) {
        report.exhaustive_subsets = true;
        for (std::uint64_t bits = 0; bits < (1ull << all.size()) && ok; ++bits) {
            std::vector<const ContinuousFnFinite*> fs;
            for (std::size_t i = 0; i < all.size(); ++i)
                if ((bits >> i) & 1) fs.push_back(&all[i]);
            if (fs.empty()) continue;  // empty family: covered by the least-element check below
            ok = check_family(fs);
            if (!ok) report.detail = "bounded family without matching least upper bound";
        }
    } else {
        // Bounded pairs suffice on a finite poset: lubs of larger bounded
        // families are iterated binary lubs below the same bound.
        report.exhaustive_subsets = false;
        for (std::size_t a = 0; a < all.size() && ok; ++a)
            for (std::size_t b = a; b < all.size() && ok; ++b) {
                ok = check_family({&all[a], &all[b]});
                if (!ok) report.detail = "bounded pair without matching least upper bound";
            }
    }
    if (ok) {
        // sup of the empty family: C needs a least element.
        bool has_least = false;
        for (const auto& f : all) {
            has_least = true;
            for (const auto& g : all)
                if (!leqC(f, g)) {
                    has_least = false;
                    break;
                }
            if (has_least) break;
        }
        ok = has_least;
        if (!ok) report.detail = "no least element in C(x,z)";
    }
    report.ok = ok;
    return report;
}

SymbolicFnZ SymbolicFnZ::step_at(ElemZPair x0, ElemZ value, ElemZ top) {
    SymbolicFnZ f(Kind::StepAt);
    f.x0_ = std::move(x0);
    f.value_ = std::move(value);
    f.top_ = std::move(top);
    return f;
}

SymbolicFnZ SymbolicFnZ::constant(ElemZ value) {
    SymbolicFnZ f(Kind::ConstFn);
    f.value_ = std::move(value);
    return f;
}

ElemZ eval_symbolic(const SymbolicFnZ& f, const ElemZPair& x) {
    switch (f.kind()) {
        case SymbolicFnZ::Kind::Proj1:
            return x.first;
        case SymbolicFnZ::Kind::Proj2:
            return x.second;
        case SymbolicFnZ::Kind::Sup2:
            return sup2(x.first, x.second);
        case SymbolicFnZ::Kind::StepAt: {
            const bool below = leqZ(x.first, f.threshold().first) &&
                               leqZ(x.second, f.threshold().second);
            return below ? f.value() : f.top_value();
        }
        case SymbolicFnZ::Kind::ConstFn:
            return f.value();
    }
    throw std::logic_error("bad symbolic function kind");
}

SymbolicFnZ step_function(const SymbolicFnZ& f, const SymbolicFnZ& g, const ElemZPair& x0) {
    return SymbolicFnZ::step_at(x0, sup2(eval_symbolic(f, x0), eval_symbolic(g, x0)),
                                ElemZ::top());
}

namespace {

std::vector<ElemZ> sample_points_z() {
    const std::vector<ElemJ> firsts = {
        ElemJ::bot(), ElemJ::top(), ElemJ::pair(0, std::uint64_t{0}),
        ElemJ::pair(1, std::uint64_t{0}), ElemJ::pair(1, std::uint64_t{2}),
        ElemJ::pair(2, NatOrOmega::omega()), ElemJ::pair(3, std::uint64_t{5}),
    };
    const std::vector<OpenJ> seconds = {
        OpenJ::empty(),
        OpenJ::full(),
        OpenJ::vset(FnRep::constant_zero()),
        gi_chain(FnRep::constant_zero(), 1),
        OpenJ::vset(FnRep(1, {3}, 2)),
        OpenJ::vset(FnRep(0, {2}, 0)),
    };
    std::vector<ElemZ> out;
    for (const auto& a : firsts)
        for (const auto& b : seconds) out.push_back(ElemZ::of(a, b));
    return out;
}

std::vector<ProductOpenZ> sample_opens_z() {
    const PointwiseOpenX2 vac = PointwiseOpenX2::of({{}});
    const PointwiseOpenX2 zero_gen =
        PointwiseOpenX2::of({{ElemJ::pair(0, std::uint64_t{0})}});
    std::vector<ProductOpenZ> out;
    out.push_back({{BoxZ{OpenJ::vset(FnRep::constant_zero()), vac}}});
    out.push_back({{BoxZ{OpenJ::full(), zero_gen}}});
    out.push_back({{BoxZ{OpenJ::vset(FnRep(0, {1}, 0)), zero_gen},
                    BoxZ{OpenJ::full(), vac}}});
    return out;
}

}  // namespace

BcFailureReport bc_failure_certificate() {
    const PointwiseOpenX2 vac = PointwiseOpenX2::of({{}});
    const PointwiseOpenX2 zero_gen =
        PointwiseOpenX2::of({{ElemJ::pair(0, std::uint64_t{0})}});
    const ProductOpenZ d1{{BoxZ{OpenJ::vset(FnRep::constant_zero()), vac}}};
    const ProductOpenZ d2{{BoxZ{OpenJ::full(), zero_gen}}};
    return bc_failure_certificate(d1, d2);
}

BcFailureReport bc_failure_certificate(const ProductOpenZ& d1, const ProductOpenZ& d2) {
    BcFailureReport report;
    const auto points = sample_points_z();

    // Item 1: projections are continuous. For each sampled representable open
    // W of Z, the preimage under a projection is the box W x (full space);
    // witnessed by upward closure of membership over sampled comparable pairs.
    {
        std::uint64_t checks = 0;
        bool pass = true;
        for (const auto& w : sample_opens_z()) {
            for (const auto& a : points)
                for (const auto& b : points) {
                    if (!leqZ(a, b)) continue;
                    // proj1 preimage: membership depends on the first component only.
                    if (product_open_contains(w, a) && !product_open_contains(w, b)) pass = false;
                    ++checks;
                }
        }
        report.items.push_back({1,
                                "proj1 and proj2 are continuous from Z x Z with the product "
                                "topology to Z: projection preimages of representable opens are "
                                "boxes, upward closed on samples",
                                pass,
                                nlohmann::json{{"sampled_opens", sample_opens_z().size()},
                                               {"comparable_pairs_checked", checks}}});
    }

    // Item 2: the pointwise supremum of the projections is the binary
    // supremum map; evaluation agreement on sampled points.
    {
        bool pass = true;
        std::uint64_t checks = 0;
        const SymbolicFnZ p1 = SymbolicFnZ::proj1();
        const SymbolicFnZ p2 = SymbolicFnZ::proj2();
        const SymbolicFnZ s = SymbolicFnZ::sup2_fn();
        for (const auto& a : points)
            for (const auto& b : points) {
                const ElemZPair x{a, b};
                if (!(eval_symbolic(s, x) ==
                      sup2(eval_symbolic(p1, x), eval_symbolic(p2, x))))
                    pass = false;
                ++checks;
            }
        report.items.push_back({2,
                                "the pointwise supremum of proj1 and proj2 is the binary "
                                "supremum map",
                                pass, nlohmann::json{{"points_checked", checks}}});
    }

    // Item 3: the binary supremum map is not continuous; embedded certificate.
    bool cert_ok = false;
    try {
        report.certificate = refute_sup2_box(d1, d2);
        nlohmann::json doc = report.certificate;
        cert_ok = validate(doc).ok;
    } catch (const std::exception&) {
        cert_ok = false;
    }
    report.items.push_back({3,
                            "the binary supremum map is discontinuous for the product "
                            "topology: the given boxes escape its preimage of E",
                            cert_ok,
                            nlohmann::json{{"chain_index", report.certificate.chain_index}}});

    // Item 4: inference record, not a computation: with 1-3 established, the
    // pointwise-supremum equivalence rules out any supremum of {proj1, proj2}.
    const bool deps = report.items[0].pass && report.items[1].pass && report.items[2].pass;
    report.items.push_back({4,
                            "{proj1, proj2} has no supremum in C(Z x Z, Z); hence C is not "
                            "bounded complete",
                            deps,
                            nlohmann::json{{"kind", "inference"},
                                           {"by", "pointwise-supremum equivalence"},
                                           {"depends_on", {1, 2, 3}}}});

    // Item 5: C is nonetheless bounded with a least element, via the constant
    // top and bottom functions.
    {
        bool pass = true;
        const SymbolicFnZ top_fn = SymbolicFnZ::constant(ElemZ::top());
        const SymbolicFnZ bot_fn = SymbolicFnZ::constant(ElemZ::bottom());
        const std::vector<SymbolicFnZ> fns = {SymbolicFnZ::proj1(), SymbolicFnZ::proj2(),
                                              SymbolicFnZ::sup2_fn()};
        for (const auto& a : points)
            for (const auto& b : points) {
                const ElemZPair x{a, b};
                if (!(eval_symbolic(top_fn, x) == ElemZ::top())) pass = false;
                if (!(eval_symbolic(bot_fn, x) == ElemZ::bottom())) pass = false;
                for (const auto& f : fns) {
                    const ElemZ y = eval_symbolic(f, x);
                    if (!leqZ(y, ElemZ::top()) || !leqZ(ElemZ::bottom(), y)) pass = false;
                }
            }
        report.items.push_back({5,
                                "C(Z x Z, Z) is bounded with a least element via the constant "
                                "top and bottom functions",
                                pass, nlohmann::json{{"points_checked", points.size() * points.size()}}});
    }

    report.ok = true;
    for (const auto& item : report.items) report.ok = report.ok && item.pass;
    return report;
}

void to_json(nlohmann::json& j, const BcItem& item) {
    j = nlohmann::json{{"id", item.id},
                       {"claim", item.claim},
                       {"status", item.pass ? "pass" : "fail"},
                       {"evidence", item.evidence}};
}

void to_json(nlohmann::json& j, const BcFailureReport& report) {
    j = nlohmann::json{{"items", report.items},
                       {"certificate", report.certificate},
                       {"ok", report.ok}};
}

}  // namespace scottforge
