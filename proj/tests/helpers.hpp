#pragma once

// Shared builders and generators for the test suites.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "scottforge/core_order.hpp"
#include "scottforge/opens.hpp"
#include "scottforge/product.hpp"

namespace sftest {

using scottforge::FinitePoset;

inline FinitePoset chain(std::size_t n) {
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < n; ++i) ids.push_back("c" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> pairs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) pairs.emplace_back(ids[i], ids[j]);
    return FinitePoset(ids, pairs);
}

inline FinitePoset antichain(std::size_t n) {
    std::vector<std::string> ids;
    std::vector<std::pair<std::string, std::string>> pairs;
    for (std::size_t i = 0; i < n; ++i) {
        ids.push_back("a" + std::to_string(i));
        pairs.emplace_back(ids.back(), ids.back());
    }
    return FinitePoset(ids, pairs);
}

// bot < a,b < top with a,b incomparable.
inline FinitePoset diamond() {
    std::vector<std::string> ids = {"bot", "a", "b", "top"};
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const auto& e : ids) {
        pairs.emplace_back(e, e);
        pairs.emplace_back("bot", e);
        pairs.emplace_back(e, "top");
    }
    return FinitePoset(ids, pairs);
}

// All posets on <= max_size elements up to isomorphism, deterministic order.
// Element ids are e0, e1, ...
inline std::vector<FinitePoset> small_poset_catalog(std::size_t max_size = 3) {
    std::vector<FinitePoset> catalog;
    for (std::size_t n = 1; n <= max_size; ++n) {
        std::vector<std::vector<std::uint8_t>> seen;  // canonical matrices
        std::vector<std::size_t> perm(n);
        const std::size_t cells = n * n;
        for (std::uint64_t bits = 0; bits < (1ull << cells); ++bits) {
            std::vector<std::uint8_t> rel(cells);
            for (std::size_t c = 0; c < cells; ++c) rel[c] = (bits >> c) & 1;
            // poset axioms
            bool ok = true;
            for (std::size_t x = 0; x < n && ok; ++x)
                if (!rel[x * n + x]) ok = false;
            for (std::size_t x = 0; x < n && ok; ++x)
                for (std::size_t y = 0; y < n && ok; ++y) {
                    if (!rel[x * n + y]) continue;
                    if (x != y && rel[y * n + x]) ok = false;
                    for (std::size_t z = 0; z < n && ok; ++z)
                        if (rel[y * n + z] && !rel[x * n + z]) ok = false;
                }
            if (!ok) continue;
            // canonical form: lexicographically least matrix over all permutations
            std::iota(perm.begin(), perm.end(), 0);
            std::vector<std::uint8_t> best = rel;
            do {
                std::vector<std::uint8_t> permuted(cells);
                for (std::size_t x = 0; x < n; ++x)
                    for (std::size_t y = 0; y < n; ++y)
                        permuted[x * n + y] = rel[perm[x] * n + perm[y]];
                if (permuted < best) best = permuted;
            } while (std::next_permutation(perm.begin(), perm.end()));
            if (std::find(seen.begin(), seen.end(), best) != seen.end()) continue;
            seen.push_back(best);
            std::vector<std::string> ids;
            for (std::size_t i = 0; i < n; ++i) ids.push_back("e" + std::to_string(i));
            std::vector<std::pair<std::string, std::string>> pairs;
            for (std::size_t x = 0; x < n; ++x)
                for (std::size_t y = 0; y < n; ++y)
                    if (best[x * n + y]) pairs.emplace_back(ids[x], ids[y]);
            catalog.emplace_back(ids, pairs);
        }
    }
    return catalog;
}

// Finite posets where every subset (including the empty one) has a supremum.
inline bool is_complete_lattice(const FinitePoset& p) {
    if (p.size() > 12) return false;
    for (std::uint64_t bits = 0; bits < (1ull << p.size()); ++bits) {
        std::vector<std::uint8_t> mask(p.size(), 0);
        for (std::size_t i = 0; i < p.size(); ++i) mask[i] = (bits >> i) & 1;
        if (!scottforge::brute_sup(scottforge::FiniteSubset::from_mask(p, std::move(mask))))
            return false;
    }
    return true;
}

inline bool is_bounded_complete(const FinitePoset& p) {
    if (p.size() > 12) return false;
    for (std::uint64_t bits = 0; bits < (1ull << p.size()); ++bits) {
        std::vector<std::uint8_t> mask(p.size(), 0);
        for (std::size_t i = 0; i < p.size(); ++i) mask[i] = (bits >> i) & 1;
        auto s = scottforge::FiniteSubset::from_mask(p, mask);
        bool bounded = false;
        for (std::size_t u = 0; u < p.size() && !bounded; ++u) {
            bounded = true;
            for (std::size_t i = 0; i < p.size() && bounded; ++i)
                if (s.member(i) && !p.leq(i, u)) bounded = false;
        }
        if (bounded && !scottforge::brute_sup(s)) return false;
    }
    return true;
}

inline scottforge::FnRep random_fnrep(std::mt19937_64& rng, bool start_at_zero = false) {
    std::uniform_int_distribution<std::uint64_t> start_dist(0, 3);
    std::uniform_int_distribution<std::uint64_t> len_dist(0, 5);
    std::uniform_int_distribution<std::uint64_t> val_dist(0, 6);
    const std::uint64_t start = start_at_zero ? 0 : start_dist(rng);
    std::vector<std::uint64_t> prefix(len_dist(rng));
    for (auto& v : prefix) v = val_dist(rng);
    return scottforge::FnRep(start, std::move(prefix), val_dist(rng));
}

inline scottforge::ElemJ random_elem(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> kind(0, 9);
    std::uniform_int_distribution<std::uint64_t> coord(0, 8);
    const int k = kind(rng);
    if (k == 0) return scottforge::ElemJ::bot();
    if (k == 1) return scottforge::ElemJ::top();
    if (k == 2) return scottforge::ElemJ::pair(coord(rng), scottforge::NatOrOmega::omega());
    return scottforge::ElemJ::pair(coord(rng), coord(rng));
}

// A random element above x, for upward-closure sampling.
inline scottforge::ElemJ random_above(std::mt19937_64& rng, const scottforge::ElemJ& x) {
    using scottforge::ElemJ;
    using scottforge::NatOrOmega;
    std::uniform_int_distribution<int> kind(0, 5);
    std::uniform_int_distribution<std::uint64_t> bump(0, 4);
    if (x.tag == ElemJ::Tag::Top) return ElemJ::top();
    if (x.tag == ElemJ::Tag::Bot) return random_elem(rng);
    switch (kind(rng)) {
        case 0:
            return ElemJ::top();
        case 1:
            return ElemJ::pair(x.i + bump(rng), NatOrOmega::omega());
        default:
            if (x.j.is_omega()) return ElemJ::pair(x.i + bump(rng), NatOrOmega::omega());
            return ElemJ::pair(x.i, NatOrOmega::nat(x.j.nat_value() + bump(rng)));
    }
}

}  // namespace sftest
