/**
 * @file resolution.hpp
 * @brief Iterated syzygies: free resolutions with termination, length-bound
 *        checking, and periodicity detection.
 *
 * Step 0 computes a Gröbner basis of the input (minimized when collapsing);
 * step k+1 is a Schreyer-order Gröbner basis of the syzygies of step k,
 * optionally collapsed by leading monomial.  The loop stops when a step has
 * no relations (finite), when two consecutive relation steps carry the same
 * leading-term data up to a modulus-preserving permutation of the ring
 * components (periodic), or when max_length free modules have been built
 * (truncated).
 *
 * When every leading coefficient of the step-0 basis is a nonzero divisor
 * the resolution is expected to be finite of length at most n+1 (n = number
 * of variables); a run that contradicts this is flagged, never hidden.
 */
#pragma once

#include "syzygy.hpp"

#include <algorithm>

namespace pirgb {

struct ScalarMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<std::vector<ModuleElement>> entries;  // [row][col], scalar polynomials
};

enum class ResolutionStatus { finite, truncated, periodic };

struct Resolution {
    RingSpec spec;
    std::size_t nvars = 0;
    std::vector<std::size_t> ranks;           // ranks of F_0, F_1, ...
    ScalarMatrix presentation;                // ambient rank x ranks[0]; columns = step-0 basis
    std::vector<ScalarMatrix> differentials;  // [k]: ranks[k] x ranks[k+1]
    std::vector<GroebnerBasis> steps;         // basis driving each free module
    ResolutionStatus status = ResolutionStatus::finite;
    std::size_t length = 0;                   // ranks.size() - 1
    std::size_t period_start = 0, period_length = 0;  // meaningful when periodic
    bool bound_applicable = false;            // step-0 leads are all nonzero divisors
    bool bound_violated = false;
};

namespace detail {

inline ScalarMatrix columns_matrix(const std::vector<ModuleElement>& elems, std::size_t rows,
                                   const RingSpec& spec, std::size_t nvars, const OrderSpec& so) {
    ScalarMatrix m;
    m.rows = rows;
    m.cols = elems.size();
    m.entries.assign(rows, std::vector<ModuleElement>(elems.size(), zero_element(spec, 1)));
    for (std::size_t c = 0; c < elems.size(); ++c) {
        std::vector<std::vector<Term>> buckets(rows);
        for (const Term& t : elems[c].terms)
            buckets[static_cast<std::size_t>(t.basis)].push_back(Term{t.coeff, t.mono, 0});
        for (std::size_t r = 0; r < rows; ++r)
            if (!buckets[r].empty()) m.entries[r][c] = make_element(spec, 1, buckets[r], so);
    }
    (void)nvars;
    return m;
}

// Leading-term data of a relation step: (coefficient components, monomial)
// per relation, compared as multisets up to a modulus-preserving permutation
// of the ring components.  Basis positions are deliberately ignored; the
// repetition is about shapes of the maps, not their labels.
inline bool same_lt_data(const std::vector<ModuleElement>& a, const std::vector<ModuleElement>& b,
                         const RingSpec& spec) {
    if (a.size() != b.size()) return false;
    const std::size_t p = spec.moduli.size();
    auto signature = [&](const std::vector<ModuleElement>& v, const std::vector<std::size_t>& perm) {
        std::vector<std::pair<std::vector<Int>, Monomial>> sig;
        sig.reserve(v.size());
        for (const auto& e : v) {
            const Term& lt = e.lead();
            std::vector<Int> cc(p);
            for (std::size_t i = 0; i < p; ++i) cc[i] = lt.coeff.c[perm[i]];
            sig.emplace_back(std::move(cc), lt.mono);
        }
        std::sort(sig.begin(), sig.end());
        return sig;
    };
    std::vector<std::size_t> identity(p);
    for (std::size_t i = 0; i < p; ++i) identity[i] = i;
    auto target = signature(a, identity);

    std::vector<std::size_t> perm = identity;
    do {
        bool ok = true;
        for (std::size_t i = 0; i < p && ok; ++i)
            if (spec.moduli[perm[i]] != spec.moduli[i]) ok = false;
        if (ok && signature(b, perm) == target) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace detail

inline Resolution resolve(const std::vector<ModuleElement>& gens, const OrderSpec& o,
                          std::size_t max_length, bool collapse,
                          const BuchbergerOptions& opt = {}) {
    if (max_length < 1) throw std::invalid_argument("resolve: max_length must be at least 1");
    GroebnerBasis g0 = buchberger(gens, o, opt);
    if (collapse) g0 = minimize(g0);

    Resolution res;
    res.spec = g0.spec;
    res.nvars = g0.elements.front().lead().mono.size();
    const OrderSpec so = scalar_order(o);
    res.presentation = detail::columns_matrix(g0.elements, static_cast<std::size_t>(g0.rank),
                                              g0.spec, res.nvars, so);
    res.ranks.push_back(g0.elements.size());
    res.steps.push_back(g0);

    res.bound_applicable = true;
    for (const auto& e : g0.elements)
        if (!is_zero(annihilator(e.lead().coeff, g0.spec))) res.bound_applicable = false;

    GroebnerBasis cur = std::move(g0);
    bool stopped = false;
    while (res.ranks.size() < max_length) {
        SyzygyBasis syz = syzygy_basis(cur);
        std::vector<ModuleElement> rel = syz.elements();
        if (rel.empty()) {
            res.status = ResolutionStatus::finite;
            stopped = true;
            break;
        }
        if (collapse) rel = collapse_same_lm(rel, syz.order);

        GroebnerBasis next;
        next.spec = cur.spec;
        next.rank = syz.rank;
        next.order = syz.order;
        next.elements = rel;
        next.inputs = rel;
        next.transcript.assign(rel.size(), std::vector<ModuleElement>(rel.size(), zero_element(cur.spec, 1)));
        for (std::size_t k = 0; k < rel.size(); ++k)
            next.transcript[k][k] =
                from_term(cur.spec, 1, Term{ring_one(cur.spec), mono_one(res.nvars), 0});
        next.certified = true;

        res.differentials.push_back(detail::columns_matrix(
            rel, static_cast<std::size_t>(syz.rank), cur.spec, res.nvars, so));
        res.ranks.push_back(rel.size());
        res.steps.push_back(next);

        if (res.steps.size() >= 3) {  // two relation steps exist
            const auto& prev = res.steps[res.steps.size() - 2].elements;
            if (detail::same_lt_data(rel, prev, cur.spec)) {
                res.status = ResolutionStatus::periodic;
                res.period_start = res.ranks.size() - 2;
                res.period_length = 1;
                stopped = true;
                break;
            }
        }
        cur = std::move(next);
    }
    if (!stopped) res.status = ResolutionStatus::truncated;
    res.length = res.ranks.size() - 1;

    if (res.bound_applicable) {
        const std::size_t bound = res.nvars + 1;
        if (res.status == ResolutionStatus::periodic)
            res.bound_violated = true;
        else if (res.status == ResolutionStatus::finite && res.length > bound)
            res.bound_violated = true;
        else if (res.status == ResolutionStatus::truncated && res.length > bound)
            res.bound_violated = true;
    }
    return res;
}

// Exact check that A·B is the zero matrix; used for adjacent differentials.
inline bool composes_to_zero(const ScalarMatrix& A, const ScalarMatrix& B, const RingSpec& spec,
                             const OrderSpec& so) {
    if (A.cols != B.rows) return false;
    for (std::size_t r = 0; r < A.rows; ++r)
        for (std::size_t c = 0; c < B.cols; ++c) {
            ModuleElement acc = zero_element(spec, 1);
            for (std::size_t t = 0; t < A.cols; ++t)
                acc = add(acc, poly_mul(A.entries[r][t], B.entries[t][c], so), so);
            if (!acc.is_zero()) return false;
        }
    return true;
}

}  // namespace pirgb
