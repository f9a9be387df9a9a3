/**
 * @file poly.hpp
 * @brief Order-aware module element arithmetic: normalization, merging
 *        addition, scalar-polynomial multiplication, substitution.
 */
#pragma once

#include "element.hpp"
#include "order.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace pirgb {

/// Canonicalize a raw term soup: reduce coefficients, merge equal monomials,
/// drop zeros, sort strictly descending under the order.
inline ModuleElement make_element(const RingSpec& spec, int rank, std::vector<Term> raw,
                                  const OrderSpec& o) {
    for (Term& t : raw) {
        t.coeff = normalize(t.coeff.c, spec);
        if (t.basis < 0 || t.basis >= rank)
            throw std::invalid_argument("make_element: basis index out of range");
        if (t.mono.size() != o.var_order.size())
            throw std::invalid_argument("make_element: variable count mismatch");
    }
    std::sort(raw.begin(), raw.end(),
              [&](const Term& a, const Term& b) { return compare_terms(a, b, o) > 0; });
    ModuleElement out = zero_element(spec, rank);
    out.terms.reserve(raw.size());
    for (Term& t : raw) {
        if (!out.terms.empty() && same_position(out.terms.back(), t)) {
            out.terms.back().coeff = ring_add(out.terms.back().coeff, t.coeff, spec);
            if (is_zero(out.terms.back().coeff)) out.terms.pop_back();
        } else if (!is_zero(t.coeff)) {
            out.terms.push_back(std::move(t));
        }
    }
    return out;
}

/// Merge-add of two elements sorted under the same order.
inline ModuleElement add(const ModuleElement& f, const ModuleElement& g, const OrderSpec& o) {
    if (f.spec != g.spec || f.rank != g.rank)
        throw std::invalid_argument("add: mismatched modules");
    ModuleElement out = zero_element(f.spec, f.rank);
    out.terms.reserve(f.terms.size() + g.terms.size());
    std::size_t i = 0, j = 0;
    while (i < f.terms.size() && j < g.terms.size()) {
        int c = compare_terms(f.terms[i], g.terms[j], o);
        if (c > 0) {
            out.terms.push_back(f.terms[i++]);
        } else if (c < 0) {
            out.terms.push_back(g.terms[j++]);
        } else {
            RingElement s = ring_add(f.terms[i].coeff, g.terms[j].coeff, f.spec);
            if (!is_zero(s)) out.terms.push_back(Term{std::move(s), f.terms[i].mono, f.terms[i].basis});
            ++i; ++j;
        }
    }
    for (; i < f.terms.size(); ++i) out.terms.push_back(f.terms[i]);
    for (; j < g.terms.size(); ++j) out.terms.push_back(g.terms[j]);
    return out;
}

inline ModuleElement sub(const ModuleElement& f, const ModuleElement& g, const OrderSpec& o) {
    return add(f, negate(g), o);
}

/// p * f for a scalar polynomial p (a rank-1 element).
inline ModuleElement scalar_poly_mul(const ModuleElement& p, const ModuleElement& f,
                                     const OrderSpec& o) {
    if (p.rank != 1) throw std::invalid_argument("scalar_poly_mul: scalar factor must have rank 1");
    ModuleElement acc = zero_element(f.spec, f.rank);
    for (const Term& t : p.terms) acc = add(acc, term_mul(t.coeff, t.mono, f), o);
    return acc;
}

/// Product of two scalar polynomials.
inline ModuleElement poly_mul(const ModuleElement& p, const ModuleElement& q, const OrderSpec& o) {
    return scalar_poly_mul(p, q, o);
}

/// Image of an element of the free module L = S^m under g_k -> gens[k];
/// the result lives in the gens' ambient module and order.
inline ModuleElement substitute(const ModuleElement& rel, const std::vector<ModuleElement>& gens,
                                const OrderSpec& ambient_order) {
    if (rel.rank != static_cast<int>(gens.size()))
        throw std::invalid_argument("substitute: rank does not match generator count");
    if (gens.empty()) throw std::invalid_argument("substitute: no generators");
    ModuleElement acc = zero_element(gens.front().spec, gens.front().rank);
    for (const Term& t : rel.terms)
        acc = add(acc, term_mul(t.coeff, t.mono, gens[static_cast<std::size_t>(t.basis)]),
                  ambient_order);
    return acc;
}

}  // namespace pirgb
