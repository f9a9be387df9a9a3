/**
 * @file element.hpp
 * @brief Terms and elements of a free module S^r over S = R[x1..xn].
 *
 * An element stores its nonzero terms strictly descending under whichever
 * module order the surrounding computation uses; the leading term is always
 * terms.front().  Operations that cannot disturb relative term order
 * (scalar and single-term multiplication) live here, order-aware merging
 * lives in poly.hpp.
 */
#pragma once

#include "monomial.hpp"
#include "ring.hpp"

#include <stdexcept>
#include <vector>

namespace pirgb {

/// coeff * x^mono * e_basis, basis 0-based internally (rendered 1-based).
struct Term {
    RingElement coeff;
    Monomial mono;
    int basis = 0;

    bool operator==(const Term&) const = default;
};

inline bool same_position(const Term& a, const Term& b) {
    return a.basis == b.basis && a.mono == b.mono;
}

struct ModuleElement {
    RingSpec spec;
    int rank = 1;
    std::vector<Term> terms;  // strictly descending under the active order

    bool is_zero() const { return terms.empty(); }

    const Term& lead() const {
        if (terms.empty()) throw std::logic_error("lead() of zero element");
        return terms.front();
    }

    bool operator==(const ModuleElement& o) const {
        return spec == o.spec && rank == o.rank && terms == o.terms;
    }
};

inline ModuleElement zero_element(const RingSpec& spec, int rank) {
    ModuleElement f;
    f.spec = spec;
    f.rank = rank;
    return f;
}

inline ModuleElement from_term(const RingSpec& spec, int rank, Term t) {
    ModuleElement f = zero_element(spec, rank);
    if (!is_zero(t.coeff)) f.terms.push_back(std::move(t));
    return f;
}

/// c * f; terms whose coefficient collapses to zero are dropped, the
/// relative order of the survivors is unchanged.
inline ModuleElement scalar_mul(const RingElement& c, const ModuleElement& f) {
    ModuleElement out = zero_element(f.spec, f.rank);
    out.terms.reserve(f.terms.size());
    for (const Term& t : f.terms) {
        RingElement p = ring_mul(c, t.coeff, f.spec);
        if (!is_zero(p)) out.terms.push_back(Term{std::move(p), t.mono, t.basis});
    }
    return out;
}

/// (c * x^mono) * f; multiplicativity of monomial orders keeps the term list sorted.
inline ModuleElement term_mul(const RingElement& c, const Monomial& mono, const ModuleElement& f) {
    ModuleElement out = zero_element(f.spec, f.rank);
    out.terms.reserve(f.terms.size());
    for (const Term& t : f.terms) {
        RingElement p = ring_mul(c, t.coeff, f.spec);
        if (!is_zero(p)) out.terms.push_back(Term{std::move(p), mono_mul(mono, t.mono), t.basis});
    }
    return out;
}

inline ModuleElement negate(const ModuleElement& f) {
    ModuleElement out = zero_element(f.spec, f.rank);
    out.terms.reserve(f.terms.size());
    for (const Term& t : f.terms)
        out.terms.push_back(Term{ring_neg(t.coeff, f.spec), t.mono, t.basis});
    return out;
}

inline const RingElement& lead_coeff(const ModuleElement& f) { return f.lead().coeff; }
inline const Monomial& lead_mono(const ModuleElement& f) { return f.lead().mono; }
inline int lead_basis(const ModuleElement& f) { return f.lead().basis; }

}  // namespace pirgb
