/**
 * @file groebner.hpp
 * @brief S_R-elements, annihilator elements, Buchberger's algorithm, the
 *        Gröbner criterion, and basis minimization over product rings.
 *
 * A finite list G is a Gröbner basis of the module it generates iff every
 * defined S_R(f_i, f_j) and every ann(lc(f_i))·f_i reduces to zero modulo G.
 * Buchberger's algorithm appends non-zero remainders of these critical
 * elements until the list is closed under the criterion.
 *
 * Scheduling is deterministic: pairs are processed FIFO in order of
 * discovery ((i,k) for i < k enqueued when element k arrives); after each
 * pair the annihilator elements of its two members run, once per member.
 * Elements never reached by a pair (a lone generator) get their annihilator
 * processed in a final sweep.  A last cosmetic pass scales every element so
 * its leading coefficient has unit part 1 in each component.
 */
#pragma once

#include "division.hpp"

#include <cstddef>
#include <deque>
#include <stdexcept>
#include <utility>
#include <vector>

namespace pirgb {

struct SRParts {
    RingElement left, right;
    Monomial mono_left, mono_right;
};

// Componentwise: if a_i = 0 or b_i = 0 both outputs are 0 there; otherwise
// left_i = lcm(d_a, d_b)/d_a and right_i = (lcm(d_a, d_b)/d_b)·u_a·u_b⁻¹ in
// unit-divisor coordinates, so that left·a = right·b exactly.
inline std::pair<RingElement, RingElement> sr_coefficients(const RingElement& a,
                                                            const RingElement& b,
                                                            const RingSpec& spec) {
    RingElement left = ring_zero(spec), right = ring_zero(spec);
    UnitDivisorForm fa = unit_divisor_form(a, spec), fb = unit_divisor_form(b, spec);
    for (std::size_t i = 0; i < spec.moduli.size(); ++i) {
        if (a.c[i] == 0 || b.c[i] == 0) continue;
        const Int& n = spec.moduli[i];
        Int l = detail::lcm_int(fa.divisor[i], fb.divisor[i]);
        Int lv = l / fa.divisor[i];
        Int rv = (l / fb.divisor[i]) * fa.unit.c[i] *
                 (n == 0 ? fb.unit.c[i] : detail::mod_inverse(fb.unit.c[i], n));
        left.c[i] = n == 0 ? lv : detail::mod_floor(lv, n);
        right.c[i] = n == 0 ? rv : detail::mod_floor(rv, n);
    }
    return {left, right};
}

inline std::optional<SRParts> s_r_parts(const ModuleElement& f, const ModuleElement& g) {
    const Term& tf = f.lead();
    const Term& tg = g.lead();
    if (tf.basis != tg.basis) return std::nullopt;
    Monomial l = mono_lcm(tf.mono, tg.mono);
    auto [left, right] = sr_coefficients(tf.coeff, tg.coeff, f.spec);
    return SRParts{left, right, *mono_div(l, tf.mono), *mono_div(l, tg.mono)};
}

inline std::optional<ModuleElement> s_r_element(const ModuleElement& f, const ModuleElement& g,
                                                const OrderSpec& o) {
    auto p = s_r_parts(f, g);
    if (!p) return std::nullopt;
    return sub(term_mul(p->left, p->mono_left, f), term_mul(p->right, p->mono_right, g), o);
}

// annihilator(lc(f))·f; the zero element when lc(f) is a nonzero divisor.
inline ModuleElement ann_element(const ModuleElement& f, const OrderSpec&) {
    return scalar_mul(annihilator(f.lead().coeff, f.spec), f);
}

struct CriticalElement {
    enum class Kind { pair, ann };
    Kind kind = Kind::pair;
    std::size_t alpha = 0, beta = 0;  // beta == alpha for ann kind
    ModuleElement value;
    Term u_left, u_right;  // scalar terms forming value (u_right unused for ann)
};

// All defined S_R pairs (i < j) plus all annihilator elements whose
// annihilator coefficient is nonzero, in (alpha, beta) order with ann(alpha)
// after the pairs (alpha, *).
inline std::vector<CriticalElement> critical_elements(const std::vector<ModuleElement>& basis,
                                                      const OrderSpec& o) {
    std::vector<CriticalElement> out;
    const std::size_t m = basis.size();
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = a + 1; b < m; ++b) {
            auto p = s_r_parts(basis[a], basis[b]);
            if (!p) continue;
            CriticalElement ce;
            ce.kind = CriticalElement::Kind::pair;
            ce.alpha = a;
            ce.beta = b;
            ce.value = sub(term_mul(p->left, p->mono_left, basis[a]),
                           term_mul(p->right, p->mono_right, basis[b]), o);
            ce.u_left = Term{p->left, p->mono_left, 0};
            ce.u_right = Term{p->right, p->mono_right, 0};
            out.push_back(std::move(ce));
        }
        RingElement ann = annihilator(basis[a].lead().coeff, basis[a].spec);
        if (is_zero(ann)) continue;
        CriticalElement ce;
        ce.kind = CriticalElement::Kind::ann;
        ce.alpha = ce.beta = a;
        ce.value = scalar_mul(ann, basis[a]);
        ce.u_left = Term{ann, mono_one(basis[a].lead().mono.size()), 0};
        ce.u_right = Term{ring_zero(basis[a].spec), mono_one(basis[a].lead().mono.size()), 0};
        out.push_back(std::move(ce));
    }
    return out;
}

struct GroebnerBasis {
    RingSpec spec;
    int rank = 1;
    OrderSpec order;
    std::vector<ModuleElement> elements;
    std::vector<ModuleElement> inputs;  // the nonzero generators, as given
    // transcript[k][t]: scalar polynomial with elements[k] = sum_t transcript[k][t]·inputs[t]
    std::vector<std::vector<ModuleElement>> transcript;
    bool certified = false;
};

struct BuchbergerOptions {
    std::size_t max_additions = 4096;
};

inline GroebnerBasis buchberger(const std::vector<ModuleElement>& raw, const OrderSpec& o,
                                const BuchbergerOptions& opt = {}) {
    std::vector<ModuleElement> gens;
    for (const auto& g : raw)
        if (!g.is_zero()) gens.push_back(g);
    if (gens.empty()) throw std::invalid_argument("buchberger: no nonzero generators");
    const RingSpec spec = gens.front().spec;
    const int rank = gens.front().rank;
    for (const auto& g : gens)
        if (g.rank != rank || g.spec.moduli != spec.moduli)
            throw std::invalid_argument("buchberger: generators share no common ambient module");
    const OrderSpec so = scalar_order(o);
    const std::size_t m = gens.size();

    GroebnerBasis gb;
    gb.spec = spec;
    gb.rank = rank;
    gb.order = o;
    gb.inputs = gens;

    std::deque<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<bool> ann_done;
    std::size_t additions = 0;

    auto append = [&](ModuleElement e, std::vector<ModuleElement> rep) {
        std::size_t k = gb.elements.size();
        for (std::size_t i = 0; i < k; ++i) pairs.emplace_back(i, k);
        gb.elements.push_back(std::move(e));
        gb.transcript.push_back(std::move(rep));
        ann_done.push_back(false);
    };
    for (std::size_t t = 0; t < m; ++t) {
        std::vector<ModuleElement> rep(m, zero_element(spec, 1));
        rep[t] = from_term(spec, 1, Term{ring_one(spec), mono_one(gens[t].terms.front().mono.size()), 0});
        append(gens[t], std::move(rep));
    }

    auto reduce_and_append = [&](const ModuleElement& e, std::vector<ModuleElement> rep) {
        if (e.is_zero()) return;
        DivisionResult d = divide(e, gb.elements, o);
        if (d.remainder.is_zero()) return;
        for (std::size_t j = 0; j < gb.elements.size(); ++j) {
            if (d.quotients[j].is_zero()) continue;
            for (std::size_t t = 0; t < m; ++t)
                rep[t] = sub(rep[t], scalar_poly_mul(d.quotients[j], gb.transcript[j][t], so), so);
        }
        if (++additions > opt.max_additions)
            throw std::runtime_error("buchberger: iteration ceiling exceeded (" +
                                     std::to_string(opt.max_additions) + " additions)");
        append(d.remainder, std::move(rep));
    };
    auto process_ann = [&](std::size_t k) {
        if (ann_done[k]) return;
        ann_done[k] = true;
        RingElement a = annihilator(gb.elements[k].lead().coeff, spec);
        if (is_zero(a)) return;
        std::vector<ModuleElement> rep;
        rep.reserve(m);
        for (std::size_t t = 0; t < m; ++t) rep.push_back(scalar_mul(a, gb.transcript[k][t]));
        reduce_and_append(scalar_mul(a, gb.elements[k]), std::move(rep));
    };

    while (true) {
        if (!pairs.empty()) {
            auto [i, j] = pairs.front();
            pairs.pop_front();
            if (auto p = s_r_parts(gb.elements[i], gb.elements[j])) {
                ModuleElement e = sub(term_mul(p->left, p->mono_left, gb.elements[i]),
                                      term_mul(p->right, p->mono_right, gb.elements[j]), o);
                std::vector<ModuleElement> rep;
                rep.reserve(m);
                for (std::size_t t = 0; t < m; ++t)
                    rep.push_back(sub(term_mul(p->left, p->mono_left, gb.transcript[i][t]),
                                      term_mul(p->right, p->mono_right, gb.transcript[j][t]), so));
                reduce_and_append(e, std::move(rep));
            }
            process_ann(i);
            process_ann(j);
        } else {
            std::size_t k = 0;
            while (k < gb.elements.size() && ann_done[k]) ++k;
            if (k == gb.elements.size()) break;
            process_ann(k);
        }
    }

    for (std::size_t k = 0; k < gb.elements.size(); ++k) {
        UnitDivisorForm udf = unit_divisor_form(gb.elements[k].lead().coeff, spec);
        RingElement ui = unit_inverse(udf.unit, spec);
        if (ui.c == ring_one(spec).c) continue;
        gb.elements[k] = scalar_mul(ui, gb.elements[k]);
        for (std::size_t t = 0; t < m; ++t)
            gb.transcript[k][t] = scalar_mul(ui, gb.transcript[k][t]);
    }

    gb.certified = true;
    return gb;
}

struct CriterionFailure {
    CriticalElement critical;
    ModuleElement remainder;
};

struct CriterionReport {
    bool passed = true;
    std::vector<CriterionFailure> failures;
};

inline CriterionReport criterion_check(const std::vector<ModuleElement>& basis,
                                       const OrderSpec& o) {
    CriterionReport rep;
    for (auto& ce : critical_elements(basis, o)) {
        DivisionResult d = divide(ce.value, basis, o);
        if (d.remainder.is_zero()) continue;
        rep.passed = false;
        rep.failures.push_back(CriterionFailure{ce, std::move(d.remainder)});
    }
    return rep;
}

// Drops every element whose leading term lies in the leading-term module of
// the rest (coefficient membership among the dividing leads, checked
// jointly) and which reduces to zero modulo the rest; repeats to a fixpoint.
inline GroebnerBasis minimize(const GroebnerBasis& gb) {
    if (!gb.certified) throw std::invalid_argument("minimize: input basis is not certified");
    GroebnerBasis out = gb;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t a = 0; a < out.elements.size();) {
            const Term& lt = out.elements[a].lead();
            std::vector<RingElement> lcs;
            std::vector<ModuleElement> rest;
            for (std::size_t b = 0; b < out.elements.size(); ++b) {
                if (b == a) continue;
                rest.push_back(out.elements[b]);
                const Term& lb = out.elements[b].lead();
                if (lb.basis == lt.basis && mono_divides(lb.mono, lt.mono))
                    lcs.push_back(lb.coeff);
            }
            if (!lcs.empty() && solve_membership(lt.coeff, lcs, gb.spec) &&
                reduces_to_zero(out.elements[a], rest, gb.order)) {
                out.elements.erase(out.elements.begin() + static_cast<std::ptrdiff_t>(a));
                out.transcript.erase(out.transcript.begin() + static_cast<std::ptrdiff_t>(a));
                changed = true;
            } else {
                ++a;
            }
        }
    }
    if (!criterion_check(out.elements, gb.order).passed)
        throw std::logic_error("minimize: internal error, pruned basis fails the criterion");
    out.certified = true;
    return out;
}

}  // namespace pirgb
