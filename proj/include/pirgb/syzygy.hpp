/**
 * @file syzygy.hpp
 * @brief Syzygy relations of a certified Gröbner basis and their Schreyer
 *        order, plus the Bézout collapse used between resolution steps.
 *
 * For a certified basis f_1..f_m, the relations
 *
 *   r_ab = u_ab·x^(w/lm(f_a))·g_a − u_ba·x^(w/lm(f_b))·g_b − sum_l q_l·g_l
 *   r_aa = ann(lc(f_a))·g_a − sum_l q_l·g_l
 *
 * (q's from dividing the corresponding critical element by the basis) form a
 * Gröbner basis of syz(f_1..f_m) under the Schreyer order induced by the
 * basis.  Relations that are identically zero are omitted; an r_aa is formed
 * whenever ann(lc(f_a)) is nonzero, even if the annihilator element itself
 * vanished.  Every emitted relation substitutes to zero and has the closed
 * form Schreyer leading term; both are asserted here.
 */
#pragma once

#include "groebner.hpp"

namespace pirgb {

struct SyzygyRelation {
    enum class Kind { pair, ann };
    Kind kind = Kind::pair;
    std::size_t alpha = 0, beta = 0;       // beta == alpha for ann kind
    ModuleElement element;                 // over the rank-m module with basis g_1..g_m
    std::vector<ModuleElement> quotients;  // the q's, scalar polynomials per basis element
};

struct SyzygyBasis {
    OrderSpec order;  // Schreyer order on the relation module
    int rank = 0;     // number of g's = size of the underlying basis
    std::vector<SyzygyRelation> relations;

    std::vector<ModuleElement> elements() const {
        std::vector<ModuleElement> out;
        out.reserve(relations.size());
        for (const auto& r : relations) out.push_back(r.element);
        return out;
    }
};

namespace detail {

// c·x^mono·g_basis − sum_l q_l·g_l as an element of the rank-m module.
inline ModuleElement relation_element(const RingElement& c, const Monomial& mono,
                                      std::size_t basis, const RingElement& c2,
                                      const Monomial& mono2, std::size_t basis2, bool has_second,
                                      const std::vector<ModuleElement>& quotients,
                                      const RingSpec& spec, int rank, const OrderSpec& o) {
    std::vector<Term> terms;
    terms.push_back(Term{c, mono, static_cast<int>(basis)});
    if (has_second) terms.push_back(Term{ring_neg(c2, spec), mono2, static_cast<int>(basis2)});
    for (std::size_t l = 0; l < quotients.size(); ++l)
        for (const Term& t : quotients[l].terms)
            terms.push_back(Term{ring_neg(t.coeff, spec), t.mono, static_cast<int>(l)});
    return make_element(spec, rank, terms, o);
}

}  // namespace detail

inline SyzygyBasis syzygy_basis(const GroebnerBasis& G) {
    if (!G.certified) throw std::invalid_argument("syzygy_basis: basis is not certified");
    const std::size_t m = G.elements.size();
    SyzygyBasis out;
    out.order = schreyer_order(G.elements, G.order);
    out.rank = static_cast<int>(m);

    auto check = [&](const SyzygyRelation& r, const RingElement& head, const Monomial& head_mono,
                     std::size_t head_basis) {
        const Term& lt = r.element.lead();
        if (lt.coeff.c != head.c || lt.mono != head_mono ||
            lt.basis != static_cast<int>(head_basis))
            throw std::logic_error("syzygy_basis: internal error, Schreyer leading term mismatch");
        if (!substitute(r.element, G.elements, G.order).is_zero())
            throw std::logic_error("syzygy_basis: internal error, relation does not annihilate");
    };

    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = a + 1; b < m; ++b) {
            auto p = s_r_parts(G.elements[a], G.elements[b]);
            if (!p) continue;
            ModuleElement s = sub(term_mul(p->left, p->mono_left, G.elements[a]),
                                  term_mul(p->right, p->mono_right, G.elements[b]), G.order);
            DivisionResult d = divide(s, G.elements, G.order);
            if (!d.remainder.is_zero())
                throw std::logic_error("syzygy_basis: internal error, critical element has nonzero remainder");
            SyzygyRelation rel;
            rel.kind = SyzygyRelation::Kind::pair;
            rel.alpha = a;
            rel.beta = b;
            rel.quotients = d.quotients;
            rel.element = detail::relation_element(p->left, p->mono_left, a, p->right,
                                                   p->mono_right, b, true, d.quotients, G.spec,
                                                   out.rank, out.order);
            if (rel.element.is_zero()) continue;
            check(rel, p->left, p->mono_left, a);
            out.relations.push_back(std::move(rel));
        }
        RingElement ann = annihilator(G.elements[a].lead().coeff, G.spec);
        if (is_zero(ann)) continue;
        DivisionResult d = divide(scalar_mul(ann, G.elements[a]), G.elements, G.order);
        if (!d.remainder.is_zero())
            throw std::logic_error("syzygy_basis: internal error, annihilator element has nonzero remainder");
        SyzygyRelation rel;
        rel.kind = SyzygyRelation::Kind::ann;
        rel.alpha = rel.beta = a;
        rel.quotients = d.quotients;
        Monomial one = mono_one(G.elements[a].lead().mono.size());
        rel.element = detail::relation_element(ann, one, a, ann, one, a, false, d.quotients,
                                               G.spec, out.rank, out.order);
        check(rel, ann, one, a);
        out.relations.push_back(std::move(rel));
    }
    return out;
}

// Groups relations sharing a leading module monomial and replaces each group
// by the Bézout combination of its members, whose leading coefficient is the
// gcd of theirs.  The result generates the same module and is again a
// Gröbner basis; both facts are re-verified and a failure is an internal
// error, never a silent return.
inline std::vector<ModuleElement> collapse_same_lm(const std::vector<ModuleElement>& rels,
                                                   const OrderSpec& o) {
    if (rels.empty()) return {};
    const RingSpec& spec = rels.front().spec;
    std::vector<std::vector<std::size_t>> groups;
    for (std::size_t t = 0; t < rels.size(); ++t) {
        const Term& lt = rels[t].lead();
        bool placed = false;
        for (auto& g : groups) {
            const Term& gl = rels[g.front()].lead();
            if (gl.basis == lt.basis && gl.mono == lt.mono) {
                g.push_back(t);
                placed = true;
                break;
            }
        }
        if (!placed) groups.push_back({t});
    }

    std::vector<ModuleElement> out;
    out.reserve(groups.size());
    for (const auto& g : groups) {
        if (g.size() == 1) {
            out.push_back(rels[g.front()]);
            continue;
        }
        std::vector<RingElement> lcs;
        lcs.reserve(g.size());
        for (std::size_t t : g) lcs.push_back(rels[t].lead().coeff);
        BezoutResult bz = bezout_combine(lcs, spec);
        ModuleElement combo = zero_element(spec, rels.front().rank);
        for (std::size_t u = 0; u < g.size(); ++u)
            combo = add(combo, scalar_mul(bz.multipliers[u], rels[g[u]]), o);
        const Term& gl = rels[g.front()].lead();
        if (combo.is_zero() || combo.lead().coeff.c != bz.gcd.c ||
            combo.lead().mono != gl.mono || combo.lead().basis != gl.basis)
            throw std::logic_error("collapse_same_lm: internal error, Bezout head lost");
        out.push_back(std::move(combo));
    }

    if (!criterion_check(out, o).passed)
        throw std::logic_error("collapse_same_lm: internal error, collapsed set fails the criterion");
    for (const auto& r : rels)
        if (!reduces_to_zero(r, out, o))
            throw std::logic_error("collapse_same_lm: internal error, original relation escapes");
    for (const auto& c : out)
        if (!reduces_to_zero(c, rels, o))
            throw std::logic_error("collapse_same_lm: internal error, collapsed element escapes");
    return out;
}

}  // namespace pirgb
