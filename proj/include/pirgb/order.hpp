/**
 * @file order.hpp
 * @brief Monomial and module monomial orders: lex / grlex / grevlex bases,
 *        position-over-term, term-over-position, and Schreyer orders induced
 *        by a list of nonzero generators.
 *
 * Module monomials are compared through a single entry point so Schreyer
 * levels can recurse into their parent order.  On a Schreyer tie
 * (equal images u*LM(f_i) = v*LM(f_j)) the smaller generator index wins,
 * i.e. counts as the larger monomial.
 */
#pragma once

#include "element.hpp"

#include <memory>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace pirgb {

enum class BaseOrder { lex, grlex, grevlex };
enum class ModuleRule { pot, top, schreyer };

struct SchreyerLevel;

struct OrderSpec {
    BaseOrder base = BaseOrder::lex;
    // variable indices from most to least significant; identity = declaration order
    std::vector<int> var_order;
    ModuleRule rule = ModuleRule::pot;
    std::shared_ptr<const SchreyerLevel> schreyer;  // set iff rule == schreyer
};

struct SchreyerLevel {
    std::vector<ModuleElement> gens;  // nonzero, sorted under parent
    OrderSpec parent;
};

inline OrderSpec make_order(BaseOrder base, std::size_t nvars, ModuleRule rule = ModuleRule::pot) {
    if (rule == ModuleRule::schreyer)
        throw std::invalid_argument("make_order: use schreyer_order for induced orders");
    OrderSpec o;
    o.base = base;
    o.var_order.resize(nvars);
    std::iota(o.var_order.begin(), o.var_order.end(), 0);
    o.rule = rule;
    return o;
}

inline OrderSpec schreyer_order(std::vector<ModuleElement> gens, const OrderSpec& parent) {
    for (const ModuleElement& g : gens)
        if (g.is_zero())
            throw std::invalid_argument("schreyer_order: zero generator");
    OrderSpec o;
    o.base = parent.base;
    o.var_order = parent.var_order;
    o.rule = ModuleRule::schreyer;
    auto level = std::make_shared<SchreyerLevel>();
    level->gens = std::move(gens);
    level->parent = parent;
    o.schreyer = std::move(level);
    return o;
}

/// Order for scalar polynomials: the base order of the root level.
/// Every order built here induces exactly its base order on S.
inline OrderSpec scalar_order(const OrderSpec& o) {
    OrderSpec s;
    s.base = o.base;
    s.var_order = o.var_order;
    s.rule = ModuleRule::pot;
    return s;
}

/// -1 / 0 / +1 comparison of plain monomials under the base part of the order.
inline int compare_mono(const Monomial& u, const Monomial& v, const OrderSpec& o) {
    if (u.size() != v.size() || u.size() != o.var_order.size())
        throw std::invalid_argument("compare_mono: variable count mismatch");
    switch (o.base) {
        case BaseOrder::lex: {
            for (int var : o.var_order) {
                if (u[var] != v[var]) return u[var] > v[var] ? 1 : -1;
            }
            return 0;
        }
        case BaseOrder::grlex: {
            int du = total_degree(u), dv = total_degree(v);
            if (du != dv) return du > dv ? 1 : -1;
            for (int var : o.var_order) {
                if (u[var] != v[var]) return u[var] > v[var] ? 1 : -1;
            }
            return 0;
        }
        case BaseOrder::grevlex: {
            int du = total_degree(u), dv = total_degree(v);
            if (du != dv) return du > dv ? 1 : -1;
            for (std::size_t k = o.var_order.size(); k-- > 0;) {
                int var = o.var_order[k];
                if (u[var] != v[var]) return u[var] < v[var] ? 1 : -1;
            }
            return 0;
        }
    }
    throw std::logic_error("compare_mono: unreachable");
}

/// Compare module monomials x^u e_bu vs x^v e_bv.  For pot/top a smaller
/// basis index is the larger position.
inline int compare_module_mono(const Monomial& u, int bu, const Monomial& v, int bv,
                               const OrderSpec& o) {
    switch (o.rule) {
        case ModuleRule::pot: {
            if (bu != bv) return bu < bv ? 1 : -1;
            return compare_mono(u, v, o);
        }
        case ModuleRule::top: {
            int c = compare_mono(u, v, o);
            if (c != 0) return c;
            if (bu != bv) return bu < bv ? 1 : -1;
            return 0;
        }
        case ModuleRule::schreyer: {
            const SchreyerLevel& L = *o.schreyer;
            const Term& li = L.gens.at(static_cast<std::size_t>(bu)).lead();
            const Term& lj = L.gens.at(static_cast<std::size_t>(bv)).lead();
            int c = compare_module_mono(mono_mul(u, li.mono), li.basis,
                                        mono_mul(v, lj.mono), lj.basis, L.parent);
            if (c != 0) return c;
            if (bu != bv) return bu < bv ? 1 : -1;
            return 0;
        }
    }
    throw std::logic_error("compare_module_mono: unreachable");
}

inline int compare_terms(const Term& a, const Term& b, const OrderSpec& o) {
    return compare_module_mono(a.mono, a.basis, b.mono, b.basis, o);
}

}  // namespace pirgb
