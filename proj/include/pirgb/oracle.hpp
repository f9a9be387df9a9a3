/**
 * @file oracle.hpp
 * @brief Brute-force membership and random syzygy generation at bounded
 *        multiplier degree, independent of the division and basis machinery.
 *
 * membership f = sum_j h_j·gens[j] with deg h_j <= bound is an exact linear
 * system over R in the coefficients of the h_j.  Each ring component is
 * solved separately over the integers: the coefficient matrix is brought to
 * column echelon form by unimodular column operations (tracked in U, so a
 * solution of the echelon system pulls back exactly), pivots are consumed
 * top to bottom with divisibility checks, and residue components adjoin
 * N·identity slack columns first.  No reduction, no Gröbner machinery; this
 * is the measuring stick the rest of the library is tested against.
 */
#pragma once

#include "poly.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

namespace pirgb {

struct DegreeBound {
    int max_total_degree = 0;
};

struct OracleOptions {
    std::size_t max_unknowns = 512;  // per component, before slack columns
};

struct MembershipVerdict {
    enum class Kind { member, not_member_up_to_bound, refused };
    Kind kind = Kind::refused;
    std::vector<ModuleElement> witness;  // scalar multipliers, one per generator
};

namespace detail {

inline std::vector<Monomial> monomials_up_to(std::size_t nvars, int bound) {
    std::vector<Monomial> out;
    Monomial cur(nvars, 0);
    auto rec = [&](auto&& self, std::size_t var, int left) -> void {
        if (var == nvars) {
            out.push_back(cur);
            return;
        }
        for (int e = 0; e <= left; ++e) {
            cur[var] = e;
            self(self, var + 1, left - e);
        }
        cur[var] = 0;
    };
    rec(rec, 0, bound);
    return out;
}

// Solve a·x = b over the integers, or report that no solution exists.
inline std::optional<std::vector<Int>> solve_integer(std::vector<std::vector<Int>> a,
                                                     const std::vector<Int>& b) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    std::vector<std::vector<Int>> u(cols, std::vector<Int>(cols, 0));
    for (std::size_t k = 0; k < cols; ++k) u[k][k] = 1;

    auto col_swap = [&](std::size_t x, std::size_t y) {
        if (x == y) return;
        for (std::size_t r = 0; r < rows; ++r) std::swap(a[r][x], a[r][y]);
        for (std::size_t r = 0; r < cols; ++r) std::swap(u[r][x], u[r][y]);
    };
    auto col_axpy = [&](std::size_t dst, std::size_t src, const Int& q) {
        if (q == 0) return;
        for (std::size_t r = 0; r < rows; ++r) a[r][dst] -= q * a[r][src];
        for (std::size_t r = 0; r < cols; ++r) u[r][dst] -= q * u[r][src];
    };
    auto col_negate = [&](std::size_t x) {
        for (std::size_t r = 0; r < rows; ++r) a[r][x] = -a[r][x];
        for (std::size_t r = 0; r < cols; ++r) u[r][x] = -u[r][x];
    };

    std::vector<std::ptrdiff_t> pivot_of_row(rows, -1);
    std::size_t col = 0;
    for (std::size_t row = 0; row < rows && col < cols; ++row) {
        while (true) {
            std::ptrdiff_t best = -1;
            for (std::size_t k = col; k < cols; ++k)
                if (a[row][k] != 0 &&
                    (best < 0 || abs_int(a[row][k]) < abs_int(a[row][static_cast<std::size_t>(best)])))
                    best = static_cast<std::ptrdiff_t>(k);
            if (best < 0) break;
            col_swap(col, static_cast<std::size_t>(best));
            bool clean = true;
            for (std::size_t k = col + 1; k < cols; ++k) {
                if (a[row][k] == 0) continue;
                col_axpy(k, col, a[row][k] / a[row][col]);
                if (a[row][k] != 0) clean = false;
            }
            if (clean) {
                if (a[row][col] < 0) col_negate(col);
                pivot_of_row[row] = static_cast<std::ptrdiff_t>(col);
                ++col;
                break;
            }
        }
    }

    std::vector<Int> z(cols, 0);
    for (std::size_t row = 0; row < rows; ++row) {
        Int s = 0;
        for (std::size_t k = 0; k < cols; ++k)
            if (z[k] != 0) s += a[row][k] * z[k];
        Int need = b[row] - s;
        if (pivot_of_row[row] >= 0) {
            std::size_t k = static_cast<std::size_t>(pivot_of_row[row]);
            if (need % a[row][k] != 0) return std::nullopt;
            z[k] = need / a[row][k];
        } else if (need != 0) {
            return std::nullopt;
        }
    }

    std::vector<Int> x(cols, 0);
    for (std::size_t r = 0; r < cols; ++r) {
        Int s = 0;
        for (std::size_t k = 0; k < cols; ++k)
            if (z[k] != 0) s += u[r][k] * z[k];
        x[r] = s;
    }
    return x;
}

}  // namespace detail

inline MembershipVerdict member_bruteforce(const ModuleElement& f,
                                           const std::vector<ModuleElement>& gens,
                                           const DegreeBound& bound,
                                           const OracleOptions& opt = {}) {
    const RingSpec& spec = f.spec;
    const std::size_t p = spec.moduli.size();
    std::size_t nvars = 0;
    if (!f.terms.empty()) nvars = f.terms.front().mono.size();
    for (const auto& g : gens)
        if (!g.terms.empty()) nvars = g.terms.front().mono.size();

    std::vector<Monomial> mus = detail::monomials_up_to(nvars, bound.max_total_degree);
    const std::size_t unknowns = gens.size() * mus.size();
    if (unknowns > opt.max_unknowns) return MembershipVerdict{MembershipVerdict::Kind::refused, {}};

    std::map<std::pair<Monomial, int>, std::size_t> row_of;
    auto row_index = [&](const Monomial& mo, int basis) {
        auto it = row_of.find({mo, basis});
        if (it != row_of.end()) return it->second;
        std::size_t r = row_of.size();
        row_of.emplace(std::make_pair(mo, basis), r);
        return r;
    };
    for (const Term& t : f.terms) row_index(t.mono, t.basis);
    std::vector<std::vector<std::size_t>> unknown_rows(unknowns);
    std::vector<std::vector<const Term*>> unknown_terms(unknowns);
    for (std::size_t j = 0; j < gens.size(); ++j)
        for (std::size_t mi = 0; mi < mus.size(); ++mi) {
            std::size_t uidx = j * mus.size() + mi;
            for (const Term& t : gens[j].terms) {
                unknown_rows[uidx].push_back(row_index(mono_mul(t.mono, mus[mi]), t.basis));
                unknown_terms[uidx].push_back(&t);
            }
        }
    const std::size_t rows = row_of.size();

    std::vector<std::vector<RingElement>> solution(gens.size(),
                                                   std::vector<RingElement>(mus.size(), ring_zero(spec)));
    for (std::size_t i = 0; i < p; ++i) {
        const Int& n = spec.moduli[i];
        const std::size_t slack = n == 0 ? 0 : rows;
        std::vector<std::vector<Int>> a(rows, std::vector<Int>(unknowns + slack, 0));
        std::vector<Int> b(rows, 0);
        for (std::size_t uidx = 0; uidx < unknowns; ++uidx)
            for (std::size_t t = 0; t < unknown_rows[uidx].size(); ++t)
                a[unknown_rows[uidx][t]][uidx] += unknown_terms[uidx][t]->coeff.c[i];
        if (slack > 0)
            for (std::size_t r = 0; r < rows; ++r) a[r][unknowns + r] = n;
        for (const Term& t : f.terms) b[row_of.at({t.mono, t.basis})] = t.coeff.c[i];

        auto x = detail::solve_integer(std::move(a), b);
        if (!x) return MembershipVerdict{MembershipVerdict::Kind::not_member_up_to_bound, {}};
        for (std::size_t j = 0; j < gens.size(); ++j)
            for (std::size_t mi = 0; mi < mus.size(); ++mi) {
                Int v = (*x)[j * mus.size() + mi];
                solution[j][mi].c[i] = n == 0 ? v : detail::mod_floor(v, n);
            }
    }

    MembershipVerdict verdict;
    verdict.kind = MembershipVerdict::Kind::member;
    OrderSpec so = make_order(BaseOrder::lex, static_cast<int>(nvars));
    // add merges term lists sorted under one order; f and the gens arrive
    // sorted under the caller's order, so resort everything into so first.
    ModuleElement recombined = zero_element(spec, f.rank);
    for (std::size_t j = 0; j < gens.size(); ++j) {
        std::vector<Term> terms;
        for (std::size_t mi = 0; mi < mus.size(); ++mi)
            terms.push_back(Term{solution[j][mi], mus[mi], 0});
        ModuleElement h = make_element(spec, 1, terms, so);
        verdict.witness.push_back(h);
        for (const Term& t : h.terms) {
            ModuleElement prod = term_mul(t.coeff, t.mono, gens[j]);
            recombined = add(recombined, make_element(spec, f.rank, prod.terms, so), so);
        }
    }
    ModuleElement diff = sub(recombined, make_element(spec, f.rank, f.terms, so), so);
    if (!diff.is_zero())
        throw std::logic_error("member_bruteforce: internal error, witness fails to recombine");
    return verdict;
}

// A random element of syz(gens) at bounded degree: random multipliers h,
// minus a particular membership witness of the same image.  Returned over
// the Schreyer order induced by gens; substitutes to zero by construction.
inline ModuleElement random_syzygy(const std::vector<ModuleElement>& gens, const OrderSpec& o,
                                   const DegreeBound& bound, std::uint64_t seed,
                                   const OracleOptions& opt = {}) {
    if (gens.empty()) throw std::invalid_argument("random_syzygy: no generators");
    const RingSpec& spec = gens.front().spec;
    const std::size_t nvars = gens.front().terms.empty() ? 0 : gens.front().terms.front().mono.size();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> small(-3, 3);
    std::bernoulli_distribution keep(0.5);

    std::vector<Monomial> mus = detail::monomials_up_to(nvars, bound.max_total_degree);
    OrderSpec so = scalar_order(o);
    std::vector<ModuleElement> h;
    ModuleElement image = zero_element(spec, gens.front().rank);
    for (std::size_t j = 0; j < gens.size(); ++j) {
        std::vector<Term> terms;
        for (const Monomial& mu : mus) {
            RingElement c = ring_zero(spec);
            bool any = false;
            for (std::size_t i = 0; i < spec.moduli.size(); ++i) {
                if (!keep(rng)) continue;
                c.c[i] = small(rng);
                any = true;
            }
            if (any) terms.push_back(Term{normalize(c.c, spec), mu, 0});
        }
        h.push_back(make_element(spec, 1, terms, so));
        for (const Term& t : h.back().terms)
            image = add(image, term_mul(t.coeff, t.mono, gens[j]), o);
    }

    MembershipVerdict w = member_bruteforce(image, gens, bound, opt);
    if (w.kind != MembershipVerdict::Kind::member)
        throw std::logic_error("random_syzygy: internal error, image lost its own membership");

    OrderSpec schreyer = schreyer_order(gens, o);
    std::vector<Term> terms;
    for (std::size_t j = 0; j < gens.size(); ++j) {
        // The witness comes back sorted under the oracle's own order.
        ModuleElement wj = make_element(spec, 1, w.witness[j].terms, so);
        ModuleElement delta = sub(h[j], wj, so);
        for (const Term& t : delta.terms)
            terms.push_back(Term{t.coeff, t.mono, static_cast<int>(j)});
    }
    return make_element(spec, static_cast<int>(gens.size()), terms, schreyer);
}

}  // namespace pirgb
