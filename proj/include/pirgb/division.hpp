/**
 * @file division.hpp
 * @brief Deterministic division with remainder in S^r.
 *
 * Each step looks at the leading term a*x^w*e_k of the running element.
 * Among the divisors whose leading monomial divides x^w*e_k it selects the
 * lexicographically smallest 0/1 indicator tuple whose chosen leading
 * coefficients generate a, by greedy prefix exclusion: walking the candidate
 * indices in ascending order, an index is dropped exactly when the remaining
 * candidates still generate a.  The leading term is then cancelled exactly;
 * otherwise it moves to the remainder.  The leading term of the running
 * element strictly decreases, so the loop terminates.
 *
 * The output satisfies f = sum quotients[j]*divisors[j] + remainder, every
 * quotient term obeys lm(quotients[j])*LM(divisors[j]) <= LM(f), and no
 * remainder term is generated by the divisors' leading terms.
 */
#pragma once

#include "poly.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace pirgb {

struct TraceStep {
    bool reduced = false;            // false: leading term moved to the remainder
    Term lead;                       // leading term examined at this step
    std::vector<std::uint8_t> indicator;  // chosen tuple over all divisors (reduced steps)
};

struct DivisionResult {
    std::vector<ModuleElement> quotients;  // rank-1 scalar polynomials
    ModuleElement remainder;
    std::vector<TraceStep> trace;
};

inline DivisionResult divide(const ModuleElement& f, const std::vector<ModuleElement>& divisors,
                             const OrderSpec& o) {
    const RingSpec& spec = f.spec;
    OrderSpec so = scalar_order(o);
    DivisionResult res;
    res.quotients.assign(divisors.size(), zero_element(spec, 1));
    res.remainder = zero_element(spec, f.rank);

    ModuleElement g = f;
    while (!g.is_zero()) {
        const Term lt = g.lead();

        std::vector<std::size_t> cand;
        for (std::size_t j = 0; j < divisors.size(); ++j) {
            if (divisors[j].is_zero()) continue;
            const Term& dj = divisors[j].lead();
            if (dj.basis == lt.basis && mono_divides(dj.mono, lt.mono)) cand.push_back(j);
        }

        auto coeffs_of = [&](const std::vector<std::size_t>& idx) {
            std::vector<RingElement> lcs;
            lcs.reserve(idx.size());
            for (std::size_t j : idx) lcs.push_back(divisors[j].lead().coeff);
            return lcs;
        };

        bool reducible = !cand.empty() && solve_membership(lt.coeff, coeffs_of(cand), spec).has_value();
        if (!reducible) {
            res.remainder.terms.push_back(lt);  // stays sorted: leads strictly decrease
            res.trace.push_back(TraceStep{false, lt, {}});
            g.terms.erase(g.terms.begin());
            continue;
        }

        // greedy prefix exclusion for the lexicographically smallest indicator
        std::vector<std::uint8_t> keep(cand.size(), 1);
        for (std::size_t k = 0; k < cand.size(); ++k) {
            std::vector<std::size_t> rest;
            for (std::size_t t = 0; t < cand.size(); ++t)
                if (t != k && keep[t]) rest.push_back(cand[t]);
            if (solve_membership(lt.coeff, coeffs_of(rest), spec).has_value()) keep[k] = 0;
        }
        std::vector<std::size_t> chosen;
        for (std::size_t t = 0; t < cand.size(); ++t)
            if (keep[t]) chosen.push_back(cand[t]);
        std::vector<RingElement> parts = *solve_membership(lt.coeff, coeffs_of(chosen), spec);

        std::vector<std::uint8_t> indicator(divisors.size(), 0);
        ModuleElement cancel = zero_element(spec, f.rank);
        for (std::size_t t = 0; t < chosen.size(); ++t) {
            std::size_t j = chosen[t];
            indicator[j] = 1;
            Monomial h = *mono_div(lt.mono, divisors[j].lead().mono);
            res.quotients[j] =
                add(res.quotients[j], from_term(spec, 1, Term{parts[t], h, 0}), so);
            cancel = add(cancel, term_mul(parts[t], h, divisors[j]), o);
        }
        res.trace.push_back(TraceStep{true, lt, std::move(indicator)});
        g = sub(g, cancel, o);
    }
    return res;
}

inline bool reduces_to_zero(const ModuleElement& f, const std::vector<ModuleElement>& divisors,
                            const OrderSpec& o) {
    return divide(f, divisors, o).remainder.is_zero();
}

}  // namespace pirgb
