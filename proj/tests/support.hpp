#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <pirgb/pirgb.hpp>

namespace testsupport {

using namespace pirgb;

inline ProblemFile pf(const std::string& text) { return parse_problem(text, "<test>"); }
inline ModuleElement elt(const ProblemFile& p, const std::string& s) { return parse_element(s, p); }

inline const char* IDEAL_Z248 = R"(ring Z/2 x Z/4 x Z/8
vars X Y
order lex
gen (0,2,2)*X^2 + (1,1,0)
gen (1,2,4)*Y + (0,3,0)
gen (1,0,0)
)";

inline const char* MODULE_Z248 = R"(ring Z/2 x Z/4 x Z/8
vars X Y
order lex
rank 2
gen (0,2,1)*X*Y^2*e2 + (0,1,0)*e2
gen (1,2,2)*X^2*Y*e1 + (0,1,4)*X*e2
gen (1,0,1)*e2
)";

inline const char* IDEAL_ZXZ = R"(ring ZZ x ZZ
vars x y
order lex
gen (2,0)*x^2*y + (1,2)
gen (0,3)*x*y^2 + (1,1)*y
gen (3,4)*x
)";

// Associates agree exactly when the canonical divisor parts agree:
// gcd(a, N) per finite component, |a| per integer component.
inline bool unit_equal(const RingElement& a, const RingElement& b, const RingSpec& spec) {
  return unit_divisor_form(a, spec).divisor == unit_divisor_form(b, spec).divisor;
}

inline bool term_unit_equal(const Term& s, const Term& t, const RingSpec& spec) {
  return s.mono == t.mono && s.basis == t.basis && unit_equal(s.coeff, t.coeff, spec);
}

inline std::vector<Term> lead_terms(const std::vector<ModuleElement>& fs) {
  std::vector<Term> out;
  out.reserve(fs.size());
  for (const auto& f : fs) out.push_back(f.lead());
  return out;
}

// Unordered comparison of two leading-term lists up to component units.
inline bool same_lts_up_to_unit(const std::vector<ModuleElement>& fs,
                                const std::vector<Term>& expected, const RingSpec& spec) {
  if (fs.size() != expected.size()) return false;
  std::vector<bool> used(expected.size(), false);
  for (const auto& f : fs) {
    bool hit = false;
    for (std::size_t k = 0; k < expected.size(); ++k) {
      if (used[k] || !term_unit_equal(f.lead(), expected[k], spec)) continue;
      used[k] = true;
      hit = true;
      break;
    }
    if (!hit) return false;
  }
  return true;
}

// Two generating sets span the same leading-term module iff each side's
// leading term is a coefficient-and-monomial combination of the other side's
// leading terms (constant-degree membership per term suffices: candidates are
// the dividing leading terms).
inline bool lt_member(const Term& t, const std::vector<Term>& basis, const RingSpec& spec) {
  std::vector<RingElement> coeffs;
  for (const auto& b : basis)
    if (b.basis == t.basis && mono_divides(b.mono, t.mono)) coeffs.push_back(b.coeff);
  if (coeffs.empty()) return false;
  return solve_membership(t.coeff, coeffs, spec).has_value();
}

inline bool same_lt_module(const std::vector<Term>& a, const std::vector<Term>& b,
                           const RingSpec& spec) {
  for (const auto& t : a)
    if (!lt_member(t, b, spec)) return false;
  for (const auto& t : b)
    if (!lt_member(t, a, spec)) return false;
  return true;
}

struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng); }
};

inline ModuleElement random_element(Rng& rng, const RingSpec& spec, int rank, std::size_t nvars,
                                    const OrderSpec& o, int max_deg = 3, int max_terms = 3,
                                    int coeff_bound = 4) {
  std::vector<Term> terms;
  int nterms = rng.uniform(1, max_terms);
  for (int t = 0; t < nterms; ++t) {
    Term term;
    term.coeff.c.resize(spec.moduli.size());
    for (auto& c : term.coeff.c) c = rng.uniform(-coeff_bound, coeff_bound);
    term.mono = mono_one(nvars);
    int budget = rng.uniform(0, max_deg);
    for (int d = 0; d < budget; ++d) term.mono[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(nvars) - 1))] += 1;
    term.basis = rank > 1 ? rng.uniform(0, rank - 1) : 0;
    terms.push_back(std::move(term));
  }
  return make_element(spec, rank, std::move(terms), o);
}

// Random generator lists; may produce the occasional zero element, which the
// callers filter or let buchberger drop.
inline std::vector<ModuleElement> random_generators(Rng& rng, const RingSpec& spec, int rank,
                                                    std::size_t nvars, const OrderSpec& o,
                                                    int max_gens = 3) {
  std::vector<ModuleElement> gens;
  int n = rng.uniform(1, max_gens);
  for (int k = 0; k < n; ++k) {
    ModuleElement g = random_element(rng, spec, rank, nvars, o);
    if (!g.is_zero()) gens.push_back(std::move(g));
  }
  return gens;
}

}  // namespace testsupport
