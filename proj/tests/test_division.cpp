#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace pirgb;
using testsupport::elt;
using testsupport::pf;

namespace {

// f == sum quotients[j]*divisors[j] + remainder, exactly.
bool reconstructs(const ModuleElement& f, const std::vector<ModuleElement>& divisors,
                  const DivisionResult& d, const OrderSpec& o) {
  ModuleElement acc = d.remainder;
  for (std::size_t j = 0; j < divisors.size(); ++j)
    acc = add(acc, scalar_poly_mul(d.quotients[j], divisors[j], o), o);
  return acc == f;
}

bool remainder_irreducible(const DivisionResult& d, const std::vector<ModuleElement>& divisors,
                           const RingSpec& spec) {
  for (const Term& t : d.remainder.terms) {
    std::vector<RingElement> coeffs;
    for (const auto& g : divisors) {
      const Term& lt = g.lead();
      if (lt.basis == t.basis && mono_divides(lt.mono, t.mono)) coeffs.push_back(lt.coeff);
    }
    if (!coeffs.empty() && solve_membership(t.coeff, coeffs, spec).has_value()) return false;
  }
  return true;
}

bool degree_bounded(const ModuleElement& f, const std::vector<ModuleElement>& divisors,
                    const DivisionResult& d, const OrderSpec& o) {
  if (f.is_zero()) return true;
  for (std::size_t j = 0; j < divisors.size(); ++j)
    for (const Term& t : d.quotients[j].terms) {
      Term image{t.coeff, mono_mul(t.mono, divisors[j].lead().mono), divisors[j].lead().basis};
      if (compare_terms(image, f.lead(), o) > 0) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("division reconstructs and leaves irreducible remainders") {
  ProblemFile p = pf(testsupport::IDEAL_ZXZ);
  OrderSpec o = p.order();
  ModuleElement f = elt(p, "(6,9)*x^2*y^2 + (1,1)*y + (5,5)");
  DivisionResult d = divide(f, p.generators, o);
  CHECK(reconstructs(f, p.generators, d, o));
  CHECK(remainder_irreducible(d, p.generators, p.ring));
  CHECK(degree_bounded(f, p.generators, d, o));
}

TEST_CASE("zero dividend and unrelated dividend") {
  ProblemFile p = pf(testsupport::IDEAL_ZXZ);
  OrderSpec o = p.order();
  DivisionResult d0 = divide(zero_element(p.ring, 1), p.generators, o);
  CHECK(d0.remainder.is_zero());
  CHECK(d0.trace.empty());
  ModuleElement f = elt(p, "(1,0)*y");
  DivisionResult d1 = divide(f, p.generators, o);
  CHECK(d1.remainder == f);
  REQUIRE(d1.trace.size() == 1);
  CHECK_FALSE(d1.trace[0].reduced);
}

TEST_CASE("joint reduction uses several divisors for one term") {
  // Neither 2 nor 3 divides 1 over Z, together they do.
  ProblemFile p = pf(R"(ring ZZ
vars x
order lex
gen 2*x
gen 3*x
)");
  OrderSpec o = p.order();
  ModuleElement f = elt(p, "1*x");
  DivisionResult d = divide(f, p.generators, o);
  CHECK(d.remainder.is_zero());
  REQUIRE(d.trace.size() == 1);
  CHECK(d.trace[0].reduced);
  CHECK(d.trace[0].indicator == std::vector<std::uint8_t>{1, 1});
  CHECK(reconstructs(f, p.generators, d, o));
}

TEST_CASE("divisor selection drops redundant prefix candidates") {
  ProblemFile p = pf(R"(ring ZZ
vars x
order lex
gen 2*x
gen 1*x
)");
  OrderSpec o = p.order();
  ModuleElement f = elt(p, "2*x");
  DivisionResult d = divide(f, p.generators, o);
  CHECK(d.remainder.is_zero());
  REQUIRE(d.trace.size() == 1);
  // The second divisor alone suffices, so the first is excluded.
  CHECK(d.trace[0].indicator == std::vector<std::uint8_t>{0, 1});
  CHECK(d.quotients[0].is_zero());
  CHECK(render_element(d.quotients[1], p.vars) == "2");
}

TEST_CASE("mixed ring reduction respects per component solvability") {
  ProblemFile p = pf(R"(ring Z/4 x Z/9
vars x y
order grlex
gen (2,3)*x + (1,1)
gen (0,3)*y
)");
  OrderSpec o = p.order();
  // (2,6)x = (1,2)*(2,3)x works componentwise; tail terms then reduce on.
  ModuleElement f = elt(p, "(2,6)*x");
  DivisionResult d = divide(f, p.generators, o);
  CHECK(reconstructs(f, p.generators, d, o));
  CHECK(remainder_irreducible(d, p.generators, p.ring));

  // (1,1) is not a multiple of (2,3): unit component against even component.
  ModuleElement g = elt(p, "(1,1)*x");
  DivisionResult dg = divide(g, p.generators, o);
  CHECK(dg.remainder == g);
}

TEST_CASE("module division matches bases positionally") {
  ProblemFile p = pf(R"(ring ZZ
vars x
order lex
rank 2
gen 1*x*e1
gen 1*x*e2
)");
  OrderSpec o = p.order();
  ModuleElement f = elt(p, "1*x^2*e2");
  DivisionResult d = divide(f, p.generators, o);
  CHECK(d.remainder.is_zero());
  CHECK(d.quotients[0].is_zero());
  CHECK(render_element(d.quotients[1], p.vars) == "1*x");
}

TEST_CASE("division is deterministic on repeated calls") {
  ProblemFile p = pf(testsupport::IDEAL_ZXZ);
  OrderSpec o = p.order();
  testsupport::Rng rng(20260815);
  for (int it = 0; it < 50; ++it) {
    ModuleElement f = testsupport::random_element(rng, p.ring, 1, 2, o, 4, 4, 9);
    DivisionResult a = divide(f, p.generators, o);
    DivisionResult b = divide(f, p.generators, o);
    CHECK(a.remainder == b.remainder);
    CHECK(a.quotients == b.quotients);
    REQUIRE(a.trace.size() == b.trace.size());
    for (std::size_t k = 0; k < a.trace.size(); ++k) {
      CHECK(a.trace[k].reduced == b.trace[k].reduced);
      CHECK(a.trace[k].lead == b.trace[k].lead);
      CHECK(a.trace[k].indicator == b.trace[k].indicator);
    }
    CHECK(reconstructs(f, p.generators, a, o));
    CHECK(remainder_irreducible(a, p.generators, p.ring));
    CHECK(degree_bounded(f, p.generators, a, o));
  }
}

TEST_CASE("reduces_to_zero mirrors divide") {
  ProblemFile p = pf(testsupport::IDEAL_ZXZ);
  OrderSpec o = p.order();
  // A term multiple of one generator cancels in a single step; the inputs are
  // not a basis, so general combinations may well leave remainders.
  ModuleElement f = scalar_poly_mul(elt(p, "(1,1)*x"), p.generators[0], o);
  CHECK(reduces_to_zero(f, p.generators, o));
  CHECK_FALSE(reduces_to_zero(elt(p, "(1,0)"), p.generators, o));
}
