#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace pirgb;
using testsupport::elt;
using testsupport::pf;

namespace {

bool transcript_recombines(const GroebnerBasis& gb, const OrderSpec& o) {
  for (std::size_t k = 0; k < gb.elements.size(); ++k) {
    ModuleElement acc = zero_element(gb.spec, gb.rank);
    for (std::size_t t = 0; t < gb.inputs.size(); ++t)
      acc = add(acc, scalar_poly_mul(gb.transcript[k][t], gb.inputs[t], o), o);
    if (!(acc == gb.elements[k])) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("s_r parts pair componentwise with the zero convention") {
  ProblemFile p = pf(testsupport::IDEAL_Z248);
  auto parts = s_r_parts(p.generators[0], p.generators[1]);
  REQUIRE(parts.has_value());
  // lc are (0,2,2) and (1,2,4); zero first components zero out both sides.
  CHECK(parts->left.c == std::vector<Int>{0, 1, 2});
  CHECK(parts->right.c == std::vector<Int>{0, 1, 1});
  CHECK(parts->mono_left == Monomial{0, 1});
  CHECK(parts->mono_right == Monomial{2, 0});

  // Same scaling applied to the leads agrees: left*lc_a = right*lc_b.
  RingElement la = ring_mul(parts->left, p.generators[0].lead().coeff, p.ring);
  RingElement lb = ring_mul(parts->right, p.generators[1].lead().coeff, p.ring);
  CHECK(la == lb);
}

TEST_CASE("s_r element undefined across module positions") {
  ProblemFile p = pf(testsupport::MODULE_Z248);
  // f2 leads in e1, f1 and f3 lead in e2.
  CHECK_FALSE(s_r_element(p.generators[1], p.generators[0], p.order()).has_value());
  CHECK(s_r_element(p.generators[0], p.generators[2], p.order()).has_value());
}

TEST_CASE("ideal completion over three residue components") {
  ProblemFile p = pf(testsupport::IDEAL_Z248);
  OrderSpec o = p.order();
  GroebnerBasis gb = buchberger(p.generators, o);
  CHECK(gb.certified);
  REQUIRE(gb.elements.size() == 6);
  CHECK(gb.elements[0] == elt(p, "(0,2,2)*X^2 + (1,1,0)"));
  CHECK(gb.elements[1] == elt(p, "(1,2,4)*Y + (0,3,0)"));
  CHECK(gb.elements[2] == elt(p, "(1,0,0)"));
  CHECK(gb.elements[3] == elt(p, "(0,1,0)*X^2 + (0,1,0)*Y"));
  CHECK(gb.elements[4] == elt(p, "(1,2,0)"));
  CHECK(gb.elements[5] == elt(p, "(0,1,0)"));

  CHECK(criterion_check(gb.elements, o).passed);
  for (const auto& f : p.generators) CHECK(reduces_to_zero(f, gb.elements, o));
  CHECK(transcript_recombines(gb, o));

  GroebnerBasis min = minimize(gb);
  REQUIRE(min.elements.size() == 4);
  CHECK(testsupport::same_lts_up_to_unit(
      min.elements,
      {elt(p, "(0,2,2)*X^2").lead(), elt(p, "(1,2,4)*Y").lead(), elt(p, "(1,2,0)").lead(),
       elt(p, "(0,1,0)").lead()},
      p.ring));
  // The dropped and kept constants span the same leading-term module.
  CHECK(testsupport::same_lt_module(
      testsupport::lead_terms(min.elements),
      {elt(p, "(0,2,2)*X^2").lead(), elt(p, "(1,2,4)*Y").lead(), elt(p, "(1,0,0)").lead(),
       elt(p, "(0,3,0)").lead()},
      p.ring));
  CHECK(reduces_to_zero(elt(p, "(0,3,0)"), min.elements, o));
}

TEST_CASE("raw ideal generators fail the criterion") {
  ProblemFile p = pf(testsupport::IDEAL_Z248);
  CriterionReport rep = criterion_check(p.generators, p.order());
  CHECK_FALSE(rep.passed);
  CHECK_FALSE(rep.failures.empty());
}

TEST_CASE("module completion reproduces the worked run") {
  ProblemFile p = pf(testsupport::MODULE_Z248);
  OrderSpec o = p.order();
  GroebnerBasis gb = buchberger(p.generators, o);
  REQUIRE(gb.elements.size() == 5);
  CHECK(gb.elements[0] == p.generators[0]);
  CHECK(gb.elements[1] == p.generators[1]);
  CHECK(gb.elements[2] == p.generators[2]);
  CHECK(gb.elements[3] == elt(p, "(0,2,0)*e2"));
  CHECK(gb.elements[4] == elt(p, "(0,1,0)*e2"));
  CHECK(transcript_recombines(gb, o));

  GroebnerBasis min = minimize(gb);
  REQUIRE(min.elements.size() == 3);
  CHECK(min.elements[0] == p.generators[1]);
  CHECK(min.elements[1] == p.generators[2]);
  CHECK(min.elements[2] == elt(p, "(0,1,0)*e2"));
  CHECK(criterion_check(min.elements, o).passed);
  for (const auto& f : p.generators) CHECK(reduces_to_zero(f, min.elements, o));
}

TEST_CASE("integer pair ideal completes and minimizes") {
  ProblemFile p = pf(testsupport::IDEAL_ZXZ);
  OrderSpec o = p.order();
  GroebnerBasis gb = buchberger(p.generators, o);
  CHECK(criterion_check(gb.elements, o).passed);
  GroebnerBasis min = minimize(gb);
  REQUIRE(min.elements.size() == 3);
  CHECK(min.elements[0] == elt(p, "(0,3)*x*y^2 + (1,1)*y"));
  CHECK(min.elements[1] == elt(p, "(0,2)"));
  CHECK(min.elements[2] == elt(p, "(1,0)"));
}

TEST_CASE("singleton inputs still get annihilator processing") {
  ProblemFile p = pf(R"(ring Z/4
vars x
order lex
gen 2*x + 1
)");
  OrderSpec o = p.order();
  GroebnerBasis gb = buchberger(p.generators, o);
  CHECK(gb.certified);
  CHECK(criterion_check(gb.elements, o).passed);
  // ann(2)*(2x+1) = 2 joins, and the pair then yields a unit.
  bool has_unit = false;
  for (const auto& f : gb.elements)
    if (f.terms.size() == 1 && is_mono_one(f.lead().mono) && f.lead().coeff == ring_one(p.ring))
      has_unit = true;
  CHECK(has_unit);
}

TEST_CASE("leading coefficients are scaled to unit part one") {
  ProblemFile p = pf(R"(ring ZZ
vars x
order lex
gen -2*x + 1
gen -3
)");
  GroebnerBasis gb = buchberger(p.generators, p.order());
  for (const auto& f : gb.elements) {
    auto form = unit_divisor_form(f.lead().coeff, p.ring);
    CHECK(form.unit == ring_one(p.ring));
  }
}

TEST_CASE("degenerate inputs are rejected") {
  RingSpec spec;
  spec.moduli = {Int(0)};
  OrderSpec o = make_order(BaseOrder::lex, 1);
  CHECK_THROWS_AS(buchberger({}, o), std::invalid_argument);
  CHECK_THROWS_AS(buchberger({zero_element(spec, 1)}, o), std::invalid_argument);
}

TEST_CASE("addition ceiling guards runaway completions") {
  ProblemFile p = pf(testsupport::IDEAL_Z248);
  BuchbergerOptions opt;
  opt.max_additions = 1;
  CHECK_THROWS_AS(buchberger(p.generators, p.order(), opt), std::runtime_error);
}

TEST_CASE("minimized bases re-certify") {
  // Joint-membership drops must keep the criterion intact; exercised over a
  // random batch for good measure.
  RingSpec spec;
  spec.moduli = {Int(4), Int(9)};
  OrderSpec o = make_order(BaseOrder::grlex, 2);
  testsupport::Rng rng(7);
  for (int it = 0; it < 25; ++it) {
    auto gens = testsupport::random_generators(rng, spec, 1, 2, o);
    if (gens.empty()) continue;
    GroebnerBasis gb = buchberger(gens, o);
    GroebnerBasis min = minimize(gb);
    CHECK(min.elements.size() <= gb.elements.size());
    CHECK(criterion_check(min.elements, o).passed);
    for (const auto& g : gens) CHECK(reduces_to_zero(g, min.elements, o));
  }
}
