#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace pirgb;
using testsupport::elt;
using testsupport::pf;

TEST_CASE("bounded membership finds constants inside the residue ideal") {
  ProblemFile p = pf(testsupport::IDEAL_Z248);
  MembershipVerdict v = member_bruteforce(elt(p, "(0,3,0)"), p.generators, DegreeBound{2});
  CHECK(v.kind == MembershipVerdict::Kind::member);
  REQUIRE(v.witness.size() == 3);
  // Recombine the witness independently of the oracle's own verification.
  OrderSpec o = p.order();
  ModuleElement acc = zero_element(p.ring, 1);
  for (std::size_t j = 0; j < 3; ++j)
    acc = add(acc, scalar_poly_mul(v.witness[j], p.generators[j], o), o);
  CHECK(acc == elt(p, "(0,3,0)"));
}

TEST_CASE("an element is a bound zero member of itself") {
  ProblemFile p = pf(testsupport::IDEAL_Z248);
  MembershipVerdict v = member_bruteforce(p.generators[0], {p.generators[0]}, DegreeBound{0});
  CHECK(v.kind == MembershipVerdict::Kind::member);
  REQUIRE(v.witness.size() == 1);
  CHECK(v.witness[0] == from_term(p.ring, 1, Term{ring_one(p.ring), mono_one(2), 0}));
}

TEST_CASE("parity obstruction survives every degree") {
  ProblemFile p = pf(R"(ring Z/2 x Z/4 x Z/8
vars X Y
order lex
gen (0,2,0)
)");
  MembershipVerdict v = member_bruteforce(elt(p, "(0,1,0)"), p.generators, DegreeBound{3});
  CHECK(v.kind == MembershipVerdict::Kind::not_member_up_to_bound);
}

TEST_CASE("integer lattice solves need no modulus") {
  ProblemFile p = pf(R"(ring ZZ
vars x
order lex
gen 6
gen 10
)");
  CHECK(member_bruteforce(elt(p, "2"), p.generators, DegreeBound{0}).kind ==
        MembershipVerdict::Kind::member);
  CHECK(member_bruteforce(elt(p, "3"), p.generators, DegreeBound{1}).kind ==
        MembershipVerdict::Kind::not_member_up_to_bound);
  // Column elimination handles entries that naive top-down division cannot.
  ProblemFile q = pf(R"(ring ZZ
vars x
order lex
gen 2*x + 3
)");
  MembershipVerdict v =
      member_bruteforce(scalar_poly_mul(elt(q, "2*x - 3"), q.generators[0], q.order()),
                        q.generators, DegreeBound{1});
  CHECK(v.kind == MembershipVerdict::Kind::member);
}

TEST_CASE("oracle refuses oversized systems instead of guessing") {
  ProblemFile p = pf(testsupport::IDEAL_Z248);
  OracleOptions opt;
  opt.max_unknowns = 1;
  MembershipVerdict v = member_bruteforce(elt(p, "(0,3,0)"), p.generators, DegreeBound{3}, opt);
  CHECK(v.kind == MembershipVerdict::Kind::refused);
}

TEST_CASE("engine and oracle verdicts agree on small random queries") {
  ProblemFile p = pf(R"(ring Z/4 x Z/9
vars x y
order grlex
)");
  OrderSpec o = p.order();
  testsupport::Rng rng(20260101);
  int members = 0, rejects = 0;
  for (int it = 0; it < 30; ++it) {
    auto gens = testsupport::random_generators(rng, p.ring, 1, 2, o);
    if (gens.empty()) continue;
    GroebnerBasis gb = buchberger(gens, o);
    ModuleElement target = testsupport::random_element(rng, p.ring, 1, 2, o, 2, 2, 3);
    bool engine_member = reduces_to_zero(target, gb.elements, o);
    MembershipVerdict v = member_bruteforce(target, gens, DegreeBound{3});
    if (v.kind == MembershipVerdict::Kind::member) {
      ++members;
      CHECK(engine_member);
    } else if (v.kind == MembershipVerdict::Kind::not_member_up_to_bound) {
      ++rejects;
    }
  }
  CHECK(members + rejects > 0);
}

TEST_CASE("random kernel draws substitute to zero") {
  ProblemFile p = pf(testsupport::IDEAL_ZXZ);
  OrderSpec o = p.order();
  GroebnerBasis min = minimize(buchberger(p.generators, o));
  SyzygyBasis syz = syzygy_basis(min);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    ModuleElement h = random_syzygy(min.elements, o, DegreeBound{2}, seed);
    CHECK(substitute(h, min.elements, o).is_zero());
    // Relations generate the kernel: every draw reduces to zero against them.
    CHECK(reduces_to_zero(h, syz.elements(), syz.order));
  }
}

TEST_CASE("trivial kernels give the zero draw") {
  ProblemFile p = pf(R"(ring ZZ
vars x
order lex
gen 1*x + 1
)");
  ModuleElement h = random_syzygy(p.generators, p.order(), DegreeBound{0}, 42);
  CHECK(h.is_zero());
}
