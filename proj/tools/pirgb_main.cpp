#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <pirgb/jsonio.hpp>
#include <pirgb/pirgb.hpp>

namespace {

using namespace pirgb;

ProblemFile load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open input file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem(buf.str(), path);
}

void emit(const ordered_json& doc) { std::cout << doc.dump(2) << "\n"; }

// Builds a certified basis object around generators that already passed the
// criterion check, with the identity combination transcript.
GroebnerBasis as_certified(const ProblemFile& pf, const OrderSpec& o) {
  GroebnerBasis gb;
  gb.spec = pf.ring;
  gb.rank = static_cast<int>(pf.rank);
  gb.order = o;
  gb.elements = pf.generators;
  gb.inputs = pf.generators;
  OrderSpec so = scalar_order(o);
  const std::size_t n = pf.generators.size();
  const Monomial one = mono_one(pf.vars.size());
  gb.transcript.assign(n, std::vector<ModuleElement>(n, zero_element(pf.ring, 1)));
  for (std::size_t k = 0; k < n; ++k)
    gb.transcript[k][k] = make_element(pf.ring, 1, {Term{ring_one(pf.ring), one, 0}}, so);
  gb.certified = true;
  return gb;
}

void print_transcript(const GroebnerBasis& gb, const std::vector<std::string>& vars) {
  for (std::size_t k = 0; k < gb.transcript.size(); ++k) {
    std::cout << "g" << k + 1 << " =";
    bool first = true;
    for (std::size_t t = 0; t < gb.transcript[k].size(); ++t) {
      if (gb.transcript[k][t].is_zero()) continue;
      std::cout << (first ? " " : " + ") << "(" << render_element(gb.transcript[k][t], vars)
                << ")*f" << t + 1;
      first = false;
    }
    if (first) std::cout << " 0";
    std::cout << "\n";
  }
}

int run_groebner(const std::string& path, bool json, bool minimize_flag, bool trace) {
  ProblemFile pf = load_problem(path);
  OrderSpec o = pf.order();
  GroebnerBasis gb = buchberger(pf.generators, o);
  if (minimize_flag) gb = minimize(gb);
  if (json) {
    ordered_json doc{{"command", "groebner"},
                     {"ring", json_ring(pf.ring)},
                     {"vars", pf.vars},
                     {"order", json_order(pf.base, pf.rule)},
                     {"rank", pf.rank},
                     {"minimized", minimize_flag},
                     {"certified", gb.certified},
                     {"basis", json_basis(gb, pf.vars)}};
    if (trace) doc["transcript"] = json_transcript(gb, pf.vars);
    emit(doc);
  } else {
    std::cout << "basis size " << gb.elements.size() << "\n";
    for (std::size_t k = 0; k < gb.elements.size(); ++k)
      std::cout << "g" << k + 1 << " = " << render_element(gb.elements[k], pf.vars) << "\n";
    if (trace) print_transcript(gb, pf.vars);
  }
  return 0;
}

int run_check(const std::string& path, bool json) {
  ProblemFile pf = load_problem(path);
  OrderSpec o = pf.order();
  CriterionReport report = criterion_check(pf.generators, o);
  if (json) {
    ordered_json doc{{"command", "check"}};
    doc.update(json_criterion(report, pf.vars));
    emit(doc);
  } else if (report.passed) {
    std::cout << "criterion passed\n";
  } else {
    std::cout << "criterion failed (" << report.failures.size() << " nonzero remainder"
              << (report.failures.size() == 1 ? "" : "s") << ")\n";
    for (const auto& fail : report.failures) {
      if (fail.critical.kind == CriticalElement::Kind::pair)
        std::cout << "pair(" << fail.critical.alpha + 1 << "," << fail.critical.beta + 1 << ")";
      else
        std::cout << "ann(" << fail.critical.alpha + 1 << ")";
      std::cout << " remainder: " << render_element(fail.remainder, pf.vars) << "\n";
    }
  }
  return report.passed ? 0 : 1;
}

int run_reduce(const std::string& path, const std::string& target, bool json, bool trace) {
  ProblemFile pf = load_problem(path);
  OrderSpec o = pf.order();
  ModuleElement f = parse_element(target, pf, "<target>");
  DivisionResult d = divide(f, pf.generators, o);
  if (json) {
    ordered_json doc{{"command", "reduce"}, {"target", json_element(f, pf.vars)}};
    doc.update(json_division(d, pf.vars, trace));
    emit(doc);
  } else {
    std::cout << "remainder = " << render_element(d.remainder, pf.vars) << "\n";
    for (std::size_t j = 0; j < d.quotients.size(); ++j)
      if (!d.quotients[j].is_zero())
        std::cout << "q" << j + 1 << " = " << render_element(d.quotients[j], pf.vars) << "\n";
    if (trace) {
      for (const auto& step : d.trace) {
        std::cout << "lead " << render_element(
            make_element(pf.ring, static_cast<int>(pf.rank), {step.lead}, o), pf.vars);
        if (step.reduced) {
          std::cout << " reduced by {";
          bool first = true;
          for (std::size_t j = 0; j < step.indicator.size(); ++j)
            if (step.indicator[j]) {
              std::cout << (first ? "" : ",") << j + 1;
              first = false;
            }
          std::cout << "}\n";
        } else {
          std::cout << " moved to remainder\n";
        }
      }
    }
  }
  return 0;
}

int run_member(const std::string& path, const std::string& target, bool json) {
  ProblemFile pf = load_problem(path);
  OrderSpec o = pf.order();
  ModuleElement f = parse_element(target, pf, "<target>");
  GroebnerBasis gb = buchberger(pf.generators, o);
  DivisionResult d = divide(f, gb.elements, o);
  bool member = d.remainder.is_zero();
  if (json) {
    emit(ordered_json{{"command", "member"},
                      {"target", json_element(f, pf.vars)},
                      {"member", member},
                      {"remainder", json_element(d.remainder, pf.vars)}});
  } else {
    std::cout << (member ? "member\n" : "not a member\n");
    if (!member)
      std::cout << "remainder = " << render_element(d.remainder, pf.vars) << "\n";
  }
  return member ? 0 : 1;
}

int run_syzygy(const std::string& path, bool json, bool collapse) {
  ProblemFile pf = load_problem(path);
  OrderSpec o = pf.order();
  CriterionReport report = criterion_check(pf.generators, o);
  if (!report.passed) {
    std::cerr << "input generators fail the Groebner criterion; compute a basis first\n";
    return 1;
  }
  GroebnerBasis gb = as_certified(pf, o);
  SyzygyBasis syz = syzygy_basis(gb);
  std::vector<ModuleElement> collapsed;
  if (collapse) collapsed = collapse_same_lm(syz.elements(), syz.order);
  if (json) {
    ordered_json doc{{"command", "syzygy"}, {"relations", json_syzygies(syz, pf.vars)}};
    if (collapse) {
      ordered_json arr = ordered_json::array();
      for (const auto& s : collapsed) arr.push_back(json_element(s, pf.vars, "g"));
      doc["collapsed"] = arr;
    }
    emit(doc);
  } else {
    for (const auto& rel : syz.relations) {
      if (rel.kind == SyzygyRelation::Kind::pair)
        std::cout << "pair(" << rel.alpha + 1 << "," << rel.beta + 1 << "): ";
      else
        std::cout << "ann(" << rel.alpha + 1 << "): ";
      std::cout << render_element(rel.element, pf.vars, "g") << "\n";
    }
    if (collapse) {
      std::cout << "collapsed size " << collapsed.size() << "\n";
      for (std::size_t k = 0; k < collapsed.size(); ++k)
        std::cout << "s" << k + 1 << " = " << render_element(collapsed[k], pf.vars, "g") << "\n";
    }
  }
  return 0;
}

void print_matrix(const ScalarMatrix& m, const std::vector<std::string>& vars) {
  for (std::size_t r = 0; r < m.rows; ++r) {
    std::cout << " ";
    for (std::size_t c = 0; c < m.cols; ++c)
      std::cout << " [" << render_element(m.entries[r][c], vars) << "]";
    std::cout << "\n";
  }
}

int run_resolve(const std::string& path, bool json, std::size_t max_length, bool collapse) {
  ProblemFile pf = load_problem(path);
  OrderSpec o = pf.order();
  Resolution res = resolve(pf.generators, o, max_length, collapse);
  if (json) {
    ordered_json doc{{"command", "resolve"}};
    doc.update(json_resolution(res, pf.vars));
    emit(doc);
  } else {
    std::cout << "ranks:";
    for (auto r : res.ranks) std::cout << " " << r;
    std::cout << "\n";
    switch (res.status) {
      case ResolutionStatus::finite:
        std::cout << "status: finite (length " << res.length << ")\n";
        break;
      case ResolutionStatus::periodic:
        std::cout << "status: periodic (start " << res.period_start << ", length "
                  << res.period_length << ")\n";
        break;
      case ResolutionStatus::truncated:
        std::cout << "status: truncated at max length " << max_length << "\n";
        break;
    }
    std::cout << "projective dimension bound applicable: " << (res.bound_applicable ? "yes" : "no")
              << "\n";
    if (res.bound_applicable)
      std::cout << "bound violated: " << (res.bound_violated ? "yes" : "no") << "\n";
    std::cout << "presentation (" << res.presentation.rows << "x" << res.presentation.cols
              << "):\n";
    print_matrix(res.presentation, pf.vars);
    for (std::size_t k = 0; k < res.differentials.size(); ++k) {
      std::cout << "d" << k + 1 << " (" << res.differentials[k].rows << "x"
                << res.differentials[k].cols << "):\n";
      print_matrix(res.differentials[k], pf.vars);
    }
  }
  return 0;
}

int run_oracle_member(const std::string& path, const std::string& target, int bound, bool json) {
  ProblemFile pf = load_problem(path);
  ModuleElement f = parse_element(target, pf, "<target>");
  MembershipVerdict v = member_bruteforce(f, pf.generators, DegreeBound{bound});
  const char* kind = v.kind == MembershipVerdict::Kind::member ? "member"
                     : v.kind == MembershipVerdict::Kind::not_member_up_to_bound
                         ? "not-member-up-to-bound"
                         : "refused";
  if (json) {
    ordered_json doc{{"command", "oracle-member"}, {"bound", bound}, {"verdict", kind}};
    if (v.kind == MembershipVerdict::Kind::member) {
      ordered_json arr = ordered_json::array();
      for (const auto& h : v.witness) arr.push_back(json_element(h, pf.vars));
      doc["witness"] = arr;
    }
    emit(doc);
  } else {
    std::cout << kind << "\n";
    if (v.kind == MembershipVerdict::Kind::member)
      for (std::size_t j = 0; j < v.witness.size(); ++j)
        std::cout << "h" << j + 1 << " = " << render_element(v.witness[j], pf.vars) << "\n";
  }
  switch (v.kind) {
    case MembershipVerdict::Kind::member: return 0;
    case MembershipVerdict::Kind::not_member_up_to_bound: return 1;
    case MembershipVerdict::Kind::refused: return 2;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Groebner bases, syzygies, and free resolutions for modules over Z/N1 x ... x Z/Nr"};
  app.require_subcommand(1);

  std::string file;
  std::string target;
  bool json = false, trace = false, minimize_flag = false, no_collapse = false, collapse = false;
  std::size_t max_length = 6;
  int bound = 3;

  auto add_file = [&](CLI::App* cmd) {
    cmd->add_option("file", file, "problem file")->required();
    cmd->add_flag("--json", json, "render output as JSON");
  };

  CLI::App* g = app.add_subcommand("groebner", "compute a certified basis of the input module");
  add_file(g);
  g->add_flag("--minimize", minimize_flag, "drop redundant elements afterwards");
  g->add_flag("--trace", trace, "print each element as a combination of the inputs");

  CLI::App* c = app.add_subcommand("check", "test whether the listed generators pass the basis criterion");
  add_file(c);

  CLI::App* r = app.add_subcommand("reduce", "divide a target element by the listed generators");
  add_file(r);
  r->add_option("--target", target, "element to reduce")->required();
  r->add_flag("--trace", trace, "print the per-step division decisions");

  CLI::App* m = app.add_subcommand("member", "decide module membership of a target element");
  add_file(m);
  m->add_option("--target", target, "element to test")->required();

  CLI::App* s = app.add_subcommand("syzygy", "relations between certified basis elements");
  add_file(s);
  s->add_flag("--collapse", collapse, "also print the combined relation set");

  CLI::App* v = app.add_subcommand("resolve", "iterated syzygies as a free resolution");
  add_file(v);
  v->add_option("--max-length", max_length, "stop after this many steps");
  v->add_flag("--no-collapse", no_collapse, "keep raw relation sets at every step");

  CLI::App* om = app.add_subcommand("oracle-member", "degree-bounded membership by direct linear algebra");
  om->group("");  // hidden, debugging only
  add_file(om);
  om->add_option("--target", target, "element to test")->required();
  om->add_option("--bound", bound, "multiplier total degree bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*g) return run_groebner(file, json, minimize_flag, trace);
    if (*c) return run_check(file, json);
    if (*r) return run_reduce(file, target, json, trace);
    if (*m) return run_member(file, target, json);
    if (*s) return run_syzygy(file, json, collapse);
    if (*v) return run_resolve(file, json, max_length, !no_collapse);
    if (*om) return run_oracle_member(file, target, bound, json);
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
