#pragma once

#include <cctype>
#include <cstddef>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <pirgb/element.hpp>
#include <pirgb/order.hpp>
#include <pirgb/poly.hpp>
#include <pirgb/ring.hpp>

namespace pirgb {

// Diagnostic carrying a source position and a stable error code. what() is
// formatted as "file:line:col: error[CODE]: message" so editors can jump to it.
class ParseError : public std::runtime_error {
public:
  ParseError(std::string file, int line, int col, std::string code, std::string message)
      : std::runtime_error(format(file, line, col, code, message)),
        file_(std::move(file)), line_(line), col_(col),
        code_(std::move(code)), message_(std::move(message)) {}

  const std::string& file() const { return file_; }
  int line() const { return line_; }
  int col() const { return col_; }
  const std::string& code() const { return code_; }
  const std::string& message() const { return message_; }

private:
  static std::string format(const std::string& file, int line, int col,
                            const std::string& code, const std::string& message) {
    std::ostringstream out;
    out << file << ":" << line << ":" << col << ": error[" << code << "]: " << message;
    return out.str();
  }

  std::string file_;
  int line_ = 0;
  int col_ = 0;
  std::string code_;
  std::string message_;
};

inline constexpr const char* E_SYNTAX = "E_SYNTAX";
inline constexpr const char* E_RING = "E_RING";
inline constexpr const char* E_ORDER = "E_ORDER";
inline constexpr const char* E_RANK = "E_RANK";
inline constexpr const char* E_UNKNOWN_VAR = "E_UNKNOWN_VAR";
inline constexpr const char* E_BASIS_RANGE = "E_BASIS_RANGE";
inline constexpr const char* E_COEFF_ARITY = "E_COEFF_ARITY";
inline constexpr const char* E_ZERO_GEN = "E_ZERO_GEN";
inline constexpr const char* E_DUP_DIRECTIVE = "E_DUP_DIRECTIVE";
inline constexpr const char* E_MISSING_DIRECTIVE = "E_MISSING_DIRECTIVE";

// Parsed problem description. `vars` is ordered by precedence (first listed is
// largest); exponent vectors index into it positionally.
struct ProblemFile {
  RingSpec ring;
  std::vector<std::string> vars;
  BaseOrder base = BaseOrder::lex;
  ModuleRule rule = ModuleRule::pot;
  std::size_t rank = 1;
  std::vector<ModuleElement> generators;

  OrderSpec order() const { return make_order(base, vars.size(), rule); }

  bool operator==(const ProblemFile& other) const {
    return ring == other.ring && vars == other.vars && base == other.base &&
           rule == other.rule && rank == other.rank && generators == other.generators;
  }
};

namespace detail {

// Single-line scanner; keeps enough position to produce column-accurate
// diagnostics against the original source text.
class LineScanner {
public:
  LineScanner(const std::string& text, std::string file, int line, int col_base = 1)
      : text_(text), file_(std::move(file)), line_(line), col_base_(col_base) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  std::size_t pos() const { return pos_; }
  int col() const { return col_base_ + static_cast<int>(pos_); }
  int col_at(std::size_t p) const { return col_base_ + static_cast<int>(p); }

  [[noreturn]] void fail(const std::string& code, const std::string& message) const {
    throw ParseError(file_, line_, col(), code, message);
  }

  [[noreturn]] void fail_at(std::size_t p, const std::string& code, const std::string& message) const {
    throw ParseError(file_, line_, col_at(p), code, message);
  }

  bool consume(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c, const std::string& what) {
    if (!consume(c)) fail(E_SYNTAX, "expected '" + std::string(1, c) + "' " + what);
  }

  std::string take_identifier() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ >= text_.size() || !(std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      fail(E_SYNTAX, "expected identifier");
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    return text_.substr(start, pos_ - start);
  }

  bool peek_identifier() {
    skip_ws();
    return pos_ < text_.size() &&
           (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_');
  }

  Int take_int() {
    skip_ws();
    std::size_t start = pos_;
    bool neg = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      neg = text_[pos_] == '-';
      ++pos_;
    }
    std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) fail_at(start, E_SYNTAX, "expected integer");
    Int value(text_.substr(digits, pos_ - digits));
    return neg ? Int(-value) : value;
  }

private:
  const std::string& text_;
  std::string file_;
  int line_ = 0;
  int col_base_ = 1;
  std::size_t pos_ = 0;
};

inline int take_small_exponent(LineScanner& sc) {
  std::size_t at = sc.pos();
  Int e = sc.take_int();
  if (e < 0) sc.fail_at(at, E_SYNTAX, "exponent must be nonnegative");
  if (e > 1000000) sc.fail_at(at, E_SYNTAX, "exponent too large");
  return static_cast<int>(e);
}

inline std::vector<Int> parse_coefficient(LineScanner& sc, const RingSpec& spec) {
  std::size_t at = sc.pos();
  std::vector<Int> raw;
  sc.skip_ws();
  at = sc.pos();
  if (sc.consume('(')) {
    raw.push_back(sc.take_int());
    while (sc.consume(',')) raw.push_back(sc.take_int());
    sc.expect(')', "to close coefficient tuple");
  } else {
    raw.push_back(sc.take_int());
  }
  if (raw.size() != spec.moduli.size()) {
    std::ostringstream msg;
    msg << "coefficient has " << raw.size() << " component" << (raw.size() == 1 ? "" : "s")
        << " but the ring has " << spec.moduli.size();
    sc.fail_at(at, E_COEFF_ARITY, msg.str());
  }
  return raw;
}

inline bool looks_like_basis_token(const std::string& name) {
  if (name.size() < 2 || name[0] != 'e') return false;
  for (std::size_t i = 1; i < name.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return false;
  return true;
}

inline Term parse_raw_term(LineScanner& sc, const RingSpec& spec,
                           const std::map<std::string, std::size_t>& var_index,
                           std::size_t nvars, std::size_t rank) {
  Term t;
  t.coeff.c = parse_coefficient(sc, spec);
  t.mono = mono_one(nvars);
  t.basis = 0;
  bool basis_seen = false;
  while (sc.consume('*')) {
    sc.skip_ws();
    std::size_t at = sc.pos();
    std::string name = sc.take_identifier();
    auto hit = var_index.find(name);
    if (hit != var_index.end()) {
      int exp = 1;
      if (sc.consume('^')) exp = take_small_exponent(sc);
      t.mono[hit->second] += exp;
      continue;
    }
    if (looks_like_basis_token(name)) {
      if (basis_seen) sc.fail_at(at, E_SYNTAX, "more than one basis factor in a term");
      Int k(name.substr(1));
      if (k < 1 || k > Int(rank)) {
        std::ostringstream msg;
        msg << "basis index " << name.substr(1) << " out of range 1.." << rank;
        sc.fail_at(at, E_BASIS_RANGE, msg.str());
      }
      t.basis = static_cast<int>(k - 1);
      basis_seen = true;
      continue;
    }
    sc.fail_at(at, E_UNKNOWN_VAR, "unknown variable '" + name + "'");
  }
  return t;
}

inline ModuleElement parse_element_scanner(LineScanner& sc, const RingSpec& spec,
                                           const std::map<std::string, std::size_t>& var_index,
                                           std::size_t nvars, std::size_t rank,
                                           const OrderSpec& o) {
  std::vector<Term> raw;
  bool negate_first = false;
  sc.skip_ws();
  if (sc.consume('-')) negate_first = true;
  else sc.consume('+');
  Term first = parse_raw_term(sc, spec, var_index, nvars, rank);
  if (negate_first)
    for (auto& c : first.coeff.c) c = -c;
  raw.push_back(first);
  while (true) {
    sc.skip_ws();
    char c = sc.peek();
    if (c != '+' && c != '-') break;
    bool negate = sc.consume('-');
    if (!negate) sc.consume('+');
    Term t = parse_raw_term(sc, spec, var_index, nvars, rank);
    if (negate)
      for (auto& e : t.coeff.c) e = -e;
    raw.push_back(t);
  }
  if (!sc.at_end()) sc.fail(E_SYNTAX, "unexpected character in element");
  return make_element(spec, static_cast<int>(rank), raw, o);
}

inline RingSpec parse_ring_scanner(LineScanner& sc) {
  RingSpec spec;
  while (true) {
    sc.skip_ws();
    std::size_t at = sc.pos();
    if (!sc.peek_identifier()) sc.fail(E_RING, "expected ring component 'ZZ' or 'Z/<n>'");
    std::string name = sc.take_identifier();
    if (name != "ZZ" && name != "Z")
      sc.fail_at(at, E_RING, "unknown ring component '" + name + "' (expected 'ZZ' or 'Z/<n>')");
    Int modulus = 0;
    if (sc.consume('/')) {
      std::size_t mat = sc.pos();
      modulus = sc.take_int();
      if (modulus < 0) sc.fail_at(mat, E_RING, "modulus must be nonnegative");
      if (modulus == 1) sc.fail_at(mat, E_RING, "modulus 1 is not a valid component");
    }
    spec.moduli.push_back(modulus);
    if (sc.at_end()) break;
    std::size_t sat = sc.pos();
    std::string sep = sc.take_identifier();
    if (sep != "x" && sep != "X")
      sc.fail_at(sat, E_SYNTAX, "expected 'x' between ring components");
  }
  return spec;
}

}  // namespace detail

inline RingSpec parse_ring(const std::string& text, const std::string& file = "<ring>",
                           int line = 1, int col_base = 1) {
  detail::LineScanner sc(text, file, line, col_base);
  return detail::parse_ring_scanner(sc);
}

inline ModuleElement parse_element(const std::string& text, const ProblemFile& pf,
                                   const std::string& file = "<element>",
                                   int line = 1, int col_base = 1) {
  std::map<std::string, std::size_t> var_index;
  for (std::size_t i = 0; i < pf.vars.size(); ++i) var_index[pf.vars[i]] = i;
  detail::LineScanner sc(text, file, line, col_base);
  return detail::parse_element_scanner(sc, pf.ring, var_index, pf.vars.size(), pf.rank,
                                       pf.order());
}

// Parses a whole problem file. Directives: ring, vars, order, rank,
// module_order, gen; `#` starts a comment. ring, vars, and order are required
// and must precede every gen line.
inline ProblemFile parse_problem(const std::string& text, const std::string& file = "<input>") {
  ProblemFile pf;
  bool saw_ring = false, saw_vars = false, saw_order = false;
  bool saw_rank = false, saw_rule = false;
  std::map<std::string, std::size_t> var_index;
  int line = 0;
  std::istringstream in(text);
  std::string raw;
  while (std::getline(in, raw)) {
    ++line;
    std::string body = raw;
    auto hash = body.find('#');
    if (hash != std::string::npos) body.resize(hash);
    detail::LineScanner sc(body, file, line);
    if (sc.at_end()) continue;
    std::size_t at = sc.pos();
    std::string directive = sc.take_identifier();
    auto require_before_gens = [&](const char* name) {
      if (!pf.generators.empty())
        sc.fail_at(at, E_SYNTAX, std::string(name) + " directive after the first gen line");
    };
    if (directive == "ring") {
      require_before_gens("ring");
      if (saw_ring) sc.fail_at(at, E_DUP_DIRECTIVE, "duplicate ring directive");
      pf.ring = detail::parse_ring_scanner(sc);
      saw_ring = true;
    } else if (directive == "vars") {
      require_before_gens("vars");
      if (saw_vars) sc.fail_at(at, E_DUP_DIRECTIVE, "duplicate vars directive");
      if (sc.at_end()) sc.fail(E_SYNTAX, "vars directive needs at least one name");
      while (!sc.at_end()) {
        std::size_t vat = sc.pos();
        std::string name = sc.take_identifier();
        if (var_index.count(name)) sc.fail_at(vat, E_SYNTAX, "duplicate variable '" + name + "'");
        var_index[name] = pf.vars.size();
        pf.vars.push_back(name);
      }
      saw_vars = true;
    } else if (directive == "order") {
      require_before_gens("order");
      if (saw_order) sc.fail_at(at, E_DUP_DIRECTIVE, "duplicate order directive");
      std::size_t oat = sc.pos();
      std::string name = sc.take_identifier();
      if (name == "lex") pf.base = BaseOrder::lex;
      else if (name == "grlex") pf.base = BaseOrder::grlex;
      else if (name == "grevlex") pf.base = BaseOrder::grevlex;
      else sc.fail_at(oat, E_ORDER, "unknown order '" + name + "' (expected lex, grlex, or grevlex)");
      if (!sc.at_end()) sc.fail(E_SYNTAX, "unexpected text after order directive");
      saw_order = true;
    } else if (directive == "module_order") {
      require_before_gens("module_order");
      if (saw_rule) sc.fail_at(at, E_DUP_DIRECTIVE, "duplicate module_order directive");
      std::size_t oat = sc.pos();
      std::string name = sc.take_identifier();
      if (name == "pot") pf.rule = ModuleRule::pot;
      else if (name == "top") pf.rule = ModuleRule::top;
      else sc.fail_at(oat, E_ORDER, "unknown module order '" + name + "' (expected pot or top)");
      if (!sc.at_end()) sc.fail(E_SYNTAX, "unexpected text after module_order directive");
      saw_rule = true;
    } else if (directive == "rank") {
      require_before_gens("rank");
      if (saw_rank) sc.fail_at(at, E_DUP_DIRECTIVE, "duplicate rank directive");
      std::size_t rat = sc.pos();
      Int r = sc.take_int();
      if (r < 1) sc.fail_at(rat, E_RANK, "rank must be a positive integer");
      if (r > 4096) sc.fail_at(rat, E_RANK, "rank too large");
      pf.rank = static_cast<std::size_t>(r);
      if (!sc.at_end()) sc.fail(E_SYNTAX, "unexpected text after rank directive");
      saw_rank = true;
    } else if (directive == "gen") {
      if (!saw_ring) sc.fail_at(at, E_MISSING_DIRECTIVE, "gen before ring directive");
      if (!saw_vars) sc.fail_at(at, E_MISSING_DIRECTIVE, "gen before vars directive");
      if (!saw_order) sc.fail_at(at, E_MISSING_DIRECTIVE, "gen before order directive");
      std::size_t eat = sc.pos();
      ModuleElement g = detail::parse_element_scanner(sc, pf.ring, var_index, pf.vars.size(),
                                                      pf.rank, pf.order());
      if (g.is_zero()) sc.fail_at(eat, E_ZERO_GEN, "generator is zero");
      pf.generators.push_back(g);
    } else {
      sc.fail_at(at, E_SYNTAX, "unknown directive '" + directive + "'");
    }
  }
  auto missing = [&](const char* what) {
    throw ParseError(file, line + 1, 1, E_MISSING_DIRECTIVE,
                     std::string("missing required ") + what + " directive");
  };
  if (!saw_ring) missing("ring");
  if (!saw_vars) missing("vars");
  if (!saw_order) missing("order");
  return pf;
}

inline std::string render_ring(const RingSpec& spec) {
  std::string out;
  for (std::size_t i = 0; i < spec.moduli.size(); ++i) {
    if (i) out += " x ";
    if (spec.moduli[i] == 0) out += "ZZ";
    else out += "Z/" + spec.moduli[i].str();
  }
  return out;
}

// Renders one element in the same grammar parse_element accepts. Rank-1
// elements omit the basis factor; single-component coefficients drop the
// tuple parentheses. `basis_symbol` lets callers print syzygy relations over
// basis letters other than e.
inline std::string render_element(const ModuleElement& f, const std::vector<std::string>& vars,
                                  const std::string& basis_symbol = "e") {
  if (f.terms.empty()) return "0";
  bool scalar_ring = f.spec.moduli.size() == 1;
  std::string out;
  for (std::size_t i = 0; i < f.terms.size(); ++i) {
    const Term& t = f.terms[i];
    std::vector<Int> cs = t.coeff.c;
    bool lead_minus = scalar_ring && cs[0] < 0;
    if (i == 0) {
      if (lead_minus) out += "-";
    } else {
      out += lead_minus ? " - " : " + ";
    }
    if (lead_minus) cs[0] = -cs[0];
    if (scalar_ring) {
      out += cs[0].str();
    } else {
      out += "(";
      for (std::size_t k = 0; k < cs.size(); ++k) {
        if (k) out += ",";
        out += cs[k].str();
      }
      out += ")";
    }
    for (std::size_t v = 0; v < t.mono.size(); ++v) {
      if (t.mono[v] == 0) continue;
      out += "*" + vars[v];
      if (t.mono[v] > 1) out += "^" + std::to_string(t.mono[v]);
    }
    if (f.rank > 1) out += "*" + basis_symbol + std::to_string(t.basis + 1);
  }
  return out;
}

inline std::string render_problem(const ProblemFile& pf) {
  std::string out = "ring " + render_ring(pf.ring) + "\n";
  out += "vars";
  for (const auto& v : pf.vars) out += " " + v;
  out += "\n";
  switch (pf.base) {
    case BaseOrder::lex: out += "order lex\n"; break;
    case BaseOrder::grlex: out += "order grlex\n"; break;
    case BaseOrder::grevlex: out += "order grevlex\n"; break;
  }
  if (pf.rank != 1) out += "rank " + std::to_string(pf.rank) + "\n";
  if (pf.rule == ModuleRule::top) out += "module_order top\n";
  for (const auto& g : pf.generators) out += "gen " + render_element(g, pf.vars) + "\n";
  return out;
}

}  // namespace pirgb
