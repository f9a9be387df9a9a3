/**
 * @file ring.hpp
 * @brief Exact arithmetic in R = Z/N1 x ... x Z/Np (N=0 denotes the integers).
 *
 * Every element is kept componentwise canonical: 0 <= c < N for a finite
 * component, an arbitrary integer for an integer component.  Divisibility
 * theory works through the unit*divisor presentation a = u*d with u a unit
 * and d | N (d = |a| over the integers), which replaces prime factorization:
 * gcd, lcm and annihilators only ever touch the divisor parts.
 */
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pirgb {

using Int = boost::multiprecision::cpp_int;

namespace detail {

/// Extended gcd: returns (g, s, t) with g = s*a + t*b and g >= 0.
/// ext_gcd(0, 0) = (0, 1, 0) so that gcd folds keep a usable multiplier.
inline std::tuple<Int, Int, Int> ext_gcd(const Int& a, const Int& b) {
    Int old_r = a, r = b;
    Int old_s = 1, s = 0;
    Int old_t = 0, t = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r; old_r = r; r = tmp;
        tmp = old_s - q * s; old_s = s; s = tmp;
        tmp = old_t - q * t; old_t = t; t = tmp;
    }
    if (old_r < 0) { old_r = -old_r; old_s = -old_s; old_t = -old_t; }
    return {old_r, old_s, old_t};
}

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int gcd_int(const Int& a, const Int& b) {
    return boost::multiprecision::gcd(a, b);
}

inline Int lcm_int(const Int& a, const Int& b) {
    if (a == 0 || b == 0) return 0;
    return abs_int(a / gcd_int(a, b) * b);
}

/// Canonical representative in [0, N) for N >= 2.
inline Int mod_floor(const Int& a, const Int& n) {
    Int r = a % n;
    if (r < 0) r += n;
    return r;
}

/// Inverse of u modulo N; u must be coprime to N.
inline Int mod_inverse(const Int& u, const Int& n) {
    auto [g, s, t] = ext_gcd(mod_floor(u, n), n);
    if (g != 1) throw std::logic_error("mod_inverse: argument is not a unit");
    return mod_floor(s, n);
}

}  // namespace detail

/// Shape of the coefficient ring: one modulus per component.
/// A modulus of 0 is the ring of integers, a modulus >= 2 is Z/N; 1 is rejected.
struct RingSpec {
    std::vector<Int> moduli;

    RingSpec() = default;
    explicit RingSpec(std::vector<Int> m) : moduli(std::move(m)) {
        if (moduli.empty())
            throw std::invalid_argument("RingSpec: at least one component required");
        for (const Int& n : moduli)
            if (n < 0 || n == 1)
                throw std::invalid_argument("RingSpec: each modulus must be 0 or >= 2");
    }

    std::size_t components() const { return moduli.size(); }
    bool operator==(const RingSpec&) const = default;
};

/// Element of the product ring, componentwise canonical.
struct RingElement {
    std::vector<Int> c;

    RingElement() = default;
    explicit RingElement(std::vector<Int> v) : c(std::move(v)) {}

    bool operator==(const RingElement&) const = default;
};

inline void check_arity(const RingElement& a, const RingSpec& spec) {
    if (a.c.size() != spec.components())
        throw std::invalid_argument("ring element arity does not match the ring");
}

/// Componentwise reduction into canonical form; identity on integer components.
inline RingElement normalize(const std::vector<Int>& raw, const RingSpec& spec) {
    if (raw.size() != spec.components())
        throw std::invalid_argument("normalize: arity mismatch");
    RingElement out;
    out.c.reserve(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        const Int& n = spec.moduli[i];
        out.c.push_back(n == 0 ? raw[i] : detail::mod_floor(raw[i], n));
    }
    return out;
}

inline RingElement ring_zero(const RingSpec& spec) {
    return RingElement(std::vector<Int>(spec.components(), 0));
}

inline RingElement ring_one(const RingSpec& spec) {
    RingElement e(std::vector<Int>(spec.components(), 1));
    for (std::size_t i = 0; i < spec.components(); ++i)
        if (spec.moduli[i] == 2) e.c[i] = 1;  // already canonical
    return e;
}

inline bool is_zero(const RingElement& a) {
    for (const Int& v : a.c)
        if (v != 0) return false;
    return true;
}

inline RingElement ring_add(const RingElement& a, const RingElement& b, const RingSpec& spec) {
    check_arity(a, spec); check_arity(b, spec);
    RingElement out; out.c.reserve(a.c.size());
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        Int v = a.c[i] + b.c[i];
        out.c.push_back(spec.moduli[i] == 0 ? v : detail::mod_floor(v, spec.moduli[i]));
    }
    return out;
}

inline RingElement ring_sub(const RingElement& a, const RingElement& b, const RingSpec& spec) {
    check_arity(a, spec); check_arity(b, spec);
    RingElement out; out.c.reserve(a.c.size());
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        Int v = a.c[i] - b.c[i];
        out.c.push_back(spec.moduli[i] == 0 ? v : detail::mod_floor(v, spec.moduli[i]));
    }
    return out;
}

inline RingElement ring_mul(const RingElement& a, const RingElement& b, const RingSpec& spec) {
    check_arity(a, spec); check_arity(b, spec);
    RingElement out; out.c.reserve(a.c.size());
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        Int v = a.c[i] * b.c[i];
        out.c.push_back(spec.moduli[i] == 0 ? v : detail::mod_floor(v, spec.moduli[i]));
    }
    return out;
}

inline RingElement ring_neg(const RingElement& a, const RingSpec& spec) {
    check_arity(a, spec);
    RingElement out; out.c.reserve(a.c.size());
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        Int v = -a.c[i];
        out.c.push_back(spec.moduli[i] == 0 ? v : detail::mod_floor(v, spec.moduli[i]));
    }
    return out;
}

inline bool is_unit(const RingElement& a, const RingSpec& spec) {
    check_arity(a, spec);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (spec.moduli[i] == 0) {
            if (a.c[i] != 1 && a.c[i] != -1) return false;
        } else if (detail::gcd_int(a.c[i], spec.moduli[i]) != 1) {
            return false;
        }
    }
    return true;
}

/// a = unit * divisor with the divisor kept as a plain integer per component:
/// gcd(a, N) in [1..N] for a finite component (N itself encodes zero), |a| for
/// an integer component.  The unit is the smallest positive coprime lift.
struct UnitDivisorForm {
    RingElement unit;
    std::vector<Int> divisor;
};

namespace detail {

/// Smallest positive u with u = u0 (mod step) and gcd(u, n) = 1.
/// A coprime residue exists in the progression because gcd(u0, step) = 1.
inline Int smallest_coprime_lift(const Int& u0, const Int& step, const Int& n) {
    Int u = u0 == 0 ? step : u0;
    while (gcd_int(u, n) != 1) u += step;
    return u;
}

inline void unit_divisor_component(const Int& a, const Int& n, Int& unit, Int& divisor) {
    if (n == 0) {
        divisor = abs_int(a);
        unit = a < 0 ? -1 : 1;
        return;
    }
    divisor = a == 0 ? n : gcd_int(a, n);
    Int cofactor = n / divisor;
    if (cofactor == 1) { unit = 1; return; }
    Int u0 = mod_floor(a / divisor, cofactor);
    unit = smallest_coprime_lift(u0, cofactor, n);
}

}  // namespace detail

inline UnitDivisorForm unit_divisor_form(const RingElement& a, const RingSpec& spec) {
    check_arity(a, spec);
    UnitDivisorForm f;
    f.unit.c.resize(a.c.size());
    f.divisor.resize(a.c.size());
    for (std::size_t i = 0; i < a.c.size(); ++i)
        detail::unit_divisor_component(a.c[i], spec.moduli[i], f.unit.c[i], f.divisor[i]);
    return f;
}

/// Inverse of a componentwise unit.
inline RingElement unit_inverse(const RingElement& u, const RingSpec& spec) {
    check_arity(u, spec);
    RingElement out; out.c.reserve(u.c.size());
    for (std::size_t i = 0; i < u.c.size(); ++i) {
        if (spec.moduli[i] == 0) {
            if (u.c[i] != 1 && u.c[i] != -1)
                throw std::logic_error("unit_inverse: not a unit over the integers");
            out.c.push_back(u.c[i]);
        } else {
            out.c.push_back(detail::mod_inverse(u.c[i], spec.moduli[i]));
        }
    }
    return out;
}

/// Canonical gcd: integer gcd of divisor parts, reduced, unit part 1.
inline RingElement gcd_r(const RingElement& a, const RingElement& b, const RingSpec& spec) {
    check_arity(a, spec); check_arity(b, spec);
    RingElement out; out.c.reserve(a.c.size());
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        const Int& n = spec.moduli[i];
        if (n == 0) {
            out.c.push_back(detail::gcd_int(a.c[i], b.c[i]));
        } else {
            Int da = a.c[i] == 0 ? n : detail::gcd_int(a.c[i], n);
            Int db = b.c[i] == 0 ? n : detail::gcd_int(b.c[i], n);
            out.c.push_back(detail::mod_floor(detail::gcd_int(da, db), n));
        }
    }
    return out;
}

/// Canonical lcm of divisor parts; reaches 0 when the lcm hits the modulus.
inline RingElement lcm_r(const RingElement& a, const RingElement& b, const RingSpec& spec) {
    check_arity(a, spec); check_arity(b, spec);
    RingElement out; out.c.reserve(a.c.size());
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        const Int& n = spec.moduli[i];
        if (n == 0) {
            out.c.push_back(detail::lcm_int(a.c[i], b.c[i]));
        } else {
            Int da = a.c[i] == 0 ? n : detail::gcd_int(a.c[i], n);
            Int db = b.c[i] == 0 ? n : detail::gcd_int(b.c[i], n);
            out.c.push_back(detail::mod_floor(detail::lcm_int(da, db), n));
        }
    }
    return out;
}

/// Exact quotient q with q*a = b, when divisor(a) | divisor(b) componentwise.
/// The quotient is pinned to (divisor(b)/divisor(a)) * unit(b) * unit(a)^-1.
inline std::optional<RingElement> divide_exact(const RingElement& b, const RingElement& a,
                                               const RingSpec& spec) {
    check_arity(a, spec); check_arity(b, spec);
    RingElement out; out.c.reserve(a.c.size());
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        const Int& n = spec.moduli[i];
        if (n == 0) {
            if (a.c[i] == 0) {
                if (b.c[i] != 0) return std::nullopt;
                out.c.push_back(1);
            } else {
                if (b.c[i] % a.c[i] != 0) return std::nullopt;
                out.c.push_back(b.c[i] / a.c[i]);
            }
        } else {
            Int ua, da, ub, db;
            detail::unit_divisor_component(a.c[i], n, ua, da);
            detail::unit_divisor_component(b.c[i], n, ub, db);
            if (db % da != 0) return std::nullopt;
            Int q = (db / da) * ub % n * detail::mod_inverse(ua, n) % n;
            out.c.push_back(detail::mod_floor(q, n));
        }
    }
    return out;
}

/// Generator of { b : b*a = 0 }: N/gcd(a,N) on finite components, the
/// zero/one indicator on integer components.
inline RingElement annihilator(const RingElement& a, const RingSpec& spec) {
    check_arity(a, spec);
    RingElement out; out.c.reserve(a.c.size());
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        const Int& n = spec.moduli[i];
        if (n == 0) {
            out.c.push_back(a.c[i] == 0 ? 1 : 0);
        } else {
            Int d = a.c[i] == 0 ? n : detail::gcd_int(a.c[i], n);
            out.c.push_back(detail::mod_floor(n / d, n));
        }
    }
    return out;
}

namespace detail {

/// Fold state for one component: d >= 0 together with multipliers m where
/// sum m[j]*g[j] = d over the integers.  The all-zero list keeps m = [1,0,..]
/// so that a 0 = 1*0 witness survives; this pins the 0/0 quotient to 1.
struct GcdFold {
    Int d = 0;
    std::vector<Int> mults;

    void push(const Int& g) {
        if (mults.empty()) {
            d = abs_int(g);
            mults.push_back(g < 0 ? -1 : 1);
            return;
        }
        auto [g2, s, t] = ext_gcd(d, g);
        for (Int& m : mults) m *= s;
        mults.push_back(t);
        d = g2;
    }
};

/// Solve c = sum b[j]*g[j] in Z (n == 0) or Z/n.
inline std::optional<std::vector<Int>> solve_component(const Int& c, const std::vector<Int>& gens,
                                                       const Int& n) {
    if (gens.empty()) {
        if (c != 0) return std::nullopt;
        return std::vector<Int>{};
    }
    GcdFold fold;
    for (const Int& g : gens) fold.push(g);
    if (n == 0) {
        if (fold.d == 0) {
            if (c != 0) return std::nullopt;
            return fold.mults;  // q = 1 by convention
        }
        if (c % fold.d != 0) return std::nullopt;
        Int q = c / fold.d;
        for (Int& m : fold.mults) m *= q;
        return fold.mults;
    }
    fold.push(n);  // adjoin the modulus, its multiplier is discarded
    fold.mults.pop_back();
    if (c % fold.d != 0) return std::nullopt;
    Int q = c / fold.d;
    for (Int& m : fold.mults) m = mod_floor(m * q, n);
    return fold.mults;
}

}  // namespace detail

/// One coefficient list b with sum b[j]*gens[j] = c, or NotMember (nullopt).
/// Deterministic; an empty generator list is a member test against the zero ideal.
inline std::optional<std::vector<RingElement>> solve_membership(const RingElement& c,
                                                                const std::vector<RingElement>& gens,
                                                                const RingSpec& spec) {
    check_arity(c, spec);
    for (const RingElement& g : gens) check_arity(g, spec);
    std::vector<RingElement> out(gens.size(), ring_zero(spec));
    for (std::size_t i = 0; i < spec.components(); ++i) {
        std::vector<Int> comp;
        comp.reserve(gens.size());
        for (const RingElement& g : gens) comp.push_back(g.c[i]);
        auto sol = detail::solve_component(c.c[i], comp, spec.moduli[i]);
        if (!sol) return std::nullopt;
        for (std::size_t j = 0; j < gens.size(); ++j) out[j].c[i] = (*sol)[j];
    }
    return out;
}

struct BezoutResult {
    RingElement gcd;
    std::vector<RingElement> multipliers;
};

/// Canonical gcd of the whole list plus Bezout multipliers that recombine to it.
inline BezoutResult bezout_combine(const std::vector<RingElement>& coeffs, const RingSpec& spec) {
    if (coeffs.empty())
        throw std::invalid_argument("bezout_combine: empty list");
    for (const RingElement& a : coeffs) check_arity(a, spec);
    BezoutResult res;
    res.gcd = ring_zero(spec);
    res.multipliers.assign(coeffs.size(), ring_zero(spec));
    for (std::size_t i = 0; i < spec.components(); ++i) {
        const Int& n = spec.moduli[i];
        detail::GcdFold fold;
        if (n == 0) {
            for (const RingElement& a : coeffs) fold.push(a.c[i]);
            res.gcd.c[i] = fold.d;
            for (std::size_t j = 0; j < coeffs.size(); ++j)
                res.multipliers[j].c[i] = fold.mults[j];
        } else {
            // fold the divisor parts, then undo the units
            std::vector<Int> units(coeffs.size());
            for (std::size_t j = 0; j < coeffs.size(); ++j) {
                Int u, d;
                detail::unit_divisor_component(coeffs[j].c[i], n, u, d);
                units[j] = u;
                fold.push(d);
            }
            res.gcd.c[i] = detail::mod_floor(fold.d, n);
            for (std::size_t j = 0; j < coeffs.size(); ++j)
                res.multipliers[j].c[i] =
                    detail::mod_floor(fold.mults[j] * detail::mod_inverse(units[j], n), n);
        }
    }
    return res;
}

}  // namespace pirgb
