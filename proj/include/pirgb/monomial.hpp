/**
 * @file monomial.hpp
 * @brief Exponent-vector monomials in a fixed set of variables.
 */
#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

namespace pirgb {

using Monomial = std::vector<int>;

inline Monomial mono_one(std::size_t nvars) { return Monomial(nvars, 0); }

inline bool is_mono_one(const Monomial& u) {
    for (int e : u)
        if (e != 0) return false;
    return true;
}

inline int total_degree(const Monomial& u) {
    int d = 0;
    for (int e : u) d += e;
    return d;
}

inline Monomial mono_mul(const Monomial& u, const Monomial& v) {
    if (u.size() != v.size()) throw std::invalid_argument("mono_mul: variable count mismatch");
    Monomial w(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) w[i] = u[i] + v[i];
    return w;
}

inline Monomial mono_lcm(const Monomial& u, const Monomial& v) {
    if (u.size() != v.size()) throw std::invalid_argument("mono_lcm: variable count mismatch");
    Monomial w(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) w[i] = u[i] > v[i] ? u[i] : v[i];
    return w;
}

inline bool mono_divides(const Monomial& v, const Monomial& u) {
    if (u.size() != v.size()) throw std::invalid_argument("mono_divides: variable count mismatch");
    for (std::size_t i = 0; i < u.size(); ++i)
        if (v[i] > u[i]) return false;
    return true;
}

/// u / v when v divides u.
inline std::optional<Monomial> mono_div(const Monomial& u, const Monomial& v) {
    if (u.size() != v.size()) throw std::invalid_argument("mono_div: variable count mismatch");
    Monomial w(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (v[i] > u[i]) return std::nullopt;
        w[i] = u[i] - v[i];
    }
    return w;
}

}  // namespace pirgb
