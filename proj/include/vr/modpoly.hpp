#pragma once

// Dense univariate polynomials over a prime field F_p, p < 2^63.
// Coefficients ascending, reduced to [0, p); the zero polynomial is
// empty. gcd results are normalized monic.

#include "vr/poly.hpp"

#include <cstdint>
#include <vector>

namespace vr {

struct ModPoly {
    std::uint64_t p = 0;
    std::vector<std::uint64_t> c;

    ModPoly() = default;
    ModPoly(std::uint64_t prime, std::vector<std::uint64_t> coeffs);

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    std::uint64_t coeff(int i) const {
        return (i < 0 || i >= static_cast<int>(c.size())) ? 0 : c[static_cast<size_t>(i)];
    }
    std::uint64_t leading() const;

    void normalize();

    friend bool operator==(const ModPoly& a, const ModPoly& b) {
        return a.p == b.p && a.c == b.c;
    }
};

std::uint64_t mod_add(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t mod_sub(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p);

ModPoly mod_poly_from(const IntPoly& f, std::uint64_t p);
ModPoly mod_monomial(std::uint64_t p, std::uint64_t coeff, int deg);

ModPoly operator+(const ModPoly& a, const ModPoly& b);
ModPoly operator-(const ModPoly& a, const ModPoly& b);
ModPoly operator*(const ModPoly& a, const ModPoly& b);
ModPoly mod_scale(const ModPoly& a, std::uint64_t s);

std::pair<ModPoly, ModPoly> mod_divrem(const ModPoly& a, const ModPoly& b);
ModPoly mod_make_monic(const ModPoly& a);
ModPoly mod_gcd(const ModPoly& a, const ModPoly& b);
ModPoly mod_derivative(const ModPoly& a);

// base^e reduced mod f (e may exceed 2^64 as an Int)
ModPoly mod_pow_mod(const ModPoly& base, const Int& e, const ModPoly& f);

}  // namespace vr
