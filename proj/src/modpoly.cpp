#include "vr/modpoly.hpp"

#include <stdexcept>

namespace vr {

std::uint64_t mod_add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    std::uint64_t s = a + b;
    if (s >= p || s < a) s -= p;
    return s;
}

std::uint64_t mod_sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : a + (p - b);
}

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e > 0) {
        if (e & 1) r = mod_mul(r, a, p);
        a = mod_mul(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) {
    if (a % p == 0) throw std::domain_error("inverse of zero mod p");
    return mod_pow(a % p, p - 2, p);  // p prime
}

ModPoly::ModPoly(std::uint64_t prime, std::vector<std::uint64_t> coeffs)
    : p(prime), c(std::move(coeffs)) {
    for (std::uint64_t& v : c) v %= p;
    normalize();
}

void ModPoly::normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

std::uint64_t ModPoly::leading() const {
    if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
    return c.back();
}

ModPoly mod_poly_from(const IntPoly& f, std::uint64_t p) {
    std::vector<std::uint64_t> c;
    c.reserve(f.coeffs().size());
    Int pz(static_cast<unsigned long>(p));
    for (const Int& v : f.coeffs()) {
        Int r = v % pz;
        if (sign_of(r) < 0) r += pz;
        c.push_back(r.get_ui());
    }
    return ModPoly(p, std::move(c));
}

ModPoly mod_monomial(std::uint64_t p, std::uint64_t coeff, int deg) {
    std::vector<std::uint64_t> c(static_cast<size_t>(deg) + 1, 0);
    c.back() = coeff % p;
    return ModPoly(p, std::move(c));
}

static void check_moduli(const ModPoly& a, const ModPoly& b) {
    if (a.p != b.p) throw std::invalid_argument("modulus mismatch");
}

ModPoly operator+(const ModPoly& a, const ModPoly& b) {
    check_moduli(a, b);
    ModPoly r = a;
    if (b.c.size() > r.c.size()) r.c.resize(b.c.size(), 0);
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = mod_add(r.c[i], b.c[i], a.p);
    r.normalize();
    return r;
}

ModPoly operator-(const ModPoly& a, const ModPoly& b) {
    check_moduli(a, b);
    ModPoly r = a;
    if (b.c.size() > r.c.size()) r.c.resize(b.c.size(), 0);
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = mod_sub(r.c[i], b.c[i], a.p);
    r.normalize();
    return r;
}

ModPoly operator*(const ModPoly& a, const ModPoly& b) {
    check_moduli(a, b);
    if (a.is_zero() || b.is_zero()) return ModPoly(a.p, {});
    std::vector<std::uint64_t> r(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j) {
            r[i + j] = mod_add(r[i + j], mod_mul(a.c[i], b.c[j], a.p), a.p);
        }
    }
    return ModPoly(a.p, std::move(r));
}

ModPoly mod_scale(const ModPoly& a, std::uint64_t s) {
    ModPoly r = a;
    s %= a.p;
    for (std::uint64_t& v : r.c) v = mod_mul(v, s, a.p);
    r.normalize();
    return r;
}

std::pair<ModPoly, ModPoly> mod_divrem(const ModPoly& a, const ModPoly& b) {
    check_moduli(a, b);
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    ModPoly q(a.p, {});
    ModPoly r = a;
    std::uint64_t inv = mod_inv(b.leading(), a.p);
    while (!r.is_zero() && r.degree() >= b.degree()) {
        std::uint64_t coef = mod_mul(r.leading(), inv, a.p);
        int d = r.degree() - b.degree();
        ModPoly term = mod_monomial(a.p, coef, d);
        q = q + term;
        r = r - term * b;
    }
    return {q, r};
}

ModPoly mod_make_monic(const ModPoly& a) {
    if (a.is_zero()) return a;
    return mod_scale(a, mod_inv(a.leading(), a.p));
}

ModPoly mod_gcd(const ModPoly& a, const ModPoly& b) {
    check_moduli(a, b);
    ModPoly x = a, y = b;
    while (!y.is_zero()) {
        ModPoly r = mod_divrem(x, y).second;
        x = y;
        y = r;
    }
    return mod_make_monic(x);
}

ModPoly mod_derivative(const ModPoly& a) {
    if (a.degree() <= 0) return ModPoly(a.p, {});
    std::vector<std::uint64_t> r(static_cast<size_t>(a.degree()), 0);
    for (int i = 1; i <= a.degree(); ++i) {
        r[static_cast<size_t>(i) - 1] =
            mod_mul(a.c[static_cast<size_t>(i)], static_cast<std::uint64_t>(i) % a.p, a.p);
    }
    return ModPoly(a.p, std::move(r));
}

ModPoly mod_pow_mod(const ModPoly& base, const Int& e, const ModPoly& f) {
    check_moduli(base, f);
    if (sign_of(e) < 0) throw std::domain_error("negative exponent");
    ModPoly result(f.p, {1});
    ModPoly b = mod_divrem(base, f).second;
    const mp_bitcnt_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (sign_of(e) == 0) return result;
    for (mp_bitcnt_t i = bits; i-- > 0;) {
        result = mod_divrem(result * result, f).second;
        if (mpz_tstbit(e.get_mpz_t(), i)) {
            result = mod_divrem(result * b, f).second;
        }
    }
    return result;
}

}  // namespace vr
