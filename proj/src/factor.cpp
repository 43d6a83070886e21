#include "vr/factor.hpp"

#include "vr/modpoly.hpp"

#include <algorithm>
#include <random>

namespace vr {

namespace {

// ---- arithmetic on integer polynomials modulo m (m a big integer) ----

Int mod_reduce(const Int& a, const Int& m) {
    Int r = a % m;
    if (sign_of(r) < 0) r += m;
    return r;
}

IntPoly reduce_mod(const IntPoly& f, const Int& m) {
    std::vector<Int> c;
    c.reserve(f.coeffs().size());
    for (const Int& v : f.coeffs()) c.push_back(mod_reduce(v, m));
    return IntPoly(std::move(c));
}

IntPoly sym_mod(const IntPoly& f, const Int& m) {
    Int half = m / 2;
    std::vector<Int> c;
    c.reserve(f.coeffs().size());
    for (const Int& v : f.coeffs()) {
        Int r = mod_reduce(v, m);
        if (r > half) r -= m;
        c.push_back(r);
    }
    return IntPoly(std::move(c));
}

IntPoly mul_mod(const IntPoly& a, const IntPoly& b, const Int& m) {
    return reduce_mod(a * b, m);
}

// division by a monic divisor, all coefficients mod m
std::pair<IntPoly, IntPoly> divrem_monic_mod(const IntPoly& a, const IntPoly& b, const Int& m) {
    if (b.is_zero() || b.leading() != 1) throw std::logic_error("divisor must be monic");
    IntPoly q;
    IntPoly r = reduce_mod(a, m);
    while (!r.is_zero() && r.degree() >= b.degree()) {
        IntPoly term = IntPoly::monomial(r.leading(), r.degree() - b.degree());
        q += term;
        r = reduce_mod(r - term * b, m);
    }
    return {q, r};
}

// ---- Hensel lifting ----

struct BezoutPair {
    IntPoly g, h, s, t;  // f = g*h, s*g + t*h = 1 (mod current modulus)
};

// one quadratic step: modulus m -> m^2 (g, h monic)
BezoutPair hensel_step(const IntPoly& f, const BezoutPair& in, const Int& m) {
    Int m2 = m * m;
    IntPoly e = reduce_mod(f - in.g * in.h, m2);
    auto [q, r] = divrem_monic_mod(mul_mod(in.s, e, m2), in.h, m2);
    BezoutPair out;
    out.g = reduce_mod(in.g + mul_mod(in.t, e, m2) + mul_mod(q, in.g, m2), m2);
    out.h = reduce_mod(in.h + r, m2);
    IntPoly b = reduce_mod(in.s * out.g + in.t * out.h - IntPoly{1}, m2);
    auto [c, d] = divrem_monic_mod(mul_mod(in.s, b, m2), out.h, m2);
    out.s = reduce_mod(in.s - d, m2);
    out.t = reduce_mod(in.t - mul_mod(in.t, b, m2) - mul_mod(c, out.g, m2), m2);
    if (out.g.leading() != 1 || out.h.leading() != 1) {
        throw std::logic_error("hensel step lost monicity");
    }
    return out;
}

IntPoly from_mod_poly(const ModPoly& f) {
    std::vector<Int> c;
    c.reserve(f.c.size());
    for (std::uint64_t v : f.c) c.emplace_back(static_cast<unsigned long>(v));
    return IntPoly(std::move(c));
}

// extended euclid over F_p
std::tuple<ModPoly, ModPoly, ModPoly> mod_ext_gcd(const ModPoly& a, const ModPoly& b) {
    ModPoly r0 = a, r1 = b;
    ModPoly s0(a.p, {1}), s1(a.p, {});
    ModPoly t0(a.p, {}), t1(a.p, {1});
    while (!r1.is_zero()) {
        auto [q, r] = mod_divrem(r0, r1);
        ModPoly s2 = s0 - q * s1;
        ModPoly t2 = t0 - q * t1;
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    std::uint64_t inv = mod_inv(r0.leading(), a.p);
    return {mod_scale(r0, inv), mod_scale(s0, inv), mod_scale(t0, inv)};
}

// lift the list of monic factors of f from mod p to mod p^k >= bound;
// returns the reached modulus
Int hensel_lift_list(const IntPoly& f, std::vector<IntPoly>& factors, std::uint64_t p,
                     const Int& bound);

void hensel_lift_rec(const IntPoly& f, std::vector<IntPoly>& factors, size_t lo, size_t hi,
                     std::uint64_t p, const Int& target) {
    if (hi - lo <= 1) {
        factors[lo] = reduce_mod(f, target);
        return;
    }
    size_t mid = lo + (hi - lo) / 2;
    ModPoly gp(p, {1});
    ModPoly hp(p, {1});
    for (size_t i = lo; i < mid; ++i) gp = gp * mod_poly_from(factors[i], p);
    for (size_t i = mid; i < hi; ++i) hp = hp * mod_poly_from(factors[i], p);
    auto [one, s, t] = mod_ext_gcd(gp, hp);
    if (one.degree() != 0) throw std::logic_error("modular factors are not coprime");
    BezoutPair pair{from_mod_poly(gp), from_mod_poly(hp), from_mod_poly(s), from_mod_poly(t)};
    Int m(static_cast<unsigned long>(p));
    while (m < target) {
        pair = hensel_step(f, pair, m);
        m = m * m;
    }
    hensel_lift_rec(pair.g, factors, lo, mid, p, m);
    hensel_lift_rec(pair.h, factors, mid, hi, p, m);
}

Int hensel_lift_list(const IntPoly& f, std::vector<IntPoly>& factors, std::uint64_t p,
                     const Int& bound) {
    Int m(static_cast<unsigned long>(p));
    while (m < bound) m = m * m;
    hensel_lift_rec(f, factors, 0, factors.size(), p, m);
    return m;
}

// ---- modular factorization of a squarefree monic polynomial ----

ModPoly random_modpoly(std::uint64_t p, int maxdeg, std::mt19937_64& rng) {
    std::vector<std::uint64_t> c(static_cast<size_t>(maxdeg) + 1);
    for (auto& v : c) v = rng() % p;
    return ModPoly(p, std::move(c));
}

void equal_degree_split(const ModPoly& f, int d, std::mt19937_64& rng,
                        std::vector<ModPoly>& out) {
    if (f.degree() == d) {
        out.push_back(mod_make_monic(f));
        return;
    }
    const std::uint64_t p = f.p;
    Int pd = pow_int(Int(static_cast<unsigned long>(p)), static_cast<unsigned long>(d));
    Int e = (pd - 1) / 2;
    while (true) {
        ModPoly a = random_modpoly(p, f.degree() - 1, rng);
        if (a.degree() < 1) continue;
        ModPoly g = mod_gcd(a, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree_split(g, d, rng, out);
            equal_degree_split(mod_divrem(f, g).first, d, rng, out);
            return;
        }
        ModPoly b = mod_pow_mod(a, e, f) - ModPoly(p, {1});
        ModPoly h = mod_gcd(b, f);
        if (h.degree() > 0 && h.degree() < f.degree()) {
            equal_degree_split(h, d, rng, out);
            equal_degree_split(mod_divrem(f, h).first, d, rng, out);
            return;
        }
    }
}

std::vector<ModPoly> factor_mod_p(const ModPoly& f0, std::mt19937_64& rng) {
    std::vector<ModPoly> out;
    ModPoly f = mod_make_monic(f0);
    ModPoly x = mod_monomial(f.p, 1, 1);
    ModPoly h = x;
    int d = 0;
    while (f.degree() > 0 && 2 * (d + 1) <= f.degree()) {
        ++d;
        h = mod_pow_mod(h, Int(static_cast<unsigned long>(f.p)), f);
        ModPoly g = mod_gcd(h - x, f);
        if (g.degree() > 0) {
            equal_degree_split(g, d, rng, out);
            f = mod_divrem(f, g).first;
            h = mod_divrem(h, f).second;
        }
    }
    if (f.degree() > 0) out.push_back(f);
    return out;
}

bool is_small_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

// smallest odd prime at which f stays squarefree with full degree
// (equivalently: the smallest odd prime dividing neither lc nor disc)
std::uint64_t select_prime(const IntPoly& f) {
    for (std::uint64_t p = 3;; p += 2) {
        if (!is_small_prime(p)) continue;
        if (f.leading() % Int(static_cast<unsigned long>(p)) == 0) continue;
        ModPoly fp = mod_poly_from(f, p);
        if (fp.degree() != f.degree()) continue;
        ModPoly g = mod_gcd(fp, mod_derivative(fp));
        if (g.degree() == 0) return p;
    }
}

// Landau-Mignotte style bound on the coefficients of any monic factor
// of a monic integer polynomial
Int factor_coeff_bound(const IntPoly& f) {
    Int norm2(0);
    for (const Int& c : f.coeffs()) norm2 += c * c;
    Int b = isqrt(norm2) + 1;
    return (isqrt(Int(f.degree() + 1)) + 1) * pow_int(Int(2), static_cast<unsigned long>(f.degree())) * b;
}

// complete factorization of a squarefree monic integer polynomial into
// monic integer irreducibles
std::vector<IntPoly> factor_monic_squarefree(const IntPoly& f, std::mt19937_64& rng) {
    if (f.degree() <= 1) return {f};
    std::uint64_t p = select_prime(f);
    std::vector<ModPoly> mod_factors = factor_mod_p(mod_poly_from(f, p), rng);
    if (mod_factors.size() == 1) return {f};
    // deterministic ordering of the modular factors
    std::sort(mod_factors.begin(), mod_factors.end(), [](const ModPoly& a, const ModPoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.c < b.c;
    });
    std::vector<IntPoly> lifted;
    lifted.reserve(mod_factors.size());
    for (const ModPoly& m : mod_factors) lifted.push_back(from_mod_poly(m));
    Int bound = factor_coeff_bound(f) * 2 + 1;
    Int modulus = hensel_lift_list(f, lifted, p, bound);

    std::vector<IntPoly> result;
    std::vector<size_t> live(lifted.size());
    for (size_t i = 0; i < live.size(); ++i) live[i] = i;
    IntPoly rest = f;

    // subsets of the live modular factors by increasing cardinality
    size_t card = 1;
    while (2 * card <= live.size()) {
        bool found = false;
        std::vector<size_t> pick(card);
        // lexicographic combinations over positions in `live`
        std::vector<size_t> comb(card);
        for (size_t i = 0; i < card; ++i) comb[i] = i;
        while (true) {
            IntPoly cand{1};
            for (size_t i = 0; i < card; ++i) cand = mul_mod(cand, lifted[live[comb[i]]], modulus);
            cand = sym_mod(cand, modulus);
            if (divides(cand, rest)) {
                result.push_back(cand);
                rest = divexact(rest, cand);
                std::vector<size_t> next_live;
                for (size_t i = 0, c = 0; i < live.size(); ++i) {
                    if (c < card && comb[c] == i) {
                        ++c;
                        continue;
                    }
                    next_live.push_back(live[i]);
                }
                live = std::move(next_live);
                found = true;
                break;
            }
            // advance combination
            size_t i = card;
            while (i > 0) {
                --i;
                if (comb[i] != i + live.size() - card) {
                    ++comb[i];
                    for (size_t j = i + 1; j < card; ++j) comb[j] = comb[j - 1] + 1;
                    break;
                }
                if (i == 0) {
                    i = card + 1;  // exhausted marker
                    break;
                }
            }
            if (i == card + 1) break;
        }
        if (!found) ++card;
    }
    if (rest.degree() > 0) result.push_back(rest);
    return result;
}

// monic rational -> monic integer via X -> X/d scaling with the common
// denominator d; inverse mapping applied to the factors
std::vector<RatPoly> factor_monic_rational_squarefree(const RatPoly& q, std::mt19937_64& rng) {
    Int d(1);
    for (const Rat& v : q.coeffs()) d = lcm_int(d, v.get_den());
    const int n = q.degree();
    std::vector<Int> c(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        Rat scaled = q.coeff(i) * Rat(pow_int(d, static_cast<unsigned long>(n - i)));
        if (!is_integer(scaled)) throw std::logic_error("monicization failed");
        c[static_cast<size_t>(i)] = scaled.get_num();
    }
    IntPoly big(std::move(c));
    std::vector<IntPoly> parts = factor_monic_squarefree(big, rng);
    std::vector<RatPoly> out;
    out.reserve(parts.size());
    Rat dr(d);
    for (const IntPoly& g : parts) {
        RatPoly gr = to_rat_poly(g);
        RatPoly back = scale_arg(gr, dr);  // X -> d*X
        out.push_back(monic(back));
    }
    return out;
}

bool rat_poly_less(const RatPoly& a, const RatPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
        if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
    }
    return false;
}

}  // namespace

Factorization factor_over_Q(const RatPoly& f, std::uint64_t seed) {
    if (f.is_zero()) throw std::domain_error("cannot factor the zero polynomial");
    Factorization out;
    out.input = f;
    out.unit = f.degree() >= 0 ? f.leading() : Rat(1);
    if (f.degree() < 1) return out;
    std::mt19937_64 rng(seed);
    for (const auto& [part, mult] : squarefree_decomposition(f)) {
        for (const RatPoly& irr : factor_monic_rational_squarefree(part, rng)) {
            out.factors.emplace_back(irr, mult);
        }
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) {
                  if (a.second != b.second) return a.second < b.second;
                  return rat_poly_less(a.first, b.first);
              });
    return out;
}

std::tuple<RatPoly, RatPoly, RatPoly> poly_ext_gcd(const RatPoly& a, const RatPoly& b) {
    RatPoly r0 = a, r1 = b;
    RatPoly s0{1}, s1;
    RatPoly t0, t1{1};
    while (!r1.is_zero()) {
        auto [q, r] = divrem(r0, r1);
        RatPoly s2 = s0 - q * s1;
        RatPoly t2 = t0 - q * t1;
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    if (r0.is_zero()) throw std::domain_error("extended gcd of two zero polynomials");
    Rat inv = Rat(1) / r0.leading();
    return {r0 * inv, s0 * inv, t0 * inv};
}

bool disc_odd_check(const RatPoly& f) {
    if (!has_integer_coeffs(f)) throw std::domain_error("disc parity requires integer coefficients");
    Rat d = discriminant(f);
    if (!is_integer(d)) return false;
    return is_odd(d.get_num());
}

}  // namespace vr
