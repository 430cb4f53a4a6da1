#ifndef TORILINK_CYCLIC_HPP
#define TORILINK_CYCLIC_HPP

#include <gmpxx.h>

#include <map>
#include <optional>
#include <vector>

namespace torilink {

long totient(long d);
std::vector<long> positive_divisors(long n);

// One ideal generator specialized along a class phi, kept in factored form:
// the product of cyclotomic polynomials Phi_d^{e_d} up to a monomial unit.
// `vanishes` marks generators sent to zero (some a_i > 0 with x_i = 0).
struct CyclotomicExponents {
    std::map<long, long> e;
    bool vanishes = false;

    long degree() const;  // sum of e_d * deg Phi_d
};

// e_d = sum of a_i over the i with x_i != 0 and d | |x_i|.
CyclotomicExponents specialize_generator(const std::vector<int>& a,
                                         const std::vector<long>& phi);

// Degree of the gcd of all specialized ideal generators, by the per-d
// minimum rule over non-vanishing generators.  nullopt when every generator
// vanishes (the gcd is zero and the Betti number infinite).
std::optional<long> delta_phi_degree(const std::vector<long>& phi);

struct CyclicBetti {
    std::optional<long> b1;  // nullopt encodes infinity
    std::optional<long> b2;  // always infinite for these covers
    std::optional<long> b3;  // 0 when all entries nonzero, else infinite
};

// phi must be a length-5 primitive class (gcd of entries 1).
CyclicBetti cyclic_cover_betti(const std::vector<long>& phi);

// Dense univariate integer polynomial, little-endian coefficients with no
// trailing zero; the zero polynomial has an empty coefficient list.
struct ZPoly {
    std::vector<mpz_class> c;

    static ZPoly zero();
    static ZPoly one();
    // t^n - 1 for n >= 1.
    static ZPoly t_power_minus_one(long n);

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    void normalize();
    ZPoly operator*(const ZPoly& o) const;
    bool operator==(const ZPoly& o) const = default;

    mpz_class content() const;
    ZPoly primitive_part() const;  // positive leading coefficient
};

// gcd by the primitive pseudo-remainder sequence; result is primitive with
// positive leading coefficient.
ZPoly zpoly_gcd(ZPoly a, ZPoly b);

// Product (t^{|x_1|}-1)^{a_1} ... over the nonzero x_i.  The generator must
// not vanish under phi.
ZPoly expand_generator(const std::vector<int>& a, const std::vector<long>& phi);

// Degree of the honest single-variable gcd over all ideal generators;
// nullopt when all generators vanish.  Independent of the cyclotomic
// shortcut: works on expanded polynomials.
std::optional<long> delta_phi_degree_oracle(const std::vector<long>& phi);

// Representative of the orbit of |phi| under the index symmetries of the
// generator set (the order-20 Frobenius group generated by i -> i+1 and
// i -> 2i) and entrywise sign flips.  Both degree functions are constant on
// these orbits, which makes exhaustive sweeps cacheable.
std::vector<long> canonical_phi(const std::vector<long>& phi);

}  // namespace torilink

#endif
