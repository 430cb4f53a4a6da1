#ifndef TORILINK_LAURENT_HPP
#define TORILINK_LAURENT_HPP

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace torilink {

// Multivariate Laurent polynomial over the integers in a fixed number of
// variables.  Terms map exponent vectors (one entry per variable, negative
// allowed) to nonzero coefficients; the zero polynomial stores no terms.
class Laurent {
public:
    using Exponents = std::vector<int>;

    Laurent() = default;
    explicit Laurent(int nvars);

    static Laurent constant(int nvars, const mpz_class& c);
    // t_i raised to `power`, 0-based variable index.
    static Laurent variable(int nvars, int i, int power = 1);
    static Laurent monomial(int nvars, const Exponents& e, const mpz_class& c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, mpz_class>& terms() const { return terms_; }

    mpz_class coefficient(const Exponents& e) const;
    bool is_constant() const;
    // Constant term of a constant polynomial; throws otherwise.
    mpz_class constant_value() const;
    bool is_monomial() const { return terms_.size() == 1; }

    Laurent operator-() const;
    Laurent operator+(const Laurent& o) const;
    Laurent operator-(const Laurent& o) const;
    Laurent operator*(const Laurent& o) const;
    bool operator==(const Laurent& o) const = default;

    // Canonical representative modulo monomial units +-t^e: shift so the
    // minimal exponent of every variable is 0, then negate if needed so the
    // lexicographically least exponent vector has a positive coefficient.
    Laurent unit_normalized() const;
    // True when the polynomial is +-(single monomial).
    bool is_monomial_unit() const;

    // Substitute t_i -> s^{x_i}; the result is a Laurent polynomial in the
    // single variable s.  Cancellation between collided terms is allowed.
    Laurent substitute_powers(const std::vector<long>& x) const;

    // Deterministic rendering, terms in exponent order, e.g. "t1^2*t2^-1 - 3".
    std::string str(const std::vector<std::string>& names) const;
    std::string str() const;

private:
    int nvars_ = 0;
    std::map<Exponents, mpz_class> terms_;

    void add_term(const Exponents& e, const mpz_class& c);
    friend Laurent laurent_det(const std::vector<std::vector<Laurent>>& m);
};

// Determinant of a square matrix of Laurent polynomials by cofactor
// expansion; subdeterminants are memoized on (row mask, column mask).
Laurent laurent_det(const std::vector<std::vector<Laurent>>& m);

}  // namespace torilink

#endif
