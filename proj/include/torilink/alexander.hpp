#ifndef TORILINK_ALEXANDER_HPP
#define TORILINK_ALEXANDER_HPP

#include <optional>
#include <vector>

#include "torilink/laurent.hpp"
#include "torilink/words.hpp"

namespace torilink {

// Abelianization of a word as a Laurent monomial in t_1..t_ngens.
Laurent word_monomial(const Word& w, int ngens);

// Fox free derivative with respect to generator g, abelianized:
// d(uv) = du + ab(u) dv,  dg/dg = 1,  d(g^-1)/dg = -t_g^-1.
Laurent fox_derivative(const Word& w, int g, int ngens);

// Entry (i, j) is the abelianized Fox derivative of relator i by
// generator j.  Relators index rows, generators columns.
std::vector<std::vector<Laurent>> alexander_matrix(const Presentation& p);

// When, after unit normalization, m equals a product (t_1-1)^{a_1} ... with
// all a_i >= 0, returns the exponent vector; otherwise nullopt.
std::optional<std::vector<int>> product_of_t_minus_one_exponents(const Laurent& m);

struct AlexanderIdeal {
    int k = 0;      // minor size
    long total = 0; // number of k-by-k minors considered
    long zero = 0;  // how many of them vanish
    // Nonzero minors after unit normalization, deduplicated and sorted.
    std::vector<Laurent> generators;
    // Exponent vectors for the generators of product form, sorted; one entry
    // per generator when every generator has that form.
    std::vector<std::vector<int>> exponent_vectors;
    // gcd of the generators, available exactly when all of them are products
    // of powers of (t_i - 1): the per-variable minimum exponent product.
    std::optional<Laurent> gcd;
};

// All k-by-k minors of the matrix, unit-normalized and deduplicated.
AlexanderIdeal alexander_ideal(const std::vector<std::vector<Laurent>>& m, int k);

// Exponent rule cutting out the ideal generators of the five-torus link:
// entries in [0, 4] summing to 8, at most one zero entry, and no cyclic
// pattern (a_{i-1}, a_i, a_{i+1}) or (a_{i-2}, a_i, a_{i+2}) equal to
// (1, 0, 1).
bool ideal_exponent_predicate(const std::vector<int>& a);

// Every length-5 vector satisfying the predicate, sorted; computed once.
const std::vector<std::vector<int>>& predicate_exponent_set();

// Deterministic ordering used for generator lists.
bool laurent_less(const Laurent& a, const Laurent& b);

}  // namespace torilink

#endif
