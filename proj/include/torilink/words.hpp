#ifndef TORILINK_WORDS_HPP
#define TORILINK_WORDS_HPP

#include <gmpxx.h>

#include <array>
#include <iosfwd>
#include <set>
#include <string>
#include <vector>

namespace torilink {

// One letter of a free-group word: generator index with exponent +-1.
struct Letter {
    int gen = 0;
    int exp = 1;
    bool operator==(const Letter&) const = default;
};

// Freely reduced word in a free group.  All constructors and operations
// reduce, so adjacent inverse letters never survive.
class Word {
public:
    Word() = default;
    static Word generator(int g, int exp = 1);
    static Word from_letters(const std::vector<Letter>& letters);
    // [u, v] = u v u^-1 v^-1.
    static Word commutator(const Word& u, const Word& v);

    const std::vector<Letter>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    int length() const { return static_cast<int>(letters_.size()); }

    Word operator*(const Word& o) const;
    Word inverse() const;
    bool operator==(const Word&) const = default;

    Word cyclically_reduced() const;
    // Exponent sum per generator, indices 0..ngens-1.
    std::vector<long> abelianized(int ngens) const;

    std::string str(const std::vector<std::string>& names) const;

private:
    std::vector<Letter> letters_;
};

// Finite group presentation; relators are freely and cyclically reduced and
// never empty.
struct Presentation {
    std::vector<std::string> generators;
    std::vector<Word> relators;

    // -1 when the name is absent.
    int index_of(const std::string& name) const;
    void add_relator(const Word& w);
};

// The five-generator, ten-relator presentation of the fundamental group of
// the five-torus-link complement: relators [x_i, [x_{i+2}, x_{i+3}]] and
// [x_i, [x_{i+1}^-1, x_{i+4}^-1]] with generators a..e and indices mod 5.
Presentation ivansic_presentation();

// Peripheral Z^3 generators of the i-th cusp (0-based), ordered meridian,
// first longitude, second longitude: x_i, [x_{i+2}, x_{i+3}],
// [x_{i+1}^-1, x_{i+4}^-1].
std::array<Word, 3> peripheral_triple(int i);

// The five surgery slopes [c,d], [d,e], [e,a], [a,b], [b,c]: the first
// longitude of each cusp in cyclic order.
std::vector<Word> surgery_longitudes();

// Text format: one line listing generator names, then one relator per line.
// Relators support ^N exponents (N possibly negative), parentheses, and
// nested commutator sugar [u,v].
Presentation parse_presentation_text(const std::string& text);
std::string presentation_to_text(const Presentation& p);

// Substitute the identity for each named generator, freely reduce, drop
// empty relators, and renumber the surviving generators.
Presentation kill_generators(const Presentation& p, const std::set<std::string>& kill);

// Invariant factors of the abelianization, computed from the Smith normal
// form of the relator exponent matrix: torsion factors (> 1) first, then one
// zero per free Z summand.
std::vector<mpz_class> abelian_invariants(const Presentation& p);

// Delete occurrences of cyclic rotations of the given relators (and their
// inverses) as subwords, freely reducing in between, until no rotation
// occurs or the pass limit is hit.  Returns the final word.
Word simplify_with_relators(const Word& w, const std::vector<Word>& relators,
                            int max_passes = 64);

struct SurgeryQuotient {
    Presentation presentation;    // ten link relators plus five longitudes
    std::vector<Word> longitudes;
    std::vector<mpz_class> abelian_invariants;
};

// Longitudinal surgery quotient: adjoin the five surgery longitudes to the
// link group and report the abelianization.
SurgeryQuotient surgery_quotient();

}  // namespace torilink

#endif
