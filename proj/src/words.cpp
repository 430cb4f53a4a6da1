#include "torilink/words.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "torilink/snf.hpp"

namespace torilink {

namespace {

void push_reduced(std::vector<Letter>& out, const Letter& l) {
    if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp) {
        out.pop_back();
    } else {
        out.push_back(l);
    }
}

}  // namespace

Word Word::generator(int g, int exp) {
    if (g < 0) throw std::invalid_argument("Word::generator: negative index");
    if (exp != 1 && exp != -1) throw std::invalid_argument("Word::generator: exponent");
    Word w;
    w.letters_.push_back({g, exp});
    return w;
}

Word Word::from_letters(const std::vector<Letter>& letters) {
    Word w;
    for (const Letter& l : letters) {
        if (l.exp != 1 && l.exp != -1)
            throw std::invalid_argument("Word::from_letters: exponent");
        push_reduced(w.letters_, l);
    }
    return w;
}

Word Word::commutator(const Word& u, const Word& v) {
    return u * v * u.inverse() * v.inverse();
}

Word Word::operator*(const Word& o) const {
    Word w = *this;
    for (const Letter& l : o.letters_) push_reduced(w.letters_, l);
    return w;
}

Word Word::inverse() const {
    Word w;
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        w.letters_.push_back({it->gen, -it->exp});
    return w;
}

Word Word::cyclically_reduced() const {
    std::vector<Letter> ls = letters_;
    while (ls.size() >= 2 && ls.front().gen == ls.back().gen &&
           ls.front().exp == -ls.back().exp) {
        ls.erase(ls.begin());
        ls.pop_back();
    }
    return from_letters(ls);
}

std::vector<long> Word::abelianized(int ngens) const {
    std::vector<long> v(ngens, 0);
    for (const Letter& l : letters_) {
        if (l.gen >= ngens) throw std::out_of_range("Word::abelianized: generator");
        v[l.gen] += l.exp;
    }
    return v;
}

std::string Word::str(const std::vector<std::string>& names) const {
    if (letters_.empty()) return "1";
    std::ostringstream out;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i) out << " ";
        out << names.at(letters_[i].gen);
        if (letters_[i].exp == -1) out << "^-1";
    }
    return out.str();
}

int Presentation::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < generators.size(); ++i)
        if (generators[i] == name) return static_cast<int>(i);
    return -1;
}

void Presentation::add_relator(const Word& w) {
    Word r = w.cyclically_reduced();
    if (r.empty()) throw std::invalid_argument("Presentation: empty relator");
    relators.push_back(r);
}

Presentation ivansic_presentation() {
    Presentation p;
    p.generators = {"a", "b", "c", "d", "e"};
    auto g = [](int i) { return Word::generator(((i % 5) + 5) % 5); };
    auto gi = [](int i) { return Word::generator(((i % 5) + 5) % 5, -1); };
    for (int i = 0; i < 5; ++i)
        p.add_relator(Word::commutator(g(i), Word::commutator(g(i + 2), g(i + 3))));
    for (int i = 0; i < 5; ++i)
        p.add_relator(Word::commutator(g(i), Word::commutator(gi(i + 1), gi(i + 4))));
    return p;
}

std::array<Word, 3> peripheral_triple(int i) {
    if (i < 0 || i >= 5) throw std::out_of_range("peripheral_triple: cusp index");
    auto g = [](int k) { return Word::generator(k % 5); };
    auto gi = [](int k) { return Word::generator(k % 5, -1); };
    return {g(i), Word::commutator(g(i + 2), g(i + 3)),
            Word::commutator(gi(i + 1), gi(i + 4))};
}

std::vector<Word> surgery_longitudes() {
    std::vector<Word> ls;
    for (int i = 0; i < 5; ++i)
        ls.push_back(Word::commutator(Word::generator((i + 2) % 5),
                                      Word::generator((i + 3) % 5)));
    return ls;
}

namespace {

// Recursive-descent relator parser over a token stream.
struct RelatorParser {
    const std::string& text;
    std::size_t pos = 0;
    const Presentation& pres;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    void expect(char c) {
        if (peek() != c)
            throw std::invalid_argument(std::string("presentation parse: expected '") + c + "'");
        ++pos;
    }

    Word parse_word(bool top) {
        Word w;
        while (!at_end()) {
            char c = peek();
            if (c == ',' || c == ')' || c == ']') {
                if (top) throw std::invalid_argument("presentation parse: stray delimiter");
                break;
            }
            w = w * parse_term();
        }
        return w;
    }

    Word parse_term() {
        Word base = parse_atom();
        skip_ws();
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            skip_ws();
            bool neg = false;
            if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
                neg = text[pos] == '-';
                ++pos;
            }
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (start == pos) throw std::invalid_argument("presentation parse: exponent digits");
            long n = std::stol(text.substr(start, pos - start));
            Word powered;
            Word factor = neg ? base.inverse() : base;
            for (long k = 0; k < n; ++k) powered = powered * factor;
            return powered;
        }
        return base;
    }

    Word parse_atom() {
        char c = peek();
        if (c == '(') {
            ++pos;
            Word w = parse_word(false);
            expect(')');
            return w;
        }
        if (c == '[') {
            ++pos;
            Word u = parse_word(false);
            expect(',');
            Word v = parse_word(false);
            expect(']');
            return Word::commutator(u, v);
        }
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        if (start == pos) throw std::invalid_argument("presentation parse: expected generator");
        std::string name = text.substr(start, pos - start);
        int idx = pres.index_of(name);
        if (idx < 0)
            throw std::invalid_argument("presentation parse: unknown generator '" + name + "'");
        return Word::generator(idx);
    }
};

}  // namespace

Presentation parse_presentation_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    Presentation p;
    bool have_gens = false;
    while (std::getline(in, line)) {
        std::string trimmed = line;
        auto hash = trimmed.find('#');
        if (hash != std::string::npos) trimmed.erase(hash);
        if (trimmed.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (!have_gens) {
            std::istringstream gl(trimmed);
            std::string name;
            while (gl >> name) {
                if (p.index_of(name) >= 0)
                    throw std::invalid_argument("presentation parse: duplicate generator");
                p.generators.push_back(name);
            }
            if (p.generators.empty())
                throw std::invalid_argument("presentation parse: no generators");
            have_gens = true;
        } else {
            RelatorParser rp{trimmed, 0, p};
            Word w = rp.parse_word(true);
            if (w.cyclically_reduced().empty())
                throw std::invalid_argument("presentation parse: relator reduces to identity");
            p.add_relator(w);
        }
    }
    if (!have_gens) throw std::invalid_argument("presentation parse: empty input");
    return p;
}

std::string presentation_to_text(const Presentation& p) {
    std::ostringstream out;
    for (std::size_t i = 0; i < p.generators.size(); ++i) {
        if (i) out << " ";
        out << p.generators[i];
    }
    out << "\n";
    for (const Word& r : p.relators) out << r.str(p.generators) << "\n";
    return out.str();
}

Presentation kill_generators(const Presentation& p, const std::set<std::string>& kill) {
    std::vector<int> remap(p.generators.size(), -1);
    Presentation q;
    for (std::size_t i = 0; i < p.generators.size(); ++i) {
        if (kill.count(p.generators[i])) continue;
        remap[i] = static_cast<int>(q.generators.size());
        q.generators.push_back(p.generators[i]);
    }
    for (const std::string& name : kill)
        if (p.index_of(name) < 0)
            throw std::invalid_argument("kill_generators: unknown generator '" + name + "'");
    for (const Word& r : p.relators) {
        std::vector<Letter> ls;
        for (const Letter& l : r.letters())
            if (remap[l.gen] >= 0) ls.push_back({remap[l.gen], l.exp});
        Word w = Word::from_letters(ls).cyclically_reduced();
        if (!w.empty()) q.relators.push_back(w);
    }
    return q;
}

std::vector<mpz_class> abelian_invariants(const Presentation& p) {
    const int g = static_cast<int>(p.generators.size());
    SparseIntMatrix m(static_cast<int>(p.relators.size()), g);
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
        std::vector<long> v = p.relators[i].abelianized(g);
        for (int j = 0; j < g; ++j)
            if (v[j] != 0) m.set(static_cast<int>(i), j, mpz_class(v[j]));
    }
    SnfResult snf = smith_normal_form(m);
    std::vector<mpz_class> inv;
    for (const mpz_class& d : snf.factors)
        if (d > 1) inv.push_back(d);
    for (int k = snf.rank(); k < g; ++k) inv.push_back(0);
    return inv;
}

Word simplify_with_relators(const Word& w, const std::vector<Word>& relators,
                            int max_passes) {
    // All cyclic rotations of each relator and of its inverse.
    std::vector<std::vector<Letter>> patterns;
    for (const Word& r : relators) {
        for (const Word& base : {r, r.inverse()}) {
            const auto& ls = base.letters();
            const int n = static_cast<int>(ls.size());
            for (int s = 0; s < n; ++s) {
                std::vector<Letter> rot;
                for (int k = 0; k < n; ++k) rot.push_back(ls[(s + k) % n]);
                if (std::find(patterns.begin(), patterns.end(), rot) == patterns.end())
                    patterns.push_back(rot);
            }
        }
    }
    Word cur = w;
    for (int pass = 0; pass < max_passes; ++pass) {
        bool changed = false;
        const auto& ls = cur.letters();
        for (const auto& pat : patterns) {
            if (pat.size() > ls.size()) continue;
            for (std::size_t at = 0; at + pat.size() <= ls.size(); ++at) {
                if (std::equal(pat.begin(), pat.end(), ls.begin() + at)) {
                    std::vector<Letter> rest(ls.begin(), ls.begin() + at);
                    rest.insert(rest.end(), ls.begin() + at + pat.size(), ls.end());
                    cur = Word::from_letters(rest);
                    changed = true;
                    break;
                }
            }
            if (changed) break;
        }
        if (!changed) break;
    }
    return cur;
}

SurgeryQuotient surgery_quotient() {
    SurgeryQuotient sq;
    sq.presentation = ivansic_presentation();
    sq.longitudes = surgery_longitudes();
    for (const Word& l : sq.longitudes) sq.presentation.add_relator(l);
    sq.abelian_invariants = torilink::abelian_invariants(sq.presentation);
    return sq;
}

}  // namespace torilink
