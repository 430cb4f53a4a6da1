#ifndef TORILINK_REWRITE_HPP
#define TORILINK_REWRITE_HPP

#include <string>
#include <vector>

#include "torilink/gf2.hpp"
#include "torilink/polytope.hpp"

namespace torilink {

// Path in the 1-skeleton of the dual cubulation, recorded as the sequence of
// facet labels of the edges crossed.  Labels are involutive: each one is its
// own inverse.
using LabelWord = std::vector<int>;

// Reverse order; with involutive letters this is the inverse path.
LabelWord label_inverse(const LabelWord& w);
// u v u^-1 v^-1.
LabelWord label_commutator(const LabelWord& u, const LabelWord& v);
// Facet names resolved through the polytope, e.g. {"1b","3b","1b","3b"}.
LabelWord label_word_from_names(const CombinatorialPolytope& p,
                                const std::vector<std::string>& names);

// Homotopy search across the square 2-skeleton.  Legal moves: delete or
// insert a doubled letter, and swap two consecutive letters whose facets are
// adjacent (the path then slides across a square).
class LabelRewriter {
public:
    // adjacency[i][j] true when facets i and j share a ridge; colours give
    // the reflection vector of each facet, used for the endpoint invariant.
    LabelRewriter(std::vector<std::vector<bool>> adjacency, std::vector<Gf2Vec> colours);

    int label_count() const { return static_cast<int>(colours_.size()); }
    // Endpoint of the path started at the base copy, as a (Z/2)^rank vector.
    Gf2Vec endpoint(const LabelWord& w) const;

    struct Derivation {
        bool found = false;
        // Successive words from the start to the target, one move apart.
        std::vector<LabelWord> steps;
        long explored = 0;
    };

    // Bidirectional best-first search, shortest words expanded first; each
    // direction is bounded by `depth` moves.  Fails (found = false) when the
    // bound or the node budget is exhausted, never reports a false positive.
    Derivation equivalent(const LabelWord& a, const LabelWord& b, int depth = 64) const;

    // All words one move away, capped at the given length.
    std::vector<LabelWord> neighbours(const LabelWord& w, int max_len) const;

private:
    std::vector<std::vector<bool>> adjacency_;
    std::vector<Gf2Vec> colours_;
};

}  // namespace torilink

#endif
