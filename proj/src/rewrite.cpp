#include "torilink/rewrite.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

namespace torilink {

namespace {

std::string encode(const LabelWord& w) {
    std::string s;
    s.reserve(w.size());
    for (int l : w) s.push_back(static_cast<char>('A' + l));
    return s;
}

LabelWord decode(const std::string& s) {
    LabelWord w;
    w.reserve(s.size());
    for (char c : s) w.push_back(c - 'A');
    return w;
}

}  // namespace

LabelWord label_inverse(const LabelWord& w) {
    return LabelWord(w.rbegin(), w.rend());
}

LabelWord label_commutator(const LabelWord& u, const LabelWord& v) {
    LabelWord w = u;
    w.insert(w.end(), v.begin(), v.end());
    LabelWord ui = label_inverse(u), vi = label_inverse(v);
    w.insert(w.end(), ui.begin(), ui.end());
    w.insert(w.end(), vi.begin(), vi.end());
    return w;
}

LabelWord label_word_from_names(const CombinatorialPolytope& p,
                                const std::vector<std::string>& names) {
    LabelWord w;
    for (const std::string& n : names) w.push_back(p.facet_index(n));
    return w;
}

LabelRewriter::LabelRewriter(std::vector<std::vector<bool>> adjacency,
                             std::vector<Gf2Vec> colours)
    : adjacency_(std::move(adjacency)), colours_(std::move(colours)) {
    if (adjacency_.size() != colours_.size())
        throw std::invalid_argument("LabelRewriter: size mismatch");
    for (const auto& row : adjacency_)
        if (row.size() != colours_.size())
            throw std::invalid_argument("LabelRewriter: adjacency not square");
}

Gf2Vec LabelRewriter::endpoint(const LabelWord& w) const {
    Gf2Vec v = 0;
    for (int l : w) {
        if (l < 0 || l >= label_count())
            throw std::out_of_range("LabelRewriter: label out of range");
        v ^= colours_[l];
    }
    return v;
}

std::vector<LabelWord> LabelRewriter::neighbours(const LabelWord& w, int max_len) const {
    std::vector<LabelWord> out;
    const int n = static_cast<int>(w.size());
    for (int i = 0; i + 1 < n; ++i) {
        if (w[i] == w[i + 1]) {
            LabelWord u;
            u.insert(u.end(), w.begin(), w.begin() + i);
            u.insert(u.end(), w.begin() + i + 2, w.end());
            out.push_back(std::move(u));
        } else if (adjacency_[w[i]][w[i + 1]]) {
            LabelWord u = w;
            std::swap(u[i], u[i + 1]);
            out.push_back(std::move(u));
        }
    }
    if (n + 2 <= max_len) {
        for (int i = 0; i <= n; ++i) {
            for (int l = 0; l < label_count(); ++l) {
                LabelWord u;
                u.insert(u.end(), w.begin(), w.begin() + i);
                u.push_back(l);
                u.push_back(l);
                u.insert(u.end(), w.begin() + i, w.end());
                out.push_back(std::move(u));
            }
        }
    }
    return out;
}

LabelRewriter::Derivation LabelRewriter::equivalent(const LabelWord& a, const LabelWord& b,
                                                    int depth) const {
    Derivation der;
    if (endpoint(a) != endpoint(b)) return der;

    const int max_len = static_cast<int>(std::max(a.size(), b.size())) + 4;
    constexpr long kNodeBudget = 400000;

    // Bidirectional best-first search.  Each side expands its shortest known
    // word first (ties broken by fewer moves), which follows length-reducing
    // derivations directly instead of flooding level by level.  Every visited
    // word stays keyed in its parent map, so a meet is detected even when the
    // matching node sits past the other side's expansion queue.
    struct Visit {
        std::string parent;
        int moves;
    };
    using QueueEntry = std::tuple<size_t, int, std::string>;  // (length, moves, word)
    std::unordered_map<std::string, Visit> parent_a, parent_b;
    std::priority_queue<QueueEntry, std::vector<QueueEntry>, std::greater<QueueEntry>> open_a,
        open_b;
    std::string sa = encode(a), sb = encode(b);
    parent_a.emplace(sa, Visit{sa, 0});
    parent_b.emplace(sb, Visit{sb, 0});
    open_a.emplace(sa.size(), 0, sa);
    open_b.emplace(sb.size(), 0, sb);

    auto build = [&](const std::string& meet) {
        std::vector<LabelWord> front;
        for (std::string cur = meet;; cur = parent_a.at(cur).parent) {
            front.push_back(decode(cur));
            if (parent_a.at(cur).parent == cur) break;
        }
        std::reverse(front.begin(), front.end());
        for (std::string cur = meet; parent_b.at(cur).parent != cur;) {
            cur = parent_b.at(cur).parent;
            front.push_back(decode(cur));
        }
        der.found = true;
        der.steps = std::move(front);
    };

    if (sa == sb) {
        build(sa);
        return der;
    }

    bool expand_a = true;
    while (der.explored < kNodeBudget) {
        if (open_a.empty() && open_b.empty()) break;
        if (expand_a ? open_a.empty() : open_b.empty()) expand_a = !expand_a;
        auto& open = expand_a ? open_a : open_b;
        auto& mine = expand_a ? parent_a : parent_b;
        auto& other = expand_a ? parent_b : parent_a;
        expand_a = !expand_a;

        auto [len, moves, cur] = open.top();
        (void)len;
        open.pop();
        for (const LabelWord& nb : neighbours(decode(cur), max_len)) {
            std::string key = encode(nb);
            auto [it, fresh] = mine.try_emplace(key, Visit{cur, moves + 1});
            if (!fresh) continue;
            ++der.explored;
            if (other.count(key)) {
                build(key);
                return der;
            }
            if (moves + 1 < depth) open.emplace(key.size(), moves + 1, std::move(key));
            if (der.explored >= kNodeBudget) break;
        }
    }
    return der;
}

}  // namespace torilink
