#include "torilink/alexander.hpp"

#include <algorithm>
#include <stdexcept>

namespace torilink {

Laurent word_monomial(const Word& w, int ngens) {
    std::vector<long> v = w.abelianized(ngens);
    Laurent::Exponents e(ngens);
    for (int i = 0; i < ngens; ++i) e[i] = static_cast<int>(v[i]);
    return Laurent::monomial(ngens, e, 1);
}

Laurent fox_derivative(const Word& w, int g, int ngens) {
    if (g < 0 || g >= ngens) throw std::out_of_range("fox_derivative: generator");
    Laurent d(ngens);
    Laurent prefix = Laurent::constant(ngens, 1);
    for (const Letter& l : w.letters()) {
        if (l.exp == 1) {
            if (l.gen == g) d = d + prefix;
            prefix = prefix * Laurent::variable(ngens, l.gen, 1);
        } else {
            prefix = prefix * Laurent::variable(ngens, l.gen, -1);
            if (l.gen == g) d = d - prefix;
        }
    }
    return d;
}

std::vector<std::vector<Laurent>> alexander_matrix(const Presentation& p) {
    const int n = static_cast<int>(p.generators.size());
    std::vector<std::vector<Laurent>> m;
    for (const Word& r : p.relators) {
        std::vector<Laurent> row;
        for (int j = 0; j < n; ++j) row.push_back(fox_derivative(r, j, n));
        m.push_back(std::move(row));
    }
    return m;
}

std::optional<std::vector<int>> product_of_t_minus_one_exponents(const Laurent& m) {
    if (m.is_zero()) return std::nullopt;
    Laurent norm = m.unit_normalized();
    const int n = norm.nvars();
    std::vector<int> a(n, 0);
    for (const auto& [e, c] : norm.terms())
        for (int i = 0; i < n; ++i) a[i] = std::max(a[i], e[i]);
    Laurent product = Laurent::constant(n, 1);
    for (int i = 0; i < n; ++i) {
        Laurent factor = Laurent::variable(n, i, 1) - Laurent::constant(n, 1);
        for (int k = 0; k < a[i]; ++k) product = product * factor;
    }
    if (product.unit_normalized() == norm) return a;
    return std::nullopt;
}

bool laurent_less(const Laurent& a, const Laurent& b) {
    return std::lexicographical_compare(
        a.terms().begin(), a.terms().end(), b.terms().begin(), b.terms().end(),
        [](const auto& x, const auto& y) {
            if (x.first != y.first) return x.first < y.first;
            return x.second < y.second;
        });
}

namespace {

// Lexicographically ordered k-subsets of {0..n-1}.
std::vector<std::vector<int>> subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i <= n - (k - static_cast<int>(cur.size())); ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace

AlexanderIdeal alexander_ideal(const std::vector<std::vector<Laurent>>& m, int k) {
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    if (k <= 0 || k > rows || k > cols)
        throw std::invalid_argument("alexander_ideal: minor size out of range");

    AlexanderIdeal ideal;
    ideal.k = k;
    std::vector<Laurent> found;
    for (const auto& rs : subsets(rows, k)) {
        for (const auto& cs : subsets(cols, k)) {
            std::vector<std::vector<Laurent>> sub(k, std::vector<Laurent>(k));
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) sub[i][j] = m[rs[i]][cs[j]];
            Laurent det = laurent_det(sub);
            ++ideal.total;
            if (det.is_zero()) {
                ++ideal.zero;
            } else {
                found.push_back(det.unit_normalized());
            }
        }
    }
    std::sort(found.begin(), found.end(), laurent_less);
    found.erase(std::unique(found.begin(), found.end()), found.end());
    ideal.generators = std::move(found);

    bool all_products = !ideal.generators.empty();
    std::vector<int> mins;
    for (const Laurent& g : ideal.generators) {
        auto a = product_of_t_minus_one_exponents(g);
        if (!a) {
            all_products = false;
            continue;
        }
        ideal.exponent_vectors.push_back(*a);
        if (mins.empty()) {
            mins = *a;
        } else {
            for (std::size_t i = 0; i < mins.size(); ++i)
                mins[i] = std::min(mins[i], (*a)[i]);
        }
    }
    std::sort(ideal.exponent_vectors.begin(), ideal.exponent_vectors.end());
    if (all_products) {
        const int n = static_cast<int>(mins.size());
        Laurent g = Laurent::constant(n, 1);
        for (int i = 0; i < n; ++i) {
            Laurent factor = Laurent::variable(n, i, 1) - Laurent::constant(n, 1);
            for (int t = 0; t < mins[i]; ++t) g = g * factor;
        }
        ideal.gcd = g.unit_normalized();
    }
    return ideal;
}

bool ideal_exponent_predicate(const std::vector<int>& a) {
    if (a.size() != 5) return false;
    int sum = 0, zeros = 0;
    for (int x : a) {
        if (x < 0 || x > 4) return false;
        sum += x;
        if (x == 0) ++zeros;
    }
    if (sum != 8 || zeros > 1) return false;
    for (int i = 0; i < 5; ++i) {
        for (int step : {1, 2}) {
            int lo = a[(i - step + 5) % 5];
            int hi = a[(i + step) % 5];
            if (lo == 1 && a[i] == 0 && hi == 1) return false;
        }
    }
    return true;
}

const std::vector<std::vector<int>>& predicate_exponent_set() {
    static const std::vector<std::vector<int>> cached = [] {
        std::vector<std::vector<int>> out;
        std::vector<int> a(5);
        for (a[0] = 0; a[0] <= 4; ++a[0])
            for (a[1] = 0; a[1] <= 4; ++a[1])
                for (a[2] = 0; a[2] <= 4; ++a[2])
                    for (a[3] = 0; a[3] <= 4; ++a[3])
                        for (a[4] = 0; a[4] <= 4; ++a[4])
                            if (ideal_exponent_predicate(a)) out.push_back(a);
        return out;
    }();
    return cached;
}

}  // namespace torilink
