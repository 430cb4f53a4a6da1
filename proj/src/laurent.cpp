#include "torilink/laurent.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace torilink {

Laurent::Laurent(int nvars) : nvars_(nvars) {
    if (nvars < 0) throw std::invalid_argument("Laurent: negative variable count");
}

Laurent Laurent::constant(int nvars, const mpz_class& c) {
    Laurent p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

Laurent Laurent::variable(int nvars, int i, int power) {
    if (i < 0 || i >= nvars) throw std::out_of_range("Laurent::variable: index");
    Exponents e(nvars, 0);
    e[i] = power;
    return monomial(nvars, e, 1);
}

Laurent Laurent::monomial(int nvars, const Exponents& e, const mpz_class& c) {
    if (static_cast<int>(e.size()) != nvars)
        throw std::invalid_argument("Laurent::monomial: exponent length");
    Laurent p(nvars);
    p.add_term(e, c);
    return p;
}

void Laurent::add_term(const Exponents& e, const mpz_class& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

mpz_class Laurent::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

bool Laurent::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

mpz_class Laurent::constant_value() const {
    if (!is_constant()) throw std::logic_error("Laurent::constant_value: not constant");
    return terms_.empty() ? mpz_class(0) : terms_.begin()->second;
}

Laurent Laurent::operator-() const {
    Laurent r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Laurent Laurent::operator+(const Laurent& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("Laurent: variable count mismatch");
    Laurent r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

Laurent Laurent::operator-(const Laurent& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("Laurent: variable count mismatch");
    Laurent r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

Laurent Laurent::operator*(const Laurent& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("Laurent: variable count mismatch");
    Laurent r(nvars_);
    Exponents e(nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Laurent Laurent::unit_normalized() const {
    if (terms_.empty()) return *this;
    Exponents shift = terms_.begin()->first;
    for (const auto& [e, c] : terms_)
        for (int i = 0; i < nvars_; ++i) shift[i] = std::min(shift[i], e[i]);
    Laurent r(nvars_);
    for (const auto& [e, c] : terms_) {
        Exponents f(nvars_);
        for (int i = 0; i < nvars_; ++i) f[i] = e[i] - shift[i];
        r.terms_.emplace(std::move(f), c);
    }
    if (r.terms_.begin()->second < 0) return -r;
    return r;
}

bool Laurent::is_monomial_unit() const {
    if (terms_.size() != 1) return false;
    const mpz_class& c = terms_.begin()->second;
    return c == 1 || c == -1;
}

Laurent Laurent::substitute_powers(const std::vector<long>& x) const {
    if (static_cast<int>(x.size()) != nvars_)
        throw std::invalid_argument("Laurent::substitute_powers: length mismatch");
    Laurent r(1);
    for (const auto& [e, c] : terms_) {
        long s = 0;
        for (int i = 0; i < nvars_; ++i) s += static_cast<long>(e[i]) * x[i];
        r.add_term({static_cast<int>(s)}, c);
    }
    return r;
}

std::string Laurent::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        mpz_class a = c;
        if (first) {
            if (a < 0) { out << "-"; a = -a; }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        std::string vars;
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += names.at(i);
            if (e[i] != 1) vars += "^" + std::to_string(e[i]);
        }
        if (vars.empty()) {
            out << a.get_str();
        } else {
            if (a != 1) out << a.get_str() << "*";
            out << vars;
        }
    }
    return out.str();
}

std::string Laurent::str() const {
    std::vector<std::string> names;
    for (int i = 0; i < nvars_; ++i) names.push_back("t" + std::to_string(i + 1));
    return str(names);
}

Laurent laurent_det(const std::vector<std::vector<Laurent>>& m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) throw std::invalid_argument("laurent_det: empty matrix");
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("laurent_det: not square");
    const int nv = m[0][0].nvars();
    if (n > 16) throw std::invalid_argument("laurent_det: matrix too large");

    // det over rows [r..n) and the columns present in colmask.
    std::unordered_map<std::uint32_t, Laurent> memo;
    auto rec = [&](auto&& self, int r, std::uint32_t colmask) -> Laurent {
        if (r == n) return Laurent::constant(nv, 1);
        std::uint32_t key = (static_cast<std::uint32_t>(r) << 16) | colmask;
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        Laurent acc(nv);
        int pos = 0;
        for (int c = 0; c < n; ++c) {
            if (!(colmask & (1u << c))) continue;
            if (!m[r][c].is_zero()) {
                Laurent term = m[r][c] * self(self, r + 1, colmask & ~(1u << c));
                acc = (pos % 2 == 0) ? acc + term : acc - term;
            }
            ++pos;
        }
        memo.emplace(key, acc);
        return acc;
    };
    return rec(rec, 0, (n >= 16) ? 0xFFFFu : ((1u << n) - 1));
}

}  // namespace torilink
