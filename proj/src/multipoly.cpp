#include "sga/multipoly.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace sga {

MultiPoly MultiPoly::monomial(int nvars, const Expo& e, const mpq_class& c) {
    if (static_cast<int>(e.size()) != nvars)
        throw std::invalid_argument("monomial: exponent arity mismatch");
    MultiPoly p(nvars);
    p.add_term(e, c);
    return p;
}

MultiPoly MultiPoly::constant(int nvars, const mpq_class& c) {
    return monomial(nvars, Expo(nvars, 0), c);
}

MultiPoly MultiPoly::variable(int nvars, int i) {
    Expo e(nvars, 0);
    e[i] = 1;
    return monomial(nvars, e, 1);
}

void MultiPoly::add_term(const Expo& e, const mpq_class& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    MultiPoly r(nvars_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            Expo e(nvars_);
            for (int i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
            r.add_term(e, c1 * c2);
        }
    return r;
}

MultiPoly MultiPoly::operator*(const mpq_class& c) const {
    MultiPoly r(nvars_);
    for (const auto& [e, c0] : terms_) r.add_term(e, c0 * c);
    return r;
}

mpq_class MultiPoly::eval(const std::vector<mpq_class>& x) const {
    if (static_cast<int>(x.size()) != nvars_)
        throw std::invalid_argument("eval: point arity mismatch");
    mpq_class total = 0;
    for (const auto& [e, c] : terms_) {
        mpq_class t = c;
        for (int i = 0; i < nvars_; ++i)
            for (int k = 0; k < e[i]; ++k) t *= x[i];
        total += t;
    }
    return total;
}

std::string MultiPoly::pretty(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        mpq_class a = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        bool has_var = false;
        for (int i = 0; i < nvars_; ++i)
            if (e[i] > 0) has_var = true;
        if (a != 1 || !has_var) os << a.get_str();
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            os << names[i];
            if (e[i] > 1) os << "^" << e[i];
        }
        first = false;
    }
    return os.str();
}

MultiPoly determinant(const std::vector<std::vector<MultiPoly>>& m) {
    size_t n = m.size();
    if (n == 0) throw std::invalid_argument("determinant: empty matrix");
    int nvars = m[0][0].nvars();
    // cofactor expansion along the first remaining row
    std::vector<int> cols(n);
    for (size_t i = 0; i < n; ++i) cols[i] = static_cast<int>(i);
    std::function<MultiPoly(size_t, std::vector<int>&)> det = [&](size_t row,
                                                                  std::vector<int>& cs) {
        if (cs.size() == 1) return m[row][cs[0]];
        MultiPoly acc(nvars);
        for (size_t k = 0; k < cs.size(); ++k) {
            if (m[row][cs[k]].is_zero()) continue;
            int c = cs[k];
            std::vector<int> rest;
            for (size_t t = 0; t < cs.size(); ++t)
                if (t != k) rest.push_back(cs[t]);
            MultiPoly sub = det(row + 1, rest);
            MultiPoly term = m[row][c] * sub;
            acc = (k % 2 == 0) ? acc + term : acc - term;
        }
        return acc;
    };
    return det(0, cols);
}

std::vector<std::vector<int>> monomials_of_degree(int n, int d) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(n, 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == n - 1) {
            cur[i] = left;
            out.push_back(cur);
            return;
        }
        for (int k = left; k >= 0; --k) {
            cur[i] = k;
            rec(i + 1, left - k);
        }
    };
    if (n == 0) {
        if (d == 0) out.push_back({});
        return out;
    }
    rec(0, d);
    return out;
}

}  // namespace sga
