#include "sga/intpoly.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace sga {

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::constant(const mpz_class& c) { return IntPoly({c}); }

IntPoly IntPoly::linear_root(const mpz_class& r) { return IntPoly({-r, 1}); }

mpz_class IntPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[i];
}

mpz_class IntPoly::leading() const {
    if (coeffs_.empty()) return 0;
    return coeffs_.back();
}

mpz_class IntPoly::eval(const mpz_class& t) const {
    mpz_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<mpz_class> c(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<mpz_class> c(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] -= o.coeffs_[i];
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<mpz_class> c(coeffs_.size() + o.coeffs_.size() - 1, 0);
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
    return IntPoly(std::move(c));
}

std::string IntPoly::pretty() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        mpz_class c = coeffs_[i];
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        mpz_class a = abs(c);
        if (a != 1 || i == 0) os << a.get_str();
        if (i >= 1) os << "t";
        if (i >= 2) os << "^" << i;
        first = false;
    }
    return os.str();
}

std::string IntPoly::to_json() const {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& c : coeffs_) a.push_back(c.get_str());
    return a.dump();
}

IntPoly IntPoly::from_json(const std::string& text) {
    auto a = nlohmann::json::parse(text);
    std::vector<mpz_class> c;
    for (const auto& v : a)
        c.emplace_back(v.is_string() ? mpz_class(v.get<std::string>()) : mpz_class(v.get<long>()));
    return IntPoly(std::move(c));
}

std::optional<IntPoly> divide_exact(const IntPoly& p, const IntPoly& q) {
    if (q.is_zero()) throw std::invalid_argument("divide_exact: zero divisor");
    if (p.is_zero()) return IntPoly();
    if (p.degree() < q.degree()) return std::nullopt;
    std::vector<mpz_class> rem = p.coeffs();
    std::vector<mpz_class> quot(p.degree() - q.degree() + 1, 0);
    for (int i = p.degree(); i >= q.degree(); --i) {
        mpz_class lead = rem[i];
        if (lead == 0) continue;
        mpz_class f = lead / q.leading();
        if (f * q.leading() != lead) return std::nullopt;  // not exact over Z
        quot[i - q.degree()] = f;
        for (int j = 0; j <= q.degree(); ++j) rem[i - q.degree() + j] -= f * q.coeff(j);
    }
    for (const auto& c : rem)
        if (c != 0) return std::nullopt;
    return IntPoly(std::move(quot));
}

std::optional<std::vector<mpz_class>> nonneg_integer_roots(const IntPoly& p) {
    if (p.is_zero()) return std::nullopt;
    if (p.leading() != 1 && p.leading() != -1)
        throw std::invalid_argument("nonneg_integer_roots: polynomial must be monic up to sign");
    IntPoly cur = p;
    std::vector<mpz_class> roots;
    while (cur.degree() > 0) {
        // try r = 0 first, then positive divisors of the constant term
        std::optional<mpz_class> found;
        if (cur.coeff(0) == 0) {
            found = 0;
        } else {
            mpz_class c0 = abs(cur.coeff(0));
            for (mpz_class r = 1; r * r <= c0; ++r) {
                if (c0 % r != 0) continue;
                if (cur.eval(r) == 0) {
                    found = r;
                    break;
                }
                mpz_class r2 = c0 / r;
                if (cur.eval(r2) == 0) {
                    found = r2;
                    break;
                }
            }
        }
        if (!found) return std::nullopt;
        auto q = divide_exact(cur, IntPoly::linear_root(*found));
        if (!q) return std::nullopt;
        roots.push_back(*found);
        cur = *q;
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace sga
