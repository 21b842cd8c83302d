#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace sga {

/// Sparse multivariate polynomial over Q in a fixed number of variables.
class MultiPoly {
public:
    using Expo = std::vector<int>;

    explicit MultiPoly(int nvars = 0) : nvars_(nvars) {}
    static MultiPoly monomial(int nvars, const Expo& e, const mpq_class& c);
    static MultiPoly constant(int nvars, const mpq_class& c);
    static MultiPoly variable(int nvars, int i);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Expo, mpq_class>& terms() const { return terms_; }

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const mpq_class& c) const;
    bool operator==(const MultiPoly& o) const = default;

    mpq_class eval(const std::vector<mpq_class>& x) const;
    std::string pretty(const std::vector<std::string>& names) const;

    void add_term(const Expo& e, const mpq_class& c);

private:
    int nvars_;
    std::map<Expo, mpq_class> terms_;
};

MultiPoly determinant(const std::vector<std::vector<MultiPoly>>& m);

/// All exponent vectors of total degree d in n variables, lexicographic.
std::vector<std::vector<int>> monomials_of_degree(int n, int d);

}  // namespace sga
