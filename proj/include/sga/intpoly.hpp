#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace sga {

/// Dense exact-integer univariate polynomial, lowest degree first.
class IntPoly {
  public:
    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> coeffs);
    static IntPoly zero() { return IntPoly(); }
    static IntPoly constant(const mpz_class& c);
    /// t - r
    static IntPoly linear_root(const mpz_class& r);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }
    mpz_class coeff(int i) const;
    mpz_class leading() const;

    mpz_class eval(const mpz_class& t) const;

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    bool operator==(const IntPoly&) const = default;

    std::string pretty() const;         // "t^3 - 5t^2 + ..."
    std::string to_json() const;        // "[c0,c1,...]"
    static IntPoly from_json(const std::string& text);

  private:
    std::vector<mpz_class> coeffs_;
    void trim();
};

/// Exact quotient over Z, or nullopt if q does not divide p.
std::optional<IntPoly> divide_exact(const IntPoly& p, const IntPoly& q);

/// If p = prod (t - r_i) with non-negative integer roots, the sorted multiset
/// {r_i}; nullopt otherwise. Requires p monic up to sign.
std::optional<std::vector<mpz_class>> nonneg_integer_roots(const IntPoly& p);

}  // namespace sga
