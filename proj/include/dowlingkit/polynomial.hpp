#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "dowlingkit/common.hpp"

namespace dowlingkit {

/// Univariate polynomial with exact integer coefficients, stored ascending by
/// degree with trailing zeros trimmed. The variable tag is carried along for
/// printing only; arithmetic mixes tags freely (the result keeps the left tag).
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(BigInt constant, std::string var = "t");
    IntPolynomial(std::vector<BigInt> coeffs, std::string var = "t");

    static IntPolynomial variable(std::string var = "t");

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    BigInt coeff(int k) const;
    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    const std::string& var() const { return var_; }

    BigInt eval(const BigInt& x) const;
    IntPolynomial eval(const IntPolynomial& x) const;

    IntPolynomial& operator+=(const IntPolynomial& o);
    IntPolynomial& operator-=(const IntPolynomial& o);
    IntPolynomial& operator*=(const IntPolynomial& o);
    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }
    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }

    /// Descending-degree human form, e.g. "t^2 - 18t + 72".
    std::string str() const;
    /// {"variable": ..., "coefficients": [c0, c1, ...]} ascending; coefficients
    /// exceeding 64 bits are emitted as decimal strings.
    nlohmann::json to_json() const;

private:
    void trim();
    std::vector<BigInt> coeffs_;
    std::string var_ = "t";
};

/// Polynomial in t whose coefficients live in Z[u]; just enough surface for the
/// E_1 Hilbert series product.
class BivariatePoly {
public:
    BivariatePoly() = default;
    explicit BivariatePoly(IntPolynomial constant_in_u);

    static BivariatePoly one();

    int degree_t() const { return static_cast<int>(coeffs_.size()) - 1; }
    IntPolynomial coeff_t(int k) const;

    /// Multiply by (p(u) + c*t).
    void mul_linear(const IntPolynomial& p, const BigInt& c);

    BigInt eval(const BigInt& t, const BigInt& u) const;
    std::string str() const;

    friend bool operator==(const BivariatePoly& a, const BivariatePoly& b) {
        return a.coeffs_ == b.coeffs_;
    }

private:
    std::vector<IntPolynomial> coeffs_;  // index = power of t
};

}  // namespace dowlingkit
