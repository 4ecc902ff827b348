#include "dowlingkit/polynomial.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

namespace dowlingkit {

IntPolynomial::IntPolynomial(BigInt constant, std::string var) : var_(std::move(var)) {
    if (constant != 0) coeffs_.push_back(std::move(constant));
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs, std::string var)
    : coeffs_(std::move(coeffs)), var_(std::move(var)) {
    trim();
}

IntPolynomial IntPolynomial::variable(std::string var) {
    return IntPolynomial(std::vector<BigInt>{BigInt(0), BigInt(1)}, std::move(var));
}

BigInt IntPolynomial::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[k];
}

BigInt IntPolynomial::eval(const BigInt& x) const {
    BigInt r = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
    return r;
}

IntPolynomial IntPolynomial::eval(const IntPolynomial& x) const {
    IntPolynomial r(BigInt(0), x.var());
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        r = r * x + IntPolynomial(*it, x.var());
    return r;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& o) {
    if (coeffs_.empty() || o.coeffs_.empty()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<BigInt> out(coeffs_.size() + o.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    coeffs_ = std::move(out);
    trim();
    return *this;
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

namespace {

void append_monomial(std::ostringstream& os, const BigInt& c, int deg, const std::string& var,
                     bool leading) {
    BigInt a = c < 0 ? BigInt(-c) : c;
    if (leading) {
        if (c < 0) os << "-";
    } else {
        os << (c < 0 ? " - " : " + ");
    }
    if (deg == 0) {
        os << a.str();
        return;
    }
    if (a != 1) os << a.str();
    os << var;
    if (deg > 1) os << "^" << deg;
}

}  // namespace

std::string IntPolynomial::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool leading = true;
    for (int d = degree(); d >= 0; --d) {
        if (coeffs_[d] == 0) continue;
        append_monomial(os, coeffs_[d], d, var_, leading);
        leading = false;
    }
    return os.str();
}

nlohmann::json IntPolynomial::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : coeffs_) {
        if (c >= std::numeric_limits<std::int64_t>::min() &&
            c <= std::numeric_limits<std::int64_t>::max()) {
            arr.push_back(static_cast<std::int64_t>(c));
        } else {
            arr.push_back(c.str());
        }
    }
    return nlohmann::json{{"variable", var_}, {"coefficients", arr}};
}

BivariatePoly::BivariatePoly(IntPolynomial constant_in_u) {
    if (!constant_in_u.is_zero()) coeffs_.push_back(std::move(constant_in_u));
}

BivariatePoly BivariatePoly::one() { return BivariatePoly(IntPolynomial(BigInt(1), "u")); }

IntPolynomial BivariatePoly::coeff_t(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return IntPolynomial(BigInt(0), "u");
    return coeffs_[k];
}

void BivariatePoly::mul_linear(const IntPolynomial& p, const BigInt& c) {
    std::vector<IntPolynomial> out(coeffs_.size() + 1, IntPolynomial(BigInt(0), "u"));
    IntPolynomial cpoly(c, "u");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        out[i] += coeffs_[i] * p;
        out[i + 1] += coeffs_[i] * cpoly;
    }
    while (!out.empty() && out.back().is_zero()) out.pop_back();
    coeffs_ = std::move(out);
}

BigInt BivariatePoly::eval(const BigInt& t, const BigInt& u) const {
    BigInt r = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * t + it->eval(u);
    return r;
}

std::string BivariatePoly::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    for (int k = degree_t(); k >= 0; --k) {
        if (coeffs_[k].is_zero()) continue;
        if (os.tellp() > 0) os << " + ";
        os << "(" << coeffs_[k].str() << ")";
        if (k > 0) {
            os << "t";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

}  // namespace dowlingkit
