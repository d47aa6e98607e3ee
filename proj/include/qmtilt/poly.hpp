#pragma once

#include <string>
#include <vector>

namespace qmtilt {

// Dense integer polynomial in one formal variable q, canonical form
// (trailing zero coefficients stripped). Arithmetic is overflow-checked.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<long long> coeffs); // coeffs[k] is the q^k coefficient

    static IntPolynomial zero() { return IntPolynomial(); }
    static IntPolynomial one() { return IntPolynomial({1}); }
    static IntPolynomial monomial(long long c, int k);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    long long coeff(int k) const;
    const std::vector<long long>& coeffs() const { return c_; }

    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    IntPolynomial shifted(int k) const; // multiply by q^k, k >= 0
    IntPolynomial negated() const;

    long long eval_at_one() const;

    bool operator==(const IntPolynomial&) const = default;

    // Human-readable form: "0", "1", "1+q", "q^2-1", ...
    std::string str() const;

private:
    void strip();
    std::vector<long long> c_;
};

} // namespace qmtilt
