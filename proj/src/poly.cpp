#include "qmtilt/poly.hpp"

#include <stdexcept>

#include "qmtilt/checked.hpp"

namespace qmtilt {

IntPolynomial::IntPolynomial(std::vector<long long> coeffs) : c_(std::move(coeffs)) {
    strip();
}

IntPolynomial IntPolynomial::monomial(long long c, int k) {
    if (k < 0) throw std::invalid_argument("negative exponent");
    std::vector<long long> v(static_cast<size_t>(k) + 1, 0);
    v.back() = c;
    return IntPolynomial(std::move(v));
}

long long IntPolynomial::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
    return c_[static_cast<size_t>(k)];
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    std::vector<long long> v(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < v.size(); ++i)
        v[i] = checked_add(i < c_.size() ? c_[i] : 0, i < o.c_.size() ? o.c_[i] : 0);
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
    return *this + o.negated();
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return zero();
    std::vector<long long> v(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j)
            v[i + j] = checked_add(v[i + j], checked_mul(c_[i], o.c_[j]));
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::shifted(int k) const {
    if (k < 0) throw std::invalid_argument("negative shift");
    if (is_zero()) return zero();
    std::vector<long long> v(static_cast<size_t>(k), 0);
    v.insert(v.end(), c_.begin(), c_.end());
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::negated() const {
    std::vector<long long> v = c_;
    for (auto& x : v) x = checked_sub(0, x);
    return IntPolynomial(std::move(v));
}

long long IntPolynomial::eval_at_one() const {
    long long s = 0;
    for (long long x : c_) s = checked_add(s, x);
    return s;
}

std::string IntPolynomial::str() const {
    if (is_zero()) return "0";
    std::string s;
    for (int k = 0; k <= degree(); ++k) {
        long long c = coeff(k);
        if (c == 0) continue;
        if (!s.empty()) s += c > 0 ? "+" : "-";
        else if (c < 0) s += "-";
        long long mag = c > 0 ? c : -c;
        if (mag != 1 || k == 0) s += std::to_string(mag);
        if (k >= 1) s += k == 1 ? "q" : "q^" + std::to_string(k);
    }
    return s;
}

void IntPolynomial::strip() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

} // namespace qmtilt
