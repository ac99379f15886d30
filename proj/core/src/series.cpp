#include "thetad/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "thetad/errors.hpp"

namespace thetad {

Series::Series(int order) {
    if (order < 0) {
        throw std::invalid_argument("Series: negative truncation order");
    }
    c_.assign((size_t)order + 1, Rat(0));
}

Series::Series(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) {
        throw std::invalid_argument("Series: empty coefficient list");
    }
}

Series Series::constant(const Rat& value, int order) {
    Series s(order);
    s.c_[0] = value;
    return s;
}

const Rat& Series::coeff(int j) const {
    if (j < 0) {
        throw std::invalid_argument("Series::coeff: negative index");
    }
    if (j > order()) {
        throw OrderExceeded(j, order());
    }
    return c_[(size_t)j];
}

void Series::set_coeff(int j, Rat value) {
    if (j < 0) {
        throw std::invalid_argument("Series::set_coeff: negative index");
    }
    if (j > order()) {
        throw OrderExceeded(j, order());
    }
    c_[(size_t)j] = std::move(value);
}

Series Series::truncated(int new_order) const {
    if (new_order < 0 || new_order > order()) {
        throw std::invalid_argument("Series::truncated: order out of range");
    }
    Series s(new_order);
    std::copy(c_.begin(), c_.begin() + new_order + 1, s.c_.begin());
    return s;
}

Series Series::derivative() const {
    if (order() < 1) {
        throw std::invalid_argument(
            "Series::derivative: order 0 series has no representable "
            "derivative");
    }
    Series s(order() - 1);
    for (int j = 1; j <= order(); ++j) {
        s.c_[(size_t)(j - 1)] = Rat(j) * c_[(size_t)j];
    }
    return s;
}

Series Series::pow(unsigned long k) const {
    Series acc = Series::one(order());
    Series base = *this;
    // Binary exponentiation; every multiply stays at this truncation order.
    while (k > 0) {
        if (k & 1UL) {
            acc = acc * base;
        }
        k >>= 1UL;
        if (k > 0) {
            base = base * base;
        }
    }
    return acc;
}

Series Series::operator-() const {
    Series s(order());
    for (size_t j = 0; j < c_.size(); ++j) {
        s.c_[j] = -c_[j];
    }
    return s;
}

Series operator+(const Series& a, const Series& b) {
    int n = std::min(a.order(), b.order());
    Series s(n);
    for (int j = 0; j <= n; ++j) {
        s.c_[(size_t)j] = a.c_[(size_t)j] + b.c_[(size_t)j];
    }
    return s;
}

Series operator-(const Series& a, const Series& b) {
    int n = std::min(a.order(), b.order());
    Series s(n);
    for (int j = 0; j <= n; ++j) {
        s.c_[(size_t)j] = a.c_[(size_t)j] - b.c_[(size_t)j];
    }
    return s;
}

Series operator*(const Series& a, const Series& b) {
    int n = std::min(a.order(), b.order());
    Series s(n);
    for (int j = 0; j <= n; ++j) {
        Rat acc(0);
        for (int i = 0; i <= j; ++i) {
            acc += a.c_[(size_t)i] * b.c_[(size_t)(j - i)];
        }
        s.c_[(size_t)j] = acc;
    }
    return s;
}

Series operator/(const Series& a, const Series& b) {
    if (b.c_[0] == 0) {
        throw ZeroConstantTerm();
    }
    int n = std::min(a.order(), b.order());
    Series q(n);
    // Forward substitution: q_j = (a_j - sum_{i<j} q_i b_{j-i}) / b_0.
    for (int j = 0; j <= n; ++j) {
        Rat acc = a.c_[(size_t)j];
        for (int i = 0; i < j; ++i) {
            acc -= q.c_[(size_t)i] * b.c_[(size_t)(j - i)];
        }
        q.c_[(size_t)j] = acc / b.c_[0];
    }
    return q;
}

Series operator*(const Rat& s, const Series& a) {
    Series r(a.order());
    for (size_t j = 0; j < a.c_.size(); ++j) {
        r.c_[j] = s * a.c_[j];
    }
    return r;
}

bool operator==(const Series& a, const Series& b) {
    return a.c_ == b.c_;
}

Series hypergeometric_series(const Rat& a, const Rat& b, const Rat& c,
                             const Rat& scale, int order) {
    if (is_integer(c) && c <= 0) {
        throw PoleInC(c.get_str());
    }
    Series s(order);
    Rat term(1);
    s.set_coeff(0, term);
    for (int n = 0; n < order; ++n) {
        term *= (a + n) * (b + n) * scale;
        term /= (c + n) * Rat(n + 1);
        s.set_coeff(n + 1, term);
    }
    return s;
}

}  // namespace thetad
