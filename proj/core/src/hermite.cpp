#include "thetad/hermite.hpp"

#include <stdexcept>
#include <utility>

namespace thetad {

HermitePoly hermite(int m) {
    if (m < 0) {
        throw std::invalid_argument("hermite: negative degree");
    }
    std::vector<BigInt> prev{BigInt(1)};  // H_0
    if (m == 0) {
        return HermitePoly{0, std::move(prev)};
    }
    std::vector<BigInt> cur{BigInt(0), BigInt(2)};  // H_1
    for (int k = 1; k < m; ++k) {
        // H_{k+1} = 2x H_k - 2k H_{k-1}
        std::vector<BigInt> nxt((size_t)k + 2);
        for (size_t i = 0; i < cur.size(); ++i) {
            nxt[i + 1] += 2 * cur[i];
        }
        for (size_t i = 0; i < prev.size(); ++i) {
            nxt[i] -= 2 * k * prev[i];
        }
        prev = std::move(cur);
        cur = std::move(nxt);
    }
    return HermitePoly{m, std::move(cur)};
}

BigFloat hermite_eval(const HermitePoly& h, const BigFloat& x) {
    const mpfr_prec_t prec = x.precision();
    BigFloat acc(prec);
    for (int i = h.m; i >= 0; --i) {
        acc = acc * x + BigFloat::of(h.coeffs[(size_t)i], prec);
    }
    return acc;
}

}  // namespace thetad
