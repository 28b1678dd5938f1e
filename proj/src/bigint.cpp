#include "lindim/bigint.hpp"

#include <stdexcept>

namespace lindim {

BigInt binomial(long long a, long long k) {
    if (k < 0)
        throw std::invalid_argument("binomial: negative lower index");
    if (a < k)
        return 0;
    // Multiplicative form; each partial product is exactly divisible.
    BigInt result = 1;
    for (long long i = 1; i <= k; ++i) {
        result *= (a - k + i);
        result /= i;
    }
    return result;
}

std::string to_string(const BigInt& v) {
    return v.str();
}

}  // namespace lindim
