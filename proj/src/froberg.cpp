#include "lindim/froberg.hpp"

#include <stdexcept>

namespace lindim {

TruncatedSeries truncated_series(int n, const std::vector<int>& gen_degrees, int D) {
    if (D < 0)
        throw std::invalid_argument("truncated_series: negative expansion order");
    if (n < 0)
        throw std::invalid_argument("truncated_series: negative ring dimension");
    for (int a : gen_degrees)
        if (a < 1)
            throw std::invalid_argument("truncated_series: generator degrees must be positive");

    TruncatedSeries series;
    series.raw.assign(D + 1, BigInt(0));
    series.raw[0] = 1;
    // Numerator product, truncated at t^D.
    for (int a : gen_degrees)
        for (int i = D; i >= a; --i)
            series.raw[i] -= series.raw[i - a];
    // Dividing by (1-t)^(n+1) is n+1 rounds of prefix sums.
    for (int rep = 0; rep <= n; ++rep)
        for (int i = 1; i <= D; ++i)
            series.raw[i] += series.raw[i - 1];

    series.truncated = series.raw;
    for (int i = 0; i <= D; ++i) {
        if (series.raw[i] <= 0) {
            series.truncation_index = i;
            for (int j = i; j <= D; ++j)
                series.truncated[j] = 0;
            break;
        }
    }
    return series;
}

BigInt froberg_prediction(const LinearSystem& sys) {
    std::vector<int> degrees;
    degrees.reserve(sys.mults.size());
    for (int m : sys.mults) {
        if (m > sys.d)
            throw std::invalid_argument("froberg_prediction: multiplicity exceeds degree");
        degrees.push_back(sys.d + 1 - m);
    }
    TruncatedSeries series = truncated_series(sys.n, degrees, sys.d);
    return series.truncated[sys.d] - 1;
}

}  // namespace lindim
