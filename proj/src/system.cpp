#include "lindim/system.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace lindim {

long long LinearSystem::mult_sum() const {
    return std::accumulate(mults.begin(), mults.end(), 0LL);
}

LinearSystem canonicalize(int n, int d, std::vector<int> mults) {
    if (n < 1)
        throw std::invalid_argument("canonicalize: ambient dimension must be >= 1");
    if (d < 0)
        throw std::invalid_argument("canonicalize: degree must be >= 0");
    for (int m : mults)
        if (m < 0)
            throw std::invalid_argument("canonicalize: negative multiplicity");
    std::erase(mults, 0);
    std::sort(mults.begin(), mults.end(), std::greater<int>());
    return LinearSystem{n, d, std::move(mults)};
}

void validate_multi_index(const MultiIndex& index, int s) {
    int prev = 0;
    for (int i : index.indices) {
        if (i < 1 || i > s)
            throw std::out_of_range("multi-index entry outside 1..s");
        if (i <= prev)
            throw std::invalid_argument("multi-index must be strictly increasing");
        prev = i;
    }
}

}  // namespace lindim
