#include "lindim/picard.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace lindim {

PicardClass to_picard(const LinearSystem& sys) {
    PicardClass cls;
    cls.n = sys.n;
    cls.degree = sys.d;
    cls.mults.assign(sys.mults.begin(), sys.mults.end());
    return cls;
}

PicardClass exceptional_class(int n, int s, int i) {
    if (i < 1 || i > s)
        throw std::out_of_range("exceptional_class: index outside 1..s");
    PicardClass cls;
    cls.n = n;
    cls.degree = 0;
    cls.mults.assign(s, 0);
    cls.mults[i - 1] = -1;
    return cls;
}

long long pairing(const PicardClass& a, const PicardClass& b) {
    if (a.n != b.n || a.s() != b.s())
        throw std::invalid_argument("pairing: classes live on different lattices");
    long long value = static_cast<long long>(a.n - 1) * a.degree * b.degree;
    for (int i = 0; i < a.s(); ++i)
        value -= a.mults[i] * b.mults[i];
    return value;
}

PicardClass cremona(const PicardClass& a, const std::vector<int>& base) {
    if (static_cast<int>(base.size()) != a.n + 1)
        throw std::invalid_argument("cremona: base must consist of n+1 points");
    if (a.s() < a.n + 1)
        throw std::invalid_argument("cremona: lattice has fewer than n+1 points");
    long long c = -static_cast<long long>(a.n - 1) * a.degree;
    for (int i : base) {
        if (i < 1 || i > a.s())
            throw std::out_of_range("cremona: base index outside 1..s");
        c += a.mults[i - 1];
    }
    PicardClass image = a;
    image.degree -= c;
    for (int i : base)
        image.mults[i - 1] -= c;
    return image;
}

namespace {

// Indices (1-based) of the n+1 largest multiplicities, ties broken by index.
std::vector<int> largest_base(const PicardClass& a) {
    std::vector<int> idx(a.s());
    std::iota(idx.begin(), idx.end(), 1);
    std::stable_sort(idx.begin(), idx.end(), [&](int l, int r) {
        return a.mults[l - 1] > a.mults[r - 1];
    });
    idx.resize(a.n + 1);
    std::sort(idx.begin(), idx.end());
    return idx;
}

long long cremona_c(const PicardClass& a, const std::vector<int>& base) {
    long long c = -static_cast<long long>(a.n - 1) * a.degree;
    for (int i : base)
        c += a.mults[i - 1];
    return c;
}

}  // namespace

bool is_cremona_reduced(const PicardClass& a) {
    if (a.s() < a.n + 1)
        return true;
    return cremona_c(a, largest_base(a)) <= 0;
}

CremonaReduction cremona_reduce(const PicardClass& a) {
    CremonaReduction result;
    result.reduced = a;
    if (a.s() < a.n + 1)
        return result;
    while (result.reduced.degree >= 0) {
        std::vector<int> base = largest_base(result.reduced);
        if (cremona_c(result.reduced, base) <= 0)
            return result;
        result.reduced = cremona(result.reduced, base);
        result.moves.push_back(std::move(base));
    }
    result.verdict = ReductionVerdict::negative_degree;
    return result;
}

namespace {

// Expand every (n+1)-subset of 1..s in lexicographic order.
void for_each_base(int s, int k, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> base(k);
    std::function<void(int, int)> rec = [&](int pos, int first) {
        if (pos == k) {
            fn(base);
            return;
        }
        for (int i = first; i <= s - (k - pos - 1); ++i) {
            base[pos] = i;
            rec(pos + 1, i + 1);
        }
    };
    rec(0, 1);
}

}  // namespace

std::vector<PicardClass> weyl_orbit(int n, int s, int depth) {
    if (s < n + 1)
        throw std::invalid_argument("weyl_orbit: need at least n+1 points");
    if (depth < 0)
        throw std::invalid_argument("weyl_orbit: negative depth");

    std::set<std::pair<long long, std::vector<long long>>> seen;
    std::vector<PicardClass> frontier;
    std::vector<PicardClass> orbit;

    auto insert = [&](const PicardClass& cls) {
        if (seen.emplace(cls.degree, cls.mults).second) {
            orbit.push_back(cls);
            frontier.push_back(cls);
            return true;
        }
        return false;
    };

    for (int i = 1; i <= s; ++i)
        insert(exceptional_class(n, s, i));

    for (int level = 0; level < depth && !frontier.empty(); ++level) {
        std::vector<PicardClass> current;
        current.swap(frontier);
        for (const PicardClass& cls : current) {
            for_each_base(s, n + 1, [&](const std::vector<int>& base) {
                insert(cremona(cls, base));
            });
        }
    }

    std::sort(orbit.begin(), orbit.end());
    return orbit;
}

std::vector<WeylBaseLocusEntry> weyl_base_locus(const PicardClass& D, int depth,
                                                bool include_exceptional) {
    std::vector<WeylBaseLocusEntry> entries;
    for (const PicardClass& f : weyl_orbit(D.n, D.s(), depth)) {
        bool is_exceptional =
            f.degree == 0 && std::count(f.mults.begin(), f.mults.end(), -1) == 1 &&
            std::count(f.mults.begin(), f.mults.end(), 0) == f.s() - 1;
        long long p = pairing(D, f);
        if (is_exceptional) {
            // The original exceptional classes pair to +m_i and only restate
            // the assigned multiplicities; reported on request only.
            if (include_exceptional)
                entries.push_back(WeylBaseLocusEntry{f, p});
            continue;
        }
        if (p <= 0)
            entries.push_back(WeylBaseLocusEntry{f, -p});
    }
    return entries;
}

Effectivity effectivity(const LinearSystem& sys) {
    bool mult_bounded = sys.mults.empty() || sys.mults.front() <= sys.d;
    bool sum_bounded = sys.mult_sum() <= static_cast<long long>(sys.n) * sys.d;
    if (sys.s() <= sys.n + 2)
        return (mult_bounded && sum_bounded) ? Effectivity::nonempty : Effectivity::empty;
    if (mult_bounded && sum_bounded)
        return Effectivity::nonempty;
    if (!mult_bounded)
        return Effectivity::empty;
    if (cremona_reduce(to_picard(sys)).verdict == ReductionVerdict::negative_degree)
        return Effectivity::empty;
    return Effectivity::unknown;
}

}  // namespace lindim
