#include "lindim/oracle.hpp"

#include "lindim/bigint.hpp"
#include "lindim/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <future>
#include <stdexcept>
#include <unordered_map>

namespace lindim {

std::uint64_t default_oracle_seed() {
    if (const char* env = std::getenv("LINDIM_SEED"))
        return std::strtoull(env, nullptr, 10);
    return 0x11d5eedULL;
}

std::vector<std::vector<int>> monomial_exponents(int n, int d) {
    std::vector<std::vector<int>> result;
    std::vector<int> exp(n + 1, 0);
    std::function<void(int, int)> rec = [&](int var, int remaining) {
        if (var == n) {
            exp[var] = remaining;
            result.push_back(exp);
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            exp[var] = e;
            rec(var + 1, remaining - e);
        }
    };
    rec(0, d);
    return result;
}

namespace {

constexpr int kMaxAmbient = 9;
constexpr int kMaxDegree = 63;

void check_oracle_bounds(const LinearSystem& sys, const OracleConfig& cfg) {
    if (sys.n > kMaxAmbient || sys.d > kMaxDegree)
        throw std::invalid_argument("oracle: supported range is n <= 9, d <= 63");
    if (cfg.trials < 1)
        throw std::invalid_argument("oracle: needs at least one trial");
    if (cfg.prime_bits < 4 || cfg.prime_bits > 62)
        throw std::invalid_argument("oracle: prime_bits must be in 4..62");
    if ((1ULL << (cfg.prime_bits - 1)) <= static_cast<std::uint64_t>(sys.d))
        throw std::invalid_argument("oracle: prime would not exceed the degree");
}

std::uint64_t pack_exponents(const std::vector<int>& exp) {
    std::uint64_t key = 0;
    for (int e : exp)
        key = (key << 6) | static_cast<std::uint64_t>(e);
    return key;
}

struct TrialSetup {
    PrimeField field;
    std::mt19937_64 rng;

    TrialSetup(const OracleConfig& cfg, std::uint64_t trial_index)
        : field(0x3), rng(seeded_stream(cfg.seed, trial_index)) {
        field = PrimeField(random_prime(cfg.prime_bits, rng));
    }

    std::uint64_t uniform() {
        std::uniform_int_distribution<std::uint64_t> dist(0, field.modulus() - 1);
        return dist(rng);
    }
};

// s random points in the affine chart x0 = 1, pairwise distinct.
std::vector<std::vector<std::uint64_t>> sample_points(TrialSetup& t, int n, int s) {
    std::vector<std::vector<std::uint64_t>> points;
    while (static_cast<int>(points.size()) < s) {
        std::vector<std::uint64_t> p(n);
        for (auto& c : p)
            c = t.uniform();
        if (std::find(points.begin(), points.end(), p) == points.end())
            points.push_back(std::move(p));
    }
    return points;
}

// Montgomery-form powers c^0..c^max for one coordinate.
std::vector<std::uint64_t> power_table(const PrimeField& f, std::uint64_t c, int max) {
    std::vector<std::uint64_t> powers(max + 1);
    powers[0] = f.one_m();
    std::uint64_t c_m = f.to_m(c);
    for (int k = 1; k <= max; ++k)
        powers[k] = f.mul(powers[k - 1], c_m);
    return powers;
}

// Rows: all derivative conditions of order below m_j at each point, in the
// affine chart. Entry at monomial e for derivative order alpha is
//   prod_i e_i (e_i - 1) ... (e_i - alpha_i + 1) * x^(e - alpha).
FpMatrix interpolation_matrix(const LinearSystem& sys, TrialSetup& t,
                              const std::vector<std::vector<int>>& monomials,
                              const std::vector<std::vector<std::uint64_t>>& points) {
    const PrimeField& f = t.field;
    const int n = sys.n;
    const int d = sys.d;

    // Falling factorials ff[e][a] = e (e-1) ... (e-a+1), Montgomery form.
    std::vector<std::vector<std::uint64_t>> ff(d + 1, std::vector<std::uint64_t>(d + 1, 0));
    for (int e = 0; e <= d; ++e) {
        ff[e][0] = f.one_m();
        for (int a = 1; a <= e; ++a)
            ff[e][a] = f.mul(ff[e][a - 1], f.to_m(static_cast<std::uint64_t>(e - a + 1)));
    }

    std::size_t total_rows = 0;
    for (int m : sys.mults)
        total_rows += static_cast<std::size_t>(
            static_cast<long long>(binomial(n + m - 1, n)));

    FpMatrix matrix(total_rows, monomials.size());
    std::size_t row_index = 0;
    for (int j = 0; j < sys.s(); ++j) {
        const int m = sys.mults[j];
        std::vector<std::vector<std::uint64_t>> powers(n);
        for (int i = 0; i < n; ++i)
            powers[i] = power_table(f, points[j][i], d);
        // Slack-variable trick: (n+1)-tuples of total degree m-1, first entry
        // ignored, enumerate all derivative orders alpha with |alpha| <= m-1.
        for (const std::vector<int>& alpha_ext : monomial_exponents(n, m - 1)) {
            std::uint64_t* row = matrix.row(row_index++);
            for (std::size_t c = 0; c < monomials.size(); ++c) {
                const std::vector<int>& e = monomials[c];
                std::uint64_t value = f.one_m();
                for (int i = 1; i <= n; ++i) {
                    const int ei = e[i];
                    const int ai = alpha_ext[i];
                    if (ai > ei) {
                        value = 0;
                        break;
                    }
                    if (ai > 0)
                        value = f.mul(value, ff[ei][ai]);
                    value = f.mul(value, powers[i - 1][ei - ai]);
                }
                row[c] = value;
            }
        }
    }
    return matrix;
}

FpMatrix apolarity_matrix(const LinearSystem& sys, TrialSetup& t,
                          const std::vector<std::vector<int>>& monomials) {
    const PrimeField& f = t.field;
    const int n = sys.n;
    const int d = sys.d;

    std::unordered_map<std::uint64_t, std::size_t> index_of;
    index_of.reserve(monomials.size() * 2);
    for (std::size_t c = 0; c < monomials.size(); ++c)
        index_of.emplace(pack_exponents(monomials[c]), c);

    std::vector<std::uint64_t> fact(d + 1);
    fact[0] = f.one_m();
    for (int k = 1; k <= d; ++k)
        fact[k] = f.mul(fact[k - 1], f.to_m(static_cast<std::uint64_t>(k)));
    std::vector<std::uint64_t> inv_fact(d + 1);
    inv_fact[d] = f.inv(fact[d]);
    for (int k = d; k >= 1; --k)
        inv_fact[k - 1] = f.mul(inv_fact[k], f.to_m(static_cast<std::uint64_t>(k)));

    std::size_t total_rows = 0;
    for (int m : sys.mults)
        total_rows += static_cast<std::size_t>(
            static_cast<long long>(binomial(n + m - 1, n)));

    FpMatrix matrix(total_rows, monomials.size());
    std::size_t row_index = 0;
    for (int j = 0; j < sys.s(); ++j) {
        const int m = sys.mults[j];
        const int e = d + 1 - m;  // exponent of the linear form
        // Random linear form, nonzero.
        std::vector<std::uint64_t> form(n + 1);
        do {
            for (auto& c : form)
                c = t.uniform();
        } while (std::all_of(form.begin(), form.end(), [](std::uint64_t c) { return c == 0; }));

        std::vector<std::vector<std::uint64_t>> powers(n + 1);
        for (int i = 0; i <= n; ++i)
            powers[i] = power_table(f, form[i], e);

        // Expansion of form^e: multinomial(e; gamma) * prod form_i^gamma_i.
        std::vector<std::pair<std::vector<int>, std::uint64_t>> expansion;
        for (const std::vector<int>& gamma : monomial_exponents(n, e)) {
            std::uint64_t coef = fact[e];
            for (int i = 0; i <= n; ++i)
                coef = f.mul(coef, f.mul(inv_fact[gamma[i]], powers[i][gamma[i]]));
            if (coef != 0)
                expansion.emplace_back(gamma, coef);
        }

        for (const std::vector<int>& beta : monomial_exponents(n, d - e)) {
            std::uint64_t* row = matrix.row(row_index++);
            std::vector<int> exp(n + 1);
            for (const auto& [gamma, coef] : expansion) {
                for (int i = 0; i <= n; ++i)
                    exp[i] = beta[i] + gamma[i];
                row[index_of.at(pack_exponents(exp))] = coef;
            }
        }
    }
    return matrix;
}

enum class OracleRoute { interpolation, apolarity };

OracleTrial run_trial(const LinearSystem& sys, const OracleConfig& cfg, std::uint64_t index,
                      OracleRoute route, const std::vector<std::vector<int>>& monomials) {
    TrialSetup setup(cfg, index);
    FpMatrix matrix;
    if (route == OracleRoute::interpolation) {
        auto points = sample_points(setup, sys.n, sys.s());
        matrix = interpolation_matrix(sys, setup, monomials, points);
    } else {
        matrix = apolarity_matrix(sys, setup, monomials);
    }
    OracleTrial trial;
    trial.prime = setup.field.modulus();
    trial.rank = static_cast<long long>(fp_rank(matrix, setup.field));
    trial.dim = static_cast<long long>(monomials.size()) - trial.rank - 1;
    return trial;
}

OracleResult run_oracle(const LinearSystem& sys, const OracleConfig& cfg, OracleRoute route) {
    check_oracle_bounds(sys, cfg);
    if (route == OracleRoute::apolarity && !sys.mults.empty() && sys.mults.front() > sys.d)
        throw std::invalid_argument("apolarity_dimension: requires every m_i <= d");

    const auto monomials = monomial_exponents(sys.n, sys.d);

    auto run_round = [&](std::uint64_t first_index) {
        std::vector<std::future<OracleTrial>> futures;
        futures.reserve(cfg.trials);
        for (int t = 0; t < cfg.trials; ++t)
            futures.push_back(std::async(std::launch::async, run_trial, std::cref(sys),
                                         std::cref(cfg), first_index + t, route,
                                         std::cref(monomials)));
        std::vector<OracleTrial> trials;
        trials.reserve(cfg.trials);
        for (auto& fut : futures)
            trials.push_back(fut.get());
        return trials;
    };

    OracleResult result;
    result.per_trial = run_round(0);
    auto all_equal = [](const std::vector<OracleTrial>& trials) {
        return std::all_of(trials.begin(), trials.end(),
                           [&](const OracleTrial& t) { return t.dim == trials.front().dim; });
    };
    if (!all_equal(result.per_trial)) {
        // Random points occasionally land in special position; rerun with
        // fresh primes and keep everything for the record.
        std::vector<OracleTrial> retry = run_round(cfg.trials);
        result.per_trial.insert(result.per_trial.end(), retry.begin(), retry.end());
    }
    result.agreed = all_equal(result.per_trial);
    result.dim = std::min_element(result.per_trial.begin(), result.per_trial.end(),
                                  [](const OracleTrial& a, const OracleTrial& b) {
                                      return a.dim < b.dim;
                                  })
                     ->dim;
    result.rank = static_cast<long long>(monomials.size()) - result.dim - 1;
    return result;
}

}  // namespace

OracleResult interpolation_dimension(const LinearSystem& sys, const OracleConfig& cfg) {
    return run_oracle(sys, cfg, OracleRoute::interpolation);
}

OracleResult apolarity_dimension(const LinearSystem& sys, const OracleConfig& cfg) {
    return run_oracle(sys, cfg, OracleRoute::apolarity);
}

namespace {

// Coefficients of F(q + t v) as a polynomial in t.
std::vector<std::uint64_t> restrict_to_line(const PrimeField& f,
                                            const std::vector<std::vector<int>>& monomials,
                                            const std::vector<std::uint64_t>& member_m,
                                            const std::vector<std::uint64_t>& q,
                                            const std::vector<std::uint64_t>& v, int d) {
    const int vars = static_cast<int>(q.size());
    // binom_m[e][k] in Montgomery form, via the Pascal recurrence.
    std::vector<std::vector<std::uint64_t>> binom_m(d + 1, std::vector<std::uint64_t>(d + 2, 0));
    for (int e = 0; e <= d; ++e) {
        binom_m[e][0] = f.one_m();
        for (int k = 1; k <= e; ++k)
            binom_m[e][k] = f.add(binom_m[e - 1][k - 1], binom_m[e - 1][k]);
    }

    std::vector<std::vector<std::uint64_t>> qpow(vars), vpow(vars);
    for (int i = 0; i < vars; ++i) {
        qpow[i] = power_table(f, q[i], d);
        vpow[i] = power_table(f, v[i], d);
    }

    std::vector<std::uint64_t> g(d + 1, 0);
    std::vector<std::uint64_t> acc, next;
    for (std::size_t c = 0; c < monomials.size(); ++c) {
        if (member_m[c] == 0)
            continue;
        const std::vector<int>& e = monomials[c];
        acc.assign(1, f.one_m());
        for (int i = 0; i < vars; ++i) {
            const int ei = e[i];
            if (ei == 0)
                continue;
            // (q_i + t v_i)^(e_i) expanded by the binomial theorem.
            next.assign(acc.size() + ei, 0);
            for (std::size_t a = 0; a < acc.size(); ++a) {
                if (acc[a] == 0)
                    continue;
                for (int k = 0; k <= ei; ++k) {
                    std::uint64_t term =
                        f.mul(binom_m[ei][k], f.mul(qpow[i][ei - k], vpow[i][k]));
                    next[a + k] = f.add(next[a + k], f.mul(acc[a], term));
                }
            }
            acc.swap(next);
        }
        for (std::size_t k = 0; k < acc.size() && k <= static_cast<std::size_t>(d); ++k)
            g[k] = f.add(g[k], f.mul(member_m[c], acc[k]));
    }
    return g;
}

}  // namespace

long long cycle_multiplicity_probe(const LinearSystem& sys, const MultiIndex& index,
                                   const OracleConfig& cfg) {
    check_oracle_bounds(sys, cfg);
    validate_multi_index(index, sys.s());
    if (index.indices.empty())
        throw std::invalid_argument("cycle_multiplicity_probe: empty index set");

    const auto monomials = monomial_exponents(sys.n, sys.d);
    long long best = -1;

    for (int trial = 0; trial < cfg.trials; ++trial) {
        TrialSetup setup(cfg, 0x9000 + trial);
        const PrimeField& f = setup.field;
        auto points = sample_points(setup, sys.n, sys.s());
        FpMatrix matrix = interpolation_matrix(sys, setup, monomials, points);
        auto basis = fp_nullspace(matrix, f);
        if (basis.empty())
            throw EmptySystemError("cycle_multiplicity_probe: system has no members");

        // Homogeneous coordinates of the selected base points (chart x0 = 1).
        std::vector<std::vector<std::uint64_t>> span;
        for (int i : index.indices) {
            std::vector<std::uint64_t> h(sys.n + 1);
            h[0] = 1;
            for (int c = 0; c < sys.n; ++c)
                h[c + 1] = points[i - 1][c];
            span.push_back(std::move(h));
        }

        for (int draw = 0; draw < 3; ++draw) {
            // General member of the system, in Montgomery form.
            std::vector<std::uint64_t> member(monomials.size(), 0);
            bool nonzero = false;
            while (!nonzero) {
                std::fill(member.begin(), member.end(), 0);
                for (const auto& vec : basis) {
                    std::uint64_t c = setup.uniform();
                    if (c == 0)
                        continue;
                    std::uint64_t c_m = f.to_m(c);
                    nonzero = true;
                    for (std::size_t k = 0; k < vec.size(); ++k)
                        if (vec[k] != 0)
                            member[k] = f.add(member[k], f.mul(c_m, f.to_m(vec[k])));
                }
            }

            // Random point of the cycle and random transversal direction,
            // both in plain (non-Montgomery) coordinates.
            std::vector<std::uint64_t> q(sys.n + 1, 0);
            bool q_zero = true;
            while (q_zero) {
                std::fill(q.begin(), q.end(), 0);
                for (const auto& h : span) {
                    std::uint64_t c = setup.uniform();
                    for (int k = 0; k <= sys.n; ++k)
                        q[k] = f.add(q[k], f.from_m(f.mul(f.to_m(c), f.to_m(h[k]))));
                }
                q_zero = std::all_of(q.begin(), q.end(),
                                     [](std::uint64_t x) { return x == 0; });
            }
            std::vector<std::uint64_t> v(sys.n + 1);
            for (auto& c : v)
                c = setup.uniform();

            std::vector<std::uint64_t> g =
                restrict_to_line(f, monomials, member, q, v, sys.d);
            long long order = sys.d + 1;
            for (std::size_t k = 0; k < g.size(); ++k) {
                if (g[k] != 0) {
                    order = static_cast<long long>(k);
                    break;
                }
            }
            if (best < 0 || order < best)
                best = order;
        }
    }
    return best;
}

}  // namespace lindim
