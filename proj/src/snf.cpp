#include "fractalpile/snf.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "fractalpile/graph_ops.hpp"

namespace fractalpile::algebra {

namespace {

BigInt abs_val(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

constexpr std::uint64_t kTrialDivisionBound = 10'000'000;

} // namespace

std::vector<BigInt> InvariantFactors::nontrivial() const {
    std::vector<BigInt> out;
    for (const auto& d : factors)
        if (d != 1) out.push_back(d);
    return out;
}

BigInt InvariantFactors::product() const {
    BigInt p = 1;
    for (const auto& d : factors) p *= d;
    return p;
}

std::string InvariantFactors::display() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& d : nontrivial()) {
        if (!first) os << " x ";
        os << d;
        first = false;
    }
    return first ? "1" : os.str();
}

namespace {

// quotient rounded to nearest, so the remainder has magnitude <= |b| / 2
BigInt nearest_quotient(const BigInt& a, const BigInt& b) {
    BigInt q = a / b, r = a - q * b;
    if (2 * abs_val(r) > abs_val(b)) q += ((r < 0) == (b < 0)) ? 1 : -1;
    return q;
}

} // namespace

InvariantFactors smith_normal_form(IntegerMatrix m) {
    const std::size_t n = m.size();
    if (n == 0) throw ConfigurationError("Smith normal form of an empty matrix");

    for (std::size_t t = 0; t < n; ++t) {
        for (;;) {
            // pivot: nonzero entry of least absolute value in the trailing
            // block. Re-selected every round; with nearest-quotient
            // reduction the pivot at least halves between rounds.
            std::size_t pr = n, pc = n;
            BigInt best;
            for (std::size_t i = t; i < n; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (m.at(i, j) != 0) {
                        BigInt a = abs_val(m.at(i, j));
                        if (pr == n || a < best) {
                            best = a;
                            pr = i;
                            pc = j;
                        }
                    }
            if (pr == n) throw ConfigurationError("singular matrix: no sandpile group");
            if (pr != t)
                for (std::size_t j = 0; j < n; ++j) std::swap(m.at(t, j), m.at(pr, j));
            if (pc != t)
                for (std::size_t i = 0; i < n; ++i) std::swap(m.at(i, t), m.at(i, pc));

            const BigInt p = m.at(t, t);
            bool clean = true;
            for (std::size_t i = t + 1; i < n; ++i) {
                if (m.at(i, t) == 0) continue;
                BigInt q = nearest_quotient(m.at(i, t), p);
                if (q != 0)
                    for (std::size_t j = t; j < n; ++j) m.at(i, j) -= q * m.at(t, j);
                if (m.at(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (m.at(t, j) == 0) continue;
                BigInt q = nearest_quotient(m.at(t, j), p);
                if (q != 0)
                    for (std::size_t i = t; i < n; ++i) m.at(i, j) -= q * m.at(i, t);
                if (m.at(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // the pivot must divide the whole trailing block
            bool divides = true;
            for (std::size_t i = t + 1; i < n && divides; ++i)
                for (std::size_t j = t + 1; j < n && divides; ++j)
                    if (m.at(i, j) % p != 0) {
                        for (std::size_t jj = t; jj < n; ++jj) m.at(t, jj) += m.at(i, jj);
                        divides = false;
                    }
            if (divides) break;
        }
    }

    InvariantFactors inv;
    inv.factors.reserve(n);
    for (std::size_t i = 0; i < n; ++i) inv.factors.push_back(abs_val(m.at(i, i)));
    std::sort(inv.factors.begin(), inv.factors.end());
    return inv;
}

PrimaryDecomposition primary_decomposition(const InvariantFactors& inv) {
    std::map<std::pair<BigInt, unsigned>, unsigned> acc;
    for (const BigInt& d0 : inv.nontrivial()) {
        BigInt d = d0;
        for (std::uint64_t p = 2; p <= kTrialDivisionBound && BigInt(p) * p <= d; p += (p == 2 ? 1 : 2)) {
            unsigned e = 0;
            while (d % p == 0) {
                d /= p;
                ++e;
            }
            if (e > 0) ++acc[{BigInt(p), e}];
        }
        if (d > 1) {
            // no factor below the bound: prime iff below the bound squared
            if (d > BigInt(kTrialDivisionBound) * kTrialDivisionBound)
                throw ResourceLimitError("invariant factor exceeds the trial-division bound");
            ++acc[{d, 1}];
        }
    }
    PrimaryDecomposition out;
    for (const auto& [pe, mult] : acc) out.factors.push_back({pe.first, pe.second, mult});
    return out;
}

InvariantFactors reassemble(const PrimaryDecomposition& p, std::size_t total_factors) {
    // prime -> exponents, largest first; invariant factor i-from-the-top
    // collects each prime's i-th largest exponent
    std::map<BigInt, std::vector<unsigned>> by_prime;
    std::size_t depth = 0;
    for (const auto& f : p.factors) {
        auto& v = by_prime[f.prime];
        for (unsigned i = 0; i < f.multiplicity; ++i) v.push_back(f.exponent);
    }
    for (auto& [prime, exps] : by_prime) {
        std::sort(exps.rbegin(), exps.rend());
        depth = std::max(depth, exps.size());
    }
    if (total_factors < depth)
        throw ConfigurationError("total_factors smaller than the decomposition depth");
    InvariantFactors inv;
    inv.factors.assign(total_factors, BigInt(1));
    for (const auto& [prime, exps] : by_prime)
        for (std::size_t i = 0; i < exps.size(); ++i) {
            BigInt pe = 1;
            for (unsigned e = 0; e < exps[i]; ++e) pe *= prime;
            inv.factors[total_factors - 1 - i] *= pe;
        }
    return inv;
}

SandpileGroup sandpile_group(const IntegerMatrix& reduced) {
    SandpileGroup g;
    g.invariant_factors = smith_normal_form(reduced);
    g.primary = primary_decomposition(g.invariant_factors);
    g.order = g.invariant_factors.product();
    return g;
}

SandpileGroup sandpile_group(const SinkedGraph& g) {
    return sandpile_group(reduced_laplacian(g));
}

BigInt group_order(const SinkedGraph& g) {
    return abs_val(determinant(reduced_laplacian(g)));
}

BigInt conjectured_order_sg(int n) {
    if (n < 1) throw ConfigurationError("order conjecture needs n >= 1");
    BigInt p3 = 1;
    for (int i = 0; i < n; ++i) p3 *= 3;
    BigInt f2 = p3 - 1, g4 = 3 * p3 - 6 * n - 3, h4 = p3 + 6 * n - 1;
    if (f2 % 2 != 0 || g4 % 4 != 0 || h4 % 4 != 0)
        throw ConsistencyError("order conjecture exponents are not integral");
    auto pow = [](BigInt base, BigInt exp) {
        BigInt r = 1;
        for (BigInt i = 0; i < exp; ++i) r *= base;
        return r;
    };
    return pow(2, f2 / 2) * pow(3, g4 / 4) * pow(5, h4 / 4);
}

} // namespace fractalpile::algebra
