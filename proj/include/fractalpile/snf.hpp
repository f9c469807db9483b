#pragma once

#include "fractalpile/graph.hpp"
#include "fractalpile/matrix.hpp"

namespace fractalpile::algebra {

/// Invariant factors d_1 | d_2 | ... | d_m of a nonsingular integer matrix.
/// Factors of value 1 are retained internally and suppressed in display.
struct InvariantFactors {
    std::vector<BigInt> factors;  // ascending, with the divisibility chain

    std::vector<BigInt> nontrivial() const;
    BigInt product() const;
    std::string display() const;  // "5 x 10" style, ones suppressed
};

/// Smith normal form by unimodular row/column operations, pivoting on the
/// nonzero entry of least absolute value. Exact arithmetic throughout.
/// Throws ConfigurationError on a singular matrix.
InvariantFactors smith_normal_form(IntegerMatrix m);

struct PrimaryFactor {
    BigInt prime;
    unsigned exponent = 1;
    unsigned multiplicity = 1;  // how many cyclic factors Z_{p^e}
};

struct PrimaryDecomposition {
    std::vector<PrimaryFactor> factors;  // sorted by (prime, exponent)
};

/// Split invariant factors into prime-power cyclic factors. Trial division
/// with a 10^7 bound; a surviving composite cofactor raises
/// ResourceLimitError.
PrimaryDecomposition primary_decomposition(const InvariantFactors& inv);

/// Reassemble primary factors into invariant factors via CRT; inverse of
/// primary_decomposition up to trivial factors.
InvariantFactors reassemble(const PrimaryDecomposition& p, std::size_t total_factors);

struct SandpileGroup {
    InvariantFactors invariant_factors;
    PrimaryDecomposition primary;
    BigInt order;
};

/// Group structure of the sandpile group of g: SNF of the reduced Laplacian
/// plus the prime-power splitting and the group order.
SandpileGroup sandpile_group(const SinkedGraph& g);

/// Same, for an explicitly supplied reduced Laplacian.
SandpileGroup sandpile_group(const IntegerMatrix& reduced_laplacian);

/// |det| of the reduced Laplacian: the number of spanning trees rooted at
/// the sink, equal to the product of the invariant factors.
BigInt group_order(const SinkedGraph& g);

/// Conjectured SG sandpile group order 2^f 3^g 5^h with
/// f = (3^n - 1)/2, g = (3^{n+1} - 6n - 3)/4, h = (3^n + 6n - 1)/4.
BigInt conjectured_order_sg(int n);

} // namespace fractalpile::algebra
