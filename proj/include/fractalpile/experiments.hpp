#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fractalpile/graph_ops.hpp"
#include "fractalpile/recurrence.hpp"

namespace fractalpile::experiments {

struct GrowthRecord {
    std::uint64_t grains = 0;    // N
    std::uint32_t radius = 0;    // R: max distance from v0 over vertices holding a grain
    double lower_bound = 0.0;    // (N/60)^{1/D}
    double upper_bound = 0.0;    // (N/2)^{1/D}
    int level_used = 0;
    bool touched_boundary = false;  // always false in reported records
    bool in_fit_window = false;     // N within the largest decade of the schedule
};

struct GrowthOptions {
    int initial_level = 0;       // 0: family default
    int max_level = 0;           // 0: default cap (env SANDPILE_MAX_LEVEL wins)
    std::uint64_t max_steps = 0; // stabilizer step cap, 0 = default
};

/// Drop each N of the schedule on the family's designated center vertex,
/// stabilize, and measure the diameter R. Any grain or toppling on a vertex
/// with a sink edge triggers a rebuild one level higher (auto-grow), so
/// reported records never touch the boundary. Exceeding the level cap raises
/// ResourceLimitError naming the cap.
std::vector<GrowthRecord> growth_run(Family family,
                                     const std::vector<std::uint64_t>& schedule,
                                     const GrowthOptions& opt = {});

/// Doubling schedule 2^lo .. 2^hi.
std::vector<std::uint64_t> doubling_schedule(int lo, int hi);

struct ExponentFit {
    double slope = 0.0;
    double intercept = 0.0;
    std::size_t points = 0;
};

/// Least-squares fit of log R against log N over the largest decade of N
/// (records with N >= max N / 10 and R >= 1). Throws ConfigurationError on
/// fewer than two distinct N in the window.
ExponentFit exponent_fit(const std::vector<GrowthRecord>& records);

struct PeriodicityRecord {
    int n = 0;
    std::uint64_t preperiod = 0;
    std::uint64_t period = 0;          // |C_n|
    std::uint64_t conjectured = 0;     // family conjecture, 0 if none
    bool matches_conjecture = false;   // informational only
    std::vector<std::string> cycle_hashes;  // 128-bit digests, hex
};

struct PeriodicityOptions {
    std::uint64_t max_states = 1'000'000;  // cap on the state table per S_n
    std::optional<Configuration> eta;      // default: one grain at v0
};

/// For n = 1..max_n: build S_n from the family's junction cuts, iterate
/// c <- c ⊕ eta from zero and detect (preperiod, period) by exact state
/// hashing. Afterwards verifies the division law period(n) | period(m) and
/// the restriction law cycle(S_m)|_{S_n} = cycle(S_n) across all pairs;
/// violations raise ConsistencyError. Conjecture comparisons are recorded,
/// never asserted.
std::vector<PeriodicityRecord> periodicity_run(Family family, int max_n,
                                               const PeriodicityOptions& opt = {});

struct IdentityRecord {
    int level = 0;
    std::uint64_t k_min = 0;
    std::uint64_t conjectured_k = 0;   // family formula; 0 when undefined
    bool matches_conjecture = false;
};

/// Identity-element survey across levels with the conjectured k formulas
/// (5^m - 3^m)/2 for SGC and (5^m - 1)/2 for SG attached per built level.
std::vector<IdentityRecord> identity_survey(Family family, const std::vector<int>& levels);

struct SgcIdentityReport {
    int level = 0;
    bool four_to_two = false;            // (4,...,4)° == (2,...,2)
    bool corner_odometer_ok = false;     // corner odometers == 2*3^{n-1}
    std::uint64_t corner_odometer = 0;
    bool ring_ok = false;                // sampled ring checks: all-2, odometer m-2, absorbed t(m-2)
};

/// Structural identity checks: the 4-everywhere stabilization on SGC_n, its
/// corner odometers, and ring-of-triangles behavior for sampled (t, m).
SgcIdentityReport sgc_identity_check(int n);

/// Conjectured maximum periodicity per family at cut index n
/// (SG 4*3^n, HG 2*3^n, PG 6*5^n, MG and SGC 6*7^n); 0 if none.
std::uint64_t conjectured_period(Family family, int n);

/// Conjectured identity k for a built level; 0 when no formula applies.
std::uint64_t conjectured_identity_k(Family family, int level);

} // namespace fractalpile::experiments
