#pragma once

#include <cstdint>
#include <string>

#include "fractalpile/errors.hpp"

namespace fractalpile {

/// Graph families supported by the builders. SG is the Sierpinski gasket
/// vertex graph, SGC its cell graph; HG, PG, MG are the hexagasket,
/// pentagasket and Mitsubishi gasket vertex graphs. TRIANGLE_CHAIN is the
/// auxiliary ring of corner-linked triangles.
enum class Family : std::uint8_t { SG, SGC, HG, PG, MG, TRIANGLE_CHAIN };

enum class Boundary : std::uint8_t { CORNER_SINKS, COLLAPSED_SINK };

/// Which finite approximation to build. `level` is the approximation level
/// for the fractal families and the ring length t for TRIANGLE_CHAIN.
struct FamilySpec {
    Family family = Family::SG;
    int level = 1;
    Boundary boundary = Boundary::CORNER_SINKS;

    bool operator==(const FamilySpec&) const = default;
};

std::string to_string(Family f);
std::string to_string(Boundary b);
Family family_from_string(const std::string& s);
Boundary boundary_from_string(const std::string& s);

/// Exponent D with R = Theta(N^{1/D}) for single-vertex drops, as used by
/// the growth bounds. For PG this is the resistance-adjusted exponent
/// log5/log(1+sqrt3), not the Euclidean fractal dimension.
double growth_exponent(Family f);

/// Euclidean fractal dimension quoted for the family. Recorded as metadata
/// only; never used for graph logic. The MG constant (log6/log2 > 2) is kept
/// as quoted even though the planar construction realizes log6/log3.
double quoted_dimension(Family f);

} // namespace fractalpile
