#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include "fractalpile/configuration.hpp"
#include "fractalpile/experiments.hpp"
#include "fractalpile/snf.hpp"
#include "fractalpile/stabilize.hpp"

namespace fractalpile::io {

/// Run provenance embedded in every output file.
struct RunManifest {
    std::string command;
    std::string family;
    int level = 0;
    std::string boundary;
    std::uint64_t seed = 0;
    int max_level = 0;
    std::uint64_t max_states = 0;
    std::uint64_t max_steps = 0;
};

// --- JSON ---------------------------------------------------------------

std::string graph_to_json(const SinkedGraph& g);
SinkedGraph graph_from_json(const std::string& text);

std::string configuration_to_json(const Configuration& c);
Configuration configuration_from_json(const std::string& text);

std::string stabilization_to_json(const SinkedGraph& g, const StabilizationResult& r,
                                  const RunManifest& m);

std::string group_to_json(const algebra::SandpileGroup& grp, const RunManifest& m);

std::string growth_to_json(const std::vector<experiments::GrowthRecord>& records,
                           const experiments::ExponentFit& fit, const RunManifest& m);
std::string periodicity_to_json(const std::vector<experiments::PeriodicityRecord>& records,
                                const RunManifest& m);
std::string identity_to_json(const std::vector<experiments::IdentityRecord>& records,
                             const RunManifest& m);

// --- CSV ----------------------------------------------------------------

std::string growth_to_csv(const std::vector<experiments::GrowthRecord>& records);
std::string periodicity_to_csv(const std::vector<experiments::PeriodicityRecord>& records);
std::string identity_to_csv(const std::vector<experiments::IdentityRecord>& records);
std::string configuration_to_csv(const Configuration& c);

// --- files --------------------------------------------------------------

/// Write via a temporary file and rename, so failures leave no partial
/// output behind.
void atomic_write(const std::filesystem::path& path, const std::string& contents);

} // namespace fractalpile::io
