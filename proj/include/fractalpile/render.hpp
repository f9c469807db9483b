#pragma once

#include <string>

#include "fractalpile/configuration.hpp"

namespace fractalpile::io {

struct RenderOptions {
    int width = 1024;   // height derives from the embedding's aspect ratio
};

/// Binary PPM (P6, maxval 255) raster of a configuration: white background,
/// one filled disk per vertex at its scaled coordinates, grain palette
/// 0 white, 1 (200,200,200), 2 (140,140,140), 3 (70,70,70), >=4 black.
/// Byte-for-byte deterministic for fixed inputs. Requires coordinates.
std::string render_ppm(const SinkedGraph& g, const Configuration& c,
                       const RenderOptions& opt = {});

} // namespace fractalpile::io
