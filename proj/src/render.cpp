#include "fractalpile/render.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace fractalpile::io {

namespace {

std::array<unsigned char, 3> palette(std::uint64_t grains) {
    switch (grains) {
        case 0: return {255, 255, 255};
        case 1: return {200, 200, 200};
        case 2: return {140, 140, 140};
        case 3: return {70, 70, 70};
        default: return {0, 0, 0};
    }
}

} // namespace

std::string render_ppm(const SinkedGraph& g, const Configuration& c, const RenderOptions& opt) {
    if (c.size() != g.vertex_count()) throw ConfigurationError("configuration size mismatch");
    if (g.vertex_count() == 0) throw ConfigurationError("nothing to render: empty graph");
    if (opt.width < 8) throw ConfigurationError("render width too small");
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (!std::isfinite(g.coord(v).x) || !std::isfinite(g.coord(v).y))
            throw ConfigurationError("graph has no usable coordinates");

    double minx = g.coord(0).x, maxx = minx, miny = g.coord(0).y, maxy = miny;
    double min_edge = 0.0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        minx = std::min(minx, g.coord(v).x);
        maxx = std::max(maxx, g.coord(v).x);
        miny = std::min(miny, g.coord(v).y);
        maxy = std::max(maxy, g.coord(v).y);
        for (VertexId u : g.neighbors(v)) {
            double dx = g.coord(v).x - g.coord(u).x, dy = g.coord(v).y - g.coord(u).y;
            double len = std::hypot(dx, dy);
            if (len > 0 && (min_edge == 0.0 || len < min_edge)) min_edge = len;
        }
    }
    double spanx = maxx - minx, spany = maxy - miny;
    if (spanx <= 0) spanx = 1.0;
    if (spany <= 0) spany = 1.0;
    const double pad = 0.05 * std::max(spanx, spany);
    const double scale = (opt.width - 1) / (spanx + 2 * pad);
    const int height = std::max(1, static_cast<int>(std::llround((spany + 2 * pad) * scale)) + 1);

    int radius = 2;
    if (min_edge > 0)
        radius = std::max(1, static_cast<int>(std::llround(0.35 * min_edge * scale)));

    std::string pix(static_cast<std::size_t>(opt.width) * height * 3,
                    static_cast<char>(255));
    auto put = [&](int x, int y, std::array<unsigned char, 3> rgb) {
        if (x < 0 || y < 0 || x >= opt.width || y >= height) return;
        std::size_t i = (static_cast<std::size_t>(y) * opt.width + x) * 3;
        pix[i] = static_cast<char>(rgb[0]);
        pix[i + 1] = static_cast<char>(rgb[1]);
        pix[i + 2] = static_cast<char>(rgb[2]);
    };
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const int px = static_cast<int>(std::llround((g.coord(v).x - minx + pad) * scale));
        const int py = height - 1 -
                       static_cast<int>(std::llround((g.coord(v).y - miny + pad) * scale));
        const auto rgb = palette(c[v]);
        for (int dy = -radius; dy <= radius; ++dy)
            for (int dx = -radius; dx <= radius; ++dx)
                if (dx * dx + dy * dy <= radius * radius) put(px + dx, py + dy, rgb);
    }

    std::string out = "P6\n" + std::to_string(opt.width) + " " + std::to_string(height) + "\n255\n";
    out += pix;
    return out;
}

} // namespace fractalpile::io
