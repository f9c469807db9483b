#include "fractalpile/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace fractalpile::io {

namespace {

std::string fixed6(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

} // namespace

std::string growth_to_csv(const std::vector<experiments::GrowthRecord>& records) {
    std::ostringstream os;
    os << "N,R,lower,upper,level,fit_window\n";
    for (const auto& r : records)
        os << r.grains << ',' << r.radius << ',' << fixed6(r.lower_bound) << ','
           << fixed6(r.upper_bound) << ',' << r.level_used << ','
           << (r.in_fit_window ? 1 : 0) << '\n';
    return os.str();
}

std::string periodicity_to_csv(const std::vector<experiments::PeriodicityRecord>& records) {
    std::ostringstream os;
    os << "n,preperiod,period,conjectured,match\n";
    for (const auto& r : records)
        os << r.n << ',' << r.preperiod << ',' << r.period << ',' << r.conjectured << ','
           << (r.matches_conjecture ? 1 : 0) << '\n';
    return os.str();
}

std::string identity_to_csv(const std::vector<experiments::IdentityRecord>& records) {
    std::ostringstream os;
    os << "level,k,conjectured_k,match\n";
    for (const auto& r : records)
        os << r.level << ',' << r.k_min << ',' << r.conjectured_k << ','
           << (r.matches_conjecture ? 1 : 0) << '\n';
    return os.str();
}

std::string configuration_to_csv(const Configuration& c) {
    std::ostringstream os;
    os << "vertex_id,grains\n";
    for (std::size_t v = 0; v < c.size(); ++v) os << v << ',' << c.grains[v] << '\n';
    return os.str();
}

void atomic_write(const std::filesystem::path& path, const std::string& contents) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw ConfigurationError("cannot open " + tmp.string() + " for writing");
        out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
        out.flush();
        if (!out) {
            std::error_code ec;
            std::filesystem::remove(tmp, ec);
            throw ConfigurationError("write failed for " + tmp.string());
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw ConfigurationError("rename failed for " + path.string());
    }
}

} // namespace fractalpile::io
