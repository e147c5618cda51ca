#include "regpois/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace regpois {

namespace {

std::ofstream open_or_throw(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    return out;
}

} // namespace

std::string format_value(double v) {
    std::ostringstream ss;
    ss.precision(17);
    ss << v;
    return ss.str();
}

void export_field(const ScalarField& f, const std::string& path) {
    std::ofstream out = open_or_throw(path);
    const Grid& g = f.grid;
    out << g.n_per_axis << ' ' << format_value(g.spacing) << ' ' << format_value(g.lower_corner.x)
        << ' ' << format_value(g.lower_corner.y) << ' ' << format_value(g.lower_corner.z) << '\n';
    for (double v : f.values) out << format_value(v) << '\n';
    if (!out) throw std::runtime_error("write failed: " + path);
}

void emit_slice(const ScalarField& f, const std::string& path) {
    const Grid& g = f.grid;
    const int n = g.n_per_axis;
    long k = std::lround(-g.lower_corner.z / g.spacing);
    if (k < 0) k = 0;
    if (k > n - 1) k = n - 1;
    const double z = g.lower_corner.z + static_cast<double>(k) * g.spacing;

    std::ofstream out = open_or_throw(path);
    out << "# z=" << format_value(z) << '\n';
    out << "x,y,value\n";
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            Vec3 r = node_position(g, i, j, static_cast<int>(k));
            out << format_value(r.x) << ',' << format_value(r.y) << ','
                << format_value(f.values[g.linear_index(i, j, static_cast<int>(k))]) << '\n';
        }
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

void write_profile(const RadialProfile& profile, const std::string& path) {
    std::ofstream out = open_or_throw(path);
    out << "r,u_rf\n";
    for (std::size_t l = 0; l < profile.u.size(); ++l) {
        out << format_value(static_cast<double>(l) * profile.dr) << ',' << format_value(profile.u[l])
            << '\n';
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

} // namespace regpois
