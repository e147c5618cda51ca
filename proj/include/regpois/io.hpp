#pragma once

#include <string>

#include "regpois/grid.hpp"
#include "regpois/radial.hpp"

namespace regpois {

// All writers use 17 significant digits so round-tripping preserves doubles
// exactly; all throw std::runtime_error when the file cannot be opened.
std::string format_value(double v);

// ASCII full-field dump: header line "N h xmin ymin zmin", then one node
// value per line in linear index order (x fastest).
void export_field(const ScalarField& f, const std::string& path);

// CSV of the node plane nearest z=0: comment line "# z=<actual z>", column
// header "x,y,value", then one row per node of the plane.
void emit_slice(const ScalarField& f, const std::string& path);

// CSV "r,u_rf" of a radial profile.
void write_profile(const RadialProfile& profile, const std::string& path);

} // namespace regpois
