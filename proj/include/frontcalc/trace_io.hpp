#pragma once

#include <frontcalc/evolution.hpp>

#include <ostream>
#include <string>

namespace frontcalc {

/// Shortest round-trip decimal form.
std::string format_double(double v);

/// Header u1..un,s,ped_x,ped_y,wf_x,wf_y,t_x,t_y; one row per (u, s).
/// Members that failed are skipped.
void write_csv(const EvolutionTrace& trace, std::ostream& out);

/// Two panels: the pedal family and the wave-front family, one polyline
/// per u.
void write_svg(const EvolutionTrace& trace, std::ostream& out);

}  // namespace frontcalc
