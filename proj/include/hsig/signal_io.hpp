#pragma once

// Persistent signal files: one JSON header line
//   {"magic":"HSIG","version":1,"dim":...,"samples_per_axis":[...],
//    "half_extent":[...],"domain":"space"|"frequency"}
// followed by the row-major payload as interleaved (re, im) little-endian
// IEEE-754 doubles. Write/read round trips are bit-exact.

#include <iosfwd>
#include <string>

#include "hsig/lattice.hpp"

namespace hsig::io {

using lattice::Signal;

void write_signal(const std::string& path, const Signal& s);
Signal read_signal(const std::string& path);

/// Drop one axis at a fixed index (axis is 1-based).
Signal slice_signal(const Signal& s, int axis, int index);

/// Columns: one coordinate per axis (space point or bin frequency depending
/// on the domain), then re, im, abs, arg; row-major order.
void export_csv(std::ostream& out, const Signal& s);

}  // namespace hsig::io
