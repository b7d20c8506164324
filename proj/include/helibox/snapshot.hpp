#pragma once

// Binary state snapshots.
//
// A snapshot is a short text header followed by the raw field payload:
//
//   helibox-snapshot v1
//   system <name>
//   n <n>
//   L <value>
//   t <value>
//   eos <polytropic|ideal-gas> gamma=<value> K=<value>
//   rho_floor <value>
//   fields rho,ux,uy,uz[,e][,Bx,By,Bz]
//   layout x-fastest
//   type float64 little-endian
//   payload <double count>
//   <raw little-endian doubles, fields in listed order>
//
// Reading a snapshot written by this build reproduces every field
// bit-for-bit.  All fields are stored in physical space.

#include <string>

#include "helibox/state.hpp"

namespace helibox {

void write_snapshot(const std::string& path, const SystemState& state);
SystemState read_snapshot(const std::string& path);

} // namespace helibox
