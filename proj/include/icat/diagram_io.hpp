#pragma once

// Text form of diagrams:
//
//   boxes: [m#0, u#0]; wires: [(bnd.in[0], m#0.in[0]), (u#0.out[0], m#0.in[1]),
//   (m#0.out[0], bnd.out[0])]; in: 1; out: 1
//
// `name#k` is the k-th box carrying generator `name`. Ports are
// `name#k.out[i]`, `name#k.in[j]`, `bnd.in[j]` (an open input, which is a
// wire source) and `bnd.out[i]` (an open output, a wire sink). An optional
// `loops: n` field records box-free closed loops.

#include <string>
#include <string_view>

#include "icat/diagram.hpp"

namespace icat {

/// Formats boxes in diagram order and wires in source order, so
/// parse_diagram(format_diagram(d)) reproduces d exactly.
std::string format_diagram(const Diagram& d);

/// Throws std::invalid_argument with the offending token on malformed input,
/// unknown generators, or a wiring that is not a perfect matching.
Diagram parse_diagram(const SignaturePtr& sig, std::string_view text);

}  // namespace icat
