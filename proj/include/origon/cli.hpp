#pragma once

#include <iosfwd>

namespace origon {

// Full command-line driver. Angles are taken and printed in degrees.
// Returns 0 on success, 1 on domain/validation failures, 2 on usage errors.
// Reads ORIGON_ANGLE_EPS (radians) for the flat-foldability tolerance.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace origon
