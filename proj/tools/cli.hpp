#pragma once

#include <iosfwd>

namespace jdv::cli {

/// Runs the jdvtool command line. Exit status: 0 on success (including a
/// non-graphical verdict from `check`), 1 on malformed or unreadable input,
/// 2 on usage errors.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace jdv::cli
