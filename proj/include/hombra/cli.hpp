#pragma once

#include <iosfwd>
#include <string>

#include "hombra/constructions.hpp"

namespace hombra::cli {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitFail = 2;
constexpr int kExitNotFound = 3;

/// HOMBRA_KMAX when set to a non-negative integer, else 8.
unsigned default_kmax();

/// "C<n>", "S3", or a product such as "C2xC2".
FiniteGroup parse_group(const std::string& spec);
/// "id", "inv", or "pow:<k>" (g -> g^k).
std::vector<std::size_t> parse_twist(const FiniteGroup& g, const std::string& spec);

/// Runs one command line; argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hombra::cli
