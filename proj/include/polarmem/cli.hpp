// Command-line front end. Exit codes: 0 success, 1 runtime error, 2 usage error.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace polarmem::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

/// args[0] is the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

/// Hex frames pack bit k into nibble k/4 at weight 8 >> (k % 4); padding bits are zero.
std::string bits_to_hex(const std::vector<std::uint8_t>& bits);
std::vector<std::uint8_t> hex_to_bits(const std::string& frame, std::size_t length);

}  // namespace polarmem::cli
