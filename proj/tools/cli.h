#ifndef FQRANK_TOOLS_CLI_H_
#define FQRANK_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace fqrank::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCapExceeded = 3;

// Environment variable that overrides the default seed.
inline constexpr const char* kSeedEnv = "FQRANK_SEED";

// Runs one invocation. args[0] is the program name. Output is written to
// `out` only on success; failures print a single diagnostic line to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fqrank::cli

#endif  // FQRANK_TOOLS_CLI_H_
