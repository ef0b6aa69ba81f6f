#pragma once

#include <cstdint>
#include <string>

#include "kolmo/bitstring.hpp"

namespace kolmo {

/// Any bitstring is a syntactically admissible program.
struct Program {
  BitString code;

  friend bool operator==(const Program& a, const Program& b) { return a.code == b.code; }
};

/// Step budget. One executed slot costs exactly one step.
using Fuel = std::uint64_t;

inline constexpr Fuel kDefaultFuel = 512;

/// Appends past this output length crash the run (see data/machine.spec).
inline constexpr std::size_t kOutputCapBits = 65536;

enum class RunStatus : char { Halted = 'H', OutOfFuel = 'F', Crashed = 'C' };

struct RunOutcome {
  RunStatus status = RunStatus::Halted;
  BitString output;  // meaningful only when status == Halted
  std::uint64_t steps_used = 0;
};

/// Executes a program under a step budget. Deterministic and total;
/// crashes are values, never interface failures.
RunOutcome run(const Program& p, Fuel fuel);

/// Variant that reuses the outcome's output storage across calls; the
/// sweep engines call this in their inner loop.
void run_into(const Program& p, Fuel fuel, RunOutcome& out);

inline std::size_t program_size(const Program& p) { return p.code.size(); }

/// Hex digest of the normative machine description; stamped into every
/// cache file, certificate and report so a spec change can never silently
/// reuse stale artifacts.
const std::string& machine_spec_hash_hex();

/// Version line identifying the machine semantics in force.
const std::string& machine_spec_version();

}  // namespace kolmo
