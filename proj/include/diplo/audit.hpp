#pragma once

#include <string>
#include <vector>

namespace diplo {

// Re-checks the binding-deal guarantees of a finished game from its log
// text alone: every BINDING commitment shows up verbatim among that
// phase's submitted orders, no power bound by a DMZ successfully moves
// into one of its provinces, every proposal a madoff agent makes concerns
// only the phase it was made in, and its per-phase favor commitments stay
// within a third of its unit count. Returns one line per violation.
std::vector<std::string> audit_game_log(const std::string& log);

} // namespace diplo
