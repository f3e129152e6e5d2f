#pragma once

#include "diplo/adjudicator.hpp"

namespace diplo::oracle {

// Independent movement resolver used to cross-check the engine. Instead of
// constructive resolution it enumerates every succeed/fail assignment over
// the valid moves, keeps the assignments consistent with the rules, and
// picks the one with the most successes (movement rings advance). Throws
// if the maximal consistent assignment is not unique.
Resolution oracle_adjudicate(const WorldMap& map, const GameState& state,
                             const std::vector<Order>& orders);

// true iff the two resolutions agree on every order status and every
// dislodgement (attacker origins included)
bool same_resolution(const Resolution& a, const Resolution& b);

} // namespace diplo::oracle
