#pragma once

#include <functional>
#include <map>
#include <vector>

#include "diplo/adjudicator.hpp"
#include "diplo/deal.hpp"
#include "diplo/state.hpp"

namespace diplo {

// A negotiation participant. One instance per power per game; invoked
// sequentially by the session driver. Agents see state, ledger and the
// hostility matrix as read-only views and act only through on_round's
// return value.
class Agent {
public:
    virtual ~Agent() = default;

    virtual const Power& power() const = 0;
    virtual void on_phase_start(const GameState& state, const Ledger& ledger) {
        (void)state;
        (void)ledger;
    }
    virtual std::vector<Message> on_round(const std::vector<Message>& inbound, int round,
                                          int rounds_total) = 0;
    virtual void on_phase_end(const Resolution& res) { (void)res; }
    virtual void on_game_end(const GameStatus& status) { (void)status; }
};

using LogSink = std::function<void(const std::string&)>;

// Runs one movement-phase negotiation session of `rounds` rounds. Each
// round the alive agents act in alphabetical power order; messages are
// delivered the following round. A deal binds the moment every participant
// other than the proposer has accepted it, provided it is still consistent
// with the ledger; an inconsistent completion kills it and the participants
// are told via Reject. Any explicit Reject kills a pending deal. Unresolved
// proposals expire when the session ends. A throwing agent forfeits that
// round. Returns the deals that became binding (also added to `ledger`).
std::vector<BasicDeal> run_session(const GameState& state, Ledger& ledger,
                                   const std::map<Power, Agent*>& agents, int rounds,
                                   const LogSink& log);

} // namespace diplo
