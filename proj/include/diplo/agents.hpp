#pragma once

#include <memory>

#include "diplo/bidding.hpp"
#include "diplo/session.hpp"

namespace diplo {

// Negotiates per the heuristic playbook: evaluates inbound deals with the
// acceptance formulas, proposes defensive de-conflict deals, and tracks
// opponents through the shared hostility matrix.
class MadoffAgent : public Agent {
public:
    MadoffAgent(const WorldMap& map, const UtilityTable& util, const HostilityMatrix& hostility,
                Power power, std::uint64_t seed);

    const Power& power() const override { return me_; }
    void on_phase_start(const GameState& state, const Ledger& ledger) override;
    std::vector<Message> on_round(const std::vector<Message>& inbound, int round,
                                  int rounds_total) override;

    const bidding::BiddingState::Stats& bidding_stats() const { return bidding_.stats(); }
    int malformed_inbound() const { return malformed_inbound_; }

    // inbound processing stops here on the final round
    static constexpr int kFinalRoundMessageCap = 20;

private:
    const WorldMap& map_;
    const UtilityTable& util_;
    const HostilityMatrix& hostility_;
    Power me_;
    Rng rng_;
    bidding::BiddingState bidding_;
    const GameState* state_ = nullptr;
    const Ledger* ledger_ = nullptr;
    int malformed_inbound_ = 0;
};

// Baseline: accepts anything with probability one half and each round
// proposes, out of 10 random own-unit orders, the one whose hypothetical
// adjudication leaves it the most supply centers.
class RandomNegotiatorAgent : public Agent {
public:
    RandomNegotiatorAgent(const WorldMap& map, const UtilityTable& util, Power power,
                          std::uint64_t seed);

    const Power& power() const override { return me_; }
    void on_phase_start(const GameState& state, const Ledger& ledger) override;
    std::vector<Message> on_round(const std::vector<Message>& inbound, int round,
                                  int rounds_total) override;

    static constexpr int kCandidates = 10;

private:
    const WorldMap& map_;
    const UtilityTable& util_;
    Power me_;
    Rng rng_;
    int seq_ = 0;
    const GameState* state_ = nullptr;
};

// Control baseline: never proposes, rejects everything, plays pure
// tactician orders.
class SilentAgent : public Agent {
public:
    explicit SilentAgent(Power power) : me_(std::move(power)) {}

    const Power& power() const override { return me_; }
    std::vector<Message> on_round(const std::vector<Message>& inbound, int round,
                                  int rounds_total) override;

private:
    Power me_;
};

// Names accepted on the command line: madoff, random, silent.
std::unique_ptr<Agent> make_agent(const std::string& name, Power power, const WorldMap& map,
                                  const UtilityTable& util, const HostilityMatrix& hostility,
                                  std::uint64_t seed);

// Board the state would show after adjudicating `orders`, scored as the
// number of centers `power` would then hold (occupation wins the center).
int hypothetical_sc_count(const WorldMap& map, const GameState& state,
                          const std::vector<Order>& orders, const Power& power);

} // namespace diplo
