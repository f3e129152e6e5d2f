#include "diplo/agents.hpp"

#include <algorithm>

namespace diplo {

MadoffAgent::MadoffAgent(const WorldMap& map, const UtilityTable& util,
                         const HostilityMatrix& hostility, Power power, std::uint64_t seed)
    : map_(map), util_(util), hostility_(hostility), me_(std::move(power)), rng_(seed),
      bidding_(me_) {}

void MadoffAgent::on_phase_start(const GameState& state, const Ledger& ledger) {
    state_ = &state;
    ledger_ = &ledger;
    bidding_.start_phase(static_cast<int>(state.units_of(me_).size()));
}

std::vector<Message> MadoffAgent::on_round(const std::vector<Message>& inbound, int round,
                                           int rounds_total) {
    if (!state_ || !ledger_) throw std::runtime_error("madoff: no phase context");
    const GameState& state = *state_;

    // own plan under the live ledger, everyone else anticipated
    std::map<Power, Plan> plans;
    plans[me_] = tactician::plan(
        map_, state, me_, binding_constraints(*ledger_, me_, state.year, state.phase), util_);
    for (const Power& p : state.alive)
        if (p != me_) plans[p] = tactician::anticipate(map_, state, p, util_);

    acceptance::EvaluationContext ctx{map_,  state,      util_,       hostility_, me_,
                                      state.year, state.phase, plans, &rng_};

    std::vector<Message> out;
    const bool final_round = round == rounds_total;
    int processed = 0;
    for (const Message& m : inbound) {
        if (final_round && processed >= kFinalRoundMessageCap) break;
        ++processed;
        switch (m.kind) {
            case Message::Propose: {
                acceptance::DealDecision decision;
                try {
                    decision = acceptance::evaluate_deal(ctx, m.deal);
                } catch (const std::exception&) {
                    ++malformed_inbound_;
                    decision = acceptance::DealDecision::Reject;
                }
                out.push_back(decision == acceptance::DealDecision::Accept
                                  ? Message::accept(me_, m.deal.id)
                                  : Message::reject(me_, m.deal.id));
                break;
            }
            case Message::Reject:
                bidding_.note_rejected(m.deal_id);
                break;
            case Message::Accept:
                break;
        }
    }

    for (Message& proposal : bidding_.generate_proposals(ctx, *ledger_))
        out.push_back(std::move(proposal));
    return out;
}

RandomNegotiatorAgent::RandomNegotiatorAgent(const WorldMap& map, const UtilityTable& util,
                                             Power power, std::uint64_t seed)
    : map_(map), util_(util), me_(std::move(power)), rng_(seed) {}

void RandomNegotiatorAgent::on_phase_start(const GameState& state, const Ledger& ledger) {
    state_ = &state;
    (void)ledger;
}

int hypothetical_sc_count(const WorldMap& map, const GameState& state,
                          const std::vector<Order>& orders, const Power& power) {
    Resolution res = adjudicate(map, state, orders);
    GameState after = apply_movement(state, res);
    int n = 0;
    for (const Province& p : map.provinces()) {
        if (!p.is_supply_center) continue;
        const Unit* occ = after.unit_at(p.id);
        if (occ ? occ->power == power
                : state.sc_owner.count(p.id) && state.sc_owner.at(p.id) == power)
            ++n;
    }
    return n;
}

std::vector<Message> RandomNegotiatorAgent::on_round(const std::vector<Message>& inbound,
                                                     int round, int rounds_total) {
    (void)round;
    (void)rounds_total;
    if (!state_) throw std::runtime_error("random negotiator: no phase context");
    const GameState& state = *state_;

    std::vector<Message> out;
    for (const Message& m : inbound) {
        if (m.kind != Message::Propose) continue;
        out.push_back(rng_.unit() < 0.5 ? Message::accept(me_, m.deal.id)
                                        : Message::reject(me_, m.deal.id));
    }

    std::vector<Unit> mine = state.units_of(me_);
    if (mine.empty()) return out;

    // everyone else, and our other units, follow the anticipated plans
    std::map<Power, Plan> plans;
    for (const Power& p : state.alive) plans[p] = tactician::anticipate(map_, state, p, util_);

    std::optional<Order> best;
    int best_score = -1;
    for (int i = 0; i < kCandidates; ++i) {
        const Unit& unit = mine[rng_.index(mine.size())];
        std::vector<Order> options = legal_orders(map_, state, unit);
        Order candidate = options[rng_.index(options.size())];

        std::vector<Order> orders;
        for (const Power& p : state.alive)
            for (const Order& o : plans.at(p).as_orders())
                orders.push_back(o.unit == unit ? candidate : o);
        int score = hypothetical_sc_count(map_, state, orders, me_);
        if (score > best_score) {
            best_score = score;
            best = candidate;
        }
    }
    if (best) {
        BasicDeal deal;
        deal.id = me_ + "#" + std::to_string(++seq_);
        deal.proposer = me_;
        deal.commitments.push_back(OrderCommitment{state.year, state.phase, *best});
        out.push_back(Message::propose(me_, std::move(deal)));
    }
    return out;
}

std::vector<Message> SilentAgent::on_round(const std::vector<Message>& inbound, int round,
                                           int rounds_total) {
    (void)round;
    (void)rounds_total;
    std::vector<Message> out;
    for (const Message& m : inbound)
        if (m.kind == Message::Propose) out.push_back(Message::reject(me_, m.deal.id));
    return out;
}

std::unique_ptr<Agent> make_agent(const std::string& name, Power power, const WorldMap& map,
                                  const UtilityTable& util, const HostilityMatrix& hostility,
                                  std::uint64_t seed) {
    if (name == "madoff")
        return std::make_unique<MadoffAgent>(map, util, hostility, std::move(power), seed);
    if (name == "random")
        return std::make_unique<RandomNegotiatorAgent>(map, util, std::move(power), seed);
    if (name == "silent") return std::make_unique<SilentAgent>(std::move(power));
    throw std::runtime_error("unknown agent name: " + name);
}

} // namespace diplo
