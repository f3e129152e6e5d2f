#include "diplo/session.hpp"

#include <algorithm>

namespace diplo {

namespace {

struct PendingDeal {
    BasicDeal deal;
    std::set<Power> required;  // participants except the proposer
    std::set<Power> accepted;
    enum State { Pending, Binding, Dead } state = Pending;
};

} // namespace

std::vector<BasicDeal> run_session(const GameState& state, Ledger& ledger,
                                   const std::map<Power, Agent*>& agents, int rounds,
                                   const LogSink& log) {
    if (!is_movement_phase(state.phase))
        throw std::runtime_error("run_session: not a movement phase");
    if (rounds < 1) throw std::runtime_error("run_session: rounds must be >= 1");

    std::vector<Power> order;
    for (const auto& [power, agent] : agents)
        if (state.alive.count(power)) order.push_back(power);
    std::sort(order.begin(), order.end());

    std::map<std::string, PendingDeal> registry;
    std::map<Power, std::vector<Message>> inbox;
    std::vector<BasicDeal> bound;

    auto deliver = [&](const std::set<Power>& recipients, const Message& m,
                       std::map<Power, std::vector<Message>>& box) {
        for (const Power& r : recipients)
            if (agents.count(r) && state.alive.count(r)) box[r].push_back(m);
    };

    auto gate = [&](PendingDeal& pd, std::map<Power, std::vector<Message>>& next_inbox) {
        if (pd.state != PendingDeal::Pending || pd.accepted != pd.required) return;
        if (is_consistent(ledger, pd.deal)) {
            pd.state = PendingDeal::Binding;
            ledger.bind(pd.deal);
            bound.push_back(pd.deal);
            log("DEAL " + pd.deal.id + " BINDING");
        } else {
            pd.state = PendingDeal::Dead;
            log("DEAL " + pd.deal.id + " DEAD");
            // participants learn of the death through a Reject in the
            // proposer's name
            Message note = Message::reject(pd.deal.proposer, pd.deal.id);
            deliver(participants(pd.deal), note, next_inbox);
        }
    };

    for (int round = 1; round <= rounds; ++round) {
        std::map<Power, std::vector<Message>> next_inbox;
        for (const Power& power : order) {
            Agent* agent = agents.at(power);
            std::vector<Message> outbound;
            try {
                outbound = agent->on_round(inbox[power], round, rounds);
            } catch (const std::exception& e) {
                log("AGENT_FAULT " + power + " round=" + std::to_string(round) + " " + e.what());
                continue;
            }
            for (Message& m : outbound) {
                if (m.sender != power) {
                    log("SPOOFED_MESSAGE " + power);
                    continue;
                }
                switch (m.kind) {
                    case Message::Propose: {
                        if (m.deal.id.empty() || registry.count(m.deal.id)) {
                            log("BAD_PROPOSAL " + power + " duplicate or missing id");
                            break;
                        }
                        if (m.deal.commitments.empty() && m.deal.dmzs.empty()) {
                            log("BAD_PROPOSAL " + power + " empty deal " + m.deal.id);
                            break;
                        }
                        m.deal.proposer = power;
                        PendingDeal pd;
                        pd.deal = m.deal;
                        pd.required = participants(m.deal);
                        pd.required.erase(power);
                        log(deal_log_line(m.deal));
                        Message prop = Message::propose(power, m.deal);
                        deliver(pd.required, prop, next_inbox);
                        // a deal binds when its last required Accept arrives;
                        // with nobody to accept, that moment never comes and
                        // the proposal expires with the session
                        registry.emplace(m.deal.id, std::move(pd));
                        break;
                    }
                    case Message::Accept: {
                        auto it = registry.find(m.deal_id);
                        log("DEAL " + m.deal_id + " ACCEPT " + power);
                        if (it == registry.end() || it->second.state != PendingDeal::Pending)
                            break;
                        PendingDeal& pd = it->second;
                        if (!pd.required.count(power)) break;
                        pd.accepted.insert(power);
                        auto others = participants(pd.deal);
                        others.erase(power);
                        deliver(others, Message::accept(power, m.deal_id), next_inbox);
                        gate(pd, next_inbox);
                        break;
                    }
                    case Message::Reject: {
                        auto it = registry.find(m.deal_id);
                        log("DEAL " + m.deal_id + " REJECT " + power);
                        if (it == registry.end() || it->second.state != PendingDeal::Pending)
                            break;
                        PendingDeal& pd = it->second;
                        if (!participants(pd.deal).count(power)) break;
                        pd.state = PendingDeal::Dead;
                        log("DEAL " + m.deal_id + " DEAD");
                        auto others = participants(pd.deal);
                        others.erase(power);
                        deliver(others, Message::reject(power, m.deal_id), next_inbox);
                        break;
                    }
                }
            }
        }
        inbox = std::move(next_inbox);
    }

    for (auto& [id, pd] : registry)
        if (pd.state == PendingDeal::Pending) log("DEAL " + id + " EXPIRED");

    return bound;
}

} // namespace diplo
