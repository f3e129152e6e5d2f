#pragma once

#include <set>
#include <string>
#include <vector>

#include "diplo/types.hpp"

namespace diplo {

// A promise that a specific movement order will be submitted in the given
// phase.
struct OrderCommitment {
    int year = 0;
    Phase phase = Phase::Spring;  // Spring or Fall only
    Order order;

    bool operator==(const OrderCommitment& o) const {
        return year == o.year && phase == o.phase && order == o.order;
    }
};

// A promise by the listed powers not to move into (or sit inside) the
// listed provinces in the given phase.
struct DMZ {
    int year = 0;
    Phase phase = Phase::Spring;
    std::set<Power> powers;
    std::set<ProvinceId> provinces;

    bool operator==(const DMZ& o) const {
        return year == o.year && phase == o.phase && powers == o.powers &&
               provinces == o.provinces;
    }
};

// The binding unit of negotiation: order commitments plus demilitarized
// zones, identified by a game-unique token.
struct BasicDeal {
    std::string id;
    Power proposer;
    std::vector<OrderCommitment> commitments;
    std::vector<DMZ> dmzs;

    bool same_content(const BasicDeal& o) const {
        return proposer == o.proposer && commitments == o.commitments && dmzs == o.dmzs;
    }
};

// Owners of committed units, powers bound by DMZs, and the proposer.
std::set<Power> participants(const BasicDeal& deal);

struct Message {
    enum Kind { Propose, Accept, Reject } kind = Propose;
    Power sender;
    std::set<Power> recipients;
    BasicDeal deal;       // Propose only
    std::string deal_id;  // Accept/Reject

    static Message propose(Power sender, BasicDeal d);
    static Message accept(Power sender, std::string deal_id);
    static Message reject(Power sender, std::string deal_id);
};

// Deal-log text, e.g.
//   DEAL AUS#1 PROPOSE AUS OC[1901 SPR TUR A CON - BUL] DMZ[1901 SPR powers={AUS,TUR} provinces={SER}]
std::string deal_log_line(const BasicDeal& deal);
// Content key for duplicate suppression (the log line minus the id).
std::string deal_content_key(const BasicDeal& deal);

// Binding deals of the current game.
class Ledger {
public:
    const std::vector<BasicDeal>& deals() const { return deals_; }
    void bind(BasicDeal deal) { deals_.push_back(std::move(deal)); }
    bool empty() const { return deals_.empty(); }

private:
    std::vector<BasicDeal> deals_;
};

// False iff the deal, together with everything already bound, gives one
// unit two different orders in one phase, commits a unit to move into or
// stay inside a province demilitarized for its power in that phase, or
// contradicts itself the same way.
bool is_consistent(const Ledger& ledger, const BasicDeal& deal);

struct Constraints {
    std::vector<Order> fixed_orders;         // committed orders for this power's units
    std::set<ProvinceId> forbidden;          // provinces demilitarized for this power
};

Constraints binding_constraints(const Ledger& ledger, const Power& power, int year, Phase phase);

} // namespace diplo
