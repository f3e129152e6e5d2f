#include "diplo/deal.hpp"

#include <algorithm>
#include <sstream>

namespace diplo {

std::set<Power> participants(const BasicDeal& deal) {
    std::set<Power> out{deal.proposer};
    for (const OrderCommitment& oc : deal.commitments) out.insert(oc.order.unit.power);
    for (const DMZ& dmz : deal.dmzs) out.insert(dmz.powers.begin(), dmz.powers.end());
    return out;
}

Message Message::propose(Power sender, BasicDeal d) {
    Message m;
    m.kind = Propose;
    m.sender = std::move(sender);
    m.deal = std::move(d);
    m.deal_id = m.deal.id;
    auto parts = participants(m.deal);
    parts.erase(m.sender);
    m.recipients = std::move(parts);
    return m;
}

Message Message::accept(Power sender, std::string deal_id) {
    Message m;
    m.kind = Accept;
    m.sender = std::move(sender);
    m.deal_id = std::move(deal_id);
    return m;
}

Message Message::reject(Power sender, std::string deal_id) {
    Message m;
    m.kind = Reject;
    m.sender = std::move(sender);
    m.deal_id = std::move(deal_id);
    return m;
}

namespace {

void append_content(std::ostringstream& out, const BasicDeal& deal) {
    out << "PROPOSE " << deal.proposer;
    for (const OrderCommitment& oc : deal.commitments)
        out << " OC[" << oc.year << ' ' << phase_token(oc.phase) << ' '
            << order_notation_with_power(oc.order) << ']';
    for (const DMZ& dmz : deal.dmzs) {
        out << " DMZ[" << dmz.year << ' ' << phase_token(dmz.phase) << " powers={";
        bool first = true;
        for (const Power& p : dmz.powers) {
            if (!first) out << ',';
            out << p;
            first = false;
        }
        out << "} provinces={";
        first = true;
        for (const ProvinceId& p : dmz.provinces) {
            if (!first) out << ',';
            out << p;
            first = false;
        }
        out << "}]";
    }
}

} // namespace

std::string deal_log_line(const BasicDeal& deal) {
    std::ostringstream out;
    out << "DEAL " << deal.id << ' ';
    append_content(out, deal);
    return out.str();
}

std::string deal_content_key(const BasicDeal& deal) {
    std::ostringstream out;
    append_content(out, deal);
    return out.str();
}

namespace {

// Province the committed unit ends the phase in if the order is obeyed.
const ProvinceId& committed_location(const OrderCommitment& oc) {
    return oc.order.effective_location();
}

bool commitment_pair_conflicts(const OrderCommitment& a, const OrderCommitment& b) {
    if (a.year != b.year || a.phase != b.phase) return false;
    if (a.order.unit != b.order.unit) return false;
    return !(a.order == b.order);
}

bool commitment_violates_dmz(const OrderCommitment& oc, const DMZ& dmz) {
    if (oc.year != dmz.year || oc.phase != dmz.phase) return false;
    if (!dmz.powers.count(oc.order.unit.power)) return false;
    return dmz.provinces.count(committed_location(oc)) > 0;
}

} // namespace

bool is_consistent(const Ledger& ledger, const BasicDeal& deal) {
    // internal contradictions
    for (std::size_t i = 0; i < deal.commitments.size(); ++i)
        for (std::size_t j = i + 1; j < deal.commitments.size(); ++j)
            if (commitment_pair_conflicts(deal.commitments[i], deal.commitments[j]))
                return false;
    for (const OrderCommitment& oc : deal.commitments)
        for (const DMZ& dmz : deal.dmzs)
            if (commitment_violates_dmz(oc, dmz)) return false;

    // against the bound deals
    for (const BasicDeal& bound : ledger.deals()) {
        for (const OrderCommitment& oc : deal.commitments) {
            for (const OrderCommitment& prior : bound.commitments)
                if (commitment_pair_conflicts(oc, prior)) return false;
            for (const DMZ& dmz : bound.dmzs)
                if (commitment_violates_dmz(oc, dmz)) return false;
        }
        for (const DMZ& dmz : deal.dmzs)
            for (const OrderCommitment& prior : bound.commitments)
                if (commitment_violates_dmz(prior, dmz)) return false;
    }
    return true;
}

Constraints binding_constraints(const Ledger& ledger, const Power& power, int year, Phase phase) {
    Constraints out;
    for (const BasicDeal& deal : ledger.deals()) {
        for (const OrderCommitment& oc : deal.commitments) {
            if (oc.year != year || oc.phase != phase || oc.order.unit.power != power) continue;
            // identical commitments from separate deals collapse to one
            if (std::find(out.fixed_orders.begin(), out.fixed_orders.end(), oc.order) ==
                out.fixed_orders.end())
                out.fixed_orders.push_back(oc.order);
        }
        for (const DMZ& dmz : deal.dmzs)
            if (dmz.year == year && dmz.phase == phase && dmz.powers.count(power))
                out.forbidden.insert(dmz.provinces.begin(), dmz.provinces.end());
    }
    return out;
}

} // namespace diplo
