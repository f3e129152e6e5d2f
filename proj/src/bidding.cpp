#include "diplo/bidding.hpp"

#include <algorithm>

namespace diplo {
namespace bidding {

double order_acceptance_estimate(const EvaluationContext& ctx, const Power& power,
                                 const Order& order) {
    return acceptance::order_acceptance(ctx, power, order);
}

namespace {

// provinces we would mind losing: owned centers and everything we sit on
bool is_mine(const EvaluationContext& ctx, const ProvinceId& p) {
    const Unit* occ = ctx.state.unit_at(p);
    if (occ && occ->power == ctx.me) return true;
    auto it = ctx.state.sc_owner.find(p);
    return it != ctx.state.sc_owner.end() && it->second == ctx.me;
}

// moving into our territory, or backing someone else's move into it
bool attacks_me(const EvaluationContext& ctx, const Order& order) {
    if (order.kind == OrderKind::Move) return is_mine(ctx, order.dest);
    if (order.kind == OrderKind::SupportMove) {
        const Unit* supported = ctx.state.unit_at(order.supported.location);
        bool foreign = !supported || supported->power != ctx.me;
        return foreign && is_mine(ctx, order.dest);
    }
    return false;
}

} // namespace

std::vector<Threat> detect_attacks(const EvaluationContext& ctx) {
    std::vector<Threat> out;
    for (const auto& [power, plan] : ctx.plans) {
        if (power == ctx.me) continue;
        for (const auto& [loc, order] : plan.orders) {
            if (!attacks_me(ctx, order)) continue;
            out.push_back(Threat{power, order.unit, order.dest, order});
        }
    }
    std::sort(out.begin(), out.end(), [&](const Threat& a, const Threat& b) {
        double ua = ctx.util.at(a.target), ub = ctx.util.at(b.target);
        if (ua != ub) return ua > ub;
        if (a.target != b.target) return a.target < b.target;
        return a.unit.location < b.unit.location;
    });
    return out;
}

std::vector<Conflict> detect_conflicts(const EvaluationContext& ctx) {
    std::vector<Conflict> out;
    const Plan& mine = ctx.plan_of(ctx.me);
    for (const auto& [my_loc, my_order] : mine.orders) {
        if (my_order.kind != OrderKind::Move) continue;
        for (const auto& [power, plan] : ctx.plans) {
            if (power == ctx.me) continue;
            for (const auto& [loc, order] : plan.orders)
                if (order.kind == OrderKind::Move && order.dest == my_order.dest)
                    out.push_back(Conflict{my_order.unit, my_order.dest, power, order.unit});
        }
    }
    std::sort(out.begin(), out.end(), [&](const Conflict& a, const Conflict& b) {
        double ua = ctx.util.at(a.dest), ub = ctx.util.at(b.dest);
        if (ua != ub) return ua > ub;
        if (a.dest != b.dest) return a.dest < b.dest;
        return a.opponent_unit.location < b.opponent_unit.location;
    });
    return out;
}

void BiddingState::start_phase(int own_unit_count) {
    favors_ = FavorLedger{};
    favors_.credit = own_unit_count / 3;
    proposed_contents_.clear();
    rejected_ids_.clear();
    reservations_.clear();
}

void BiddingState::note_rejected(const std::string& deal_id) { rejected_ids_.insert(deal_id); }

std::string BiddingState::next_id() { return me_ + "#" + std::to_string(++seq_); }

BasicDeal BiddingState::make_deal(const EvaluationContext& ctx,
                                  std::vector<OrderCommitment> commitments,
                                  std::vector<DMZ> dmzs) {
    BasicDeal d;
    d.proposer = me_;
    d.commitments = std::move(commitments);
    d.dmzs = std::move(dmzs);
    (void)ctx;
    return d;  // id assigned at emission
}

std::optional<OrderCommitment> BiddingState::build_favor_component(const EvaluationContext& ctx,
                                                                   const Power& supporter) {
    if (favors_.remaining() <= 0) return std::nullopt;

    std::vector<Unit> mine = ctx.state.units_of(me_);
    std::vector<Unit> theirs = ctx.state.units_of(supporter);

    // pattern 1: support one of their units into a high-utility province
    struct Candidate {
        double util;
        ProvinceId dest;
        Unit mine;
        Unit theirs;
    };
    std::optional<Candidate> best;
    for (const Unit& m : mine) {
        if (favors_.used_units.count(m.location)) continue;
        for (const ProvinceId& a : ctx.map.reachable(m.location, m.kind)) {
            if (ctx.util.at(a) < 0.5) continue;
            const Unit* occ = ctx.state.unit_at(a);
            if (occ && occ->power == me_) continue;  // never invite a move onto ourselves
            auto owner = ctx.state.sc_owner.find(a);
            if (owner != ctx.state.sc_owner.end() && owner->second == me_) continue;
            for (const Unit& t : theirs) {
                if (!ctx.map.reachable(t.location, t.kind).count(a)) continue;
                Candidate c{ctx.util.at(a), a, m, t};
                bool better =
                    !best || c.util > best->util ||
                    (c.util == best->util &&
                     std::tie(c.dest, c.mine.location, c.theirs.location) <
                         std::tie(best->dest, best->mine.location, best->theirs.location));
                if (better) best = c;
            }
        }
    }
    if (best) {
        favors_.used += 1;
        favors_.used_units.insert(best->mine.location);
        return OrderCommitment{ctx.year, ctx.phase,
                               Order::support_move(best->mine, best->theirs, best->dest)};
    }

    // pattern 2: support one of their units to hold
    for (const Unit& m : mine) {
        if (favors_.used_units.count(m.location)) continue;
        for (const Unit& t : theirs) {
            if (!ctx.map.reachable(m.location, m.kind).count(t.location)) continue;
            favors_.used += 1;
            favors_.used_units.insert(m.location);
            return OrderCommitment{ctx.year, ctx.phase, Order::support_hold(m, t)};
        }
    }
    return std::nullopt;
}

namespace {

// friendliest third powers first, ties alphabetical
std::vector<Power> third_powers(const EvaluationContext& ctx, const Power& excluded) {
    std::vector<Power> out;
    for (const Power& p : ctx.state.alive)
        if (p != ctx.me && p != excluded) out.push_back(p);
    std::sort(out.begin(), out.end(), [&](const Power& a, const Power& b) {
        double ha = ctx.hostility.normalized(ctx.me, a);
        double hb = ctx.hostility.normalized(ctx.me, b);
        if (ha != hb) return ha > hb;
        return a < b;
    });
    return out;
}

} // namespace

std::vector<BasicDeal> BiddingState::neutralize(const EvaluationContext& ctx,
                                                const Threat& threat) {
    std::vector<BasicDeal> out;
    const double attack_score = order_acceptance_estimate(ctx, threat.attacker, threat.attack_order);

    // step 1: steer the attacking unit somewhere it likes better
    const Order* best_alt = nullptr;
    double best_score = -1.0;
    std::vector<Order> options = legal_orders(ctx.map, ctx.state, threat.unit);
    for (const Order& o : options) {
        if (o == threat.attack_order) continue;
        if (attacks_me(ctx, o)) continue;
        double s = order_acceptance_estimate(ctx, threat.attacker, o);
        if (s > best_score) {
            best_score = s;
            best_alt = &o;
        }
    }
    if (best_alt && best_score > attack_score) {
        stats_.step1_proposals += 1;
        out_of_line_check(best_score, attack_score);
        out.push_back(make_deal(ctx, {OrderCommitment{ctx.year, ctx.phase, *best_alt}}, {}));
        return out;
    }

    // step 2: a friendly third power props up the defender
    const Unit* defender = ctx.state.unit_at(threat.target);
    if (defender && defender->power == me_) {
        for (const Power& t : third_powers(ctx, threat.attacker)) {
            const Unit* helper = nullptr;
            for (const Unit& u : ctx.state.units_of(t)) {
                if (!ctx.map.reachable(u.location, u.kind).count(threat.target)) continue;
                if (!helper || u.location < helper->location) helper = ctx.state.unit_at(u.location);
            }
            if (!helper) continue;
            std::vector<OrderCommitment> commitments{OrderCommitment{
                ctx.year, ctx.phase, Order::support_hold(*helper, *defender)}};
            if (auto favor = build_favor_component(ctx, t)) commitments.push_back(*favor);
            out.push_back(make_deal(ctx, std::move(commitments), {}));
            return out;
        }
    }

    // step 3: nothing of ours can hold the spot; ask the attacker for a DMZ
    bool can_defend = defender && defender->power == me_;
    if (!can_defend) {
        for (const Unit& u : ctx.state.units_of(me_))
            if (ctx.map.reachable(u.location, u.kind).count(threat.target)) {
                can_defend = true;
                break;
            }
    }
    if (!can_defend) {
        DMZ dmz{ctx.year, ctx.phase, {me_, threat.attacker}, {threat.target}};
        out.push_back(make_deal(ctx, {}, {dmz}));
    }
    return out;
}

std::pair<std::vector<BasicDeal>, BasicDeal> BiddingState::resolve_conflict(
    const EvaluationContext& ctx, const Conflict& conflict) {
    std::vector<BasicDeal> proposals;

    const Order conflict_order = Order::move(conflict.opponent_unit, conflict.dest);
    const double conflict_score =
        order_acceptance_estimate(ctx, conflict.opponent, conflict_order);

    // step 1: steer the opponent's unit elsewhere
    const Order* best_alt = nullptr;
    double best_score = -1.0;
    std::vector<Order> options = legal_orders(ctx.map, ctx.state, conflict.opponent_unit);
    for (const Order& o : options) {
        if (o.kind == OrderKind::Move && o.dest == conflict.dest) continue;
        if (attacks_me(ctx, o)) continue;
        double s = order_acceptance_estimate(ctx, conflict.opponent, o);
        if (s > best_score) {
            best_score = s;
            best_alt = &o;
        }
    }
    if (best_alt && best_score > conflict_score) {
        stats_.step1_proposals += 1;
        out_of_line_check(best_score, conflict_score);
        proposals.push_back(
            make_deal(ctx, {OrderCommitment{ctx.year, ctx.phase, *best_alt}}, {}));
    } else {
        // step 2: a third power backs our own move into the region
        for (const Power& t : third_powers(ctx, conflict.opponent)) {
            const Unit* helper = nullptr;
            for (const Unit& u : ctx.state.units_of(t)) {
                if (u.location == conflict.dest) continue;
                if (!ctx.map.reachable(u.location, u.kind).count(conflict.dest)) continue;
                if (!helper || u.location < helper->location) helper = ctx.state.unit_at(u.location);
            }
            if (!helper) continue;
            std::vector<OrderCommitment> commitments{OrderCommitment{
                ctx.year, ctx.phase,
                Order::support_move(*helper, conflict.mine, conflict.dest)}};
            if (auto favor = build_favor_component(ctx, t)) commitments.push_back(*favor);
            proposals.push_back(make_deal(ctx, std::move(commitments), {}));
            break;
        }
    }

    DMZ dmz{ctx.year, ctx.phase, {me_, conflict.opponent}, {conflict.dest}};
    BasicDeal reservation = make_deal(ctx, {}, {dmz});
    return {std::move(proposals), std::move(reservation)};
}

void BiddingState::out_of_line_check(double proposed, double hostile) {
    if (!(proposed > hostile)) stats_.step1_violations += 1;
}

std::vector<Message> BiddingState::generate_proposals(const EvaluationContext& ctx,
                                                      const Ledger& ledger) {
    std::vector<Message> out;
    int favors_before = favors_.used;

    // returns the deal's id whether it goes out now or already did, so
    // reservations can track the fate of deduplicated siblings
    auto emit = [&](BasicDeal deal) -> std::optional<std::string> {
        std::string key = deal_content_key(deal);
        auto prior = proposed_contents_.find(key);
        if (prior != proposed_contents_.end()) return prior->second;
        if (!is_consistent(ledger, deal)) return std::nullopt;
        deal.id = next_id();
        proposed_contents_[key] = deal.id;
        out.push_back(Message::propose(me_, deal));
        return deal.id;
    };

    for (const Threat& threat : detect_attacks(ctx))
        for (BasicDeal& deal : neutralize(ctx, threat)) emit(std::move(deal));

    for (const Conflict& conflict : detect_conflicts(ctx)) {
        auto [proposals, reservation] = resolve_conflict(ctx, conflict);
        std::set<std::string> sibling_ids;
        for (BasicDeal& deal : proposals)
            if (auto id = emit(std::move(deal))) sibling_ids.insert(*id);
        std::string key = deal_content_key(reservation);
        auto it = reservations_.find(key);
        if (it == reservations_.end())
            reservations_.emplace(key, Reservation{std::move(reservation), sibling_ids, false});
        else
            it->second.siblings.insert(sibling_ids.begin(), sibling_ids.end());
    }

    // a reservation goes out once everything it was shielding has been
    // rejected (immediately, if nothing could be proposed at all)
    for (auto& [key, r] : reservations_) {
        if (r.sent) continue;
        bool all_rejected = true;
        for (const std::string& sib : r.siblings)
            if (!rejected_ids_.count(sib)) {
                all_rejected = false;
                break;
            }
        if (!all_rejected) continue;
        r.sent = true;
        emit(r.deal);
    }

    if (favors_.used > favors_.credit) stats_.favor_cap_violations += 1;
    stats_.max_favors_in_phase = std::max(stats_.max_favors_in_phase, favors_.used);
    (void)favors_before;
    return out;
}

std::vector<BasicDeal> neutralize_for_test(const EvaluationContext& ctx, const Threat& threat,
                                           BiddingState& st) {
    return st.neutralize(ctx, threat);
}

std::pair<std::vector<BasicDeal>, BasicDeal> resolve_conflict_for_test(
    const EvaluationContext& ctx, const Conflict& conflict, BiddingState& st) {
    return st.resolve_conflict(ctx, conflict);
}

} // namespace bidding
} // namespace diplo
