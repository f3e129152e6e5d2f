#include "diplo/acceptance.hpp"

#include <algorithm>
#include <cmath>

namespace diplo {
namespace acceptance {

const Plan& EvaluationContext::plan_of(const Power& p) const {
    auto it = plans.find(p);
    if (it == plans.end()) throw std::runtime_error("no plan for power " + p);
    return it->second;
}

double unit_neediness(const EvaluationContext& ctx, const Power& perspective, const Unit& unit) {
    const Order& planned = ctx.plan_of(perspective).for_unit(unit);
    switch (planned.kind) {
        case OrderKind::Move:
            return ctx.util.at(planned.dest);
        case OrderKind::SupportMove:
        case OrderKind::SupportHold: {
            const Unit* supported = ctx.state.unit_at(planned.supported.location);
            const Power& q = supported ? supported->power : planned.supported.power;
            if (q == perspective) return 1.0;
            return ctx.hostility.normalized(perspective, q);
        }
        case OrderKind::Hold:
            return 0.5;
        default:
            throw std::runtime_error("neediness needs a movement-phase plan");
    }
}

double accept_support_move(double h_supportee, double s_supportee, double neediness,
                           double s_target, double h_target, bool target_occupied) {
    if (target_occupied)
        return 0.2 * h_supportee + 0.1 * (1.0 - s_supportee) + 0.5 * (1.0 - neediness) +
               0.1 * s_target + 0.1 * h_target;
    return 0.3 * h_supportee + 0.2 * (1.0 - s_supportee) + 0.5 * (1.0 - neediness);
}

double accept_support_hold(double h_supportee, double s_supportee, double neediness) {
    return 0.3 * h_supportee + 0.2 * (1.0 - s_supportee) + 0.5 * (1.0 - neediness);
}

double accept_move_to(const EvaluationContext& ctx, const Power& perspective, const Unit& unit,
                      const ProvinceId& destination) {
    if (!ctx.map.reachable(unit.location, unit.kind).count(destination))
        throw std::runtime_error("accept_move_to: illegal destination " + destination);

    const Order& planned = ctx.plan_of(perspective).for_unit(unit);
    double new_is_better = 0.2;
    if (planned.kind == OrderKind::Hold &&
        ctx.util.at(destination) > ctx.util.at(unit.location))
        new_is_better = 0.8;
    if (planned.kind == OrderKind::Move && ctx.util.at(destination) > ctx.util.at(planned.dest))
        new_is_better = 0.8;

    const Unit* occupant = ctx.state.unit_at(destination);
    if (!occupant) return new_is_better;
    double h_target = ctx.hostility.normalized(perspective, occupant->power);
    return 0.3 * h_target + 0.7 * new_is_better;
}

double accept_hold(const EvaluationContext& ctx, const Power& perspective, const Unit& unit) {
    const Order& planned = ctx.plan_of(perspective).for_unit(unit);
    switch (planned.kind) {
        case OrderKind::Hold:
            return 1.0;
        case OrderKind::Move:
            return ctx.util.at(planned.dest) > 0.7 ? 0.0 : 0.4;
        case OrderKind::SupportMove:
        case OrderKind::SupportHold:
            return 0.1;
        default:
            throw std::runtime_error("accept_hold needs a movement-phase plan");
    }
}

double competitiveness(int n_powers) {
    if (n_powers < 1 || n_powers > 7)
        throw std::runtime_error("competitiveness: power count out of [1, 7]");
    double v = std::log(static_cast<double>(n_powers)) / std::log(7.0);
    return std::clamp(v, 0.0, 1.0);
}

double accept_dmz(const EvaluationContext& ctx, const DMZ& dmz) {
    const Plan& mine = ctx.plan_of(ctx.me);
    // provinces the plan would have my units in or moving into
    std::vector<ProvinceId> conflicted;
    for (const auto& [loc, order] : mine.orders) {
        if (dmz.provinces.count(loc)) conflicted.push_back(loc);
        if (order.kind == OrderKind::Move && dmz.provinces.count(order.dest))
            conflicted.push_back(order.dest);
    }
    if (conflicted.empty()) return 1.0;  // harmless

    double comp = competitiveness(static_cast<int>(dmz.powers.size()));
    double worst = 1.0;
    for (const ProvinceId& p : conflicted)
        worst = std::min(worst, 0.6 * comp + 0.4 * (1.0 - ctx.util.at(p)));
    return worst;
}

double order_acceptance(const EvaluationContext& ctx, const Power& perspective,
                        const Order& order) {
    switch (order.kind) {
        case OrderKind::Hold:
            return accept_hold(ctx, perspective, order.unit);
        case OrderKind::Move:
            return accept_move_to(ctx, perspective, order.unit, order.dest);
        case OrderKind::SupportHold:
        case OrderKind::SupportMove: {
            const Unit* supportee = ctx.state.unit_at(order.supported.location);
            const Power& q = supportee ? supportee->power : order.supported.power;
            double h_se = ctx.hostility.normalized(perspective, q);
            double s_se = strength(ctx.state, q);
            double need = unit_neediness(ctx, perspective, order.unit);
            if (order.kind == OrderKind::SupportHold)
                return accept_support_hold(h_se, s_se, need);
            const Unit* occupant = ctx.state.unit_at(order.dest);
            if (!occupant) return accept_support_move(h_se, s_se, need, 0.0, 0.0, false);
            double s_t = strength(ctx.state, occupant->power);
            double h_t = ctx.hostility.normalized(perspective, occupant->power);
            return accept_support_move(h_se, s_se, need, s_t, h_t, true);
        }
        default:
            throw std::runtime_error("order_acceptance: not a movement order");
    }
}

DealDecision decision_from_mean(double x, Rng& rng) {
    if (x > 0.8) return DealDecision::Accept;
    if (x < 0.4) return DealDecision::Reject;
    return rng.unit() < x ? DealDecision::Accept : DealDecision::Reject;
}

DealDecision evaluate_deal(const EvaluationContext& ctx, const BasicDeal& deal) {
    for (const OrderCommitment& oc : deal.commitments)
        if (oc.year != ctx.year || oc.phase != ctx.phase) return DealDecision::Reject;
    for (const DMZ& dmz : deal.dmzs)
        if (dmz.year != ctx.year || dmz.phase != ctx.phase) return DealDecision::Reject;

    double sum = 0.0;
    int n = 0;
    for (const OrderCommitment& oc : deal.commitments) {
        sum += order_acceptance(ctx, oc.order.unit.power, oc.order);
        ++n;
    }
    for (const DMZ& dmz : deal.dmzs) {
        sum += accept_dmz(ctx, dmz);
        ++n;
    }
    if (n == 0) return DealDecision::Reject;  // empty deal, nothing to agree to

    if (!ctx.rng) throw std::runtime_error("evaluate_deal: context has no random source");
    return decision_from_mean(sum / n, *ctx.rng);
}

} // namespace acceptance
} // namespace diplo
