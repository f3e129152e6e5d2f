#pragma once

#include <map>

#include "diplo/deal.hpp"
#include "diplo/hostility.hpp"
#include "diplo/rng.hpp"
#include "diplo/tactician.hpp"

namespace diplo {
namespace acceptance {

// Everything the per-order probability functions read. `plans` holds the
// evaluating power's own plan plus the anticipated plans of everyone else,
// so the same context also serves the mirror-model estimates the bidding
// side makes for other powers.
struct EvaluationContext {
    const WorldMap& map;
    const GameState& state;
    const UtilityTable& util;
    const HostilityMatrix& hostility;
    Power me;
    int year;
    Phase phase;
    const std::map<Power, Plan>& plans;
    Rng* rng = nullptr;  // consulted only inside the coin-flip band

    const Plan& plan_of(const Power& p) const;
};

// How much the power's own plan needs this unit: the utility of a planned
// destination, 1 for supporting an own unit, the supported power's
// friendliness for supporting someone else, 0.5 for holding.
double unit_neediness(const EvaluationContext& ctx, const Power& perspective, const Unit& unit);

// probability of agreeing to support another unit's move
double accept_support_move(double h_supportee, double s_supportee, double neediness,
                           double s_target, double h_target, bool target_occupied);
// probability of agreeing to support another unit's hold
double accept_support_hold(double h_supportee, double s_supportee, double neediness);
// probability of agreeing to move a unit somewhere else
double accept_move_to(const EvaluationContext& ctx, const Power& perspective, const Unit& unit,
                      const ProvinceId& destination);
// probability of agreeing to keep a unit in place
double accept_hold(const EvaluationContext& ctx, const Power& perspective, const Unit& unit);

// ln(n)/ln(7), how contested a DMZ with n powers is
double competitiveness(int n_powers);

// probability of agreeing to a demilitarized zone, judged against the
// evaluating power's own plan
double accept_dmz(const EvaluationContext& ctx, const DMZ& dmz);

// Routes one committed order through the matching probability function,
// seen from `perspective`'s side of the table.
double order_acceptance(const EvaluationContext& ctx, const Power& perspective,
                        const Order& order);

enum class DealDecision { Accept, Reject };

// Threshold rule on the mean component probability: above 0.8 accept,
// below 0.4 reject, otherwise accept with probability x. Never touches
// the random source outside the middle band.
DealDecision decision_from_mean(double x, Rng& rng);

// Mean of the per-component probabilities over all commitments and DMZs;
// commitments on the evaluator's units are judged against its own plan,
// commitments on other powers' units through their anticipated plans.
// Anything dated outside the current phase rejects outright.
DealDecision evaluate_deal(const EvaluationContext& ctx, const BasicDeal& deal);

} // namespace acceptance
} // namespace diplo
