#include "diplo/hostility.hpp"

#include <algorithm>
#include <cmath>

namespace diplo {

HostilityMatrix::HostilityMatrix(std::vector<Power> powers) : powers_(std::move(powers)) {
    std::sort(powers_.begin(), powers_.end());
    raw_.assign(powers_.size() * powers_.size(), 0);
}

std::size_t HostilityMatrix::index(const Power& p) const {
    auto it = std::lower_bound(powers_.begin(), powers_.end(), p);
    if (it == powers_.end() || *it != p)
        throw std::runtime_error("hostility matrix: unknown power " + p);
    return static_cast<std::size_t>(it - powers_.begin());
}

int HostilityMatrix::raw(const Power& observer, const Power& subject) const {
    return raw_[index(observer) * powers_.size() + index(subject)];
}

void HostilityMatrix::add(const Power& observer, const Power& subject, int delta) {
    if (delta != 5 && delta != -10)
        throw std::runtime_error("hostility updates are +5 or -10 only");
    if (observer == subject) return;  // diagonal unused
    raw_[index(observer) * powers_.size() + index(subject)] += delta;
}

double HostilityMatrix::normalized(const Power& observer, const Power& subject) const {
    const std::size_t obs = index(observer);
    const int h = raw_[obs * powers_.size() + index(subject)];
    int h_min = 0, h_max = 0;
    bool any = false;
    for (std::size_t j = 0; j < powers_.size(); ++j) {
        if (j == obs) continue;
        int v = raw_[obs * powers_.size() + j];
        if (!any) { h_min = h_max = v; any = true; }
        else { h_min = std::min(h_min, v); h_max = std::max(h_max, v); }
    }
    if (h < 0) {
        if (h_min == 0) return 0.5;  // unreachable, guarded anyway
        return 0.5 * (static_cast<double>(h - h_min) / static_cast<double>(-h_min));
    }
    if (h_max == 0) return 0.5;
    return 0.5 * (static_cast<double>(h) / static_cast<double>(h_max)) + 0.5;
}

void update_from_resolution(HostilityMatrix& matrix, const GameState& state_before,
                            const std::vector<Order>& orders, const Resolution& res) {
    (void)orders;  // outcomes carry the full order set
    // supports: +5 toward the supporter from the supported unit's owner
    for (const OrderOutcome& oo : res.outcomes) {
        if (!oo.order.is_support()) continue;
        if (oo.status != OrderStatus::Succeeded && oo.status != OrderStatus::Cut) continue;
        const Unit* beneficiary = state_before.unit_at(oo.order.supported.location);
        if (!beneficiary) continue;
        if (beneficiary->power == oo.order.unit.power) continue;
        matrix.add(beneficiary->power, oo.order.unit.power, +5);
    }
    // dislodgements: -10 toward the attacker from the victim
    for (const Dislodgement& d : res.dislodged) {
        const Unit* attacker = state_before.unit_at(d.attacker_origin);
        if (!attacker || attacker->power == d.unit.power) continue;
        matrix.add(d.unit.power, attacker->power, -10);
    }
    // captures of owned centers: -10 toward the captor from the prior owner
    for (const Capture& c : res.captures) {
        if (!c.prior_owner || *c.prior_owner == c.power) continue;
        matrix.add(*c.prior_owner, c.power, -10);
    }
}

double strength_from_count(int sc_count) {
    const int n = std::clamp(sc_count, 0, 18);
    return 0.5 * std::sin(M_PI * (n - 9) / 18.0) + 0.5;
}

double strength(const GameState& state, const Power& power) {
    return strength_from_count(state.sc_count(power));
}

} // namespace diplo
