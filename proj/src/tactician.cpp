#include "diplo/tactician.hpp"

#include <algorithm>

namespace diplo {

const Order& Plan::for_unit(const Unit& u) const {
    auto it = orders.find(u.location);
    if (it == orders.end() || it->second.unit != u)
        throw std::runtime_error("plan has no order for unit at " + u.location);
    return it->second;
}

std::vector<Order> Plan::as_orders() const {
    std::vector<Order> out;
    out.reserve(orders.size());
    for (const auto& [loc, o] : orders) out.push_back(o);
    return out;
}

namespace tactician {

Plan plan(const WorldMap& map, const GameState& state, const Power& power,
          const Constraints& constraints, const UtilityTable& util) {
    Plan result;

    std::set<ProvinceId> move_targets;  // destinations of decided own moves
    std::set<ProvinceId> stay_targets;  // provinces own units will keep sitting in
    std::map<ProvinceId, Unit> mover_into;

    std::vector<Unit> mine = state.units_of(power);
    for (const Order& fixed : constraints.fixed_orders) {
        const Unit* u = state.unit_at(fixed.unit.location);
        if (!u || *u != fixed.unit || fixed.unit.power != power)
            throw std::runtime_error("binding order for a missing unit at " +
                                     fixed.unit.location);
        if (result.orders.count(fixed.unit.location))
            throw std::runtime_error("two binding orders for the unit at " +
                                     fixed.unit.location);
        result.orders[fixed.unit.location] = fixed;
        if (fixed.kind == OrderKind::Move) {
            move_targets.insert(fixed.dest);
            mover_into[fixed.dest] = fixed.unit;
        } else {
            stay_targets.insert(fixed.unit.location);
        }
    }

    // free units processed by descending utility of their province
    std::vector<Unit> pending;
    for (const Unit& u : mine)
        if (!result.orders.count(u.location)) pending.push_back(u);
    std::sort(pending.begin(), pending.end(), [&](const Unit& a, const Unit& b) {
        double ua = util.at(a.location), ub = util.at(b.location);
        if (ua != ub) return ua > ub;
        return a.location < b.location;
    });

    std::set<ProvinceId> undecided;
    for (const Unit& u : pending) undecided.insert(u.location);

    for (const Unit& u : pending) {
        undecided.erase(u.location);
        const bool must_leave = constraints.forbidden.count(u.location) > 0;

        ProvinceId best;
        double best_util = must_leave ? -1.0 : util.at(u.location);
        for (const ProvinceId& q : map.reachable(u.location, u.kind)) {
            if (constraints.forbidden.count(q)) continue;
            if (stay_targets.count(q)) continue;       // an own unit keeps sitting there
            if (undecided.count(q)) continue;          // an own unit might stay there
            double uq = util.at(q);
            if (uq > best_util || (uq == best_util && !best.empty() && q < best)) {
                best = q;
                best_util = uq;
            }
        }

        Order chosen = Order::hold(u);
        if (!best.empty()) {
            if (move_targets.count(best))
                chosen = Order::support_move(u, mover_into.at(best), best);
            else
                chosen = Order::move(u, best);
        }
        result.orders[u.location] = chosen;
        if (chosen.kind == OrderKind::Move) {
            move_targets.insert(chosen.dest);
            mover_into[chosen.dest] = u;
        } else {
            stay_targets.insert(u.location);
        }
    }
    return result;
}

Plan anticipate(const WorldMap& map, const GameState& state, const Power& power,
                const UtilityTable& util) {
    return plan(map, state, power, Constraints{}, util);
}

std::vector<Order> plan_retreats(const WorldMap& map, const GameState& after_movement,
                                 const Resolution& res, const Power& power,
                                 const UtilityTable& util) {
    std::vector<Order> out;
    for (const Dislodgement& d : res.dislodged) {
        if (d.unit.power != power) continue;
        std::vector<ProvinceId> legal =
            legal_retreat_destinations(map, after_movement, res, d.unit);
        if (legal.empty()) {
            out.push_back(Order::disband(d.unit));
            continue;
        }
        ProvinceId best = legal.front();
        for (const ProvinceId& p : legal)
            if (util.at(p) > util.at(best) || (util.at(p) == util.at(best) && p < best))
                best = p;
        out.push_back(Order::retreat(d.unit, best));
    }
    return out;
}

std::vector<Order> plan_adjustments(const WorldMap& map, const GameState& state,
                                    const Power& power, const UtilityTable& util) {
    std::vector<Order> out;
    const int centers = state.sc_count(power);
    int units = static_cast<int>(state.units_of(power).size());

    if (units > centers) {
        std::vector<Unit> mine = state.units_of(power);
        std::sort(mine.begin(), mine.end(), [&](const Unit& a, const Unit& b) {
            double ua = util.at(a.location), ub = util.at(b.location);
            if (ua != ub) return ua < ub;
            return a.location < b.location;
        });
        for (int i = 0; i < units - centers; ++i) out.push_back(Order::disband(mine[i]));
        return out;
    }

    std::vector<ProvinceId> sites;
    for (const ProvinceId& home : map.home_centers(power)) {
        auto it = state.sc_owner.find(home);
        if (it == state.sc_owner.end() || it->second != power) continue;
        if (state.occupied(home)) continue;
        sites.push_back(home);
    }
    std::sort(sites.begin(), sites.end(), [&](const ProvinceId& a, const ProvinceId& b) {
        double ua = util.at(a), ub = util.at(b);
        if (ua != ub) return ua > ub;
        return a < b;
    });
    for (const ProvinceId& site : sites) {
        if (units >= centers) break;
        UnitKind kind = UnitKind::Army;
        if (map.province(site).kind == TerrainKind::Coastal) {
            int sea = 0, land = 0;
            for (const ProvinceId& q : map.neighbors(site))
                (map.province(q).kind == TerrainKind::Sea ? sea : land) += 1;
            if (sea > land) kind = UnitKind::Fleet;
        }
        out.push_back(Order::build(power, kind, site));
        ++units;
    }
    return out;
}

} // namespace tactician
} // namespace diplo
