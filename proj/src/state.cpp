#include "diplo/state.hpp"

#include <algorithm>

namespace diplo {

const Unit* GameState::unit_at(const ProvinceId& p) const {
    for (const Unit& u : units)
        if (u.location == p) return &u;
    return nullptr;
}

std::vector<Unit> GameState::units_of(const Power& power) const {
    std::vector<Unit> out;
    for (const Unit& u : units)
        if (u.power == power) out.push_back(u);
    return out;
}

int GameState::sc_count(const Power& power) const {
    int n = 0;
    for (const auto& [sc, owner] : sc_owner)
        if (owner == power) ++n;
    return n;
}

void GameState::insert_unit(const Unit& u) {
    if (unit_at(u.location))
        throw std::runtime_error("province already occupied: " + u.location);
    units.push_back(u);
    std::sort(units.begin(), units.end());
}

void GameState::remove_unit(const ProvinceId& location) {
    auto it = std::find_if(units.begin(), units.end(),
                           [&](const Unit& u) { return u.location == location; });
    if (it == units.end()) throw std::runtime_error("no unit at province: " + location);
    units.erase(it);
}

void GameState::normalize() {
    std::sort(units.begin(), units.end());
    alive.clear();
    for (const Unit& u : units) alive.insert(u.power);
    for (const auto& [sc, owner] : sc_owner) alive.insert(owner);
}

GameState initial_state(const WorldMap& map) {
    GameState s;
    s.year = 1901;
    s.phase = Phase::Spring;
    s.units = map.initial_units();
    for (const Province& p : map.provinces())
        if (p.is_supply_center && p.home_power) s.sc_owner[p.id] = *p.home_power;
    s.normalize();
    return s;
}

void advance_phase(GameState& state) {
    switch (state.phase) {
        case Phase::Spring: state.phase = Phase::Summer; break;
        case Phase::Summer: state.phase = Phase::Fall; break;
        case Phase::Fall:   state.phase = Phase::Autumn; break;
        case Phase::Autumn: state.phase = Phase::Winter; break;
        case Phase::Winter:
            state.phase = Phase::Spring;
            state.year += 1;
            break;
    }
}

} // namespace diplo
