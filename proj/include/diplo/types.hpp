#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace diplo {

// Powers and provinces are identified by short uppercase tokens
// (e.g. "AUS", "VIE"). Custom maps may introduce their own powers.
using Power = std::string;
using ProvinceId = std::string;

enum class UnitKind { Army, Fleet };

// one game year = SPR, SUM, FAL, AUT, WIN
enum class Phase { Spring, Summer, Fall, Autumn, Winter };

inline bool is_movement_phase(Phase p) { return p == Phase::Spring || p == Phase::Fall; }
inline bool is_retreat_phase(Phase p) { return p == Phase::Summer || p == Phase::Autumn; }

const char* phase_token(Phase p);            // SPR, SUM, FAL, AUT, WIN
Phase phase_from_token(const std::string& tok);

const char* unit_kind_token(UnitKind k);     // "army" / "fleet"
char unit_kind_letter(UnitKind k);           // 'A' / 'F'

struct Unit {
    Power power;
    UnitKind kind = UnitKind::Army;
    ProvinceId location;

    bool operator==(const Unit& o) const {
        return power == o.power && kind == o.kind && location == o.location;
    }
    bool operator!=(const Unit& o) const { return !(*this == o); }
    bool operator<(const Unit& o) const {
        if (location != o.location) return location < o.location;
        if (power != o.power) return power < o.power;
        return kind < o.kind;
    }
};

enum class OrderKind {
    Hold,
    Move,
    SupportMove,
    SupportHold,
    Retreat,
    Disband,
    Build,
};

// One order, all kinds. Movement orders (Hold/Move/SupportMove/SupportHold)
// act on `unit`; Retreat/Disband on `unit`; Build describes the new unit.
struct Order {
    OrderKind kind = OrderKind::Hold;
    Unit unit;            // acting unit (for Build: the unit to create)
    ProvinceId dest;      // Move/Retreat/SupportMove destination
    Unit supported;       // SupportMove/SupportHold target unit

    static Order hold(Unit u) { return {OrderKind::Hold, std::move(u), {}, {}}; }
    static Order move(Unit u, ProvinceId d) { return {OrderKind::Move, std::move(u), std::move(d), {}}; }
    static Order support_move(Unit u, Unit s, ProvinceId d) {
        return {OrderKind::SupportMove, std::move(u), std::move(d), std::move(s)};
    }
    static Order support_hold(Unit u, Unit s) {
        return {OrderKind::SupportHold, std::move(u), {}, std::move(s)};
    }
    static Order retreat(Unit u, ProvinceId d) { return {OrderKind::Retreat, std::move(u), std::move(d), {}}; }
    static Order disband(Unit u) { return {OrderKind::Disband, std::move(u), {}, {}}; }
    static Order build(Power p, UnitKind k, ProvinceId at) {
        return {OrderKind::Build, Unit{std::move(p), k, std::move(at)}, {}, {}};
    }

    bool is_movement_order() const {
        return kind == OrderKind::Hold || kind == OrderKind::Move ||
               kind == OrderKind::SupportMove || kind == OrderKind::SupportHold;
    }
    bool is_support() const {
        return kind == OrderKind::SupportMove || kind == OrderKind::SupportHold;
    }
    // province this order puts (or keeps) the acting unit in
    const ProvinceId& effective_location() const {
        return kind == OrderKind::Move || kind == OrderKind::Retreat ? dest : unit.location;
    }

    bool operator==(const Order& o) const {
        return kind == o.kind && unit == o.unit && dest == o.dest && supported == o.supported;
    }
    bool operator!=(const Order& o) const { return !(*this == o); }
};

// Text notation, e.g. "A VIE H", "A VIE - GAL", "A VIE S A BUD - GAL",
// "F TRI S A VEN H", "A VIE R BOH", "BUILD AUS A VIE", "DISBAND AUS A VIE".
std::string order_notation(const Order& o);
// Same with the acting power prefixed for movement/retreat orders
// ("AUS A VIE - GAL"); Build/Disband already carry the power.
std::string order_notation_with_power(const Order& o);
// Inverse of order_notation_with_power. Throws std::runtime_error on bad input.
Order parse_order_notation(const std::string& text);

} // namespace diplo
