#include "diplo/types.hpp"

#include <sstream>
#include <vector>

namespace diplo {

const char* phase_token(Phase p) {
    switch (p) {
        case Phase::Spring: return "SPR";
        case Phase::Summer: return "SUM";
        case Phase::Fall:   return "FAL";
        case Phase::Autumn: return "AUT";
        case Phase::Winter: return "WIN";
    }
    throw std::logic_error("bad phase");
}

Phase phase_from_token(const std::string& tok) {
    if (tok == "SPR") return Phase::Spring;
    if (tok == "SUM") return Phase::Summer;
    if (tok == "FAL") return Phase::Fall;
    if (tok == "AUT") return Phase::Autumn;
    if (tok == "WIN") return Phase::Winter;
    throw std::runtime_error("unknown phase token: " + tok);
}

const char* unit_kind_token(UnitKind k) { return k == UnitKind::Army ? "army" : "fleet"; }
char unit_kind_letter(UnitKind k) { return k == UnitKind::Army ? 'A' : 'F'; }

static UnitKind kind_from_letter(const std::string& s) {
    if (s == "A") return UnitKind::Army;
    if (s == "F") return UnitKind::Fleet;
    throw std::runtime_error("bad unit letter: " + s);
}

std::string order_notation(const Order& o) {
    std::ostringstream out;
    switch (o.kind) {
        case OrderKind::Hold:
            out << unit_kind_letter(o.unit.kind) << ' ' << o.unit.location << " H";
            break;
        case OrderKind::Move:
            out << unit_kind_letter(o.unit.kind) << ' ' << o.unit.location << " - " << o.dest;
            break;
        case OrderKind::SupportMove:
            out << unit_kind_letter(o.unit.kind) << ' ' << o.unit.location << " S "
                << unit_kind_letter(o.supported.kind) << ' ' << o.supported.location << " - " << o.dest;
            break;
        case OrderKind::SupportHold:
            out << unit_kind_letter(o.unit.kind) << ' ' << o.unit.location << " S "
                << unit_kind_letter(o.supported.kind) << ' ' << o.supported.location << " H";
            break;
        case OrderKind::Retreat:
            out << unit_kind_letter(o.unit.kind) << ' ' << o.unit.location << " R " << o.dest;
            break;
        case OrderKind::Disband:
            out << "DISBAND " << o.unit.power << ' ' << unit_kind_letter(o.unit.kind) << ' '
                << o.unit.location;
            break;
        case OrderKind::Build:
            out << "BUILD " << o.unit.power << ' ' << unit_kind_letter(o.unit.kind) << ' '
                << o.unit.location;
            break;
    }
    return out.str();
}

std::string order_notation_with_power(const Order& o) {
    if (o.kind == OrderKind::Build || o.kind == OrderKind::Disband) return order_notation(o);
    return o.unit.power + " " + order_notation(o);
}

Order parse_order_notation(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> tok;
    std::string t;
    while (in >> t) tok.push_back(t);
    auto fail = [&]() -> Order { throw std::runtime_error("bad order notation: " + text); };
    if (tok.empty()) return fail();

    if (tok[0] == "BUILD" || tok[0] == "DISBAND") {
        if (tok.size() != 4) return fail();
        Unit u{tok[1], kind_from_letter(tok[2]), tok[3]};
        return tok[0] == "BUILD" ? Order::build(u.power, u.kind, u.location) : Order::disband(u);
    }
    // <power> <A|F> <prov> ...
    if (tok.size() < 4) return fail();
    Unit u{tok[0], kind_from_letter(tok[1]), tok[2]};
    const std::string& verb = tok[3];
    if (verb == "H" && tok.size() == 4) return Order::hold(u);
    if (verb == "-" && tok.size() == 5) return Order::move(u, tok[4]);
    if (verb == "R" && tok.size() == 5) return Order::retreat(u, tok[4]);
    if (verb == "S") {
        // supported unit carries no power in the notation; owner resolved by
        // the caller against game state when needed
        if (tok.size() == 8 && tok[6] == "-") {
            Unit s{"", kind_from_letter(tok[4]), tok[5]};
            return Order::support_move(u, s, tok[7]);
        }
        if (tok.size() == 7 && tok[6] == "H") {
            Unit s{"", kind_from_letter(tok[4]), tok[5]};
            return Order::support_hold(u, s);
        }
    }
    return fail();
}

} // namespace diplo
