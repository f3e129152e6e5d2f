#pragma once

#include <sstream>

#include "diplo/game.hpp"

namespace diplo::testing {

// Five inland provinces in a line with a fork, armies only:
//
//   P1 -- P2 -- P3 -- P4
//          \-- P5
//
// P3 is a supply center.
inline WorldMap line_map() {
    return load_map(
        "PROVINCE P1 inland\n"
        "PROVINCE P2 inland\n"
        "PROVINCE P3 inland SC\n"
        "PROVINCE P4 inland\n"
        "PROVINCE P5 inland\n"
        "ADJ P1 P2 army\n"
        "ADJ P2 P3 army\n"
        "ADJ P3 P4 army\n"
        "ADJ P2 P5 army\n");
}

// Fully connected four inland provinces, two of them centers.
inline WorldMap clique4_map(bool sc_a = false, bool sc_b = true) {
    std::ostringstream s;
    s << "PROVINCE A inland" << (sc_a ? " SC" : "") << "\n";
    s << "PROVINCE B inland" << (sc_b ? " SC" : "") << "\n";
    s << "PROVINCE C inland\nPROVINCE D inland SC\n";
    for (const char* e : {"A B", "A C", "A D", "B C", "B D", "C D"})
        s << "ADJ " << e << " army\n";
    return load_map(s.str());
}

// Ring of five inland provinces (for movement cycles): R1-R2-R3-R4-R5-R1.
inline WorldMap ring5_map() {
    return load_map(
        "PROVINCE R1 inland\nPROVINCE R2 inland\nPROVINCE R3 inland\n"
        "PROVINCE R4 inland SC\nPROVINCE R5 inland\n"
        "ADJ R1 R2 army\nADJ R2 R3 army\nADJ R3 R4 army\nADJ R4 R5 army\nADJ R5 R1 army\n");
}

inline GameState state_with(const std::vector<Unit>& units, int year = 1901,
                            Phase phase = Phase::Spring) {
    GameState s;
    s.year = year;
    s.phase = phase;
    s.units = units;
    s.normalize();
    return s;
}

inline Unit army(const Power& p, const ProvinceId& at) { return Unit{p, UnitKind::Army, at}; }
inline Unit fleet(const Power& p, const ProvinceId& at) { return Unit{p, UnitKind::Fleet, at}; }

} // namespace diplo::testing
