#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "diplo/types.hpp"

namespace diplo {

enum class TerrainKind { Inland, Sea, Coastal };

enum class EdgeKind { ArmyOnly, FleetOnly, Both };

struct Province {
    ProvinceId id;
    std::string name;                 // display name; defaults to the id
    TerrainKind kind = TerrainKind::Inland;
    bool is_supply_center = false;
    std::optional<Power> home_power;  // only set on supply centers
};

inline bool terrain_admits(TerrainKind t, UnitKind k) {
    if (t == TerrainKind::Coastal) return true;
    return t == TerrainKind::Inland ? k == UnitKind::Army : k == UnitKind::Fleet;
}

inline bool edge_admits(EdgeKind e, UnitKind k) {
    if (e == EdgeKind::Both) return true;
    return e == EdgeKind::ArmyOnly ? k == UnitKind::Army : k == UnitKind::Fleet;
}

// Immutable province graph. Adjacency is symmetric and irreflexive; an
// army-tagged edge never touches a sea province, a fleet-tagged edge never
// touches an inland one. Safe to share across threads once built.
class WorldMap {
public:
    WorldMap(std::vector<Province> provinces,
             std::vector<std::tuple<ProvinceId, ProvinceId, EdgeKind>> edges,
             std::vector<Unit> initial_units);

    const std::vector<Province>& provinces() const { return provinces_; }
    const Province& province(const ProvinceId& id) const;
    bool has_province(const ProvinceId& id) const { return index_.count(id) > 0; }

    // All neighbours reachable by the given unit kind. Never contains `from`.
    std::set<ProvinceId> reachable(const ProvinceId& from, UnitKind kind) const;
    // Neighbours regardless of unit kind (the union over edge tags).
    const std::vector<ProvinceId>& neighbors(const ProvinceId& id) const;
    bool adjacent(const ProvinceId& a, const ProvinceId& b, UnitKind kind) const;

    const std::vector<Unit>& initial_units() const { return initial_units_; }
    std::vector<ProvinceId> supply_centers() const;
    std::vector<ProvinceId> home_centers(const Power& p) const;
    // Every power with a home supply center or an initial unit, sorted.
    std::vector<Power> powers() const;

    // Round-trips through load_map (same line-oriented grammar).
    std::string serialize() const;

private:
    struct Node {
        Province province;
        std::vector<ProvinceId> all_neighbors;                    // sorted
        std::map<ProvinceId, EdgeKind> edges;
    };
    std::vector<Province> provinces_;
    std::map<ProvinceId, Node> nodes_;
    std::map<ProvinceId, std::size_t> index_;
    std::vector<Unit> initial_units_;
};

// Parses the line-oriented map grammar:
//   PROVINCE <id> <inland|sea|coastal> [SC] [HOME=<power>]
//   ADJ <id> <id> <army|fleet|both>
//   UNIT <power> <army|fleet> <id>
// '#' starts a comment; blank lines are ignored. Throws std::runtime_error
// with a line number on parse errors and with the violated invariant on
// validation errors.
WorldMap load_map(const std::string& source);
WorldMap load_map_file(const std::string& path);

// The classic 7-power map: 75 provinces, 34 supply centers, 22 starting
// units (Russia has 4, everyone else 3). Compiled in.
const WorldMap& standard_map();
// The raw map text standard_map() is built from (same grammar as load_map).
const char* standard_map_text();

} // namespace diplo
