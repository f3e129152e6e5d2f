#include "diplo/map.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace diplo {

namespace {

std::string edge_token(EdgeKind e) {
    switch (e) {
        case EdgeKind::ArmyOnly: return "army";
        case EdgeKind::FleetOnly: return "fleet";
        case EdgeKind::Both: return "both";
    }
    throw std::logic_error("bad edge kind");
}

std::string terrain_token(TerrainKind t) {
    switch (t) {
        case TerrainKind::Inland: return "inland";
        case TerrainKind::Sea: return "sea";
        case TerrainKind::Coastal: return "coastal";
    }
    throw std::logic_error("bad terrain kind");
}

[[noreturn]] void line_error(int line, const std::string& msg) {
    throw std::runtime_error("map line " + std::to_string(line) + ": " + msg);
}

} // namespace

WorldMap::WorldMap(std::vector<Province> provinces,
                   std::vector<std::tuple<ProvinceId, ProvinceId, EdgeKind>> edges,
                   std::vector<Unit> initial_units)
    : provinces_(std::move(provinces)), initial_units_(std::move(initial_units)) {
    std::sort(provinces_.begin(), provinces_.end(),
              [](const Province& a, const Province& b) { return a.id < b.id; });
    for (std::size_t i = 0; i < provinces_.size(); ++i) {
        const Province& p = provinces_[i];
        if (index_.count(p.id))
            throw std::runtime_error("duplicate province id: " + p.id);
        if (p.home_power && !p.is_supply_center)
            throw std::runtime_error("home power on non-supply-center: " + p.id);
        index_[p.id] = i;
        nodes_[p.id] = Node{p, {}, {}};
    }
    for (const auto& [a, b, kind] : edges) {
        if (!index_.count(a)) throw std::runtime_error("edge references unknown province: " + a);
        if (!index_.count(b)) throw std::runtime_error("edge references unknown province: " + b);
        if (a == b) throw std::runtime_error("self edge on province: " + a);
        auto& na = nodes_.at(a);
        auto& nb = nodes_.at(b);
        auto prior = na.edges.find(b);
        if (prior != na.edges.end()) {
            if (prior->second != kind)
                throw std::runtime_error("asymmetric edge declaration between " + a + " and " + b);
            continue;  // exact duplicate, harmless
        }
        if (kind != EdgeKind::FleetOnly &&
            (na.province.kind == TerrainKind::Sea || nb.province.kind == TerrainKind::Sea))
            throw std::runtime_error("army edge touches sea province: " + a + "-" + b);
        if (kind != EdgeKind::ArmyOnly &&
            (na.province.kind == TerrainKind::Inland || nb.province.kind == TerrainKind::Inland))
            throw std::runtime_error("fleet edge touches inland province: " + a + "-" + b);
        na.edges[b] = kind;
        nb.edges[a] = kind;
        na.all_neighbors.push_back(b);
        nb.all_neighbors.push_back(a);
    }
    for (auto& [id, node] : nodes_)
        std::sort(node.all_neighbors.begin(), node.all_neighbors.end());

    std::set<ProvinceId> occupied;
    for (const Unit& u : initial_units_) {
        if (!index_.count(u.location))
            throw std::runtime_error("initial unit on unknown province: " + u.location);
        if (!terrain_admits(province(u.location).kind, u.kind))
            throw std::runtime_error("initial unit kind not admitted at " + u.location);
        if (!occupied.insert(u.location).second)
            throw std::runtime_error("two initial units on province: " + u.location);
    }
    std::sort(initial_units_.begin(), initial_units_.end());
}

const Province& WorldMap::province(const ProvinceId& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw std::runtime_error("unknown province id: " + id);
    return provinces_[it->second];
}

std::set<ProvinceId> WorldMap::reachable(const ProvinceId& from, UnitKind kind) const {
    auto it = nodes_.find(from);
    if (it == nodes_.end()) throw std::runtime_error("unknown province id: " + from);
    std::set<ProvinceId> out;
    for (const auto& [to, edge] : it->second.edges)
        if (edge_admits(edge, kind) && terrain_admits(province(to).kind, kind))
            out.insert(to);
    return out;
}

const std::vector<ProvinceId>& WorldMap::neighbors(const ProvinceId& id) const {
    auto it = nodes_.find(id);
    if (it == nodes_.end()) throw std::runtime_error("unknown province id: " + id);
    return it->second.all_neighbors;
}

bool WorldMap::adjacent(const ProvinceId& a, const ProvinceId& b, UnitKind kind) const {
    auto it = nodes_.find(a);
    if (it == nodes_.end()) throw std::runtime_error("unknown province id: " + a);
    auto e = it->second.edges.find(b);
    return e != it->second.edges.end() && edge_admits(e->second, kind) &&
           terrain_admits(province(b).kind, kind);
}

std::vector<ProvinceId> WorldMap::supply_centers() const {
    std::vector<ProvinceId> out;
    for (const Province& p : provinces_)
        if (p.is_supply_center) out.push_back(p.id);
    return out;
}

std::vector<ProvinceId> WorldMap::home_centers(const Power& power) const {
    std::vector<ProvinceId> out;
    for (const Province& p : provinces_)
        if (p.home_power && *p.home_power == power) out.push_back(p.id);
    return out;
}

std::vector<Power> WorldMap::powers() const {
    std::set<Power> set;
    for (const Province& p : provinces_)
        if (p.home_power) set.insert(*p.home_power);
    for (const Unit& u : initial_units_) set.insert(u.power);
    return {set.begin(), set.end()};
}

std::string WorldMap::serialize() const {
    std::ostringstream out;
    for (const Province& p : provinces_) {
        out << "PROVINCE " << p.id << ' ' << terrain_token(p.kind);
        if (p.is_supply_center) out << " SC";
        if (p.home_power) out << " HOME=" << *p.home_power;
        out << '\n';
    }
    for (const Province& p : provinces_) {
        const Node& node = nodes_.at(p.id);
        for (const auto& [to, edge] : node.edges)
            if (p.id < to) out << "ADJ " << p.id << ' ' << to << ' ' << edge_token(edge) << '\n';
    }
    for (const Unit& u : initial_units_)
        out << "UNIT " << u.power << ' ' << unit_kind_token(u.kind) << ' ' << u.location << '\n';
    return out.str();
}

WorldMap load_map(const std::string& source) {
    std::vector<Province> provinces;
    std::vector<std::tuple<ProvinceId, ProvinceId, EdgeKind>> edges;
    std::vector<Unit> units;

    std::istringstream in(source);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::istringstream line(raw);
        std::vector<std::string> tok;
        std::string t;
        while (line >> t) tok.push_back(t);
        if (tok.empty()) continue;

        if (tok[0] == "PROVINCE") {
            if (tok.size() < 3) line_error(line_no, "PROVINCE needs an id and a terrain kind");
            Province p;
            p.id = tok[1];
            p.name = tok[1];
            if (tok[2] == "inland") p.kind = TerrainKind::Inland;
            else if (tok[2] == "sea") p.kind = TerrainKind::Sea;
            else if (tok[2] == "coastal") p.kind = TerrainKind::Coastal;
            else line_error(line_no, "unknown terrain kind: " + tok[2]);
            for (std::size_t i = 3; i < tok.size(); ++i) {
                if (tok[i] == "SC") p.is_supply_center = true;
                else if (tok[i].rfind("HOME=", 0) == 0) p.home_power = tok[i].substr(5);
                else line_error(line_no, "unknown PROVINCE attribute: " + tok[i]);
            }
            provinces.push_back(std::move(p));
        } else if (tok[0] == "ADJ") {
            if (tok.size() != 4) line_error(line_no, "ADJ needs two province ids and an edge kind");
            EdgeKind e;
            if (tok[3] == "army") e = EdgeKind::ArmyOnly;
            else if (tok[3] == "fleet") e = EdgeKind::FleetOnly;
            else if (tok[3] == "both") e = EdgeKind::Both;
            else line_error(line_no, "unknown edge kind: " + tok[3]);
            edges.emplace_back(tok[1], tok[2], e);
        } else if (tok[0] == "UNIT") {
            if (tok.size() != 4) line_error(line_no, "UNIT needs a power, a unit kind and a province");
            UnitKind k;
            if (tok[2] == "army") k = UnitKind::Army;
            else if (tok[2] == "fleet") k = UnitKind::Fleet;
            else line_error(line_no, "unknown unit kind: " + tok[2]);
            units.push_back(Unit{tok[1], k, tok[3]});
        } else {
            line_error(line_no, "unknown declaration: " + tok[0]);
        }
    }
    return WorldMap(std::move(provinces), std::move(edges), std::move(units));
}

WorldMap load_map_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open map file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_map(buf.str());
}

const WorldMap& standard_map() {
    static const WorldMap map = load_map(standard_map_text());
    return map;
}

} // namespace diplo
