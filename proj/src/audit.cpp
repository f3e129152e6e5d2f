#include "diplo/audit.hpp"

#include <map>
#include <set>
#include <sstream>

#include "diplo/types.hpp"

namespace diplo {

namespace {

struct PhaseKey {
    int year = 0;
    std::string phase;
    bool operator<(const PhaseKey& o) const {
        return year != o.year ? year < o.year : phase < o.phase;
    }
    std::string str() const { return std::to_string(year) + " " + phase; }
};

struct ParsedCommitment {
    PhaseKey when;
    std::string order_text;  // power-qualified notation
    Power unit_power;
};

struct ParsedDmz {
    PhaseKey when;
    std::set<Power> powers;
    std::set<std::string> provinces;
};

struct ParsedDeal {
    std::string id;
    Power proposer;
    PhaseKey proposed_in;
    std::vector<ParsedCommitment> commitments;
    std::vector<ParsedDmz> dmzs;
    bool binding = false;
};

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
}

std::set<std::string> split_braced(const std::string& s) {
    // "{A,B,C}" -> {A, B, C}
    std::set<std::string> out;
    std::string inner = s;
    if (!inner.empty() && inner.front() == '{') inner.erase(0, 1);
    if (!inner.empty() && inner.back() == '}') inner.pop_back();
    std::istringstream in(inner);
    std::string item;
    while (std::getline(in, item, ','))
        if (!item.empty()) out.insert(item);
    return out;
}

// parses the bracketed chunks of a DEAL ... PROPOSE line
void parse_deal_body(const std::string& body, ParsedDeal& deal) {
    std::size_t pos = 0;
    while (pos < body.size()) {
        std::size_t oc = body.find("OC[", pos);
        std::size_t dmz = body.find("DMZ[", pos);
        if (oc == std::string::npos && dmz == std::string::npos) break;
        bool is_oc = oc != std::string::npos && (dmz == std::string::npos || oc < dmz);
        std::size_t open = is_oc ? oc + 3 : dmz + 4;
        std::size_t close = body.find(']', open);
        if (close == std::string::npos) break;
        std::string inner = body.substr(open, close - open);
        pos = close + 1;

        auto tok = split_ws(inner);
        if (tok.size() < 2) continue;
        PhaseKey when{std::stoi(tok[0]), tok[1]};
        if (is_oc) {
            ParsedCommitment c;
            c.when = when;
            c.order_text = inner.substr(inner.find(tok[1]) + tok[1].size() + 1);
            c.unit_power = tok[2] == "BUILD" || tok[2] == "DISBAND" ? tok[3] : tok[2];
            deal.commitments.push_back(std::move(c));
        } else {
            ParsedDmz d;
            d.when = when;
            for (const std::string& t : tok) {
                if (t.rfind("powers=", 0) == 0) d.powers = split_braced(t.substr(7));
                if (t.rfind("provinces=", 0) == 0) d.provinces = split_braced(t.substr(10));
            }
            deal.dmzs.push_back(std::move(d));
        }
    }
}

} // namespace

std::vector<std::string> audit_game_log(const std::string& log) {
    std::vector<std::string> violations;

    std::map<Power, std::string> agent_of;
    std::map<std::string, ParsedDeal> deals;
    std::map<PhaseKey, std::set<std::string>> submitted;               // order text per phase
    std::map<PhaseKey, std::map<Power, int>> unit_counts;              // per movement phase
    std::map<PhaseKey, std::vector<std::pair<Power, std::string>>> entered;  // successful moves
    PhaseKey current;
    bool movement = false;

    std::istringstream in(log);
    std::string line;
    while (std::getline(in, line)) {
        auto tok = split_ws(line);
        if (tok.empty()) continue;

        if (tok[0] == "GAME") {
            for (const std::string& t : tok)
                if (t.rfind("agents=", 0) == 0)
                    for (const std::string& pair : split_braced("{" + t.substr(7) + "}")) {
                        auto colon = pair.find(':');
                        if (colon != std::string::npos)
                            agent_of[pair.substr(0, colon)] = pair.substr(colon + 1);
                    }
        } else if (tok[0] == "PHASE" && tok.size() == 3) {
            current = PhaseKey{std::stoi(tok[1]), tok[2]};
            movement = tok[2] == "SPR" || tok[2] == "FAL";
        } else if (tok[0] == "ORDER" && movement) {
            std::string text = line.substr(6);
            submitted[current].insert(text);
            unit_counts[current][tok[1]] += 1;
        } else if (tok[0] == "RESULT" && movement && tok.size() >= 3) {
            if (tok.back() == "SUCCEEDED") {
                std::string text = line.substr(7, line.size() - 7 - 10);
                // trim the trailing space before the status
                while (!text.empty() && text.back() == ' ') text.pop_back();
                try {
                    Order o = parse_order_notation(text);
                    if (o.kind == OrderKind::Move)
                        entered[current].emplace_back(o.unit.power, o.dest);
                } catch (const std::exception&) {
                    violations.push_back("unparseable RESULT line: " + line);
                }
            }
        } else if (tok[0] == "DEAL" && tok.size() >= 3) {
            const std::string& id = tok[1];
            if (tok[2] == "PROPOSE" && tok.size() >= 4) {
                ParsedDeal d;
                d.id = id;
                d.proposer = tok[3];
                d.proposed_in = current;
                parse_deal_body(line, d);
                deals[id] = std::move(d);
            } else if (tok[2] == "BINDING") {
                auto it = deals.find(id);
                if (it == deals.end())
                    violations.push_back("BINDING for unknown deal " + id);
                else
                    it->second.binding = true;
            }
        }
    }

    // binding commitments must be submitted verbatim
    for (const auto& [id, deal] : deals) {
        if (!deal.binding) continue;
        for (const ParsedCommitment& c : deal.commitments) {
            auto phase_orders = submitted.find(c.when);
            if (phase_orders == submitted.end() || !phase_orders->second.count(c.order_text))
                violations.push_back("deal " + id + " commitment not honored in " +
                                     c.when.str() + ": " + c.order_text);
        }
        for (const ParsedDmz& d : deal.dmzs) {
            auto moves = entered.find(d.when);
            if (moves == entered.end()) continue;
            for (const auto& [power, dest] : moves->second)
                if (d.powers.count(power) && d.provinces.count(dest))
                    violations.push_back("deal " + id + " DMZ violated in " + d.when.str() +
                                         ": " + power + " entered " + dest);
        }
    }

    // madoff bidding contract: current-phase proposals, favor cap
    std::map<PhaseKey, std::map<Power, int>> favors;
    for (const auto& [id, deal] : deals) {
        auto it = agent_of.find(deal.proposer);
        if (it == agent_of.end() || it->second != "madoff") continue;
        for (const ParsedCommitment& c : deal.commitments) {
            if (c.when.year != deal.proposed_in.year || c.when.phase != deal.proposed_in.phase)
                violations.push_back("deal " + id + " commits outside its phase");
            if (c.unit_power == deal.proposer) favors[deal.proposed_in][deal.proposer] += 1;
        }
        for (const ParsedDmz& d : deal.dmzs)
            if (d.when.year != deal.proposed_in.year || d.when.phase != deal.proposed_in.phase)
                violations.push_back("deal " + id + " demilitarizes outside its phase");
    }
    for (const auto& [when, by_power] : favors) {
        for (const auto& [power, count] : by_power) {
            int units = 0;
            auto pc = unit_counts.find(when);
            if (pc != unit_counts.end() && pc->second.count(power)) units = pc->second.at(power);
            if (count > units / 3)
                violations.push_back("favor cap exceeded by " + power + " in " + when.str() +
                                     ": " + std::to_string(count) + " > " +
                                     std::to_string(units / 3));
        }
    }

    return violations;
}

} // namespace diplo
