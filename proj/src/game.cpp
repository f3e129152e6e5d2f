#include "diplo/game.hpp"

#include <algorithm>
#include <cstdio>
#include <future>
#include <sstream>
#include <thread>

namespace diplo {

namespace {

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

struct GameDriver {
    const GameConfig& config;
    WorldMap map;
    UtilityTable util;
    HostilityMatrix hostility;
    GameState state;
    Ledger ledger;
    std::vector<std::unique_ptr<Agent>> agents;
    std::map<Power, Agent*> agent_ptrs;
    std::ostringstream log;
    GameResult result;

    explicit GameDriver(const GameConfig& cfg)
        : config(cfg),
          map(cfg.map_source == "standard" ? standard_map() : load_map_file(cfg.map_source)) {
        util = compute_utilities(map);
        std::vector<Power> powers = map.powers();
        hostility = HostilityMatrix(powers);

        if (config.agents.size() != powers.size())
            throw std::runtime_error("config assigns " + std::to_string(config.agents.size()) +
                                     " agents but the map has " + std::to_string(powers.size()) +
                                     " powers");
        for (const Power& p : powers) {
            auto it = config.agents.find(p);
            if (it == config.agents.end())
                throw std::runtime_error("no agent assigned to power " + p);
            agents.push_back(
                make_agent(it->second, p, map, util, hostility, derive_seed(config.seed, p)));
            agent_ptrs[p] = agents.back().get();
        }
        state = initial_state(map);
        result.seed = config.seed;
        result.agent_names = config.agents;
    }

    void emit(const std::string& line) { log << line << '\n'; }

    void header() {
        std::ostringstream h;
        h << "GAME seed=" << config.seed << " map=" << config.map_source << " agents=";
        bool first = true;
        for (const auto& [p, name] : config.agents) {
            if (!first) h << ',';
            h << p << ':' << name;
            first = false;
        }
        h << " rounds=" << config.rounds << " max_year=" << config.max_year;
        emit(h.str());
    }

    void phase_header() {
        emit(std::string("PHASE ") + std::to_string(state.year) + " " +
             phase_token(state.phase));
    }

    std::pair<std::vector<Order>, Resolution> movement_phase() {
        for (const Power& p : state.alive)
            if (agent_ptrs.count(p)) agent_ptrs.at(p)->on_phase_start(state, ledger);

        run_session(state, ledger, alive_agents(), config.rounds,
                    [this](const std::string& line) { emit(line); });

        std::vector<Order> orders;
        std::vector<Power> powers(state.alive.begin(), state.alive.end());
        std::sort(powers.begin(), powers.end());
        for (const Power& p : powers) {
            Constraints c = binding_constraints(ledger, p, state.year, state.phase);
            Plan plan = tactician::plan(map, state, p, c, util);
            for (const Order& o : plan.as_orders()) orders.push_back(o);
        }
        std::sort(orders.begin(), orders.end(),
                  [](const Order& a, const Order& b) { return a.unit.location < b.unit.location; });
        for (const Order& o : orders) emit("ORDER " + order_notation_with_power(o));

        Resolution res = adjudicate(map, state, orders);
        for (const OrderOutcome& oo : res.outcomes)
            emit("RESULT " + order_notation_with_power(oo.order) + " " +
                 order_status_token(oo.status));
        for (const Dislodgement& d : res.dislodged)
            emit("DISLODGED " + d.unit.power + " " + std::string(1, unit_kind_letter(d.unit.kind)) +
                 " " + d.unit.location + " BY " + d.attacker_origin);

        for (const Power& p : powers)
            if (agent_ptrs.count(p)) agent_ptrs.at(p)->on_phase_end(res);

        state = apply_movement(state, res);
        return {orders, res};
    }

    std::map<Power, Agent*> alive_agents() {
        std::map<Power, Agent*> out;
        for (const auto& [p, a] : agent_ptrs)
            if (state.alive.count(p)) out[p] = a;
        return out;
    }

    void retreat_phase(const Resolution& res) {
        std::vector<Order> retreats;
        std::vector<Power> powers(state.alive.begin(), state.alive.end());
        std::sort(powers.begin(), powers.end());
        for (const Power& p : powers)
            for (const Order& o : tactician::plan_retreats(map, state, res, p, util))
                retreats.push_back(o);
        std::sort(retreats.begin(), retreats.end(),
                  [](const Order& a, const Order& b) { return a.unit.location < b.unit.location; });
        for (const Order& o : retreats) emit("ORDER " + order_notation_with_power(o));

        GameState next = resolve_retreats(map, state, res, retreats);
        for (const Order& o : retreats) {
            bool survived = o.kind == OrderKind::Retreat && next.unit_at(o.dest) &&
                            next.unit_at(o.dest)->power == o.unit.power;
            emit("RESULT " + order_notation_with_power(o) + (survived ? " RETREATED" : " DISBANDED"));
        }
        state = next;
    }

    void winter_phase() {
        std::map<Power, std::vector<Order>> adjustments;
        std::vector<Power> powers(state.alive.begin(), state.alive.end());
        std::sort(powers.begin(), powers.end());
        for (const Power& p : powers) {
            auto orders = tactician::plan_adjustments(map, state, p, util);
            for (const Order& o : orders) emit("ORDER " + order_notation_with_power(o));
            if (!orders.empty()) adjustments[p] = std::move(orders);
        }
        std::set<Power> before = state.alive;
        WinterResult wr = resolve_winter(map, state, adjustments);
        state = wr.state;
        for (const std::string& w : wr.warnings) emit("WARN " + w);
        for (const Power& p : before)
            if (!state.alive.count(p)) {
                emit("ELIMINATED " + p + " " + std::to_string(state.year));
                result.elimination_year[p] = state.year;
            }

        for (const Power& obs : hostility.powers())
            for (const Power& sub : hostility.powers())
                if (obs != sub)
                    emit("HOSTILITY " + obs + " " + sub + " " +
                         std::to_string(hostility.raw(obs, sub)));
    }

    void finish(const GameStatus& status) {
        result.status = status;
        result.final_year = state.year;
        if (status.kind == GameStatus::Solo)
            emit("OUTCOME SOLO " + status.solo_power + " " + std::to_string(state.year));
        else
            emit("OUTCOME YEAR_LIMIT " + std::to_string(state.year));
        std::vector<Power> powers = map.powers();
        for (const Power& p : powers) {
            result.final_scs[p] = state.sc_count(p);
            emit("FINAL_SC " + p + " " + std::to_string(state.sc_count(p)));
        }
        for (auto& [p, a] : agent_ptrs) a->on_game_end(status);
        for (auto& [p, a] : agent_ptrs)
            if (auto* m = dynamic_cast<MadoffAgent*>(a)) result.madoff_stats[p] = m->bidding_stats();
        result.log = log.str();
    }

    GameResult run() {
        header();
        while (true) {
            // Spring
            phase_header();
            GameState spring_before = state;
            auto [spring_orders, spring_res] = movement_phase();
            update_from_resolution(hostility, spring_before, spring_orders, spring_res);
            advance_phase(state);

            // Summer
            phase_header();
            retreat_phase(spring_res);
            advance_phase(state);

            // Fall
            phase_header();
            GameState fall_before = state;
            auto [fall_orders, fall_res] = movement_phase();
            advance_phase(state);

            // Autumn
            phase_header();
            retreat_phase(fall_res);
            fall_res.captures = update_sc_ownership(map, state);
            for (const Capture& c : fall_res.captures)
                emit("CAPTURE " + c.power + " " + c.sc + " FROM " +
                     (c.prior_owner ? *c.prior_owner : std::string("NEUTRAL")));
            update_from_resolution(hostility, fall_before, fall_orders, fall_res);
            {
                GameStatus s = game_status(state, config.max_year);
                if (s.kind == GameStatus::Solo) {
                    finish(s);
                    return result;
                }
            }
            advance_phase(state);

            // Winter
            phase_header();
            winter_phase();
            {
                GameStatus s = game_status(state, config.max_year);
                if (s.kind != GameStatus::Ongoing) {
                    finish(s);
                    return result;
                }
            }
            advance_phase(state);
        }
    }
};

} // namespace

std::string GameResult::one_line() const {
    std::ostringstream out;
    out << "seed=" << seed << " outcome=";
    if (status.kind == GameStatus::Solo)
        out << "SOLO:" << status.solo_power << ":" << final_year;
    else
        out << "YEAR_LIMIT:" << final_year;
    out << " scs=";
    bool first = true;
    for (const auto& [p, n] : final_scs) {
        if (!first) out << ',';
        out << p << ':' << n;
        first = false;
    }
    return out.str();
}

GameResult run_game(const GameConfig& config) {
    GameDriver driver(config);
    return driver.run();
}

TournamentResult run_tournament(const TournamentConfig& config) {
    struct Slot {
        bool ok = false;
        GameResult result;
        std::string error;
    };
    std::vector<Slot> slots(config.games);

    auto worker = [&](int begin, int step) {
        for (int i = begin; i < config.games; i += step) {
            GameConfig game = config.base;
            game.seed = config.base.seed + static_cast<std::uint64_t>(i) * config.seed_stride;
            try {
                slots[i].result = run_game(game);
                slots[i].ok = true;
            } catch (const std::exception& e) {
                slots[i].error = e.what();
            }
        }
    };

    const int jobs = std::max(1, config.jobs);
    if (jobs == 1) {
        worker(0, 1);
    } else {
        std::vector<std::thread> threads;
        for (int t = 0; t < jobs; ++t) threads.emplace_back(worker, t, jobs);
        for (std::thread& t : threads) t.join();
    }

    TournamentResult out;
    struct Tally {
        int slots = 0, solos = 0, survived = 0, eliminated = 0;
        long long scs = 0, elim_years = 0;
    };
    std::map<std::string, Tally> tallies;

    for (int i = 0; i < config.games; ++i) {
        const Slot& slot = slots[i];
        if (!slot.ok) {
            out.game_lines.push_back("game " + std::to_string(i) + " FAILED: " + slot.error);
            out.failed_games += 1;
            continue;
        }
        const GameResult& r = slot.result;
        out.game_lines.push_back("game " + std::to_string(i) + " " + r.one_line());
        for (const auto& [power, name] : r.agent_names) {
            Tally& t = tallies[name];
            t.slots += 1;
            t.scs += r.final_scs.at(power);
            if (r.status.kind == GameStatus::Solo && r.status.solo_power == power) t.solos += 1;
            auto elim = r.elimination_year.find(power);
            if (elim == r.elimination_year.end()) {
                t.survived += 1;
            } else {
                t.eliminated += 1;
                t.elim_years += elim->second;
            }
        }
    }
    for (const auto& [name, t] : tallies) {
        TournamentResult::AgentAggregate a;
        a.slots = t.slots;
        a.mean_scs = t.slots ? static_cast<double>(t.scs) / t.slots : 0.0;
        a.solos = t.solos;
        a.survival_rate = t.slots ? static_cast<double>(t.survived) / t.slots : 0.0;
        a.eliminated = t.eliminated;
        a.mean_elimination_year =
            t.eliminated ? static_cast<double>(t.elim_years) / t.eliminated : 0.0;
        out.by_agent[name] = a;
    }
    return out;
}

std::string TournamentResult::summary_table() const {
    std::ostringstream out;
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%-10s %6s %8s %6s %9s %10s", "agent", "seats", "mean_sc",
                  "solos", "survival", "mean_elim");
    out << buf << '\n';
    for (const auto& [name, a] : by_agent) {
        std::string elim = a.eliminated ? format_double(a.mean_elimination_year) : "-";
        std::snprintf(buf, sizeof(buf), "%-10s %6d %8s %6d %9s %10s", name.c_str(), a.slots,
                      format_double(a.mean_scs).c_str(), a.solos,
                      format_double(a.survival_rate).c_str(), elim.c_str());
        out << buf << '\n';
    }
    if (failed_games) out << "failed games: " << failed_games << '\n';
    return out.str();
}

std::string TournamentResult::summary_csv() const {
    std::ostringstream out;
    out << "agent,seats,mean_sc,solos,survival_rate,mean_elimination_year\n";
    for (const auto& [name, a] : by_agent) {
        out << name << ',' << a.slots << ',' << format_double(a.mean_scs) << ',' << a.solos << ','
            << format_double(a.survival_rate) << ','
            << (a.eliminated ? format_double(a.mean_elimination_year) : "") << '\n';
    }
    return out.str();
}

} // namespace diplo
