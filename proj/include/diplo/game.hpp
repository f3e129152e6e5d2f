#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "diplo/agents.hpp"

namespace diplo {

struct GameConfig {
    std::string map_source = "standard";     // "standard" or a map file path
    std::map<Power, std::string> agents;     // one agent name per map power
    std::uint64_t seed = 1;
    int rounds = 8;                          // negotiation rounds per movement phase
    int max_year = 1920;
};

struct GameResult {
    GameStatus status;
    int final_year = 0;
    std::uint64_t seed = 0;
    std::map<Power, int> final_scs;
    std::map<Power, int> elimination_year;   // only eliminated powers
    std::map<Power, std::string> agent_names;
    std::map<Power, bidding::BiddingState::Stats> madoff_stats;
    std::string log;                         // one event per line

    std::string one_line() const;
};

// Plays one full game. The log is a pure function of the config: identical
// configs give byte-identical logs.
GameResult run_game(const GameConfig& config);

struct TournamentConfig {
    GameConfig base;
    int games = 1;
    std::uint64_t seed_stride = 1;  // game i runs at seed + i*stride
    int jobs = 1;                   // worker threads; output independent of the value
};

struct TournamentResult {
    struct AgentAggregate {
        int slots = 0;          // power seats played across games
        double mean_scs = 0.0;
        int solos = 0;
        double survival_rate = 0.0;
        int eliminated = 0;
        double mean_elimination_year = 0.0;  // over eliminated seats only
    };
    std::vector<std::string> game_lines;     // per-game one-line results
    std::map<std::string, AgentAggregate> by_agent;
    int failed_games = 0;

    std::string summary_table() const;
    std::string summary_csv() const;
};

// Games are independent; with jobs > 1 they run concurrently and are
// aggregated in game order, so the summary matches the serial run byte for
// byte.
TournamentResult run_tournament(const TournamentConfig& config);

} // namespace diplo
