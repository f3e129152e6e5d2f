#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "diplo/audit.hpp"
#include "diplo/game.hpp"

namespace {

std::map<diplo::Power, std::string> assign_agents(const diplo::WorldMap& map,
                                                  const std::string& csv) {
    std::vector<std::string> names;
    std::istringstream in(csv);
    std::string item;
    while (std::getline(in, item, ',')) names.push_back(item);
    std::vector<diplo::Power> powers = map.powers();
    if (names.size() != powers.size())
        throw std::runtime_error("expected " + std::to_string(powers.size()) +
                                 " comma-separated agent names (powers in alphabetical order), got " +
                                 std::to_string(names.size()));
    std::map<diplo::Power, std::string> out;
    for (std::size_t i = 0; i < powers.size(); ++i) out[powers[i]] = names[i];
    return out;
}

void write_or_print(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

const diplo::WorldMap& map_for(const std::string& source, std::optional<diplo::WorldMap>& holder) {
    if (source == "standard") return diplo::standard_map();
    holder.emplace(diplo::load_map_file(source));
    return *holder;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"deterministic Diplomacy engine with negotiating agents"};
    app.require_subcommand(1);

    std::string map_source = "standard";
    std::string agents_csv = "madoff,random,random,random,random,random,random";
    std::uint64_t seed = 1;
    int rounds = 8;
    int max_year = 1920;

    auto add_game_options = [&](CLI::App* cmd) {
        cmd->add_option("--map", map_source, "map file path or 'standard'");
        cmd->add_option("--agents", agents_csv,
                        "comma-separated agent names, one per power in alphabetical order "
                        "(madoff|random|silent)");
        cmd->add_option("--seed", seed, "game seed");
        cmd->add_option("--rounds", rounds, "negotiation rounds per movement phase");
        cmd->add_option("--max-year", max_year, "last game year");
    };

    // play
    auto* play = app.add_subcommand("play", "run one game and write its log");
    std::string log_path;
    bool do_audit = false;
    add_game_options(play);
    play->add_option("--log", log_path, "log file (stdout when omitted)");
    play->add_flag("--audit", do_audit, "re-check the finished log for deal violations");

    // tournament
    auto* tour = app.add_subcommand("tournament", "run a series of seeded games");
    int games = 1;
    std::uint64_t stride = 1;
    int jobs = 1;
    std::string out_path;
    std::string csv_path;
    std::string log_dir;
    add_game_options(tour);
    tour->add_option("--games", games, "number of games")->check(CLI::PositiveNumber);
    tour->add_option("--stride", stride, "seed increment between games");
    tour->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    tour->add_option("--out", out_path, "summary table file (stdout when omitted)");
    tour->add_option("--csv", csv_path, "machine-readable summary file");
    tour->add_option("--log-dir", log_dir, "write per-game logs into this directory");

    // utilities
    auto* util_cmd = app.add_subcommand("utilities", "print the province utility table");
    std::string util_map = "standard";
    util_cmd->add_option("--map", util_map, "map file path or 'standard'");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(play)) {
            std::optional<diplo::WorldMap> holder;
            const diplo::WorldMap& map = map_for(map_source, holder);
            diplo::GameConfig config{map_source, assign_agents(map, agents_csv), seed, rounds,
                                     max_year};
            diplo::GameResult result = diplo::run_game(config);
            write_or_print(log_path, result.log);
            if (do_audit) {
                auto violations = diplo::audit_game_log(result.log);
                for (const std::string& v : violations) std::cerr << "VIOLATION " << v << '\n';
                if (!violations.empty()) return 2;
                std::cerr << "audit clean\n";
            }
        } else if (app.got_subcommand(tour)) {
            std::optional<diplo::WorldMap> holder;
            const diplo::WorldMap& map = map_for(map_source, holder);
            diplo::TournamentConfig config;
            config.base =
                diplo::GameConfig{map_source, assign_agents(map, agents_csv), seed, rounds, max_year};
            config.games = games;
            config.seed_stride = stride;
            config.jobs = jobs;
            diplo::TournamentResult result = diplo::run_tournament(config);
            if (!log_dir.empty()) {
                for (int i = 0; i < games; ++i) {
                    diplo::GameConfig game = config.base;
                    game.seed = seed + static_cast<std::uint64_t>(i) * stride;
                    std::ofstream out(log_dir + "/game" + std::to_string(i) + ".log");
                    out << diplo::run_game(game).log;
                }
            }
            std::ostringstream summary;
            for (const std::string& line : result.game_lines) summary << line << '\n';
            summary << result.summary_table();
            write_or_print(out_path, summary.str());
            if (!csv_path.empty()) write_or_print(csv_path, result.summary_csv());
        } else if (app.got_subcommand(util_cmd)) {
            std::optional<diplo::WorldMap> holder;
            const diplo::WorldMap& map = map_for(util_map, holder);
            diplo::UtilityTable table = diplo::compute_utilities(map);
            for (const auto& [id, raw] : table.raw_values)
                std::printf("%s %.4f %.4f\n", id.c_str(), raw, table.values.at(id));
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
