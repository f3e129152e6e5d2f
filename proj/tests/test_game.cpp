#include <doctest.h>

#include "diplo/audit.hpp"
#include "diplo/game.hpp"
#include "helpers.hpp"

using namespace diplo;

namespace {

GameConfig quick_config(std::uint64_t seed, const std::string& roster_kind) {
    GameConfig cfg;
    cfg.seed = seed;
    cfg.rounds = 4;
    cfg.max_year = 1904;
    std::vector<std::string> names;
    if (roster_kind == "silent")
        names.assign(7, "silent");
    else if (roster_kind == "mixed")
        names = {"madoff", "random", "silent", "random", "madoff", "random", "silent"};
    else
        names.assign(7, "random");
    std::vector<Power> powers = standard_map().powers();
    for (std::size_t i = 0; i < powers.size(); ++i) cfg.agents[powers[i]] = names[i];
    return cfg;
}

} // namespace

TEST_CASE("the same config twice gives byte-identical logs") {
    GameConfig cfg = quick_config(2024, "mixed");
    GameResult a = run_game(cfg);
    GameResult b = run_game(cfg);
    CHECK(a.log == b.log);
    CHECK(a.final_scs == b.final_scs);
}

TEST_CASE("seven silent agents play a dealless game to the year limit") {
    GameResult r = run_game(quick_config(11, "silent"));
    CHECK(r.status.kind == GameStatus::YearLimitReached);
    CHECK(r.log.find("DEAL") == std::string::npos);
    CHECK(audit_game_log(r.log).empty());
    int sum = 0;
    for (const auto& [p, n] : r.final_scs) sum += n;
    CHECK(sum <= 34);
}

TEST_CASE("a mixed game binds deals and passes the audit") {
    GameResult r = run_game(quick_config(5, "mixed"));
    CHECK(r.log.find("BINDING") != std::string::npos);
    auto violations = audit_game_log(r.log);
    if (!violations.empty()) FAIL(violations.front());
    CHECK(r.madoff_stats.size() == 2);
    for (const auto& [p, stats] : r.madoff_stats) {
        CHECK(stats.step1_violations == 0);
        CHECK(stats.favor_cap_violations == 0);
    }
}

TEST_CASE("config validation happens before any simulation") {
    GameConfig cfg = quick_config(1, "mixed");
    cfg.agents.erase("AUS");
    CHECK_THROWS_AS(run_game(cfg), std::runtime_error);
    cfg.agents["AUS"] = "nonsense";
    CHECK_THROWS_AS(run_game(cfg), std::runtime_error);
}

TEST_CASE("tournament of one equals the single game") {
    TournamentConfig tc;
    tc.base = quick_config(77, "mixed");
    tc.games = 1;
    TournamentResult tr = run_tournament(tc);
    GameResult gr = run_game(tc.base);
    REQUIRE(tr.game_lines.size() == 1);
    CHECK(tr.game_lines[0] == "game 0 " + gr.one_line());
    CHECK(tr.failed_games == 0);
    double mean = 0.0;
    int slots = 0;
    for (const auto& [name, agg] : tr.by_agent) {
        mean += agg.mean_scs * agg.slots;
        slots += agg.slots;
    }
    CHECK(slots == 7);
    int sum = 0;
    for (const auto& [p, n] : gr.final_scs) sum += n;
    CHECK(mean == doctest::Approx(static_cast<double>(sum)));
}

TEST_CASE("parallel and serial tournaments emit identical summaries") {
    TournamentConfig tc;
    tc.base = quick_config(300, "mixed");
    tc.games = 7;
    tc.jobs = 1;
    TournamentResult serial = run_tournament(tc);
    tc.jobs = 4;
    TournamentResult parallel = run_tournament(tc);
    CHECK(serial.summary_table() == parallel.summary_table());
    CHECK(serial.summary_csv() == parallel.summary_csv());
    REQUIRE(serial.game_lines.size() == parallel.game_lines.size());
    for (std::size_t i = 0; i < serial.game_lines.size(); ++i)
        CHECK(serial.game_lines[i] == parallel.game_lines[i]);
}

TEST_CASE("seeded games differ only through the agents' coins") {
    GameConfig a = quick_config(1, "silent");
    GameConfig b = quick_config(2, "silent");
    // silent rosters never consult randomness: identical games
    CHECK(run_game(a).log.substr(run_game(a).log.find('\n')) ==
          run_game(b).log.substr(run_game(b).log.find('\n')));
}

TEST_CASE("the audit catches a violated commitment") {
    GameResult r = run_game(quick_config(5, "mixed"));
    // forge a binding deal whose commitment never appears in the orders
    std::string forged = r.log;
    forged += "PHASE 1904 SPR\n";
    forged +=
        "DEAL XX#1 PROPOSE AUS OC[1904 SPR AUS A VIE - GAL]\n"
        "DEAL XX#1 BINDING\n";
    auto violations = audit_game_log(forged);
    REQUIRE(!violations.empty());
    bool found = false;
    for (const std::string& v : violations)
        if (v.find("XX#1") != std::string::npos) found = true;
    CHECK(found);
}

TEST_CASE("the audit catches a DMZ violation") {
    // hand-written miniature log
    std::string log =
        "GAME seed=1 map=standard agents=AUS:madoff,ENG:silent rounds=2 max_year=1901\n"
        "PHASE 1901 SPR\n"
        "DEAL A#1 PROPOSE AUS DMZ[1901 SPR powers={AUS,ENG} provinces={TYR}]\n"
        "DEAL A#1 ACCEPT ENG\n"
        "DEAL A#1 BINDING\n"
        "ORDER AUS A VIE - TYR\n"
        "RESULT AUS A VIE - TYR SUCCEEDED\n";
    auto violations = audit_game_log(log);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].find("DMZ violated") != std::string::npos);
}

TEST_CASE("the audit flags favor commitments beyond the credit") {
    std::string log =
        "GAME seed=1 map=standard agents=AUS:madoff,ENG:silent rounds=2 max_year=1901\n"
        "PHASE 1901 SPR\n"
        "DEAL A#1 PROPOSE AUS OC[1901 SPR AUS A VIE S A TRI - TYR] "
        "OC[1901 SPR AUS A BUD S A TRI H]\n"
        "ORDER AUS A VIE H\nORDER AUS A BUD H\nORDER AUS A TRI H\n";
    // three units -> credit 1, but two own-unit commitments proposed
    auto violations = audit_game_log(log);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].find("favor cap") != std::string::npos);
}

TEST_CASE("game logs carry the expected sections") {
    GameResult r = run_game(quick_config(5, "mixed"));
    CHECK(r.log.find("GAME seed=5") == 0);
    CHECK(r.log.find("PHASE 1901 SPR") != std::string::npos);
    CHECK(r.log.find("PHASE 1901 WIN") != std::string::npos);
    CHECK(r.log.find("HOSTILITY") != std::string::npos);
    CHECK(r.log.find("OUTCOME") != std::string::npos);
    CHECK(r.log.find("FINAL_SC AUS") != std::string::npos);
}
