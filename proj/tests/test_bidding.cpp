#include <doctest.h>

#include "diplo/bidding.hpp"
#include "helpers.hpp"

using namespace diplo;
using namespace diplo::testing;
using namespace diplo::bidding;

namespace {

// AUS on A and C, RUS on B and E, one center at B owned by AUS.
//
//      A --- B --- E
//       \   /|
//        \ / |
//         C  D     (C adjacent A, B; D adjacent B only)
struct Board {
    WorldMap map = load_map(
        "PROVINCE A inland\nPROVINCE B inland SC\nPROVINCE C inland\n"
        "PROVINCE D inland\nPROVINCE E inland\n"
        "ADJ A B army\nADJ A C army\nADJ B C army\nADJ B D army\nADJ B E army\n");
    UtilityTable util = compute_utilities(map);
    HostilityMatrix hostility{std::vector<Power>{"AUS", "RUS", "TUR"}};
    GameState state;
    std::map<Power, Plan> plans;
    Rng rng{7};

    explicit Board(std::vector<Unit> units) {
        state = state_with(std::move(units));
        state.sc_owner["B"] = "AUS";
        state.normalize();
        refresh_plans();
    }
    void refresh_plans() {
        plans.clear();
        for (const Power& p : state.alive)
            plans[p] = tactician::anticipate(map, state, p, util);
    }
    EvaluationContext ctx() {
        return EvaluationContext{map,  state,         util,  hostility, "AUS",
                                 1901, Phase::Spring, plans, &rng};
    }
};

} // namespace

TEST_CASE("order estimates mirror the other side's plan") {
    Board b({army("AUS", "A"), army("RUS", "E")});
    // RUS E anticipates moving to B (the center). Its own move estimates 0.29
    // (planned dest equal, occupied... B is empty here) -> equal dest = own plan
    const Order plan_order = b.plans.at("RUS").for_unit(army("RUS", "E"));
    REQUIRE(plan_order == Order::move(army("RUS", "E"), "B"));

    // a hold instead: plan is a move to a province of utility 1.0 > 0.7 -> 0.0
    CHECK(order_acceptance_estimate(b.ctx(), "RUS", Order::hold(army("RUS", "E"))) == 0.0);
    // its own planned order, destination B empty, same utility -> 0.2
    CHECK(order_acceptance_estimate(b.ctx(), "RUS", plan_order) ==
          doctest::Approx(0.2).epsilon(1e-12));
}

TEST_CASE("threats: anticipated moves into our center or onto our units") {
    Board b({army("AUS", "A"), army("RUS", "E")});
    auto threats = detect_attacks(b.ctx());
    REQUIRE(threats.size() == 1);
    CHECK(threats[0].attacker == "RUS");
    CHECK(threats[0].target == "B");
    CHECK(threats[0].attack_order == Order::move(army("RUS", "E"), "B"));
}

TEST_CASE("no attacks, no threats") {
    Board b({army("AUS", "A")});
    CHECK(detect_attacks(b.ctx()).empty());
    CHECK(detect_conflicts(b.ctx()).empty());
}

TEST_CASE("two converging units give two threats on the same province") {
    Board b({army("AUS", "A"), army("RUS", "E"), army("RUS", "D")});
    auto threats = detect_attacks(b.ctx());
    CHECK(threats.size() == 2);
    for (const auto& t : threats) CHECK(t.target == "B");
}

TEST_CASE("conflicts: both of us anticipate the same destination") {
    Board b({army("AUS", "A"), army("RUS", "E")});
    auto conflicts = detect_conflicts(b.ctx());
    REQUIRE(conflicts.size() == 1);
    CHECK(conflicts[0].dest == "B");
    CHECK(conflicts[0].mine == army("AUS", "A"));
    CHECK(conflicts[0].opponent_unit == army("RUS", "E"));
}

TEST_CASE("neutralize step 1 proposes the attacker's best alternative") {
    Board b({army("AUS", "A"), army("RUS", "E")});
    BiddingState st("AUS");
    st.start_phase(1);
    auto threats = detect_attacks(b.ctx());
    REQUIRE(threats.size() == 1);
    auto deals = neutralize_for_test(b.ctx(), threats[0], st);
    REQUIRE(deals.size() == 1);
    REQUIRE(deals[0].commitments.size() == 1);
    const Order& proposed = deals[0].commitments[0].order;
    CHECK(proposed.unit == army("RUS", "E"));
    CHECK_FALSE(proposed == threats[0].attack_order);
    double alt = order_acceptance_estimate(b.ctx(), "RUS", proposed);
    double attack = order_acceptance_estimate(b.ctx(), "RUS", threats[0].attack_order);
    CHECK(alt > attack);
    CHECK(st.stats().step1_proposals == 1);
    CHECK(st.stats().step1_violations == 0);
}

TEST_CASE("neutralize step 1 can turn the attacker into a defender") {
    // with the attacker very friendly toward us, its best-scoring
    // alternative is to support the unit it meant to dislodge
    Board b({army("AUS", "B"), army("AUS", "A"), army("RUS", "E"), army("TUR", "D")});
    auto threats = detect_attacks(b.ctx());
    REQUIRE(threats.size() == 1);
    CHECK(threats[0].target == "B");
    b.hostility.add("RUS", "AUS", 5);
    b.hostility.add("RUS", "TUR", -10);

    BiddingState st("AUS");
    st.start_phase(2);
    auto deals = neutralize_for_test(b.ctx(), threats[0], st);
    REQUIRE(deals.size() == 1);
    REQUIRE(deals[0].commitments.size() == 1);
    CHECK(deals[0].commitments[0].order ==
          Order::support_hold(army("RUS", "E"), army("AUS", "B")));
    CHECK(st.stats().step1_proposals == 1);
}

TEST_CASE("neutralize step 2 asks a third power to prop up the defender") {
    // Crafted so no alternative order for the attacker scores above the
    // attack: the defender's power is strong (13 centers), the target is
    // the attacker's best province, and supporting the invasion is off the
    // table. TUR's unit next door can support our hold instead.
    std::ostringstream src;
    src << "PROVINCE B inland SC\nPROVINCE E inland\nPROVINCE D inland\n"
           "PROVINCE F inland SC\nPROVINCE G inland SC\nPROVINCE A2 inland\n"
           "PROVINCE A3 inland\n"
           "ADJ B E army\nADJ B D army\nADJ B F army\nADJ D F army\nADJ A2 F army\n"
           "ADJ F G army\n";
    for (int i = 1; i <= 12; ++i) src << "PROVINCE X" << i << " inland SC\n";
    WorldMap m = load_map(src.str());
    UtilityTable util = compute_utilities(m);

    GameState s = state_with({army("AUS", "B"), army("AUS", "A2"), army("AUS", "A3"),
                              army("RUS", "E"), army("TUR", "D")});
    s.sc_owner["B"] = "AUS";
    for (int i = 1; i <= 12; ++i) s.sc_owner["X" + std::to_string(i)] = "AUS";
    s.normalize();
    REQUIRE(s.sc_count("AUS") == 13);

    HostilityMatrix h(std::vector<Power>{"AUS", "RUS", "TUR"});
    std::map<Power, Plan> plans;
    for (const Power& p : s.alive) plans[p] = tactician::anticipate(m, s, p, util);
    Rng rng(5);
    EvaluationContext ctx{m, s, util, h, "AUS", 1901, Phase::Spring, plans, &rng};

    auto threats = detect_attacks(ctx);
    REQUIRE(threats.size() == 1);
    CHECK(threats[0].attack_order == Order::move(army("RUS", "E"), "B"));

    BiddingState st("AUS");
    st.start_phase(3);  // credit 1: one favor may be attached
    auto deals = neutralize_for_test(ctx, threats[0], st);
    REQUIRE(deals.size() == 1);
    REQUIRE(deals[0].commitments.size() == 2);
    CHECK(deals[0].commitments[0].order ==
          Order::support_hold(army("TUR", "D"), army("AUS", "B")));
    // the favor: our unit backs TUR's own move into the valuable province
    CHECK(deals[0].commitments[1].order ==
          Order::support_move(army("AUS", "A2"), army("TUR", "D"), "F"));
    CHECK(st.favors().used == 1);
    CHECK(st.stats().step1_proposals == 0);

    SUBCASE("with no credit the favor is dropped") {
        BiddingState st2("AUS");
        st2.start_phase(2);  // floor(2/3) = 0
        auto deals2 = neutralize_for_test(ctx, threats[0], st2);
        REQUIRE(deals2.size() == 1);
        REQUIRE(deals2[0].commitments.size() == 1);
        CHECK(deals2[0].commitments[0].order ==
              Order::support_hold(army("TUR", "D"), army("AUS", "B")));
    }
}

TEST_CASE("neutralize step 3 falls back to a DMZ when nothing can defend") {
    // the threatened center is vacant and none of our units can reach it
    WorldMap m = load_map(
        "PROVINCE A inland\nPROVINCE B inland SC\nPROVINCE E inland\nPROVINCE F inland\n"
        "ADJ B E army\nADJ A F army\n");
    GameState s = state_with({army("AUS", "A"), army("RUS", "E")});
    s.sc_owner["B"] = "AUS";
    s.normalize();
    UtilityTable util = compute_utilities(m);
    HostilityMatrix h(std::vector<Power>{"AUS", "RUS"});
    std::map<Power, Plan> plans;
    for (const Power& p : s.alive) plans[p] = tactician::anticipate(m, s, p, util);
    Rng rng(3);
    EvaluationContext ctx{m, s, util, h, "AUS", 1901, Phase::Spring, plans, &rng};

    auto threats = detect_attacks(ctx);
    REQUIRE(threats.size() == 1);
    BiddingState st("AUS");
    st.start_phase(1);
    auto deals = neutralize_for_test(ctx, threats[0], st);
    REQUIRE(deals.size() == 1);
    CHECK(deals[0].commitments.empty());
    REQUIRE(deals[0].dmzs.size() == 1);
    CHECK(deals[0].dmzs[0].powers == std::set<Power>{"AUS", "RUS"});
    CHECK(deals[0].dmzs[0].provinces == std::set<ProvinceId>{"B"});
}

TEST_CASE("favor credit is a third of the unit count") {
    Board b({army("AUS", "A"), army("RUS", "E")});
    BiddingState st("AUS");
    st.start_phase(6);
    CHECK(st.favors().credit == 2);
    st.start_phase(5);
    CHECK(st.favors().credit == 1);
    st.start_phase(2);
    CHECK(st.favors().credit == 0);
}

TEST_CASE("resolve_conflict always carries a reservation DMZ") {
    Board b({army("AUS", "A"), army("RUS", "E")});
    BiddingState st("AUS");
    st.start_phase(1);
    auto conflicts = detect_conflicts(b.ctx());
    REQUIRE(conflicts.size() == 1);
    auto [proposals, reservation] = resolve_conflict_for_test(b.ctx(), conflicts[0], st);
    REQUIRE(reservation.dmzs.size() == 1);
    CHECK(reservation.dmzs[0].powers == std::set<Power>{"AUS", "RUS"});
    CHECK(reservation.dmzs[0].provinces == std::set<ProvinceId>{"B"});
}

TEST_CASE("generate_proposals: reservation goes out only after rejections") {
    Board b({army("AUS", "A"), army("RUS", "E")});
    BiddingState st("AUS");
    st.start_phase(1);
    Ledger ledger;

    auto round1 = st.generate_proposals(b.ctx(), ledger);
    REQUIRE_FALSE(round1.empty());
    std::set<std::string> first_ids;
    bool reservation_sent = false;
    for (const Message& m : round1) {
        first_ids.insert(m.deal.id);
        if (!m.deal.dmzs.empty()) reservation_sent = true;
    }
    CHECK_FALSE(reservation_sent);

    // nothing rejected yet: silence
    auto round2 = st.generate_proposals(b.ctx(), ledger);
    CHECK(round2.empty());

    // once every sibling is rejected the reservation DMZ appears
    for (const std::string& id : first_ids) st.note_rejected(id);
    auto round3 = st.generate_proposals(b.ctx(), ledger);
    REQUIRE(round3.size() == 1);
    REQUIRE(round3[0].deal.dmzs.size() == 1);
    CHECK(round3[0].deal.dmzs[0].provinces == std::set<ProvinceId>{"B"});

    auto round4 = st.generate_proposals(b.ctx(), ledger);
    CHECK(round4.empty());  // never twice
}

TEST_CASE("generated deals are consistent with the ledger and current-phase only") {
    Board b({army("AUS", "A"), army("RUS", "E"), army("RUS", "D"), army("TUR", "C")});
    BiddingState st("AUS");
    st.start_phase(1);
    Ledger ledger;
    auto msgs = st.generate_proposals(b.ctx(), ledger);
    for (const Message& m : msgs) {
        CHECK(is_consistent(ledger, m.deal));
        for (const OrderCommitment& oc : m.deal.commitments) {
            CHECK(oc.year == 1901);
            CHECK(oc.phase == Phase::Spring);
        }
        for (const DMZ& dmz : m.deal.dmzs) {
            CHECK(dmz.year == 1901);
            CHECK(dmz.phase == Phase::Spring);
        }
        CHECK(m.sender == "AUS");
    }
}

TEST_CASE("favor commitments never exceed the per-phase credit") {
    Board b({army("AUS", "A"), army("AUS", "C"), army("TUR", "D"), army("RUS", "E")});
    BiddingState st("AUS");
    st.start_phase(6);  // credit 2
    Ledger ledger;
    for (int round = 0; round < 6; ++round) st.generate_proposals(b.ctx(), ledger);
    CHECK(st.favors().used <= 2);
    CHECK(st.stats().favor_cap_violations == 0);
}
