#pragma once

#include <optional>

#include "diplo/acceptance.hpp"

namespace diplo {
namespace bidding {

using acceptance::EvaluationContext;

// An opponent unit whose anticipated order walks into one of our supply
// centers or onto one of our units.
struct Threat {
    Power attacker;
    Unit unit;
    ProvinceId target;
    Order attack_order;
};

// An opponent unit anticipated to move into the same province our own plan
// moves into.
struct Conflict {
    Unit mine;
    ProvinceId dest;
    Power opponent;
    Unit opponent_unit;
};

// Cap on units promised as favor-returning support in one phase.
struct FavorLedger {
    int credit = 0;                    // floor(own units / 3), set each phase
    int used = 0;
    std::set<ProvinceId> used_units;   // own units already promised

    int remaining() const { return credit - used; }
};

// Mirror-model estimate: how likely `power` is to accept submitting
// `order`, judged with our acceptance functions from its perspective.
double order_acceptance_estimate(const EvaluationContext& ctx, const Power& power,
                                 const Order& order);

// Threats sorted by utility of the attacked province, best first.
std::vector<Threat> detect_attacks(const EvaluationContext& ctx);
// Conflicts sorted by utility of the contested province, best first.
std::vector<Conflict> detect_conflicts(const EvaluationContext& ctx);

// Per-phase proposal bookkeeping plus the game-long deal id counter.
class BiddingState {
public:
    explicit BiddingState(Power me) : me_(std::move(me)) {}

    void start_phase(int own_unit_count);
    void note_rejected(const std::string& deal_id);

    // Runs threat neutralization and conflict resolution against the
    // current context, emitting only deals not proposed before that are
    // consistent with the ledger. Reservation DMZs go out once every
    // sibling proposal has been rejected.
    std::vector<Message> generate_proposals(const EvaluationContext& ctx, const Ledger& ledger);

    const FavorLedger& favors() const { return favors_; }

    struct Stats {
        int step1_proposals = 0;
        int step1_violations = 0;   // estimate not strictly above the hostile order's
        int favor_cap_violations = 0;
        int max_favors_in_phase = 0;
    };
    const Stats& stats() const { return stats_; }

private:
    friend std::vector<BasicDeal> neutralize_for_test(const EvaluationContext&, const Threat&,
                                                      BiddingState&);
    friend std::pair<std::vector<BasicDeal>, BasicDeal> resolve_conflict_for_test(
        const EvaluationContext&, const Conflict&, BiddingState&);

    std::vector<BasicDeal> neutralize(const EvaluationContext& ctx, const Threat& threat);
    std::pair<std::vector<BasicDeal>, BasicDeal> resolve_conflict(const EvaluationContext& ctx,
                                                                  const Conflict& conflict);
    std::optional<OrderCommitment> build_favor_component(const EvaluationContext& ctx,
                                                         const Power& supporter);
    BasicDeal make_deal(const EvaluationContext& ctx, std::vector<OrderCommitment> commitments,
                        std::vector<DMZ> dmzs);
    void out_of_line_check(double proposed, double hostile);
    std::string next_id();

    Power me_;
    int seq_ = 0;
    FavorLedger favors_;
    std::map<std::string, std::string> proposed_contents_;  // content key -> deal id
    std::set<std::string> rejected_ids_;
    struct Reservation {
        BasicDeal deal;
        std::set<std::string> siblings;
        bool sent = false;
    };
    std::map<std::string, Reservation> reservations_;  // keyed by content
    Stats stats_;
};

// test hooks for the single-threat / single-conflict paths
std::vector<BasicDeal> neutralize_for_test(const EvaluationContext& ctx, const Threat& threat,
                                           BiddingState& st);
std::pair<std::vector<BasicDeal>, BasicDeal> resolve_conflict_for_test(
    const EvaluationContext& ctx, const Conflict& conflict, BiddingState& st);

} // namespace bidding
} // namespace diplo
