#pragma once

#include <map>
#include <vector>

#include "diplo/adjudicator.hpp"
#include "diplo/state.hpp"

namespace diplo {

// Pairwise friendliness observed from public adjudication results; higher
// raw value = friendlier. +5 each time a power supports one of the
// observer's units (the attempt counts, cut or not), -10 each time it
// dislodges one of the observer's units or captures an owned center.
// One matrix per game, owned by the driver; agents read it.
class HostilityMatrix {
public:
    HostilityMatrix() = default;
    explicit HostilityMatrix(std::vector<Power> powers);

    const std::vector<Power>& powers() const { return powers_; }
    int raw(const Power& observer, const Power& subject) const;
    void add(const Power& observer, const Power& subject, int delta);  // +5 or -10 only

    // Piecewise linear normalization of raw(observer, subject) against the
    // observer's row: negative values map to [0, 0.5) against the row
    // minimum, non-negative to [0.5, 1] against the row maximum; an
    // all-flat guard returns 0.5.
    double normalized(const Power& observer, const Power& subject) const;

private:
    std::size_t index(const Power& p) const;
    std::vector<Power> powers_;
    std::vector<int> raw_;  // n*n, row = observer
};

// Applies one movement phase's public record to the matrix. For the Fall
// phase, call after retreats with resolution.captures filled so center
// grabs count.
void update_from_resolution(HostilityMatrix& matrix, const GameState& state_before,
                            const std::vector<Order>& orders, const Resolution& res);

// Supply-center count mapped through 0.5*sin(pi*(n-9)/18)+0.5, n clamped
// to [0, 18].
double strength_from_count(int sc_count);
double strength(const GameState& state, const Power& power);

} // namespace diplo
