#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "netsel/model.hpp"
#include "netsel/random.hpp"

namespace netsel {

/// Closed interval; lo == hi is a fixed value.
struct Range {
    double lo = 0.0;
    double hi = 0.0;

    friend bool operator==(const Range&, const Range&) = default;
};

struct RatProfile {
    Rat rat = Rat::WiFi;
    std::array<Range, kAttributeCount> ranges{};

    const Range& operator[](AttributeId id) const { return ranges[index_of(id)]; }
    Range& operator[](AttributeId id) { return ranges[index_of(id)]; }

    /// Throws std::invalid_argument on lo > hi, negative or non-finite bounds.
    void validate() const;
};

using ProfileSet = std::array<RatProfile, 4>;  // indexed by Rat

/// Attribute ranges of the four candidate network types.
ProfileSet builtin_profiles();

inline const RatProfile& profile_for(const ProfileSet& set, Rat rat) {
    return set[static_cast<std::size_t>(rat)];
}

struct ScenarioConfig {
    int networks_per_iteration = 8;
    ProfileSet profiles = builtin_profiles();

    int instances_per_rat() const { return networks_per_iteration / 4; }
    void validate() const;
};

/// Draws instances_per_rat() candidates per RAT, each attribute uniform on
/// its range. Rows are grouped WiFi, WiMAX, LTE, 5G.
DecisionMatrix generate_networks(const ScenarioConfig& cfg, RandomStream& stream);

}  // namespace netsel
