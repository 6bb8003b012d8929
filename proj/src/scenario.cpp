#include "netsel/scenario.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace netsel {

void RatProfile::validate() const {
    for (std::size_t j = 0; j < kAttributeCount; ++j) {
        const Range& r = ranges[j];
        if (!std::isfinite(r.lo) || !std::isfinite(r.hi) || r.lo < 0.0 || r.lo > r.hi)
            throw std::invalid_argument("invalid " + std::string(to_string(rat)) + " range for '" +
                                        std::string(kAttributes[j].key) + "'");
    }
    if (ranges[index_of(AttributeId::CB)].lo <= 0.0 || ranges[index_of(AttributeId::D)].lo <= 0.0 ||
        ranges[index_of(AttributeId::J)].lo <= 0.0 || ranges[index_of(AttributeId::PLR)].lo <= 0.0)
        throw std::invalid_argument(std::string(to_string(rat)) +
                                    ": cost attribute ranges must be strictly positive");
}

ProfileSet builtin_profiles() {
    //                 CB          S           DR              D            J          PLR
    return {{
        {Rat::WiFi,  {{{5, 10},  {50, 50}, {1, 11},     {100, 150}, {10, 20}, {20, 80}}}},
        {Rat::WiMAX, {{{40, 50}, {60, 60}, {1, 60},     {60, 100},  {3, 10},  {20, 80}}}},
        {Rat::LTE,   {{{40, 50}, {60, 60}, {2, 100},    {50, 300},  {3, 12},  {20, 80}}}},
        {Rat::FiveG, {{{90, 90}, {70, 70}, {400, 1000}, {1, 10},    {1, 3},   {5, 20}}}},
    }};
}

void ScenarioConfig::validate() const {
    if (networks_per_iteration < 4 || networks_per_iteration % 4 != 0)
        throw std::invalid_argument("networks per iteration must be a positive multiple of 4");
    for (std::size_t k = 0; k < profiles.size(); ++k) {
        if (profiles[k].rat != kRats[k]) throw std::invalid_argument("profile set out of RAT order");
        profiles[k].validate();
    }
}

DecisionMatrix generate_networks(const ScenarioConfig& cfg, RandomStream& stream) {
    cfg.validate();
    const int per_rat = cfg.instances_per_rat();
    Eigen::MatrixXd values(cfg.networks_per_iteration, static_cast<Eigen::Index>(kAttributeCount));
    std::vector<CandidateLabel> labels;
    labels.reserve(static_cast<std::size_t>(cfg.networks_per_iteration));
    Eigen::Index row = 0;
    for (const RatProfile& p : cfg.profiles) {
        for (int k = 0; k < per_rat; ++k, ++row) {
            for (std::size_t j = 0; j < kAttributeCount; ++j)
                values(row, static_cast<Eigen::Index>(j)) = stream.uniform(p.ranges[j].lo, p.ranges[j].hi);
            labels.push_back({p.rat, k});
        }
    }
    return DecisionMatrix(std::move(values), std::move(labels));
}

}  // namespace netsel
