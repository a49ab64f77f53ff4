// Random casebase instances for property tests. Everything is driven by a
// caller-owned std::mt19937 so failures replay from a seed.
#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "aacbr/model.hpp"
#include "aacbr/orders.hpp"

namespace testgen {

struct GenConfig {
    std::size_t min_cases = 3;
    std::size_t max_cases = 12;
    std::size_t min_orders = 2;
    std::size_t max_orders = 3;
    // When false, no two generated characterisations (default included) carry
    // different outcomes while comparing equivalent on every order.
    bool allow_incoherent = false;
    bool single_order = false;
    // Schema fixed to one feature set plus one stage prefix, preferences
    // superset-then-prefix. Matches the shape the staged engines accept.
    bool stages_shape = false;
};

struct Instance {
    aacbr::Casebase casebase;
    aacbr::PreferenceSequence preferences;
    aacbr::Characterisation new_case;
};

inline std::size_t pick(std::mt19937& rng, std::size_t lo, std::size_t hi) {
    return lo + rng() % (hi - lo + 1);
}

inline Instance random_instance(std::mt19937& rng, const GenConfig& cfg = {}) {
    constexpr int kMaxStage = 3;
    constexpr long long kMaxInt = 4;

    Instance inst;
    aacbr::Casebase& cb = inst.casebase;

    std::size_t n_orders = cfg.stages_shape ? 2
                           : cfg.single_order
                               ? 1
                               : pick(rng, cfg.min_orders, cfg.max_orders);
    std::vector<std::vector<std::string>> universes(n_orders);
    for (std::size_t i = 0; i < n_orders; ++i) {
        std::string name = "c" + std::to_string(i);
        aacbr::ComponentKind kind;
        if (cfg.stages_shape) {
            kind = i == 0 ? aacbr::ComponentKind::FeatureSet : aacbr::ComponentKind::StagePrefix;
        } else {
            std::size_t roll = pick(rng, 0, 3);
            kind = roll <= 1 ? aacbr::ComponentKind::FeatureSet
                   : roll == 2 ? aacbr::ComponentKind::StagePrefix
                               : aacbr::ComponentKind::Integer;
        }
        cb.schema.push_back({name, kind, kind == aacbr::ComponentKind::StagePrefix ? kMaxStage : 0});
        if (kind == aacbr::ComponentKind::FeatureSet) {
            std::size_t width = pick(rng, 3, 4);
            for (std::size_t f = 0; f < width; ++f) {
                universes[i].push_back(name + "_" + std::string(1, static_cast<char>('a' + f)));
            }
        }
        inst.preferences.orders.push_back({i, aacbr::comparator_for(kind)});
    }

    cb.default_outcome = "neg";
    cb.non_default_outcome = "pos";
    cb.default_case.id = "default";
    cb.default_case.outcome = cb.outcome_for(aacbr::Polarity::Default);
    for (const aacbr::ComponentSchema& component : cb.schema) {
        cb.default_case.characterisation.components.push_back(aacbr::least_value(component));
    }

    // A rich new case first; most cases then mutate downward from it so that
    // the order relations are dense enough to exercise blocking.
    for (std::size_t i = 0; i < n_orders; ++i) {
        switch (cb.schema[i].kind) {
            case aacbr::ComponentKind::FeatureSet: {
                std::vector<std::string> fs;
                for (const std::string& f : universes[i]) {
                    if (pick(rng, 0, 3) != 0) fs.push_back(f);
                }
                inst.new_case.components.push_back(aacbr::FeatureSet(std::move(fs)));
                break;
            }
            case aacbr::ComponentKind::StagePrefix:
                inst.new_case.components.push_back(
                    aacbr::StageValue{static_cast<int>(pick(rng, kMaxStage - 1, kMaxStage))});
                break;
            case aacbr::ComponentKind::Integer:
                inst.new_case.components.push_back(
                    aacbr::IntValue{static_cast<long long>(pick(rng, kMaxInt - 1, kMaxInt))});
                break;
        }
    }

    auto mutate_down = [&](std::size_t i) -> aacbr::ComponentValue {
        const aacbr::ComponentValue& top = inst.new_case.components[i];
        if (const auto* fs = std::get_if<aacbr::FeatureSet>(&top)) {
            std::vector<std::string> kept;
            for (const std::string& f : fs->features) {
                if (pick(rng, 0, 2) != 0) kept.push_back(f);
            }
            return aacbr::FeatureSet(std::move(kept));
        }
        if (const auto* sv = std::get_if<aacbr::StageValue>(&top)) {
            return aacbr::StageValue{static_cast<int>(pick(rng, 0, static_cast<std::size_t>(sv->stage)))};
        }
        const auto& iv = std::get<aacbr::IntValue>(top);
        return aacbr::IntValue{static_cast<long long>(pick(rng, 0, static_cast<std::size_t>(iv.value)))};
    };
    auto fresh = [&](std::size_t i) -> aacbr::ComponentValue {
        switch (cb.schema[i].kind) {
            case aacbr::ComponentKind::FeatureSet: {
                std::vector<std::string> fs;
                for (const std::string& f : universes[i]) {
                    if (pick(rng, 0, 1) == 0) fs.push_back(f);
                }
                return aacbr::FeatureSet(std::move(fs));
            }
            case aacbr::ComponentKind::StagePrefix:
                return aacbr::StageValue{static_cast<int>(pick(rng, 0, kMaxStage))};
            default:
                return aacbr::IntValue{static_cast<long long>(pick(rng, 0, kMaxInt))};
        }
    };

    auto shape_key = [](const aacbr::Characterisation& ch) {
        return aacbr::render_characterisation(ch);
    };
    std::map<std::string, std::string> outcome_by_shape;
    outcome_by_shape[shape_key(cb.default_case.characterisation)] = cb.default_outcome;

    std::size_t n_cases = pick(rng, cfg.min_cases, cfg.max_cases);
    for (std::size_t c = 0; c < n_cases; ++c) {
        aacbr::Case next;
        next.id = "C" + std::string(c < 10 ? "0" : "") + std::to_string(c);
        bool downward = pick(rng, 0, 9) < 6;
        for (std::size_t i = 0; i < n_orders; ++i) {
            next.characterisation.components.push_back(downward ? mutate_down(i) : fresh(i));
        }
        std::string outcome = pick(rng, 0, 1) == 0 ? cb.default_outcome : cb.non_default_outcome;
        if (!cfg.allow_incoherent) {
            auto [it, inserted] = outcome_by_shape.try_emplace(shape_key(next.characterisation), outcome);
            outcome = it->second;
            (void)inserted;
        }
        next.outcome = cb.outcome_named(outcome);
        cb.cases.push_back(std::move(next));
    }
    return inst;
}

}  // namespace testgen
