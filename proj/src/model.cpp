#include "aacbr/model.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace aacbr {

const char* to_string(ComponentKind kind) {
    switch (kind) {
        case ComponentKind::FeatureSet: return "feature_set";
        case ComponentKind::StagePrefix: return "stage_prefix";
        case ComponentKind::Integer: return "integer";
    }
    return "unknown";
}

static std::vector<std::string> sorted_unique(std::vector<std::string> items) {
    std::sort(items.begin(), items.end());
    items.erase(std::unique(items.begin(), items.end()), items.end());
    return items;
}

FeatureSet::FeatureSet(std::initializer_list<std::string> init)
    : features(sorted_unique(std::vector<std::string>(init))) {}

FeatureSet::FeatureSet(std::vector<std::string> init)
    : features(sorted_unique(std::move(init))) {}

bool FeatureSet::contains_all(const FeatureSet& other) const {
    return std::includes(features.begin(), features.end(),
                         other.features.begin(), other.features.end());
}

bool FeatureSet::contains(const std::string& feature) const {
    return std::binary_search(features.begin(), features.end(), feature);
}

ComponentKind kind_of(const ComponentValue& value) {
    if (std::holds_alternative<FeatureSet>(value)) return ComponentKind::FeatureSet;
    if (std::holds_alternative<StageValue>(value)) return ComponentKind::StagePrefix;
    return ComponentKind::Integer;
}

ComponentValue least_value(const ComponentSchema& schema, long long integer_floor) {
    switch (schema.kind) {
        case ComponentKind::FeatureSet: return FeatureSet{};
        case ComponentKind::StagePrefix: return StageValue{0};
        case ComponentKind::Integer: return IntValue{integer_floor};
    }
    throw SchemaError("unknown component kind");
}

Outcome Casebase::outcome_named(const std::string& name) const {
    if (name == default_outcome) return Outcome{Polarity::Default, name};
    if (name == non_default_outcome) return Outcome{Polarity::NonDefault, name};
    throw SchemaError("unknown outcome name: " + name);
}

Outcome Casebase::outcome_for(Polarity polarity) const {
    return polarity == Polarity::Default
               ? Outcome{Polarity::Default, default_outcome}
               : Outcome{Polarity::NonDefault, non_default_outcome};
}

static void check_case(const Casebase& cb, const Case& c, bool is_default,
                       std::vector<Violation>& out) {
    if (c.characterisation.components.size() != cb.schema.size()) {
        std::ostringstream msg;
        msg << "characterisation has " << c.characterisation.components.size()
            << " components, schema has " << cb.schema.size();
        out.push_back({c.id, "arity", msg.str()});
        return;
    }
    for (std::size_t i = 0; i < cb.schema.size(); ++i) {
        const ComponentSchema& spec = cb.schema[i];
        const ComponentValue& value = c.characterisation.components[i];
        if (kind_of(value) != spec.kind) {
            out.push_back({c.id, "component-kind",
                           "component '" + spec.name + "' expects " + to_string(spec.kind) +
                               ", got " + to_string(kind_of(value))});
            continue;
        }
        if (spec.kind == ComponentKind::StagePrefix) {
            int stage = std::get<StageValue>(value).stage;
            if (stage < 0 || stage > spec.max_stage) {
                std::ostringstream msg;
                msg << "stage " << stage << " outside [0, " << spec.max_stage << "] for component '"
                    << spec.name << "'";
                out.push_back({c.id, "stage-range", msg.str()});
            }
        }
    }
    if (c.outcome.name != cb.default_outcome && c.outcome.name != cb.non_default_outcome) {
        out.push_back({c.id, "outcome-name", "unknown outcome '" + c.outcome.name + "'"});
    } else {
        Polarity expected =
            c.outcome.name == cb.default_outcome ? Polarity::Default : Polarity::NonDefault;
        if (c.outcome.polarity != expected) {
            out.push_back({c.id, "outcome-polarity",
                           "outcome '" + c.outcome.name + "' tagged with the wrong polarity"});
        }
    }
    if (is_default && c.outcome.polarity != Polarity::Default) {
        out.push_back({c.id, "default-outcome", "default case must carry the default outcome"});
    }
}

std::vector<Violation> validate_casebase(const Casebase& cb) {
    std::vector<Violation> out;

    std::set<std::string> component_names;
    for (const ComponentSchema& spec : cb.schema) {
        if (!component_names.insert(spec.name).second) {
            out.push_back({"", "schema-names", "duplicate component name '" + spec.name + "'"});
        }
        if (spec.kind == ComponentKind::StagePrefix && spec.max_stage < 0) {
            out.push_back({"", "schema-stage", "component '" + spec.name + "' has negative max stage"});
        }
    }
    if (cb.schema.empty()) {
        out.push_back({"", "schema-empty", "schema must have at least one component"});
    }
    if (cb.default_outcome == cb.non_default_outcome) {
        out.push_back({"", "outcome-names", "the two outcome names must differ"});
    }

    std::set<std::string> ids;
    ids.insert(cb.default_case.id);
    check_case(cb, cb.default_case, true, out);
    for (const Case& c : cb.cases) {
        if (!ids.insert(c.id).second) {
            out.push_back({c.id, "duplicate-id", "case id '" + c.id + "' already used"});
        }
        check_case(cb, c, false, out);
    }
    return out;
}

std::string render_value(const ComponentValue& value) {
    if (const auto* fs = std::get_if<FeatureSet>(&value)) {
        std::string out = "{";
        for (std::size_t i = 0; i < fs->features.size(); ++i) {
            if (i > 0) out += ",";
            out += fs->features[i];
        }
        return out + "}";
    }
    if (const auto* sv = std::get_if<StageValue>(&value)) return std::to_string(sv->stage);
    return std::to_string(std::get<IntValue>(value).value);
}

std::string render_characterisation(const Characterisation& ch) {
    std::string out = "(";
    for (std::size_t i = 0; i < ch.components.size(); ++i) {
        if (i > 0) out += ", ";
        out += render_value(ch.components[i]);
    }
    return out + ")";
}

}  // namespace aacbr
