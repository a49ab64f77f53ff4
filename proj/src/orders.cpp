#include "aacbr/orders.hpp"

#include <set>
#include <stdexcept>
#include <string>

namespace aacbr {

const char* to_string(ComparatorKind kind) {
    switch (kind) {
        case ComparatorKind::SupersetOfFeatures: return "superset_of_features";
        case ComparatorKind::LongerStagePrefix: return "longer_stage_prefix";
        case ComparatorKind::GreaterEqualInteger: return "greater_equal_integer";
    }
    return "unknown";
}

ComparatorKind comparator_for(ComponentKind kind) {
    switch (kind) {
        case ComponentKind::FeatureSet: return ComparatorKind::SupersetOfFeatures;
        case ComponentKind::StagePrefix: return ComparatorKind::LongerStagePrefix;
        case ComponentKind::Integer: return ComparatorKind::GreaterEqualInteger;
    }
    throw SchemaError("unknown component kind");
}

const char* to_string(CompareResult r) {
    switch (r) {
        case CompareResult::Greater: return "greater";
        case CompareResult::Less: return "less";
        case CompareResult::Equivalent: return "equivalent";
        case CompareResult::Incomparable: return "incomparable";
    }
    return "unknown";
}

std::vector<Violation> PreferenceSequence::validate(
    const std::vector<ComponentSchema>& schema) const {
    std::vector<Violation> out;
    if (orders.empty()) {
        out.push_back({"", "preferences-empty", "preference sequence must be non-empty"});
    }
    std::set<std::size_t> seen;
    for (std::size_t i = 0; i < orders.size(); ++i) {
        const PreorderSpec& spec = orders[i];
        std::string where = "order " + std::to_string(i + 1);
        if (spec.component >= schema.size()) {
            out.push_back({"", "preferences-component", where + " addresses component " +
                                                            std::to_string(spec.component) +
                                                            " beyond the schema"});
            continue;
        }
        if (!seen.insert(spec.component).second) {
            out.push_back({"", "preferences-duplicate",
                           where + " rebinds component '" + schema[spec.component].name + "'"});
        }
        if (comparator_for(schema[spec.component].kind) != spec.comparator) {
            out.push_back({"", "preferences-kind",
                           where + " pairs comparator " + to_string(spec.comparator) +
                               " with component kind " + to_string(schema[spec.component].kind)});
        }
    }
    return out;
}

static const ComponentValue& component_at(const Characterisation& ch, std::size_t index) {
    if (index >= ch.components.size()) {
        throw SchemaError("comparator addresses component " + std::to_string(index) +
                          " beyond the characterisation arity");
    }
    return ch.components[index];
}

template <typename T>
static CompareResult compare_total(const T& a, const T& b) {
    if (a == b) return CompareResult::Equivalent;
    return a > b ? CompareResult::Greater : CompareResult::Less;
}

CompareResult compare(const PreorderSpec& spec, const Characterisation& x,
                      const Characterisation& y) {
    const ComponentValue& vx = component_at(x, spec.component);
    const ComponentValue& vy = component_at(y, spec.component);
    switch (spec.comparator) {
        case ComparatorKind::SupersetOfFeatures: {
            const auto* fx = std::get_if<FeatureSet>(&vx);
            const auto* fy = std::get_if<FeatureSet>(&vy);
            if (!fx || !fy) throw SchemaError("superset comparator needs feature-set components");
            bool sup = fx->contains_all(*fy);
            bool sub = fy->contains_all(*fx);
            if (sup && sub) return CompareResult::Equivalent;
            if (sup) return CompareResult::Greater;
            if (sub) return CompareResult::Less;
            return CompareResult::Incomparable;
        }
        case ComparatorKind::LongerStagePrefix: {
            const auto* sx = std::get_if<StageValue>(&vx);
            const auto* sy = std::get_if<StageValue>(&vy);
            if (!sx || !sy) throw SchemaError("stage comparator needs stage-prefix components");
            return compare_total(sx->stage, sy->stage);
        }
        case ComparatorKind::GreaterEqualInteger: {
            const auto* ix = std::get_if<IntValue>(&vx);
            const auto* iy = std::get_if<IntValue>(&vy);
            if (!ix || !iy) throw SchemaError("integer comparator needs integer components");
            return compare_total(ix->value, iy->value);
        }
    }
    throw SchemaError("unknown comparator kind");
}

static void check_range(const PreferenceSequence& prefs, std::size_t from, std::size_t to) {
    if (from > to || to > prefs.size()) {
        throw std::out_of_range("order range [" + std::to_string(from) + ", " +
                                std::to_string(to) + ") outside 0.." +
                                std::to_string(prefs.size()));
    }
}

bool geq_range(const PreferenceSequence& prefs, const Characterisation& x,
               const Characterisation& y, std::size_t from, std::size_t to) {
    check_range(prefs, from, to);
    for (std::size_t i = from; i < to; ++i) {
        if (!is_geq(compare(prefs.at(i), x, y))) return false;
    }
    return true;
}

bool eq_range(const PreferenceSequence& prefs, const Characterisation& x,
              const Characterisation& y, std::size_t from, std::size_t to) {
    check_range(prefs, from, to);
    for (std::size_t i = from; i < to; ++i) {
        if (compare(prefs.at(i), x, y) != CompareResult::Equivalent) return false;
    }
    return true;
}

bool strict_in_range(const PreferenceSequence& prefs, const Characterisation& x,
                     const Characterisation& y, std::size_t from, std::size_t to) {
    check_range(prefs, from, to);
    for (std::size_t i = from; i < to; ++i) {
        if (compare(prefs.at(i), x, y) == CompareResult::Greater) return true;
    }
    return false;
}

bool geq_all(const PreferenceSequence& prefs, const Characterisation& x,
             const Characterisation& y) {
    return geq_range(prefs, x, y, 0, prefs.size());
}

bool eq_all(const PreferenceSequence& prefs, const Characterisation& x,
            const Characterisation& y) {
    return eq_range(prefs, x, y, 0, prefs.size());
}

FirstDivergence first_strict_order(const PreferenceSequence& prefs, const Characterisation& x,
                                   const Characterisation& y) {
    for (std::size_t i = 0; i < prefs.size(); ++i) {
        CompareResult r = compare(prefs.at(i), x, y);
        if (r != CompareResult::Equivalent) return {i, r};
    }
    return {std::nullopt, CompareResult::Equivalent};
}

}  // namespace aacbr
