#include "aacbr/io.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "json.hpp"

namespace aacbr {

using Json = nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ParseError(where + ": " + what);
}

void reject_unknown_keys(const Json& object, const std::string& where,
                         std::initializer_list<const char*> allowed) {
    for (const auto& [key, value] : object.items()) {
        bool known = false;
        for (const char* name : allowed) known = known || key == name;
        if (!known) fail(where, "unknown key '" + key + "'");
    }
}

const Json& require(const Json& object, const std::string& where, const char* key) {
    auto it = object.find(key);
    if (it == object.end()) fail(where, std::string("missing key '") + key + "'");
    return *it;
}

std::string require_string(const Json& object, const std::string& where, const char* key) {
    const Json& value = require(object, where, key);
    if (!value.is_string()) fail(where + "." + key, "expected a string");
    return value.get<std::string>();
}

std::vector<ComponentSchema> parse_schema(const Json& node) {
    if (!node.is_array() || node.empty()) fail("schema", "expected a non-empty array");
    std::vector<ComponentSchema> schema;
    for (std::size_t i = 0; i < node.size(); ++i) {
        std::string where = "schema[" + std::to_string(i) + "]";
        const Json& entry = node[i];
        if (!entry.is_object()) fail(where, "expected an object");
        reject_unknown_keys(entry, where, {"name", "kind", "max_stage"});
        ComponentSchema spec;
        spec.name = require_string(entry, where, "name");
        std::string kind = require_string(entry, where, "kind");
        if (kind == "feature_set") {
            spec.kind = ComponentKind::FeatureSet;
        } else if (kind == "stage_prefix") {
            spec.kind = ComponentKind::StagePrefix;
        } else if (kind == "integer") {
            spec.kind = ComponentKind::Integer;
        } else {
            fail(where + ".kind", "unknown kind '" + kind + "'");
        }
        if (spec.kind == ComponentKind::StagePrefix) {
            const Json& max_stage = require(entry, where, "max_stage");
            if (!max_stage.is_number_integer()) fail(where + ".max_stage", "expected an integer");
            spec.max_stage = max_stage.get<int>();
        } else if (entry.contains("max_stage")) {
            fail(where, "max_stage only applies to stage_prefix components");
        }
        schema.push_back(std::move(spec));
    }
    return schema;
}

ComponentValue parse_component_value(const Json& node, const ComponentSchema& spec,
                                     const std::string& where) {
    switch (spec.kind) {
        case ComponentKind::FeatureSet: {
            if (!node.is_array()) fail(where, "expected an array of feature names");
            std::vector<std::string> features;
            for (const Json& item : node) {
                if (!item.is_string()) fail(where, "expected feature names as strings");
                features.push_back(item.get<std::string>());
            }
            std::size_t before = features.size();
            FeatureSet set(std::move(features));
            if (set.size() != before) fail(where, "duplicate feature");
            return set;
        }
        case ComponentKind::StagePrefix: {
            if (!node.is_number_integer()) fail(where, "expected a stage number");
            return StageValue{node.get<int>()};
        }
        case ComponentKind::Integer: {
            if (!node.is_number_integer()) fail(where, "expected an integer");
            return IntValue{node.get<long long>()};
        }
    }
    fail(where, "unknown component kind");
}

Characterisation parse_components(const Json& node, const std::vector<ComponentSchema>& schema,
                                  const std::string& where) {
    if (!node.is_object()) fail(where, "expected an object keyed by component name");
    for (const auto& [key, value] : node.items()) {
        bool known = false;
        for (const ComponentSchema& spec : schema) known = known || spec.name == key;
        if (!known) fail(where, "unknown component '" + key + "'");
    }
    Characterisation ch;
    for (const ComponentSchema& spec : schema) {
        auto it = node.find(spec.name);
        if (it == node.end()) fail(where, "missing component '" + spec.name + "'");
        ch.components.push_back(parse_component_value(*it, spec, where + "." + spec.name));
    }
    return ch;
}

struct CaseShape {
    std::string id;
    Characterisation characterisation;
    std::string outcome;  // empty when absent
};

CaseShape parse_case_shape(const Json& node, const std::vector<ComponentSchema>& schema,
                           const std::string& where, bool with_outcome) {
    if (!node.is_object()) fail(where, "expected an object");
    if (with_outcome) {
        reject_unknown_keys(node, where, {"id", "components", "outcome"});
    } else {
        reject_unknown_keys(node, where, {"id", "components"});
    }
    CaseShape shape;
    shape.id = require_string(node, where, "id");
    if (shape.id.empty()) fail(where + ".id", "id must be non-empty");
    shape.characterisation = parse_components(require(node, where, "components"), schema,
                                              where + ".components");
    if (with_outcome) shape.outcome = require_string(node, where, "outcome");
    return shape;
}

Json render_components(const Characterisation& ch, const std::vector<ComponentSchema>& schema) {
    Json out = Json::object();
    for (std::size_t i = 0; i < schema.size(); ++i) {
        const ComponentValue& value = ch.components[i];
        if (const auto* fs = std::get_if<FeatureSet>(&value)) {
            out[schema[i].name] = fs->features;
        } else if (const auto* sv = std::get_if<StageValue>(&value)) {
            out[schema[i].name] = sv->stage;
        } else {
            out[schema[i].name] = std::get<IntValue>(value).value;
        }
    }
    return out;
}

Json parse_text(const std::string& text, const char* what) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& err) {
        throw ParseError(std::string(what) + ": " + err.what());
    }
}

}  // namespace

CasebaseDocument parse_casebase(const std::string& text) {
    Json root = parse_text(text, "casebase document");
    if (!root.is_object()) fail("casebase document", "expected a JSON object");
    reject_unknown_keys(root, "casebase document",
                        {"schema", "preferences", "outcomes", "default_case", "cases"});

    CasebaseDocument doc;
    Casebase& cb = doc.casebase;
    cb.schema = parse_schema(require(root, "casebase document", "schema"));

    const Json& outcomes = require(root, "casebase document", "outcomes");
    if (!outcomes.is_object()) fail("outcomes", "expected an object");
    reject_unknown_keys(outcomes, "outcomes", {"default", "non_default"});
    cb.default_outcome = require_string(outcomes, "outcomes", "default");
    cb.non_default_outcome = require_string(outcomes, "outcomes", "non_default");
    if (cb.default_outcome == cb.non_default_outcome) {
        fail("outcomes", "the two outcome names must differ");
    }

    const Json& preferences = require(root, "casebase document", "preferences");
    if (!preferences.is_array() || preferences.empty()) {
        fail("preferences", "expected a non-empty array of component names");
    }
    for (std::size_t i = 0; i < preferences.size(); ++i) {
        const Json& name = preferences[i];
        std::string where = "preferences[" + std::to_string(i) + "]";
        if (!name.is_string()) fail(where, "expected a component name");
        std::size_t slot = cb.schema.size();
        for (std::size_t s = 0; s < cb.schema.size(); ++s) {
            if (cb.schema[s].name == name.get<std::string>()) slot = s;
        }
        if (slot == cb.schema.size()) {
            fail(where, "unknown component '" + name.get<std::string>() + "'");
        }
        doc.preferences.orders.push_back({slot, comparator_for(cb.schema[slot].kind)});
    }

    const Json& cases = require(root, "casebase document", "cases");
    if (!cases.is_array()) fail("cases", "expected an array");
    for (std::size_t i = 0; i < cases.size(); ++i) {
        std::string where = "cases[" + std::to_string(i) + "]";
        CaseShape shape = parse_case_shape(cases[i], cb.schema, where, true);
        if (shape.outcome != cb.default_outcome && shape.outcome != cb.non_default_outcome) {
            fail(where + ".outcome", "unknown outcome '" + shape.outcome + "'");
        }
        cb.cases.push_back(
            {shape.id, std::move(shape.characterisation), cb.outcome_named(shape.outcome)});
    }

    if (root.contains("default_case")) {
        CaseShape shape = parse_case_shape(root["default_case"], cb.schema, "default_case", false);
        cb.default_case = {shape.id, std::move(shape.characterisation),
                           cb.outcome_for(Polarity::Default)};
    } else {
        // Least characterisation; integer components floor at the casebase
        // minimum so the default stays below every case.
        cb.default_case.id = "default";
        cb.default_case.outcome = cb.outcome_for(Polarity::Default);
        for (std::size_t i = 0; i < cb.schema.size(); ++i) {
            long long floor = 0;
            if (cb.schema[i].kind == ComponentKind::Integer) {
                for (const Case& c : cb.cases) {
                    const auto* iv = std::get_if<IntValue>(&c.characterisation.components[i]);
                    if (iv) floor = std::min(floor, iv->value);
                }
            }
            cb.default_case.characterisation.components.push_back(
                least_value(cb.schema[i], floor));
        }
    }

    std::vector<Violation> violations = validate_casebase(cb);
    std::vector<Violation> pref_violations = doc.preferences.validate(cb.schema);
    violations.insert(violations.end(), pref_violations.begin(), pref_violations.end());
    if (!violations.empty()) {
        std::ostringstream msg;
        for (std::size_t i = 0; i < violations.size(); ++i) {
            if (i > 0) msg << "; ";
            if (!violations[i].case_id.empty()) msg << violations[i].case_id << ": ";
            msg << violations[i].message;
        }
        fail("casebase document", msg.str());
    }
    return doc;
}

std::string serialise_casebase(const CasebaseDocument& doc) {
    const Casebase& cb = doc.casebase;
    Json root = Json::object();
    root["schema"] = Json::array();
    for (const ComponentSchema& spec : cb.schema) {
        Json entry = Json::object();
        entry["name"] = spec.name;
        entry["kind"] = to_string(spec.kind);
        if (spec.kind == ComponentKind::StagePrefix) entry["max_stage"] = spec.max_stage;
        root["schema"].push_back(std::move(entry));
    }
    root["preferences"] = Json::array();
    for (const PreorderSpec& spec : doc.preferences.orders) {
        root["preferences"].push_back(cb.schema[spec.component].name);
    }
    root["outcomes"] = Json::object();
    root["outcomes"]["default"] = cb.default_outcome;
    root["outcomes"]["non_default"] = cb.non_default_outcome;
    root["default_case"] = Json::object();
    root["default_case"]["id"] = cb.default_case.id;
    root["default_case"]["components"] =
        render_components(cb.default_case.characterisation, cb.schema);
    root["cases"] = Json::array();
    for (const Case& c : cb.cases) {
        Json entry = Json::object();
        entry["id"] = c.id;
        entry["components"] = render_components(c.characterisation, cb.schema);
        entry["outcome"] = c.outcome.name;
        root["cases"].push_back(std::move(entry));
    }
    return root.dump(2) + "\n";
}

std::vector<NewCase> parse_new_cases(const std::string& text, const Casebase& against) {
    Json root = parse_text(text, "new-case document");
    if (!root.is_object()) fail("new-case document", "expected a JSON object");
    reject_unknown_keys(root, "new-case document", {"cases"});
    const Json& cases = require(root, "new-case document", "cases");
    if (!cases.is_array()) fail("cases", "expected an array");

    std::vector<NewCase> out;
    std::map<std::string, bool> seen;
    for (std::size_t i = 0; i < cases.size(); ++i) {
        std::string where = "cases[" + std::to_string(i) + "]";
        CaseShape shape = parse_case_shape(cases[i], against.schema, where, false);
        if (seen[shape.id]) fail(where + ".id", "duplicate id '" + shape.id + "'");
        seen[shape.id] = true;
        out.push_back({shape.id, std::move(shape.characterisation)});
    }
    return out;
}

std::vector<Case> parse_labelled_cases(const std::string& text, const Casebase& against) {
    Json root = parse_text(text, "labelled-case document");
    if (!root.is_object()) fail("labelled-case document", "expected a JSON object");
    reject_unknown_keys(root, "labelled-case document", {"cases"});
    const Json& cases = require(root, "labelled-case document", "cases");
    if (!cases.is_array()) fail("cases", "expected an array");

    std::vector<Case> out;
    std::map<std::string, bool> seen;
    for (std::size_t i = 0; i < cases.size(); ++i) {
        std::string where = "cases[" + std::to_string(i) + "]";
        CaseShape shape = parse_case_shape(cases[i], against.schema, where, true);
        if (seen[shape.id]) fail(where + ".id", "duplicate id '" + shape.id + "'");
        seen[shape.id] = true;
        if (shape.outcome != against.default_outcome &&
            shape.outcome != against.non_default_outcome) {
            fail(where + ".outcome", "unknown outcome '" + shape.outcome + "'");
        }
        out.push_back(
            {shape.id, std::move(shape.characterisation), against.outcome_named(shape.outcome)});
    }
    return out;
}

std::string serialise_labelled_cases(const std::vector<Case>& cases, const Casebase& against) {
    Json root = Json::object();
    root["cases"] = Json::array();
    for (const Case& c : cases) {
        Json entry = Json::object();
        entry["id"] = c.id;
        entry["components"] = render_components(c.characterisation, against.schema);
        entry["outcome"] = c.outcome.name;
        root["cases"].push_back(std::move(entry));
    }
    return root.dump(2) + "\n";
}

static std::string escape(const std::string& text) {
    std::string out;
    for (char ch : text) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    return out;
}

static std::string quote(const std::string& id) { return "\"" + escape(id) + "\""; }

// Multi-line node label: parts joined by DOT line breaks.
static std::string quote_label(const std::vector<std::string>& parts) {
    std::string out = "\"";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) out += "\\n";
        out += escape(parts[i]);
    }
    return out + "\"";
}

std::string export_framework(const ArgumentationFramework& af, ExportFormat format,
                             const Casebase* cb, const Characterisation* new_case) {
    if (format == ExportFormat::EdgeList) {
        std::vector<std::string> lines;
        for (const AttackEdge& e : af.attacks) {
            lines.push_back(e.attacker.id + " -> " + e.target.id + " [" + e.label.display() + "]");
        }
        std::sort(lines.begin(), lines.end());
        std::string out;
        for (const std::string& line : lines) out += line + "\n";
        return out;
    }

    std::map<std::string, const Case*> by_id;
    if (cb) {
        by_id[cb->default_case.id] = &cb->default_case;
        for (const Case& c : cb->cases) by_id[c.id] = &c;
    }
    std::ostringstream out;
    out << "digraph framework {\n";
    out << "  rankdir=BT;\n";
    out << "  node [shape=box];\n";
    for (const ArgumentRef& arg : af.arguments) {
        out << "  " << quote(arg.id);
        std::vector<std::string> label{arg.id};
        if (auto it = by_id.find(arg.id); cb && it != by_id.end()) {
            label.push_back(render_characterisation(it->second->characterisation));
            label.push_back(it->second->outcome.name);
        } else if (arg.kind == ArgKind::NewCase && new_case) {
            label.push_back(render_characterisation(*new_case));
            label.push_back("?");
        }
        out << " [label=" << quote_label(label) << "];\n";
    }
    for (const AttackEdge& e : af.attacks) {
        out << "  " << quote(e.attacker.id) << " -> " << quote(e.target.id);
        if (e.label.kind == AttackKind::NewCase) {
            out << " [style=dashed]";
        } else {
            out << " [label=" << quote(e.label.display()) << "]";
        }
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace aacbr
