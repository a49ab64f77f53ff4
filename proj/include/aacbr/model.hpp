#pragma once

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

// Core domain model: outcomes, characterisation components, cases and
// casebases. All values are immutable after construction and safe to share
// across threads.

namespace aacbr {

// Thrown when a value is used against a schema position of another kind.
struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Polarity { Default, NonDefault };

struct Outcome {
    Polarity polarity = Polarity::Default;
    std::string name;

    friend bool operator==(const Outcome&, const Outcome&) = default;
};

enum class ComponentKind { FeatureSet, StagePrefix, Integer };

const char* to_string(ComponentKind kind);

struct ComponentSchema {
    std::string name;
    ComponentKind kind = ComponentKind::FeatureSet;
    int max_stage = 0;  // StagePrefix only

    friend bool operator==(const ComponentSchema&, const ComponentSchema&) = default;
};

// Finite set of feature identifiers, kept sorted and duplicate-free.
struct FeatureSet {
    std::vector<std::string> features;

    FeatureSet() = default;
    FeatureSet(std::initializer_list<std::string> init);
    explicit FeatureSet(std::vector<std::string> init);

    bool contains_all(const FeatureSet& other) const;
    bool contains(const std::string& feature) const;
    std::size_t size() const { return features.size(); }

    friend bool operator==(const FeatureSet&, const FeatureSet&) = default;
};

// Prefix length k of the stage sequence s_1..s_max; k = 0 is the empty
// prefix. The prefix relation is exactly <= on k.
struct StageValue {
    int stage = 0;

    friend bool operator==(const StageValue&, const StageValue&) = default;
};

struct IntValue {
    long long value = 0;

    friend bool operator==(const IntValue&, const IntValue&) = default;
};

using ComponentValue = std::variant<FeatureSet, StageValue, IntValue>;

ComponentKind kind_of(const ComponentValue& value);

// Least element of a component under its natural order: the empty set,
// stage 0, or a caller-chosen floor for integers.
ComponentValue least_value(const ComponentSchema& schema, long long integer_floor = 0);

struct Characterisation {
    std::vector<ComponentValue> components;

    friend bool operator==(const Characterisation&, const Characterisation&) = default;
};

struct Case {
    std::string id;
    Characterisation characterisation;
    Outcome outcome;

    friend bool operator==(const Case&, const Case&) = default;
};

struct Casebase {
    std::vector<ComponentSchema> schema;
    std::string default_outcome;      // display name of the default outcome
    std::string non_default_outcome;  // display name of the other outcome
    Case default_case;                // distinguished argument, polarity Default
    std::vector<Case> cases;          // D; excludes the default case

    Outcome outcome_named(const std::string& name) const;
    Outcome outcome_for(Polarity polarity) const;

    friend bool operator==(const Casebase&, const Casebase&) = default;
};

struct Violation {
    std::string case_id;  // empty for casebase-level violations
    std::string rule;
    std::string message;
};

// Diagnostic check of every structural invariant: schema well-formedness,
// per-case arity and kinds, stage ranges, id uniqueness, outcome naming.
// Empty result means the casebase is well formed.
std::vector<Violation> validate_casebase(const Casebase& cb);

std::string render_value(const ComponentValue& value);
std::string render_characterisation(const Characterisation& ch);

}  // namespace aacbr
