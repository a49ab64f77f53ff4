#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "aacbr/af.hpp"
#include "aacbr/model.hpp"
#include "aacbr/orders.hpp"

// Casebase documents: a JSON text format carrying the schema, the preference
// sequence, the outcome names, the default case and the casebase. Parsing is
// strict: unknown keys are rejected and error messages name the offending
// path. Serialisation is canonical, so parse(serialise(d)) == d.

namespace aacbr {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CasebaseDocument {
    Casebase casebase;
    PreferenceSequence preferences;

    friend bool operator==(const CasebaseDocument&, const CasebaseDocument&) = default;
};

CasebaseDocument parse_casebase(const std::string& text);
std::string serialise_casebase(const CasebaseDocument& doc);

struct NewCase {
    std::string id;
    Characterisation characterisation;
};

// New-case files reuse the case syntax minus the outcome.
std::vector<NewCase> parse_new_cases(const std::string& text, const Casebase& against);

// Labelled cases for evaluation, validated against the given casebase's
// schema and outcome names.
std::vector<Case> parse_labelled_cases(const std::string& text, const Casebase& against);
std::string serialise_labelled_cases(const std::vector<Case>& cases, const Casebase& against);

enum class ExportFormat { Dot, EdgeList };

// Byte-stable graph exports. The edge list has one line per attack,
// "attacker -> target [label]", sorted lexicographically; DOT renders order
// and incoherence attacks solid (labelled with the 1-based order index or
// "inc") and new-case attacks dashed. When a casebase is supplied, DOT nodes
// carry the characterisation and outcome.
std::string export_framework(const ArgumentationFramework& af, ExportFormat format,
                             const Casebase* cb = nullptr,
                             const Characterisation* new_case = nullptr);

}  // namespace aacbr
