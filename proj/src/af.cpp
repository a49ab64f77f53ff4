#include "aacbr/af.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace aacbr {

std::string AttackLabel::display() const {
    switch (kind) {
        case AttackKind::Order: return std::to_string(order + 1);
        case AttackKind::Incoherent: return "inc";
        case AttackKind::NewCase: return "new";
    }
    return "?";
}

bool canonical_less(const AttackEdge& a, const AttackEdge& b) {
    if (a.attacker.id != b.attacker.id) return a.attacker.id < b.attacker.id;
    if (a.target.id != b.target.id) return a.target.id < b.target.id;
    if (a.label.kind != b.label.kind) return a.label.kind < b.label.kind;
    return a.label.order < b.label.order;
}

void ArgumentationFramework::canonicalise() {
    std::sort(arguments.begin(), arguments.end());
    std::sort(attacks.begin(), attacks.end(), canonical_less);
    attacks.erase(std::unique(attacks.begin(), attacks.end()), attacks.end());
}

const ArgumentRef* ArgumentationFramework::find(const std::string& id) const {
    auto it = std::lower_bound(arguments.begin(), arguments.end(), id,
                               [](const ArgumentRef& a, const std::string& key) { return a.id < key; });
    if (it == arguments.end() || it->id != id) return nullptr;
    return &*it;
}

std::vector<Violation> ArgumentationFramework::validate() const {
    std::vector<Violation> out;
    std::set<std::string> ids;
    std::size_t defaults = 0;
    std::size_t new_cases = 0;
    for (const ArgumentRef& arg : arguments) {
        if (!ids.insert(arg.id).second) {
            out.push_back({arg.id, "duplicate-argument", "argument id used twice"});
        }
        if (arg.kind == ArgKind::Default) ++defaults;
        if (arg.kind == ArgKind::NewCase) ++new_cases;
    }
    if (defaults > 1) out.push_back({"", "default-singleton", "more than one default argument"});
    if (new_cases > 1) out.push_back({"", "new-case-singleton", "more than one new-case argument"});
    if (!std::is_sorted(arguments.begin(), arguments.end())) {
        out.push_back({"", "argument-order", "arguments are not sorted by id"});
    }
    for (const AttackEdge& e : attacks) {
        for (const ArgumentRef* end : {&e.attacker, &e.target}) {
            if (!ids.count(end->id)) {
                out.push_back({end->id, "dangling-edge", "attack endpoint not among the arguments"});
            }
        }
    }
    return out;
}

bool GroundedResult::contains(const ArgumentRef& arg) const { return contains_id(arg.id); }

bool GroundedResult::contains_id(const std::string& id) const {
    return std::binary_search(grounded.begin(), grounded.end(), ArgumentRef{ArgKind::Case, id});
}

bool GroundedResult::contains_kind(ArgKind kind) const {
    for (const ArgumentRef& arg : grounded) {
        if (arg.kind == kind) return true;
    }
    return false;
}

namespace {

struct Indexed {
    std::map<std::string, std::size_t> index;
    std::vector<std::vector<std::size_t>> attackers;  // per target
    std::vector<std::vector<std::size_t>> targets;    // per attacker
};

Indexed index_framework(const ArgumentationFramework& af,
                        std::initializer_list<AttackKind> ignore = {}) {
    Indexed ix;
    for (std::size_t i = 0; i < af.arguments.size(); ++i) ix.index[af.arguments[i].id] = i;
    ix.attackers.resize(af.arguments.size());
    ix.targets.resize(af.arguments.size());
    for (const AttackEdge& e : af.attacks) {
        bool skip = false;
        for (AttackKind kind : ignore) skip = skip || e.label.kind == kind;
        if (skip) continue;
        std::size_t a = ix.index.at(e.attacker.id);
        std::size_t t = ix.index.at(e.target.id);
        ix.attackers[t].push_back(a);
        ix.targets[a].push_back(t);
    }
    return ix;
}

}  // namespace

GroundedResult grounded_extension(const ArgumentationFramework& af) {
    Indexed ix = index_framework(af);
    std::size_t n = af.arguments.size();

    GroundedResult result;
    std::vector<bool> in_g(n, false);
    while (true) {
        // attacked[x]: some member of the current set attacks x.
        std::vector<bool> attacked(n, false);
        for (std::size_t a = 0; a < n; ++a) {
            if (!in_g[a]) continue;
            for (std::size_t t : ix.targets[a]) attacked[t] = true;
        }
        std::vector<bool> next(n, false);
        for (std::size_t a = 0; a < n; ++a) {
            bool defended = true;
            for (std::size_t b : ix.attackers[a]) {
                if (!attacked[b]) {
                    defended = false;
                    break;
                }
            }
            next[a] = defended;
        }
        std::vector<ArgumentRef> layer;
        for (std::size_t a = 0; a < n; ++a) {
            if (next[a]) layer.push_back(af.arguments[a]);
        }
        bool changed = next != in_g;
        if (!result.layers.empty() && !changed) break;
        result.layers.push_back(std::move(layer));
        if (!changed) break;  // G_0 already the fixpoint
        in_g = std::move(next);
    }
    result.grounded = result.layers.back();
    return result;
}

bool is_acyclic(const ArgumentationFramework& af, std::initializer_list<AttackKind> ignore) {
    Indexed ix = index_framework(af, ignore);
    std::size_t n = af.arguments.size();
    std::vector<std::size_t> indegree(n, 0);
    for (std::size_t t = 0; t < n; ++t) indegree[t] = ix.attackers[t].size();

    std::vector<std::size_t> ready;
    for (std::size_t a = 0; a < n; ++a) {
        if (indegree[a] == 0) ready.push_back(a);
    }
    std::size_t removed = 0;
    while (!ready.empty()) {
        std::size_t a = ready.back();
        ready.pop_back();
        ++removed;
        for (std::size_t t : ix.targets[a]) {
            if (--indegree[t] == 0) ready.push_back(t);
        }
    }
    return removed == n;
}

}  // namespace aacbr
