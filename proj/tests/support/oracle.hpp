#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "instrie/subgoal_trie.hpp"
#include "instrie/term.hpp"
#include "instrie/trie_symbol.hpp"

namespace instrie::testing {

// Reference result: every evaluating stored call subsumed by the query, in
// frame (insertion) order, decided by the standalone term-level matcher
// rather than any trie traversal.
inline std::vector<const SubgoalFrame*> oracle_subsumed(const SubgoalTrie& trie,
                                                        const Term& query) {
    std::vector<const SubgoalFrame*> out;
    for (const SubgoalFrame& f : trie.frames())
        if (f.state == SubgoalFrame::State::Evaluating && subsumes(query, f.call))
            out.push_back(&f);
    return out;
}

inline std::set<uint32_t> frame_ids(const std::vector<const SubgoalFrame*>& frames) {
    std::set<uint32_t> ids;
    for (const SubgoalFrame* f : frames) ids.insert(f->id);
    return ids;
}

// Full structural audit of one subtree: recounts evaluating leaves, checks
// every effective count, hash-bucket residency, sibling-symbol uniqueness,
// and evaluation-index shape/membership. Problems are appended as text.
inline uint32_t audit_subtree(const TrieNode& node, std::vector<std::string>& problems) {
    uint32_t below = 0;
    if (node.is_leaf()) {
        if (!node.frame)
            problems.push_back("leaf without frame at " + trie_symbol_name(node.symbol));
        else {
            if (node.frame->leaf != &node)
                problems.push_back("frame does not point back at its leaf");
            below = node.frame->state == SubgoalFrame::State::Evaluating ? 1u : 0u;
        }
    }

    std::vector<std::pair<const TrieNode*, uint32_t>> children;
    for_each_child(node, [&](const TrieNode& c) {
        if (c.parent != &node) problems.push_back("child with wrong parent link");
        uint32_t cc = audit_subtree(c, problems);
        children.emplace_back(&c, cc);
        below += cc;
    });
    if (node.is_leaf() && !children.empty())
        problems.push_back("leaf with children at " + trie_symbol_name(node.symbol));

    for (size_t i = 0; i < children.size(); ++i)
        for (size_t j = i + 1; j < children.size(); ++j)
            if (children[i].first->symbol == children[j].first->symbol)
                problems.push_back("duplicate sibling symbol " +
                                   trie_symbol_name(children[i].first->symbol));

    if (effective_in_eval(node) != below)
        problems.push_back("count mismatch at " + trie_symbol_name(node.symbol) + ": stored " +
                           std::to_string(effective_in_eval(node)) + ", recount " +
                           std::to_string(below));

    if (const SiblingHash* h = node.child_hash) {
        if (h->entry_count != children.size())
            problems.push_back("hash entry_count " + std::to_string(h->entry_count) +
                               " but " + std::to_string(children.size()) + " children");
        const size_t mask = h->buckets.size() - 1;
        for (size_t b = 0; b < h->buckets.size(); ++b)
            for (const TrieNode* n = h->buckets[b]; n; n = n->sibling) {
                if ((trie_symbol_hash(n->symbol) & mask) != b)
                    problems.push_back("node in wrong bucket: " + trie_symbol_name(n->symbol));
                if (!n->is_hashed())
                    problems.push_back("bucket member not flagged hashed: " +
                                       trie_symbol_name(n->symbol));
            }

        std::map<const TrieNode*, uint32_t> indexed;
        const EvalIndexNode* prev = nullptr;
        for (const EvalIndexNode* e = h->index; e; e = e->next) {
            if (e->prev != prev) problems.push_back("index prev link broken");
            if (e->count == 0) problems.push_back("index entry with zero count");
            if (!e->node)
                problems.push_back("index entry without node");
            else if (!e->node->is_hashed() || e->node->in_eval.index != e)
                problems.push_back("node and index entry disagree");
            else if (!indexed.emplace(e->node, e->count).second)
                problems.push_back("node indexed twice");
            prev = e;
        }
        for (const auto& [child, cc] : children) {
            auto it = indexed.find(child);
            if ((cc > 0) != (it != indexed.end()))
                problems.push_back("index membership wrong for " +
                                   trie_symbol_name(child->symbol));
            else if (it != indexed.end() && it->second != cc)
                problems.push_back("index count wrong for " + trie_symbol_name(child->symbol));
            if (it != indexed.end()) indexed.erase(it);
        }
        if (!indexed.empty()) problems.push_back("index entry for a node outside this level");
    }
    return below;
}

// Audits the whole trie; also ties the root count to the frame registry.
inline std::vector<std::string> audit_trie(const SubgoalTrie& trie) {
    std::vector<std::string> problems;
    uint32_t total = audit_subtree(trie.root(), problems);
    uint32_t evaluating = 0;
    for (const SubgoalFrame& f : trie.frames())
        if (f.state == SubgoalFrame::State::Evaluating) ++evaluating;
    if (total != evaluating)
        problems.push_back("root recount " + std::to_string(total) + " but " +
                           std::to_string(evaluating) + " evaluating frames");
    if (trie.evaluating_count() != evaluating)
        problems.push_back("evaluating_count() disagrees with frame registry");
    return problems;
}

inline bool has_hashed_level(const TrieNode& node) {
    if (node.child_hash) return true;
    bool found = false;
    for_each_child(node, [&](const TrieNode& c) { found = found || has_hashed_level(c); });
    return found;
}

// Navigation by display symbol, for pinning down specific nodes in
// hand-built tries.
inline const TrieNode* child_named(const TrieNode& parent, std::string_view name) {
    const TrieNode* found = nullptr;
    for_each_child(parent, [&](const TrieNode& c) {
        if (!found && trie_symbol_name(c.symbol) == name) found = &c;
    });
    return found;
}

inline const TrieNode* node_at(const SubgoalTrie& trie,
                               std::initializer_list<std::string_view> path) {
    const TrieNode* n = &trie.root();
    for (std::string_view name : path) {
        if (!n) return nullptr;
        n = child_named(*n, name);
    }
    return n;
}

// Substitution-search subsumption: enumerates every assignment of the general
// term's variables to subterms of the specific term and compares
// syntactically. Exponential, for small cross-check terms only.
inline void collect_subterms(const Term& t, std::vector<Term>& out) {
    for (const Term& seen : out)
        if (seen == t) return;  // identical subtree, already expanded
    out.push_back(t);
    switch (t.tag()) {
        case TermTag::Struct:
            for (uint32_t i = 0; i < t.arity(); ++i) collect_subterms(t.arg(i), out);
            break;
        case TermTag::List:
            collect_subterms(t.head(), out);
            collect_subterms(t.tail(), out);
            break;
        default:
            break;
    }
}

inline void collect_vars(const Term& t, std::vector<uint32_t>& out) {
    switch (t.tag()) {
        case TermTag::Var: {
            for (uint32_t v : out)
                if (v == t.var_id()) return;
            out.push_back(t.var_id());
            break;
        }
        case TermTag::Struct:
            for (uint32_t i = 0; i < t.arity(); ++i) collect_vars(t.arg(i), out);
            break;
        case TermTag::List:
            collect_vars(t.head(), out);
            collect_vars(t.tail(), out);
            break;
        default:
            break;
    }
}

inline Term substitute(const Term& t, const std::map<uint32_t, Term>& binding) {
    switch (t.tag()) {
        case TermTag::Var: {
            auto it = binding.find(t.var_id());
            return it == binding.end() ? t : it->second;
        }
        case TermTag::Struct: {
            std::vector<Term> args;
            args.reserve(t.arity());
            for (uint32_t i = 0; i < t.arity(); ++i) args.push_back(substitute(t.arg(i), binding));
            return Term::structure(t.name(), std::move(args));
        }
        case TermTag::List:
            return Term::list(substitute(t.head(), binding), substitute(t.tail(), binding));
        default:
            return t;
    }
}

inline bool brute_force_subsumes(const Term& general, const Term& specific) {
    std::vector<uint32_t> vars;
    collect_vars(general, vars);
    std::vector<Term> pool;
    collect_subterms(specific, pool);
    std::vector<size_t> pick(vars.size(), 0);
    while (true) {
        std::map<uint32_t, Term> binding;
        for (size_t i = 0; i < vars.size(); ++i) binding.emplace(vars[i], pool[pick[i]]);
        if (substitute(general, binding) == specific) return true;
        size_t i = 0;
        for (; i < pick.size(); ++i) {
            if (++pick[i] < pool.size()) break;
            pick[i] = 0;
        }
        if (i == pick.size()) return false;
    }
}

}  // namespace instrie::testing
