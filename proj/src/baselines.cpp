#include "instrie/baselines.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace instrie {

// ---------------------------------------------------------------------------
// NIRS

std::vector<const SubgoalFrame*> collect_nirs(const SubgoalTrie& trie, LeafRegistry& registry,
                                              const Term& call, MatcherProbe* probe) {
    trie.require_call(call);
    registry.sync(trie);

    KernelState ks;
    RtCell* query = ks.intern(call);
    const size_t baseline_arena = ks.arena.mark();
    if (probe) probe->baseline_arena = baseline_arena;

    std::vector<const SubgoalFrame*> results;
    std::vector<TrieSymbol> path;
    for (const TrieNode* leaf : registry.leaves()) {
        path.clear();
        for (const TrieNode* n = leaf; !n->is_root(); n = n->parent) path.push_back(n->symbol);
        std::reverse(path.begin(), path.end());

        ks.term_stack.clear();
        ks.term_stack.push_back(query);
        bool matched = true;
        for (const TrieSymbol& sym : path) {
            if (ks.term_stack.empty()) {
                matched = false;
                break;
            }
            RtCell* t = ks.term_stack.back();
            ks.term_stack.pop_back();
            if (!match_term_symbol(t, sym, ks)) {
                matched = false;
                break;
            }
        }
        matched = matched && ks.term_stack.empty();
        if (matched && leaf->frame->state == SubgoalFrame::State::Evaluating)
            results.push_back(leaf->frame);

        ks.unwind_trail(0);
        ks.arena.truncate(baseline_arena);
    }

    ks.term_stack.clear();
    if (probe) {
        probe->post_arena = ks.arena.mark();
        probe->post_trail = ks.trail.size();
        probe->post_term_stack = ks.term_stack.size();
        probe->post_term_log = 0;
        probe->post_choice_points = 0;
    }
    return results;
}

// ---------------------------------------------------------------------------
// SIRS

namespace {

// Traversal cursor without evaluation counts. A fresh hashed level starts
// with node null and walks buckets in order; a resumed alternative carries
// its bucket so iteration can continue past it.
struct SirsPosition {
    const TrieNode* node = nullptr;
    const SiblingHash* hash = nullptr;
    uint32_t bucket = 0;
};

SirsPosition sirs_children_of(const TrieNode& parent) {
    if (parent.child_hash) return {nullptr, parent.child_hash, 0};
    return {parent.first_child, nullptr, 0};
}

SirsPosition first_in_hash(const SiblingHash& hash, uint32_t from_bucket) {
    for (uint32_t b = from_bucket; b < hash.buckets.size(); ++b)
        if (hash.buckets[b]) return {hash.buckets[b], &hash, b};
    return {};
}

SirsPosition next_in_hash(const SiblingHash& hash, const TrieNode* node, uint32_t bucket) {
    if (node->sibling) return {node->sibling, &hash, bucket};
    return first_in_hash(hash, bucket + 1);
}

struct SirsChoicePoint {
    SirsPosition alt;
    uint32_t term_stack_top;
    uint32_t term_log_top;
    uint32_t trail_top;
    size_t arena_mark;
};

struct SirsState {
    KernelState ks;
    std::vector<LogEntry> term_log;
    std::vector<SirsChoicePoint> choice_points;
};

const TrieNode* sirs_try_constant(const TrieSymbol& sym, const SirsPosition& pos) {
    const TrieNode* n = pos.hash ? bucket_chain(*pos.hash, sym) : pos.node;
    for (; n; n = n->sibling)
        if (n->symbol == sym) return n;
    return nullptr;
}

const TrieNode* sirs_try_structured(RtCell* term, const SirsPosition& pos, KernelState& ks) {
    const TrieNode* n = sirs_try_constant(principal_symbol(term), pos);
    if (n) push_arguments(ks.term_stack, term);
    return n;
}

const TrieNode* sirs_try_variable(RtCell* var, const SirsPosition& pos, SirsState& st) {
    const TrieNode* current;
    SirsPosition alt;
    if (pos.hash && !pos.node) {  // fresh descent into a hashed level
        SirsPosition first = first_in_hash(*pos.hash, 0);
        if (!first.node) return nullptr;
        current = first.node;
        alt = next_in_hash(*pos.hash, first.node, first.bucket);
    } else if (pos.hash) {  // resumed inside a hash table
        current = pos.node;
        alt = next_in_hash(*pos.hash, pos.node, pos.bucket);
    } else {  // plain chain
        current = pos.node;
        if (!current) return nullptr;
        alt = {current->sibling, nullptr, 0};
    }
    if (alt.node)
        st.choice_points.push_back({alt, static_cast<uint32_t>(st.ks.term_stack.size()),
                                    static_cast<uint32_t>(st.term_log.size() - 1),
                                    static_cast<uint32_t>(st.ks.trail.size()),
                                    st.ks.arena.mark()});
    return try_variable_matching(var, current->symbol, st.ks) ? current : nullptr;
}

}  // namespace

std::vector<const SubgoalFrame*> collect_sirs(const SubgoalTrie& trie, const Term& call,
                                              MatcherProbe* probe) {
    trie.require_call(call);
    const uint64_t version = trie.version();

    SirsState st;
    std::vector<const SubgoalFrame*> results;
    st.ks.term_stack.push_back(st.ks.intern(call));
    const size_t baseline_arena = st.ks.arena.mark();
    if (probe) probe->baseline_arena = baseline_arena;

    const TrieNode* parent = &trie.root();
    SirsPosition pos = sirs_children_of(*parent);

    for (;;) {
        assert(!st.ks.term_stack.empty());
        RtCell* raw = st.ks.term_stack.back();
        st.term_log.push_back({raw, static_cast<uint32_t>(st.ks.term_stack.size())});
        st.ks.term_stack.pop_back();
        RtCell* term = deref(raw);

        const TrieNode* try_node;
        switch (term->tag) {
            case RtCell::Tag::Ref:
            case RtCell::Tag::Slot: try_node = sirs_try_variable(term, pos, st); break;
            case RtCell::Tag::Struct:
            case RtCell::Tag::List: try_node = sirs_try_structured(term, pos, st.ks); break;
            default: try_node = sirs_try_constant(principal_symbol(term), pos); break;
        }

        if (try_node) {
            if (probe) probe->entered.push_back(try_node);
            parent = try_node;
            pos = sirs_children_of(*parent);
            assert(parent->is_leaf() == st.ks.term_stack.empty());
            if (!st.ks.term_stack.empty()) continue;
            if (parent->frame->state == SubgoalFrame::State::Evaluating)
                results.push_back(parent->frame);
        }

        if (st.choice_points.empty()) break;
        const SirsChoicePoint frame = st.choice_points.back();
        st.choice_points.pop_back();
        replay_term_log(st.term_log, frame.term_log_top, st.ks.term_stack);
        assert(st.ks.term_stack.size() == frame.term_stack_top + 1);
        st.ks.unwind_trail(frame.trail_top);
        st.ks.arena.truncate(frame.arena_mark);
        pos = frame.alt;
        parent = frame.alt.node->parent;
    }

    st.ks.unwind_trail(0);
    st.ks.arena.truncate(baseline_arena);
    st.ks.term_stack.clear();
    st.term_log.clear();

    if (trie.version() != version) throw std::logic_error("trie mutated during retrieval");
    if (probe) {
        probe->post_arena = st.ks.arena.mark();
        probe->post_trail = st.ks.trail.size();
        probe->post_term_stack = st.ks.term_stack.size();
        probe->post_term_log = st.term_log.size();
        probe->post_choice_points = st.choice_points.size();
    }
    return results;
}

}  // namespace instrie
