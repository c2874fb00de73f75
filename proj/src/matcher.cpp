#include "instrie/matcher.hpp"

#include <cassert>
#include <stdexcept>

namespace instrie {

namespace {

// Sibling set the traversal is currently inspecting: a chain node (fresh
// plain descent or a resumed alternative) or a whole hash table (fresh
// descent into a hashed level). A resumed alternative inside a hash table
// arrives as a node flagged hashed.
struct Position {
    const TrieNode* node = nullptr;
    const SiblingHash* hash = nullptr;
};

Position children_of(const TrieNode& parent) {
    if (parent.child_hash) return {nullptr, parent.child_hash};
    return {parent.first_child, nullptr};
}

struct ChoicePoint {
    const TrieNode* alt;
    uint32_t term_stack_top;  // term stack size at creation (current term popped)
    uint32_t term_log_top;    // excludes the current term's log entry
    uint32_t trail_top;
    size_t arena_mark;
};

// First node at or after n with evaluating subgoals below.
const TrieNode* next_valid_node(const TrieNode* n) {
    for (; n; n = n->sibling)
        if (effective_in_eval(*n) > 0) return n;
    return nullptr;
}

const TrieNode* try_constant_term(const TrieSymbol& sym, Position pos) {
    const TrieNode* n = pos.hash ? bucket_chain(*pos.hash, sym) : pos.node;
    for (; n; n = n->sibling)
        if (n->symbol == sym)  // at most one sibling matches
            return effective_in_eval(*n) > 0 ? n : nullptr;
    return nullptr;
}

const TrieNode* try_structured_term(RtCell* term, Position pos, KernelState& ks) {
    const TrieNode* n = try_constant_term(principal_symbol(term), pos);
    if (n) push_arguments(ks.term_stack, term);
    return n;
}

struct MatcherState {
    KernelState ks;
    std::vector<LogEntry> term_log;
    std::vector<ChoicePoint> choice_points;
};

const TrieNode* try_variable_term(RtCell* var, Position pos, MatcherState& st) {
    const TrieNode* current;
    const TrieNode* alt;
    if (pos.hash) {  // case 1: fresh descent into a hashed level
        const EvalIndexNode* head = eval_index_head(*pos.hash);
        if (!head) return nullptr;
        current = head->node;
        const EvalIndexNode* next = eval_index_next(*head);
        alt = next ? next->node : nullptr;
    } else if (pos.node && pos.node->is_hashed()) {  // case 2: resumed hashed node
        current = pos.node;
        const EvalIndexNode* next = eval_index_next(*eval_index_entry(*current));
        alt = next ? next->node : nullptr;
    } else {  // case 3: plain chain
        current = next_valid_node(pos.node);
        if (!current) return nullptr;
        alt = next_valid_node(current->sibling);
    }
    // The frame goes in before the matching attempt; an immediate mismatch
    // just pops it again on the next backtrack.
    if (alt)
        st.choice_points.push_back({alt, static_cast<uint32_t>(st.ks.term_stack.size()),
                                    static_cast<uint32_t>(st.term_log.size() - 1),
                                    static_cast<uint32_t>(st.ks.trail.size()),
                                    st.ks.arena.mark()});
    return try_variable_matching(var, current->symbol, st.ks) ? current : nullptr;
}

}  // namespace

std::vector<const SubgoalFrame*> collect_subsumed_subgoals(const SubgoalTrie& trie,
                                                           const Term& call,
                                                           MatcherProbe* probe) {
    trie.require_call(call);
    const uint64_t version = trie.version();

    MatcherState st;
    std::vector<const SubgoalFrame*> results;
    st.ks.term_stack.push_back(st.ks.intern(call));
    const size_t baseline_arena = st.ks.arena.mark();
    if (probe) probe->baseline_arena = baseline_arena;

    const TrieNode* parent = &trie.root();
    Position pos = children_of(*parent);

    for (;;) {
        assert(!st.ks.term_stack.empty());
        RtCell* raw = st.ks.term_stack.back();
        st.term_log.push_back({raw, static_cast<uint32_t>(st.ks.term_stack.size())});
        st.ks.term_stack.pop_back();
        RtCell* term = deref(raw);

        const TrieNode* try_node;
        switch (term->tag) {
            case RtCell::Tag::Ref:
            case RtCell::Tag::Slot: try_node = try_variable_term(term, pos, st); break;
            case RtCell::Tag::Struct:
            case RtCell::Tag::List: try_node = try_structured_term(term, pos, st.ks); break;
            default: try_node = try_constant_term(principal_symbol(term), pos); break;
        }

        if (try_node) {
            if (probe) probe->entered.push_back(try_node);
            parent = try_node;
            pos = children_of(*parent);
            assert(parent->is_leaf() == st.ks.term_stack.empty());
            if (!st.ks.term_stack.empty()) continue;
            results.push_back(parent->frame);  // new subsumed subgoal found
        }

        if (st.choice_points.empty()) break;
        const ChoicePoint frame = st.choice_points.back();
        st.choice_points.pop_back();
        replay_term_log(st.term_log, frame.term_log_top, st.ks.term_stack);
        assert(st.ks.term_stack.size() == frame.term_stack_top + 1);
        st.ks.unwind_trail(frame.trail_top);
        st.ks.arena.truncate(frame.arena_mark);
        pos = {frame.alt, nullptr};
        parent = frame.alt->parent;
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
