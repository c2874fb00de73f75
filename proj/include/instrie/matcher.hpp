#pragma once

#include <cstddef>
#include <vector>

#include "instrie/match_kernel.hpp"
#include "instrie/subgoal_trie.hpp"

namespace instrie {

// Test hook shared by the retrieval algorithms. `entered` records every trie
// node a traversal matched and descended into, in order; the marks let tests
// verify that a query leaves no bindings, cells or stack entries behind.
struct MatcherProbe {
    std::vector<const TrieNode*> entered;
    size_t baseline_arena = 0;  // arena mark right after query setup
    size_t post_arena = 0;
    size_t post_trail = 0;
    size_t post_term_stack = 0;
    size_t post_term_log = 0;
    size_t post_choice_points = 0;

    bool leak_free() const {
        return post_arena == baseline_arena && post_trail == 0 && post_term_stack == 0 &&
               post_term_log == 0 && post_choice_points == 0;
    }
};

// Backtracking trie traversal pruned by evaluating-subgoal counts: returns
// the frames of every evaluating stored call subsumed by `call`, in
// discovery order. An evaluating variant of `call` itself is included. The
// trie is read-only during the query and the query leaves no residue.
// Throws std::invalid_argument on a call of the wrong shape and
// std::logic_error if the trie is mutated mid-query.
std::vector<const SubgoalFrame*> collect_subsumed_subgoals(const SubgoalTrie& trie,
                                                           const Term& call,
                                                           MatcherProbe* probe = nullptr);

}  // namespace instrie
