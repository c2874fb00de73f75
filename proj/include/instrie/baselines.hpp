#pragma once

#include <vector>

#include "instrie/matcher.hpp"
#include "instrie/subgoal_trie.hpp"

namespace instrie {

// Append-only list of every leaf ever created in a trie, in creation order.
// sync() picks up leaves added since the last call; nothing is ever removed,
// completed subgoals included.
class LeafRegistry {
public:
    void sync(const SubgoalTrie& trie) {
        const auto& frames = trie.frames();
        while (synced_ < frames.size()) leaves_.push_back(frames[synced_++].leaf);
    }
    const std::vector<const TrieNode*>& leaves() const { return leaves_; }

private:
    std::vector<const TrieNode*> leaves_;
    size_t synced_ = 0;
};

// Naive retrieval: rebuild every registered leaf's path bottom-up and match
// the call against it with the shared rule kernel, leaf by leaf; evaluating
// matches are returned in registry order. Reads no evaluation counters.
std::vector<const SubgoalFrame*> collect_nirs(const SubgoalTrie& trie, LeafRegistry& registry,
                                              const Term& call, MatcherProbe* probe = nullptr);

// Semi-naive retrieval: the same backtracking traversal as the pruned
// matcher but blind to evaluation counts, so every branch is explored and
// hashed levels are walked bucket by bucket through an auxiliary cursor;
// leaves are filtered by frame state. Reads no evaluation counters.
std::vector<const SubgoalFrame*> collect_sirs(const SubgoalTrie& trie, const Term& call,
                                              MatcherProbe* probe = nullptr);

}  // namespace instrie
