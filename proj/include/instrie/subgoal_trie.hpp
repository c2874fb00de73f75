#pragma once

#include <cstdint>
#include <deque>
#include <memory>
#include <utility>
#include <vector>

#include "instrie/term.hpp"
#include "instrie/trie_symbol.hpp"

namespace instrie {

struct TrieNode;
struct SubgoalFrame;

// Entry of an evaluation index: one per hashed node whose subtree currently
// holds evaluating subgoals. Unlinked and freed the moment the count drops
// to zero.
struct EvalIndexNode {
    EvalIndexNode* prev = nullptr;
    EvalIndexNode* next = nullptr;
    TrieNode* node = nullptr;
    uint32_t count = 0;  // > 0 while linked
};

// Hash table replacing a sibling chain once it outgrows the threshold.
// `index` heads the evaluation index: a doubly-linked, unordered list of
// exactly the member nodes with a positive evaluating count.
struct SiblingHash {
    std::vector<TrieNode*> buckets;  // size is a power of two
    uint32_t entry_count = 0;
    EvalIndexNode* index = nullptr;
};

struct TrieNode {
    static constexpr uint8_t kRoot = 1;
    static constexpr uint8_t kLeaf = 2;
    static constexpr uint8_t kHashed = 4;  // belongs to a hashed sibling set

    TrieSymbol symbol;
    TrieNode* parent = nullptr;
    TrieNode* sibling = nullptr;
    TrieNode* first_child = nullptr;    // unused once child_hash is set
    SiblingHash* child_hash = nullptr;  // non-null once children are hashed
    SubgoalFrame* frame = nullptr;      // leaves only
    uint8_t status = 0;

    // Plain nodes count the evaluating subgoals below; hashed nodes instead
    // link to their evaluation-index entry (null while that count is zero).
    union {
        uint32_t count;
        EvalIndexNode* index;
    } in_eval{};

    bool is_root() const { return status & kRoot; }
    bool is_leaf() const { return status & kLeaf; }
    bool is_hashed() const { return status & kHashed; }
};

struct SubgoalFrame {
    enum class State : uint8_t { Evaluating, Completed };

    Term call;  // canonical variant of the stored call
    TrieNode* leaf = nullptr;
    State state = State::Completed;  // fresh frames have not started evaluating
    uint32_t id = 0;                 // insertion order

    SubgoalFrame(Term c, TrieNode* l, uint32_t i) : call(std::move(c)), leaf(l), id(i) {}
};

// Effective evaluating-subgoal count of a node's subtree, reading the
// counter or the index entry depending on where the node lives. Every call
// bumps a thread-local read counter so tests can assert which retrieval
// algorithms consult evaluation state.
uint32_t effective_in_eval(const TrieNode& node);

// Evaluation-index accessors used by the retrieval traversal; instrumented
// like effective_in_eval.
const EvalIndexNode* eval_index_head(const SiblingHash& hash);
const EvalIndexNode* eval_index_next(const EvalIndexNode& entry);
const EvalIndexNode* eval_index_entry(const TrieNode& hashed_node);

uint64_t in_eval_read_count();

// Chain of the bucket a symbol hashes to; the only way structured and
// constant matching inspect a hashed level.
inline const TrieNode* bucket_chain(const SiblingHash& hash, const TrieSymbol& sym) {
    return hash.buckets[trie_symbol_hash(sym) & (hash.buckets.size() - 1)];
}

// Trie of stored calls for one predicate. Paths are flatten(call) sequences,
// so the predicate's own functor symbol is the single level-1 node. Nodes
// are never deleted; completion only flips counters.
class SubgoalTrie {
public:
    // Chains longer than kHashThreshold siblings migrate to a SiblingHash
    // with kInitialBuckets buckets, doubling whenever entries outnumber
    // buckets.
    static constexpr uint32_t kHashThreshold = 8;
    static constexpr uint32_t kInitialBuckets = 64;

    SubgoalTrie(Sym predicate, uint32_t arity);
    SubgoalTrie(std::string_view predicate, uint32_t arity)
        : SubgoalTrie(intern(predicate), arity) {}

    SubgoalTrie(const SubgoalTrie&) = delete;
    SubgoalTrie& operator=(const SubgoalTrie&) = delete;
    ~SubgoalTrie();

    Sym predicate() const { return pred_; }
    uint32_t arity() const { return arity_; }

    // Single-pass lookup-or-insert of flatten(call). Fresh leaves get a
    // frame that has not started evaluating; a variant re-insert returns the
    // existing frame with false.
    std::pair<SubgoalFrame*, bool> check_insert(const Term& call);

    // Frame whose path equals flatten(call), or null. Never mutates.
    SubgoalFrame* lookup_variant(const Term& call) const;

    // Throws std::invalid_argument unless call is this predicate applied at
    // this arity.
    void require_call(const Term& call) const;

    // Leaf-to-root count increment; hashed nodes at zero get an index entry.
    // Rejects frames already evaluating.
    void mark_evaluating(SubgoalFrame& frame);

    // Inverse walk; hashed nodes reaching zero leave the index. Rejects
    // frames not evaluating.
    void mark_completed(SubgoalFrame& frame);

    const TrieNode& root() const { return *root_; }
    uint32_t evaluating_count() const { return root_->in_eval.count; }
    size_t node_count() const { return nodes_.size() - 1; }  // excludes the root
    const std::deque<SubgoalFrame>& frames() const { return frames_; }

    // Bumped by every mutation (node creation, hash migration, mark walks);
    // retrievals snapshot it to detect mid-query mutation.
    uint64_t version() const { return version_; }

private:
    TrieNode* find_child(const TrieNode* parent, const TrieSymbol& sym) const;
    TrieNode* insert_child(TrieNode* parent, const TrieSymbol& sym);
    void migrate_to_hash(TrieNode* parent);
    void grow_hash(SiblingHash& hash);

    Sym pred_;
    uint32_t arity_;
    TrieNode* root_;              // nodes_.front()
    std::deque<TrieNode> nodes_;  // stable addresses, never shrunk
    std::deque<SiblingHash> hashes_;
    std::deque<SubgoalFrame> frames_;
    uint64_t version_ = 0;
};

// Deterministic child walk used by dumps, recount oracles and the naive
// traversals: chain order for plain levels, bucket-then-chain order for
// hashed ones.
template <typename F>
void for_each_child(const TrieNode& parent, F&& f) {
    if (parent.child_hash) {
        for (TrieNode* n : parent.child_hash->buckets)
            for (; n; n = n->sibling) f(*n);
    } else {
        for (TrieNode* n = parent.first_child; n; n = n->sibling) f(*n);
    }
}

}  // namespace instrie
