#include "instrie/subgoal_trie.hpp"

#include <cassert>
#include <stdexcept>
#include <string>

namespace instrie {

namespace {

thread_local uint64_t g_in_eval_reads = 0;

size_t bucket_of(const SiblingHash& hash, const TrieSymbol& sym) {
    return trie_symbol_hash(sym) & (hash.buckets.size() - 1);
}

SiblingHash& owning_hash(const TrieNode& node) {
    // The hash table lives in the child field of the hashed node's parent.
    assert(node.is_hashed() && node.parent && node.parent->child_hash);
    return *node.parent->child_hash;
}

void index_push_front(SiblingHash& hash, EvalIndexNode* entry) {
    entry->prev = nullptr;
    entry->next = hash.index;
    if (hash.index) hash.index->prev = entry;
    hash.index = entry;
}

void index_unlink(SiblingHash& hash, EvalIndexNode* entry) {
    if (entry->prev)
        entry->prev->next = entry->next;
    else
        hash.index = entry->next;
    if (entry->next) entry->next->prev = entry->prev;
}

}  // namespace

uint32_t effective_in_eval(const TrieNode& node) {
    ++g_in_eval_reads;
    if (node.is_hashed()) return node.in_eval.index ? node.in_eval.index->count : 0;
    return node.in_eval.count;
}

const EvalIndexNode* eval_index_head(const SiblingHash& hash) {
    ++g_in_eval_reads;
    return hash.index;
}

const EvalIndexNode* eval_index_next(const EvalIndexNode& entry) {
    ++g_in_eval_reads;
    return entry.next;
}

const EvalIndexNode* eval_index_entry(const TrieNode& hashed_node) {
    ++g_in_eval_reads;
    assert(hashed_node.is_hashed());
    return hashed_node.in_eval.index;
}

uint64_t in_eval_read_count() { return g_in_eval_reads; }

SubgoalTrie::SubgoalTrie(Sym predicate, uint32_t arity) : pred_(predicate), arity_(arity) {
    root_ = &nodes_.emplace_back();
    root_->status = TrieNode::kRoot;
}

SubgoalTrie::~SubgoalTrie() {
    for (SiblingHash& hash : hashes_) {
        EvalIndexNode* e = hash.index;
        while (e) {
            EvalIndexNode* next = e->next;
            delete e;
            e = next;
        }
    }
}

void SubgoalTrie::require_call(const Term& call) const {
    if (arity_ == 0) {
        if (call.tag() == TermTag::Atom && call.name() == pred_) return;
    } else if (call.tag() == TermTag::Struct && call.name() == pred_ && call.arity() == arity_) {
        return;
    }
    throw std::invalid_argument("call does not match predicate " + sym_name(pred_) + "/" +
                                std::to_string(arity_));
}

TrieNode* SubgoalTrie::find_child(const TrieNode* parent, const TrieSymbol& sym) const {
    TrieNode* n = parent->child_hash ? parent->child_hash->buckets[bucket_of(*parent->child_hash, sym)]
                                     : parent->first_child;
    for (; n; n = n->sibling)
        if (n->symbol == sym) return n;
    return nullptr;
}

TrieNode* SubgoalTrie::insert_child(TrieNode* parent, const TrieSymbol& sym) {
    TrieNode* node = &nodes_.emplace_back();
    node->symbol = sym;
    node->parent = parent;
    ++version_;

    if (parent->child_hash) {
        SiblingHash& hash = *parent->child_hash;
        node->status |= TrieNode::kHashed;
        TrieNode** slot = &hash.buckets[bucket_of(hash, sym)];
        while (*slot) slot = &(*slot)->sibling;  // append keeps order deterministic
        *slot = node;
        if (++hash.entry_count > hash.buckets.size()) grow_hash(hash);
        return node;
    }

    uint32_t chain_len = 1;
    TrieNode** slot = &parent->first_child;
    while (*slot) {
        ++chain_len;
        slot = &(*slot)->sibling;
    }
    *slot = node;
    if (chain_len > kHashThreshold) migrate_to_hash(parent);
    return node;
}

void SubgoalTrie::migrate_to_hash(TrieNode* parent) {
    SiblingHash& hash = hashes_.emplace_back();
    hash.buckets.assign(kInitialBuckets, nullptr);
    ++version_;

    TrieNode* n = parent->first_child;
    while (n) {
        TrieNode* next = n->sibling;
        n->sibling = nullptr;
        // The subtree count moves with the node: positive counts become
        // index entries, zero stays unindexed.
        uint32_t count = n->in_eval.count;
        n->status |= TrieNode::kHashed;
        if (count > 0) {
            auto* entry = new EvalIndexNode{nullptr, nullptr, n, count};
            index_push_front(hash, entry);
            n->in_eval.index = entry;
        } else {
            n->in_eval.index = nullptr;
        }
        TrieNode** slot = &hash.buckets[bucket_of(hash, n->symbol)];
        while (*slot) slot = &(*slot)->sibling;
        *slot = n;
        ++hash.entry_count;
        n = next;
    }
    parent->first_child = nullptr;
    parent->child_hash = &hash;
}

void SubgoalTrie::grow_hash(SiblingHash& hash) {
    std::vector<TrieNode*> old = std::move(hash.buckets);
    hash.buckets.assign(old.size() * 2, nullptr);
    ++version_;
    for (TrieNode* n : old) {
        while (n) {
            TrieNode* next = n->sibling;
            n->sibling = nullptr;
            TrieNode** slot = &hash.buckets[bucket_of(hash, n->symbol)];
            while (*slot) slot = &(*slot)->sibling;
            *slot = n;
            n = next;
        }
    }
}

std::pair<SubgoalFrame*, bool> SubgoalTrie::check_insert(const Term& call) {
    require_call(call);
    std::vector<TrieSymbol> syms = flatten(call);

    TrieNode* parent = root_;
    for (const TrieSymbol& sym : syms) {
        TrieNode* child = find_child(parent, sym);
        parent = child ? child : insert_child(parent, sym);
    }

    if (parent->frame) return {parent->frame, false};
    assert(!parent->is_leaf() && !parent->first_child && !parent->child_hash);
    parent->status |= TrieNode::kLeaf;
    SubgoalFrame& frame = frames_.emplace_back(decode_symbols(syms), parent,
                                               static_cast<uint32_t>(frames_.size()));
    parent->frame = &frame;
    ++version_;
    return {&frame, true};
}

SubgoalFrame* SubgoalTrie::lookup_variant(const Term& call) const {
    require_call(call);
    const TrieNode* parent = root_;
    for (const TrieSymbol& sym : flatten(call)) {
        parent = find_child(parent, sym);
        if (!parent) return nullptr;
    }
    return parent->frame;
}

void SubgoalTrie::mark_evaluating(SubgoalFrame& frame) {
    if (frame.state == SubgoalFrame::State::Evaluating)
        throw std::logic_error("subgoal is already evaluating");
    for (TrieNode* node = frame.leaf; node; node = node->parent) {
        if (node->is_hashed()) {
            if (node->in_eval.index == nullptr) {
                auto* entry = new EvalIndexNode{nullptr, nullptr, node, 1};
                index_push_front(owning_hash(*node), entry);
                node->in_eval.index = entry;
            } else {
                ++node->in_eval.index->count;
            }
        } else {
            ++node->in_eval.count;
        }
    }
    frame.state = SubgoalFrame::State::Evaluating;
    ++version_;
}

void SubgoalTrie::mark_completed(SubgoalFrame& frame) {
    if (frame.state != SubgoalFrame::State::Evaluating)
        throw std::logic_error("subgoal is not evaluating");
    for (TrieNode* node = frame.leaf; node; node = node->parent) {
        if (node->is_hashed()) {
            EvalIndexNode* entry = node->in_eval.index;
            assert(entry && entry->count > 0);
            if (entry->count == 1) {
                index_unlink(owning_hash(*node), entry);
                delete entry;
                node->in_eval.index = nullptr;
            } else {
                --entry->count;
            }
        } else {
            assert(node->in_eval.count > 0);
            --node->in_eval.count;
        }
    }
    frame.state = SubgoalFrame::State::Completed;
    ++version_;
}

}  // namespace instrie
