#pragma once

#include <cassert>
#include <cstdint>
#include <deque>
#include <vector>

#include "instrie/term.hpp"
#include "instrie/trie_symbol.hpp"

namespace instrie {

// Mutable term cell used while matching a query against trie paths. Ref
// cells are variables: unbound while ref points at the cell itself. Slot
// cells are the variable-enumerator positions; a query variable matched
// against trie variable k is bound to slot cell k.
struct RtCell {
    enum class Tag : uint8_t { Ref, Slot, Atom, Int, Struct, List, Nil };

    Tag tag = Tag::Ref;
    uint32_t slot_or_arity = 0;  // Slot index; Struct arity
    Sym sym;                     // Atom, Struct
    int64_t value = 0;           // Int
    RtCell* ref = nullptr;       // Ref binding
    std::vector<RtCell*> args;   // Struct (arity), List (head, tail)
};

inline RtCell* deref(RtCell* c) {
    while (c->tag == RtCell::Tag::Ref && c->ref != c) c = c->ref;
    return c;
}

// Growable cell region with truncation marks, standing in for the WAM heap.
// Cells created after a mark are destroyed by truncating back to it; any
// bindings into the doomed range must be unwound first.
class Arena {
public:
    size_t mark() const { return cells_.size(); }
    void truncate(size_t m) {
        assert(m <= cells_.size());
        cells_.resize(m);
    }

    RtCell* make_ref() {
        RtCell* c = &cells_.emplace_back();
        c->tag = RtCell::Tag::Ref;
        c->ref = c;
        return c;
    }
    RtCell* make_atom(Sym s) {
        RtCell* c = &cells_.emplace_back();
        c->tag = RtCell::Tag::Atom;
        c->sym = s;
        return c;
    }
    RtCell* make_int(int64_t v) {
        RtCell* c = &cells_.emplace_back();
        c->tag = RtCell::Tag::Int;
        c->value = v;
        return c;
    }
    RtCell* make_nil() {
        RtCell* c = &cells_.emplace_back();
        c->tag = RtCell::Tag::Nil;
        return c;
    }
    // Skeleton with fresh unbound arguments, as built when a free query
    // variable meets a structured trie symbol.
    RtCell* make_struct(Sym functor, uint32_t arity);
    RtCell* make_list();

private:
    std::deque<RtCell> cells_;
};

// Everything a matching pass needs besides the trie: the arena, the binding
// trail (every binding is trailed unconditionally), the variable-enumerator
// slots and the term stack.
class KernelState {
public:
    Arena arena;
    std::vector<RtCell*> trail;
    std::vector<RtCell*> term_stack;

    void bind(RtCell* var, RtCell* target) {
        assert(var->tag == RtCell::Tag::Ref && var->ref == var);
        var->ref = target;
        trail.push_back(var);
    }

    void unwind_trail(size_t top) {
        while (trail.size() > top) {
            RtCell* var = trail.back();
            trail.pop_back();
            var->ref = var;
        }
    }

    RtCell* slot_cell(uint32_t index) {
        while (slots_.size() <= index) {
            RtCell& c = slots_.emplace_back();
            c.tag = RtCell::Tag::Slot;
            c.slot_or_arity = static_cast<uint32_t>(slots_.size() - 1);
        }
        return &slots_[index];
    }

    // Builds arena cells for a query term; occurrences of one variable share
    // one unbound Ref cell.
    RtCell* intern(const Term& t);

private:
    std::deque<RtCell> slots_;
    std::vector<RtCell*> var_cells_;  // by query-variable id
};

// The trie symbol a constant or structured cell would be stored under.
TrieSymbol principal_symbol(const RtCell* t);

// Pushes a structured cell's arguments right to left, leaving the leftmost
// on top.
void push_arguments(std::vector<RtCell*>& stack, RtCell* structured);

// Variable-vs-symbol matching rules. `var` must be an unbound Ref or a Slot
// cell. Trie variable: first occurrence binds to the slot, a slot-bound
// variable matches only the same index. Ground symbol: fails for slot-bound
// variables; constants bind directly, structured symbols materialize an
// arena skeleton, bind, and push the fresh arguments.
bool try_variable_matching(RtCell* var, const TrieSymbol& symbol, KernelState& ks);

// One term against one path symbol with no sibling search: the rule kernel
// driving the naive per-leaf matcher.
bool match_term_symbol(RtCell* t, const TrieSymbol& symbol, KernelState& ks);

// Term-log entry: the popped cell plus the stack size just before the pop.
// Replaying newest-first restores the stack exactly, discarding pushes made
// after each pop.
struct LogEntry {
    RtCell* cell;
    uint32_t stack_size;
};

inline void replay_term_log(std::vector<LogEntry>& log, size_t log_top,
                            std::vector<RtCell*>& stack) {
    while (log.size() > log_top) {
        LogEntry e = log.back();
        log.pop_back();
        assert(e.stack_size >= 1 && stack.size() >= e.stack_size - 1);
        stack.resize(e.stack_size - 1);
        stack.push_back(e.cell);
    }
}

}  // namespace instrie
