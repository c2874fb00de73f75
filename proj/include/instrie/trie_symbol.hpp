#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "instrie/term.hpp"

namespace instrie {

// One element of a flattened call. A term maps to the preorder sequence of
// its symbols: constants stand for themselves, Struct/List introduce an
// arity, and variables are numbered by first occurrence so that any two
// variant terms flatten to the same sequence.
struct TrieSymbol {
    enum class Kind : uint8_t { Atom, Int, Functor, ListCons, Nil, Var };

    Kind kind = Kind::Nil;
    Sym sym;              // Atom, Functor
    uint32_t index = 0;   // Var: first-occurrence number; Functor: arity
    int64_t value = 0;    // Int

    static TrieSymbol atom(Sym s) { return {Kind::Atom, s, 0, 0}; }
    static TrieSymbol integer(int64_t v) { return {Kind::Int, Sym{}, 0, v}; }
    static TrieSymbol functor(Sym s, uint32_t arity) { return {Kind::Functor, s, arity, 0}; }
    static TrieSymbol list_cons() { return {Kind::ListCons, Sym{}, 0, 0}; }
    static TrieSymbol nil() { return {Kind::Nil, Sym{}, 0, 0}; }
    static TrieSymbol var(uint32_t n) { return {Kind::Var, Sym{}, n, 0}; }

    bool operator==(const TrieSymbol& o) const {
        if (kind != o.kind) return false;
        switch (kind) {
            case Kind::Atom: return sym == o.sym;
            case Kind::Int: return value == o.value;
            case Kind::Functor: return sym == o.sym && index == o.index;
            case Kind::ListCons:
            case Kind::Nil: return true;
            case Kind::Var: return index == o.index;
        }
        return false;
    }
    bool operator!=(const TrieSymbol& o) const { return !(*this == o); }
};

uint64_t trie_symbol_hash(const TrieSymbol& s);

// Preorder flattening with variables renumbered by first occurrence.
// flatten(t(X, a)) = [functor(t,2), var(0), atom(a)].
std::vector<TrieSymbol> flatten(const Term& term);

// Inverse of flatten up to variable renaming: rebuilds a term whose
// variables are Var(0..k-1) in first-occurrence order. Throws
// std::invalid_argument if the sequence is not a single complete term.
Term decode_symbols(std::span<const TrieSymbol> symbols);

// Display form used by trie dumps: atoms and integers print as themselves,
// functors as name/arity, variables as ?N.
std::string trie_symbol_name(const TrieSymbol& s);

}  // namespace instrie
