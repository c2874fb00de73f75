#include "instrie/trie_symbol.hpp"

#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace instrie {

uint64_t trie_symbol_hash(const TrieSymbol& s) {
    uint64_t h = static_cast<uint64_t>(s.kind);
    switch (s.kind) {
        case TrieSymbol::Kind::Atom: h = h * 0x9e3779b97f4a7c15ull + s.sym.id(); break;
        case TrieSymbol::Kind::Int: h = h * 0x9e3779b97f4a7c15ull + static_cast<uint64_t>(s.value); break;
        case TrieSymbol::Kind::Functor:
            h = (h * 0x9e3779b97f4a7c15ull + s.sym.id()) * 0x9e3779b97f4a7c15ull + s.index;
            break;
        case TrieSymbol::Kind::ListCons:
        case TrieSymbol::Kind::Nil: break;
        case TrieSymbol::Kind::Var: h = h * 0x9e3779b97f4a7c15ull + s.index; break;
    }
    // splitmix64 finalizer; spreads consecutive ids across buckets.
    h += 0x9e3779b97f4a7c15ull;
    h = (h ^ (h >> 30)) * 0xbf58476d1ce4e5b9ull;
    h = (h ^ (h >> 27)) * 0x94d049bb133111ebull;
    return h ^ (h >> 31);
}

namespace {

void flatten_into(const Term& t, std::unordered_map<uint32_t, uint32_t>& renaming,
                  std::vector<TrieSymbol>& out) {
    switch (t.tag()) {
        case TermTag::Atom: out.push_back(TrieSymbol::atom(t.name())); break;
        case TermTag::Int: out.push_back(TrieSymbol::integer(t.value())); break;
        case TermTag::Nil: out.push_back(TrieSymbol::nil()); break;
        case TermTag::Var: {
            auto [it, _] = renaming.emplace(t.var_id(), static_cast<uint32_t>(renaming.size()));
            out.push_back(TrieSymbol::var(it->second));
            break;
        }
        case TermTag::Struct:
            out.push_back(TrieSymbol::functor(t.name(), t.arity()));
            for (uint32_t i = 0; i < t.arity(); ++i) flatten_into(t.arg(i), renaming, out);
            break;
        case TermTag::List:
            out.push_back(TrieSymbol::list_cons());
            flatten_into(t.head(), renaming, out);
            flatten_into(t.tail(), renaming, out);
            break;
    }
}

Term decode_one(std::span<const TrieSymbol> symbols, size_t& pos) {
    if (pos >= symbols.size()) throw std::invalid_argument("truncated symbol sequence");
    const TrieSymbol& s = symbols[pos++];
    switch (s.kind) {
        case TrieSymbol::Kind::Atom: return Term::atom(s.sym);
        case TrieSymbol::Kind::Int: return Term::integer(s.value);
        case TrieSymbol::Kind::Nil: return Term::nil();
        case TrieSymbol::Kind::Var: return Term::var(s.index);
        case TrieSymbol::Kind::Functor: {
            std::vector<Term> args;
            args.reserve(s.index);
            for (uint32_t i = 0; i < s.index; ++i) args.push_back(decode_one(symbols, pos));
            return Term::structure(s.sym, std::move(args));
        }
        case TrieSymbol::Kind::ListCons: {
            Term head = decode_one(symbols, pos);
            Term tail = decode_one(symbols, pos);
            return Term::list(std::move(head), std::move(tail));
        }
    }
    throw std::invalid_argument("unknown symbol kind");
}

}  // namespace

std::vector<TrieSymbol> flatten(const Term& term) {
    std::vector<TrieSymbol> out;
    std::unordered_map<uint32_t, uint32_t> renaming;
    flatten_into(term, renaming, out);
    return out;
}

Term decode_symbols(std::span<const TrieSymbol> symbols) {
    size_t pos = 0;
    Term t = decode_one(symbols, pos);
    if (pos != symbols.size()) throw std::invalid_argument("trailing symbols after complete term");
    return t;
}

std::string trie_symbol_name(const TrieSymbol& s) {
    std::ostringstream os;
    switch (s.kind) {
        case TrieSymbol::Kind::Atom: os << sym_name(s.sym); break;
        case TrieSymbol::Kind::Int: os << s.value; break;
        case TrieSymbol::Kind::Functor: os << sym_name(s.sym) << '/' << s.index; break;
        case TrieSymbol::Kind::ListCons: os << "'.'/2"; break;
        case TrieSymbol::Kind::Nil: os << "[]"; break;
        case TrieSymbol::Kind::Var: os << '?' << s.index; break;
    }
    return os.str();
}

}  // namespace instrie
