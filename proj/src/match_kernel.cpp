#include "instrie/match_kernel.hpp"

namespace instrie {

RtCell* Arena::make_struct(Sym functor, uint32_t arity) {
    RtCell* c = &cells_.emplace_back();
    c->tag = RtCell::Tag::Struct;
    c->sym = functor;
    c->slot_or_arity = arity;
    c->args.reserve(arity);
    for (uint32_t i = 0; i < arity; ++i) c->args.push_back(make_ref());
    return c;
}

RtCell* Arena::make_list() {
    RtCell* c = &cells_.emplace_back();
    c->tag = RtCell::Tag::List;
    c->args.reserve(2);
    c->args.push_back(make_ref());
    c->args.push_back(make_ref());
    return c;
}

RtCell* KernelState::intern(const Term& t) {
    switch (t.tag()) {
        case TermTag::Atom: return arena.make_atom(t.name());
        case TermTag::Int: return arena.make_int(t.value());
        case TermTag::Nil: return arena.make_nil();
        case TermTag::Var: {
            if (var_cells_.size() <= t.var_id()) var_cells_.resize(t.var_id() + 1, nullptr);
            RtCell*& cell = var_cells_[t.var_id()];
            if (!cell) cell = arena.make_ref();
            return cell;
        }
        case TermTag::Struct: {
            RtCell* c = arena.make_struct(t.name(), t.arity());
            for (uint32_t i = 0; i < t.arity(); ++i) c->args[i] = intern(t.arg(i));
            return c;
        }
        case TermTag::List: {
            RtCell* c = arena.make_list();
            c->args[0] = intern(t.head());
            c->args[1] = intern(t.tail());
            return c;
        }
    }
    return nullptr;
}

TrieSymbol principal_symbol(const RtCell* t) {
    switch (t->tag) {
        case RtCell::Tag::Atom: return TrieSymbol::atom(t->sym);
        case RtCell::Tag::Int: return TrieSymbol::integer(t->value);
        case RtCell::Tag::Nil: return TrieSymbol::nil();
        case RtCell::Tag::Struct: return TrieSymbol::functor(t->sym, t->slot_or_arity);
        case RtCell::Tag::List: return TrieSymbol::list_cons();
        case RtCell::Tag::Ref:
        case RtCell::Tag::Slot: break;
    }
    assert(false && "variable cells have no principal symbol");
    return TrieSymbol::nil();
}

void push_arguments(std::vector<RtCell*>& stack, RtCell* structured) {
    const std::vector<RtCell*>& args = structured->args;
    for (size_t i = args.size(); i > 0; --i) stack.push_back(args[i - 1]);
}

bool try_variable_matching(RtCell* var, const TrieSymbol& symbol, KernelState& ks) {
    if (symbol.kind == TrieSymbol::Kind::Var) {
        if (var->tag == RtCell::Tag::Slot) return var->slot_or_arity == symbol.index;
        ks.bind(var, ks.slot_cell(symbol.index));
        return true;
    }
    // A variable already matched against a trie variable cannot take a
    // ground symbol.
    if (var->tag == RtCell::Tag::Slot) return false;
    switch (symbol.kind) {
        case TrieSymbol::Kind::Atom: ks.bind(var, ks.arena.make_atom(symbol.sym)); break;
        case TrieSymbol::Kind::Int: ks.bind(var, ks.arena.make_int(symbol.value)); break;
        case TrieSymbol::Kind::Nil: ks.bind(var, ks.arena.make_nil()); break;
        case TrieSymbol::Kind::Functor: {
            RtCell* skeleton = ks.arena.make_struct(symbol.sym, symbol.index);
            ks.bind(var, skeleton);
            push_arguments(ks.term_stack, skeleton);
            break;
        }
        case TrieSymbol::Kind::ListCons: {
            RtCell* skeleton = ks.arena.make_list();
            ks.bind(var, skeleton);
            push_arguments(ks.term_stack, skeleton);
            break;
        }
        case TrieSymbol::Kind::Var: break;  // handled above
    }
    return true;
}

bool match_term_symbol(RtCell* t, const TrieSymbol& symbol, KernelState& ks) {
    t = deref(t);
    switch (t->tag) {
        case RtCell::Tag::Ref:
        case RtCell::Tag::Slot: return try_variable_matching(t, symbol, ks);
        case RtCell::Tag::Struct:
        case RtCell::Tag::List:
            if (principal_symbol(t) != symbol) return false;
            push_arguments(ks.term_stack, t);
            return true;
        default: return principal_symbol(t) == symbol;
    }
}

}  // namespace instrie
