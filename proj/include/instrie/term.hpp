#ifndef INSTRIE_TERM_HPP
#define INSTRIE_TERM_HPP

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace instrie {

/// Interned atom/functor name. Comparing two Syms compares identity of the
/// spelled name; the table is process-global and append-only.
class Sym {
public:
    Sym() : id_(0) {}
    explicit Sym(uint32_t id) : id_(id) {}
    uint32_t id() const { return id_; }
    bool operator==(const Sym& o) const { return id_ == o.id_; }
    bool operator!=(const Sym& o) const { return id_ != o.id_; }

private:
    uint32_t id_;
};

Sym intern(std::string_view name);
const std::string& sym_name(Sym s);

enum class TermTag : uint8_t { Atom, Int, Var, Struct, List, Nil };

/// Immutable first-order term: atoms, integers, variables, structures,
/// list cells and the empty list. Cheap to copy and safe to share.
/// Within one term, equal variable ids denote the same variable.
class Term {
public:
    static Term atom(Sym name);
    static Term atom(std::string_view name) { return atom(intern(name)); }
    static Term integer(int64_t value);
    static Term var(uint32_t id);
    static Term structure(Sym functor, std::vector<Term> args);
    static Term structure(std::string_view functor, std::vector<Term> args) {
        return structure(intern(functor), std::move(args));
    }
    static Term list(Term head, Term tail);
    static Term nil();

    TermTag tag() const { return rep_->tag; }
    bool is_constant() const {
        return tag() == TermTag::Atom || tag() == TermTag::Int || tag() == TermTag::Nil;
    }

    Sym name() const { return rep_->name; }        // Atom, Struct
    int64_t value() const { return rep_->value; }  // Int
    uint32_t var_id() const { return rep_->var_id; }
    uint32_t arity() const { return static_cast<uint32_t>(rep_->args.size()); }
    const Term& arg(size_t i) const { return rep_->args[i]; }
    const Term& head() const { return rep_->args[0]; }  // List
    const Term& tail() const { return rep_->args[1]; }  // List

    /// Syntactic equality; variables are equal iff their ids are.
    bool operator==(const Term& o) const;
    bool operator!=(const Term& o) const { return !(*this == o); }

private:
    struct Rep {
        TermTag tag;
        Sym name;
        int64_t value = 0;
        uint32_t var_id = 0;
        std::vector<Term> args;
    };
    explicit Term(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
    std::shared_ptr<const Rep> rep_;
};

struct ParseError : std::runtime_error {
    ParseError(const std::string& what, size_t position)
        : std::runtime_error(what), position(position) {}
    size_t position;
};

/// Parses the Prolog-like term grammar: lowercase-initial identifiers are
/// atoms, uppercase-initial identifiers are variables (ids assigned by first
/// occurrence), decimal integers, f(t1,...,tn), [a,b], [H|T], [].
Term parse_term(std::string_view text);

/// Formats a term; variables are renamed A, B, ... by first occurrence, so
/// parse_term(format_term(t)) is a variant of t.
std::string format_term(const Term& t);

/// One-sided matching: true iff some substitution over general's variables
/// alone maps general onto specific. Variable id spaces of the two terms are
/// treated as disjoint. Used as the subsumption oracle in tests and by the
/// naive retrieval baselines' correctness checks.
bool subsumes(const Term& general, const Term& specific);

/// True iff the terms are identical up to a renaming of variables.
bool variants(const Term& a, const Term& b);

}  // namespace instrie

#endif
