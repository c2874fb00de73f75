#include "instrie/term.hpp"

#include <cctype>
#include <mutex>
#include <sstream>
#include <unordered_map>

namespace instrie {

namespace {

struct SymbolTable {
    std::mutex mu;
    std::unordered_map<std::string, uint32_t> ids;
    std::vector<std::string> names;

    SymbolTable() { names.emplace_back(""); }  // id 0 reserved
};

SymbolTable& table() {
    static SymbolTable t;
    return t;
}

}  // namespace

Sym intern(std::string_view name) {
    SymbolTable& t = table();
    std::lock_guard<std::mutex> lock(t.mu);
    auto it = t.ids.find(std::string(name));
    if (it != t.ids.end()) return Sym(it->second);
    uint32_t id = static_cast<uint32_t>(t.names.size());
    t.names.emplace_back(name);
    t.ids.emplace(std::string(name), id);
    return Sym(id);
}

const std::string& sym_name(Sym s) {
    SymbolTable& t = table();
    std::lock_guard<std::mutex> lock(t.mu);
    return t.names.at(s.id());
}

Term Term::atom(Sym name) {
    auto rep = std::make_shared<Rep>();
    rep->tag = TermTag::Atom;
    rep->name = name;
    return Term(std::move(rep));
}

Term Term::integer(int64_t value) {
    auto rep = std::make_shared<Rep>();
    rep->tag = TermTag::Int;
    rep->value = value;
    return Term(std::move(rep));
}

Term Term::var(uint32_t id) {
    auto rep = std::make_shared<Rep>();
    rep->tag = TermTag::Var;
    rep->var_id = id;
    return Term(std::move(rep));
}

Term Term::structure(Sym functor, std::vector<Term> args) {
    if (args.empty()) throw std::invalid_argument("structure arity must be positive");
    auto rep = std::make_shared<Rep>();
    rep->tag = TermTag::Struct;
    rep->name = functor;
    rep->args = std::move(args);
    return Term(std::move(rep));
}

Term Term::list(Term head, Term tail) {
    auto rep = std::make_shared<Rep>();
    rep->tag = TermTag::List;
    rep->args.push_back(std::move(head));
    rep->args.push_back(std::move(tail));
    return Term(std::move(rep));
}

Term Term::nil() {
    auto rep = std::make_shared<Rep>();
    rep->tag = TermTag::Nil;
    return Term(std::move(rep));
}

bool Term::operator==(const Term& o) const {
    if (rep_ == o.rep_) return true;
    if (tag() != o.tag()) return false;
    switch (tag()) {
        case TermTag::Atom: return name() == o.name();
        case TermTag::Int: return value() == o.value();
        case TermTag::Var: return var_id() == o.var_id();
        case TermTag::Nil: return true;
        case TermTag::Struct:
            if (name() != o.name() || arity() != o.arity()) return false;
            [[fallthrough]];
        case TermTag::List:
            for (size_t i = 0; i < rep_->args.size(); ++i)
                if (rep_->args[i] != o.rep_->args[i]) return false;
            return true;
    }
    return false;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Term parse() {
        Term t = term();
        skip_ws();
        if (pos_ != text_.size()) fail("trailing input after term");
        return t;
    }

private:
    std::string_view text_;
    size_t pos_ = 0;
    std::unordered_map<std::string, uint32_t> var_ids_;

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    bool eat(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    static bool ident_start_lower(char c) { return std::islower(static_cast<unsigned char>(c)); }
    static bool ident_start_upper(char c) {
        return std::isupper(static_cast<unsigned char>(c)) || c == '_';
    }
    static bool ident_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }

    std::string identifier() {
        size_t start = pos_;
        while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    Term term() {
        skip_ws();
        char c = peek();
        if (c == '\0') fail("unexpected end of input");
        if (c == '[') return list_term();
        if (std::isdigit(static_cast<unsigned char>(c)) ||
            (c == '-' && pos_ + 1 < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))))
            return integer_term();
        if (ident_start_lower(c)) return atom_or_struct();
        if (ident_start_upper(c)) {
            std::string name = identifier();
            auto [it, fresh] = var_ids_.emplace(name, static_cast<uint32_t>(var_ids_.size()));
            (void)fresh;
            return Term::var(it->second);
        }
        fail("unexpected character");
    }

    Term integer_term() {
        size_t start = pos_;
        if (peek() == '-') ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        int64_t v = 0;
        try {
            v = std::stoll(std::string(text_.substr(start, pos_ - start)));
        } catch (const std::out_of_range&) {
            pos_ = start;
            fail("integer out of range");
        }
        return Term::integer(v);
    }

    Term atom_or_struct() {
        std::string name = identifier();
        if (!eat('(')) return Term::atom(name);
        std::vector<Term> args;
        args.push_back(term());
        skip_ws();
        while (eat(',')) args.push_back(term()), skip_ws();
        expect(')');
        return Term::structure(name, std::move(args));
    }

    Term list_term() {
        expect('[');
        skip_ws();
        if (eat(']')) return Term::nil();
        std::vector<Term> elems;
        elems.push_back(term());
        skip_ws();
        while (eat(',')) elems.push_back(term()), skip_ws();
        Term tail = Term::nil();
        if (eat('|')) {
            tail = term();
            skip_ws();
        }
        expect(']');
        for (auto it = elems.rbegin(); it != elems.rend(); ++it) tail = Term::list(*it, tail);
        return tail;
    }
};

}  // namespace

Term parse_term(std::string_view text) { return Parser(text).parse(); }

// ---------------------------------------------------------------------------
// Formatting

namespace {

std::string var_display_name(uint32_t index) {
    std::string s(1, static_cast<char>('A' + index % 26));
    if (index >= 26) s += std::to_string(index / 26);
    return s;
}

void format_into(const Term& t, std::ostringstream& out,
                 std::unordered_map<uint32_t, uint32_t>& var_order) {
    switch (t.tag()) {
        case TermTag::Atom:
            out << sym_name(t.name());
            break;
        case TermTag::Int:
            out << t.value();
            break;
        case TermTag::Var: {
            auto [it, fresh] =
                var_order.emplace(t.var_id(), static_cast<uint32_t>(var_order.size()));
            (void)fresh;
            out << var_display_name(it->second);
            break;
        }
        case TermTag::Nil:
            out << "[]";
            break;
        case TermTag::Struct:
            out << sym_name(t.name()) << '(';
            for (uint32_t i = 0; i < t.arity(); ++i) {
                if (i) out << ',';
                format_into(t.arg(i), out, var_order);
            }
            out << ')';
            break;
        case TermTag::List: {
            out << '[';
            const Term* cur = &t;
            format_into(cur->head(), out, var_order);
            while (cur->tail().tag() == TermTag::List) {
                cur = &cur->tail();
                out << ',';
                format_into(cur->head(), out, var_order);
            }
            if (cur->tail().tag() != TermTag::Nil) {
                out << '|';
                format_into(cur->tail(), out, var_order);
            }
            out << ']';
            break;
        }
    }
}

}  // namespace

std::string format_term(const Term& t) {
    std::ostringstream out;
    std::unordered_map<uint32_t, uint32_t> var_order;
    format_into(t, out, var_order);
    return out.str();
}

// ---------------------------------------------------------------------------
// Subsumption

namespace {

bool match_onto(const Term& general, const Term& specific,
                std::unordered_map<uint32_t, Term>& bindings) {
    if (general.tag() == TermTag::Var) {
        auto it = bindings.find(general.var_id());
        if (it != bindings.end()) return it->second == specific;
        bindings.emplace(general.var_id(), specific);
        return true;
    }
    if (general.tag() != specific.tag()) return false;
    switch (general.tag()) {
        case TermTag::Atom: return general.name() == specific.name();
        case TermTag::Int: return general.value() == specific.value();
        case TermTag::Nil: return true;
        case TermTag::Struct:
            if (general.name() != specific.name() || general.arity() != specific.arity())
                return false;
            for (uint32_t i = 0; i < general.arity(); ++i)
                if (!match_onto(general.arg(i), specific.arg(i), bindings)) return false;
            return true;
        case TermTag::List:
            return match_onto(general.head(), specific.head(), bindings) &&
                   match_onto(general.tail(), specific.tail(), bindings);
        case TermTag::Var: break;
    }
    return false;
}

}  // namespace

bool subsumes(const Term& general, const Term& specific) {
    std::unordered_map<uint32_t, Term> bindings;
    return match_onto(general, specific, bindings);
}

namespace {

// Lockstep walk with per-side renaming maps; variables are variants iff
// their first occurrences line up.
bool variants_walk(const Term& a, const Term& b, std::unordered_map<uint32_t, uint32_t>& ra,
                   std::unordered_map<uint32_t, uint32_t>& rb) {
    if (a.tag() != b.tag()) return false;
    switch (a.tag()) {
        case TermTag::Atom: return a.name() == b.name();
        case TermTag::Int: return a.value() == b.value();
        case TermTag::Nil: return true;
        case TermTag::Var: {
            auto [ia, fa] = ra.emplace(a.var_id(), static_cast<uint32_t>(ra.size()));
            auto [ib, fb] = rb.emplace(b.var_id(), static_cast<uint32_t>(rb.size()));
            if (fa != fb) return false;
            return ia->second == ib->second;
        }
        case TermTag::Struct:
            if (a.name() != b.name() || a.arity() != b.arity()) return false;
            for (uint32_t i = 0; i < a.arity(); ++i)
                if (!variants_walk(a.arg(i), b.arg(i), ra, rb)) return false;
            return true;
        case TermTag::List:
            return variants_walk(a.head(), b.head(), ra, rb) &&
                   variants_walk(a.tail(), b.tail(), ra, rb);
    }
    return false;
}

}  // namespace

bool variants(const Term& a, const Term& b) {
    std::unordered_map<uint32_t, uint32_t> ra, rb;
    return variants_walk(a, b, ra, rb);
}

}  // namespace instrie
