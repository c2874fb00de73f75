#include "instrie/script.hpp"

#include <cctype>
#include <cstdint>
#include <istream>
#include <map>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "instrie/baselines.hpp"
#include "instrie/matcher.hpp"
#include "instrie/subgoal_trie.hpp"
#include "instrie/term.hpp"
#include "instrie/trie_symbol.hpp"

namespace instrie {
namespace {

struct ScriptError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Table {
    SubgoalTrie trie;
    LeafRegistry registry;

    Table(Sym pred, uint32_t arity) : trie(pred, arity) {}
};

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

// Splits off the first whitespace-delimited word; rest keeps inner spacing.
std::pair<std::string_view, std::string_view> split_word(std::string_view s) {
    size_t i = 0;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    return {s.substr(0, i), trim(s.substr(i))};
}

Term parse_call(std::string_view text) {
    try {
        return parse_term(text);
    } catch (const ParseError& e) {
        throw ScriptError(std::string(e.what()));
    }
}

class Engine {
public:
    explicit Engine(std::ostream& out) : out_(out) {}

    void run_line(std::string_view line) {
        if (size_t hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) return;

        auto [cmd, rest] = split_word(line);
        if (cmd == "table")
            cmd_table(rest);
        else if (cmd == "call")
            cmd_call(rest);
        else if (cmd == "complete")
            cmd_complete(rest);
        else if (cmd == "retrieve")
            cmd_retrieve(rest);
        else if (cmd == "dump")
            cmd_dump(rest);
        else
            throw ScriptError("unknown command '" + std::string(cmd) + "'");
    }

private:
    void cmd_table(std::string_view arg) {
        size_t slash = arg.rfind('/');
        if (arg.empty() || slash == std::string_view::npos)
            throw ScriptError("expected table name/arity");
        std::string_view name = arg.substr(0, slash);
        std::string_view digits = arg.substr(slash + 1);
        if (name.empty() || digits.empty()) throw ScriptError("expected table name/arity");
        uint32_t arity = 0;
        for (char c : digits) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw ScriptError("bad arity '" + std::string(digits) + "'");
            arity = arity * 10 + static_cast<uint32_t>(c - '0');
            if (arity > 255) throw ScriptError("bad arity '" + std::string(digits) + "'");
        }
        Sym pred = intern(name);
        if (by_key_.count({pred.id(), arity}))
            throw ScriptError("table " + std::string(name) + "/" + std::string(digits) +
                              " already declared");
        tables_.push_back(std::make_unique<Table>(pred, arity));
        by_key_[{pred.id(), arity}] = tables_.back().get();
    }

    Table& table_for(const Term& call) {
        if (call.tag() != TermTag::Atom && call.tag() != TermTag::Struct)
            throw ScriptError(format_term(call) + " is not a callable term");
        Sym pred = call.name();
        uint32_t arity = call.tag() == TermTag::Struct ? call.arity() : 0;
        auto it = by_key_.find({pred.id(), arity});
        if (it == by_key_.end())
            throw ScriptError("no table " + sym_name(pred) + "/" + std::to_string(arity));
        return *it->second;
    }

    void cmd_call(std::string_view arg) {
        Term call = parse_call(arg);
        Table& t = table_for(call);
        SubgoalFrame* frame = t.trie.check_insert(call).first;
        if (frame->state == SubgoalFrame::State::Evaluating)
            throw ScriptError(format_term(call) + " is already evaluating");
        t.trie.mark_evaluating(*frame);
    }

    void cmd_complete(std::string_view arg) {
        Term call = parse_call(arg);
        Table& t = table_for(call);
        SubgoalFrame* frame = t.trie.lookup_variant(call);
        if (!frame) throw ScriptError(format_term(call) + " was never called");
        if (frame->state != SubgoalFrame::State::Evaluating)
            throw ScriptError(format_term(call) + " is not evaluating");
        t.trie.mark_completed(*frame);
    }

    void cmd_retrieve(std::string_view arg) {
        std::string_view alg = "eirs";
        // The algorithm is an optional trailing word; a bare term never ends
        // with one since these names parse as atoms only in full.
        if (size_t space = arg.find_last_of(" \t"); space != std::string_view::npos) {
            std::string_view last = arg.substr(space + 1);
            if (last == "eirs" || last == "nirs" || last == "sirs") {
                alg = last;
                arg = trim(arg.substr(0, space));
            }
        }
        Term query = parse_call(arg);
        Table& t = table_for(query);

        std::vector<const SubgoalFrame*> results;
        if (alg == "eirs")
            results = collect_subsumed_subgoals(t.trie, query);
        else if (alg == "nirs")
            results = collect_nirs(t.trie, t.registry, query);
        else
            results = collect_sirs(t.trie, query);
        for (const SubgoalFrame* frame : results) out_ << format_term(frame->call) << '\n';
    }

    void cmd_dump(std::string_view arg) {
        if (!arg.empty()) throw ScriptError("dump takes no argument");
        for (const auto& t : tables_) {
            out_ << "table " << sym_name(t->trie.predicate()) << '/' << t->trie.arity() << " ["
                 << effective_in_eval(t->trie.root()) << "]\n";
            for_each_child(t->trie.root(), [&](const TrieNode& child) { dump_node(child, 1); });
        }
    }

    void dump_node(const TrieNode& node, int depth) {
        for (int i = 0; i < depth; ++i) out_ << "  ";
        out_ << trie_symbol_name(node.symbol) << " [" << effective_in_eval(node) << "]";
        if (node.is_leaf()) {
            out_ << " leaf " << format_term(node.frame->call) << ' '
                 << (node.frame->state == SubgoalFrame::State::Evaluating ? "evaluating"
                                                                          : "completed");
        }
        out_ << '\n';
        for_each_child(node, [&](const TrieNode& child) { dump_node(child, depth + 1); });
    }

    std::vector<std::unique_ptr<Table>> tables_;  // declaration order, for dumps
    std::map<std::pair<uint32_t, uint32_t>, Table*> by_key_;
    std::ostream& out_;
};

}  // namespace

int run_script(std::istream& in, std::ostream& out, std::ostream& err) {
    Engine engine(out);
    std::string line;
    for (int line_no = 1; std::getline(in, line); ++line_no) {
        try {
            engine.run_line(line);
        } catch (const ScriptError& e) {
            err << "line " << line_no << ": " << e.what() << '\n';
            return 1;
        } catch (const std::exception& e) {
            err << "line " << line_no << ": " << e.what() << '\n';
            return 1;
        }
    }
    return 0;
}

}  // namespace instrie
