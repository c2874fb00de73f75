#pragma once

#include "instrie/subgoal_trie.hpp"
#include "instrie/term.hpp"

namespace instrie::testing {

// Calls of the p/3 worked-example table: two evaluating calls sharing the
// f/1 branch, one ground completed branch, and a 5-branch holding one
// completed and one evaluating leaf.
struct ExampleCalls {
    Term f_ground = parse_term("p(f(3),2,Y)");
    Term f_shared = parse_term("p(f(X),2,f(X))");
    Term done_a = parse_term("p(3,1,1)");
    Term done_b = parse_term("p(5,2,9)");
    Term live_5 = parse_term("p(5,2,5)");
};

// Builds the example in an order that fixes the sibling chains: f/1 before 3
// before 5 at the level below p/3, and 9 before 5 under the 5-branch.
inline ExampleCalls build_example_trie(SubgoalTrie& trie) {
    ExampleCalls c;
    auto call = [&](const Term& t) {
        SubgoalFrame* f = trie.check_insert(t).first;
        trie.mark_evaluating(*f);
        return f;
    };
    call(c.f_ground);
    call(c.f_shared);
    trie.mark_completed(*call(c.done_a));
    trie.mark_completed(*call(c.done_b));
    call(c.live_5);
    return c;
}

}  // namespace instrie::testing
