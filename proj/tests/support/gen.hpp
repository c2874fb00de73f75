#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "instrie/term.hpp"

namespace instrie::testing {

using Rng = std::mt19937_64;

inline int rand_int(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline bool chance(Rng& rng, double p) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

// Knobs for random term generation. Depth counts nesting levels of structured
// arguments; 0 generates only variables and constants.
struct TermShape {
    int max_depth = 3;
    int max_arity = 4;
    double var_p = 0.25;  // probability a position is a variable
    int var_pool = 4;     // variable ids drawn from [0, var_pool)
    int int_lo = 0;
    int int_hi = 9;
};

inline constexpr std::string_view kAtomPool[] = {"a", "b", "c", "foo", "bar"};
inline constexpr std::string_view kFunctorPool[] = {"f", "g", "h"};

inline Term gen_term(Rng& rng, const TermShape& shape, int depth = 0) {
    if (chance(rng, shape.var_p)) return Term::var(static_cast<uint32_t>(rand_int(rng, 0, shape.var_pool - 1)));
    const bool deeper = depth < shape.max_depth;
    switch (rand_int(rng, 0, deeper ? 5 : 2)) {
        case 0:
            return Term::integer(rand_int(rng, shape.int_lo, shape.int_hi));
        case 1:
            return Term::atom(kAtomPool[static_cast<size_t>(rand_int(rng, 0, 4))]);
        case 2:
            return Term::nil();
        case 3: {
            std::vector<Term> args;
            const int n = rand_int(rng, 1, shape.max_arity);
            args.reserve(static_cast<size_t>(n));
            for (int i = 0; i < n; ++i) args.push_back(gen_term(rng, shape, depth + 1));
            return Term::structure(kFunctorPool[static_cast<size_t>(rand_int(rng, 0, 2))],
                                   std::move(args));
        }
        case 4:
            return Term::list(gen_term(rng, shape, depth + 1),
                              chance(rng, 0.5) ? Term::nil() : gen_term(rng, shape, depth + 1));
        default:
            return Term::list(gen_term(rng, shape, depth + 1), Term::nil());
    }
}

// A call of the trie predicate. With `wide_first_arg`, the first argument is
// an integer drawn from a wide range so sibling chains outgrow the hash
// threshold once enough calls accumulate.
inline Term gen_call(Rng& rng, const TermShape& shape, uint32_t arity,
                     bool wide_first_arg = false) {
    std::vector<Term> args;
    args.reserve(arity);
    for (uint32_t i = 0; i < arity; ++i) {
        if (i == 0 && wide_first_arg)
            args.push_back(Term::integer(rand_int(rng, 0, 40)));
        else
            args.push_back(gen_term(rng, shape));
    }
    return Term::structure("p", std::move(args));
}

// A query over the same predicate, biased toward variables (and repeated
// variables) so it is usually more general than the stored calls.
inline Term gen_query(Rng& rng, uint32_t arity, bool wide_first_arg = false) {
    TermShape shape;
    shape.var_p = 0.55;
    shape.var_pool = 3;
    shape.max_depth = 2;
    std::vector<Term> args;
    args.reserve(arity);
    for (uint32_t i = 0; i < arity; ++i) {
        if (i == 0 && wide_first_arg && chance(rng, 0.5))
            args.push_back(Term::integer(rand_int(rng, 0, 40)));
        else
            args.push_back(gen_term(rng, shape));
    }
    return Term::structure("p", std::move(args));
}

}  // namespace instrie::testing
