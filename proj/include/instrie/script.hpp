#pragma once

#include <iosfwd>

namespace instrie {

// Executes a line-oriented table script:
//   table p/3            declare a table for p/3
//   call p(1,2,3)        store the call and mark it evaluating
//   complete p(1,2,3)    mark a stored evaluating call completed
//   retrieve p(X,2,X) [eirs|nirs|sirs]
//                        print the evaluating stored calls subsumed by the
//                        query, one per line in discovery order (eirs when
//                        no algorithm is named)
//   dump                 print every table's trie with per-node counts
//   # ...                comment; blank lines are skipped
//
// Results and dumps go to `out`. The first faulty line stops execution with a
// "line N: message" diagnostic on `err` and a return of 1; success returns 0.
int run_script(std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace instrie
