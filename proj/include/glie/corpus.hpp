#ifndef GLIE_CORPUS_HPP
#define GLIE_CORPUS_HPP

#include "glie/algebra.hpp"

namespace glie {

/// The built-in test corpus, in canonical order:
///   ab2_f2    2-dim abelian over F_2, degrees 0, 1
///   sol2_f2   solvable [e,f] = f over F_2, degrees 0, 1
///   sol2_q    the same algebra over the rationals
///   heis3_f2  Heisenberg [x,y] = z over F_2, degrees 1, 1, 2
///   heis3_f3  Heisenberg over F_3
///   sl2_f5    sl2 over F_5 with e, h, f graded by 1, 0, -1
///   dsum_f2   sol2 (+) heis3 over F_2, degrees 0, 1, 1, 1, 2
const std::vector<AlgebraPtr>& builtin_corpus();

/// Corpus entry by name; throws std::out_of_range for unknown names.
AlgebraPtr corpus_algebra(const std::string& name);

}  // namespace glie

#endif
