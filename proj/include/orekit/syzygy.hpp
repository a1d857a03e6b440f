#ifndef OREKIT_SYZYGY_HPP
#define OREKIT_SYZYGY_HPP

#include "orekit/involution.hpp"

namespace orekit {

struct CCOptions {
    MonoOrder kind = MonoOrder::degrevlex;
    bool minimize = true;
};

// Generating compatibility conditions of A: rows C with C * A = 0 that
// generate all of them, written in the second members of A.
OpMatrix compatibility_conditions(Context& ctx, const OpMatrix& A, const CCOptions& opt = {});

// Completion of [A | I] with the unknown block dominating. Row i of the
// basis satisfies left(i) = right(i) * A; the rows with vanishing left part
// are the raw syzygies.
struct AugmentedBasis {
    std::vector<Row> left, right;
};
AugmentedBasis augmented_completion(Context& ctx, const OpMatrix& A, MonoOrder kind = MonoOrder::degrevlex);

// Whether every row of X lies in the left module generated by the rows of G.
bool module_contains(Context& ctx, const OpMatrix& G, const OpMatrix& X);
bool module_equal(Context& ctx, const OpMatrix& G, const OpMatrix& H);
// Drop rows that are generated by the others.
OpMatrix minimize_generators(Context& ctx, const OpMatrix& G);

struct SequenceFlags {
    bool formally_exact = true;
    bool strictly_exact = false;
    bool involutive = false;
};

struct DiffSequence {
    std::vector<OpMatrix> ops;  // ops[0] is the input, ops[i+1] = CC(ops[i])
    std::vector<int> orders;
    std::vector<bool> fi, inv;
    SequenceFlags flags;
    bool terminated = false;  // last CC was empty
};

DiffSequence build_sequence(Context& ctx, const OpMatrix& A, int max_steps = -1, MonoOrder kind = MonoOrder::degrevlex);

// Rank over D of the row module: number of unknowns carrying a lead in a
// Janet basis of the rows.
int differential_rank(Context& ctx, const OpMatrix& A);

}  // namespace orekit

#endif
