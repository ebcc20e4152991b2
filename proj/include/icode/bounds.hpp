#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "icode/extension.hpp"
#include "icode/minrank.hpp"

namespace icode {

struct BoundReport {
    int value;
    TriangulableWitness witness;
    std::vector<std::pair<int, int>> per_column_minranks;  // (component, minrank), over witness columns
};

/// Lower bound on the minrank of the extended problem: the largest sum of
/// component minranks over the columns of any triangulable submatrix of
/// the base. Ties break toward the smallest witness, then lexicographic
/// column and row sets.
BoundReport lower_bound(const ExtensionSpec& spec, const std::vector<int>& component_minranks);

/// Inputs for the completion-based construction: one completion per
/// component, a base completion whose rank equals the witness size, and a
/// triangulable witness whose column set carries the largest component
/// ranks.
struct CompletionInputs {
    BinMatrix base_completion;
    std::vector<BinMatrix> component_completions;
    TriangulableWitness witness;
};

struct ConstructionResult {
    BinMatrix encoder;
    std::optional<BinMatrix> full_completion;
    int codelength = 0;
    std::vector<int> blockrow_heights;
};

struct ConstructionError : std::runtime_error {
    ConstructionError(std::string cond, const std::string& msg)
        : std::runtime_error(msg), condition(std::move(cond)) {}
    std::string condition;
};

/// Builds a full completion of the extended fitting matrix whose row space
/// is spanned by an encoder of Sum r_t rows over the witness columns.
/// Preconditions are checked and violations raise ConstructionError naming
/// the failed condition; outputs use the original receiver/message
/// indexing. Post-checks certify the completion, the row-space containment
/// and the encoder rank.
ConstructionResult construct_from_completions(const ExtensionSpec& spec, const CompletionInputs& inputs);

/// Searches for a bound-matching witness and a base completion meeting the
/// construction preconditions; when both exist the lower bound is the
/// exact minrank of the extended problem and is returned.
std::optional<int> certify_minrank(const ExtensionSpec& spec,
                                   const std::vector<int>& component_minranks,
                                   int max_unknowns = kDefaultUnknownCap);

/// For a base problem that is a directed cycle (detected, any labeling):
/// runs the code composition with the cyclic base code and the given
/// optimal component codes, asserts the output length equals
/// Sum minrank - min minrank, and certifies optimality against the lower
/// bound.
ConstructionResult cycle_construct(const ExtensionSpec& spec,
                                   const std::vector<int>& component_minranks,
                                   const std::vector<BinMatrix>& component_codes);

/// Deterministic witness/input selection for the completion construction:
/// witnesses of size rank(base_completion) in enumeration order, first one
/// whose column set carries the top ranks and whose base rows are
/// independent. Returns nullopt when no witness qualifies.
std::optional<CompletionInputs> select_completion_inputs(const ExtensionSpec& spec,
                                                         const BinMatrix& base_completion,
                                                         const std::vector<BinMatrix>& component_completions);

}  // namespace icode
