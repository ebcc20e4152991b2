#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "icode/gf2.hpp"
#include "icode/problem.hpp"

namespace icode {

inline constexpr int kDefaultUnknownCap = 24;

struct TooManyUnknowns : std::runtime_error {
    TooManyUnknowns(int unknowns, int cap)
        : std::runtime_error("matrix has " + std::to_string(unknowns) +
                             " unknown entries, exceeding the cap of " + std::to_string(cap)),
          unknowns(unknowns),
          cap(cap) {}
    int unknowns;
    int cap;
};

struct MinrankResult {
    int value;
    BinMatrix witness;  // a minimum-rank completion, lexicographically first
};

/// Exhaustive minimum rank over all completions. Unknowns are enumerated
/// row-major with 0 before 1, so the reported witness is the
/// lexicographically first completion achieving the minimum.
MinrankResult exact_minrank(const TriMatrix& fm, int max_unknowns = kDefaultUnknownCap);

/// Certificate that a square tri-valued submatrix can be permuted into
/// upper-triangular form with an all-One diagonal and nothing but Zero
/// below it. row_indices/col_indices address the host matrix (ascending);
/// the permutations act on the selected submatrix.
struct TriangulableWitness {
    std::vector<int> row_indices;
    std::vector<int> col_indices;
    Permutation row_perm;
    Permutation col_perm;
};

/// Backtracking search over diagonal choices: a column qualifies when it
/// holds a single One and Zeros elsewhere among active rows; qualifying
/// columns are tried in ascending order and the first full assignment
/// wins. Input must be square.
std::optional<TriangulableWitness> is_upper_triangulable(const TriMatrix& fm);

/// Same search on the submatrix selected by ascending row/col index sets
/// of equal size; the returned witness carries host-matrix indices.
std::optional<TriangulableWitness> triangulable_submatrix(const TriMatrix& fm,
                                                          const std::vector<int>& rows,
                                                          const std::vector<int>& cols);

/// All triangulable submatrices with distinct (row set, col set) pairs,
/// ordered by descending size then lexicographic index sets.
std::vector<TriangulableWitness> enumerate_triangulable_submatrices(const TriMatrix& fm);

/// Re-applies the witness permutations and verifies the triangular
/// pattern directly. Used by tests and construction preconditions.
bool verify_witness(const TriMatrix& fm, const TriangulableWitness& w);

struct DecoderSearch {
    std::optional<BinMatrix> decoder;
    int failing_receiver = -1;  // 0-based, set when decoder is absent
};

/// Row i of the decoder is the deterministic solve_left solution forcing
/// value 1 at the demanded column and 0 at every Zero column of row i.
DecoderSearch find_decoding_matrix(const BinMatrix& g, const TriMatrix& fm);

/// Number of message vectors to simulate; nullopt runs all 2^m of them.
struct DecodingTrials {
    std::optional<std::uint64_t> samples;
    std::uint64_t seed = 0;
    static DecodingTrials exhaustive() { return DecodingTrials{std::nullopt, 0}; }
    static DecodingTrials sampled(std::uint64_t n, std::uint64_t seed) { return DecodingTrials{n, seed}; }
};

/// Plays out the decoding: for each message vector, each receiver combines
/// its codeword view d_i * (g * x) with its side information and must
/// recover its demanded message bit exactly.
bool simulate_decoding(const BinMatrix& g, const BinMatrix& d, const TriMatrix& fm,
                       const DecodingTrials& trials);

}  // namespace icode
