#pragma once

#include <optional>
#include <string>
#include <vector>

#include "icode/bounds.hpp"
#include "icode/extension.hpp"
#include "icode/minrank.hpp"

namespace icode {

/// Codes driving the composition: one full-rank encoder per component, a
/// full-rank base encoder with an associated base decoder, and a
/// processing order sigma with non-increasing component codelengths.
struct EncoderInputs {
    std::vector<BinMatrix> component_encoders;
    BinMatrix base_encoder;
    BinMatrix base_decoder;
    Permutation sigma;
};

/// Ranks in non-increasing order, ties by ascending component index.
Permutation default_sigma(const std::vector<int>& ranks);

/// Bookkeeping of one pass of the block-row filling loop. Sets hold
/// 0-based indices; b_sets[j] records the block-rows that must later
/// cancel the zero blocks of column j.
struct ComposeIteration {
    int t = 0;        // 1-based iteration counter
    int sigma_t = 0;  // component processed this iteration, 0-based
    std::vector<int> u_set;
    std::vector<int> a_set;
    std::vector<int> psi_after;
    std::vector<std::vector<int>> b_sets;
    std::vector<std::pair<int, int>> filled;  // (block-row, assigned height)
    bool leftover = false;
};

struct ComposeTrace {
    std::vector<ComposeIteration> iterations;
    std::vector<int> rhat;            // final block-row heights
    std::vector<int> defaulted_rows;  // leftover rows whose height fell back to the smallest rank
};

struct ComposeOutput {
    ConstructionResult result;
    ComposeTrace trace;
};

/// Fills the block-rows of the extended encoder: iteration t covers every
/// yet-unfilled base-encoder row contributing to the occurrences of
/// component sigma(t), assigns each such block-row enough rows for every
/// zero-block cancellation recorded against it, and stacks
/// base_entry * (component encoder truncated or zero-padded to that
/// height) across the block-columns. Leftover rows at the last iteration
/// are filled from the recorded demands alone.
ComposeOutput compose_extended_code(const ExtensionSpec& spec, const EncoderInputs& inputs);

/// Companion decoder: block (i,j) is base_decoder(i,j) times the decoder
/// of the component demanded by base row i, truncated or zero-padded to
/// the width of encoder block-row j. The product with the encoder is
/// checked to complete the extended fitting matrix.
BinMatrix build_extended_decoder(const ExtensionSpec& spec, const EncoderInputs& inputs,
                                 const std::vector<BinMatrix>& component_decoders,
                                 const ConstructionResult& result);

struct Verdict {
    bool valid = false;
    std::optional<BinMatrix> decoder;
    int failing_receiver = -1;  // 0-based
    bool exhaustive = false;
};

struct VerifyOptions {
    int exhaustive_threshold = 20;  // message bits
    std::uint64_t samples = 100000;
    std::uint64_t seed = 0;
};

/// Decoder search plus decoding simulation, exhaustive when the message
/// count is at or below the threshold and sampled otherwise.
Verdict verify_code(const BinMatrix& g, const TriMatrix& fm, const VerifyOptions& opts = {});

/// One line per iteration: t, U, A, Psi, B, rhat.
std::string format_trace(const ComposeTrace& trace);

}  // namespace icode
