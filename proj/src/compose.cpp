#include "icode/compose.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace icode {

Permutation default_sigma(const std::vector<int>& ranks) {
    std::vector<int> order(ranks.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return ranks[a] > ranks[b]; });
    return Permutation(std::move(order));
}

namespace {

void validate_inputs(const ExtensionSpec& spec, const EncoderInputs& in, std::vector<int>& ranks) {
    const int m_B = spec.base.cols();
    if (static_cast<int>(in.component_encoders.size()) != m_B) {
        throw ConstructionError("inputs", "expected one encoder per component");
    }
    ranks.resize(m_B);
    for (int j = 0; j < m_B; ++j) {
        const BinMatrix& g = in.component_encoders[j];
        if (g.cols() != spec.components[j].cols()) {
            throw ConstructionError("inputs", "encoder for component " + std::to_string(j + 1) +
                                                  " has the wrong message count");
        }
        if (rank(g) != g.rows()) {
            throw ConstructionError("inputs", "encoder for component " + std::to_string(j + 1) +
                                                  " does not have full row rank");
        }
        ranks[j] = g.rows();
    }
    if (in.base_encoder.cols() != m_B) {
        throw ConstructionError("inputs", "base encoder has the wrong message count");
    }
    if (rank(in.base_encoder) != in.base_encoder.rows()) {
        throw ConstructionError("inputs", "base encoder does not have full row rank");
    }
    if (in.base_decoder.rows() != spec.base.rows() || in.base_decoder.cols() != in.base_encoder.rows()) {
        throw ConstructionError("inputs", "base decoder shape does not match");
    }
    if (!completes(in.base_decoder * in.base_encoder, spec.base)) {
        throw ConstructionError("inputs", "base decoder times base encoder does not complete the base fitting matrix");
    }
    if (in.sigma.size() != m_B) {
        throw ConstructionError("inputs", "sigma must permute the components");
    }
    for (int t = 1; t < m_B; ++t) {
        if (ranks[in.sigma[t - 1]] < ranks[in.sigma[t]]) {
            throw ConstructionError("inputs", "sigma does not order component codelengths non-increasingly");
        }
    }
}

// Component encoder truncated to `height` rows or extended with zero rows.
void stamp_block(std::vector<BitRow>& rows, int height, const BinMatrix& g, int col_offset) {
    const int take = std::min(height, g.rows());
    for (int q = 0; q < take; ++q) {
        for (int c = 0; c < g.cols(); ++c) {
            if (g.get(q, c)) rows[q][col_offset + c] ^= 1;
        }
    }
}

}  // namespace

ComposeOutput compose_extended_code(const ExtensionSpec& spec, const EncoderInputs& in) {
    std::vector<int> ranks;
    validate_inputs(spec, in, ranks);

    const int m_B = spec.base.cols();
    const int n_B = spec.base.rows();
    const int r_B = in.base_encoder.rows();
    const int m_E = spec.layout.total_cols();

    std::vector<bool> pending(r_B, true);  // block-rows of the output not yet filled
    std::vector<int> rhat(r_B, -1);
    std::vector<std::vector<BitRow>> block_rows(r_B);
    // b_rec[j] accumulates, per block-column j, the block-rows recorded as
    // contributing to its zero blocks, across all iterations.
    std::vector<std::vector<std::vector<int>>> b_history;  // [t-1][j] -> set

    ComposeTrace trace;

    auto record_fill = [&](int a, int height, ComposeIteration& it) {
        rhat[a] = height;
        block_rows[a].assign(height, BitRow(m_E, 0));
        for (int j = 0; j < m_B; ++j) {
            if (!in.base_encoder.get(a, j)) continue;
            stamp_block(block_rows[a], height, in.component_encoders[j], spec.layout.col_offset(j));
        }
        it.filled.emplace_back(a, height);
    };

    auto recorded_height = [&](int a) {
        int best = -1;
        for (const auto& iteration_sets : b_history) {
            for (int j = 0; j < m_B; ++j) {
                const auto& set = iteration_sets[j];
                if (std::find(set.begin(), set.end(), a) != set.end()) best = std::max(best, ranks[j]);
            }
        }
        return best;
    };

    int t = 0;
    while (std::find(pending.begin(), pending.end(), true) != pending.end()) {
        ++t;
        if (t > m_B) {
            throw ConstructionError("internal", "block-row filling failed to terminate");
        }
        ComposeIteration it;
        it.t = t;
        it.sigma_t = in.sigma[t - 1];

        for (int u = 0; u < n_B; ++u) {
            if (spec.base.get(u, it.sigma_t) == Tri::One) it.u_set.push_back(u);
        }
        for (int u : it.u_set) {
            for (int k = 0; k < r_B; ++k) {
                if (!pending[k]) continue;
                if (in.base_decoder.get(u, k) && in.base_encoder.get(k, it.sigma_t) &&
                    std::find(it.a_set.begin(), it.a_set.end(), k) == it.a_set.end()) {
                    it.a_set.push_back(k);
                }
            }
        }
        std::sort(it.a_set.begin(), it.a_set.end());

        for (int a : it.a_set) {
            const int height = std::max(ranks[it.sigma_t], recorded_height(a));
            record_fill(a, height, it);
            pending[a] = false;
        }

        it.b_sets.assign(m_B, {});
        for (int u : it.u_set) {
            for (int v = 0; v < m_B; ++v) {
                if (spec.base.get(u, v) != Tri::Zero) continue;
                std::vector<int> contributors;
                for (int k = 0; k < r_B; ++k) {
                    if (in.base_decoder.get(u, k) && in.base_encoder.get(k, v)) contributors.push_back(k);
                }
                const int target = ranks[v] < ranks[it.sigma_t] ? v : it.sigma_t;
                auto& bucket = it.b_sets[target];
                for (int k : contributors) {
                    if (std::find(bucket.begin(), bucket.end(), k) == bucket.end()) bucket.push_back(k);
                }
            }
        }
        for (auto& bucket : it.b_sets) std::sort(bucket.begin(), bucket.end());
        b_history.push_back(it.b_sets);

        if (t == m_B) {
            for (int a = 0; a < r_B; ++a) {
                if (!pending[a]) continue;
                it.leftover = true;
                int height = recorded_height(a);
                if (height < 0) {
                    // Never recorded against any zero block: the smallest
                    // component codelength suffices.
                    height = ranks[in.sigma[m_B - 1]];
                    trace.defaulted_rows.push_back(a);
                }
                record_fill(a, height, it);
                pending[a] = false;
            }
        }

        for (int k = 0; k < r_B; ++k) {
            if (pending[k]) it.psi_after.push_back(k);
        }
        trace.iterations.push_back(std::move(it));
    }

    std::vector<BitRow> all_rows;
    for (int a = 0; a < r_B; ++a) {
        for (const BitRow& row : block_rows[a]) all_rows.push_back(row);
    }
    trace.rhat = rhat;

    ConstructionResult result{BinMatrix::from_rows(all_rows), std::nullopt,
                              static_cast<int>(all_rows.size()), rhat};
    return ComposeOutput{std::move(result), std::move(trace)};
}

BinMatrix build_extended_decoder(const ExtensionSpec& spec, const EncoderInputs& in,
                                 const std::vector<BinMatrix>& component_decoders,
                                 const ConstructionResult& result) {
    const int m_B = spec.base.cols();
    const int n_B = spec.base.rows();
    const int r_B = in.base_encoder.rows();
    if (static_cast<int>(component_decoders.size()) != m_B) {
        throw ConstructionError("inputs", "expected one decoder per component");
    }
    for (int j = 0; j < m_B; ++j) {
        const BinMatrix& d = component_decoders[j];
        const BinMatrix& g = in.component_encoders[j];
        if (d.rows() != spec.components[j].rows() || d.cols() != g.rows() ||
            !completes(d * g, spec.components[j])) {
            throw ConstructionError("inputs", "decoder for component " + std::to_string(j + 1) +
                                                  " is not valid for its encoder");
        }
    }
    if (static_cast<int>(result.blockrow_heights.size()) != r_B) {
        throw ConstructionError("inputs", "construction result does not match the base encoder");
    }

    const std::vector<int> demands = row_demands(spec.base);
    const int total_cols = result.codelength;
    BinMatrix decoder(spec.layout.total_rows(), total_cols);
    int roff = 0;
    for (int i = 0; i < n_B; ++i) {
        const int f_i = demands[i];
        const BinMatrix& comp_dec = component_decoders[f_i];
        const int height = spec.layout.row_heights[i];
        int coff = 0;
        for (int j = 0; j < r_B; ++j) {
            const int width = result.blockrow_heights[j];
            if (in.base_decoder.get(i, j)) {
                const int take = std::min(width, comp_dec.cols());
                for (int r = 0; r < height; ++r) {
                    for (int c = 0; c < take; ++c) {
                        if (comp_dec.get(r, c)) decoder.set(roff + r, coff + c, true);
                    }
                }
            }
            coff += width;
        }
        roff += height;
    }

    if (!completes(decoder * result.encoder, extended_fitting(spec))) {
        throw ConstructionError("internal", "decoder times encoder does not complete the extended fitting matrix");
    }
    return decoder;
}

Verdict verify_code(const BinMatrix& g, const TriMatrix& fm, const VerifyOptions& opts) {
    DecoderSearch search = find_decoding_matrix(g, fm);
    if (!search.decoder) {
        return Verdict{false, std::nullopt, search.failing_receiver, false};
    }
    const bool exhaustive = fm.cols() <= opts.exhaustive_threshold;
    const DecodingTrials trials = exhaustive ? DecodingTrials::exhaustive()
                                             : DecodingTrials::sampled(opts.samples, opts.seed);
    if (!simulate_decoding(g, *search.decoder, fm, trials)) {
        return Verdict{false, std::nullopt, 0, exhaustive};
    }
    return Verdict{true, std::move(search.decoder), -1, exhaustive};
}

namespace {

std::string join_set(const std::vector<int>& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i] + 1);
    }
    return out.empty() ? "-" : out;
}

}  // namespace

std::string format_trace(const ComposeTrace& trace) {
    std::ostringstream out;
    for (const ComposeIteration& it : trace.iterations) {
        out << "t=" << it.t << " sigma=" << (it.sigma_t + 1) << " U={" << join_set(it.u_set) << "}"
            << " A={" << join_set(it.a_set) << "}"
            << " Psi={" << join_set(it.psi_after) << "}";
        for (const auto& [row, height] : it.filled) {
            out << " rhat[" << (row + 1) << "]=" << height;
        }
        for (std::size_t j = 0; j < it.b_sets.size(); ++j) {
            if (!it.b_sets[j].empty()) {
                out << " B[" << (j + 1) << "]={" << join_set(it.b_sets[j]) << "}";
            }
        }
        if (it.leftover) out << " leftover=yes";
        out << "\n";
    }
    return out.str();
}

}  // namespace icode
