#include "icode/bounds.hpp"

#include <algorithm>
#include <climits>
#include <numeric>

#include "icode/compose.hpp"

namespace icode {

namespace {

int witness_value(const TriangulableWitness& w, const std::vector<int>& minranks) {
    int s = 0;
    for (int c : w.col_indices) s += minranks[c];
    return s;
}

bool witness_precedes(const TriangulableWitness& a, const TriangulableWitness& b) {
    if (a.col_indices.size() != b.col_indices.size()) return a.col_indices.size() < b.col_indices.size();
    if (a.col_indices != b.col_indices) return a.col_indices < b.col_indices;
    return a.row_indices < b.row_indices;
}

}  // namespace

BoundReport lower_bound(const ExtensionSpec& spec, const std::vector<int>& component_minranks) {
    if (static_cast<int>(component_minranks.size()) != spec.base.cols()) {
        throw std::invalid_argument("expected " + std::to_string(spec.base.cols()) + " component minranks, got " +
                                    std::to_string(component_minranks.size()));
    }
    std::vector<TriangulableWitness> witnesses = enumerate_triangulable_submatrices(spec.base);
    if (witnesses.empty()) throw std::invalid_argument("base fitting matrix has no triangulable submatrix");

    const TriangulableWitness* best = nullptr;
    int best_value = -1;
    for (const TriangulableWitness& w : witnesses) {
        int v = witness_value(w, component_minranks);
        if (v > best_value || (v == best_value && witness_precedes(w, *best))) {
            best_value = v;
            best = &w;
        }
    }
    BoundReport report{best_value, *best, {}};
    for (int c : best->col_indices) report.per_column_minranks.emplace_back(c, component_minranks[c]);
    return report;
}

namespace {

// Column set carries the largest ranks: everything inside is at least as
// large as everything outside (ties allowed either way).
bool is_top_rank_set(const std::vector<int>& cols, const std::vector<int>& ranks) {
    int min_in = INT_MAX;
    for (int c : cols) min_in = std::min(min_in, ranks[c]);
    for (int j = 0; j < static_cast<int>(ranks.size()); ++j) {
        if (std::find(cols.begin(), cols.end(), j) == cols.end() && ranks[j] > min_in) return false;
    }
    return true;
}

}  // namespace

ConstructionResult construct_from_completions(const ExtensionSpec& spec, const CompletionInputs& inputs) {
    const int m_B = spec.base.cols();
    const int n_B = spec.base.rows();
    if (static_cast<int>(inputs.component_completions.size()) != m_B) {
        throw std::invalid_argument("expected one completion per component");
    }
    for (int j = 0; j < m_B; ++j) {
        const BinMatrix& f = inputs.component_completions[j];
        if (f.rows() != spec.components[j].rows() || f.cols() != spec.components[j].cols() ||
            !completes(f, spec.components[j])) {
            throw ConstructionError("completion", "matrix for component " + std::to_string(j + 1) +
                                                      " does not complete its fitting matrix");
        }
    }
    if (inputs.base_completion.rows() != n_B || inputs.base_completion.cols() != m_B ||
        !completes(inputs.base_completion, spec.base)) {
        throw ConstructionError("completion", "base matrix does not complete the base fitting matrix");
    }

    std::vector<int> ranks(m_B);
    for (int j = 0; j < m_B; ++j) ranks[j] = rank(inputs.component_completions[j]);

    const TriangulableWitness& w = inputs.witness;
    if (!triangulable_submatrix(spec.base, w.row_indices, w.col_indices)) {
        throw ConstructionError("condition (i)", "witness is not an upper-triangulable submatrix of the base");
    }
    if (!is_top_rank_set(w.col_indices, ranks)) {
        throw ConstructionError("condition (i)",
                                "witness columns do not carry the largest component ranks");
    }
    const int r_B = static_cast<int>(w.col_indices.size());
    if (rank(inputs.base_completion) != r_B) {
        throw ConstructionError("condition (ii)", "base completion rank must equal the witness size " +
                                                      std::to_string(r_B));
    }
    if (rank(select_rows(inputs.base_completion, w.row_indices)) != r_B) {
        throw ConstructionError("condition (ii)", "witness rows of the base completion are dependent");
    }

    const std::vector<int> demands = row_demands(spec.base);
    const BlockLayout& layout = spec.layout;
    const int m_E = layout.total_cols();

    // Row basis of every component completion; block content always uses
    // the basis rows first, so truncation keeps an independent prefix.
    std::vector<RowBasis> bases;
    std::vector<std::vector<int>> row_order;  // basis rows then dependent rows, per component
    bases.reserve(m_B);
    for (int j = 0; j < m_B; ++j) {
        bases.push_back(row_basis(inputs.component_completions[j]));
        std::vector<int> order = bases[j].pivot_rows;
        for (int rix = 0; rix < inputs.component_completions[j].rows(); ++rix) {
            if (std::find(order.begin(), order.end(), rix) == order.end()) order.push_back(rix);
        }
        row_order.push_back(std::move(order));
    }

    // Every base row reproduces its own completed entries as coefficients
    // over the witness rows, so each block-row can be filled directly from
    // the base completion: block (s, j) holds base(s, j) times component
    // j's basis rows truncated or zero-padded to the height of the
    // component demanded by row s; dependent receiver rows are rebuilt
    // from their basis combination.
    BinMatrix full(layout.total_rows(), m_E);
    std::vector<BitRow> encoder_rows;
    std::vector<int> blockrow_heights;

    for (int s = 0; s < n_B; ++s) {
        const int js = demands[s];
        const int height = layout.row_heights[s];
        const int rh = ranks[js];
        std::vector<BitRow> first(rh, BitRow(m_E, 0));
        for (int j = 0; j < m_B; ++j) {
            if (!inputs.base_completion.get(s, j)) continue;
            const int coff = layout.col_offset(j);
            const BinMatrix& comp = inputs.component_completions[j];
            const int take = std::min(rh, ranks[j]);
            for (int q = 0; q < take; ++q) {
                const int src = bases[j].pivot_rows[q];
                for (int c = 0; c < comp.cols(); ++c) {
                    if (comp.get(src, c)) first[q][coff + c] ^= 1;
                }
            }
        }
        const int roff = layout.row_offset(s);
        for (int q = 0; q < height; ++q) {
            const int original_row = row_order[js][q];
            BitRow value(m_E, 0);
            if (q < rh) {
                value = first[q];
            } else {
                const BitRow& coeff = bases[js].combination[original_row];
                for (int b = 0; b < rh; ++b) {
                    if (!coeff[b]) continue;
                    for (int c = 0; c < m_E; ++c) value[c] ^= first[b][c];
                }
            }
            full.set_row(roff + original_row, value);
        }
        if (std::find(w.row_indices.begin(), w.row_indices.end(), s) != w.row_indices.end()) {
            for (int q = 0; q < rh; ++q) encoder_rows.push_back(first[q]);
            blockrow_heights.push_back(rh);
        }
    }

    BinMatrix encoder = BinMatrix::from_rows(encoder_rows);
    const int codelength = encoder.rows();

    TriMatrix extended = extended_fitting(spec);
    if (!completes(full, extended)) {
        throw ConstructionError("internal", "constructed matrix does not complete the extended fitting matrix");
    }
    for (int i = 0; i < full.rows(); ++i) {
        if (!row_space_contains(encoder, full.row(i))) {
            throw ConstructionError("internal", "completion row " + std::to_string(i + 1) +
                                                    " lies outside the encoder row space");
        }
    }
    if (rank(encoder) != codelength) {
        throw ConstructionError("internal", "encoder rank does not match the codelength");
    }
    return ConstructionResult{std::move(encoder), std::move(full), codelength, std::move(blockrow_heights)};
}

std::optional<int> certify_minrank(const ExtensionSpec& spec,
                                   const std::vector<int>& component_minranks,
                                   int max_unknowns) {
    BoundReport bound = lower_bound(spec, component_minranks);

    std::vector<std::pair<int, int>> base_unknowns;
    for (int i = 0; i < spec.base.rows(); ++i) {
        for (int j = 0; j < spec.base.cols(); ++j) {
            if (spec.base.get(i, j) == Tri::Unknown) base_unknowns.emplace_back(i, j);
        }
    }
    const int k = static_cast<int>(base_unknowns.size());
    if (k > max_unknowns) throw TooManyUnknowns(k, max_unknowns);

    for (const TriangulableWitness& w : enumerate_triangulable_submatrices(spec.base)) {
        if (witness_value(w, component_minranks) != bound.value) continue;
        if (!is_top_rank_set(w.col_indices, component_minranks)) continue;
        const int r_B = static_cast<int>(w.col_indices.size());

        BinMatrix candidate(spec.base.rows(), spec.base.cols());
        for (int i = 0; i < spec.base.rows(); ++i) {
            for (int j = 0; j < spec.base.cols(); ++j) {
                if (spec.base.get(i, j) == Tri::One) candidate.set(i, j, true);
            }
        }
        const std::uint64_t total = std::uint64_t{1} << k;
        for (std::uint64_t a = 0; a < total; ++a) {
            for (int u = 0; u < k; ++u) {
                candidate.set(base_unknowns[u].first, base_unknowns[u].second, (a >> (k - 1 - u)) & 1);
            }
            if (rank(candidate) != r_B) continue;
            if (rank(select_rows(candidate, w.row_indices)) != r_B) continue;
            return bound.value;
        }
    }
    return std::nullopt;
}

std::optional<CompletionInputs> select_completion_inputs(const ExtensionSpec& spec,
                                                         const BinMatrix& base_completion,
                                                         const std::vector<BinMatrix>& component_completions) {
    if (static_cast<int>(component_completions.size()) != spec.base.cols()) {
        throw std::invalid_argument("expected one completion per component");
    }
    if (!completes(base_completion, spec.base)) {
        throw std::invalid_argument("base matrix does not complete the base fitting matrix");
    }
    std::vector<int> ranks(spec.base.cols());
    for (int j = 0; j < spec.base.cols(); ++j) {
        if (!completes(component_completions[j], spec.components[j])) {
            throw std::invalid_argument("matrix for component " + std::to_string(j + 1) +
                                        " does not complete its fitting matrix");
        }
        ranks[j] = rank(component_completions[j]);
    }
    const int r_B = rank(base_completion);
    for (const TriangulableWitness& w : enumerate_triangulable_submatrices(spec.base)) {
        if (static_cast<int>(w.col_indices.size()) != r_B) continue;
        if (!is_top_rank_set(w.col_indices, ranks)) continue;
        if (rank(select_rows(base_completion, w.row_indices)) != r_B) continue;
        return CompletionInputs{base_completion, component_completions, w};
    }
    return std::nullopt;
}

namespace {

struct CycleShape {
    std::vector<int> order;     // message indices along the cycle, starting at message 0
    std::vector<int> position;  // inverse map
};

CycleShape detect_cycle(const TriMatrix& base) {
    if (base.rows() != base.cols() || base.cols() < 2) {
        throw std::invalid_argument("base problem is not a directed cycle");
    }
    ProblemInstance p = problem_of(base);
    const int m = p.num_messages;
    std::vector<int> receiver_of_msg(m, -1);
    for (int i = 0; i < static_cast<int>(p.receivers.size()); ++i) {
        const Receiver& r = p.receivers[i];
        if (receiver_of_msg[r.wants] != -1 || r.knows.size() != 1) {
            throw std::invalid_argument("base problem is not a directed cycle");
        }
        receiver_of_msg[r.wants] = i;
    }
    std::vector<int> succ(m);
    for (int mu = 0; mu < m; ++mu) succ[mu] = p.receivers[receiver_of_msg[mu]].knows.front();

    CycleShape shape;
    shape.position.assign(m, -1);
    int cur = 0;
    for (int step = 0; step < m; ++step) {
        if (shape.position[cur] != -1) throw std::invalid_argument("base problem is not a directed cycle");
        shape.position[cur] = step;
        shape.order.push_back(cur);
        cur = succ[cur];
    }
    if (cur != 0) throw std::invalid_argument("base problem is not a directed cycle");
    return shape;
}

}  // namespace

ConstructionResult cycle_construct(const ExtensionSpec& spec,
                                   const std::vector<int>& component_minranks,
                                   const std::vector<BinMatrix>& component_codes) {
    const int m_B = spec.base.cols();
    if (static_cast<int>(component_minranks.size()) != m_B ||
        static_cast<int>(component_codes.size()) != m_B) {
        throw std::invalid_argument("expected one minrank and one code per component");
    }
    CycleShape shape = detect_cycle(spec.base);

    for (int j = 0; j < m_B; ++j) {
        const BinMatrix& g = component_codes[j];
        if (g.cols() != spec.components[j].cols() || g.rows() != component_minranks[j] ||
            rank(g) != g.rows()) {
            throw std::invalid_argument("code for component " + std::to_string(j + 1) +
                                        " is not a full-rank optimal encoder");
        }
        if (!find_decoding_matrix(g, spec.components[j]).decoder) {
            throw std::invalid_argument("code for component " + std::to_string(j + 1) +
                                        " admits no decoder for its problem");
        }
    }

    // Cyclic base code: one row per consecutive message pair along the
    // cycle; the base decoder mirrors the identity with a final all-ones
    // row for the receiver that closes the cycle.
    BinMatrix base_encoder(m_B - 1, m_B);
    for (int kpos = 0; kpos < m_B - 1; ++kpos) {
        base_encoder.set(kpos, shape.order[kpos], true);
        base_encoder.set(kpos, shape.order[kpos + 1], true);
    }
    ProblemInstance base_problem = problem_of(spec.base);
    BinMatrix base_decoder(m_B, m_B - 1);
    for (int i = 0; i < m_B; ++i) {
        const int kpos = shape.position[base_problem.receivers[i].wants];
        if (kpos < m_B - 1) {
            base_decoder.set(i, kpos, true);
        } else {
            for (int c = 0; c < m_B - 1; ++c) base_decoder.set(i, c, true);
        }
    }

    EncoderInputs inputs{component_codes, std::move(base_encoder), std::move(base_decoder),
                         default_sigma(component_minranks)};
    ComposeOutput out = compose_extended_code(spec, inputs);

    const int expected = std::accumulate(component_minranks.begin(), component_minranks.end(), 0) -
                         *std::min_element(component_minranks.begin(), component_minranks.end());
    if (out.result.codelength != expected) {
        throw ConstructionError("internal", "cycle construction produced length " +
                                                std::to_string(out.result.codelength) + ", expected " +
                                                std::to_string(expected));
    }
    BoundReport bound = lower_bound(spec, component_minranks);
    if (bound.value != expected) {
        throw ConstructionError("internal", "cycle construction length does not meet the lower bound");
    }
    return std::move(out.result);
}

}  // namespace icode
