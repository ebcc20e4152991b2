#include "icode/minrank.hpp"

#include <algorithm>
#include <random>

namespace icode {

MinrankResult exact_minrank(const TriMatrix& fm, int max_unknowns) {
    std::vector<std::pair<int, int>> unknowns;  // row-major positions
    for (int i = 0; i < fm.rows(); ++i) {
        for (int j = 0; j < fm.cols(); ++j) {
            if (fm.get(i, j) == Tri::Unknown) unknowns.emplace_back(i, j);
        }
    }
    const int k = static_cast<int>(unknowns.size());
    if (k > max_unknowns) throw TooManyUnknowns(k, max_unknowns);

    BinMatrix work(fm.rows(), fm.cols());
    for (int i = 0; i < fm.rows(); ++i) {
        for (int j = 0; j < fm.cols(); ++j) {
            if (fm.get(i, j) == Tri::One) work.set(i, j, true);
        }
    }

    int best = -1;
    std::uint64_t best_assignment = 0;
    const std::uint64_t total = std::uint64_t{1} << k;
    for (std::uint64_t a = 0; a < total; ++a) {
        // bit (k-1-i) of a holds unknown i, so ascending a is ascending
        // lexicographic order over assignments with 0 before 1
        for (int i = 0; i < k; ++i) {
            work.set(unknowns[i].first, unknowns[i].second, (a >> (k - 1 - i)) & 1);
        }
        int r = rank(work);
        if (best < 0 || r < best) {
            best = r;
            best_assignment = a;
            if (best == 0) break;
        }
    }

    for (int i = 0; i < k; ++i) {
        work.set(unknowns[i].first, unknowns[i].second, (best_assignment >> (k - 1 - i)) & 1);
    }
    return MinrankResult{best, work};
}

namespace {

struct TriangulationSearch {
    const TriMatrix& sub;
    int n;
    std::vector<bool> row_active;
    std::vector<bool> col_active;
    std::vector<int> row_seq;
    std::vector<int> col_seq;

    explicit TriangulationSearch(const TriMatrix& m)
        : sub(m), n(m.rows()), row_active(n, true), col_active(n, true) {}

    bool solve(int depth) {
        if (depth == n) return true;
        for (int c = 0; c < n; ++c) {
            if (!col_active[c]) continue;
            int candidate = -1;
            bool ok = true;
            for (int r = 0; r < n && ok; ++r) {
                if (!row_active[r]) continue;
                switch (sub.get(r, c)) {
                    case Tri::Zero: break;
                    case Tri::One:
                        if (candidate >= 0) ok = false; else candidate = r;
                        break;
                    case Tri::Unknown: ok = false; break;
                }
            }
            if (!ok || candidate < 0) continue;
            row_active[candidate] = false;
            col_active[c] = false;
            row_seq.push_back(candidate);
            col_seq.push_back(c);
            if (solve(depth + 1)) return true;
            row_seq.pop_back();
            col_seq.pop_back();
            row_active[candidate] = true;
            col_active[c] = true;
        }
        return false;
    }
};

TriMatrix submatrix(const TriMatrix& fm, const std::vector<int>& rows, const std::vector<int>& cols) {
    TriMatrix sub(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < cols.size(); ++j) {
            sub.set(static_cast<int>(i), static_cast<int>(j), fm.get(rows[i], cols[j]));
        }
    }
    return sub;
}

void check_index_set(const std::vector<int>& s, int bound, const char* what) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0 || s[i] >= bound) throw std::invalid_argument(std::string(what) + " index out of range");
        if (i > 0 && s[i] <= s[i - 1]) throw std::invalid_argument(std::string(what) + " indices must be strictly ascending");
    }
}

}  // namespace

std::optional<TriangulableWitness> is_upper_triangulable(const TriMatrix& fm) {
    if (fm.rows() != fm.cols()) throw std::invalid_argument("triangulability requires a square matrix");
    TriangulationSearch search(fm);
    if (!search.solve(0)) return std::nullopt;
    std::vector<int> all_rows(fm.rows()), all_cols(fm.cols());
    for (int i = 0; i < fm.rows(); ++i) all_rows[i] = i, all_cols[i] = i;
    return TriangulableWitness{all_rows, all_cols, Permutation(search.row_seq), Permutation(search.col_seq)};
}

std::optional<TriangulableWitness> triangulable_submatrix(const TriMatrix& fm,
                                                          const std::vector<int>& rows,
                                                          const std::vector<int>& cols) {
    if (rows.size() != cols.size() || rows.empty()) {
        throw std::invalid_argument("submatrix selection must be square and non-empty");
    }
    check_index_set(rows, fm.rows(), "row");
    check_index_set(cols, fm.cols(), "column");
    TriMatrix sub = submatrix(fm, rows, cols);
    auto w = is_upper_triangulable(sub);
    if (!w) return std::nullopt;
    w->row_indices = rows;
    w->col_indices = cols;
    return w;
}

bool verify_witness(const TriMatrix& fm, const TriangulableWitness& w) {
    if (w.row_indices.size() != w.col_indices.size()) return false;
    const int k = static_cast<int>(w.row_indices.size());
    if (w.row_perm.size() != k || w.col_perm.size() != k) return false;
    for (int i : w.row_indices) {
        if (i < 0 || i >= fm.rows()) return false;
    }
    for (int j : w.col_indices) {
        if (j < 0 || j >= fm.cols()) return false;
    }
    for (int a = 0; a < k; ++a) {
        for (int b = 0; b < k; ++b) {
            Tri t = fm.get(w.row_indices[w.row_perm[a]], w.col_indices[w.col_perm[b]]);
            if (a == b && t != Tri::One) return false;
            if (a > b && t != Tri::Zero) return false;
        }
    }
    return true;
}

namespace {

// Ascending k-subset enumeration in lexicographic order.
bool next_subset(std::vector<int>& s, int bound) {
    const int k = static_cast<int>(s.size());
    for (int i = k - 1; i >= 0; --i) {
        if (s[i] < bound - (k - i)) {
            ++s[i];
            for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

std::vector<TriangulableWitness> enumerate_triangulable_submatrices(const TriMatrix& fm) {
    std::vector<TriangulableWitness> out;
    const int maxk = std::min(fm.rows(), fm.cols());
    for (int k = maxk; k >= 1; --k) {
        std::vector<int> rows(k);
        for (int i = 0; i < k; ++i) rows[i] = i;
        do {
            std::vector<int> cols(k);
            for (int i = 0; i < k; ++i) cols[i] = i;
            do {
                if (auto w = triangulable_submatrix(fm, rows, cols)) out.push_back(std::move(*w));
            } while (next_subset(cols, fm.cols()));
        } while (next_subset(rows, fm.rows()));
    }
    return out;
}

DecoderSearch find_decoding_matrix(const BinMatrix& g, const TriMatrix& fm) {
    if (g.cols() != fm.cols()) throw std::invalid_argument("encoder and fitting matrix column counts differ");
    std::vector<int> demands = row_demands(fm);
    BinMatrix d(fm.rows(), g.rows());
    for (int i = 0; i < fm.rows(); ++i) {
        std::vector<int> zeros;
        for (int j = 0; j < fm.cols(); ++j) {
            if (fm.get(i, j) == Tri::Zero) zeros.push_back(j);
        }
        auto row = solve_left(g, {demands[i]}, zeros);
        if (!row) return DecoderSearch{std::nullopt, i};
        d.set_row(i, *row);
    }
    return DecoderSearch{std::move(d), -1};
}

bool simulate_decoding(const BinMatrix& g, const BinMatrix& d, const TriMatrix& fm,
                       const DecodingTrials& trials) {
    const int m = fm.cols();
    const int n = fm.rows();
    const int r = g.rows();
    if (g.cols() != m || d.rows() != n || d.cols() != r) {
        throw std::invalid_argument("simulation dimensions do not match");
    }
    BinMatrix dg = d * g;
    std::vector<int> demands = row_demands(fm);

    auto run_vector = [&](const BitRow& x) {
        // codeword
        BitRow y(r, 0);
        for (int i = 0; i < r; ++i) {
            std::uint8_t acc = 0;
            for (int j = 0; j < m; ++j) acc ^= static_cast<std::uint8_t>(g.get(i, j) & (x[j] != 0));
            y[i] = acc;
        }
        for (int i = 0; i < n; ++i) {
            std::uint8_t heard = 0;
            for (int k = 0; k < r; ++k) heard ^= static_cast<std::uint8_t>(d.get(i, k) & (y[k] != 0));
            std::uint8_t known = 0;
            for (int j = 0; j < m; ++j) {
                if (fm.get(i, j) == Tri::Unknown) known ^= static_cast<std::uint8_t>(dg.get(i, j) & (x[j] != 0));
            }
            if (static_cast<std::uint8_t>(heard ^ known) != x[demands[i]]) return false;
        }
        return true;
    };

    if (!trials.samples) {
        if (m > 24) throw std::invalid_argument("exhaustive simulation limited to 24 message bits");
        const std::uint64_t total = std::uint64_t{1} << m;
        BitRow x(m, 0);
        for (std::uint64_t v = 0; v < total; ++v) {
            for (int j = 0; j < m; ++j) x[j] = (v >> j) & 1;
            if (!run_vector(x)) return false;
        }
        return true;
    }
    std::mt19937_64 rng(trials.seed);
    BitRow x(m, 0);
    for (std::uint64_t t = 0; t < *trials.samples; ++t) {
        for (int j = 0; j < m; ++j) x[j] = rng() & 1;
        if (!run_vector(x)) return false;
    }
    return true;
}

}  // namespace icode
