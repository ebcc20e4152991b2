#include "icode/gf2.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <numeric>

namespace icode {

namespace {

void check_index(int v, int bound, const char* what) {
    if (v < 0 || v >= bound) {
        throw std::invalid_argument(std::string(what) + " index " + std::to_string(v + 1) +
                                    " out of range [1, " + std::to_string(bound) + "]");
    }
}

}  // namespace

BinMatrix::BinMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), words_per_row_((cols + 63) / 64) {
    if (rows < 1 || cols < 1) {
        throw std::invalid_argument("matrix dimensions must be at least 1x1");
    }
    words_.assign(static_cast<std::size_t>(rows_) * words_per_row_, 0);
}

BinMatrix BinMatrix::identity(int n) {
    BinMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BinMatrix BinMatrix::from_rows(const std::vector<BitRow>& rows) {
    if (rows.empty() || rows.front().empty()) {
        throw std::invalid_argument("matrix dimensions must be at least 1x1");
    }
    BinMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.front().size()) {
            throw std::invalid_argument("ragged row list");
        }
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            if (rows[i][j] > 1) throw std::invalid_argument("matrix entry must be 0 or 1");
            if (rows[i][j]) m.set(static_cast<int>(i), static_cast<int>(j), true);
        }
    }
    return m;
}

bool BinMatrix::get(int r, int c) const {
    check_index(r, rows_, "row");
    check_index(c, cols_, "column");
    return (row_words(r)[c >> 6] >> (c & 63)) & 1u;
}

void BinMatrix::set(int r, int c, bool value) {
    check_index(r, rows_, "row");
    check_index(c, cols_, "column");
    std::uint64_t mask = std::uint64_t{1} << (c & 63);
    if (value) {
        row_words(r)[c >> 6] |= mask;
    } else {
        row_words(r)[c >> 6] &= ~mask;
    }
}

BitRow BinMatrix::row(int r) const {
    check_index(r, rows_, "row");
    BitRow out(cols_);
    for (int c = 0; c < cols_; ++c) out[c] = get(r, c);
    return out;
}

void BinMatrix::set_row(int r, const BitRow& v) {
    check_index(r, rows_, "row");
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("row length mismatch");
    for (int c = 0; c < cols_; ++c) set(r, c, v[c] != 0);
}

void BinMatrix::xor_row_from(int dst, const BinMatrix& src, int src_row) {
    check_index(dst, rows_, "row");
    check_index(src_row, src.rows_, "row");
    if (src.cols_ != cols_) throw std::invalid_argument("column count mismatch");
    const std::uint64_t* s = src.row_words(src_row);
    std::uint64_t* d = row_words(dst);
    for (int w = 0; w < words_per_row_; ++w) d[w] ^= s[w];
}

bool operator==(const BinMatrix& a, const BinMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.words_ == b.words_;
}

BinMatrix operator*(const BinMatrix& a, const BinMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("inner dimension mismatch");
    BinMatrix out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int k = 0; k < a.cols(); ++k) {
            if (a.get(i, k)) out.xor_row_from(i, b, k);
        }
    }
    return out;
}

BitRow operator*(const BitRow& v, const BinMatrix& m) {
    if (static_cast<int>(v.size()) != m.rows()) throw std::invalid_argument("inner dimension mismatch");
    BinMatrix acc(1, m.cols());
    for (int k = 0; k < m.rows(); ++k) {
        if (v[k]) acc.xor_row_from(0, m, k);
    }
    return acc.row(0);
}

Permutation::Permutation(std::vector<int> map) : map_(std::move(map)) {
    if (map_.empty()) throw std::invalid_argument("empty permutation");
    std::vector<bool> seen(map_.size(), false);
    for (int v : map_) {
        if (v < 0 || v >= static_cast<int>(map_.size()) || seen[v]) {
            throw std::invalid_argument("permutation map is not a bijection");
        }
        seen[v] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> map(n);
    std::iota(map.begin(), map.end(), 0);
    return Permutation(std::move(map));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(map_.size());
    for (int i = 0; i < size(); ++i) inv[map_[i]] = i;
    return Permutation(std::move(inv));
}

int rank(const BinMatrix& m) {
    BinMatrix work = m;
    int r = 0;
    for (int c = 0; c < work.cols() && r < work.rows(); ++c) {
        int pivot = -1;
        for (int i = r; i < work.rows(); ++i) {
            if (work.get(i, c)) { pivot = i; break; }
        }
        if (pivot < 0) continue;
        if (pivot != r) {
            // swap rows pivot and r word-wise
            for (int w = 0; w < work.words_per_row(); ++w) {
                std::swap(work.row_words(pivot)[w], work.row_words(r)[w]);
            }
        }
        for (int i = r + 1; i < work.rows(); ++i) {
            if (work.get(i, c)) work.xor_row_from(i, work, r);
        }
        ++r;
    }
    return r;
}

std::optional<BitRow> solve_left(const BinMatrix& g,
                                 const std::vector<int>& ones,
                                 const std::vector<int>& zeros) {
    for (int c : ones) check_index(c, g.cols(), "column");
    for (int c : zeros) {
        check_index(c, g.cols(), "column");
        if (std::find(ones.begin(), ones.end(), c) != ones.end()) {
            throw std::invalid_argument("ones and zeros overlap at column " + std::to_string(c + 1));
        }
    }

    // One equation per constrained column of g; unknowns are the entries
    // of d. Augmented system, eliminated with smallest-pivot-index order.
    const int nvars = g.rows();
    const int neqs = static_cast<int>(ones.size() + zeros.size());
    if (neqs == 0) return BitRow(nvars, 0);

    BinMatrix sys(neqs, nvars + 1);
    int e = 0;
    for (int c : ones) {
        for (int i = 0; i < nvars; ++i) sys.set(e, i, g.get(i, c));
        sys.set(e, nvars, true);
        ++e;
    }
    for (int c : zeros) {
        for (int i = 0; i < nvars; ++i) sys.set(e, i, g.get(i, c));
        ++e;
    }

    std::vector<int> pivot_of_var(nvars, -1);
    int next = 0;
    for (int v = 0; v < nvars && next < neqs; ++v) {
        int pivot = -1;
        for (int i = next; i < neqs; ++i) {
            if (sys.get(i, v)) { pivot = i; break; }
        }
        if (pivot < 0) continue;
        if (pivot != next) {
            for (int w = 0; w < sys.words_per_row(); ++w) {
                std::swap(sys.row_words(pivot)[w], sys.row_words(next)[w]);
            }
        }
        for (int i = 0; i < neqs; ++i) {
            if (i != next && sys.get(i, v)) sys.xor_row_from(i, sys, next);
        }
        pivot_of_var[v] = next;
        ++next;
    }
    for (int i = next; i < neqs; ++i) {
        if (sys.get(i, nvars)) return std::nullopt;  // 0 = 1
    }

    BitRow d(nvars, 0);
    for (int v = 0; v < nvars; ++v) {
        if (pivot_of_var[v] >= 0) d[v] = sys.get(pivot_of_var[v], nvars);
    }
    return d;
}

bool row_space_contains(const BinMatrix& m, const BitRow& v) {
    if (static_cast<int>(v.size()) != m.cols()) {
        throw std::invalid_argument("vector length does not match column count");
    }
    BinMatrix work(m.rows() + 1, m.cols());
    for (int i = 0; i < m.rows(); ++i) work.xor_row_from(i, m, i);
    work.set_row(m.rows(), v);
    return rank(work) == rank(m);
}

BinMatrix apply_perm(const BinMatrix& m, const Permutation& p, Axis axis) {
    if (axis == Axis::Rows) {
        if (p.size() != m.rows()) throw std::invalid_argument("permutation size does not match row count");
        BinMatrix out(m.rows(), m.cols());
        for (int i = 0; i < m.rows(); ++i) out.xor_row_from(i, m, p[i]);
        return out;
    }
    if (p.size() != m.cols()) throw std::invalid_argument("permutation size does not match column count");
    BinMatrix out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (m.get(i, p[j])) out.set(i, j, true);
        }
    }
    return out;
}

int BlockDims::total_rows() const {
    int s = 0;
    for (int h : row_heights) s += h;
    return s;
}

int BlockDims::total_cols() const {
    int s = 0;
    for (int w : col_widths) s += w;
    return s;
}

BinMatrix assemble_blocks(const BlockDims& dims,
                          const std::vector<std::vector<BinMatrix>>& blocks) {
    const int br = static_cast<int>(dims.row_heights.size());
    const int bc = static_cast<int>(dims.col_widths.size());
    if (static_cast<int>(blocks.size()) != br) throw std::invalid_argument("block grid row count mismatch");
    BinMatrix out(dims.total_rows(), dims.total_cols());
    int roff = 0;
    for (int i = 0; i < br; ++i) {
        if (static_cast<int>(blocks[i].size()) != bc) throw std::invalid_argument("block grid column count mismatch");
        int coff = 0;
        for (int j = 0; j < bc; ++j) {
            const BinMatrix& blk = blocks[i][j];
            if (blk.rows() != dims.row_heights[i] || blk.cols() != dims.col_widths[j]) {
                throw std::invalid_argument("block (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                            ") has shape " + std::to_string(blk.rows()) + "x" + std::to_string(blk.cols()) +
                                            ", expected " + std::to_string(dims.row_heights[i]) + "x" +
                                            std::to_string(dims.col_widths[j]));
            }
            for (int r = 0; r < blk.rows(); ++r) {
                for (int c = 0; c < blk.cols(); ++c) {
                    if (blk.get(r, c)) out.set(roff + r, coff + c, true);
                }
            }
            coff += dims.col_widths[j];
        }
        roff += dims.row_heights[i];
    }
    return out;
}

BinMatrix extract_block(const BlockDims& dims, const BinMatrix& m, int i, int j) {
    check_index(i, static_cast<int>(dims.row_heights.size()), "block row");
    check_index(j, static_cast<int>(dims.col_widths.size()), "block column");
    if (m.rows() != dims.total_rows() || m.cols() != dims.total_cols()) {
        throw std::invalid_argument("matrix does not match block dimensions");
    }
    int roff = 0, coff = 0;
    for (int k = 0; k < i; ++k) roff += dims.row_heights[k];
    for (int k = 0; k < j; ++k) coff += dims.col_widths[k];
    BinMatrix out(dims.row_heights[i], dims.col_widths[j]);
    for (int r = 0; r < out.rows(); ++r) {
        for (int c = 0; c < out.cols(); ++c) {
            if (m.get(roff + r, coff + c)) out.set(r, c, true);
        }
    }
    return out;
}

BinMatrix select_rows(const BinMatrix& m, const std::vector<int>& indices) {
    if (indices.empty()) throw std::invalid_argument("row selection must be non-empty");
    BinMatrix out(static_cast<int>(indices.size()), m.cols());
    for (std::size_t i = 0; i < indices.size(); ++i) {
        check_index(indices[i], m.rows(), "row");
        out.xor_row_from(static_cast<int>(i), m, indices[i]);
    }
    return out;
}

RowBasis row_basis(const BinMatrix& m) {
    RowBasis out;
    out.combination.resize(m.rows());
    // Reduced pivot rows plus, for each, its expression over original rows.
    struct PivotEntry {
        int lead_col;
        BinMatrix row;   // 1 x cols, reduced
        BitRow expr;     // over original row indices
    };
    std::vector<PivotEntry> pivots;
    for (int i = 0; i < m.rows(); ++i) {
        BinMatrix cur(1, m.cols());
        cur.xor_row_from(0, m, i);
        BitRow expr(m.rows(), 0);
        expr[i] = 1;
        for (const PivotEntry& p : pivots) {
            if (cur.get(0, p.lead_col)) {
                cur.xor_row_from(0, p.row, 0);
                for (int k = 0; k < m.rows(); ++k) expr[k] ^= p.expr[k];
            }
        }
        int lead = -1;
        for (int c = 0; c < m.cols(); ++c) {
            if (cur.get(0, c)) { lead = c; break; }
        }
        if (lead >= 0) {
            out.pivot_rows.push_back(i);
            pivots.push_back(PivotEntry{lead, cur, std::move(expr)});
        } else {
            // row i = sum of pivot rows flagged in expr (expr[i] cancels out)
            expr[i] = 0;
            out.combination[i] = std::move(expr);
        }
    }
    // Rewrite every expression over the pivot list, in pivot order.
    auto to_pivot_coords = [&](const BitRow& over_rows) {
        BitRow c(out.pivot_rows.size(), 0);
        for (std::size_t k = 0; k < out.pivot_rows.size(); ++k) c[k] = over_rows[out.pivot_rows[k]];
        return c;
    };
    for (int i = 0; i < m.rows(); ++i) {
        if (out.combination[i].empty()) continue;  // placeholder for pivots below
        out.combination[i] = to_pivot_coords(out.combination[i]);
    }
    for (std::size_t k = 0; k < out.pivot_rows.size(); ++k) {
        BitRow unit(out.pivot_rows.size(), 0);
        unit[k] = 1;
        out.combination[out.pivot_rows[k]] = std::move(unit);
    }
    return out;
}

}  // namespace icode
