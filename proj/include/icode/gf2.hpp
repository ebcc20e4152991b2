#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace icode {

/// A 0/1 row vector. Used at API boundaries; dense bit-packing stays
/// inside BinMatrix.
using BitRow = std::vector<std::uint8_t>;

/// Dense matrix over GF(2). Rows are bit-packed into 64-bit words;
/// addition is XOR and multiplication is AND. Values are immutable in
/// spirit: every operation below returns a fresh matrix.
class BinMatrix {
public:
    BinMatrix(int rows, int cols);
    static BinMatrix identity(int n);
    static BinMatrix from_rows(const std::vector<BitRow>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool get(int r, int c) const;
    void set(int r, int c, bool value);

    BitRow row(int r) const;
    void set_row(int r, const BitRow& v);

    /// rows ^= other row (in-row accumulate), used by elimination loops.
    void xor_row_from(int dst, const BinMatrix& src, int src_row);

    friend bool operator==(const BinMatrix& a, const BinMatrix& b);

    // Word-level access for hot loops (words beyond `cols` are kept zero).
    int words_per_row() const { return words_per_row_; }
    const std::uint64_t* row_words(int r) const { return words_.data() + static_cast<std::size_t>(r) * words_per_row_; }
    std::uint64_t* row_words(int r) { return words_.data() + static_cast<std::size_t>(r) * words_per_row_; }

private:
    int rows_;
    int cols_;
    int words_per_row_;
    std::vector<std::uint64_t> words_;
};

BinMatrix operator*(const BinMatrix& a, const BinMatrix& b);
BitRow operator*(const BitRow& v, const BinMatrix& m);

/// A bijection on [0, size). Stored as an index map with gather
/// semantics: applying p to rows gives out.row(i) = in.row(p[i]).
class Permutation {
public:
    explicit Permutation(std::vector<int> map);
    static Permutation identity(int n);

    int size() const { return static_cast<int>(map_.size()); }
    int operator[](int i) const { return map_.at(i); }
    const std::vector<int>& map() const { return map_; }
    Permutation inverse() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> map_;
};

enum class Axis { Rows, Cols };

/// GF(2) rank via Gaussian elimination with leftmost pivots. Deterministic.
int rank(const BinMatrix& m);

/// Finds a row vector d (length = rows of g) with (d*g) equal to 1 on every
/// column in `ones` and 0 on every column in `zeros`; other columns are
/// unconstrained. Free variables are fixed to 0 after elimination with
/// smallest-pivot-index order, so the returned solution is unique and
/// reproducible. Returns nullopt when the system is infeasible.
std::optional<BitRow> solve_left(const BinMatrix& g,
                                 const std::vector<int>& ones,
                                 const std::vector<int>& zeros);

/// True iff v lies in the span of the rows of m.
bool row_space_contains(const BinMatrix& m, const BitRow& v);

BinMatrix apply_perm(const BinMatrix& m, const Permutation& p, Axis axis);

/// Block grid geometry for assemble/extract. Heights and widths are per
/// block-row / block-column.
struct BlockDims {
    std::vector<int> row_heights;
    std::vector<int> col_widths;

    int total_rows() const;
    int total_cols() const;
};

/// Concatenates a grid of blocks; extract_block is its exact inverse.
/// A block with the wrong shape raises an input error naming (i, j).
BinMatrix assemble_blocks(const BlockDims& dims,
                          const std::vector<std::vector<BinMatrix>>& blocks);
BinMatrix extract_block(const BlockDims& dims, const BinMatrix& m, int i, int j);

/// Stacks the rows of m selected by `indices`, in the given order.
BinMatrix select_rows(const BinMatrix& m, const std::vector<int>& indices);

/// Greedy row-basis decomposition. pivot_rows is the lexicographically
/// first (ascending scan) maximal independent row set; combination[i]
/// expresses row i over pivot_rows, with combination[pivot] a unit vector.
struct RowBasis {
    std::vector<int> pivot_rows;
    std::vector<BitRow> combination;
};
RowBasis row_basis(const BinMatrix& m);

}  // namespace icode
