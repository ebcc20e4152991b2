#pragma once

#include <string>
#include <vector>

#include "icode/gf2.hpp"
#include "icode/problem.hpp"

namespace icode {

/// Block geometry of an extended fitting matrix, induced by the base.
/// Block-row i has the height of the component demanded by base row i;
/// block-column j has the width of component j.
struct BlockLayout {
    int base_rows = 0;
    int base_cols = 0;
    std::vector<int> row_heights;
    std::vector<int> col_widths;
    std::vector<int> demand_of_blockrow;  // j_i, 0-based
    std::vector<int> ones_per_col;        // l_j

    int total_rows() const;  // n_E = sum over components of n_j * l_j
    int total_cols() const;  // m_E = sum of m_j
    int row_offset(int i) const;
    int col_offset(int j) const;
    BlockDims dims() const;
};

struct ExtensionSpec {
    TriMatrix base;
    std::vector<TriMatrix> components;
    BlockLayout layout;
};

struct Extension {
    TriMatrix matrix;
    BlockLayout layout;
};

/// Block (i,j) of the result is all-Unknown where the base holds x, a copy
/// of component j where base row i demands column j, and all-Zero
/// elsewhere. Requires exactly one One per base row and one component per
/// base column.
Extension build_extension(const TriMatrix& base, const std::vector<TriMatrix>& components);

ExtensionSpec make_extension_spec(TriMatrix base, std::vector<TriMatrix> components);
TriMatrix extended_fitting(const ExtensionSpec& spec);

/// Exact structural match: true iff build_extension(base, components)
/// equals fm entry for entry. Invalid inputs yield false, never throw.
bool recognize_extension(const TriMatrix& fm, const TriMatrix& base,
                         const std::vector<TriMatrix>& components);

TriMatrix block_view(const TriMatrix& m, const BlockLayout& layout, int i, int j);
BinMatrix block_view(const BinMatrix& m, const BlockLayout& layout, int i, int j);

/// Manifest format: a "base=<path>" line followed by one "component=<path>"
/// line per component, in block-column order. Paths resolve relative to
/// the manifest's directory.
ExtensionSpec load_extension_spec(const std::string& manifest_path);

}  // namespace icode
