#include "icode/extension.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace icode {

int BlockLayout::total_rows() const {
    int s = 0;
    for (int h : row_heights) s += h;
    return s;
}

int BlockLayout::total_cols() const {
    int s = 0;
    for (int w : col_widths) s += w;
    return s;
}

int BlockLayout::row_offset(int i) const {
    if (i < 0 || i >= base_rows) throw std::invalid_argument("block row index out of range");
    int s = 0;
    for (int k = 0; k < i; ++k) s += row_heights[k];
    return s;
}

int BlockLayout::col_offset(int j) const {
    if (j < 0 || j >= base_cols) throw std::invalid_argument("block column index out of range");
    int s = 0;
    for (int k = 0; k < j; ++k) s += col_widths[k];
    return s;
}

BlockDims BlockLayout::dims() const {
    return BlockDims{row_heights, col_widths};
}

namespace {

BlockLayout derive_layout(const TriMatrix& base, const std::vector<TriMatrix>& components) {
    if (static_cast<int>(components.size()) != base.cols()) {
        throw std::invalid_argument("expected " + std::to_string(base.cols()) + " components, got " +
                                    std::to_string(components.size()));
    }
    BlockLayout layout;
    layout.base_rows = base.rows();
    layout.base_cols = base.cols();
    layout.demand_of_blockrow = row_demands(base);  // throws when a base row lacks its One
    layout.ones_per_col.assign(base.cols(), 0);
    for (int i = 0; i < base.rows(); ++i) layout.ones_per_col[layout.demand_of_blockrow[i]]++;
    for (int j = 0; j < base.cols(); ++j) {
        if (layout.ones_per_col[j] == 0) {
            throw std::invalid_argument("base message " + std::to_string(j + 1) + " is demanded by no base receiver");
        }
        layout.col_widths.push_back(components[j].cols());
    }
    for (int i = 0; i < base.rows(); ++i) {
        layout.row_heights.push_back(components[layout.demand_of_blockrow[i]].rows());
    }
    return layout;
}

}  // namespace

Extension build_extension(const TriMatrix& base, const std::vector<TriMatrix>& components) {
    BlockLayout layout = derive_layout(base, components);
    TriMatrix out(layout.total_rows(), layout.total_cols());
    int roff = 0;
    for (int i = 0; i < base.rows(); ++i) {
        const int height = layout.row_heights[i];
        int coff = 0;
        for (int j = 0; j < base.cols(); ++j) {
            const int width = layout.col_widths[j];
            switch (base.get(i, j)) {
                case Tri::Unknown:
                    for (int r = 0; r < height; ++r)
                        for (int c = 0; c < width; ++c) out.set(roff + r, coff + c, Tri::Unknown);
                    break;
                case Tri::One:
                    for (int r = 0; r < height; ++r)
                        for (int c = 0; c < width; ++c) out.set(roff + r, coff + c, components[j].get(r, c));
                    break;
                case Tri::Zero:
                    break;
            }
            coff += width;
        }
        roff += height;
    }
    return Extension{std::move(out), std::move(layout)};
}

ExtensionSpec make_extension_spec(TriMatrix base, std::vector<TriMatrix> components) {
    BlockLayout layout = derive_layout(base, components);
    return ExtensionSpec{std::move(base), std::move(components), std::move(layout)};
}

TriMatrix extended_fitting(const ExtensionSpec& spec) {
    return build_extension(spec.base, spec.components).matrix;
}

bool recognize_extension(const TriMatrix& fm, const TriMatrix& base,
                         const std::vector<TriMatrix>& components) {
    try {
        Extension ext = build_extension(base, components);
        return ext.matrix == fm;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

namespace {

template <typename M>
M block_view_impl(const M& m, const BlockLayout& layout, int i, int j) {
    if (m.rows() != layout.total_rows() || m.cols() != layout.total_cols()) {
        throw std::invalid_argument("matrix does not match layout dimensions");
    }
    const int roff = layout.row_offset(i);
    const int coff = layout.col_offset(j);
    M out(layout.row_heights[i], layout.col_widths[j]);
    for (int r = 0; r < out.rows(); ++r) {
        for (int c = 0; c < out.cols(); ++c) {
            out.set(r, c, m.get(roff + r, coff + c));
        }
    }
    return out;
}

}  // namespace

TriMatrix block_view(const TriMatrix& m, const BlockLayout& layout, int i, int j) {
    return block_view_impl(m, layout, i, j);
}

BinMatrix block_view(const BinMatrix& m, const BlockLayout& layout, int i, int j) {
    return block_view_impl(m, layout, i, j);
}

namespace {

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

ExtensionSpec load_extension_spec(const std::string& manifest_path) {
    const std::filesystem::path manifest(manifest_path);
    const std::filesystem::path dir = manifest.parent_path();
    std::string text = read_file(manifest);

    std::string base_path;
    std::vector<std::string> component_paths;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        std::string line = text.substr(pos, end == std::string::npos ? end : end - pos);
        pos = end == std::string::npos ? text.size() : end + 1;
        ++line_no;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        if (line.rfind("base=", 0) == 0) {
            if (!base_path.empty()) throw ParseError("duplicate base= line", line_no, 1);
            base_path = line.substr(5);
        } else if (line.rfind("component=", 0) == 0) {
            component_paths.push_back(line.substr(10));
        } else {
            throw ParseError("unrecognized manifest line '" + line + "'", line_no, 1);
        }
    }
    if (base_path.empty()) throw ParseError("manifest missing base= line", line_no, 1);
    if (component_paths.empty()) throw ParseError("manifest lists no components", line_no, 1);

    TriMatrix base = parse_tri(read_file(dir / base_path));
    std::vector<TriMatrix> components;
    components.reserve(component_paths.size());
    for (const std::string& p : component_paths) components.push_back(parse_tri(read_file(dir / p)));
    return make_extension_spec(std::move(base), std::move(components));
}

}  // namespace icode
