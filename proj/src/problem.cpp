#include "icode/problem.hpp"

#include <algorithm>
#include <sstream>

namespace icode {

char tri_char(Tri t) {
    switch (t) {
        case Tri::Zero: return '0';
        case Tri::One: return '1';
        case Tri::Unknown: return 'x';
    }
    return '?';
}

TriMatrix::TriMatrix(int rows, int cols, Tri fill) : rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("matrix dimensions must be at least 1x1");
    cells_.assign(static_cast<std::size_t>(rows) * cols, fill);
}

Tri TriMatrix::get(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::invalid_argument("tri-matrix index out of range");
    return cells_[static_cast<std::size_t>(r) * cols_ + c];
}

void TriMatrix::set(int r, int c, Tri v) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::invalid_argument("tri-matrix index out of range");
    cells_[static_cast<std::size_t>(r) * cols_ + c] = v;
}

int TriMatrix::count_unknowns() const {
    return static_cast<int>(std::count(cells_.begin(), cells_.end(), Tri::Unknown));
}

ProblemInstance normalize(const RawProblem& raw) {
    if (raw.num_messages < 1) throw std::invalid_argument("problem must have at least one message");
    ProblemInstance out;
    out.num_messages = raw.num_messages;
    std::vector<bool> demanded(raw.num_messages, false);
    for (std::size_t j = 0; j < raw.receivers.size(); ++j) {
        const MultiReceiver& r = raw.receivers[j];
        if (r.wants.empty()) {
            throw std::invalid_argument("receiver " + std::to_string(j + 1) + " demands no message");
        }
        std::vector<int> knows = r.knows;
        std::sort(knows.begin(), knows.end());
        knows.erase(std::unique(knows.begin(), knows.end()), knows.end());
        for (int k : knows) {
            if (k < 0 || k >= raw.num_messages) {
                throw std::invalid_argument("receiver " + std::to_string(j + 1) + " knows out-of-range message");
            }
        }
        std::vector<int> wants = r.wants;
        std::sort(wants.begin(), wants.end());
        wants.erase(std::unique(wants.begin(), wants.end()), wants.end());
        for (int w : wants) {
            if (w < 0 || w >= raw.num_messages) {
                throw std::invalid_argument("receiver " + std::to_string(j + 1) + " wants out-of-range message");
            }
            if (std::binary_search(knows.begin(), knows.end(), w)) {
                throw std::invalid_argument("receiver " + std::to_string(j + 1) + " wants message " +
                                            std::to_string(w + 1) + " it already knows");
            }
            out.receivers.push_back(Receiver{w, knows});
            demanded[w] = true;
        }
    }
    for (int m = 0; m < raw.num_messages; ++m) {
        if (!demanded[m]) {
            throw std::invalid_argument("message " + std::to_string(m + 1) + " is demanded by no receiver");
        }
    }
    return out;
}

TriMatrix fitting_matrix(const ProblemInstance& p) {
    if (p.receivers.empty()) throw std::invalid_argument("problem has no receivers");
    TriMatrix fm(static_cast<int>(p.receivers.size()), p.num_messages);
    for (std::size_t i = 0; i < p.receivers.size(); ++i) {
        const Receiver& r = p.receivers[i];
        for (int k : r.knows) fm.set(static_cast<int>(i), k, Tri::Unknown);
        fm.set(static_cast<int>(i), r.wants, Tri::One);
    }
    return fm;
}

std::vector<int> row_demands(const TriMatrix& fm) {
    std::vector<int> demands(fm.rows(), -1);
    for (int i = 0; i < fm.rows(); ++i) {
        for (int j = 0; j < fm.cols(); ++j) {
            if (fm.get(i, j) == Tri::One) {
                if (demands[i] >= 0) {
                    throw std::invalid_argument("row " + std::to_string(i + 1) + " has more than one demanded message");
                }
                demands[i] = j;
            }
        }
        if (demands[i] < 0) {
            throw std::invalid_argument("row " + std::to_string(i + 1) + " has no demanded message");
        }
    }
    return demands;
}

ProblemInstance problem_of(const TriMatrix& fm) {
    std::vector<int> demands = row_demands(fm);
    ProblemInstance p;
    p.num_messages = fm.cols();
    std::vector<bool> covered(fm.cols(), false);
    for (int i = 0; i < fm.rows(); ++i) {
        Receiver r;
        r.wants = demands[i];
        covered[r.wants] = true;
        for (int j = 0; j < fm.cols(); ++j) {
            if (fm.get(i, j) == Tri::Unknown) r.knows.push_back(j);
        }
        p.receivers.push_back(std::move(r));
    }
    for (int m = 0; m < fm.cols(); ++m) {
        if (!covered[m]) {
            throw std::invalid_argument("message " + std::to_string(m + 1) + " is demanded by no receiver");
        }
    }
    return p;
}

bool completes(const BinMatrix& f, const TriMatrix& fm) {
    if (f.rows() != fm.rows() || f.cols() != fm.cols()) {
        throw std::invalid_argument("completion dimensions do not match");
    }
    for (int i = 0; i < fm.rows(); ++i) {
        for (int j = 0; j < fm.cols(); ++j) {
            Tri t = fm.get(i, j);
            if (t == Tri::Unknown) continue;
            if (f.get(i, j) != (t == Tri::One)) return false;
        }
    }
    return true;
}

namespace {

std::vector<std::vector<char>> parse_grid(std::string_view text, bool allow_x) {
    std::vector<std::vector<char>> grid;
    std::vector<char> row;
    int line = 1, col = 0;
    bool saw_any = false;
    auto flush_row = [&]() {
        if (!row.empty()) {
            if (!grid.empty() && grid.front().size() != row.size()) {
                throw ParseError("ragged row: expected " + std::to_string(grid.front().size()) +
                                     " entries, got " + std::to_string(row.size()),
                                 line, col);
            }
            grid.push_back(std::move(row));
            row.clear();
        }
    };
    for (char ch : text) {
        ++col;
        if (ch == '\n') {
            flush_row();
            ++line;
            col = 0;
            continue;
        }
        if (ch == '\r' || ch == ' ' || ch == '\t') continue;
        if (ch == '0' || ch == '1' || (allow_x && ch == 'x')) {
            row.push_back(ch);
            saw_any = true;
            continue;
        }
        throw ParseError(std::string("illegal character '") + ch + "'", line, col);
    }
    flush_row();
    if (!saw_any || grid.empty()) throw ParseError("empty matrix", line, col);
    return grid;
}

}  // namespace

TriMatrix parse_tri(std::string_view text) {
    auto grid = parse_grid(text, true);
    TriMatrix m(static_cast<int>(grid.size()), static_cast<int>(grid.front().size()));
    for (std::size_t i = 0; i < grid.size(); ++i) {
        for (std::size_t j = 0; j < grid[i].size(); ++j) {
            Tri t = grid[i][j] == 'x' ? Tri::Unknown : (grid[i][j] == '1' ? Tri::One : Tri::Zero);
            m.set(static_cast<int>(i), static_cast<int>(j), t);
        }
    }
    return m;
}

std::string emit_tri(const TriMatrix& m) {
    std::string out;
    out.reserve(static_cast<std::size_t>(m.rows()) * (m.cols() + 1));
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) out.push_back(tri_char(m.get(i, j)));
        out.push_back('\n');
    }
    return out;
}

BinMatrix parse_bin(std::string_view text) {
    auto grid = parse_grid(text, false);
    BinMatrix m(static_cast<int>(grid.size()), static_cast<int>(grid.front().size()));
    for (std::size_t i = 0; i < grid.size(); ++i) {
        for (std::size_t j = 0; j < grid[i].size(); ++j) {
            if (grid[i][j] == '1') m.set(static_cast<int>(i), static_cast<int>(j), true);
        }
    }
    return m;
}

std::string emit_bin(const BinMatrix& m) {
    std::string out;
    out.reserve(static_cast<std::size_t>(m.rows()) * (m.cols() + 1));
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) out.push_back(m.get(i, j) ? '1' : '0');
        out.push_back('\n');
    }
    return out;
}

namespace {

int parse_int(std::string_view s, int line) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(std::string(s), &pos);
        if (pos != s.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw ParseError("expected integer, got '" + std::string(s) + "'", line, 1);
    }
}

std::vector<int> parse_int_list(std::string_view s, int line) {
    std::vector<int> out;
    std::size_t start = 0;
    if (s.empty()) return out;
    while (true) {
        std::size_t comma = s.find(',', start);
        std::string_view item = s.substr(start, comma == std::string_view::npos ? comma : comma - start);
        out.push_back(parse_int(item, line));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

}  // namespace

RawProblem parse_problem(std::string_view text) {
    RawProblem raw;
    raw.num_messages = -1;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        std::string_view line = text.substr(pos, end == std::string_view::npos ? end : end - pos);
        pos = end == std::string_view::npos ? text.size() + 1 : end + 1;
        ++line_no;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
        if (line.empty()) continue;
        if (line.rfind("m=", 0) == 0) {
            if (raw.num_messages >= 0) throw ParseError("duplicate m= line", line_no, 1);
            raw.num_messages = parse_int(line.substr(2), line_no);
            continue;
        }
        if (line.rfind("wants=", 0) == 0) {
            if (raw.num_messages < 0) throw ParseError("wants= before m=", line_no, 1);
            std::size_t sp = line.find(' ');
            std::string_view wants_part = line.substr(6, sp == std::string_view::npos ? sp : sp - 6);
            MultiReceiver r;
            for (int w : parse_int_list(wants_part, line_no)) r.wants.push_back(w - 1);
            if (sp != std::string_view::npos) {
                std::string_view rest = line.substr(sp + 1);
                if (rest.rfind("knows=", 0) != 0) throw ParseError("expected knows= field", line_no, static_cast<int>(sp + 2));
                for (int k : parse_int_list(rest.substr(6), line_no)) r.knows.push_back(k - 1);
            }
            raw.receivers.push_back(std::move(r));
            continue;
        }
        throw ParseError("unrecognized line '" + std::string(line) + "'", line_no, 1);
    }
    if (raw.num_messages < 0) throw ParseError("missing m= line", line_no, 1);
    if (raw.receivers.empty()) throw ParseError("problem has no receivers", line_no, 1);
    return raw;
}

std::string emit_problem(const ProblemInstance& p) {
    std::ostringstream out;
    out << "m=" << p.num_messages << "\n";
    for (const Receiver& r : p.receivers) {
        out << "wants=" << (r.wants + 1) << " knows=";
        for (std::size_t i = 0; i < r.knows.size(); ++i) {
            if (i) out << ',';
            out << (r.knows[i] + 1);
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace icode
