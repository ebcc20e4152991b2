#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "icode/gf2.hpp"

namespace icode {

/// Entry of a partially known matrix.
enum class Tri : std::uint8_t { Zero = 0, One = 1, Unknown = 2 };

char tri_char(Tri t);

/// Receiver-by-message matrix over {0, 1, x}: 1 at the demanded message,
/// x at side information, 0 elsewhere. Also used for arbitrary tri-valued
/// submatrices during triangulability search.
class TriMatrix {
public:
    TriMatrix(int rows, int cols, Tri fill = Tri::Zero);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Tri get(int r, int c) const;
    void set(int r, int c, Tri v);

    int count_unknowns() const;

    friend bool operator==(const TriMatrix&, const TriMatrix&) = default;

private:
    int rows_;
    int cols_;
    std::vector<Tri> cells_;
};

/// A normalized receiver: wants exactly one message.
struct Receiver {
    int wants = 0;               // 0-based message index
    std::vector<int> knows;      // ascending 0-based message indices
    friend bool operator==(const Receiver&, const Receiver&) = default;
};

struct ProblemInstance {
    int num_messages = 0;
    std::vector<Receiver> receivers;
    friend bool operator==(const ProblemInstance&, const ProblemInstance&) = default;
};

/// Pre-normalization receiver that may want several messages.
struct MultiReceiver {
    std::vector<int> wants;
    std::vector<int> knows;
};

struct RawProblem {
    int num_messages = 0;
    std::vector<MultiReceiver> receivers;
};

/// Splits each multi-demand receiver into one receiver per wanted message
/// (original receiver order, then ascending demand index) and validates
/// the instance: demands disjoint from side information, every message
/// demanded at least once.
ProblemInstance normalize(const RawProblem& raw);

TriMatrix fitting_matrix(const ProblemInstance& p);

/// Inverse of fitting_matrix. Every row must carry exactly one One and
/// every message must be demanded by some receiver.
ProblemInstance problem_of(const TriMatrix& fm);

/// True iff f agrees with fm at every known (Zero/One) entry.
bool completes(const BinMatrix& f, const TriMatrix& fm);

/// Demand column of each row (requires exactly one One per row).
std::vector<int> row_demands(const TriMatrix& fm);

struct ParseError : std::runtime_error {
    ParseError(std::string msg, int line, int col)
        : std::runtime_error(std::move(msg)), line(line), col(col) {}
    int line;
    int col;
};

// Text formats: one row per line, characters '0', '1', 'x'; single spaces
// between characters are ignored on input and never emitted.
TriMatrix parse_tri(std::string_view text);
std::string emit_tri(const TriMatrix& m);
BinMatrix parse_bin(std::string_view text);
std::string emit_bin(const BinMatrix& m);

// Problem files: a line "m=<int>", then one line per receiver
// "wants=<int> knows=<int,int,...>" (knows may be empty). 1-based indices.
RawProblem parse_problem(std::string_view text);
std::string emit_problem(const ProblemInstance& p);

}  // namespace icode
