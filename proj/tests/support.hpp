#pragma once

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "icode/bounds.hpp"
#include "icode/compose.hpp"
#include "icode/extension.hpp"
#include "icode/minrank.hpp"
#include "icode/problem.hpp"

#ifndef ICODE_FIXTURE_DIR
#define ICODE_FIXTURE_DIR "tests/fixtures"
#endif

namespace testutil {

inline std::string fixture_path(const std::string& name) {
    return std::string(ICODE_FIXTURE_DIR) + "/" + name;
}

inline std::string read_fixture(const std::string& name) {
    std::ifstream in(fixture_path(name), std::ios::binary);
    if (!in) throw std::runtime_error("missing fixture: " + name);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline icode::TriMatrix tri(const std::string& name) { return icode::parse_tri(read_fixture(name)); }
inline icode::BinMatrix bin(const std::string& name) { return icode::parse_bin(read_fixture(name)); }

inline icode::ExtensionSpec spec(const std::string& manifest) {
    return icode::load_extension_spec(fixture_path(manifest));
}

// --- randomized generators (deterministic seeds per test) ---

/// Fitting matrix of a random groupcast problem: every row demands one
/// message, every message demanded at least once, side information with
/// the given density.
inline icode::TriMatrix random_fitting(std::mt19937_64& rng, int n, int m, double density) {
    if (n < m) throw std::invalid_argument("need n >= m to cover all messages");
    std::vector<int> demand(n);
    for (int j = 0; j < m; ++j) demand[j] = j;
    for (int i = m; i < n; ++i) demand[i] = static_cast<int>(rng() % m);
    std::shuffle(demand.begin(), demand.end(), rng);
    icode::TriMatrix fm(n, m);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int i = 0; i < n; ++i) {
        fm.set(i, demand[i], icode::Tri::One);
        for (int j = 0; j < m; ++j) {
            if (j != demand[i] && coin(rng) < density) fm.set(i, j, icode::Tri::Unknown);
        }
    }
    return fm;
}

inline icode::TriMatrix random_tri(std::mt19937_64& rng, int n, int m) {
    icode::TriMatrix fm(n, m);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < m; ++j) {
            switch (rng() % 3) {
                case 0: fm.set(i, j, icode::Tri::Zero); break;
                case 1: fm.set(i, j, icode::Tri::One); break;
                default: fm.set(i, j, icode::Tri::Unknown); break;
            }
        }
    }
    return fm;
}

inline icode::BinMatrix random_bin(std::mt19937_64& rng, int n, int m) {
    icode::BinMatrix out(n, m);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < m; ++j) {
            if (rng() & 1) out.set(i, j, true);
        }
    }
    return out;
}

/// A uniformly random completion of fm.
inline icode::BinMatrix random_completion(std::mt19937_64& rng, const icode::TriMatrix& fm) {
    icode::BinMatrix out(fm.rows(), fm.cols());
    for (int i = 0; i < fm.rows(); ++i) {
        for (int j = 0; j < fm.cols(); ++j) {
            switch (fm.get(i, j)) {
                case icode::Tri::One: out.set(i, j, true); break;
                case icode::Tri::Unknown: out.set(i, j, rng() & 1); break;
                case icode::Tri::Zero: break;
            }
        }
    }
    return out;
}

/// Full-rank encoder derived from a random completion: its row basis.
/// Every such encoder admits a decoder for the problem.
inline icode::BinMatrix random_encoder(std::mt19937_64& rng, const icode::TriMatrix& fm) {
    icode::BinMatrix f = random_completion(rng, fm);
    icode::RowBasis rb = icode::row_basis(f);
    return icode::select_rows(f, rb.pivot_rows);
}

}  // namespace testutil
