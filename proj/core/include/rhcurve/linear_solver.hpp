#pragma once

#include "rhcurve/gaussian_rational.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace rhc {

/// Sparse linear system A*x = b over Q(i) with labelled rows and columns.
///
/// Rows are equations (one per compared coefficient), columns are unknowns.
/// Labels only feed diagnostics and certificates.
class LinearProblem {
public:
    std::size_t add_row(std::string label);
    std::size_t add_column(std::string label);

    /// A[row][col] += v
    void add(std::size_t row, std::size_t col, const GR& v);
    /// b[row] += v
    void add_rhs(std::size_t row, const GR& v);

    std::size_t rows() const { return row_labels_.size(); }
    std::size_t cols() const { return col_labels_.size(); }
    const std::string& row_label(std::size_t r) const { return row_labels_[r]; }
    const std::string& col_label(std::size_t c) const { return col_labels_[c]; }

    /// Column c as row -> value, zeros omitted.
    const std::map<std::size_t, GR>& column(std::size_t c) const { return columns_[c]; }
    GR at(std::size_t r, std::size_t c) const;
    const GR& rhs(std::size_t r) const { return rhs_[r]; }

private:
    std::vector<std::string> row_labels_;
    std::vector<std::string> col_labels_;
    std::vector<std::map<std::size_t, GR>> columns_;
    std::vector<GR> rhs_;
};

struct LinearOutcome {
    bool feasible = false;
    /// One value per column when feasible (free unknowns set to 0).
    std::vector<GR> solution;
    /// One value per row when infeasible: y*A = 0 and y*b != 0.
    std::vector<GR> witness;
    std::size_t rank = 0;
};

/// Exact Gauss-Jordan elimination. Pivots are picked per column among the
/// remaining rows by smallest coefficient height, which keeps intermediate
/// growth in check on the systems built here.
LinearOutcome solve_exact(const LinearProblem& p);

/// A*x == b exactly.
bool check_solution(const LinearProblem& p, const std::vector<GR>& x);
/// y*A == 0 and y*b != 0 exactly.
bool check_witness(const LinearProblem& p, const std::vector<GR>& y);

/// Determinant of a small dense square matrix by exact elimination.
GR determinant(const std::vector<std::vector<GR>>& m);

}  // namespace rhc
