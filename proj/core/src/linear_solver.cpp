#include "rhcurve/linear_solver.hpp"

#include "rhcurve/errors.hpp"

#include <limits>
#include <optional>

namespace rhc {

std::size_t LinearProblem::add_row(std::string label)
{
    row_labels_.push_back(std::move(label));
    rhs_.emplace_back();
    return row_labels_.size() - 1;
}

std::size_t LinearProblem::add_column(std::string label)
{
    col_labels_.push_back(std::move(label));
    columns_.emplace_back();
    return col_labels_.size() - 1;
}

void LinearProblem::add(std::size_t row, std::size_t col, const GR& v)
{
    if (row >= rows() || col >= cols()) {
        throw Error(ErrorKind::InvalidArgument, "linear problem entry out of range");
    }
    if (v.is_zero()) {
        return;
    }
    auto& column = columns_[col];
    auto [it, inserted] = column.try_emplace(row, v);
    if (!inserted) {
        it->second += v;
        if (it->second.is_zero()) {
            column.erase(it);
        }
    }
}

void LinearProblem::add_rhs(std::size_t row, const GR& v)
{
    if (row >= rows()) {
        throw Error(ErrorKind::InvalidArgument, "linear problem row out of range");
    }
    rhs_[row] += v;
}

GR LinearProblem::at(std::size_t r, std::size_t c) const
{
    auto it = columns_[c].find(r);
    return it == columns_[c].end() ? GR() : it->second;
}

namespace {

using SparseRow = std::map<std::size_t, GR>;

struct WorkRow {
    SparseRow coeffs;
    GR rhs;
    SparseRow combo;  // this row as a combination of the original rows
};

// dst -= c * src
void axpy(SparseRow& dst, const GR& c, const SparseRow& src)
{
    for (const auto& [k, v] : src) {
        auto [it, inserted] = dst.try_emplace(k, -(c * v));
        if (!inserted) {
            it->second -= c * v;
            if (it->second.is_zero()) {
                dst.erase(it);
            }
        }
    }
}

}  // namespace

LinearOutcome solve_exact(const LinearProblem& p)
{
    std::vector<WorkRow> rows(p.rows());
    for (std::size_t r = 0; r < p.rows(); ++r) {
        rows[r].rhs = p.rhs(r);
        rows[r].combo.emplace(r, GR(1));
    }
    for (std::size_t c = 0; c < p.cols(); ++c) {
        for (const auto& [r, v] : p.column(c)) {
            rows[r].coeffs.emplace(c, v);
        }
    }

    std::vector<bool> used(rows.size(), false);
    std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)
    for (std::size_t c = 0; c < p.cols(); ++c) {
        std::optional<std::size_t> best;
        std::size_t best_height = std::numeric_limits<std::size_t>::max();
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (used[r]) {
                continue;
            }
            auto it = rows[r].coeffs.find(c);
            if (it == rows[r].coeffs.end()) {
                continue;
            }
            std::size_t h = it->second.height() + rows[r].coeffs.size();
            if (h < best_height) {
                best_height = h;
                best = r;
            }
        }
        if (!best) {
            continue;
        }
        WorkRow& piv = rows[*best];
        GR inv = piv.coeffs.at(c).inverse();
        for (auto& [k, v] : piv.coeffs) {
            v *= inv;
        }
        for (auto& [k, v] : piv.combo) {
            v *= inv;
        }
        piv.rhs *= inv;
        used[*best] = true;
        pivots.emplace_back(*best, c);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (used[r]) {
                continue;
            }
            auto it = rows[r].coeffs.find(c);
            if (it == rows[r].coeffs.end()) {
                continue;
            }
            GR factor = it->second;
            axpy(rows[r].coeffs, factor, piv.coeffs);
            axpy(rows[r].combo, factor, piv.combo);
            rows[r].rhs -= factor * piv.rhs;
        }
    }

    LinearOutcome out;
    out.rank = pivots.size();
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (!used[r] && !rows[r].rhs.is_zero()) {
            out.feasible = false;
            out.witness.assign(p.rows(), GR());
            for (const auto& [k, v] : rows[r].combo) {
                out.witness[k] = v;
            }
            return out;
        }
    }
    out.feasible = true;
    out.solution.assign(p.cols(), GR());
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
        const WorkRow& row = rows[it->first];
        GR v = row.rhs;
        for (const auto& [k, a] : row.coeffs) {
            if (k != it->second) {
                v -= a * out.solution[k];
            }
        }
        out.solution[it->second] = v;
    }
    return out;
}

bool check_solution(const LinearProblem& p, const std::vector<GR>& x)
{
    if (x.size() != p.cols()) {
        return false;
    }
    std::vector<GR> ax(p.rows());
    for (std::size_t c = 0; c < p.cols(); ++c) {
        if (x[c].is_zero()) {
            continue;
        }
        for (const auto& [r, v] : p.column(c)) {
            ax[r] += v * x[c];
        }
    }
    for (std::size_t r = 0; r < p.rows(); ++r) {
        if (!(ax[r] == p.rhs(r))) {
            return false;
        }
    }
    return true;
}

bool check_witness(const LinearProblem& p, const std::vector<GR>& y)
{
    if (y.size() != p.rows()) {
        return false;
    }
    for (std::size_t c = 0; c < p.cols(); ++c) {
        GR acc;
        for (const auto& [r, v] : p.column(c)) {
            acc += y[r] * v;
        }
        if (!acc.is_zero()) {
            return false;
        }
    }
    GR pairing;
    for (std::size_t r = 0; r < p.rows(); ++r) {
        pairing += y[r] * p.rhs(r);
    }
    return !pairing.is_zero();
}

GR determinant(const std::vector<std::vector<GR>>& m)
{
    std::size_t n = m.size();
    for (const auto& row : m) {
        if (row.size() != n) {
            throw Error(ErrorKind::InvalidArgument, "determinant of a non-square matrix");
        }
    }
    std::vector<std::vector<GR>> a = m;
    GR det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv][c].is_zero()) {
            ++piv;
        }
        if (piv == n) {
            return GR();
        }
        if (piv != c) {
            std::swap(a[piv], a[c]);
            det = -det;
        }
        det *= a[c][c];
        GR inv = a[c][c].inverse();
        for (std::size_t r = c + 1; r < n; ++r) {
            if (a[r][c].is_zero()) {
                continue;
            }
            GR factor = a[r][c] * inv;
            for (std::size_t k = c; k < n; ++k) {
                a[r][k] -= factor * a[c][k];
            }
        }
    }
    return det;
}

}  // namespace rhc
