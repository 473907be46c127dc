#pragma once

#include "rhcurve/curve.hpp"
#include "rhcurve/forms.hpp"
#include "rhcurve/series.hpp"
#include "rhcurve/verdict.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace rhc {

/// nabla = d + A on the free module of rank r over a curve germ, A an r x r
/// matrix of one-forms stored row-major. Acts on column vectors:
/// nabla(s) = ds + A*s.
class Connection {
public:
    Connection(CurvePtr curve, std::size_t rank, std::vector<CurveOneForm> entries);

    static Connection rank_one(const CurveOneForm& a);

    const CurvePtr& curve() const { return curve_; }
    std::size_t rank() const { return rank_; }
    const CurveOneForm& entry(std::size_t i, std::size_t j) const { return entries_[i * rank_ + j]; }
    const std::vector<CurveOneForm>& entries() const { return entries_; }

private:
    CurvePtr curve_;
    std::size_t rank_;
    std::vector<CurveOneForm> entries_;
};

/// Square matrices, row-major.
using SeriesMatrix = std::vector<USeries>;
using ScalarMatrix = std::vector<GR>;

ScalarMatrix identity_matrix(std::size_t rank);

/// One verdict per entry of dA + A^A, each asking for membership of the
/// two-form coefficient in (f, fx, fy). All Feasible means flat up to the
/// cap; one Infeasible certifies that the connection is not flat.
std::vector<MembershipVerdict> is_flat(const Connection& conn, int degree_cap);

/// Parallel frame S along one branch: S' = -M*S, S(0) = S0, where M ds is the
/// pullback of A.
struct BranchFrame {
    std::size_t branch_index = 0;
    std::size_t rank = 0;
    SeriesMatrix s;   // known mod s^order
    ScalarMatrix s0;
    SeriesMatrix m;   // pullback of A, known mod s^(order-1)

    const USeries& entry(std::size_t i, std::size_t j) const { return s[i * rank + j]; }
};

/// Throws Error{SingularInitialValue} when det(S0) = 0.
BranchFrame solve_frame_on_branch(const Connection& conn, const Branch& b, const ScalarMatrix& s0,
                                  std::size_t order, std::size_t branch_index = 0);

/// S(0) == S0 and S' + M*S == 0 mod s^(order-1), checked exactly.
bool check_frame_residual(const BranchFrame& frame);

/// Frames with the common initial value S0 = identity on every branch, and
/// for each matrix entry the verdict on whether the per-branch series come
/// from one ambient function.
struct CurveFrame {
    std::size_t rank = 0;
    std::size_t order = 0;
    std::vector<BranchFrame> frames;
    std::vector<StrongHolomorphyVerdict> strong;  // row-major, one per entry

    bool all_strong() const;
    /// The ambient polynomials of the entries (meaningful when all_strong).
    std::vector<Polynomial2> polynomial_frame() const;
};

/// Flatness is the caller's business; this only solves and tests.
CurveFrame build_continuous_frame(const Connection& conn, const Normalization& nz,
                                  std::size_t order);

enum class ClassificationStatus { FlatnessFailed, StrongFrame, NonTame, NoStrongFrameUpToOrder };

const char* to_string(ClassificationStatus s);

/// A section exp(-H) whose covariant derivative exp(-H)*omega, omega =
/// A - dH, is a nonzero torsion form.
///
/// H is only pinned down mod s^N on the branches. `corrected` asks whether
/// A - d(H + Q) can vanish for some Q that is zero on every branch mod s^N;
/// its Infeasible answer is what makes the witness independent of the
/// particular H returned by the solver.
struct NonTameWitness {
    StrongHolomorphyVerdict primitive;  // H together with its certificate
    Polynomial2 h;
    CurveOneForm omega;
    TorsionResult torsion;
    MembershipVerdict is_zero;
    MembershipVerdict corrected;

    /// Re-derives omega from H and re-checks both certificates.
    bool reverify(const Connection& conn, const Normalization& nz) const;
};

struct Classification {
    ClassificationStatus status = ClassificationStatus::NoStrongFrameUpToOrder;
    std::size_t order = 0;
    int degree_cap = 0;
    std::vector<MembershipVerdict> flatness;
    std::optional<CurveFrame> frame;
    /// Per frame column j: can dP_j + A*P_j vanish after correcting P_j by
    /// terms that are zero on every branch mod s^N?
    std::vector<MembershipVerdict> parallelism;
    std::optional<NonTameWitness> witness;
    std::string note;
};

/// Pipeline: flatness; continuous frame with S0 = identity; when every entry
/// of the frame is strongly holomorphic up to order and the polynomial frame
/// P is parallel in the module of forms of the curve (dP + A*P == 0 up to
/// the cap, modulo corrections invisible on the branches), StrongFrame.
/// Otherwise, for rank one, a primitive H of the branch pullbacks of A is
/// searched; when A - dH pulls back to zero but A - d(H + Q) is certified
/// nonzero for every invisible correction Q, NonTame. Everything else is
/// NoStrongFrameUpToOrder, including rank > 1 connections that reach the
/// witness search (the note says so).
Classification classify(const Connection& conn, const Normalization& nz, std::size_t order,
                        int degree_cap);

/// Searches a unit s = 1 + (terms of degree 1..min(N, K+1)), K = D + deg f,
/// with ds + s*A == 0 in the module of forms of the curve germ, compared
/// modulo m^(K+1). Infeasible certifies that nabla has no parallel unit at
/// the origin. Solution parts: "s", "h", "beta_dx", "beta_dy". Rank one
/// only; throws Error{RankNotSupported} otherwise.
MembershipVerdict parallel_section_at_origin(const Connection& conn, std::size_t order,
                                             int degree_cap);

namespace nontame {

/// d + alpha of rank one on curve().
Connection connection();

/// Primitive of the pullback of alpha along branch(order): G with G(0) = 0,
/// known mod t^order.
USeries primitive(std::size_t order);

}  // namespace nontame

}  // namespace rhc
