#pragma once

// Lorentz transformations as CQ multiplication.
//
//   contravariant (events, D):       q  -> w q conj(w)*          (overbar, then *)
//   covariant     (q̄, D̄):           q̄  -> w* q̄ conj(w)
//   field strength F = -F̄:           F  -> w* F conj(w)*
//
// Convention, fixed once: a boost rotor cosh(L/2) + @n sinh(L/2) maps
// t' = t cosh L - (n.x) sinh L and x_par' = x_par cosh L - t n sinh L, i.e. the
// passive transformation to a frame moving with velocity v = tanh L along n.
// A rotation rotor cos(th/2) + n sin(th/2) rotates events actively by th
// about n (right-hand rule).

#include <array>

#include "cqrel/algebra.hpp"
#include "cqrel/minkowski.hpp"

namespace cqrel {

/// Unit spatial direction; normalizes on construction and rejects zero or
/// non-finite input.
class UnitDirection {
  public:
    UnitDirection(double nx, double ny, double nz);

    double x() const { return n_[0]; }
    double y() const { return n_[1]; }
    double z() const { return n_[2]; }

    /// n = i nx + j ny + k nz.
    CQNumber as_cq() const { return {0, 0, n_[0], n_[1], n_[2], 0, 0, 0}; }

  private:
    std::array<double, 3> n_;
};

/// Unit CQ number w with w w̄ = 1.
class Rotor {
  public:
    /// The identity rotor 1.
    constexpr Rotor() : value_(CQNumber::scalar(1.0)) {}

    /// Wraps an arbitrary CQ value after checking w w̄ = 1 to within tol.
    /// Throws NotARotor otherwise.
    static Rotor from_value(const CQNumber& value, double tol = 1e-10);

    /// Wraps without checking. For values known to be unit by construction.
    static Rotor unchecked(const CQNumber& value) { return Rotor(value); }

    const CQNumber& value() const { return value_; }

    /// w w̄; equals 1 for an exact rotor. In span{1, @} up to rounding.
    CQNumber norm() const;

    /// Largest deviation of w w̄ from 1.
    double norm_defect() const;

    /// Divides by the complex square root of w w̄. Never applied implicitly.
    Rotor renormalized() const;

    Rotor operator-() const { return Rotor(-value_); }

  private:
    constexpr explicit Rotor(const CQNumber& v) : value_(v) {}
    CQNumber value_;
};

/// Row-major 4x4 matrix acting on the column (t, x, y, z).
struct LorentzMatrix {
    std::array<std::array<double, 4>, 4> m{};

    static LorentzMatrix identity();

    double operator()(std::size_t row, std::size_t col) const { return m[row][col]; }
    double& operator()(std::size_t row, std::size_t col) { return m[row][col]; }

    Event apply(const Event& e) const;
    LorentzMatrix operator*(const LorentzMatrix& rhs) const;

    /// max |M^T g M - g| for g = diag(1, -1, -1, -1).
    double metric_defect() const;
};

double max_abs_difference(const LorentzMatrix& a, const LorentzMatrix& b);

/// cos(theta/2) + n sin(theta/2).
Rotor rotor_rotation(const UnitDirection& n, double theta);

/// cosh(rapidity/2) + @ n sinh(rapidity/2).
Rotor rotor_boost(const UnitDirection& n, double rapidity);

/// w q w̄*.
CQNumber apply_contravariant(const Rotor& w, const CQNumber& q);
Event apply_contravariant(const Rotor& w, const Event& e);

/// w* q̄ w̄.
CQNumber apply_covariant(const Rotor& w, const CQNumber& qbar);

/// w* F w̄*.
CQNumber apply_field_strength(const Rotor& w, const CQNumber& f);

/// The rotor of "apply w1, then w2": w2 w1.
Rotor compose(const Rotor& w2, const Rotor& w1);

/// Column m is the image of the m-th basis event.
LorentzMatrix to_matrix(const Rotor& w);

}  // namespace cqrel
