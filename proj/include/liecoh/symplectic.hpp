#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "liecoh/cochain.hpp"

namespace liecoh {

/// ker(d: Lambda^2 -> Lambda^3) with a canonical (RREF) basis. Every closed
/// 2-form is a unique combination of `basis`.
struct ClosedTwoFormSpace {
    LieAlgebra algebra;
    Subspace coordinates;      // canonical, in lex Lambda^2 coordinates
    std::vector<Form> basis;   // same rows as forms
};

inline ClosedTwoFormSpace closed_two_forms(const LieAlgebra& g) {
    CochainComplex cx = build_complex(g);
    Subspace z = kernel(cx.d[2]);
    ClosedTwoFormSpace out{g, z, {}};
    for (int i = 0; i < z.dim(); ++i) out.basis.push_back(form_from_coordinates(g.dim(), 2, z.basis_row(i)));
    return out;
}

/// Homogeneous degree-(n/2) polynomial P(t) = volume coefficient of
/// (sum_a t_a beta_a)^{n/2}, stored sparsely by sorted variable multi-index.
/// Cubic in the 6-dimensional working case. After partial substitution the
/// monomials may have fewer variables.
struct CubicVolumePolynomial {
    int nvars = 0;
    std::map<std::vector<int>, Rational> monomials;  // sorted var index lists, size <= n/2

    bool is_identically_zero() const { return monomials.empty(); }

    /// Fixes t_var = value; returns the polynomial in the remaining variables.
    CubicVolumePolynomial substituted(int var, const Rational& value) const {
        CubicVolumePolynomial out;
        out.nvars = nvars;
        for (const auto& [vars, coef] : monomials) {
            Rational c = coef;
            std::vector<int> rest;
            for (int v : vars) {
                if (v == var) c *= value;
                else rest.push_back(v);
            }
            if (c == 0) continue;
            auto [it, fresh] = out.monomials.emplace(rest, c);
            if (!fresh) {
                it->second += c;
                if (it->second == 0) out.monomials.erase(it);
            }
        }
        return out;
    }

    Rational evaluate(const std::vector<Rational>& point) const {
        Rational total = 0;
        for (const auto& [vars, coef] : monomials) {
            Rational c = coef;
            for (int v : vars) c *= point[v];
            total += c;
        }
        return total;
    }
};

namespace detail {

inline void top_power_monomials(const std::vector<Form>& basis, int degree, int next, std::vector<int>& chosen,
                                const Form& partial, Blade top, CubicVolumePolynomial& out) {
    if (static_cast<int>(chosen.size()) == degree) {
        Rational coef = partial.coefficient(top);
        if (coef == 0) return;
        // multinomial multiplicity: degree! / prod(run length!)
        Rational mult = 1;
        for (int i = 2; i <= degree; ++i) mult *= i;
        for (std::size_t i = 0; i < chosen.size();) {
            std::size_t j = i;
            while (j < chosen.size() && chosen[j] == chosen[i]) ++j;
            for (std::size_t r = 2; r <= j - i; ++r) mult /= static_cast<int>(r);
            i = j;
        }
        out.monomials[chosen] = mult * coef;
        return;
    }
    for (int a = next; a < static_cast<int>(basis.size()); ++a) {
        Form grown = wedge(partial, basis[a]);
        if (grown.is_zero()) continue;
        chosen.push_back(a);
        top_power_monomials(basis, degree, a, chosen, grown, top, out);
        chosen.pop_back();
    }
}

}  // namespace detail

/// Coefficient of the volume blade in (sum t_a beta_a)^{n/2}, assembled from
/// wedge products of basis tuples with multinomial multiplicities (2-forms
/// commute, so sorted tuples suffice).
inline CubicVolumePolynomial cubic_top_polynomial(const ClosedTwoFormSpace& space) {
    const LieAlgebra& g = space.algebra;
    if (g.dim() % 2 != 0) throw OddDimension();
    Blade top = (Blade(1) << g.dim()) - 1;
    CubicVolumePolynomial p;
    p.nvars = static_cast<int>(space.basis.size());
    std::vector<int> chosen;
    detail::top_power_monomials(space.basis, g.dim() / 2, 0, chosen, Form::scalar(g.dim(), 1), top, p);
    return p;
}

/// Over an infinite field, a symplectic form exists iff the cubic is not the
/// zero polynomial.
inline bool has_symplectic(const LieAlgebra& g) {
    return !cubic_top_polynomial(closed_two_forms(g)).is_identically_zero();
}

struct SymplecticWitness {
    Form omega;
    Matrix matrix;             // omega(X_i, X_j), antisymmetric
    Rational top_coefficient;  // volume-blade coefficient of omega^{n/2}, nonzero
};

/// omega(X_i, X_j) as an n x n antisymmetric matrix.
inline Matrix form_matrix(const Form& omega) {
    int n = omega.ambient_dim();
    Matrix m(n, n);
    for (const auto& [b, c] : omega.terms()) {
        std::vector<int> ij = blade_indices(b);
        m(ij[0] - 1, ij[1] - 1) = c;
        m(ij[1] - 1, ij[0] - 1) = -c;
    }
    return m;
}

inline Form wedge_power(const Form& f, int k) {
    Form acc = Form::scalar(f.ambient_dim(), 1);
    for (int i = 0; i < k; ++i) acc = wedge(acc, f);
    return acc;
}

/// Deterministic witness: fix t_1, t_2, ... in turn from {0,1,-1,2,-2,3,-3},
/// keeping the partially evaluated cubic nonzero. Degree <= 3 per variable
/// guarantees at most three bad values, so the ladder always succeeds.
inline std::optional<SymplecticWitness> symplectic_witness(const LieAlgebra& g) {
    if (g.dim() % 2 != 0) throw OddDimension();
    ClosedTwoFormSpace space = closed_two_forms(g);
    CubicVolumePolynomial p = cubic_top_polynomial(space);
    if (p.is_identically_zero()) return std::nullopt;

    static const std::array<int, 7> ladder = {0, 1, -1, 2, -2, 3, -3};
    std::vector<Rational> point(space.basis.size());
    CubicVolumePolynomial current = p;
    for (int var = 0; var < static_cast<int>(space.basis.size()); ++var) {
        bool fixed = false;
        for (int v : ladder) {
            CubicVolumePolynomial next = current.substituted(var, v);
            if (!next.is_identically_zero()) {
                point[var] = v;
                current = std::move(next);
                fixed = true;
                break;
            }
        }
        if (!fixed) throw InternalVerificationFailure("witness ladder exhausted on a nonzero cubic");
    }

    Form omega(g.dim());
    for (std::size_t a = 0; a < point.size(); ++a)
        if (point[a] != 0) omega += point[a] * space.basis[a];
    SymplecticWitness w{omega, form_matrix(omega), p.evaluate(point)};
    Blade top = (Blade(1) << g.dim()) - 1;
    if (wedge_power(omega, g.dim() / 2).coefficient(top) != w.top_coefficient)
        throw InternalVerificationFailure("cubic evaluation disagrees with direct wedge power");
    return w;
}

/// d(omega) = 0 and omega^{n/2} != 0, with the determinant route
/// (omega^n != 0 <=> det(omega_ij) != 0) cross-checked.
inline bool verify_symplectic(const LieAlgebra& g, const Form& omega) {
    if (!omega.is_homogeneous(2)) throw WrongGrade("symplectic candidate must be a 2-form");
    if (omega.ambient_dim() != g.dim()) throw AmbientMismatch();
    if (g.dim() % 2 != 0) return false;
    if (!ce_d(g, omega).is_zero()) return false;
    Blade top = (Blade(1) << g.dim()) - 1;
    bool top_nonzero = wedge_power(omega, g.dim() / 2).coefficient(top) != 0;
    bool det_nonzero = det(form_matrix(omega)) != 0;
    if (top_nonzero != det_nonzero)
        throw InternalVerificationFailure("wedge-power and determinant nondegeneracy tests disagree");
    return top_nonzero;
}

}  // namespace liecoh
