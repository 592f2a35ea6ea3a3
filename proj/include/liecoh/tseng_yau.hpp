#pragma once

#include <utility>
#include <vector>

#include "liecoh/symplectic.hpp"

namespace liecoh {

/// A Lie algebra with a validated symplectic form, the exact inverse bivector
/// pi = (omega_ij)^{-1}, and the volume form omega^n/n!. Construction runs a
/// sign-calibration probe: the identity d^Lambda = dLambda - Lambda d =
/// (-1)^{k+1} *s d *s must hold on every blade; if the global sign disagrees,
/// pi is flipped once and the choice recorded.
struct SymplecticPair {
    LieAlgebra algebra;
    Form omega;
    Matrix pi;
    Form volume;
    int half_dim;             // n with dim = 2n
    bool pi_sign_flipped = false;
    bool cross_check = true;  // re-verify the two d^Lambda routes on every call
};

inline Form lefschetz_L(const SymplecticPair& p, const Form& a) {
    if (a.ambient_dim() != p.algebra.dim()) throw AmbientMismatch();
    return wedge(a, p.omega);
}

/// Lambda(eta) = 1/2 sum_{i,j} pi^{ij} i_{X_i} i_{X_j} eta; grade -2.
inline Form lambda_op(const SymplecticPair& p, const Form& a) {
    if (a.ambient_dim() != p.algebra.dim()) throw AmbientMismatch();
    int n = p.algebra.dim();
    Form out(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            const Rational& pij = p.pi(i - 1, j - 1);
            if (pij == 0) continue;
            out += (pij / 2) * interior(i, interior(j, a));
        }
    return out;
}

namespace detail {

/// (omega^{-1})^k(alpha_S, alpha_T) = det of the k x k minor pi[S, T];
/// the full antisymmetrization of the Remark's coordinate formula.
inline Rational inverse_pairing(const Matrix& pi, Blade S, Blade T) {
    std::vector<int> rows = blade_indices(S), cols = blade_indices(T);
    int k = static_cast<int>(rows.size());
    Matrix minor(k, k);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) minor(a, b) = pi(rows[a] - 1, cols[b] - 1);
    return det(minor);
}

}  // namespace detail

/// Symplectic star: the unique (2n-k)-form with
/// gamma ^ *s(beta) = (omega^{-1})^k(gamma, beta) dvol for all grade-k gamma.
/// The wedge pairing is diagonal in the blade bases (alpha_S pairs only with
/// its complement), so the linear system solves blade by blade.
inline Form star_s(const SymplecticPair& p, const Form& a) {
    int dim = p.algebra.dim();
    if (a.ambient_dim() != dim) throw AmbientMismatch();
    Blade top = (Blade(1) << dim) - 1;
    Rational vol = p.volume.coefficient(top);
    Form out(dim);
    for (int k = 0; k <= dim; ++k) {
        Form part = a.grade(k);
        if (part.is_zero()) continue;
        BladeBasis basis(dim, k);
        for (Blade S : basis.blades) {
            Rational pairing = 0;
            for (const auto& [T, c] : part.terms()) pairing += detail::inverse_pairing(p.pi, S, T) * c;
            if (pairing == 0) continue;
            Blade comp = top ^ S;
            out.add_term(comp, Rational(wedge_sign(S, comp)) * vol * pairing);
        }
    }
    return out;
}

namespace detail {

inline Form d_lambda_unchecked(const SymplecticPair& p, const Form& a) {
    return ce_d(p.algebra, lambda_op(p, a)) - lambda_op(p, ce_d(p.algebra, a));
}

inline Form d_lambda_via_star(const SymplecticPair& p, const Form& a) {
    int dim = p.algebra.dim();
    Form out(dim);
    for (int k = 0; k <= dim; ++k) {
        Form part = a.grade(k);
        if (part.is_zero()) continue;
        Form s = star_s(p, ce_d(p.algebra, star_s(p, part)));
        out += (k % 2 == 0 ? Rational(-1) : Rational(1)) * s;  // (-1)^{k+1}
    }
    return out;
}

}  // namespace detail

/// d^Lambda = dLambda - Lambda d; lowers grade by one. When cross-checking is
/// enabled the (-1)^{k+1} *s d *s route is recomputed and compared.
inline Form d_lambda(const SymplecticPair& p, const Form& a) {
    Form primary = detail::d_lambda_unchecked(p, a);
    if (p.cross_check) {
        Form alt = detail::d_lambda_via_star(p, a);
        if (!(primary == alt)) throw CrossCheckMismatch("dLambda - Lambda d vs (-1)^{k+1} *s d *s");
    }
    return primary;
}

inline SymplecticPair build_pair(const LieAlgebra& g, const Form& omega, bool cross_check = true) {
    if (g.dim() % 2 != 0) throw OddDimension();
    if (!verify_symplectic(g, omega)) throw NotSymplectic(form_to_string(omega));
    SymplecticPair p{g, omega, inverse(form_matrix(omega)), Form(g.dim()), g.dim() / 2, false, cross_check};
    Rational factorial = 1;
    for (int i = 2; i <= p.half_dim; ++i) factorial *= i;
    p.volume = (Rational(1) / factorial) * wedge_power(omega, p.half_dim);

    auto probe = [&p]() {
        int dim = p.algebra.dim();
        for (int k = 0; k <= dim; ++k) {
            BladeBasis basis(dim, k);
            for (Blade b : basis.blades) {
                Form f = Form::blade_form(dim, b);
                if (!(detail::d_lambda_unchecked(p, f) == detail::d_lambda_via_star(p, f))) return false;
            }
        }
        return true;
    };
    if (!probe()) {
        for (int i = 0; i < p.pi.rows(); ++i)
            for (int j = 0; j < p.pi.cols(); ++j) p.pi(i, j) = -p.pi(i, j);
        p.pi_sign_flipped = true;
        if (!probe()) throw CalibrationFailure();
    }
    return p;
}

// ---------------------------------------------------------------------------
// The four Tseng-Yau cohomologies
// ---------------------------------------------------------------------------

struct TYReport {
    // dimension families, indexed by degree k = 0..2n
    std::vector<int> h_d, h_dlambda, h_plus, h_ddlambda, h_cap;
    bool duality_ok = false;
    // per-degree isomorphism flags for the three Hard Lefschetz criteria
    std::vector<int> lefschetz_rank;       // induced rank of L^{n-k}, k = 0..n
    std::vector<bool> lefschetz_iso;       // L^{n-k}: H^k_d -> H^{2n-k}_d, k = 0..n
    std::vector<bool> plus_to_d_iso;       // H^k_{d+dL} -> H^k_d
    std::vector<bool> cap_vs_plus_iso;     // H^k_{d cap dL} vs H^k_{d+dL}
    bool hl = false;
    bool pi_sign_flipped = false;
};

namespace detail {

struct TYSpaces {
    CochainComplex cx;
    std::vector<Matrix> dl;        // d^Lambda matrices, dl[k]: grade k -> k-1
    std::vector<Subspace> zd, bd;  // ker d, im d
    std::vector<Subspace> zl, bl;  // ker d^Lambda, im d^Lambda
    std::vector<Subspace> omega0;  // ker dd^Lambda
    std::vector<Subspace> bdd;     // im dd^Lambda
    std::vector<Subspace> joint;   // ker d cap ker d^Lambda
    std::vector<Subspace> den_a;   // im d + im d^Lambda
    std::vector<Subspace> den_cap; // (im d cap ker dL) + (im dL cap ker d)
};

inline Matrix operator_matrix(const SymplecticPair& p, int dom_grade, int cod_grade,
                              Form (*op)(const SymplecticPair&, const Form&)) {
    int dim = p.algebra.dim();
    BladeBasis dom(dim, dom_grade);
    int cod_size = (cod_grade < 0 || cod_grade > dim) ? 0 : BladeBasis(dim, cod_grade).size();
    Matrix m(cod_size, dom.size());
    for (int j = 0; j < dom.size(); ++j) {
        Form img = op(p, Form::blade_form(dim, dom.blades[j]));
        if (cod_size == 0) continue;
        Vector coords = grade_coordinates(img, cod_grade);
        for (int i = 0; i < cod_size; ++i) m(i, j) = coords[i];
    }
    return m;
}

inline TYSpaces ty_spaces(const SymplecticPair& p) {
    int dim = p.algebra.dim();
    TYSpaces s{build_complex(p.algebra), {}, {}, {}, {}, {}, {}, {}, {}, {}, {}};
    for (int k = 0; k <= dim; ++k)
        s.dl.push_back(operator_matrix(p, k, k - 1, [](const SymplecticPair& pp, const Form& f) {
            return d_lambda_unchecked(pp, f);
        }));
    // Spanning cross-check of the two d^Lambda routes, once per pair.
    for (int k = 0; k <= dim; ++k) {
        Matrix via_star = operator_matrix(p, k, k - 1, [](const SymplecticPair& pp, const Form& f) {
            return d_lambda_via_star(pp, f);
        });
        if (!(via_star == s.dl[k])) throw CrossCheckMismatch("d^Lambda routes disagree at grade " + std::to_string(k));
    }
    for (int k = 0; k <= dim; ++k) {
        int ck = BladeBasis(dim, k).size();
        s.zd.push_back(kernel(s.cx.d[k]));
        s.bd.push_back(k == 0 ? Subspace::zero(ck) : image(s.cx.d[k - 1]));
        s.zl.push_back(kernel(s.dl[k]));
        s.bl.push_back(k == dim ? Subspace::zero(ck) : image(s.dl[k + 1]));
        Matrix ddl = k == 0 ? Matrix(ck, ck) : s.cx.d[k - 1] * s.dl[k];
        s.omega0.push_back(kernel(ddl));
        s.bdd.push_back(image(ddl));
    }
    for (int k = 0; k <= dim; ++k) {
        s.joint.push_back(intersect(s.zd[k], s.zl[k]));
        s.den_a.push_back(sum(s.bd[k], s.bl[k]));
        s.den_cap.push_back(sum(intersect(s.bd[k], s.zl[k]), intersect(s.bl[k], s.zd[k])));
        // Well-definedness of the quotients.
        if (!s.joint[k].contains(s.bdd[k]))
            throw WellDefinednessFailure("im dd^L is not inside ker d cap ker d^L at degree " + std::to_string(k));
        if (!s.omega0[k].contains(s.den_a[k]))
            throw WellDefinednessFailure("im d + im d^L escapes ker dd^L at degree " + std::to_string(k));
        if (!s.joint[k].contains(s.den_cap[k]))
            throw WellDefinednessFailure("d-cap-d^L denominator escapes its numerator at degree " + std::to_string(k));
        if (!s.den_cap[k].contains(s.bdd[k]))
            throw WellDefinednessFailure("im dd^L escapes the d-cap-d^L denominator at degree " + std::to_string(k));
    }
    return s;
}

}  // namespace detail

/// Dimensions of H_d, H_{d^L}, H_{d+d^L}, H_{dd^L} and H_{d cap d^L} in every
/// degree, computed by exact subspace arithmetic.
inline TYReport ty_dimensions(const SymplecticPair& p) {
    detail::TYSpaces s = detail::ty_spaces(p);
    int dim = p.algebra.dim();
    TYReport r;
    r.pi_sign_flipped = p.pi_sign_flipped;
    for (int k = 0; k <= dim; ++k) {
        r.h_d.push_back(s.zd[k].dim() - s.bd[k].dim());
        r.h_dlambda.push_back(s.zl[k].dim() - s.bl[k].dim());
        r.h_plus.push_back(s.joint[k].dim() - s.bdd[k].dim());
        r.h_ddlambda.push_back(s.omega0[k].dim() - s.den_a[k].dim());
        r.h_cap.push_back(s.joint[k].dim() - s.den_cap[k].dim());
    }
    r.duality_ok = true;
    for (int k = 0; k <= dim; ++k) {
        if (r.h_d[k] != r.h_dlambda[dim - k]) r.duality_ok = false;
        if (r.h_plus[k] != r.h_ddlambda[dim - k]) r.duality_ok = false;
    }
    return r;
}

/// Proposition-hodge dualities: *s gives H^k_d ~ H^{2n-k}_{d^L} and
/// H^k_{d+d^L} ~ H^{2n-k}_{dd^L}.
inline bool duality_check(const SymplecticPair& p) { return ty_dimensions(p).duality_ok; }

/// Hard Lefschetz, decided three provably equivalent ways which are all
/// required to agree:
///   1. L^{n-k}: H^k_d -> H^{2n-k}_d is an isomorphism for all k <= n;
///   2. the canonical map H^k_{d+d^L} -> H^k_d is an isomorphism for all k;
///   3. the canonical comparison of H^k_{d cap d^L} with H^k_{d+d^L} is an
///      isomorphism for all k (identity on representatives).
inline std::pair<bool, TYReport> hard_lefschetz(const SymplecticPair& p) {
    detail::TYSpaces s = detail::ty_spaces(p);
    int dim = p.algebra.dim();
    int n = p.half_dim;
    TYReport r = ty_dimensions(p);

    bool v1 = true, v2 = true, v3 = true;
    for (int k = 0; k <= n; ++k) {
        Form w_power = wedge_power(p.omega, n - k);
        BladeBasis dom(dim, k);
        BladeBasis cod(dim, 2 * n - k);
        Matrix lef(cod.size(), dom.size());
        for (int j = 0; j < dom.size(); ++j) {
            Vector coords = grade_coordinates(wedge(Form::blade_form(dim, dom.blades[j]), w_power), 2 * n - k);
            for (int i = 0; i < cod.size(); ++i) lef(i, j) = coords[i];
        }
        QuotientMapRank q = quotient_map_rank(lef, s.zd[k], s.bd[k], s.zd[2 * n - k], s.bd[2 * n - k]);
        r.lefschetz_rank.push_back(q.rank);
        r.lefschetz_iso.push_back(q.is_iso);
        v1 = v1 && q.is_iso;
    }
    for (int k = 0; k <= dim; ++k) {
        Matrix id = Matrix::identity(BladeBasis(dim, k).size());
        QuotientMapRank q2 = quotient_map_rank(id, s.joint[k], s.bdd[k], s.zd[k], s.bd[k]);
        r.plus_to_d_iso.push_back(q2.is_iso);
        v2 = v2 && q2.is_iso;
        QuotientMapRank q3 = quotient_map_rank(id, s.joint[k], s.bdd[k], s.joint[k], s.den_cap[k]);
        r.cap_vs_plus_iso.push_back(q3.is_iso);
        v3 = v3 && q3.is_iso;
    }
    if (v1 != v2 || v2 != v3)
        throw CriteriaDisagreement("direct=" + std::to_string(v1) + " canonical=" + std::to_string(v2) +
                                   " cap=" + std::to_string(v3));
    r.hl = v1;
    return {v1, r};
}

}  // namespace liecoh
