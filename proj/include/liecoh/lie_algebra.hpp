#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "liecoh/form.hpp"
#include "liecoh/subspace.hpp"

namespace liecoh {

/// Finite-dimensional Lie algebra given by Maurer-Cartan data: the degree-1
/// differentials d(alpha_k) as 2-forms. Structure constants follow the
/// convention d(alpha_k) = sum_{i<j} c^k_{ij} alpha_ij with
/// [X_i, X_j] = -sum_k c^k_{ij} X_k, so that a Table-2 row is literally the
/// input and d^2 = 0 is the Jacobi identity.
class LieAlgebra {
public:
    LieAlgebra(int dim, std::vector<Form> dual_differentials, bool defer_jacobi = false)
        : dim_(dim), d_alpha_(std::move(dual_differentials)) {
        if (dim_ < 2 || dim_ > 9) throw DimensionOutOfRange(dim_);
        if (static_cast<int>(d_alpha_.size()) != dim_) throw Error("expected one differential per generator");
        for (const Form& f : d_alpha_) {
            if (f.ambient_dim() != dim_) throw AmbientMismatch();
            if (!f.is_homogeneous(2)) throw WrongGrade("dual differentials must be 2-forms");
        }
        if (!defer_jacobi) check_jacobi();
    }

    int dim() const { return dim_; }
    const Form& d_alpha(int k) const { return d_alpha_[k - 1]; }  // 1-based
    const std::vector<Form>& dual_differentials() const { return d_alpha_; }

    /// c^k_{ij}, antisymmetric in (i,j).
    Rational c(int k, int i, int j) const {
        if (i == j) return 0;
        if (i < j) return d_alpha_[k - 1].coefficient(blade_of({i, j}));
        return -d_alpha_[k - 1].coefficient(blade_of({j, i}));
    }

    /// [X_i, X_j] in basis coordinates.
    Vector bracket(int i, int j) const {
        Vector v(dim_, Rational(0));
        for (int k = 1; k <= dim_; ++k) v[k - 1] = -c(k, i, j);
        return v;
    }

    Vector bracket(const Vector& x, const Vector& y) const {
        Vector v(dim_, Rational(0));
        for (int i = 1; i <= dim_; ++i) {
            if (x[i - 1] == 0) continue;
            for (int j = 1; j <= dim_; ++j) {
                if (y[j - 1] == 0) continue;
                Rational f = x[i - 1] * y[j - 1];
                for (int k = 1; k <= dim_; ++k) {
                    Rational ck = c(k, i, j);
                    if (ck != 0) v[k - 1] -= f * ck;
                }
            }
        }
        return v;
    }

    /// Matrix of ad_{X_i}: column j holds [X_i, X_j].
    Matrix ad(int i) const {
        Matrix m(dim_, dim_);
        for (int j = 1; j <= dim_; ++j) {
            Vector b = bracket(i, j);
            for (int k = 0; k < dim_; ++k) m(k, j - 1) = b[k];
        }
        return m;
    }

    Matrix ad(const Vector& x) const {
        Matrix m(dim_, dim_);
        for (int i = 1; i <= dim_; ++i) {
            if (x[i - 1] == 0) continue;
            Matrix a = ad(i);
            for (int r = 0; r < dim_; ++r)
                for (int s = 0; s < dim_; ++s) m(r, s) += x[i - 1] * a(r, s);
        }
        return m;
    }

    void check_jacobi() const;  // throws JacobiViolation

private:
    int dim_;
    std::vector<Form> d_alpha_;
};

/// Chevalley-Eilenberg differential: the unique degree +1 antiderivation
/// extending alpha_k -> d(alpha_k) and vanishing on scalars.
inline Form ce_d(const LieAlgebra& g, const Form& a) {
    if (a.ambient_dim() != g.dim()) throw AmbientMismatch();
    Form out(g.dim());
    for (const auto& [blade, coef] : a.terms()) {
        std::vector<int> idx = blade_indices(blade);
        for (std::size_t p = 0; p < idx.size(); ++p) {
            Blade prefix = 0, suffix = 0;
            for (std::size_t q = 0; q < p; ++q) prefix |= Blade(1) << (idx[q] - 1);
            for (std::size_t q = p + 1; q < idx.size(); ++q) suffix |= Blade(1) << (idx[q] - 1);
            Form term = wedge(Form::blade_form(g.dim(), prefix), wedge(g.d_alpha(idx[p]), Form::blade_form(g.dim(), suffix)));
            out += (p % 2 ? Rational(-coef) : coef) * term;
        }
    }
    return out;
}

inline void LieAlgebra::check_jacobi() const {
    for (int k = 1; k <= dim_; ++k)
        if (!ce_d(*this, d_alpha_[k - 1]).is_zero()) throw JacobiViolation(k);
}

// ---------------------------------------------------------------------------
// Maurer-Cartan text grammar
//
//   algebra     := '[' entry (',' entry)* ']'     n entries, 2 <= n <= 9
//   entry       := '0' | signed_term+
//   signed_term := ('+'|'-')? term
//   term        := (coeff '*')? pair
//   coeff       := int | int '/' posint | exact_decimal
//   pair        := digit digit, first < second, digits in 1..n
//
// Whitespace is ignored. Entry k defines d(alpha_k).
// ---------------------------------------------------------------------------

namespace detail {

struct ParsedTerm {
    Rational coeff;
    int i, j;
    std::size_t pos;
};

struct ParsedEntry {
    std::vector<ParsedTerm> terms;  // empty means literal "0"
};

inline void skip_ws(std::string_view s, std::size_t& i) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\n' || s[i] == '\r')) ++i;
}

inline ParsedEntry parse_entry(std::string_view s, std::size_t& i) {
    ParsedEntry entry;
    skip_ws(s, i);
    if (i >= s.size()) throw ParseError(i, "unexpected end of input in entry");
    // A lone zero is an empty differential; "0" may not be combined with terms.
    if (s[i] == '0' && !(i + 1 < s.size() && (is_digit(s[i + 1]) || s[i + 1] == '.' || s[i + 1] == '/'))) {
        ++i;
        skip_ws(s, i);
        return entry;
    }
    bool first = true;
    while (true) {
        skip_ws(s, i);
        if (i >= s.size()) {
            if (first) throw ParseError(i, "empty entry");
            break;
        }
        if (s[i] == ',' || s[i] == ']') break;
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
            skip_ws(s, i);
        } else if (!first) {
            throw ParseError(i, "expected '+' or '-' between terms");
        }
        std::size_t term_pos = i;
        if (i >= s.size() || !is_digit(s[i])) throw ParseError(i, "expected a term");
        // Scan the number; decide afterwards whether it is a bare pair or a
        // coefficient followed by '*'.
        std::size_t start = i;
        while (i < s.size() && is_digit(s[i])) ++i;
        Rational coeff = 1;
        std::size_t pair_pos;
        std::string pair;
        if (i < s.size() && (s[i] == '/' || s[i] == '.' || s[i] == '*')) {
            i = start;
            coeff = parse_rational(s, i);
            skip_ws(s, i);
            if (i >= s.size() || s[i] != '*') throw ParseError(i, "expected '*' between coefficient and pair");
            ++i;
            skip_ws(s, i);
            pair_pos = i;
            while (i < s.size() && is_digit(s[i])) pair += s[i++];
        } else {
            pair_pos = start;
            pair = std::string(s.substr(start, i - start));
        }
        if (pair.size() != 2) throw ParseError(pair_pos, "expected a two-digit pair, got '" + pair + "'");
        int a = pair[0] - '0', b = pair[1] - '0';
        if (a == 0 || b == 0) throw ParseError(pair_pos, "blade indices start at 1");
        if (a >= b) throw NonAscendingPair(pair_pos, pair);
        entry.terms.push_back({sign < 0 ? Rational(-coeff) : coeff, a, b, term_pos});
        first = false;
        skip_ws(s, i);
    }
    return entry;
}

}  // namespace detail

/// Parses the bracketed Maurer-Cartan notation, e.g.
/// "[-23+1/2*16,-1/2*26,36,-46,0,0]". Entry k becomes d(alpha_k).
inline LieAlgebra parse_algebra(std::string_view text, bool defer_jacobi = false) {
    std::size_t i = 0;
    detail::skip_ws(text, i);
    if (i >= text.size() || text[i] != '[') throw ParseError(i, "expected '['");
    ++i;
    std::vector<detail::ParsedEntry> entries;
    while (true) {
        entries.push_back(detail::parse_entry(text, i));
        if (i >= text.size()) throw ParseError(i, "unterminated algebra literal");
        if (text[i] == ',') {
            ++i;
            continue;
        }
        if (text[i] == ']') {
            ++i;
            break;
        }
        throw ParseError(i, "expected ',' or ']'");
    }
    detail::skip_ws(text, i);
    if (i != text.size()) throw ParseError(i, "unexpected trailing characters");

    int n = static_cast<int>(entries.size());
    if (n < 2 || n > 9) throw DimensionOutOfRange(n);
    std::vector<Form> diffs;
    for (const auto& entry : entries) {
        Form f(n);
        for (const auto& t : entry.terms) {
            if (t.j > n) throw ParseError(t.pos, "blade index exceeds dimension " + std::to_string(n));
            f.add_term(blade_of({t.i, t.j}), t.coeff);
        }
        diffs.push_back(std::move(f));
    }
    return LieAlgebra(n, std::move(diffs), defer_jacobi);
}

/// Canonical rendering: entries in order, terms in lex blade order, unit
/// coefficients elided. parse . print is the identity on LieAlgebra values.
inline std::string to_text(const LieAlgebra& g) {
    std::string s = "[";
    for (int k = 1; k <= g.dim(); ++k) {
        if (k > 1) s += ",";
        s += form_to_string(g.d_alpha(k));
    }
    return s + "]";
}

// ---------------------------------------------------------------------------
// Structural predicates
// ---------------------------------------------------------------------------

/// tr(ad_X) = 0 for every X; checking the basis suffices by linearity.
inline bool is_unimodular(const LieAlgebra& g) {
    for (int i = 1; i <= g.dim(); ++i) {
        Matrix a = g.ad(i);
        Rational tr = 0;
        for (int k = 0; k < g.dim(); ++k) tr += a(k, k);
        if (tr != 0) return false;
    }
    return true;
}

/// Span of all pairwise brackets of basis rows of a and b.
inline Subspace bracket_span(const LieAlgebra& g, const Subspace& a, const Subspace& b) {
    std::vector<Vector> rows;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < b.dim(); ++j) rows.push_back(g.bracket(a.basis_row(i), b.basis_row(j)));
    return Subspace::span_of(rows, g.dim());
}

struct SeriesReport {
    std::vector<Subspace> terms;   // strictly decreasing until stabilization
    std::optional<int> step;       // least k with terms[k] = 0; empty if it stalls
};

/// Derived series g^(0) = g, g^(i+1) = [g^(i), g^(i)].
inline SeriesReport derived_series_report(const LieAlgebra& g) {
    SeriesReport r;
    r.terms.push_back(Subspace::full(g.dim()));
    while (true) {
        const Subspace& last = r.terms.back();
        if (last.dim() == 0) {
            r.step = static_cast<int>(r.terms.size()) - 1;
            return r;
        }
        Subspace next = bracket_span(g, last, last);
        if (next == last) return r;  // stabilized above zero
        r.terms.push_back(std::move(next));
    }
}

inline SeriesReport derived_series(const LieAlgebra& g) {
    SeriesReport r = derived_series_report(g);
    if (!r.step) throw NotSolvable();
    return r;
}

inline bool is_solvable(const LieAlgebra& g) { return derived_series_report(g).step.has_value(); }

inline int solvable_step(const LieAlgebra& g) { return *derived_series(g).step; }

/// Lower central series g_1 = g, g_{i+1} = [g, g_i].
inline SeriesReport lower_central_series(const LieAlgebra& g) {
    SeriesReport r;
    r.terms.push_back(Subspace::full(g.dim()));
    Subspace whole = Subspace::full(g.dim());
    while (true) {
        const Subspace& last = r.terms.back();
        if (last.dim() == 0) {
            r.step = static_cast<int>(r.terms.size()) - 1;
            return r;
        }
        Subspace next = bracket_span(g, whole, last);
        if (next == last) return r;
        r.terms.push_back(std::move(next));
    }
}

inline bool is_nilpotent(const LieAlgebra& g) { return lower_central_series(g).step.has_value(); }

namespace detail {

inline Vector flatten(const Matrix& m) {
    Vector v;
    v.reserve(static_cast<std::size_t>(m.rows()) * m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
    return v;
}

inline Matrix unflatten(const Vector& v, int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = v[static_cast<std::size_t>(i) * n + j];
    return m;
}

inline bool is_nilpotent_matrix(Matrix m) {
    int n = m.rows();
    Matrix p = m;
    for (int k = 1; k < n; ++k) p = p * m;  // p = m^n
    return p.is_zero();
}

/// True when the subalgebra spanned by `v` is nilpotent (lower central series
/// of the subalgebra, not of g, reaches zero).
inline bool subalgebra_is_nilpotent(const LieAlgebra& g, const Subspace& v) {
    Subspace term = v;
    while (term.dim() > 0) {
        Subspace next = bracket_span(g, v, term);
        if (next == term) return false;
        term = std::move(next);
    }
    return true;
}

}  // namespace detail

/// Nilradical of a solvable Lie algebra via the associative-radical method:
/// close {ad_X} under matrix products, take the trace-form radical R of that
/// associative algebra (valid in characteristic zero), and pull back
/// N = {x : ad_x in R}. Post-verified: N is a nilpotent ideal and no
/// complement basis vector is ad-nilpotent.
inline Subspace nilradical(const LieAlgebra& g) {
    if (!is_solvable(g)) throw NotSolvable();
    int n = g.dim();
    int nn = n * n;

    // Associative closure of the adjoint matrices.
    Subspace span = Subspace::zero(nn);
    for (int i = 1; i <= n; ++i)
        span = sum(span, Subspace::span_of({detail::flatten(g.ad(i))}, nn));
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Matrix> basis_mats;
        for (int i = 0; i < span.dim(); ++i) basis_mats.push_back(detail::unflatten(span.basis_row(i), n));
        for (const Matrix& a : basis_mats) {
            for (const Matrix& b : basis_mats) {
                Vector prod = detail::flatten(a * b);
                if (!span.contains(prod)) {
                    span = sum(span, Subspace::span_of({prod}, nn));
                    grew = true;
                }
            }
            if (grew) break;  // re-derive the basis after growth
        }
    }

    // Trace-form radical R = {a in A : tr(a b) = 0 for all b in A}.
    int m = span.dim();
    Subspace radical = Subspace::zero(nn);
    if (m > 0) {
        std::vector<Matrix> basis_mats;
        for (int i = 0; i < m; ++i) basis_mats.push_back(detail::unflatten(span.basis_row(i), n));
        Matrix gram(m, m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                Matrix p = basis_mats[i] * basis_mats[j];
                Rational tr = 0;
                for (int k = 0; k < n; ++k) tr += p(k, k);
                gram(i, j) = tr;
            }
        Subspace gram_kernel = kernel(gram);
        std::vector<Vector> rad_rows;
        for (int r = 0; r < gram_kernel.dim(); ++r) {
            Vector coeffs = gram_kernel.basis_row(r);
            Vector flat(nn, Rational(0));
            for (int i = 0; i < m; ++i)
                if (coeffs[i] != 0)
                    for (int t = 0; t < nn; ++t) flat[t] += coeffs[i] * span.basis_row(i)[t];
            rad_rows.push_back(std::move(flat));
        }
        radical = Subspace::span_of(rad_rows, nn);
    }

    // N = {x : ad_x in R}: kernel of x -> ad_x composed with quotient mod R.
    Matrix ad_map(nn, n);
    for (int i = 1; i <= n; ++i) {
        Vector flat = detail::flatten(g.ad(i));
        for (int t = 0; t < nn; ++t) ad_map(t, i - 1) = flat[t];
    }
    // Solve ad_map * x = radical-combination: kernel of [ad_map | -B_R^T].
    Matrix sys(nn, n + radical.dim());
    for (int t = 0; t < nn; ++t) {
        for (int j = 0; j < n; ++j) sys(t, j) = ad_map(t, j);
        for (int r = 0; r < radical.dim(); ++r) sys(t, n + r) = -radical.basis()(r, t);
    }
    Subspace pairs = kernel(sys);
    std::vector<Vector> n_rows;
    for (int r = 0; r < pairs.dim(); ++r) {
        Vector p = pairs.basis_row(r);
        n_rows.push_back(Vector(p.begin(), p.begin() + n));
    }
    Subspace nilrad = Subspace::span_of(n_rows, n);

    // Post-verification.
    Subspace ideal_test = bracket_span(g, Subspace::full(n), nilrad);
    if (!nilrad.contains(ideal_test)) throw InternalVerificationFailure("nilradical is not an ideal");
    if (!detail::subalgebra_is_nilpotent(g, nilrad))
        throw InternalVerificationFailure("nilradical is not nilpotent");
    // Complement = standard basis vectors at non-pivot columns of the basis.
    std::vector<bool> pivot(n, false);
    for (int i = 0; i < nilrad.dim(); ++i)
        for (int j = 0; j < n; ++j)
            if (nilrad.basis()(i, j) != 0) { pivot[j] = true; break; }
    for (int j = 0; j < n; ++j) {
        if (pivot[j]) continue;
        if (detail::is_nilpotent_matrix(g.ad(j + 1)))
            throw InternalVerificationFailure("complement vector X_" + std::to_string(j + 1) + " is ad-nilpotent");
    }
    return nilrad;
}

/// Codimension-1 abelian nilradical. Requires solvable, non-nilpotent input.
inline bool is_almost_abelian(const LieAlgebra& g) {
    if (!is_solvable(g)) throw NotSolvable();
    if (is_nilpotent(g)) throw NilpotentInput();
    Subspace n = nilradical(g);
    if (n.dim() != g.dim() - 1) return false;
    return bracket_span(g, n, n).dim() == 0;
}

/// dim P_g = dim ker(Lambda^2 g -> g) = C(n,2) - dim [g,g].
inline int bracket_kernel_dim(const LieAlgebra& g) {
    std::vector<Vector> cols;
    for (int i = 1; i <= g.dim(); ++i)
        for (int j = i + 1; j <= g.dim(); ++j) cols.push_back(g.bracket(i, j));
    int pairs = static_cast<int>(cols.size());
    return pairs - Subspace::span_of(cols, g.dim()).dim();
}

}  // namespace liecoh
