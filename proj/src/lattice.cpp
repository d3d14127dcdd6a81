#include "voa/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace voa {

Lattice::Lattice(IMat g, std::vector<std::string> names)
    : rank((long)g.size()), gram(std::move(g)), basis_names(std::move(names)) {
    if ((long)basis_names.size() != rank)
        throw Error(Errc::ConfigError, "basis_names size != rank");
    for (const auto& row : gram)
        if ((long)row.size() != rank)
            throw Error(Errc::ConfigError, "gram matrix is not square");
    for (long i = 0; i < rank; ++i) {
        if (gram[i][i] <= 0 || gram[i][i] % 2 != 0)
            throw Error(Errc::ConfigError, "gram diagonal must be even and positive");
        for (long j = 0; j < rank; ++j)
            if (gram[i][j] != gram[j][i])
                throw Error(Errc::ConfigError, "gram matrix must be symmetric");
    }
    // leading principal minors > 0
    for (long k = 1; k <= rank; ++k) {
        IMat sub(k, std::vector<long>(k));
        for (long i = 0; i < k; ++i)
            for (long j = 0; j < k; ++j) sub[i][j] = gram[i][j];
        if (int_det(sub) <= 0)
            throw Error(Errc::ConfigError, "gram matrix is not positive definite");
    }
}

Rational Lattice::pairing(const QVec& u, const QVec& v) const {
    if ((long)u.size() != rank || (long)v.size() != rank)
        throw Error(Errc::DimensionMismatch, "pairing expects vectors of length rank");
    Rational s = 0;
    for (long i = 0; i < rank; ++i) {
        if (u[i] == 0) continue;
        Rational row = 0;
        for (long j = 0; j < rank; ++j)
            if (v[j] != 0) row += Rational(gram[i][j]) * v[j];
        s += u[i] * row;
    }
    return s;
}

Rational Lattice::pairing(const IVec& u, const IVec& v) const {
    QVec uq(u.begin(), u.end()), vq(v.begin(), v.end());
    return pairing(uq, vq);
}

int Cocycle::eval(const IVec& g, const IVec& t) const {
    long rank = (long)signs.size();
    if ((long)g.size() != rank || (long)t.size() != rank)
        throw Error(Errc::DimensionMismatch, "cocycle arguments have wrong length");
    long parity = 0;
    for (long i = 0; i < rank; ++i) {
        if (g[i] % 2 == 0) continue;
        for (long j = 0; j < rank; ++j)
            if (t[j] % 2 != 0 && signs[i][j] == -1) parity ^= 1;
    }
    return parity ? -1 : 1;
}

bool cocycle_validate(const Cocycle& c, const Lattice& lat) {
    if ((long)c.signs.size() != lat.rank) return false;
    for (const auto& row : c.signs) {
        if ((long)row.size() != lat.rank) return false;
        for (long s : row)
            if (s != 1 && s != -1) return false;
    }
    for (long i = 0; i < lat.rank; ++i)
        for (long j = 0; j < lat.rank; ++j) {
            int lhs = c.signs[i][j] * c.signs[j][i];
            int rhs = (lat.gram[i][j] % 2 == 0) ? 1 : -1;
            if (lhs != rhs) return false;
        }
    return true;
}

Cocycle trivial_cocycle(long rank) {
    return Cocycle{IMat(rank, std::vector<long>(rank, 1))};
}

Cocycle a2_cocycle() { return Cocycle{{{1, 1}, {-1, 1}}}; }

SubMonoid SubMonoid::split(std::vector<IVec> free, std::vector<IVec> nonneg) {
    SubMonoid m;
    m.kind = Kind::Split;
    m.free_basis = std::move(free);
    m.nonneg_basis = std::move(nonneg);
    return m;
}

SubMonoid SubMonoid::generated(std::vector<IVec> gens, long bound) {
    SubMonoid m;
    m.kind = Kind::Generated;
    m.generators = std::move(gens);
    m.search_bound = bound;
    return m;
}

Rational int_det(const IMat& m) {
    long n = (long)m.size();
    std::vector<QVec> a(n, QVec(n));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) a[i][j] = m[i][j];
    Rational det = 1;
    for (long col = 0; col < n; ++col) {
        long piv = -1;
        for (long r = col; r < n; ++r)
            if (a[r][col] != 0) { piv = r; break; }
        if (piv < 0) return 0;
        if (piv != col) { std::swap(a[piv], a[col]); det = -det; }
        det *= a[col][col];
        Rational inv = 1 / a[col][col];
        for (long r = col + 1; r < n; ++r) {
            if (a[r][col] == 0) continue;
            Rational f = a[r][col] * inv;
            for (long j = col; j < n; ++j) a[r][j] -= f * a[col][j];
        }
    }
    return det;
}

namespace {

// Solve A x = v over Q where the columns of A are linearly independent.
// Returns nullopt if inconsistent.
std::optional<QVec> solve_exact(const std::vector<IVec>& cols, const IVec& v) {
    long rows = cols.empty() ? (long)v.size() : (long)cols[0].size();
    long n = (long)cols.size();
    std::vector<QVec> a(rows, QVec(n + 1));
    for (long i = 0; i < rows; ++i) {
        for (long j = 0; j < n; ++j) a[i][j] = cols[j][i];
        a[i][n] = v[i];
    }
    long r = 0;
    std::vector<long> pivot_col;
    for (long c = 0; c < n && r < rows; ++c) {
        long piv = -1;
        for (long i = r; i < rows; ++i)
            if (a[i][c] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(a[piv], a[r]);
        Rational inv = 1 / a[r][c];
        for (long j = c; j <= n; ++j) a[r][j] *= inv;
        for (long i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rational f = a[i][c];
            for (long j = c; j <= n; ++j) a[i][j] -= f * a[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (long i = r; i < rows; ++i)
        if (a[i][n] != 0) return std::nullopt;
    if (r < n) return std::nullopt;  // columns dependent; treat as unsolvable
    QVec x(n);
    for (long i = 0; i < r; ++i) x[pivot_col[i]] = a[i][n];
    return x;
}

Ternary contains_generated(const SubMonoid& m, const IVec& v) {
    bool zero = std::all_of(v.begin(), v.end(), [](long x) { return x == 0; });
    if (zero) return Ternary::True;
    long k = (long)m.generators.size();
    if (k == 0) return Ternary::Undecided;
    IVec coeff(k, 0);
    std::function<bool(long, IVec)> rec = [&](long idx, IVec rest) -> bool {
        if (idx == k) {
            return std::all_of(rest.begin(), rest.end(), [](long x) { return x == 0; });
        }
        for (long c = 0; c <= m.search_bound; ++c) {
            IVec r2 = rest;
            for (size_t i = 0; i < r2.size(); ++i) r2[i] -= c * m.generators[idx][i];
            if (rec(idx + 1, r2)) return true;
        }
        return false;
    };
    if (rec(0, v)) return Ternary::True;
    return Ternary::Undecided;
}

}  // namespace

Ternary submonoid_contains(const Lattice& lat, const SubMonoid& m, const IVec& v) {
    if ((long)v.size() != lat.rank)
        throw Error(Errc::DimensionMismatch, "vector length != rank");
    if (m.kind == SubMonoid::Kind::Generated) return contains_generated(m, v);

    std::vector<IVec> cols = m.free_basis;
    cols.insert(cols.end(), m.nonneg_basis.begin(), m.nonneg_basis.end());
    if (cols.empty())
        return ternary(std::all_of(v.begin(), v.end(), [](long x) { return x == 0; }));
    auto sol = solve_exact(cols, v);
    if (!sol) return Ternary::False;
    for (size_t i = 0; i < sol->size(); ++i) {
        if (!is_integer((*sol)[i])) return Ternary::False;
        if (i >= m.free_basis.size() && (*sol)[i] < 0) return Ternary::False;
    }
    return Ternary::True;
}

namespace {

// gcd of all maximal minors: 1 iff the generators span the full lattice.
bool spans_lattice(const Lattice& lat, const std::vector<IVec>& gens) {
    long r = lat.rank, k = (long)gens.size();
    if (k < r) return false;
    std::vector<long> idx(r);
    mpz_class g = 0;
    std::function<void(long, long)> rec = [&](long pos, long start) {
        if (g == 1) return;
        if (pos == r) {
            IMat sub(r, std::vector<long>(r));
            for (long i = 0; i < r; ++i)
                for (long j = 0; j < r; ++j) sub[j][i] = gens[idx[i]][j];
            Rational d = int_det(sub);
            mpz_class di = abs(d.get_num());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), di.get_mpz_t());
            return;
        }
        for (long i = start; i < k; ++i) { idx[pos] = i; rec(pos + 1, i + 1); }
    };
    rec(0, 0);
    return g == 1;
}

}  // namespace

Ternary classify_borel(const Lattice& lat, const SubMonoid& m) {
    if (m.kind == SubMonoid::Kind::Split) {
        if (!m.free_basis.empty()) return Ternary::False;
        if ((long)m.nonneg_basis.size() != lat.rank) return Ternary::False;
        IMat cols(lat.rank, std::vector<long>(lat.rank));
        for (long j = 0; j < lat.rank; ++j)
            for (long i = 0; i < lat.rank; ++i) cols[i][j] = m.nonneg_basis[j][i];
        Rational d = int_det(cols);
        return ternary(d == 1 || d == -1);
    }
    // Generated kind: look for a size-rank subset that is a lattice basis and
    // expresses the remaining generators nonnegatively.
    const auto& gens = m.generators;
    if (!spans_lattice(lat, gens)) return Ternary::False;
    long k = (long)gens.size(), r = lat.rank;
    std::vector<long> idx(r);
    bool undecided = false;
    std::function<bool(long, long)> rec = [&](long pos, long start) -> bool {
        if (pos == r) {
            IMat cols(r, std::vector<long>(r));
            for (long i = 0; i < r; ++i)
                for (long j = 0; j < r; ++j) cols[j][i] = gens[idx[i]][j];
            Rational d = int_det(cols);
            if (d != 1 && d != -1) return false;
            std::vector<IVec> basis;
            for (long i = 0; i < r; ++i) basis.push_back(gens[idx[i]]);
            SubMonoid cand = SubMonoid::split({}, basis);
            for (long i = 0; i < k; ++i) {
                Ternary t = submonoid_contains(lat, cand, gens[i]);
                if (t == Ternary::Undecided) { undecided = true; return false; }
                if (t == Ternary::False) return false;
            }
            return true;
        }
        for (long i = start; i < k; ++i) {
            idx[pos] = i;
            if (rec(pos + 1, i + 1)) return true;
        }
        return false;
    };
    if (rec(0, 0)) return Ternary::True;
    (void)undecided;
    // failure of the bounded subset search cannot certify the negative
    return Ternary::Undecided;
}

Ternary classify_parabolic(const Lattice& lat, const SubMonoid& m,
                           const std::vector<IVec>& candidate) {
    if ((long)candidate.size() != lat.rank)
        throw Error(Errc::DimensionMismatch, "candidate must have rank elements");
    IMat cols(lat.rank, std::vector<long>(lat.rank));
    for (long j = 0; j < lat.rank; ++j)
        for (long i = 0; i < lat.rank; ++i) cols[i][j] = candidate[j][i];
    Rational d = int_det(cols);
    if (d != 1 && d != -1) return Ternary::False;
    bool undecided = false;
    for (const auto& v : candidate) {
        Ternary t = submonoid_contains(lat, m, v);
        if (t == Ternary::False) return Ternary::False;
        if (t == Ternary::Undecided) undecided = true;
    }
    return undecided ? Ternary::Undecided : Ternary::True;
}

bool isometry_validate(const Isometry& s, const Lattice& lat) {
    if ((long)s.matrix.size() != lat.rank) return false;
    for (const auto& row : s.matrix)
        if ((long)row.size() != lat.rank) return false;
    // (sigma a_i | sigma a_j) == (a_i | a_j) for all basis pairs
    for (long i = 0; i < lat.rank; ++i)
        for (long j = 0; j < lat.rank; ++j) {
            IVec ei(lat.rank, 0), ej(lat.rank, 0);
            ei[i] = 1;
            ej[j] = 1;
            if (lat.pairing(apply_matrix(s.matrix, ei), apply_matrix(s.matrix, ej)) !=
                lat.gram[i][j])
                return false;
        }
    return true;
}

IVec apply_matrix(const IMat& m, const IVec& v) {
    long n = (long)m.size();
    IVec out(n, 0);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) out[i] += m[i][j] * v[j];
    return out;
}

QVec apply_matrix_q(const IMat& m, const QVec& v) {
    long n = (long)m.size();
    QVec out(n, 0);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) out[i] += Rational(m[i][j]) * v[j];
    return out;
}

std::vector<IVec> short_vectors(const Lattice& lat, const Rational& bound) {
    std::vector<IVec> out;
    if (bound < 0) return out;
    long r = lat.rank;
    // LDL^T of the Gram matrix over Q: gram = L D L^T with unit lower L.
    std::vector<QVec> L(r, QVec(r, 0));
    QVec D(r, 0);
    for (long i = 0; i < r; ++i) {
        L[i][i] = 1;
        for (long j = 0; j <= i; ++j) {
            Rational s = lat.gram[i][j];
            for (long k = 0; k < j; ++k) s -= L[i][k] * L[j][k] * D[k];
            if (i == j)
                D[i] = s;
            else
                L[i][j] = s / D[j];
        }
    }
    // (v|v) = sum_i D_i (v_i + sum_{j>i} L_ji v_j)^2; enumerate from the last
    // coordinate down, bounding each coordinate by the remaining budget.
    IVec v(r, 0);
    std::function<void(long, Rational)> rec = [&](long i, Rational budget) {
        if (i < 0) {
            out.push_back(v);
            return;
        }
        Rational offset = 0;
        for (long j = i + 1; j < r; ++j) offset += L[j][i] * v[j];
        // |v_i + offset| <= sqrt(budget / D_i); scan a safe integer range.
        double lim = std::sqrt(std::max(0.0, Rational(budget / D[i]).get_d())) + 2.0;
        double off = offset.get_d();
        long lo = (long)std::floor(-off - lim), hi = (long)std::ceil(-off + lim);
        for (long x = lo; x <= hi; ++x) {
            Rational t = offset + x;
            Rational used = D[i] * t * t;
            if (used > budget) continue;
            v[i] = x;
            rec(i - 1, budget - used);
        }
        v[i] = 0;
    };
    rec(r - 1, bound);
    return out;
}

}  // namespace voa
