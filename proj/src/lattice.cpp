#include "polycert/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace polycert {

namespace {

Int gcd(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace

IntMatrix::IntMatrix(std::vector<IntVector> rows) : rows_(rows.size()) {
    cols_ = rows.empty() ? 0 : rows.front().size();
    for (const auto& r : rows)
        if (r.size() != cols_) throw lattice_error("ragged matrix rows");
    data_ = std::move(rows);
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& cols) {
    if (cols.empty()) return IntMatrix();
    IntMatrix m(cols.front().size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != m.rows())
            throw lattice_error("ragged matrix columns");
        for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

IntVector IntMatrix::column(std::size_t c) const {
    IntVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = data_[i][c];
    return out;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
    if (cols_ != other.rows_) throw lattice_error("shape mismatch in product");
    IntMatrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            if (data_[i][k] == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j)
                out.at(i, j) += data_[i][k] * other.data_[k][j];
        }
    return out;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
    std::swap(data_[i], data_[j]);
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
    for (auto& r : data_) std::swap(r[i], r[j]);
}

void IntMatrix::add_row(std::size_t i, std::size_t j, const Int& f) {
    for (std::size_t c = 0; c < cols_; ++c) data_[i][c] += f * data_[j][c];
}

void IntMatrix::add_col(std::size_t i, std::size_t j, const Int& f) {
    for (auto& r : data_) r[i] += f * r[j];
}

void IntMatrix::negate_row(std::size_t i) {
    for (auto& x : data_[i]) x = -x;
}

void IntMatrix::negate_col(std::size_t i) {
    for (auto& r : data_) r[i] = -r[i];
}

std::string IntMatrix::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " ");
        for (std::size_t j = 0; j < cols_; ++j)
            os << data_[i][j] << (j + 1 < cols_ ? " " : "");
        os << (i + 1 < rows_ ? "\n" : "]");
    }
    return os.str();
}

std::size_t SnfResult::rank() const {
    std::size_t r = 0;
    for (const auto& d : invariant_factors)
        if (d != 0) ++r;
    return r;
}

Int gcd_all(const IntVector& v) {
    Int g = 0;
    for (const auto& x : v) g = gcd(g, x);
    return g;
}

bool is_zero(const IntVector& v) {
    return std::all_of(v.begin(), v.end(),
                       [](const Int& x) { return x == 0; });
}

IntVector primitive(const IntVector& v) {
    Int g = gcd_all(v);
    if (g == 0) throw lattice_error("primitive() of the zero vector");
    IntVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
    return out;
}

Int det_exact(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw lattice_error("det of non-square matrix");
    std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a.at(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                a.at(i, j) = num / prev;  // exact by Bareiss
            }
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

SnfResult smith_normal_form(const IntMatrix& m) {
    std::size_t nr = m.rows(), nc = m.cols();
    IntMatrix a = m;
    IntMatrix u = IntMatrix::identity(nr);
    IntMatrix v = IntMatrix::identity(nc);
    IntMatrix vinv = IntMatrix::identity(nc);

    // Column ops on a are mirrored on v (right multiply) and inverted on
    // vinv (left multiply) so that v * vinv == I throughout.
    auto col_swap = [&](std::size_t i, std::size_t j) {
        a.swap_cols(i, j);
        v.swap_cols(i, j);
        vinv.swap_rows(i, j);
    };
    auto col_add = [&](std::size_t i, std::size_t j, const Int& f) {
        a.add_col(i, j, f);
        v.add_col(i, j, f);
        vinv.add_row(j, i, -f);
    };
    auto col_negate = [&](std::size_t i) {
        a.negate_col(i);
        v.negate_col(i);
        vinv.negate_row(i);
    };

    std::size_t t = std::min(nr, nc);
    for (std::size_t k = 0; k < t; ++k) {
        // Pivot: smallest nonzero magnitude in the trailing block.
        std::size_t pr = nr, pc = nc;
        Int best = 0;
        for (std::size_t i = k; i < nr; ++i)
            for (std::size_t j = k; j < nc; ++j) {
                Int x = abs(a.at(i, j));
                if (x != 0 && (best == 0 || x < best)) {
                    best = x;
                    pr = i;
                    pc = j;
                }
            }
        if (pr == nr) break;  // trailing block is zero
        if (pr != k) {
            a.swap_rows(k, pr);
            u.swap_rows(k, pr);
        }
        if (pc != k) col_swap(k, pc);

        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (std::size_t i = k + 1; i < nr; ++i) {
                if (a.at(i, k) == 0) continue;
                Int q = a.at(i, k) / a.at(k, k);
                a.add_row(i, k, -q);
                u.add_row(i, k, -q);
                if (a.at(i, k) != 0) {
                    a.swap_rows(k, i);
                    u.swap_rows(k, i);
                    dirty = true;
                }
            }
            for (std::size_t j = k + 1; j < nc; ++j) {
                if (a.at(k, j) == 0) continue;
                Int q = a.at(k, j) / a.at(k, k);
                col_add(j, k, -q);
                if (a.at(k, j) != 0) {
                    col_swap(k, j);
                    dirty = true;
                }
            }
        }
        if (a.at(k, k) < 0) {
            col_negate(k);
        }
    }

    // Enforce the divisibility chain d1 | d2 | ...
    bool again = true;
    while (again) {
        again = false;
        for (std::size_t k = 0; k + 1 < t; ++k) {
            const Int& d1 = a.at(k, k);
            const Int& d2 = a.at(k + 1, k + 1);
            if (d1 == 0 && d2 != 0) {
                a.swap_rows(k, k + 1);
                u.swap_rows(k, k + 1);
                col_swap(k, k + 1);
                again = true;
                continue;
            }
            if (d1 != 0 && d2 % d1 != 0) {
                // Fold d2 into column k and re-reduce; the euclidean
                // passes leave gcd(d1,d2) at k and +/-lcm at k+1.
                col_add(k, k + 1, 1);
                bool dirty = true;
                while (dirty) {
                    dirty = false;
                    for (std::size_t i = k + 1; i < nr; ++i) {
                        if (a.at(i, k) == 0) continue;
                        Int q = a.at(i, k) / a.at(k, k);
                        a.add_row(i, k, -q);
                        u.add_row(i, k, -q);
                        if (a.at(i, k) != 0) {
                            a.swap_rows(k, i);
                            u.swap_rows(k, i);
                            dirty = true;
                        }
                    }
                    for (std::size_t j = k + 1; j < nc; ++j) {
                        if (a.at(k, j) == 0) continue;
                        Int q = a.at(k, j) / a.at(k, k);
                        col_add(j, k, -q);
                        if (a.at(k, j) != 0) {
                            col_swap(k, j);
                            dirty = true;
                        }
                    }
                }
                if (a.at(k, k) < 0) col_negate(k);
                if (a.at(k + 1, k + 1) < 0) col_negate(k + 1);
                again = true;
            }
        }
    }

    SnfResult res;
    res.invariant_factors.resize(t);
    for (std::size_t k = 0; k < t; ++k) res.invariant_factors[k] = a.at(k, k);
    res.u = std::move(u);
    res.v = std::move(v);
    res.v_inv = std::move(vinv);
    return res;
}

std::vector<IntVector> saturation_basis(const std::vector<IntVector>& vs) {
    if (vs.empty()) throw lattice_error("saturation of empty set");
    std::size_t n = vs.front().size();
    IntMatrix a{std::vector<IntVector>(vs)};
    SnfResult snf = smith_normal_form(a);
    if (snf.rank() != vs.size())
        throw lattice_error("saturation_basis: input vectors are dependent");
    // a = u^-1 diag v^-1, so the first k rows of v^-1 span the same
    // rational space and extend to a basis of Z^n.
    std::vector<IntVector> out;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        IntVector r(n);
        for (std::size_t j = 0; j < n; ++j) r[j] = snf.v_inv.at(i, j);
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<IntVector> complement_basis(const std::vector<IntVector>& sat) {
    if (sat.empty()) throw lattice_error("complement of empty set");
    std::size_t n = sat.front().size();
    IntMatrix a{std::vector<IntVector>(sat)};
    SnfResult snf = smith_normal_form(a);
    if (snf.rank() != sat.size())
        throw lattice_error("complement_basis: input vectors are dependent");
    for (const auto& d : snf.invariant_factors)
        if (d != 0 && d != 1)
            throw lattice_error("complement_basis: input lattice not saturated");
    std::vector<IntVector> out;
    for (std::size_t i = sat.size(); i < n; ++i) {
        IntVector r(n);
        for (std::size_t j = 0; j < n; ++j) r[j] = snf.v_inv.at(i, j);
        out.push_back(std::move(r));
    }
    return out;
}

void verify_basis(const std::vector<IntVector>& sat,
                  const std::vector<IntVector>& comp) {
    std::vector<IntVector> all(sat);
    all.insert(all.end(), comp.begin(), comp.end());
    if (all.empty()) throw lattice_error("empty basis");
    std::size_t n = all.front().size();
    if (all.size() != n)
        throw lattice_error("basis has wrong cardinality");
    Int d = det_exact(IntMatrix{std::move(all)});
    if (d != 1 && d != -1)
        throw lattice_error("supplied complement is not unimodular (det " +
                            d.str() + ")");
}

IntVector project_coordinates(const IntVector& v,
                              const std::vector<IntVector>& sat,
                              const std::vector<IntVector>& comp) {
    verify_basis(sat, comp);
    std::vector<IntVector> cols(sat);
    cols.insert(cols.end(), comp.begin(), comp.end());
    auto sol = solve_rational(cols, v);
    if (!sol) throw lattice_error("projection solve failed");
    IntVector out;
    for (std::size_t i = sat.size(); i < sol->size(); ++i) {
        const Rat& c = (*sol)[i];
        if (denominator(c) != 1)
            throw lattice_error("non-integral coordinates in a Z-basis");
        out.push_back(numerator(c));
    }
    return out;
}

std::optional<std::vector<Rat>> solve_rational(
    const std::vector<IntVector>& columns, const IntVector& b) {
    if (columns.empty()) throw lattice_error("solve with no columns");
    std::size_t n = b.size();
    std::size_t k = columns.size();
    // Gaussian elimination over Q on [A | b].
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(k + 1));
    for (std::size_t j = 0; j < k; ++j) {
        if (columns[j].size() != n) throw lattice_error("column size mismatch");
        for (std::size_t i = 0; i < n; ++i) m[i][j] = Rat(columns[j][i]);
    }
    for (std::size_t i = 0; i < n; ++i) m[i][k] = Rat(b[i]);

    std::vector<std::size_t> pivot_row(k, n);
    std::size_t r = 0;
    for (std::size_t c = 0; c < k && r < n; ++c) {
        std::size_t p = r;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) continue;
        std::swap(m[p], m[r]);
        Rat inv = m[r][c];
        for (std::size_t j = c; j <= k; ++j) m[r][j] /= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (std::size_t j = c; j <= k; ++j) m[i][j] -= f * m[r][j];
        }
        pivot_row[c] = r;
        ++r;
    }
    if (r < k) throw lattice_error("solve_rational: dependent columns");
    for (std::size_t i = r; i < n; ++i)
        if (m[i][k] != 0) return std::nullopt;  // inconsistent: b not in span
    std::vector<Rat> x(k);
    for (std::size_t c = 0; c < k; ++c) x[c] = m[pivot_row[c]][k];
    return x;
}

}  // namespace polycert
