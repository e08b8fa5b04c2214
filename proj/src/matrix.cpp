#include "multiassoc/matrix.hpp"

#include <algorithm>
#include <cassert>

#include "multiassoc/error.hpp"

namespace multiassoc {

void RationalMatrix::add_row(std::vector<Rat> row, std::string label) {
    if (cols == 0 && rows.empty())
        cols = row.size();
    if (row.size() != cols)
        throw Error("row length mismatch");
    rows.push_back(std::move(row));
    row_labels.push_back(std::move(label));
}

RationalMatrix RationalMatrix::restricted(const std::vector<std::size_t>& row_idx) const {
    RationalMatrix out(cols);
    out.col_labels = col_labels;
    for (std::size_t i : row_idx) {
        out.rows.push_back(rows.at(i));
        out.row_labels.push_back(i < row_labels.size() ? row_labels[i] : std::string{});
    }
    return out;
}

namespace {

std::size_t bit_length(const Int& z) {
    return mpz_sizeinbase(z.get_mpz_t(), 2);
}

} // namespace

RowSpace::RowSpace(const RationalMatrix& m, bool track_transform)
    : nrows_(m.nrows()), ncols_(m.cols), tracked_(track_transform) {
    // Clear denominators column by column. The scaled matrix has the same
    // left kernel; express() rescales targets consistently.
    col_scale_.assign(ncols_, Int(1));
    for (std::size_t j = 0; j < ncols_; ++j) {
        Int l(1);
        for (std::size_t i = 0; i < nrows_; ++i)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.rows[i][j].get_den_mpz_t());
        col_scale_[j] = l;
    }

    u_.assign(nrows_, std::vector<Int>(ncols_));
    for (std::size_t i = 0; i < nrows_; ++i)
        for (std::size_t j = 0; j < ncols_; ++j) {
            Rat v = m.rows[i][j] * Rat(col_scale_[j]);
            assert(v.get_den() == 1);
            u_[i][j] = v.get_num();
        }
    if (tracked_) {
        t_.assign(nrows_, std::vector<Int>(nrows_, Int(0)));
        for (std::size_t i = 0; i < nrows_; ++i)
            t_[i][i] = 1;
    }

    Int prev(1), tmp;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols_ && r < nrows_; ++c) {
        // pivot: nonzero entry of minimal bit length in column c
        std::size_t best = nrows_;
        for (std::size_t i = r; i < nrows_; ++i) {
            if (u_[i][c] == 0) continue;
            if (best == nrows_ || bit_length(u_[i][c]) < bit_length(u_[best][c]))
                best = i;
        }
        if (best == nrows_) continue;
        std::swap(u_[r], u_[best]);
        if (tracked_) std::swap(t_[r], t_[best]);

        const Int& piv = u_[r][c];
        for (std::size_t i = r + 1; i < nrows_; ++i) {
            const Int mult = u_[i][c];
            for (std::size_t j = c; j < ncols_; ++j) {
                mpz_mul(tmp.get_mpz_t(), u_[i][j].get_mpz_t(), piv.get_mpz_t());
                mpz_submul(tmp.get_mpz_t(), mult.get_mpz_t(), u_[r][j].get_mpz_t());
                mpz_divexact(u_[i][j].get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
            }
            if (tracked_) {
                for (std::size_t j = 0; j < nrows_; ++j) {
                    mpz_mul(tmp.get_mpz_t(), t_[i][j].get_mpz_t(), piv.get_mpz_t());
                    mpz_submul(tmp.get_mpz_t(), mult.get_mpz_t(), t_[r][j].get_mpz_t());
                    mpz_divexact(t_[i][j].get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
                }
            }
        }
        prev = piv;
        pivot_col_.push_back(static_cast<int>(c));
        ++r;
    }
    rank_ = static_cast<int>(r);
}

std::vector<std::vector<Rat>> RowSpace::left_kernel() const {
    if (!tracked_)
        throw Error("RowSpace built without transform tracking");
    std::vector<std::vector<Rat>> out;
    for (std::size_t i = rank_; i < nrows_; ++i) {
        // transform row of a zero echelon row = dependence among input rows
        std::vector<Int> v = t_[i];
        Int g(0);
        for (const Int& z : v)
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
        if (g == 0) continue; // all-zero transform row cannot happen, but be safe
        int lead = 0;
        for (const Int& z : v) {
            if (z != 0) { lead = sgn(z); break; }
        }
        if (lead < 0) mpz_neg(g.get_mpz_t(), g.get_mpz_t());
        std::vector<Rat> q(v.size());
        for (std::size_t j = 0; j < v.size(); ++j) {
            Int red;
            mpz_divexact(red.get_mpz_t(), v[j].get_mpz_t(), g.get_mpz_t());
            q[j] = Rat(red);
        }
        out.push_back(std::move(q));
    }
    return out;
}

std::optional<std::vector<Rat>> RowSpace::express(const std::vector<Rat>& target) const {
    if (!tracked_)
        throw Error("RowSpace built without transform tracking");
    if (target.size() != ncols_)
        throw Error("target length mismatch");
    std::vector<Rat> t(ncols_);
    for (std::size_t j = 0; j < ncols_; ++j)
        t[j] = target[j] * Rat(col_scale_[j]);

    std::vector<Rat> d(rank_, Rat(0));
    for (int i = 0; i < rank_; ++i) {
        int pc = pivot_col_[i];
        if (t[pc] == 0) continue;
        Rat c = t[pc] / Rat(u_[i][pc]);
        for (std::size_t j = pc; j < ncols_; ++j)
            if (u_[i][j] != 0)
                t[j] -= c * Rat(u_[i][j]);
        d[i] = c;
    }
    for (const Rat& v : t)
        if (v != 0) return std::nullopt;

    std::vector<Rat> coeff(nrows_, Rat(0));
    for (int i = 0; i < rank_; ++i) {
        if (d[i] == 0) continue;
        for (std::size_t j = 0; j < nrows_; ++j)
            if (t_[i][j] != 0)
                coeff[j] += d[i] * Rat(t_[i][j]);
    }
    return coeff;
}

int rank(const RationalMatrix& m) {
    return RowSpace(m, /*track_transform=*/false).rank();
}

std::vector<std::vector<Rat>> kernel_basis(const RationalMatrix& m) {
    return RowSpace(m).left_kernel();
}

std::vector<Rat> solve_in_basis(const RationalMatrix& rows, const std::vector<Rat>& target) {
    RowSpace rs(rows);
    if (rs.rank() != static_cast<int>(rows.nrows()))
        throw NotInSpan("rows are not linearly independent");
    auto c = rs.express(target);
    if (!c)
        throw NotInSpan("target is outside the row span");
    return *c;
}

std::vector<Int> primitive_integer(const std::vector<Rat>& v) {
    Int l(1);
    for (const Rat& q : v)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    std::vector<Int> z(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        Rat s = v[i] * Rat(l);
        z[i] = s.get_num();
    }
    Int g(0);
    for (const Int& x : z)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g > 1)
        for (Int& x : z)
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return z;
}

} // namespace multiassoc
