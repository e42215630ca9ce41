#include <semiform/linalg.hpp>

#include <algorithm>
#include <stdexcept>

namespace semiform
{

namespace
{

void make_primitive(IntegerRow &row)
{
    if (row.empty()) {
        return;
    }
    Integer g = 0;
    for (const auto &[col, v] : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) {
            break;
        }
    }
    const bool flip = row.front().second < 0;
    if (g != 1 || flip) {
        if (flip) {
            g = -g;
        }
        for (auto &[col, v] : row) {
            mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
        }
    }
}

// target <- p * target - a * pivot_row, where p is the pivot entry and a the
// entry of target in the pivot column; the result drops that column.
IntegerRow eliminate(const IntegerRow &target, const IntegerRow &pivot_row, const Integer &p, const Integer &a)
{
    IntegerRow out;
    out.reserve(target.size() + pivot_row.size());
    auto t = target.begin();
    auto q = pivot_row.begin();
    while (t != target.end() || q != pivot_row.end()) {
        if (q == pivot_row.end() || (t != target.end() && t->first < q->first)) {
            out.emplace_back(t->first, p * t->second);
            ++t;
        } else if (t == target.end() || q->first < t->first) {
            out.emplace_back(q->first, -a * q->second);
            ++q;
        } else {
            Integer v = p * t->second - a * q->second;
            if (v != 0) {
                out.emplace_back(t->first, std::move(v));
            }
            ++t;
            ++q;
        }
    }
    make_primitive(out);
    return out;
}

} // namespace

Integer row_entry(const IntegerRow &row, std::size_t col)
{
    const auto it = std::lower_bound(row.begin(), row.end(), col,
                                     [](const auto &entry, std::size_t c) { return entry.first < c; });
    return it != row.end() && it->first == col ? it->second : Integer(0);
}

IntegerRow clear_denominators(const RationalColumn &v)
{
    Integer l = 1;
    for (const auto &[i, q] : v) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    }
    IntegerRow out;
    out.reserve(v.size());
    for (const auto &[i, q] : v) {
        if (q != 0) {
            out.emplace_back(i, Integer(q.get_num() * (l / q.get_den())));
        }
    }
    return out;
}

std::vector<IntegerRow> SparseMatrix::integer_rows() const
{
    std::vector<std::vector<std::pair<std::size_t, Rational>>> by_row(rows);
    for (std::size_t j = 0; j < columns.size(); ++j) {
        for (const auto &[r, v] : columns[j]) {
            if (r >= rows) {
                throw std::out_of_range("sparse matrix row index out of range");
            }
            if (v != 0) {
                by_row[r].emplace_back(j, v);
            }
        }
    }
    std::vector<IntegerRow> out;
    out.reserve(rows);
    for (const auto &row : by_row) {
        out.push_back(clear_denominators(row));
    }
    return out;
}

EchelonForm echelon(std::vector<IntegerRow> rows, bool reduced)
{
    // Drop zero rows up front; every remaining row is kept primitive.
    std::vector<IntegerRow> pending;
    pending.reserve(rows.size());
    for (auto &row : rows) {
        if (!row.empty()) {
            make_primitive(row);
            pending.push_back(std::move(row));
        }
    }

    EchelonForm out;
    while (!pending.empty()) {
        // Remaining rows are zero left of the smallest leading column.
        std::size_t col = pending.front().front().first;
        std::size_t pick = 0;
        for (std::size_t r = 1; r < pending.size(); ++r) {
            if (pending[r].front().first < col) {
                col = pending[r].front().first;
                pick = r;
            }
        }
        IntegerRow pivot_row = std::move(pending[pick]);
        pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(pick));
        const Integer p = pivot_row.front().second;

        std::vector<IntegerRow> next;
        next.reserve(pending.size());
        for (auto &row : pending) {
            if (row.front().first == col) {
                auto reduced_row = eliminate(row, pivot_row, p, row.front().second);
                if (!reduced_row.empty()) {
                    next.push_back(std::move(reduced_row));
                }
            } else {
                next.push_back(std::move(row));
            }
        }
        pending = std::move(next);

        if (reduced) {
            for (auto &row : out.rows) {
                const Integer a = row_entry(row, col);
                if (a != 0) {
                    row = eliminate(row, pivot_row, p, a);
                }
            }
        }
        out.rows.push_back(std::move(pivot_row));
        out.pivots.push_back(col);
    }
    return out;
}

std::size_t rank(const SparseMatrix &a)
{
    return echelon(a.integer_rows(), false).pivots.size();
}

std::vector<IntegerRow> kernel_basis(const SparseMatrix &a)
{
    const auto form = echelon(a.integer_rows(), true);
    std::vector<bool> is_pivot(a.cols, false);
    Integer l = 1;
    for (std::size_t r = 0; r < form.rows.size(); ++r) {
        is_pivot[form.pivots[r]] = true;
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), form.rows[r].front().second.get_mpz_t());
    }
    // For each free column f: x_f = l and x_{pivot r} = -row_r[f] * l / p_r.
    std::vector<IntegerRow> vectors;
    for (std::size_t f = 0; f < a.cols; ++f) {
        if (is_pivot[f]) {
            continue;
        }
        IntegerRow v;
        for (std::size_t r = 0; r < form.rows.size(); ++r) {
            const Integer entry = row_entry(form.rows[r], f);
            if (entry != 0) {
                v.emplace_back(form.pivots[r], Integer(-entry * (l / form.rows[r].front().second)));
            }
        }
        v.emplace_back(f, l);
        std::sort(v.begin(), v.end(), [](const auto &x, const auto &y) { return x.first < y.first; });
        vectors.push_back(std::move(v));
    }
    return echelon(std::move(vectors), true).rows;
}

} // namespace semiform
