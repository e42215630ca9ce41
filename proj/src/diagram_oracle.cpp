#include <semiform/diagram_oracle.hpp>

#include <stdexcept>

#include <semiform/errors.hpp>
#include <semiform/operators.hpp>

namespace semiform
{

namespace
{

constexpr unsigned max_shape_size = 12;
constexpr unsigned long max_box_cells = 25;

void validate(const BoxPartition &lambda)
{
    const auto cells = static_cast<unsigned long>(lambda.box_k()) * lambda.box_n();
    if (lambda.size() > max_shape_size || cells > max_box_cells) {
        throw CapacityError("diagram oracle is capped at |lambda| <= 12 and nk <= 25; got |lambda|="
                            + std::to_string(lambda.size()) + ", nk=" + std::to_string(cells));
    }
}

std::vector<Cell> shaded_cells(const BoxPartition &lambda)
{
    std::vector<Cell> out;
    for (unsigned r = 0; r < lambda.box_k(); ++r) {
        for (unsigned col = 0; col < lambda.parts()[r]; ++col) {
            out.push_back({r, col});
        }
    }
    return out;
}

std::vector<Cell> hollow_cells(const BoxPartition &lambda)
{
    std::vector<Cell> out;
    for (unsigned r = 0; r < lambda.box_k(); ++r) {
        for (unsigned col = lambda.parts()[r]; col < lambda.box_n(); ++col) {
            out.push_back({r, col});
        }
    }
    return out;
}

// Calls fn(indices) for every i-subset of {0..count-1} in lexicographic order.
template <typename Fn>
void for_each_subset(std::size_t count, unsigned i, Fn &&fn)
{
    if (i > count) {
        return;
    }
    std::vector<std::size_t> idx(i);
    for (unsigned t = 0; t < i; ++t) {
        idx[t] = t;
    }
    while (true) {
        fn(idx);
        // Advance the rightmost index that still has room.
        std::size_t t = i;
        while (t > 0 && idx[t - 1] == count - i + (t - 1)) {
            --t;
        }
        if (t == 0) {
            return;
        }
        ++idx[t - 1];
        for (std::size_t u = t; u < i; ++u) {
            idx[u] = idx[u - 1] + 1;
        }
    }
}

// Monomial prod_r a_{rows[r]}.
Monomial row_weight(const std::vector<int> &rows, unsigned n)
{
    std::vector<unsigned> e(n + 1, 0);
    for (int r : rows) {
        if (r < 0 || r > static_cast<int>(n)) {
            throw std::logic_error("semi-diagram row count out of range");
        }
        ++e[static_cast<unsigned>(r)];
    }
    return Monomial(std::move(e));
}

std::vector<int> shape_rows(const BoxPartition &lambda)
{
    return {lambda.parts().begin(), lambda.parts().end()};
}

} // namespace

std::string to_string(MarkMode mode)
{
    return mode == MarkMode::minus ? "minus" : "plus";
}

Monomial SemiDiagram::weight() const
{
    auto rows = shape_rows(shape);
    const int step = mode == MarkMode::minus ? -1 : 1;
    for (const auto &cell : marks) {
        rows[cell.row] += step;
    }
    return row_weight(rows, shape.box_n());
}

std::vector<SemiDiagram> enumerate_semi_diagrams(const BoxPartition &lambda, unsigned i, MarkMode mode)
{
    validate(lambda);
    const auto eligible = mode == MarkMode::minus ? shaded_cells(lambda) : hollow_cells(lambda);
    std::vector<SemiDiagram> out;
    for_each_subset(eligible.size(), i, [&](const std::vector<std::size_t> &idx) {
        std::vector<Cell> marks;
        marks.reserve(idx.size());
        for (auto t : idx) {
            marks.push_back(eligible[t]);
        }
        out.push_back({lambda, mode, std::move(marks)});
    });
    return out;
}

Polynomial oracle_weight_sum(const BoxPartition &lambda, unsigned i, MarkMode mode)
{
    Polynomial::TermMap terms;
    for (const auto &d : enumerate_semi_diagrams(lambda, i, mode)) {
        accumulate_term(terms, d.weight(), 1);
    }
    return Polynomial(lambda.box_n(), std::move(terms));
}

CommutatorCensus commutator_census(const BoxPartition &lambda, unsigned i)
{
    if (i < 1) {
        throw std::invalid_argument("commutator census needs i >= 1");
    }
    validate(lambda);
    const unsigned n = lambda.box_n();
    const auto shaded = shaded_cells(lambda);
    const auto hollow = hollow_cells(lambda);
    const auto rows0 = shape_rows(lambda);
    // i distinguishable plus signs on a fixed cell set can be ordered i! ways.
    const Rational orderings(factorial(i));

    Polynomial::TermMap pm, mp, free_lhs, free_rhs;
    Integer pm_count = 0, mp_count = 0;

    // D Delta^i: i plus signs on hollow cells, then one minus on a shaded cell.
    for_each_subset(hollow.size(), i, [&](const std::vector<std::size_t> &idx) {
        auto rows = rows0;
        for (auto t : idx) {
            ++rows[hollow[t].row];
        }
        // The minus lands on one of the freshly shaded cells: a "+-" cell.
        for (auto t : idx) {
            --rows[hollow[t].row];
            accumulate_term(pm, row_weight(rows, n), orderings);
            ++rows[hollow[t].row];
            pm_count += orderings.get_num();
        }
        // Or on a cell of lambda itself.
        for (const auto &cell : shaded) {
            --rows[cell.row];
            accumulate_term(free_lhs, row_weight(rows, n), orderings);
            ++rows[cell.row];
        }
    });

    // Delta^i D: one minus on a shaded cell, then i plus signs on hollow cells.
    for (const auto &x : shaded) {
        // One plus returns to x (a "-+" cell), the other i-1 go to hollow cells of lambda.
        for_each_subset(hollow.size(), i - 1, [&](const std::vector<std::size_t> &idx) {
            auto rows = rows0;
            for (auto t : idx) {
                ++rows[hollow[t].row];
            }
            accumulate_term(mp, row_weight(rows, n), orderings);
            mp_count += orderings.get_num();
        });
        // No plus returns to x.
        for_each_subset(hollow.size(), i, [&](const std::vector<std::size_t> &idx) {
            auto rows = rows0;
            --rows[x.row];
            for (auto t : idx) {
                ++rows[hollow[t].row];
            }
            accumulate_term(free_rhs, row_weight(rows, n), orderings);
        });
    }

    CommutatorCensus out{
        i,
        static_cast<long>(lambda.size()),
        static_cast<long>(lambda.box_k()) * n,
        0,
        0,
        0,
        0,
        Polynomial(n),
        Polynomial(n, std::move(pm)),
        Polynomial(n, std::move(mp)),
        Polynomial(n, std::move(free_lhs)),
        Polynomial(n, std::move(free_rhs)),
        pm_count,
        mp_count,
        false,
        false,
        false,
        false,
        false,
    };
    const long li = i;
    out.c = out.nk - 2 * out.m;
    out.pm_factor = li * (out.nk - out.m - (li - 1));
    out.mp_factor = li * out.m;
    out.difference_factor = li * (out.c - li + 1);

    const auto a = Polynomial::from_monomial(partition_monomial(lambda));
    out.base = operator_power(Op::Delta, i - 1, a);
    out.pm_matches = out.pm_sum == Rational(out.pm_factor) * out.base;
    out.mp_matches = out.mp_sum == Rational(out.mp_factor) * out.base;
    out.difference_matches = out.pm_sum - out.mp_sum == Rational(out.difference_factor) * out.base;
    out.signfree_cancel = out.signfree_lhs == out.signfree_rhs;
    const auto d_delta = apply_D(apply_Delta(out.base));
    const auto delta_d = operator_power(Op::Delta, i, apply_D(a));
    out.operators_agree = d_delta == out.pm_sum + out.signfree_lhs && delta_d == out.mp_sum + out.signfree_rhs;
    return out;
}

} // namespace semiform
