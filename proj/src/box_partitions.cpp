#include <semiform/box_partitions.hpp>

#include <algorithm>
#include <stdexcept>

#include <semiform/errors.hpp>

namespace semiform
{

namespace
{

void enumerate_rec(unsigned k, unsigned n, std::vector<unsigned> &parts, unsigned remaining,
                   std::vector<BoxPartition> &out)
{
    const auto pos = static_cast<unsigned>(parts.size());
    if (pos == k) {
        if (remaining == 0) {
            out.emplace_back(parts, k, n);
        }
        return;
    }
    const unsigned slots = k - pos;
    const unsigned bound = parts.empty() ? n : parts.back();
    for (unsigned v = std::min(bound, remaining) + 1; v-- > 0;) {
        // The remaining slots hold at most v each.
        if (static_cast<unsigned long>(v) * slots < remaining) {
            break;
        }
        parts.push_back(v);
        enumerate_rec(k, n, parts, remaining - v, out);
        parts.pop_back();
    }
}

// p(k, n, m) for 0 <= m <= min(limit, nk) by the recurrence over (rows, width):
// a partition either has fewer than k nonzero parts, or subtracting one from
// every part leaves a partition in a k x (n-1) box.
std::vector<Integer> box_counts(unsigned k, unsigned n, unsigned long limit)
{
    const auto top = std::min<unsigned long>(limit, static_cast<unsigned long>(n) * k);
    // prev[w] holds the table for (rows - 1, w).
    std::vector<std::vector<Integer>> prev(n + 1, std::vector<Integer>{1});
    for (unsigned rows = 1; rows <= k; ++rows) {
        std::vector<std::vector<Integer>> cur(n + 1);
        cur[0] = {1};
        for (unsigned w = 1; w <= n; ++w) {
            const auto len = std::min<unsigned long>(top, static_cast<unsigned long>(w) * rows) + 1;
            std::vector<Integer> row(len);
            const auto &fewer = prev[w];
            const auto &narrower = cur[w - 1];
            for (unsigned long m = 0; m < len; ++m) {
                if (m < fewer.size()) {
                    row[m] = fewer[m];
                }
                if (m >= rows && m - rows < narrower.size()) {
                    row[m] += narrower[m - rows];
                }
            }
            cur[w] = std::move(row);
        }
        prev = std::move(cur);
    }
    return prev[n];
}

} // namespace

std::vector<BoxPartition> enumerate_box_partitions(unsigned k, unsigned n, unsigned m)
{
    std::vector<BoxPartition> out;
    if (static_cast<unsigned long>(n) * k < m) {
        return out;
    }
    std::vector<unsigned> parts;
    parts.reserve(k);
    enumerate_rec(k, n, parts, m, out);
    return out;
}

Integer count_p(unsigned k, unsigned n, long m)
{
    if (m < 0 || static_cast<unsigned long>(m) > static_cast<unsigned long>(n) * k) {
        return 0;
    }
    return box_counts(k, n, static_cast<unsigned long>(m))[static_cast<std::size_t>(m)];
}

std::vector<Integer> gaussian_by_product(unsigned n, unsigned k)
{
    std::vector<Integer> g{1};
    for (unsigned i = 1; i <= k; ++i) {
        // times (1 - q^{n+i})
        std::vector<Integer> num(g.size() + n + i);
        for (std::size_t j = 0; j < g.size(); ++j) {
            num[j] += g[j];
            num[j + n + i] -= g[j];
        }
        // exact division by (1 - q^i): r[j] = num[j] + r[j - i]
        const std::size_t qdeg = static_cast<std::size_t>(n) * i;
        std::vector<Integer> r(qdeg + 1);
        for (std::size_t j = 0; j <= qdeg; ++j) {
            r[j] = num[j];
            if (j >= i) {
                r[j] += r[j - i];
            }
        }
        // r * (1 - q^i) must reproduce num exactly.
        for (std::size_t j = 0; j < num.size(); ++j) {
            Integer back = j < r.size() ? r[j] : Integer(0);
            if (j >= i && j - i < r.size()) {
                back -= r[j - i];
            }
            if (back != num[j]) {
                throw TheoremViolation("q-factorial division is not exact at step " + std::to_string(i));
            }
        }
        g = std::move(r);
    }
    return g;
}

GaussianCoefficient gaussian_coefficient(unsigned n, unsigned k)
{
    auto coeffs = box_counts(k, n, static_cast<unsigned long>(n) * k);
    if (coeffs != gaussian_by_product(n, k)) {
        throw TheoremViolation("Gaussian coefficient self-test failed for n=" + std::to_string(n)
                               + ", k=" + std::to_string(k));
    }
    return {n, k, std::move(coeffs)};
}

Integer delta(unsigned k, unsigned n, unsigned m)
{
    const unsigned long half = static_cast<unsigned long>(n) * k / 2;
    if (m > half) {
        throw std::out_of_range("delta(k,n,m) needs 0 <= m <= floor(nk/2) = " + std::to_string(half) + ", got m="
                                + std::to_string(m));
    }
    const auto p = box_counts(k, n, m);
    return m == 0 ? p[0] : Integer(p[m] - p[m - 1]);
}

DeltaTable delta_table(unsigned n, unsigned k)
{
    const unsigned long half = static_cast<unsigned long>(n) * k / 2;
    const auto p = box_counts(k, n, half);
    DeltaTable t{n, k, {}};
    t.values.reserve(half + 1);
    for (unsigned long m = 0; m <= half; ++m) {
        t.values.push_back(m == 0 ? p[0] : Integer(p[m] - p[m - 1]));
    }
    return t;
}

UnimodalityReport strict_unimodality_report(unsigned n, unsigned k)
{
    if (n < 1 || k < 1) {
        throw std::invalid_argument("unimodality report needs n, k >= 1");
    }
    const auto p = box_counts(k, n, static_cast<unsigned long>(n) * k);
    UnimodalityReport r{n, k, {}, true, true};
    const std::size_t half = static_cast<std::size_t>(n) * k / 2;
    for (std::size_t m = 2; m <= half; ++m) {
        if (p[m] <= p[m - 1]) {
            r.violations.push_back(static_cast<unsigned>(m));
        }
    }
    r.strictly_unimodal = r.violations.empty();
    bool descending = false;
    for (std::size_t m = 1; m < p.size(); ++m) {
        if (p[m] < p[m - 1]) {
            descending = true;
        } else if (p[m] > p[m - 1] && descending) {
            r.unimodal = false;
            break;
        }
    }
    return r;
}

} // namespace semiform
