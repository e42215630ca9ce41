#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include <semiform/box_partitions.hpp>
#include <semiform/diagram_oracle.hpp>
#include <semiform/errors.hpp>
#include <semiform/invariant_space.hpp>
#include <semiform/operators.hpp>
#include <semiform/poly_json.hpp>

namespace semiform::cli
{

namespace
{

using json = nlohmann::json;

struct Outcome {
    Status status = Status::ok;
    json payload;
    // Preformatted output (TSV tables) printed verbatim instead of the payload.
    std::optional<std::string> raw;
};

Outcome verdict(bool ok, json payload)
{
    return {ok ? Status::ok : Status::violation, std::move(payload), std::nullopt};
}

// Small values print as JSON numbers, larger ones as decimal strings.
json integer_json(const Integer &z)
{
    if (z.fits_slong_p()) {
        return z.get_si();
    }
    return z.get_str();
}

json integers_json(const std::vector<Integer> &v)
{
    json out = json::array();
    for (const auto &z : v) {
        out.push_back(integer_json(z));
    }
    return out;
}

json polys_json(const std::vector<Polynomial> &v)
{
    json out = json::array();
    for (const auto &p : v) {
        out.push_back(to_json(p));
    }
    return out;
}

bool is_polynomial(const json &j)
{
    return j.is_object() && j.size() == 2 && j.contains("n") && j.contains("terms");
}

// Every option any subcommand can take; each subcommand binds the ones it uses.
struct Args {
    bool json = false;
    bool timing = false;
    unsigned n = 0;
    unsigned k = 0;
    unsigned m = 0;
    unsigned k1 = 0;
    unsigned k2 = 0;
    unsigned i = 1;
    unsigned pow = 1;
    std::string op = "D";
    std::string dir = "h";
    std::string taylor_dir = "both";
    std::string in;
    std::string poly;
    std::string lambda;
    std::string mode = "all";
    std::string matrix;
    std::string box;
    bool list = false;
    bool table = false;
    bool tsv = false;
    bool monomials = false;
    bool report = false;
    std::optional<unsigned> max_n;
    std::optional<unsigned> max_k;
    std::optional<unsigned> max_i;
    std::optional<unsigned> opt_k;
    std::optional<unsigned> opt_m;
    std::uint64_t seed = 1;
    unsigned count = 200;
};

Polynomial input_polynomial(const Args &a, const CLI::App &app)
{
    if (!a.in.empty()) {
        std::ifstream file(a.in);
        if (!file) {
            throw std::invalid_argument("cannot read " + a.in);
        }
        std::stringstream buffer;
        buffer << file.rdbuf();
        return load_polynomial(buffer.str());
    }
    if (!a.poly.empty()) {
        if (app.count("--n") == 0) {
            throw std::invalid_argument("--poly needs --n");
        }
        return Polynomial::parse(a.n, a.poly);
    }
    throw std::invalid_argument("give a polynomial with --in FILE or --poly TEXT --n N");
}

Op parse_op(const std::string &s)
{
    if (s == "D") {
        return Op::D;
    }
    if (s == "Delta") {
        return Op::Delta;
    }
    throw std::invalid_argument("operator must be D or Delta, got " + s);
}

std::vector<ShearDirection> parse_dirs(const std::string &s, bool allow_both)
{
    if (s == "h") {
        return {ShearDirection::horizontal};
    }
    if (s == "v") {
        return {ShearDirection::vertical};
    }
    if (allow_both && s == "both") {
        return {ShearDirection::horizontal, ShearDirection::vertical};
    }
    throw std::invalid_argument("direction must be h" + std::string(allow_both ? ", v or both" : " or v") + ", got " + s);
}

std::pair<unsigned, unsigned> parse_box(const std::string &s)
{
    const auto x = s.find('x');
    if (x == std::string::npos) {
        throw std::invalid_argument("box must look like KxN, got " + s);
    }
    try {
        std::size_t used_k = 0, used_n = 0;
        const auto k = std::stoul(s.substr(0, x), &used_k);
        const auto n = std::stoul(s.substr(x + 1), &used_n);
        if (used_k != x || used_n != s.size() - x - 1) {
            throw std::invalid_argument(s);
        }
        return {static_cast<unsigned>(k), static_cast<unsigned>(n)};
    } catch (const std::logic_error &) {
        throw std::invalid_argument("box must look like KxN, got " + s);
    }
}

json partition_json(const BoxPartition &lambda)
{
    return lambda.parts();
}

// ---- single computations ----

Outcome cmd_gauss(const Args &a)
{
    return verdict(true, {{"coeffs", integers_json(gaussian_coefficient(a.n, a.k).coeffs)}});
}

Outcome cmd_pcount(const Args &a)
{
    json out = {{"n", a.n}, {"k", a.k}, {"m", a.m}, {"count", integer_json(count_p(a.k, a.n, a.m))}};
    if (a.list) {
        json parts = json::array();
        for (const auto &lambda : enumerate_box_partitions(a.k, a.n, a.m)) {
            parts.push_back(partition_json(lambda));
        }
        out["partitions"] = parts;
    }
    return verdict(true, out);
}

Outcome cmd_delta(const Args &a, const CLI::App &app)
{
    if (a.table) {
        const auto t = delta_table(a.n, a.k);
        if (a.tsv) {
            std::string s = "m\tdelta\n";
            for (std::size_t m = 0; m < t.values.size(); ++m) {
                s += std::to_string(m) + '\t' + t.values[m].get_str() + '\n';
            }
            return {Status::ok, json(), s};
        }
        return verdict(true, {{"n", a.n}, {"k", a.k}, {"values", integers_json(t.values)}});
    }
    if (app.count("--m") == 0) {
        throw std::invalid_argument("delta needs --m or --table");
    }
    return verdict(true, {{"n", a.n}, {"k", a.k}, {"m", a.m}, {"delta", integer_json(delta(a.k, a.n, a.m))}});
}

json report_json(const SylvesterReport &r)
{
    json kernel_expected = integers_json(r.kernel_expected);
    return {{"n", r.sig.n},
            {"k", r.sig.k},
            {"m", r.sig.m},
            {"p", integer_json(r.p_m)},
            {"p_prev", integer_json(r.p_prev)},
            {"delta", integer_json(r.delta)},
            {"rank_D", r.rank_D},
            {"nullity_D", r.nullity_D},
            {"surjective", r.surjective},
            {"rank_Delta", r.rank_Delta},
            {"injective", r.injective},
            {"chain_dims", r.chain_dims},
            {"kernel_dims", r.kernel_dims},
            {"kernel_expected", kernel_expected},
            {"telescopes", r.telescopes},
            {"ok", r.ok()}};
}

Outcome cmd_basis(const Args &a, const CLI::App &app)
{
    if (a.table) {
        const auto rows = dimension_table(a.n, a.k);
        if (a.tsv) {
            return {Status::ok, json(), dimension_table_tsv(rows)};
        }
        json out = json::array();
        bool ok = true;
        for (const auto &r : rows) {
            ok = ok && r.surjective && r.injective && r.nullity == r.delta;
            out.push_back({{"n", r.n},
                           {"k", r.k},
                           {"m", r.m},
                           {"p", integer_json(r.p)},
                           {"delta", integer_json(r.delta)},
                           {"rank", r.rank},
                           {"nullity", r.nullity},
                           {"surjective", r.surjective},
                           {"injective", r.injective}});
        }
        return verdict(ok, {{"rows", out}});
    }
    if (app.count("--m") == 0) {
        throw std::invalid_argument("basis needs --m (or --table)");
    }
    const SpaceSignature sig{a.n, a.k, a.m};
    if (a.monomials) {
        json monos = json::array();
        for (const auto &mono : basis_Q(sig).monomials) {
            monos.push_back(mono.to_string());
        }
        return verdict(true, {{"n", a.n}, {"k", a.k}, {"m", a.m}, {"dimension", monos.size()}, {"monomials", monos}});
    }
    if (!a.matrix.empty()) {
        const auto mat = matrix_of(parse_op(a.matrix), sig);
        json domain = json::array(), codomain = json::array(), entries = json::array();
        for (const auto &mono : mat.domain.monomials) {
            domain.push_back(mono.to_string());
        }
        for (const auto &mono : mat.codomain.monomials) {
            codomain.push_back(mono.to_string());
        }
        for (std::size_t col = 0; col < mat.matrix.columns.size(); ++col) {
            for (const auto &[row, v] : mat.matrix.columns[col]) {
                entries.push_back({row, col, semiform::to_string(v)});
            }
        }
        return verdict(true, {{"op", to_string(mat.op)},
                              {"rows", mat.matrix.rows},
                              {"cols", mat.matrix.cols},
                              {"domain", domain},
                              {"codomain", codomain},
                              {"entries", entries}});
    }
    if (a.report) {
        const auto r = sylvester_report(a.n, a.k, a.m);
        return verdict(r.ok(), report_json(r));
    }
    const auto b = semi_invariant_basis(sig);
    return verdict(true, {{"n", a.n},
                          {"k", a.k},
                          {"m", a.m},
                          {"dimension", b.polynomials.size()},
                          {"in_sylvester_range", b.in_sylvester_range},
                          {"polynomials", polys_json(b.polynomials)}});
}

Outcome cmd_apply(const Args &a, const CLI::App &app)
{
    const auto p = input_polynomial(a, app);
    const Op op = parse_op(a.op);
    return verdict(true, {{"op", to_string(op)}, {"pow", a.pow}, {"result", to_json(operator_power(op, a.pow, p))}});
}

Outcome cmd_shear(const Args &a, const CLI::App &app)
{
    const auto p = input_polynomial(a, app);
    const auto e = shear_expand(p, parse_dirs(a.dir, false).front());
    return verdict(true, {{"direction", to_string(e.direction)}, {"coefficients", polys_json(e.coefficients)}});
}

Outcome cmd_additivity(const Args &a)
{
    const auto w = additivity_witness(a.n, a.k1, a.k2, a.m);
    return verdict(true, {{"n", w.n},
                          {"k1", w.k1},
                          {"k2", w.k2},
                          {"m", w.m},
                          {"m1", w.m1},
                          {"m2", w.m2},
                          {"branch", w.branch},
                          {"first", to_json(w.first)},
                          {"second", to_json(w.second)},
                          {"result", to_json(w.result)}});
}

// ---- verify ----

json taylor_json(const TaylorReport &r, ShearDirection dir)
{
    return {{"direction", to_string(dir)},
            {"ok", r.ok},
            {"powers_checked", r.powers_checked},
            {"first_mismatch", r.first_mismatch ? json(*r.first_mismatch) : json()},
            {"residual", to_json(r.residual)}};
}

Outcome verify_taylor(const Args &a, const CLI::App &app)
{
    const auto p = input_polynomial(a, app);
    json results = json::array();
    bool ok = true;
    for (const auto dir : parse_dirs(a.taylor_dir, true)) {
        const auto r = taylor_check(p, dir);
        ok = ok && r.ok;
        results.push_back(taylor_json(r, dir));
    }
    return verdict(ok, {{"checks", results}});
}

Outcome verify_hilbert(const Args &a, bool second)
{
    const auto lambda = BoxPartition::parse(a.lambda, a.k, a.n);
    const auto residual = second ? second_hilbert_residual(lambda, a.i) : hilbert_commutator_residual(lambda, a.i);
    const SpaceSignature sig{a.n, a.k, lambda.size()};
    return verdict(residual.is_zero(), {{"identity", second ? "second" : "first"},
                                        {"lambda", partition_json(lambda)},
                                        {"n", a.n},
                                        {"k", a.k},
                                        {"m", sig.m},
                                        {"c", sig.c()},
                                        {"i", a.i},
                                        {"residual", to_json(residual)}});
}

Outcome verify_cayley(const Args &a, const CLI::App &app)
{
    const auto p = input_polynomial(a, app);
    const auto h = homogeneity(p);
    if (!h && (!a.opt_k || !a.opt_m)) {
        throw std::invalid_argument("cannot read degree and weight from the input; pass --k and --m");
    }
    const SpaceSignature sig{p.context_n(), a.opt_k.value_or(h ? h->degree : 0), a.opt_m.value_or(h ? h->weight : 0)};
    const bool ok = cayley_check(p, sig, a.i);
    return verdict(ok, {{"n", sig.n}, {"k", sig.k}, {"m", sig.m}, {"c", sig.c()}, {"i", a.i}, {"holds", ok}});
}

struct DiagramModes {
    bool minus;
    bool plus;
    bool census;
};

DiagramModes parse_mode(const std::string &mode)
{
    if (mode == "minus") {
        return {true, false, false};
    }
    if (mode == "plus") {
        return {false, true, false};
    }
    if (mode == "census") {
        return {false, false, true};
    }
    if (mode == "all") {
        return {true, true, true};
    }
    throw std::invalid_argument("mode must be minus, plus, census or all, got " + mode);
}

json diagram_checks(const BoxPartition &lambda, unsigned i, DiagramModes modes, bool &ok)
{
    const auto a = Polynomial::from_monomial(partition_monomial(lambda));
    json out = json::object();
    const Rational fact(factorial(i));
    auto weight_check = [&](MarkMode mark, Op op) {
        const auto sum = oracle_weight_sum(lambda, i, mark);
        const bool match = sum == operator_power(op, i, a) / fact;
        ok = ok && match;
        out[to_string(mark)] = {{"diagrams", enumerate_semi_diagrams(lambda, i, mark).size()},
                                {"weight_sum", to_json(sum)},
                                {"matches_operator", match}};
    };
    if (modes.minus) {
        weight_check(MarkMode::minus, Op::D);
    }
    if (modes.plus) {
        weight_check(MarkMode::plus, Op::Delta);
    }
    // The census is defined for i >= 1 only.
    if (modes.census && i >= 1) {
        const auto c = commutator_census(lambda, i);
        ok = ok && c.ok();
        out["census"] = {{"c", c.c},
                         {"pm_factor", c.pm_factor},
                         {"mp_factor", c.mp_factor},
                         {"difference_factor", c.difference_factor},
                         {"pm_configurations", integer_json(c.pm_configurations)},
                         {"mp_configurations", integer_json(c.mp_configurations)},
                         {"pm_matches", c.pm_matches},
                         {"mp_matches", c.mp_matches},
                         {"difference_matches", c.difference_matches},
                         {"signfree_cancel", c.signfree_cancel},
                         {"operators_agree", c.operators_agree}};
    }
    return out;
}

Outcome verify_diagrams(const Args &a)
{
    const auto lambda = BoxPartition::parse(a.lambda, a.k, a.n);
    bool ok = true;
    json out = {{"lambda", partition_json(lambda)}, {"n", a.n}, {"k", a.k}, {"i", a.i}};
    out.update(diagram_checks(lambda, a.i, parse_mode(a.mode), ok));
    return verdict(ok, out);
}

Outcome verify_semi(const Args &a, const CLI::App &app)
{
    const auto p = input_polynomial(a, app);
    const bool by_op = is_semi_invariant(p, SemiInvariantTest::by_operator);
    const bool by_shear = is_semi_invariant(p, SemiInvariantTest::by_shear);
    // The two characterizations must agree; a plain "no" is not a violation.
    return verdict(by_op == by_shear, {{"semi_invariant", by_op && by_shear}, {"by_operator", by_op}, {"by_shear", by_shear}});
}

// ---- suites ----

struct Tally {
    std::size_t checked = 0;
    std::size_t failed = 0;
    json first_failure;

    void record(bool ok, const std::function<json()> &witness)
    {
        ++checked;
        if (!ok) {
            if (failed == 0) {
                first_failure = witness();
            }
            ++failed;
        }
    }

    Outcome finish(json payload) const
    {
        payload["checked"] = checked;
        payload["passed"] = checked - failed;
        payload["first_failure"] = first_failure;
        return verdict(failed == 0, std::move(payload));
    }
};

unsigned bound(const std::optional<unsigned> &v, unsigned fallback)
{
    return v.value_or(fallback);
}

Outcome suite_sylvester(const Args &a)
{
    const unsigned max_n = bound(a.max_n, 5), max_k = bound(a.max_k, 5);
    Tally t;
    for (unsigned n = 1; n <= max_n; ++n) {
        for (unsigned k = 1; k <= max_k; ++k) {
            for (unsigned m = 0; m <= n * k / 2; ++m) {
                const auto r = analyze_signature({n, k, m});
                t.record(r.ok(), [&] { return report_json(r); });
            }
        }
    }
    return t.finish({{"suite", "sylvester"}, {"max_n", max_n}, {"max_k", max_k}});
}

// Boxes from --box KxN, or every box up to --max-k x --max-n.
std::vector<std::pair<unsigned, unsigned>> boxes(const Args &a, unsigned default_max)
{
    if (!a.box.empty()) {
        return {parse_box(a.box)};
    }
    std::vector<std::pair<unsigned, unsigned>> out;
    for (unsigned k = 1; k <= bound(a.max_k, default_max); ++k) {
        for (unsigned n = 1; n <= bound(a.max_n, default_max); ++n) {
            out.emplace_back(k, n);
        }
    }
    return out;
}

json bounds_json(const Args &a, unsigned default_max)
{
    if (!a.box.empty()) {
        return a.box;
    }
    return {{"max_k", bound(a.max_k, default_max)}, {"max_n", bound(a.max_n, default_max)}};
}

Outcome suite_hilbert(const Args &a)
{
    Tally t;
    for (const auto &[k, n] : boxes(a, 4)) {
        for (unsigned m = 0; m <= n * k; ++m) {
            for (const auto &lambda : enumerate_box_partitions(k, n, m)) {
                const unsigned top = a.max_i ? *a.max_i : m + 2;
                for (unsigned i = 1; i <= top; ++i) {
                    for (const bool second : {false, true}) {
                        const auto r = second ? second_hilbert_residual(lambda, i) : hilbert_commutator_residual(lambda, i);
                        t.record(r.is_zero(), [&]() -> json {
                            return {{"identity", second ? "second" : "first"},
                                    {"lambda", partition_json(lambda)},
                                    {"k", k},
                                    {"n", n},
                                    {"i", i},
                                    {"residual", to_json(r)}};
                        });
                    }
                }
            }
        }
    }
    json payload = {{"suite", "hilbert"}, {"bounds", bounds_json(a, 4)}};
    payload["max_i"] = a.max_i ? json(*a.max_i) : json("m+2");
    return t.finish(payload);
}

// Random homogeneous polynomial of degree k and weight m. Uses the raw engine
// output only, so the sequence is identical on every platform.
Polynomial random_polynomial(std::mt19937_64 &rng, unsigned n, unsigned k, unsigned m)
{
    Polynomial::TermMap terms;
    for (const auto &lambda : enumerate_box_partitions(k, n, m)) {
        if (rng() % 3 == 0) {
            continue;
        }
        const long num = static_cast<long>(rng() % 11) - 5;
        const long den = 1 + static_cast<long>(rng() % 3);
        Rational c{Integer(num), Integer(den)};
        c.canonicalize();
        accumulate_term(terms, partition_monomial(lambda), c);
    }
    return Polynomial(n, std::move(terms));
}

Outcome suite_taylor(const Args &a)
{
    const unsigned max_n = bound(a.max_n, 5), max_k = bound(a.max_k, 5);
    if (max_n == 0) {
        throw std::invalid_argument("suite taylor needs --max-n >= 1");
    }
    std::mt19937_64 rng(a.seed);
    Tally t;
    for (unsigned trial = 0; trial < a.count; ++trial) {
        const unsigned n = 1 + static_cast<unsigned>(rng() % max_n);
        const unsigned k = static_cast<unsigned>(rng() % (max_k + 1));
        const unsigned m = static_cast<unsigned>(rng() % (n * k + 1));
        const auto p = random_polynomial(rng, n, k, m);
        for (const auto dir : {ShearDirection::horizontal, ShearDirection::vertical}) {
            const auto r = taylor_check(p, dir);
            t.record(r.ok, [&]() -> json { return {{"polynomial", to_json(p)}, {"check", taylor_json(r, dir)}}; });
        }
    }
    return t.finish({{"suite", "taylor"}, {"seed", a.seed}, {"count", a.count}, {"max_n", max_n}, {"max_k", max_k}});
}

Outcome suite_diagrams(const Args &a)
{
    const unsigned max_i = bound(a.max_i, 4);
    Tally t;
    for (const auto &[k, n] : boxes(a, 3)) {
        for (unsigned m = 0; m <= n * k; ++m) {
            for (const auto &lambda : enumerate_box_partitions(k, n, m)) {
                for (unsigned i = 0; i <= n * k; ++i) {
                    bool ok = true;
                    const auto checks = diagram_checks(lambda, i, {true, true, i <= max_i}, ok);
                    t.record(ok, [&]() -> json {
                        json w = {{"lambda", partition_json(lambda)}, {"k", k}, {"n", n}, {"i", i}};
                        w.update(checks);
                        return w;
                    });
                }
            }
        }
    }
    return t.finish({{"suite", "diagrams"}, {"bounds", bounds_json(a, 3)}, {"census_max_i", max_i}});
}

Outcome suite_unimodality(const Args &a, const CLI::App &app)
{
    if (app.count("--n") == 0 || app.count("--k") == 0) {
        throw std::invalid_argument("suite unimodality needs --n and --k");
    }
    const unsigned max_n = bound(a.max_n, a.n), max_k = bound(a.max_k, a.k);
    Tally t;
    json strict = json::array();
    for (unsigned n = a.n; n <= max_n; ++n) {
        for (unsigned k = a.k; k <= max_k; ++k) {
            const auto r = strict_unimodality_report(n, k);
            t.record(r.strictly_unimodal, [&]() -> json {
                return {{"n", n}, {"k", k}, {"m", r.violations.front()}, {"violations", r.violations}, {"unimodal", r.unimodal}};
            });
        }
    }
    return t.finish({{"suite", "unimodality"}, {"n", a.n}, {"k", a.k}, {"max_n", max_n}, {"max_k", max_k}});
}

// ---- text rendering ----

bool is_scalar_like(const json &j)
{
    if (j.is_primitive() || is_polynomial(j)) {
        return true;
    }
    if (j.is_array()) {
        return std::all_of(j.begin(), j.end(), [](const json &x) { return x.is_primitive(); });
    }
    return false;
}

std::string scalar_text(const json &j)
{
    if (j.is_string()) {
        return j.get<std::string>();
    }
    if (j.is_null()) {
        return "-";
    }
    if (is_polynomial(j)) {
        return polynomial_from_json(j).to_string();
    }
    if (j.is_array()) {
        std::string s = "[";
        for (std::size_t i = 0; i < j.size(); ++i) {
            s += (i ? "," : "") + scalar_text(j[i]);
        }
        return s + "]";
    }
    return j.dump();
}

void render(const json &j, std::size_t indent, std::ostringstream &out)
{
    const std::string pad(indent, ' ');
    if (is_scalar_like(j)) {
        out << pad << scalar_text(j) << '\n';
        return;
    }
    if (j.is_object()) {
        std::size_t width = 0;
        for (const auto &[key, value] : j.items()) {
            width = std::max(width, key.size());
        }
        for (const auto &[key, value] : j.items()) {
            if (is_scalar_like(value)) {
                out << pad << std::left << std::setw(static_cast<int>(width)) << key << "  " << scalar_text(value) << '\n';
            } else {
                out << pad << key << '\n';
                render(value, indent + 2, out);
            }
        }
        return;
    }
    // Arrays of flat objects become aligned tables; anything else is listed.
    const bool table = !j.empty() && std::all_of(j.begin(), j.end(), [&](const json &row) {
        if (!row.is_object() || is_polynomial(row) || row.size() != j.front().size()) {
            return false;
        }
        return std::all_of(row.begin(), row.end(), [](const json &x) { return is_scalar_like(x) && !is_polynomial(x); });
    });
    if (table) {
        std::vector<std::string> keys;
        for (const auto &[key, value] : j.front().items()) {
            keys.push_back(key);
        }
        std::vector<std::size_t> width(keys.size());
        for (std::size_t c = 0; c < keys.size(); ++c) {
            width[c] = keys[c].size();
            for (const auto &row : j) {
                width[c] = std::max(width[c], scalar_text(row.value(keys[c], json())).size());
            }
        }
        auto line = [&](const std::function<std::string(std::size_t)> &cell) {
            std::string s = pad;
            for (std::size_t c = 0; c < keys.size(); ++c) {
                std::string v = cell(c);
                if (c + 1 < keys.size()) {
                    v.resize(width[c] + 2, ' ');
                }
                s += v;
            }
            out << s << '\n';
        };
        line([&](std::size_t c) { return keys[c]; });
        for (const auto &row : j) {
            line([&](std::size_t c) { return scalar_text(row.value(keys[c], json())); });
        }
        return;
    }
    for (const auto &item : j) {
        if (is_scalar_like(item)) {
            out << pad << scalar_text(item) << '\n';
        } else {
            out << pad << "-\n";
            render(item, indent + 2, out);
        }
    }
}

int exit_code_for(Status s)
{
    return s == Status::ok ? 0 : s == Status::violation ? 1 : 4;
}

} // namespace

std::string to_string(Status status)
{
    switch (status) {
    case Status::ok:
        return "ok";
    case Status::violation:
        return "violation";
    case Status::error:
        return "error";
    }
    return "error";
}

std::string render_text(const nlohmann::json &payload)
{
    std::ostringstream out;
    render(payload, 0, out);
    return out.str();
}

CommandResult dispatch(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    const auto start = std::chrono::steady_clock::now();
    Args a;
    CLI::App app{"Semi-invariants of binary forms: exact computation and verification", "semiform"};
    app.require_subcommand(1);

    std::vector<std::pair<CLI::App *, std::function<Outcome()>>> actions;
    auto leaf = [&](CLI::App *parent, const std::string &name, const std::string &help) {
        auto *sub = parent->add_subcommand(name, help);
        sub->add_flag("--json", a.json, "Print the JSON payload");
        sub->add_flag("--timing", a.timing, "Report elapsed time on stderr");
        return sub;
    };
    auto nk = [&](CLI::App *sub, bool required) {
        sub->add_option("--n", a.n, "Form degree n")->required(required);
        sub->add_option("--k", a.k, "Degree k (box rows)")->required(required);
    };
    auto polynomial_in = [&](CLI::App *sub) {
        sub->add_option("--in", a.in, "Polynomial JSON file");
        sub->add_option("--poly", a.poly, "Polynomial text such as \"a0*a2 - a1^2\" (needs --n)");
        sub->add_option("--n", a.n, "Form degree n for --poly");
    };

    {
        auto *s = leaf(&app, "gauss", "Coefficients of the Gaussian polynomial [n+k choose k]");
        nk(s, true);
        actions.emplace_back(s, [&] { return cmd_gauss(a); });
    }
    {
        auto *s = leaf(&app, "pcount", "Number of partitions of m in a k x n box");
        nk(s, true);
        s->add_option("--m", a.m, "Weight m")->required();
        s->add_flag("--list", a.list, "Also list the partitions");
        actions.emplace_back(s, [&] { return cmd_pcount(a); });
    }
    {
        auto *s = leaf(&app, "delta", "delta(k,n,m) = p(k,n,m) - p(k,n,m-1)");
        nk(s, true);
        s->add_option("--m", a.m, "Weight m");
        s->add_flag("--table", a.table, "All m up to nk/2");
        s->add_flag("--tsv", a.tsv, "Print the table as TSV");
        actions.emplace_back(s, [&a, s] { return cmd_delta(a, *s); });
    }
    {
        auto *s = leaf(&app, "basis", "Semi-invariant basis of S_n(k,m) and related matrices");
        nk(s, true);
        s->add_option("--m", a.m, "Weight m");
        s->add_flag("--monomials", a.monomials, "Monomial basis of Q_n(k,m) instead");
        s->add_option("--matrix", a.matrix, "Matrix of D or Delta on Q_n(k,m)");
        s->add_flag("--report", a.report, "Rank, nullity and dimension chain");
        s->add_flag("--table", a.table, "Dimension table for all m up to nk/2");
        s->add_flag("--tsv", a.tsv, "Print the dimension table as TSV");
        actions.emplace_back(s, [&a, s] { return cmd_basis(a, *s); });
    }
    {
        auto *s = leaf(&app, "apply", "Apply D or Delta a number of times");
        polynomial_in(s);
        s->add_option("--op", a.op, "D or Delta");
        s->add_option("--pow", a.pow, "Number of applications");
        actions.emplace_back(s, [&a, s] { return cmd_apply(a, *s); });
    }
    {
        auto *s = leaf(&app, "shear", "Coefficients of z^i after a shear substitution");
        polynomial_in(s);
        s->add_option("--dir", a.dir, "h (horizontal) or v (vertical)");
        actions.emplace_back(s, [&a, s] { return cmd_shear(a, *s); });
    }
    {
        auto *verify = app.add_subcommand("verify", "Check one identity on one input");
        verify->require_subcommand(1);
        auto *s = leaf(verify, "taylor", "Shear expansion against op^i(p)/i!");
        polynomial_in(s);
        s->add_option("--dir", a.taylor_dir, "h, v or both");
        actions.emplace_back(s, [&a, s] { return verify_taylor(a, *s); });

        for (const bool second : {false, true}) {
            auto *h = leaf(verify, second ? "hilbert2" : "hilbert",
                           second ? "Residual of D^i Delta - Delta D^i = i(c+i-1) D^(i-1) on a_lambda"
                                  : "Residual of D Delta^i - Delta^i D = i(c-i+1) Delta^(i-1) on a_lambda");
            nk(h, true);
            h->add_option("--lambda", a.lambda, "Comma-separated parts")->required();
            h->add_option("--i", a.i, "Power i >= 1");
            actions.emplace_back(h, [&a, second] { return verify_hilbert(a, second); });
        }

        auto *c = leaf(verify, "cayley", "D Delta^i(I) = i(c-i+1) Delta^(i-1)(I) for a semi-invariant I");
        polynomial_in(c);
        c->add_option("--i", a.i, "Power i >= 1");
        c->add_option("--k", a.opt_k, "Degree (read from the input by default)");
        c->add_option("--m", a.opt_m, "Weight (read from the input by default)");
        actions.emplace_back(c, [&a, c] { return verify_cayley(a, *c); });

        auto *d = leaf(verify, "diagrams", "Semi-diagram weight sums and the commutator census");
        nk(d, true);
        d->add_option("--lambda", a.lambda, "Comma-separated parts")->required();
        d->add_option("--i", a.i, "Number of marks");
        d->add_option("--mode", a.mode, "minus, plus, census or all");
        actions.emplace_back(d, [&] { return verify_diagrams(a); });

        auto *semi = leaf(verify, "semi", "Semi-invariance by D and by the shear");
        polynomial_in(semi);
        actions.emplace_back(semi, [&a, semi] { return verify_semi(a, *semi); });
    }
    {
        auto *suite = app.add_subcommand("suite", "Batch verification over a range");
        suite->require_subcommand(1);
        auto grid = [&](CLI::App *s) {
            s->add_option("--max-n", a.max_n, "Largest n");
            s->add_option("--max-k", a.max_k, "Largest k");
        };
        auto *s = leaf(suite, "sylvester", "Rank, nullity, injectivity and chains for all n,k,m");
        grid(s);
        actions.emplace_back(s, [&] { return suite_sylvester(a); });

        auto *h = leaf(suite, "hilbert", "Both Hilbert identities on every partition");
        grid(h);
        h->add_option("--box", a.box, "Single KxN box");
        h->add_option("--max-i", a.max_i, "Largest i (default m+2)");
        actions.emplace_back(h, [&] { return suite_hilbert(a); });

        auto *t = leaf(suite, "taylor", "Taylor check on seeded random polynomials");
        grid(t);
        t->add_option("--seed", a.seed, "Generator seed");
        t->add_option("--count", a.count, "Number of polynomials");
        actions.emplace_back(t, [&] { return suite_taylor(a); });

        auto *d = leaf(suite, "diagrams", "Diagram oracle and census on every partition");
        grid(d);
        d->add_option("--box", a.box, "Single KxN box");
        d->add_option("--max-i", a.max_i, "Largest i for the census");
        actions.emplace_back(d, [&] { return suite_diagrams(a); });

        auto *u = leaf(suite, "unimodality", "Strict unimodality of Gaussian coefficients");
        nk(u, false);
        grid(u);
        actions.emplace_back(u, [&a, u] { return suite_unimodality(a, *u); });
    }
    {
        auto *s = leaf(&app, "additivity", "Semi-invariant of degree k1+k2 and weight m built from products");
        s->add_option("--n", a.n)->required();
        s->add_option("--k1", a.k1)->required();
        s->add_option("--k2", a.k2)->required();
        s->add_option("--m", a.m)->required();
        actions.emplace_back(s, [&] { return cmd_additivity(a); });
    }

    CommandResult result;
    auto finish = [&](Status status, int code) {
        result.status = status;
        result.exit_code = code;
        result.timing_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        if (a.timing) {
            err << "status " << to_string(status) << ", " << std::fixed << std::setprecision(1) << result.timing_ms
                << " ms\n";
        }
        return result;
    };

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return finish(Status::ok, 0);
    } catch (const CLI::ParseError &e) {
        // Subcommand help requests also arrive here with a zero exit code.
        if (e.get_exit_code() == 0) {
            for (auto &[sub, action] : actions) {
                if (sub->parsed()) {
                    out << sub->help();
                    return finish(Status::ok, 0);
                }
            }
            out << app.help();
            return finish(Status::ok, 0);
        }
        err << "error: " << e.what() << "\n\n" << app.help();
        return finish(Status::error, 2);
    }

    for (auto &[sub, action] : actions) {
        if (!sub->parsed()) {
            continue;
        }
        try {
            auto outcome = action();
            result.payload = outcome.payload;
            if (outcome.raw) {
                out << *outcome.raw;
            } else if (a.json) {
                out << outcome.payload.dump() << '\n';
            } else {
                out << render_text(outcome.payload);
            }
            if (outcome.status == Status::violation) {
                err << "violation\n";
            }
            return finish(outcome.status, exit_code_for(outcome.status));
        } catch (const CapacityError &e) {
            err << "capacity: " << e.what() << '\n';
            return finish(Status::error, 3);
        } catch (const TheoremViolation &e) {
            result.payload = {{"violation", e.what()}};
            if (a.json) {
                out << result.payload.dump() << '\n';
            }
            err << "violation: " << e.what() << '\n';
            return finish(Status::violation, 1);
        } catch (const std::exception &e) {
            err << "error: " << e.what() << '\n';
            return finish(Status::error, 4);
        }
    }
    err << app.help();
    return finish(Status::error, 2);
}

} // namespace semiform::cli
