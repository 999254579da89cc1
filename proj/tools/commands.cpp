#include "commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "bilinear/decomposition.hpp"
#include "bilinear/errors.hpp"
#include "bilinear/group_algebra.hpp"
#include "bilinear/kernels.hpp"
#include "bilinear/random.hpp"
#include "bilinear/serialize.hpp"
#include "bilinear/tensor_lab.hpp"

namespace bilinear::cli {

namespace {

struct UsageError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

struct Options
{
    std::string kind;
    std::size_t n = 4;
    std::size_t max_n = 16;
    std::size_t pairs = 1;
    std::string levels;
    std::string f = "-1,0";
    std::size_t trials = 100;
    std::uint64_t seed = 0;
    std::optional<double> tol;
    std::string out;
    std::string preset;
    std::string variant = "f";
    std::string builder;
    bool ottaviani = false;
    std::string decomposition;
    std::string matrix;
    std::string vector;
};

double parse_double(std::string const& text, std::string const& what)
{
    double value = 0.0;
    auto const* first = text.data();
    auto const* last = text.data() + text.size();
    auto const [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
    {
        throw UsageError("invalid " + what + " '" + text + "'");
    }
    return value;
}

Complex parse_f(std::string const& text)
{
    auto const comma = text.find(',');
    if (comma == std::string::npos)
    {
        return {parse_double(text, "--f"), 0.0};
    }
    return {parse_double(text.substr(0, comma), "--f"), parse_double(text.substr(comma + 1), "--f")};
}

double default_tolerance(bool loose)
{
    if (char const* env = std::getenv("BILINEAR_KERNELS_TOL"); env != nullptr && *env != '\0')
    {
        double const tol = parse_double(env, "BILINEAR_KERNELS_TOL");
        if (!(tol > 0.0))
        {
            throw UsageError("BILINEAR_KERNELS_TOL must be positive");
        }
        return tol;
    }
    return loose ? 1e-7 : 1e-8;
}

double tolerance(Options const& o, bool loose)
{
    if (o.tol)
    {
        if (!(*o.tol > 0.0))
        {
            throw UsageError("--tol must be positive");
        }
        return *o.tol;
    }
    return default_tolerance(loose);
}

std::string read_file(std::string const& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
    {
        throw UsageError("cannot read '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string sci(double v)
{
    std::ostringstream s;
    s << std::scientific << std::setprecision(3) << v;
    return s.str();
}

double relative_error(TrackedSpan fast, TrackedSpan ref)
{
    double diff = 0.0;
    double scale = 0.0;
    for (std::size_t i = 0; i < ref.size(); ++i)
    {
        diff = std::max(diff, std::abs(fast[i].value() - ref[i].value()));
        scale = std::max(scale, std::abs(ref[i].value()));
    }
    return diff / std::max(scale, 1e-300);
}

Shape level_shape(std::string const& item, Complex f)
{
    auto const colon = item.find(':');
    if (colon == std::string::npos)
    {
        throw UsageError("level '" + item + "' must look like kind:n");
    }
    Kind const kind = parse_kind(item.substr(0, colon));
    auto const n = static_cast<std::size_t>(parse_double(item.substr(colon + 1), "level order"));
    if (n == 0)
    {
        throw UsageError("level orders must be positive");
    }
    return kind == Kind::FCirculant ? make_f_circulant_shape(n, f) : make_shape(kind, n);
}

Shape cli_shape(Options const& o, InputGenerator& gen)
{
    Complex const f = parse_f(o.f);
    if (!o.levels.empty())
    {
        std::vector<Shape> levels;
        std::stringstream items(o.levels);
        for (std::string item; std::getline(items, item, ',');)
        {
            levels.push_back(level_shape(item, f));
        }
        return make_multilevel_shape(std::move(levels));
    }
    if (o.kind.empty())
    {
        throw UsageError("--kind or --levels is required");
    }
    if (o.n == 0)
    {
        throw UsageError("--n must be positive");
    }
    Kind const kind = parse_kind(o.kind);
    switch (kind)
    {
        case Kind::FCirculant:
            return make_f_circulant_shape(o.n, f);
        case Kind::Sparse:
        {
            std::vector<SparsityPattern::Entry> entries;
            for (std::size_t i = 0; i < o.n; ++i)
            {
                for (std::size_t j = 0; j < o.n; ++j)
                {
                    if (gen.uniform() >= 0.0)
                    {
                        entries.emplace_back(i, j);
                    }
                }
            }
            return make_sparse_shape(SparsityPattern(o.n, o.n, std::move(entries)));
        }
        case Kind::Multilevel:
            throw UsageError("use --levels for multilevel matrices");
        default:
            return make_shape(kind, o.n);
    }
}

std::string describe(Shape const& shape)
{
    if (shape.kind != Kind::Multilevel)
    {
        return std::string(kind_name(shape.kind));
    }
    std::string text = "multilevel(";
    for (std::size_t i = 0; i < shape.levels.size(); ++i)
    {
        text += (i ? "," : "") + std::string(kind_name(shape.levels[i].kind)) + ":"
                + std::to_string(shape.levels[i].n);
    }
    return text + ")";
}

bool is_loose(Shape const& shape)
{
    double const af = std::abs(shape.f);
    bool const extreme_f = shape.kind == Kind::FCirculant && (af < 0.1 || af > 10.0);
    return shape.kind == Kind::Multilevel || extreme_f;
}

int cmd_verify(Options const& o, std::ostream& out)
{
    if (o.trials == 0)
    {
        throw UsageError("--trials must be positive");
    }
    InputGenerator gen(o.seed);
    Shape const shape = cli_shape(o, gen);
    double const tol = tolerance(o, is_loose(shape));
    double max_error = 0.0;
    std::uint64_t fast = 0;
    std::uint64_t naive = 0;
    bool stable_count = true;
    for (std::size_t trial = 0; trial < o.trials; ++trial)
    {
        StructuredMatrix const m = gen.matrix(shape);
        TrackedVector const x = gen.variables(shape.n);
        KernelReport const report = run_kernel(m, x);
        CountContext ctx;
        TrackedVector const ref = naive_matvec(densify(m), x, ctx);
        max_error = std::max(max_error, relative_error(report.output, ref));
        if (trial > 0 && report.counts.bilinear_mults != fast)
        {
            stable_count = false;
        }
        fast = report.counts.bilinear_mults;
        naive = ctx.bilinear_mults();
    }
    std::uint64_t const formula = formula_count(shape);
    bool const pass = max_error < tol && stable_count && fast == formula;
    out << "structure: " << describe(shape) << '\n'
        << "n: " << shape.n << '\n'
        << "trials: " << o.trials << '\n'
        << "max relative error: " << sci(max_error) << '\n'
        << "tolerance: " << sci(tol) << '\n'
        << "fast count: " << fast << '\n'
        << "naive count: " << naive << '\n'
        << "formula count: " << formula << '\n'
        << "result: " << (pass ? "PASS" : "FAIL") << '\n';
    return pass ? exit_pass : exit_fail;
}

struct Row
{
    std::string structure;
    std::string n;
    std::uint64_t fast = 0;
    std::string naive;
    std::uint64_t formula = 0;
};

Row kernel_row(std::string name, Shape const& shape, InputGenerator& gen, bool starred)
{
    StructuredMatrix const m = gen.matrix(shape);
    TrackedVector const x = gen.variables(shape.n);
    KernelReport const report = run_kernel(m, x);
    CountContext ctx;
    naive_matvec(densify(m), x, ctx);
    std::string naive = std::to_string(ctx.bilinear_mults()) + (starred ? "*" : "");
    return {std::move(name), std::to_string(shape.n), report.counts.bilinear_mults, naive, report.formula_count};
}

std::vector<Row> count_rows(Options const& o)
{
    InputGenerator gen(o.seed);
    Complex const f = parse_f(o.f);
    std::vector<std::pair<std::string, Kind>> const kinds{{"circulant", Kind::Circulant},
                                                          {"f_circulant", Kind::FCirculant},
                                                          {"toeplitz", Kind::Toeplitz},
                                                          {"hankel", Kind::Hankel},
                                                          {"triangular_toeplitz", Kind::UpperTriangularToeplitz},
                                                          {"tph", Kind::ToeplitzPlusHankel},
                                                          {"symmetric", Kind::Symmetric},
                                                          {"skew_symmetric", Kind::SkewSymmetric}};
    std::vector<Row> rows;
    for (auto const& [name, kind] : kinds)
    {
        for (std::size_t n = 1; n <= o.max_n; ++n)
        {
            Shape const shape = kind == Kind::FCirculant ? make_f_circulant_shape(n, f) : make_shape(kind, n);
            rows.push_back(kernel_row(name, shape, gen, kind == Kind::SkewSymmetric));
        }
    }
    for (std::size_t n = 1; n <= o.max_n; ++n)
    {
        TrackedVector const t = gen.variables(2 * n - 1);
        TrackedMatrix const y = gen.dense(n, n);
        CountContext fast;
        toeplitz_matmul(t, y, fast);
        CountContext naive;
        naive_matmul(densify({make_shape(Kind::Toeplitz, n), t}), y, naive);
        rows.push_back({"toeplitz_matmul",
                        std::to_string(n),
                        fast.bilinear_mults(),
                        std::to_string(naive.bilinear_mults()),
                        n * (2 * n - 1)});
    }
    std::size_t const block_max = std::min<std::size_t>(o.max_n, 5);
    for (std::size_t n = 1; n <= block_max; ++n)
    {
        for (std::size_t k = 1; k <= block_max; ++k)
        {
            Shape const shape = make_multilevel_shape({make_shape(Kind::Toeplitz, n), make_shape(Kind::Toeplitz, k)});
            Row row = kernel_row("bttb", shape, gen, false);
            row.n = std::to_string(n) + "x" + std::to_string(k);
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

int cmd_count_table(Options const& o, std::ostream& out)
{
    if (o.max_n == 0)
    {
        throw UsageError("--max-n must be positive");
    }
    std::vector<Row> const rows = count_rows(o);
    std::ostringstream csv;
    csv << "structure,n,fast_mults,naive_mults,formula,match\n";
    bool all = true;
    for (Row const& row : rows)
    {
        bool const match = row.fast == row.formula;
        all = all && match;
        csv << row.structure << ',' << row.n << ',' << row.fast << ',' << row.naive << ',' << row.formula
            << ',' << (match ? "true" : "false") << '\n';
    }
    if (o.out.empty())
    {
        out << csv.str();
    }
    else
    {
        std::ofstream file(o.out, std::ios::binary);
        file << csv.str();
        if (!file)
        {
            throw UsageError("cannot write '" + o.out + "'");
        }
        out << "wrote " << rows.size() << " rows to " << o.out << '\n';
    }
    return all ? exit_pass : exit_fail;
}

std::string triple(Dims3 const& d)
{
    return "(" + std::to_string(d[0]) + "," + std::to_string(d[1]) + "," + std::to_string(d[2]) + ")";
}

void report_ottaviani(Tensor3 const& t, std::ostream& out)
{
    if (t.dims() != Dims3{3, 3, 3})
    {
        throw UsageError("--ottaviani needs a 3x3x3 tensor");
    }
    OttavianiReport const r = ottaviani_test(t);
    out << "ottaviani |det|: " << sci(r.det_magnitude) << '\n';
    out << (r.nonsingular ? "border rank >= 5\n" : "ottaviani matrix singular: no bound beyond flattenings\n");
}

int verify_file(Tensor3 const& t, Options const& o, std::ostream& out)
{
    TensorDecomposition const d = parse_decomposition(read_file(o.decomposition));
    VerifyReport const r = verify_decomposition(t, d, tolerance(o, false));
    out << "decomposition terms: " << r.term_count << '\n'
        << "max abs error: " << sci(r.max_abs_error) << '\n'
        << "verify: " << (r.pass ? "pass" : "fail") << '\n';
    return r.pass ? exit_pass : exit_fail;
}

int cmd_tensor(Options const& o, std::ostream& out)
{
    if (!o.builder.empty())
    {
        Tensor3 const t = build_structure_tensor(o.builder);
        Dims3 const ranks = flattening_ranks(t);
        out << "tensor: " << o.builder << '\n'
            << "dims: " << triple(t.dims()) << '\n'
            << "flattening ranks: " << triple(ranks) << '\n'
            << "rank lower bound: " << *std::max_element(ranks.begin(), ranks.end()) << '\n';
        if (o.ottaviani)
        {
            report_ottaviani(t, out);
        }
        return o.decomposition.empty() ? exit_pass : verify_file(t, o, out);
    }

    InputGenerator gen(o.seed);
    Shape const shape = cli_shape(o, gen);
    Tensor3 const t = structure_tensor(shape);
    Dims3 const ranks = flattening_ranks(t);
    out << "structure: " << describe(shape) << '\n'
        << "n: " << shape.n << '\n'
        << "dims: " << triple(t.dims()) << '\n'
        << "structure dimension: " << structure_dimension(shape) << '\n'
        << "flattening ranks: " << triple(ranks) << '\n';
    if (o.ottaviani)
    {
        report_ottaviani(t, out);
    }
    if (!o.decomposition.empty())
    {
        return verify_file(t, o, out);
    }

    double const tol = o.tol ? tolerance(o, false) : 1e-8;
    TensorDecomposition const d = extract_decomposition(shape);
    VerifyReport const r = verify_decomposition(t, d, tol);
    out << "kernel terms: " << r.term_count << '\n'
        << "verify: " << (r.pass ? "pass" : "fail") << " (max abs error " << sci(r.max_abs_error) << ")\n";
    std::size_t upper = r.pass ? r.term_count : 0;

    if (shape.kind == Kind::ToeplitzPlusHankel && shape.n >= 2)
    {
        std::size_t const n = shape.n;
        auto const kernel = [n](TrackedSpan p, TrackedSpan x, CountContext& ctx) {
            return tph_matvec_tight(p.first(2 * n - 1), p.subspan(2 * n - 1), x, ctx);
        };
        TensorDecomposition const tight = to_decomposition(probe_program(param_count(shape), n, kernel));
        VerifyReport const rt = verify_decomposition(t, tight, tol);
        out << "tight kernel terms: " << rt.term_count << '\n'
            << "tight verify: " << (rt.pass ? "pass" : "fail") << " (max abs error " << sci(rt.max_abs_error)
            << ")\n";
        if (rt.pass && (upper == 0 || rt.term_count < upper))
        {
            upper = rt.term_count;
        }
    }

    std::size_t const lower = *std::max_element(ranks.begin(), ranks.end());
    if (upper != 0 && upper == lower)
    {
        out << "rank certified = " << upper << '\n';
        return exit_pass;
    }
    if (upper == 0)
    {
        out << "rank lower bound: " << lower << " (no verified decomposition)\n";
    }
    else
    {
        out << "rank bounds: " << lower << " <= rank <= " << upper << '\n';
    }
    return exit_fail;
}

std::string fixed(double v, int digits)
{
    std::ostringstream s;
    s << std::fixed << std::setprecision(digits) << v;
    return s.str();
}

int cmd_stability(Options const& o, std::ostream& out)
{
    if (!o.decomposition.empty())
    {
        TensorDecomposition const d = parse_decomposition(read_file(o.decomposition));
        out << o.decomposition << ": " << fixed(stability_measure(d), 10) << '\n';
        return exit_pass;
    }
    std::vector<std::string> names{"usual", "gauss", "cube"};
    if (!o.preset.empty())
    {
        names = {o.preset};
    }
    Tensor3 const mu = complex_mul_tensor();
    bool all = true;
    for (auto const& name : names)
    {
        TensorDecomposition const d = named_decomposition(name);
        VerifyReport const r = verify_decomposition(mu, d, o.tol ? tolerance(o, false) : 1e-9);
        all = all && r.pass;
        out << name << ": " << fixed(stability_measure(d), 10) << " (" << r.term_count << " terms, "
            << (r.pass ? "verifies" : "does not verify") << ")\n";
    }
    return all ? exit_pass : exit_fail;
}

int cmd_tpp(Options const& o, std::ostream& out)
{
    if (o.preset.empty())
    {
        throw UsageError("--preset is required (d4-222 or cyclic-1n1)");
    }
    TppPreset const p = tpp_preset(o.preset, o.n);
    bool const holds = tpp_check(p.group, p.s, p.t, p.u);
    out << "preset: " << p.name << '\n'
        << "group order: " << p.group.order() << '\n'
        << "sizes: " << p.s.size() << "," << p.t.size() << "," << p.u.size() << '\n'
        << "tpp: " << (holds ? "true" : "false") << '\n';
    if (!holds)
    {
        return exit_fail;
    }
    double const tol = o.tol ? tolerance(o, false) : 1e-9;
    InputGenerator gen(o.seed);
    double max_error = 0.0;
    for (std::size_t trial = 0; trial < o.trials; ++trial)
    {
        TrackedMatrix const a = gen.dense(p.s.size(), p.t.size());
        TrackedMatrix const b = gen.dense(p.t.size(), p.u.size());
        CountContext ctx;
        TrackedMatrix const c = cu_matmul(p.group, p.s, p.t, p.u, a, b, ctx);
        CountContext scratch;
        max_error = std::max(max_error, relative_error(c.entries(), naive_matmul(a, b, scratch).entries()));
    }
    bool const pass = max_error <= tol;
    out << "embedded products: " << o.trials << '\n'
        << "max relative error: " << sci(max_error) << '\n'
        << "result: " << (pass ? "PASS" : "FAIL") << '\n';
    return pass ? exit_pass : exit_fail;
}

int cmd_simul(Options const& o, std::ostream& out)
{
    Variant variant = Variant::F;
    if (o.variant == "g")
    {
        variant = Variant::G;
    }
    else if (o.variant != "f")
    {
        throw UsageError("--variant must be f or g");
    }
    std::size_t const pairs = o.pairs;
    if (pairs == 0 || o.trials == 0)
    {
        throw UsageError("--n and --trials must be positive");
    }
    double const tol = o.tol ? tolerance(o, false) : 1e-9;
    InputGenerator gen(o.seed);
    double err_product = 0.0;
    double err_variant = 0.0;
    bool counts_ok = true;
    std::uint64_t count = 0;
    for (std::size_t trial = 0; trial < o.trials; ++trial)
    {
        TrackedMatrix const a = gen.dense(2, 2);
        TrackedMatrix const b = gen.dense(2, 2 * pairs);
        CountContext ctx;
        SimultaneousProduct const p = pairs == 1 ? (variant == Variant::F ? d4_simultaneous(a, b, ctx)
                                                                          : x8_simultaneous(a, b, ctx))
                                                 : blocked_simultaneous(a, b, variant, ctx);
        count = ctx.bilinear_mults();
        counts_ok = counts_ok && count == 8 * pairs;
        CountContext scratch;
        err_product = std::max(err_product, relative_error(p.product.entries(), naive_matmul(a, b, scratch).entries()));
        TrackedMatrix const bv = pairs == 1 ? (variant == Variant::F ? swap_rows(b) : g_transform(b))
                                            : blocked_variant(b, variant);
        err_variant = std::max(err_variant, relative_error(p.variant_product.entries(),
                                                           naive_matmul(a, bv, scratch).entries()));
    }
    bool const pass = counts_ok && err_product <= tol && err_variant <= tol;
    out << "variant: " << o.variant << '\n'
        << "column pairs: " << pairs << '\n'
        << "trials: " << o.trials << '\n'
        << "count: " << count << '\n'
        << "expected count: " << 8 * pairs << '\n'
        << "max relative error AB: " << sci(err_product) << '\n'
        << "max relative error AB^" << o.variant << ": " << sci(err_variant) << '\n'
        << "result: " << (pass ? "PASS" : "FAIL") << '\n';
    return pass ? exit_pass : exit_fail;
}

int cmd_apply(Options const& o, std::ostream& out)
{
    StructuredMatrix const m = parse_matrix(read_file(o.matrix));
    TrackedVector const x = parse_vector(read_file(o.vector));
    if (x.size() != m.shape.n)
    {
        throw UsageError("vector length does not match the matrix order");
    }
    KernelReport const r = run_kernel(m, x);
    nlohmann::json doc = nlohmann::json::parse(serialize_vector(r.output));
    doc["bilinear_mults"] = r.counts.bilinear_mults;
    doc["formula"] = r.formula_count;
    std::string const text = doc.dump() + "\n";
    if (o.out.empty())
    {
        out << text;
    }
    else
    {
        std::ofstream file(o.out, std::ios::binary);
        file << text;
        if (!file)
        {
            throw UsageError("cannot write '" + o.out + "'");
        }
    }
    return exit_pass;
}

}  // namespace

int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Bilinear complexity toolkit for structured matrix products"};
    app.require_subcommand(1);
    Options o;

    auto add_seed = [&o](CLI::App* c) { c->add_option("--seed", o.seed, "Random seed"); };
    auto add_trials = [&o](CLI::App* c) { c->add_option("--trials", o.trials, "Random trials"); };
    auto add_tol = [&o](CLI::App* c) { c->add_option("--tol", o.tol, "Tolerance override"); };
    auto add_structure = [&o](CLI::App* c) {
        c->add_option("--kind", o.kind, "Structure kind");
        c->add_option("--n", o.n, "Matrix order");
        c->add_option("--levels", o.levels, "Multilevel structure, e.g. toeplitz:3,toeplitz:2");
        c->add_option("--f", o.f, "f for f-circulant matrices as re,im");
    };

    CLI::App* verify = app.add_subcommand("verify", "Compare a fast kernel with the naive product");
    add_structure(verify);
    add_trials(verify);
    add_seed(verify);
    add_tol(verify);

    CLI::App* table = app.add_subcommand("count-table", "CSV of multiplication counts");
    table->add_option("--max-n", o.max_n, "Largest order");
    table->add_option("--f", o.f, "f for the f_circulant rows as re,im");
    table->add_option("--seed", o.seed, "Random seed");
    table->add_option("--out", o.out, "Output file (default stdout)");

    CLI::App* tensor = app.add_subcommand("tensor", "Rank certification of a structure tensor");
    add_structure(tensor);
    add_tol(tensor);
    tensor->add_option("--builder", o.builder, "complex_mul, so3, commutator_beta, matmul:m,n,p or kind:n");
    tensor->add_flag("--ottaviani", o.ottaviani, "Run the Ottaviani border-rank test");
    tensor->add_option("--decomposition", o.decomposition, "JSON decomposition to verify");

    CLI::App* stability = app.add_subcommand("stability", "Coefficient sums of decompositions");
    stability->add_option("--preset", o.preset, "usual, gauss or cube");
    stability->add_option("--decomposition", o.decomposition, "JSON decomposition file");
    add_tol(stability);

    CLI::App* tpp = app.add_subcommand("tpp", "Triple product property of a preset");
    tpp->add_option("--preset", o.preset, "d4-222 or cyclic-1n1");
    tpp->add_option("--n", o.n, "Cyclic group order for cyclic-1n1");
    add_trials(tpp);
    add_seed(tpp);
    add_tol(tpp);

    CLI::App* simul = app.add_subcommand("simul", "Simultaneous 2x2 products with eight multiplications");
    simul->add_option("--variant", o.variant, "f or g");
    simul->add_option("--n", o.pairs, "Column pairs of B");
    add_trials(simul);
    add_seed(simul);
    add_tol(simul);

    CLI::App* apply = app.add_subcommand("apply", "Apply a JSON matrix to a JSON vector");
    apply->add_option("--matrix", o.matrix, "Matrix file")->required();
    apply->add_option("--vector", o.vector, "Vector file")->required();
    apply->add_option("--out", o.out, "Output file (default stdout)");

    std::vector<char const*> argv{"bilinear-kernels"};
    for (auto const& a : args)
    {
        argv.push_back(a.c_str());
    }
    try
    {
        app.parse(static_cast<int>(argv.size()), argv.data());
    }
    catch (CLI::ParseError const& e)
    {
        int const code = app.exit(e, out, err);
        return code == 0 ? exit_pass : exit_usage;
    }

    try
    {
        if (verify->parsed())
        {
            return cmd_verify(o, out);
        }
        if (table->parsed())
        {
            return cmd_count_table(o, out);
        }
        if (tensor->parsed())
        {
            return cmd_tensor(o, out);
        }
        if (stability->parsed())
        {
            return cmd_stability(o, out);
        }
        if (tpp->parsed())
        {
            return cmd_tpp(o, out);
        }
        if (simul->parsed())
        {
            return cmd_simul(o, out);
        }
        return cmd_apply(o, out);
    }
    catch (UsageError const& e)
    {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    catch (Error const& e)
    {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    catch (std::exception const& e)
    {
        err << "failure: " << e.what() << '\n';
        return exit_fail;
    }
}

}  // namespace bilinear::cli
