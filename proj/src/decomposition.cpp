#include "bilinear/decomposition.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "bilinear/kernels.hpp"

namespace bilinear {

namespace {

class Recorder : public ProductObserver
{
  public:
    std::vector<Complex> lhs;
    std::vector<Complex> rhs;

    Complex on_product(std::size_t, Complex a, Complex b) override
    {
        lhs.push_back(a);
        rhs.push_back(b);
        return a * b;
    }
};

//! Replaces product `selected` by 1 and every other product by 0.
class Indicator : public ProductObserver
{
  public:
    explicit Indicator(std::size_t selected) : selected_(selected) {}

    Complex on_product(std::size_t index, Complex, Complex) override
    {
        return index == selected_ ? Complex{1.0, 0.0} : Complex{};
    }

  private:
    std::size_t selected_;
};

TrackedVector unit_variables(std::size_t size, std::size_t hot)
{
    TrackedVector v(size, TrackedScalar::variable(Complex{}));
    if (hot < size)
    {
        v[hot] = TrackedScalar::variable(Complex{1.0, 0.0});
    }
    return v;
}

constexpr std::size_t unchecked = static_cast<std::size_t>(-1);

TrackedVector run_observed(MatvecKernel const& kernel,
                           TrackedVector const& params,
                           TrackedVector const& x,
                           ProductObserver& observer,
                           std::size_t expected)
{
    CountContext ctx;
    ctx.set_observer(&observer);
    TrackedVector out = kernel(params, x, ctx);
    if (expected != unchecked && ctx.bilinear_mults() != expected)
    {
        throw std::logic_error("kernel product count depends on its input values");
    }
    return out;
}

BilinearProgram probe(Shape const& shape)
{
    auto const kernel = [&shape](TrackedSpan params, TrackedSpan x, CountContext& ctx) {
        StructuredMatrix const m{shape, TrackedVector(params.begin(), params.end())};
        return structured_matvec(m, x, ctx);
    };
    return probe_program(param_count(shape), shape.n, kernel);
}

}  // namespace

BilinearProgram probe_program(std::size_t params, std::size_t inputs, MatvecKernel const& kernel)
{
    BilinearProgram prog;
    prog.param_count = params;
    prog.input_count = inputs;
    std::size_t const none = prog.param_count + prog.input_count;

    Recorder first;
    run_observed(kernel,
                 unit_variables(prog.param_count, none),
                 unit_variables(prog.input_count, none),
                 first,
                 unchecked);
    std::size_t const r = first.lhs.size();

    prog.u.assign(r, std::vector<Complex>(prog.param_count));
    prog.v.assign(r, std::vector<Complex>(prog.input_count));
    prog.w.assign(r, std::vector<Complex>(prog.input_count));

    TrackedVector const zero_x = unit_variables(prog.input_count, none);
    for (std::size_t p = 0; p < prog.param_count; ++p)
    {
        Recorder rec;
        run_observed(kernel, unit_variables(prog.param_count, p), zero_x, rec, r);
        for (std::size_t i = 0; i < r; ++i)
        {
            prog.u[i][p] = rec.lhs[i];
        }
    }
    TrackedVector const zero_params = unit_variables(prog.param_count, none);
    for (std::size_t q = 0; q < prog.input_count; ++q)
    {
        Recorder rec;
        run_observed(kernel, zero_params, unit_variables(prog.input_count, q), rec, r);
        for (std::size_t i = 0; i < r; ++i)
        {
            prog.v[i][q] = rec.rhs[i];
        }
    }
    for (std::size_t i = 0; i < r; ++i)
    {
        Indicator indicator(i);
        TrackedVector const out = run_observed(kernel, zero_params, zero_x, indicator, r);
        for (std::size_t k = 0; k < prog.input_count; ++k)
        {
            prog.w[i][k] = out[k].value();
        }
    }
    return prog;
}

std::shared_ptr<BilinearProgram const> bilinear_program(Shape const& shape)
{
    using Key = std::tuple<int, std::size_t, double, double>;
    static std::mutex mutex;
    static std::map<Key, std::shared_ptr<BilinearProgram const>> cache;

    if (shape.kind == Kind::Sparse || shape.kind == Kind::Multilevel)
    {
        return std::make_shared<BilinearProgram const>(probe(shape));
    }
    Key const key{static_cast<int>(shape.kind), shape.n, shape.f.real(), shape.f.imag()};
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(key); it != cache.end())
        {
            return it->second;
        }
    }
    auto prog = std::make_shared<BilinearProgram const>(probe(shape));
    std::lock_guard lock(mutex);
    return cache.emplace(key, std::move(prog)).first->second;
}

TensorDecomposition extract_decomposition(Shape const& shape)
{
    return to_decomposition(probe(shape));
}

TensorDecomposition to_decomposition(BilinearProgram const& prog)
{
    TensorDecomposition d;
    d.dims = {prog.param_count, prog.input_count, prog.input_count};
    d.terms.reserve(prog.size());
    for (std::size_t i = 0; i < prog.size(); ++i)
    {
        d.terms.push_back({Complex{1.0, 0.0}, prog.u[i], prog.v[i], prog.w[i]});
    }
    return d;
}

}  // namespace bilinear
