#include "bilinear/tensor_lab.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include <Eigen/Dense>

#include "bilinear/errors.hpp"

namespace bilinear {

Tensor3::Tensor3(Dims3 dims)
    : dims_(dims), entries_(dims[0] * dims[1] * dims[2])
{
}

void TensorDecomposition::validate() const
{
    for (std::size_t t = 0; t < terms.size(); ++t)
    {
        auto const& term = terms[t];
        if (term.u.size() != dims[0] || term.v.size() != dims[1] || term.w.size() != dims[2])
        {
            std::ostringstream msg;
            msg << "term " << t << " has factor lengths (" << term.u.size() << ", "
                << term.v.size() << ", " << term.w.size() << "), expected (" << dims[0]
                << ", " << dims[1] << ", " << dims[2] << ")";
            throw DimensionMismatch(msg.str());
        }
    }
}

Tensor3 TensorDecomposition::assemble() const
{
    validate();
    Tensor3 t(dims);
    for (auto const& term : terms)
    {
        for (std::size_t i = 0; i < dims[0]; ++i)
        {
            Complex const a = term.lambda * term.u[i];
            if (a == Complex{})
            {
                continue;
            }
            for (std::size_t j = 0; j < dims[1]; ++j)
            {
                Complex const ab = a * term.v[j];
                for (std::size_t k = 0; k < dims[2]; ++k)
                {
                    t(i, j, k) += ab * term.w[k];
                }
            }
        }
    }
    return t;
}

Tensor3 structure_tensor(Shape const& shape)
{
    auto const elements = basis(shape);
    std::size_t const n = shape.n;
    Tensor3 t({elements.size(), n, n});
    for (std::size_t i = 0; i < elements.size(); ++i)
    {
        TrackedMatrix const dense = densify(elements[i]);
        for (std::size_t j = 0; j < n; ++j)
        {
            for (std::size_t k = 0; k < n; ++k)
            {
                // (B_i e_j)_k
                t(i, j, k) = dense(k, j).value();
            }
        }
    }
    return t;
}

Tensor3 matmul_tensor(std::size_t m, std::size_t n, std::size_t p)
{
    if (m == 0 || n == 0 || p == 0)
    {
        throw DimensionMismatch("matmul tensor needs positive sizes");
    }
    Tensor3 t({m * n, n * p, m * p});
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < p; ++k)
                t(i * n + j, j * p + k, i * p + k) = 1.0;
    return t;
}

Tensor3 complex_mul_tensor()
{
    Tensor3 t({2, 2, 2});
    t(0, 0, 0) = 1.0;
    t(1, 1, 0) = -1.0;
    t(0, 1, 1) = 1.0;
    t(1, 0, 1) = 1.0;
    return t;
}

Tensor3 so3_tensor()
{
    Tensor3 t({3, 3, 3});
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            for (int k = 1; k <= 3; ++k)
                t(i - 1, j - 1, k - 1) = (i - j) * (j - k) * (k - i) / 2.0;
    return t;
}

Tensor3 commutator_beta_tensor()
{
    Tensor3 t({3, 3, 3});
    t(0, 1, 0) = 1.0;
    t(1, 2, 0) = 1.0;
    t(1, 0, 1) = -1.0;
    t(2, 1, 1) = 1.0;
    t(0, 0, 2) = -1.0;
    t(2, 2, 2) = -1.0;
    return t;
}

namespace {

std::vector<std::size_t> parse_sizes(std::string_view text, std::string_view spec)
{
    std::vector<std::size_t> out;
    while (!text.empty())
    {
        std::size_t value = 0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc{} || value == 0)
        {
            throw UnsupportedKind("bad size list in tensor spec '" + std::string(spec) + "'");
        }
        out.push_back(value);
        text.remove_prefix(static_cast<std::size_t>(ptr - text.data()));
        if (!text.empty())
        {
            if (text.front() != ',' && text.front() != 'x')
            {
                throw UnsupportedKind("bad size list in tensor spec '" + std::string(spec) + "'");
            }
            text.remove_prefix(1);
        }
    }
    return out;
}

Eigen::MatrixXcd unfolding(Tensor3 const& t, int mode)
{
    auto const [d1, d2, d3] = t.dims();
    Eigen::Index const rows = static_cast<Eigen::Index>(mode == 0 ? d1 : mode == 1 ? d2 : d3);
    Eigen::Index const cols = static_cast<Eigen::Index>(d1 * d2 * d3) / std::max<Eigen::Index>(rows, 1);
    Eigen::MatrixXcd m(rows, cols);
    for (std::size_t i = 0; i < d1; ++i)
    {
        for (std::size_t j = 0; j < d2; ++j)
        {
            for (std::size_t k = 0; k < d3; ++k)
            {
                auto const [r, c] = [&]() -> std::pair<std::size_t, std::size_t> {
                    switch (mode)
                    {
                        case 0: return {i, j * d3 + k};
                        case 1: return {j, i * d3 + k};
                        default: return {k, i * d2 + j};
                    }
                }();
                m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = t(i, j, k);
            }
        }
    }
    return m;
}

std::size_t numerical_rank(Eigen::MatrixXcd const& m, double tol)
{
    if (m.size() == 0)
    {
        return 0;
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    auto const& sigma = svd.singularValues();
    if (sigma.size() == 0 || sigma(0) == 0.0)
    {
        return 0;
    }
    double const cutoff = tol * sigma(0);
    std::size_t rank = 0;
    for (Eigen::Index i = 0; i < sigma.size(); ++i)
    {
        if (sigma(i) > cutoff)
        {
            ++rank;
        }
    }
    return rank;
}

double norm2(std::vector<Complex> const& v)
{
    double sum = 0.0;
    for (Complex c : v)
    {
        sum += std::norm(c);
    }
    return std::sqrt(sum);
}

}  // namespace

Tensor3 build_structure_tensor(std::string_view spec)
{
    if (spec == "complex_mul")
    {
        return complex_mul_tensor();
    }
    if (spec == "so3")
    {
        return so3_tensor();
    }
    if (spec == "commutator_beta")
    {
        return commutator_beta_tensor();
    }
    auto const colon = spec.find(':');
    if (colon == std::string_view::npos)
    {
        throw UnsupportedKind("unknown tensor builder '" + std::string(spec) + "'");
    }
    std::string_view const head = spec.substr(0, colon);
    auto const sizes = parse_sizes(spec.substr(colon + 1), spec);
    if (head == "matmul")
    {
        if (sizes.size() != 3)
        {
            throw UnsupportedKind("matmul builder needs m,n,p");
        }
        return matmul_tensor(sizes[0], sizes[1], sizes[2]);
    }
    Kind const kind = parse_kind(head);
    if (sizes.size() != 1 || kind == Kind::Sparse || kind == Kind::Multilevel)
    {
        throw UnsupportedKind("structure builder needs a flat kind and one order");
    }
    return structure_tensor(make_shape(kind, sizes[0]));
}

std::vector<Complex> contract(Tensor3 const& t,
                              std::vector<Complex> const& u,
                              std::vector<Complex> const& v)
{
    auto const [d1, d2, d3] = t.dims();
    if (u.size() != d1 || v.size() != d2)
    {
        throw DimensionMismatch("contract: vector lengths do not match the tensor");
    }
    std::vector<Complex> w(d3);
    for (std::size_t i = 0; i < d1; ++i)
    {
        if (u[i] == Complex{})
        {
            continue;
        }
        for (std::size_t j = 0; j < d2; ++j)
        {
            Complex const uv = u[i] * v[j];
            for (std::size_t k = 0; k < d3; ++k)
            {
                w[k] += t(i, j, k) * uv;
            }
        }
    }
    return w;
}

VerifyReport verify_decomposition(Tensor3 const& t, TensorDecomposition const& d, double tol)
{
    if (t.dims() != d.dims)
    {
        throw DimensionMismatch("decomposition dims do not match the tensor");
    }
    Tensor3 const sum = d.assemble();
    VerifyReport report;
    report.term_count = d.terms.size();
    for (std::size_t e = 0; e < t.entries().size(); ++e)
    {
        report.max_abs_error = std::max(report.max_abs_error,
                                        std::abs(t.entries()[e] - sum.entries()[e]));
    }
    report.pass = report.max_abs_error <= tol;
    return report;
}

Dims3 flattening_ranks(Tensor3 const& t, double tol)
{
    return {numerical_rank(unfolding(t, 0), tol),
            numerical_rank(unfolding(t, 1), tol),
            numerical_rank(unfolding(t, 2), tol)};
}

OttavianiReport ottaviani_test(Tensor3 const& t)
{
    if (t.dims() != Dims3{3, 3, 3})
    {
        throw DimensionMismatch("ottaviani_test needs a 3x3x3 tensor");
    }
    auto slice = [&](std::size_t i) {
        Eigen::Matrix3cd x;
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                x(j, k) = t(i, static_cast<std::size_t>(j), static_cast<std::size_t>(k));
        return x;
    };
    Eigen::Matrix3cd const x1 = slice(0);
    Eigen::Matrix3cd const x2 = slice(1);
    Eigen::Matrix3cd const x3 = slice(2);

    Eigen::Matrix<Complex, 9, 9> m = Eigen::Matrix<Complex, 9, 9>::Zero();
    m.block<3, 3>(0, 3) = x3;
    m.block<3, 3>(0, 6) = -x2;
    m.block<3, 3>(3, 0) = -x3;
    m.block<3, 3>(3, 6) = x1;
    m.block<3, 3>(6, 0) = x2;
    m.block<3, 3>(6, 3) = -x1;

    OttavianiReport report;
    for (int r = 0; r < 9; ++r)
    {
        double const norm = m.row(r).norm();
        if (norm == 0.0)
        {
            return report;
        }
        m.row(r) /= norm;
    }
    report.det_magnitude = std::abs(m.fullPivLu().determinant());
    report.nonsingular = report.det_magnitude > 1e-6;
    return report;
}

double stability_measure(TensorDecomposition const& d)
{
    d.validate();
    double total = 0.0;
    for (std::size_t t = 0; t < d.terms.size(); ++t)
    {
        auto const& term = d.terms[t];
        double const nu = norm2(term.u);
        double const nv = norm2(term.v);
        double const nw = norm2(term.w);
        if (nu == 0.0 || nv == 0.0 || nw == 0.0)
        {
            throw MalformedStructure("term " + std::to_string(t) + " has a zero factor");
        }
        total += std::abs(term.lambda) * nu * nv * nw;
    }
    return total;
}

namespace {

RankOneTerm real_term(double lambda,
                      std::vector<double> const& u,
                      std::vector<double> const& v,
                      std::vector<double> const& w)
{
    auto lift = [](std::vector<double> const& x) {
        return std::vector<Complex>(x.begin(), x.end());
    };
    return {Complex{lambda, 0.0}, lift(u), lift(v), lift(w)};
}

}  // namespace

TensorDecomposition usual_complex_decomposition()
{
    return {{2, 2, 2},
            {real_term(1.0, {1, 0}, {1, 0}, {1, 0}),
             real_term(-1.0, {0, 1}, {0, 1}, {1, 0}),
             real_term(1.0, {1, 0}, {0, 1}, {0, 1}),
             real_term(1.0, {0, 1}, {1, 0}, {0, 1})}};
}

TensorDecomposition gauss_complex_decomposition()
{
    return {{2, 2, 2},
            {real_term(1.0, {1, 1}, {1, 1}, {0, 1}),
             real_term(1.0, {1, 0}, {1, 0}, {1, -1}),
             real_term(-1.0, {0, 1}, {0, 1}, {1, 1})}};
}

TensorDecomposition cube_complex_decomposition()
{
    double const c = std::sqrt(3.0) / 2.0;
    // The cubes are symmetric in all three slots; the output factor is written
    // with the basis order swapped so the sum is exactly mu_C.
    return {{2, 2, 2},
            {real_term(4.0 / 3.0, {c, 0.5}, {c, 0.5}, {0.5, c}),
             real_term(4.0 / 3.0, {-c, 0.5}, {-c, 0.5}, {0.5, -c}),
             real_term(4.0 / 3.0, {0, -1}, {0, -1}, {-1, 0})}};
}

TensorDecomposition named_decomposition(std::string_view name)
{
    if (name == "usual")
    {
        return usual_complex_decomposition();
    }
    if (name == "gauss")
    {
        return gauss_complex_decomposition();
    }
    if (name == "cube")
    {
        return cube_complex_decomposition();
    }
    throw UnsupportedKind("unknown decomposition '" + std::string(name) + "'");
}

}  // namespace bilinear
