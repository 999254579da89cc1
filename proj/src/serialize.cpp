#include "bilinear/serialize.hpp"

#include <sstream>

#include "json.hpp"

#include "bilinear/errors.hpp"

namespace bilinear {

namespace {

using nlohmann::json;

[[noreturn]] void fail(std::string const& path, std::string const& what)
{
    throw SchemaError("at " + (path.empty() ? std::string("/") : path) + ": " + what);
}

json parse_text(std::string_view text)
{
    try
    {
        return json::parse(text.begin(), text.end());
    }
    catch (json::parse_error const& e)
    {
        std::ostringstream msg;
        msg << "JSON syntax error at byte " << e.byte << ": " << e.what();
        throw SchemaError(msg.str());
    }
}

json const& field(json const& obj, std::string const& path, char const* key)
{
    if (!obj.is_object())
    {
        fail(path, "expected an object");
    }
    auto it = obj.find(key);
    if (it == obj.end())
    {
        fail(path, std::string("missing field \"") + key + "\"");
    }
    return *it;
}

std::size_t read_size(json const& value, std::string const& path, bool positive)
{
    if (!value.is_number_integer() || value.get<long long>() < (positive ? 1 : 0))
    {
        fail(path, positive ? "expected a positive integer" : "expected a nonnegative integer");
    }
    return value.get<std::size_t>();
}

double read_double(json const& value, std::string const& path)
{
    if (!value.is_number())
    {
        fail(path, "expected a number");
    }
    return value.get<double>();
}

Complex read_complex(json const& value, std::string const& path)
{
    if (!value.is_array() || value.size() != 2)
    {
        fail(path, "expected [re, im]");
    }
    return {read_double(value[0], path + "/0"), read_double(value[1], path + "/1")};
}

std::vector<Complex> read_complex_list(json const& value, std::string const& path)
{
    if (!value.is_array())
    {
        fail(path, "expected an array of [re, im] pairs");
    }
    std::vector<Complex> out;
    out.reserve(value.size());
    for (std::size_t i = 0; i < value.size(); ++i)
    {
        out.push_back(read_complex(value[i], path + "/" + std::to_string(i)));
    }
    return out;
}

json write_complex(Complex c)
{
    return json::array({c.real(), c.imag()});
}

json write_complex_list(std::vector<Complex> const& values)
{
    json out = json::array();
    for (Complex c : values)
    {
        out.push_back(write_complex(c));
    }
    return out;
}

Shape read_shape(json const& obj, std::string const& path, bool allow_multilevel)
{
    json const& kind_value = field(obj, path, "kind");
    if (!kind_value.is_string())
    {
        fail(path + "/kind", "expected a string");
    }
    Kind kind;
    try
    {
        kind = parse_kind(kind_value.get<std::string>());
    }
    catch (UnsupportedKind const& e)
    {
        fail(path + "/kind", e.what());
    }
    std::size_t const n = read_size(field(obj, path, "n"), path + "/n", true);

    try
    {
        switch (kind)
        {
            case Kind::FCirculant:
            {
                Complex const f = read_complex(field(obj, path, "f"), path + "/f");
                return make_f_circulant_shape(n, f);
            }
            case Kind::Sparse:
            {
                json const& omega = field(obj, path, "omega");
                if (!omega.is_array())
                {
                    fail(path + "/omega", "expected an array of [i, j] pairs");
                }
                std::vector<SparsityPattern::Entry> entries;
                for (std::size_t k = 0; k < omega.size(); ++k)
                {
                    std::string const at = path + "/omega/" + std::to_string(k);
                    if (!omega[k].is_array() || omega[k].size() != 2)
                    {
                        fail(at, "expected [i, j]");
                    }
                    entries.emplace_back(read_size(omega[k][0], at + "/0", false),
                                         read_size(omega[k][1], at + "/1", false));
                }
                return make_sparse_shape(SparsityPattern(n, n, std::move(entries)));
            }
            case Kind::Multilevel:
            {
                if (!allow_multilevel)
                {
                    fail(path + "/kind", "levels cannot themselves be multilevel");
                }
                json const& levels = field(obj, path, "levels");
                if (!levels.is_array() || levels.empty())
                {
                    fail(path + "/levels", "expected a nonempty array of level objects");
                }
                std::vector<Shape> shapes;
                for (std::size_t k = 0; k < levels.size(); ++k)
                {
                    shapes.push_back(read_shape(levels[k], path + "/levels/" + std::to_string(k), false));
                }
                Shape shape = make_multilevel_shape(std::move(shapes));
                if (shape.n != n)
                {
                    fail(path + "/n", "expected the product of the level orders, "
                                          + std::to_string(shape.n));
                }
                return shape;
            }
            default:
                return make_shape(kind, n);
        }
    }
    catch (MalformedStructure const& e)
    {
        fail(path, e.what());
    }
}

json write_shape(Shape const& shape)
{
    json out;
    out["kind"] = std::string(kind_name(shape.kind));
    out["n"] = shape.n;
    switch (shape.kind)
    {
        case Kind::FCirculant:
            out["f"] = write_complex(shape.f);
            break;
        case Kind::Sparse:
        {
            json omega = json::array();
            for (auto const& [i, j] : shape.omega.entries())
            {
                omega.push_back(json::array({i, j}));
            }
            out["omega"] = std::move(omega);
            break;
        }
        case Kind::Multilevel:
        {
            json levels = json::array();
            for (auto const& level : shape.levels)
            {
                levels.push_back(write_shape(level));
            }
            out["levels"] = std::move(levels);
            break;
        }
        default:
            break;
    }
    return out;
}

}  // namespace

StructuredMatrix parse_matrix(std::string_view text)
{
    json const doc = parse_text(text);
    Shape shape = read_shape(doc, "", true);
    std::vector<Complex> const data = read_complex_list(field(doc, "", "data"), "/data");
    std::size_t const expected = param_count(shape);
    if (data.size() != expected)
    {
        fail("/data", std::string(kind_name(shape.kind)) + " of order " + std::to_string(shape.n)
                          + " needs " + std::to_string(expected) + " entries, got "
                          + std::to_string(data.size()));
    }
    return {std::move(shape), variables(data)};
}

std::string serialize_matrix(StructuredMatrix const& m)
{
    validate(m);
    json out = write_shape(m.shape);
    out["data"] = write_complex_list(values_of(m.data));
    return out.dump();
}

TrackedVector parse_vector(std::string_view text)
{
    json const doc = parse_text(text);
    std::size_t const n = read_size(field(doc, "", "n"), "/n", true);
    std::vector<Complex> const data = read_complex_list(field(doc, "", "data"), "/data");
    if (data.size() != n)
    {
        fail("/data", "expected " + std::to_string(n) + " entries, got " + std::to_string(data.size()));
    }
    return variables(data);
}

std::string serialize_vector(TrackedSpan v)
{
    json out;
    out["n"] = v.size();
    out["data"] = write_complex_list(values_of(v));
    return out.dump();
}

TensorDecomposition parse_decomposition(std::string_view text)
{
    json const doc = parse_text(text);
    json const& dims = field(doc, "", "dims");
    if (!dims.is_array() || dims.size() != 3)
    {
        fail("/dims", "expected [d1, d2, d3]");
    }
    TensorDecomposition d;
    for (std::size_t k = 0; k < 3; ++k)
    {
        d.dims[k] = read_size(dims[k], "/dims/" + std::to_string(k), true);
    }
    json const& terms = field(doc, "", "terms");
    if (!terms.is_array())
    {
        fail("/terms", "expected an array of terms");
    }
    for (std::size_t t = 0; t < terms.size(); ++t)
    {
        std::string const at = "/terms/" + std::to_string(t);
        RankOneTerm term;
        term.lambda = terms[t].contains("lambda")
                          ? read_complex(terms[t]["lambda"], at + "/lambda")
                          : Complex{1.0, 0.0};
        char const* names[] = {"u", "v", "w"};
        std::vector<Complex>* slots[] = {&term.u, &term.v, &term.w};
        for (std::size_t k = 0; k < 3; ++k)
        {
            *slots[k] = read_complex_list(field(terms[t], at, names[k]), at + "/" + names[k]);
            if (slots[k]->size() != d.dims[k])
            {
                fail(at + "/" + names[k], "expected " + std::to_string(d.dims[k]) + " entries");
            }
        }
        d.terms.push_back(std::move(term));
    }
    return d;
}

std::string serialize_decomposition(TensorDecomposition const& d)
{
    d.validate();
    json out;
    out["dims"] = json::array({d.dims[0], d.dims[1], d.dims[2]});
    json terms = json::array();
    for (auto const& term : d.terms)
    {
        json t;
        t["lambda"] = write_complex(term.lambda);
        t["u"] = write_complex_list(term.u);
        t["v"] = write_complex_list(term.v);
        t["w"] = write_complex_list(term.w);
        terms.push_back(std::move(t));
    }
    out["terms"] = std::move(terms);
    return out.dump();
}

}  // namespace bilinear
