#include "bilinear/group_algebra.hpp"

#include <set>
#include <sstream>

#include "bilinear/errors.hpp"

namespace bilinear {

GroupTable::GroupTable(std::vector<std::vector<std::size_t>> product,
                       std::vector<std::string> element_names)
    : product_(std::move(product)), names_(std::move(element_names))
{
    std::size_t const n = product_.size();
    if (n == 0 || names_.size() != n)
    {
        throw MalformedStructure("group table needs one name per element and order >= 1");
    }
    for (auto const& row : product_)
    {
        if (row.size() != n)
        {
            throw MalformedStructure("group table must be square");
        }
        for (std::size_t v : row)
        {
            if (v >= n)
            {
                throw MalformedStructure("group table entry out of range");
            }
        }
    }

    bool found = false;
    for (std::size_t e = 0; e < n && !found; ++e)
    {
        bool neutral = true;
        for (std::size_t a = 0; a < n && neutral; ++a)
        {
            neutral = product_[e][a] == a && product_[a][e] == a;
        }
        if (neutral)
        {
            identity_ = e;
            found = true;
        }
    }
    if (!found)
    {
        throw MalformedStructure("group table has no identity");
    }

    inverse_.assign(n, n);
    for (std::size_t a = 0; a < n; ++a)
    {
        for (std::size_t b = 0; b < n; ++b)
        {
            if (product_[a][b] == identity_ && product_[b][a] == identity_)
            {
                inverse_[a] = b;
                break;
            }
        }
        if (inverse_[a] == n)
        {
            throw MalformedStructure("element '" + names_[a] + "' has no inverse");
        }
    }

    if (n <= 64)
    {
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c)
                    if (product_[product_[a][b]][c] != product_[a][product_[b][c]])
                    {
                        throw MalformedStructure("group table is not associative");
                    }
    }
}

std::size_t GroupTable::index_of(std::string_view name) const
{
    for (std::size_t a = 0; a < names_.size(); ++a)
    {
        if (names_[a] == name)
        {
            return a;
        }
    }
    throw UnsupportedKind("no group element named '" + std::string(name) + "'");
}

GroupTable cyclic_group(std::size_t n)
{
    if (n == 0)
    {
        throw MalformedStructure("cyclic group needs n >= 1");
    }
    std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
    std::vector<std::string> names(n);
    for (std::size_t a = 0; a < n; ++a)
    {
        names[a] = a == 0 ? "1" : a == 1 ? "g" : "g^" + std::to_string(a);
        for (std::size_t b = 0; b < n; ++b)
        {
            table[a][b] = (a + b) % n;
        }
    }
    return GroupTable(std::move(table), std::move(names));
}

std::size_t d4_element(int a, int b)
{
    return static_cast<std::size_t>(((a % 4) + 4) % 4 + 4 * (((b % 2) + 2) % 2));
}

GroupTable dihedral8()
{
    std::vector<std::vector<std::size_t>> table(8, std::vector<std::size_t>(8));
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 4; ++c)
                for (int d = 0; d < 2; ++d)
                {
                    // y x^c = x^-c y
                    table[d4_element(a, b)][d4_element(c, d)] =
                        d4_element(a + (b ? -c : c), b ^ d);
                }
    return GroupTable(std::move(table),
                      {"1", "x", "x^2", "x^3", "y", "xy", "x^2y", "x^3y"});
}

namespace {

void require_indices(GroupTable const& g, std::vector<std::size_t> const& set, char const* what)
{
    std::set<std::size_t> seen;
    for (std::size_t a : set)
    {
        if (a >= g.order() || !seen.insert(a).second)
        {
            throw MalformedStructure(std::string(what) + " is not a set of group elements");
        }
    }
}

}  // namespace

bool tpp_check(GroupTable const& g,
               std::vector<std::size_t> const& s,
               std::vector<std::size_t> const& t,
               std::vector<std::size_t> const& u)
{
    require_indices(g, s, "S");
    require_indices(g, t, "T");
    require_indices(g, u, "U");
    // stu determines (s, t, u) iff the products are pairwise distinct
    std::set<std::size_t> products;
    for (std::size_t a : s)
        for (std::size_t b : t)
            for (std::size_t c : u)
                if (!products.insert(g.mul(g.mul(a, b), c)).second)
                {
                    return false;
                }
    return true;
}

GroupAlgebraElement group_algebra_mul(GroupTable const& g,
                                      GroupAlgebraElement const& a,
                                      GroupAlgebraElement const& b,
                                      CountContext& ctx)
{
    std::size_t const n = g.order();
    if (a.coefficients.size() != n || b.coefficients.size() != n)
    {
        throw DimensionMismatch("group algebra element length differs from the group order");
    }
    GroupAlgebraElement out{TrackedVector(n)};
    for (std::size_t i = 0; i < n; ++i)
    {
        if (a.coefficients[i].is_structural_zero())
        {
            continue;
        }
        for (std::size_t j = 0; j < n; ++j)
        {
            if (b.coefficients[j].is_structural_zero())
            {
                continue;
            }
            auto& slot = out.coefficients[g.mul(i, j)];
            TrackedScalar const term = mul(a.coefficients[i], b.coefficients[j], ctx);
            slot = slot.is_structural_zero() ? term : add(slot, term, ctx);
        }
    }
    return out;
}

TrackedMatrix cu_matmul(GroupTable const& g,
                        std::vector<std::size_t> const& s,
                        std::vector<std::size_t> const& t,
                        std::vector<std::size_t> const& u,
                        TrackedMatrix const& a,
                        TrackedMatrix const& b,
                        CountContext& ctx)
{
    if (a.rows() != s.size() || a.cols() != t.size() || b.rows() != t.size()
        || b.cols() != u.size())
    {
        std::ostringstream msg;
        msg << "cu_matmul: |S|, |T|, |U| = " << s.size() << ", " << t.size() << ", "
            << u.size() << " do not match " << a.rows() << "x" << a.cols() << " times "
            << b.rows() << "x" << b.cols();
        throw DimensionMismatch(msg.str());
    }
    if (!tpp_check(g, s, t, u))
    {
        throw TripleProductViolation("subsets fail the triple product property");
    }
    // The read-off needs s t^-1 t' u^-1 = s' u'^-1 only when t = t', s = s', u = u'.
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = 0; j < t.size(); ++j)
            for (std::size_t j2 = 0; j2 < t.size(); ++j2)
                for (std::size_t k = 0; k < u.size(); ++k)
                {
                    std::size_t const lhs = g.mul(g.mul(g.mul(s[i], g.inverse(t[j])), t[j2]),
                                                  g.inverse(u[k]));
                    for (std::size_t i2 = 0; i2 < s.size(); ++i2)
                        for (std::size_t k2 = 0; k2 < u.size(); ++k2)
                            if (lhs == g.mul(s[i2], g.inverse(u[k2]))
                                && (j != j2 || i != i2 || k != k2))
                            {
                                throw TripleProductViolation(
                                    "subsets do not realize the matrix product");
                            }
                }

    std::size_t const n = g.order();
    GroupAlgebraElement a_hat{TrackedVector(n)};
    GroupAlgebraElement b_hat{TrackedVector(n)};
    // positions are distinct by the check above
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = 0; j < t.size(); ++j)
            a_hat.coefficients[g.mul(s[i], g.inverse(t[j]))] = a(i, j);
    for (std::size_t j = 0; j < t.size(); ++j)
        for (std::size_t k = 0; k < u.size(); ++k)
            b_hat.coefficients[g.mul(t[j], g.inverse(u[k]))] = b(j, k);

    GroupAlgebraElement const prod = group_algebra_mul(g, a_hat, b_hat, ctx);
    TrackedMatrix out(s.size(), u.size());
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t k = 0; k < u.size(); ++k)
            out(i, k) = prod.coefficients[g.mul(s[i], g.inverse(u[k]))];
    return out;
}

TppPreset tpp_preset(std::string_view name, std::size_t cyclic_order)
{
    if (name == "d4-222")
    {
        return {"d4-222",
                dihedral8(),
                {d4_element(0, 1), d4_element(0, 0)},
                {d4_element(2, 1), d4_element(0, 0)},
                {d4_element(3, 1), d4_element(0, 0)}};
    }
    if (name == "cyclic-1n1")
    {
        GroupTable g = cyclic_group(cyclic_order);
        std::vector<std::size_t> all(cyclic_order);
        for (std::size_t i = 0; i < cyclic_order; ++i)
        {
            all[i] = i;
        }
        return {"cyclic-1n1", std::move(g), {0}, all, {0}};
    }
    throw UnsupportedKind("unknown preset '" + std::string(name) + "'");
}

}  // namespace bilinear
