#include "srr/ff_linalg.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "srr/error.hpp"

namespace srr {

namespace {

constexpr const char* kModule = "ff_linalg";
constexpr std::uint32_t kMaxOrder = 1u << 16;
constexpr std::uint32_t kTableOrder = 256;

using Poly = std::vector<std::uint32_t>;   // lowest degree first

void trim(Poly& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

/// Remainder of a modulo a monic-or-not divisor over F_p.
Poly poly_mod(Poly a, const Poly& divisor, std::uint32_t p)
{
    trim(a);
    Poly d = divisor;
    trim(d);
    const std::size_t dd = d.size() - 1;
    // inverse of the leading coefficient (p prime, so Fermat)
    std::uint64_t lead_inv = 1, base = d.back(), e = p - 2;
    while (e > 0)
    {
        if (e & 1)
            lead_inv = lead_inv * base % p;
        base = base * base % p;
        e >>= 1;
    }
    while (a.size() >= d.size())
    {
        std::uint64_t factor = a.back() * lead_inv % p;
        std::size_t shift = a.size() - 1 - dd;
        for (std::size_t j = 0; j <= dd; ++j)
        {
            std::uint64_t sub = factor * d[j] % p;
            a[shift + j] = static_cast<std::uint32_t>((a[shift + j] + p - sub) % p);
        }
        trim(a);
    }
    return a;
}

}   // namespace

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

struct FieldContext::Impl
{
    std::uint32_t p = 0;
    std::uint32_t e = 1;
    std::uint32_t q = 0;
    Poly modulus;
    std::vector<Element> add_table;   // q*q when q <= kTableOrder
    std::vector<Element> mul_table;
    std::vector<Element> inv_table;   // size q, inv_table[0] unused

    Element add_direct(Element a, Element b) const
    {
        if (e == 1)
            return (a + b) % p;
        Element result = 0, scale = 1;
        for (std::uint32_t i = 0; i < e; ++i)
        {
            result += ((a % p + b % p) % p) * scale;
            a /= p;
            b /= p;
            scale *= p;
        }
        return result;
    }

    Element mul_direct(Element a, Element b) const
    {
        if (e == 1)
            return static_cast<Element>(static_cast<std::uint64_t>(a) * b % p);
        Poly x(e), y(e);
        for (std::uint32_t i = 0; i < e; ++i)
        {
            x[i] = a % p;
            a /= p;
            y[i] = b % p;
            b /= p;
        }
        Poly prod(2 * e - 1, 0);
        for (std::uint32_t i = 0; i < e; ++i)
            for (std::uint32_t j = 0; j < e; ++j)
                prod[i + j] = static_cast<std::uint32_t>(
                    (prod[i + j] + static_cast<std::uint64_t>(x[i]) * y[j]) % p);
        Poly r = poly_mod(prod, modulus, p);
        Element result = 0, scale = 1;
        for (std::uint32_t i = 0; i < e; ++i)
        {
            result += (i < r.size() ? r[i] : 0) * scale;
            scale *= p;
        }
        return result;
    }
};

FieldContext FieldContext::make(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus)
{
    if (!is_prime(p))
        throw Error(ErrorKind::NotPrime, kModule, std::to_string(p) + " is not prime");
    if (e == 0)
        throw Error(ErrorKind::ValidationError, kModule, "extension degree must be >= 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e; ++i)
    {
        q *= p;
        if (q > kMaxOrder)
            throw Error(ErrorKind::TooLarge, kModule, "field order exceeds 2^16");
    }
    auto impl = std::make_shared<Impl>();
    impl->p = p;
    impl->e = e;
    impl->q = static_cast<std::uint32_t>(q);
    if (e > 1)
    {
        if (modulus.empty())
            throw Error(ErrorKind::MissingModulus, kModule,
                        "extension field F_" + std::to_string(q) + " needs a modulus");
        if (modulus.size() != e + 1 || modulus.back() != 1)
            throw Error(ErrorKind::ValidationError, kModule,
                        "modulus must be monic of degree " + std::to_string(e));
        for (auto c : modulus)
            if (c >= p)
                throw Error(ErrorKind::ValidationError, kModule, "modulus coefficient out of range");
        // Trial division by every monic polynomial of degree 1..e/2.
        for (std::uint32_t deg = 1; deg <= e / 2; ++deg)
        {
            std::uint64_t count = 1;
            for (std::uint32_t i = 0; i < deg; ++i)
                count *= p;
            for (std::uint64_t code = 0; code < count; ++code)
            {
                Poly divisor(deg + 1);
                std::uint64_t c = code;
                for (std::uint32_t i = 0; i < deg; ++i)
                {
                    divisor[i] = static_cast<std::uint32_t>(c % p);
                    c /= p;
                }
                divisor[deg] = 1;
                if (poly_mod(modulus, divisor, p).empty())
                    throw Error(ErrorKind::ReducibleModulus, kModule,
                                "modulus has a factor of degree " + std::to_string(deg));
            }
        }
        impl->modulus = std::move(modulus);
    }
    else if (!modulus.empty())
    {
        if (modulus.size() != 2 || modulus.back() != 1)
            throw Error(ErrorKind::ValidationError, kModule, "prime-field modulus must be monic linear");
        impl->modulus = std::move(modulus);
    }

    const std::uint32_t order = impl->q;
    if (order <= kTableOrder)
    {
        impl->add_table.resize(static_cast<std::size_t>(order) * order);
        impl->mul_table.resize(static_cast<std::size_t>(order) * order);
        for (Element a = 0; a < order; ++a)
            for (Element b = 0; b < order; ++b)
            {
                impl->add_table[a * order + b] = impl->add_direct(a, b);
                impl->mul_table[a * order + b] = impl->mul_direct(a, b);
            }
    }
    impl->inv_table.assign(order, 0);
    for (Element a = 1; a < order; ++a)
    {
        if (impl->inv_table[a] != 0)
            continue;
        for (Element b = 1; b < order; ++b)
            if (impl->mul_direct(a, b) == 1)
            {
                impl->inv_table[a] = b;
                impl->inv_table[b] = a;
                break;
            }
        if (impl->inv_table[a] == 0)
            throw Error(ErrorKind::ReducibleModulus, kModule, "element without inverse");
    }
    return FieldContext(std::move(impl));
}

std::uint32_t FieldContext::order() const { return impl_->q; }
std::uint32_t FieldContext::characteristic() const { return impl_->p; }
std::uint32_t FieldContext::degree() const { return impl_->e; }
const std::vector<std::uint32_t>& FieldContext::modulus() const { return impl_->modulus; }

Element FieldContext::add(Element a, Element b) const
{
    if (!impl_->add_table.empty())
        return impl_->add_table[a * impl_->q + b];
    return impl_->add_direct(a, b);
}

Element FieldContext::neg(Element a) const
{
    if (impl_->e == 1)
        return (impl_->p - a) % impl_->p;
    Element result = 0, scale = 1;
    const std::uint32_t p = impl_->p;
    for (std::uint32_t i = 0; i < impl_->e; ++i)
    {
        result += ((p - a % p) % p) * scale;
        a /= p;
        scale *= p;
    }
    return result;
}

Element FieldContext::sub(Element a, Element b) const { return add(a, neg(b)); }

Element FieldContext::mul(Element a, Element b) const
{
    if (!impl_->mul_table.empty())
        return impl_->mul_table[a * impl_->q + b];
    return impl_->mul_direct(a, b);
}

Element FieldContext::inv(Element a) const
{
    if (a == 0)
        throw Error(ErrorKind::DivisionByZero, kModule, "zero has no inverse");
    return impl_->inv_table[a];
}

Element FieldContext::pow(Element a, std::uint64_t exponent) const
{
    Element result = 1;
    while (exponent > 0)
    {
        if (exponent & 1)
            result = mul(result, a);
        a = mul(a, a);
        exponent >>= 1;
    }
    return result;
}

std::uint32_t FieldContext::multiplicative_order(Element a) const
{
    if (a == 0)
        throw Error(ErrorKind::DivisionByZero, kModule, "zero has no multiplicative order");
    std::uint32_t order = 1;
    Element x = a;
    while (x != 1)
    {
        x = mul(x, a);
        ++order;
    }
    return order;
}

bool FieldContext::is_primitive(Element a) const
{
    return a != 0 && a < order() && multiplicative_order(a) == order() - 1;
}

bool FieldContext::operator==(const FieldContext& other) const
{
    return impl_ == other.impl_
        || (impl_->p == other.impl_->p && impl_->e == other.impl_->e
            && impl_->modulus == other.impl_->modulus);
}

// ---------------------------------------------------------------------------

FFMatrix::FFMatrix(FieldContext field, int rows, int cols)
    : field_(std::move(field)), rows_(rows), cols_(cols),
      data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0)
{
    if (rows < 0 || cols < 0)
        throw Error(ErrorKind::ValidationError, kModule, "negative matrix size");
}

FFMatrix::FFMatrix(FieldContext field, int rows, int cols, std::vector<Element> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(entries))
{
    if (rows < 0 || cols < 0
        || data_.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols))
        throw Error(ErrorKind::ValidationError, kModule, "entry count does not match matrix size");
    for (auto x : data_)
        if (x >= field_.order())
            throw Error(ErrorKind::ValidationError, kModule,
                        "entry " + std::to_string(x) + " is not an element of F_"
                            + std::to_string(field_.order()));
}

FFMatrix FFMatrix::identity(const FieldContext& field, int n)
{
    FFMatrix m(field, n, n);
    for (int i = 0; i < n; ++i)
        m.set(i, i, 1);
    return m;
}

FFMatrix FFMatrix::from_columns(const FieldContext& field, int rows,
                                std::span<const std::vector<Element>> columns)
{
    FFMatrix m(field, rows, static_cast<int>(columns.size()));
    for (int c = 0; c < m.cols(); ++c)
    {
        if (columns[c].size() != static_cast<std::size_t>(rows))
            throw Error(ErrorKind::DimensionMismatch, kModule, "column length mismatch");
        for (int r = 0; r < rows; ++r)
            m.set(r, c, columns[c][r]);
    }
    return m;
}

void FFMatrix::set(int r, int c, Element value)
{
    if (value >= field_.order())
        throw Error(ErrorKind::ValidationError, kModule, "entry out of field range");
    data_[index(r, c)] = value;
}

std::vector<Element> FFMatrix::row(int r) const
{
    return {data_.begin() + static_cast<std::ptrdiff_t>(index(r, 0)),
            data_.begin() + static_cast<std::ptrdiff_t>(index(r, 0) + cols_)};
}

std::vector<Element> FFMatrix::column(int c) const
{
    std::vector<Element> out(rows_);
    for (int r = 0; r < rows_; ++r)
        out[r] = (*this)(r, c);
    return out;
}

FFMatrix FFMatrix::select_columns(std::span<const int> columns) const
{
    FFMatrix m(field_, rows_, static_cast<int>(columns.size()));
    for (int j = 0; j < m.cols(); ++j)
    {
        if (columns[j] < 0 || columns[j] >= cols_)
            throw Error(ErrorKind::IndexOutOfRange, kModule, "column index out of range");
        for (int r = 0; r < rows_; ++r)
            m.data_[m.index(r, j)] = (*this)(r, columns[j]);
    }
    return m;
}

FFMatrix FFMatrix::transpose() const
{
    FFMatrix t(field_, cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            t.data_[t.index(c, r)] = (*this)(r, c);
    return t;
}

FFMatrix FFMatrix::operator*(const FFMatrix& rhs) const
{
    if (cols_ != rhs.rows_ || !(field_ == rhs.field_))
        throw Error(ErrorKind::DimensionMismatch, kModule, "incompatible matrix product");
    FFMatrix out(field_, rows_, rhs.cols_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < rhs.cols_; ++c)
        {
            Element acc = 0;
            for (int j = 0; j < cols_; ++j)
                acc = field_.add(acc, field_.mul((*this)(r, j), rhs(j, c)));
            out.data_[out.index(r, c)] = acc;
        }
    return out;
}

bool FFMatrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](Element x) { return x == 0; });
}

bool FFMatrix::operator==(const FFMatrix& other) const
{
    return rows_ == other.rows_ && cols_ == other.cols_ && field_ == other.field_
        && data_ == other.data_;
}

// ---------------------------------------------------------------------------

RowEchelonForm rref(const FFMatrix& m)
{
    const FieldContext& f = m.field();
    std::vector<std::vector<Element>> a(m.rows());
    for (int r = 0; r < m.rows(); ++r)
        a[r] = m.row(r);
    std::vector<int> pivots;
    int lead = 0;
    for (int c = 0; c < m.cols() && lead < m.rows(); ++c)
    {
        int pivot = -1;
        for (int r = lead; r < m.rows(); ++r)
            if (a[r][c] != 0)
            {
                pivot = r;
                break;
            }
        if (pivot < 0)
            continue;
        std::swap(a[lead], a[pivot]);
        Element scale = f.inv(a[lead][c]);
        for (auto& x : a[lead])
            x = f.mul(x, scale);
        for (int r = 0; r < m.rows(); ++r)
        {
            if (r == lead || a[r][c] == 0)
                continue;
            Element factor = a[r][c];
            for (int j = c; j < m.cols(); ++j)
                a[r][j] = f.sub(a[r][j], f.mul(factor, a[lead][j]));
        }
        pivots.push_back(c);
        ++lead;
    }
    std::vector<Element> flat;
    flat.reserve(static_cast<std::size_t>(m.rows()) * m.cols());
    for (auto& row : a)
        flat.insert(flat.end(), row.begin(), row.end());
    return {FFMatrix(f, m.rows(), m.cols(), std::move(flat)), std::move(pivots)};
}

int rank(const FFMatrix& m)
{
    return static_cast<int>(rref(m).pivots.size());
}

std::vector<std::vector<Element>> null_space(const FFMatrix& m)
{
    const FieldContext& f = m.field();
    auto [reduced, pivots] = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : pivots)
        is_pivot[c] = true;
    std::vector<std::vector<Element>> basis;
    for (int free = 0; free < m.cols(); ++free)
    {
        if (is_pivot[free])
            continue;
        std::vector<Element> v(m.cols(), 0);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = f.neg(reduced(static_cast<int>(r), free));
        basis.push_back(std::move(v));
    }
    return basis;
}

SpanMembership in_span(const FieldContext& field,
                       std::span<const std::vector<Element>> vectors,
                       std::span<const Element> target)
{
    const int rows = static_cast<int>(target.size());
    for (const auto& v : vectors)
        if (v.size() != target.size())
            throw Error(ErrorKind::DimensionMismatch, kModule,
                        "vector length " + std::to_string(v.size()) + " differs from target length "
                            + std::to_string(target.size()));
    const int count = static_cast<int>(vectors.size());
    FFMatrix augmented(field, rows, count + 1);
    for (int c = 0; c < count; ++c)
        for (int r = 0; r < rows; ++r)
            augmented.set(r, c, vectors[c][r]);
    for (int r = 0; r < rows; ++r)
        augmented.set(r, count, target[r]);
    auto [reduced, pivots] = rref(augmented);
    if (!pivots.empty() && pivots.back() == count)
        return {};
    SpanMembership result;
    result.contained = true;
    result.coefficients.assign(count, 0);
    for (std::size_t r = 0; r < pivots.size(); ++r)
        result.coefficients[pivots[r]] = reduced(static_cast<int>(r), count);
    return result;
}

}   // namespace srr
