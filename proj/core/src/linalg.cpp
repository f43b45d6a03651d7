#include "qlwb/linalg.hpp"
#include "qlwb/error.hpp"

#include <cctype>

namespace qlwb {

auto parse_rational(std::string_view text) -> Rational
{
    std::string s(text);
    while (! s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.pop_back();
    std::size_t b = 0;
    while (b < s.size() && std::isspace(static_cast<unsigned char>(s[b])))
        ++b;
    s = s.substr(b);
    if (! s.empty() && s[0] == '+')
        s = s.substr(1);
    auto bad = [&] { return InputError("invalid rational '" + std::string(text) + "'"); };
    if (s.empty())
        throw bad();
    if (auto dot = s.find('.'); dot != std::string::npos) {
        bool neg = s[0] == '-';
        auto body = neg ? s.substr(1) : s;
        dot = body.find('.');
        auto whole = body.substr(0, dot);
        auto frac = body.substr(dot + 1);
        if ((whole.empty() && frac.empty()) || whole.find_first_not_of("0123456789") != std::string::npos
            || frac.find_first_not_of("0123456789") != std::string::npos)
            throw bad();
        mpz_class scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i)
            scale *= 10;
        Rational q(mpz_class((whole.empty() ? std::string("0") : whole) + frac, 10), scale);
        q.canonicalize();
        return neg ? Rational(-q) : q;
    }
    auto slash = s.find('/');
    auto digits = [](const std::string & t) {
        auto u = (! t.empty() && t[0] == '-') ? t.substr(1) : t;
        return ! u.empty() && u.find_first_not_of("0123456789") == std::string::npos;
    };
    auto num = s.substr(0, slash);
    auto den = slash == std::string::npos ? std::string("1") : s.substr(slash + 1);
    if (! digits(num) || ! digits(den) || den[0] == '-')
        throw bad();
    mpz_class d(den, 10);
    if (d == 0)
        throw InputError("zero denominator in '" + std::string(text) + "'");
    Rational q(mpz_class(num, 10), d);
    q.canonicalize();
    return q;
}

auto format_rational(const Rational & q) -> std::string
{
    Rational c = q;
    c.canonicalize();
    return c.get_str();
}

auto rref(std::vector<Vector> & rows, int columns) -> std::vector<int>
{
    std::vector<int> pivots;
    std::size_t r = 0;
    for (int c = 0; c < columns && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c] == 0)
            ++p;
        if (p == rows.size())
            continue;
        std::swap(rows[r], rows[p]);
        Rational inv = 1 / rows[r][c];
        for (int k = c; k < static_cast<int>(rows[r].size()); ++k)
            rows[r][k] *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0)
                continue;
            Rational f = rows[i][c];
            for (int k = c; k < static_cast<int>(rows[i].size()); ++k)
                rows[i][k] -= f * rows[r][k];
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

auto rank(std::vector<Vector> rows, int columns) -> int
{
    return static_cast<int>(rref(rows, columns).size());
}

auto null_space(std::vector<Vector> rows, int columns) -> std::vector<Vector>
{
    auto pivots = rref(rows, columns);
    std::vector<bool> is_pivot(columns, false);
    for (auto p : pivots)
        is_pivot[p] = true;
    std::vector<Vector> out;
    for (int f = 0; f < columns; ++f) {
        if (is_pivot[f])
            continue;
        Vector v(columns, 0);
        v[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -rows[r][f];
        out.push_back(std::move(v));
    }
    return out;
}

auto dot(const Vector & a, const Vector & b) -> Rational
{
    Rational s = 0;
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
        s += a[i] * b[i];
    return s;
}

auto parse_gaussian(std::string_view text) -> Gaussian
{
    std::string s;
    for (char c : text)
        if (! std::isspace(static_cast<unsigned char>(c)))
            s += c;
    if (s.empty())
        throw InputError("empty complex number");
    if (s.back() != 'i')
        return {parse_rational(s), 0};
    // Split at the last sign that is not the leading one.
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size() - 1; k > 0; --k)
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != '/') {
            split = k;
            break;
        }
    auto imag_text = split == std::string::npos ? s.substr(0, s.size() - 1) : s.substr(split, s.size() - split - 1);
    auto real_text = split == std::string::npos ? std::string() : s.substr(0, split);
    Rational im;
    if (imag_text.empty() || imag_text == "+")
        im = 1;
    else if (imag_text == "-")
        im = -1;
    else
        im = parse_rational(imag_text);
    Rational re = real_text.empty() ? Rational(0) : parse_rational(real_text);
    return {re, im};
}

auto format_gaussian(const Gaussian & z) -> std::string
{
    if (z.im == 0)
        return format_rational(z.re);
    std::string im;
    if (z.im == 1)
        im = "i";
    else if (z.im == -1)
        im = "-i";
    else
        im = format_rational(z.im) + "i";
    if (z.re == 0)
        return im;
    return format_rational(z.re) + (z.im > 0 ? "+" : "") + im;
}

ExactMatrix::ExactMatrix(int n) : _n(n), _a(static_cast<std::size_t>(n) * n) {}

auto ExactMatrix::identity(int n) -> ExactMatrix
{
    ExactMatrix m(n);
    for (int i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

auto ExactMatrix::projection(const std::vector<Vector> & span, int n) -> ExactMatrix
{
    // Orthonormalising is not possible over Q; use P = B (B^T B)^-1 B^T on an independent basis.
    std::vector<Vector> basis = span;
    for (auto & v : basis)
        if (static_cast<int>(v.size()) != n)
            throw InputError("projection: vector length differs from dimension");
    rref(basis, n);
    ExactMatrix p(n);
    int k = static_cast<int>(basis.size());
    if (k == 0)
        return p;
    // Gram matrix G = B B^T (rows of B are basis vectors), inverted by Gauss-Jordan.
    std::vector<Vector> aug(k, Vector(2 * k, 0));
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j)
            aug[i][j] = dot(basis[i], basis[j]);
        aug[i][k + i] = 1;
    }
    rref(aug, k);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            Rational s = 0;
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j)
                    s += basis[i][r] * aug[i][k + j] * basis[j][c];
            p(r, c) = Gaussian(s);
        }
    return p;
}

auto ExactMatrix::adjoint() const -> ExactMatrix
{
    ExactMatrix m(_n);
    for (int r = 0; r < _n; ++r)
        for (int c = 0; c < _n; ++c)
            m(c, r) = (*this)(r, c).conj();
    return m;
}

auto ExactMatrix::scaled(const Gaussian & z) const -> ExactMatrix
{
    ExactMatrix m(*this);
    for (auto & x : m._a)
        x = x * z;
    return m;
}

auto ExactMatrix::is_self_adjoint() const -> bool
{
    return adjoint() == *this;
}

auto ExactMatrix::is_projection() const -> bool
{
    return is_self_adjoint() && (*this) * (*this) == *this;
}

auto ExactMatrix::is_zero() const -> bool
{
    for (auto & x : _a)
        if (! x.is_zero())
            return false;
    return true;
}

auto ExactMatrix::real_rank() const -> int
{
    std::vector<Vector> rows(_n, Vector(_n));
    for (int r = 0; r < _n; ++r)
        for (int c = 0; c < _n; ++c) {
            if ((*this)(r, c).im != 0)
                throw InputError("real_rank: matrix has complex entries");
            rows[r][c] = (*this)(r, c).re;
        }
    return rank(std::move(rows), _n);
}

auto operator+(const ExactMatrix & a, const ExactMatrix & b) -> ExactMatrix
{
    if (a._n != b._n)
        throw InputError("matrix dimension mismatch");
    ExactMatrix m(a._n);
    for (std::size_t i = 0; i < a._a.size(); ++i)
        m._a[i] = a._a[i] + b._a[i];
    return m;
}

auto operator-(const ExactMatrix & a, const ExactMatrix & b) -> ExactMatrix
{
    if (a._n != b._n)
        throw InputError("matrix dimension mismatch");
    ExactMatrix m(a._n);
    for (std::size_t i = 0; i < a._a.size(); ++i)
        m._a[i] = a._a[i] - b._a[i];
    return m;
}

auto operator*(const ExactMatrix & a, const ExactMatrix & b) -> ExactMatrix
{
    if (a._n != b._n)
        throw InputError("matrix dimension mismatch");
    int n = a._n;
    ExactMatrix m(n);
    for (int r = 0; r < n; ++r)
        for (int k = 0; k < n; ++k) {
            const auto & x = a(r, k);
            if (x.is_zero())
                continue;
            for (int c = 0; c < n; ++c)
                if (! b(k, c).is_zero())
                    m(r, c) = m(r, c) + x * b(k, c);
        }
    return m;
}

auto operator==(const ExactMatrix & a, const ExactMatrix & b) -> bool
{
    return a._n == b._n && a._a == b._a;
}

auto kron(const ExactMatrix & a, const ExactMatrix & b) -> ExactMatrix
{
    int n = a._n * b._n;
    ExactMatrix m(n);
    for (int r1 = 0; r1 < a._n; ++r1)
        for (int c1 = 0; c1 < a._n; ++c1)
            for (int r2 = 0; r2 < b._n; ++r2)
                for (int c2 = 0; c2 < b._n; ++c2)
                    m(r1 * b._n + r2, c1 * b._n + c2) = a(r1, c1) * b(r2, c2);
    return m;
}

}
