#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace qlwb {

using Rational = mpq_class;
using Vector = std::vector<Rational>;

/// "p", "p/q" or a decimal such as "-0.25". Throws InputError.
auto parse_rational(std::string_view text) -> Rational;
/// Canonical "p" or "p/q".
auto format_rational(const Rational & q) -> std::string;

/// In-place reduced row echelon form; zero rows are removed. Returns the pivot
/// column of each remaining row.
auto rref(std::vector<Vector> & rows, int columns) -> std::vector<int>;
auto rank(std::vector<Vector> rows, int columns) -> int;
/// Basis of {x : rows * x = 0}, one vector per free column.
auto null_space(std::vector<Vector> rows, int columns) -> std::vector<Vector>;
auto dot(const Vector & a, const Vector & b) -> Rational;

/// Exact complex number with rational real and imaginary parts.
struct Gaussian
{
    Rational re;
    Rational im;

    Gaussian() = default;
    Gaussian(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}
    Gaussian(int r) : re(r), im(0) {}

    auto conj() const -> Gaussian { return {re, -im}; }
    auto is_zero() const -> bool { return re == 0 && im == 0; }

    friend auto operator+(const Gaussian & a, const Gaussian & b) -> Gaussian { return {a.re + b.re, a.im + b.im}; }
    friend auto operator-(const Gaussian & a, const Gaussian & b) -> Gaussian { return {a.re - b.re, a.im - b.im}; }
    friend auto operator-(const Gaussian & a) -> Gaussian { return {-a.re, -a.im}; }
    friend auto operator*(const Gaussian & a, const Gaussian & b) -> Gaussian
    {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend auto operator==(const Gaussian & a, const Gaussian & b) -> bool { return a.re == b.re && a.im == b.im; }
};

/// "a", "bi", "a+bi", "a-bi", "i", "-i" with rational a, b. Throws InputError.
auto parse_gaussian(std::string_view text) -> Gaussian;
auto format_gaussian(const Gaussian & z) -> std::string;

/// Square matrix over Gaussian rationals.
class ExactMatrix
{
public:
    ExactMatrix() = default;
    explicit ExactMatrix(int n);
    static auto identity(int n) -> ExactMatrix;
    /// Orthogonal projection onto the span of real rational vectors of length n.
    static auto projection(const std::vector<Vector> & span, int n) -> ExactMatrix;

    auto dim() const -> int { return _n; }
    auto operator()(int r, int c) -> Gaussian & { return _a[r * _n + c]; }
    auto operator()(int r, int c) const -> const Gaussian & { return _a[r * _n + c]; }

    auto adjoint() const -> ExactMatrix;
    auto scaled(const Gaussian & z) const -> ExactMatrix;
    auto is_projection() const -> bool;
    auto is_self_adjoint() const -> bool;
    auto is_zero() const -> bool;
    /// Rank over the rationals when every entry is real; throws InputError otherwise.
    auto real_rank() const -> int;

    friend auto operator+(const ExactMatrix & a, const ExactMatrix & b) -> ExactMatrix;
    friend auto operator-(const ExactMatrix & a, const ExactMatrix & b) -> ExactMatrix;
    friend auto operator*(const ExactMatrix & a, const ExactMatrix & b) -> ExactMatrix;
    friend auto operator==(const ExactMatrix & a, const ExactMatrix & b) -> bool;

    /// Kronecker product.
    friend auto kron(const ExactMatrix & a, const ExactMatrix & b) -> ExactMatrix;

private:
    int _n = 0;
    std::vector<Gaussian> _a;
};

}
