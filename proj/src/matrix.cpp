#include "z3qg/matrix.hpp"

#include <sstream>

namespace z3qg {

ScalarMatrix identity_matrix(size_t n) {
    ScalarMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

ScalarMatrix operator*(const ScalarMatrix& x, const ScalarMatrix& y) {
    if (x.cols() != y.rows()) throw std::invalid_argument("matrix shape mismatch");
    ScalarMatrix r(x.rows(), y.cols());
    for (size_t i = 0; i < x.rows(); ++i)
        for (size_t k = 0; k < x.cols(); ++k) {
            if (x(i, k).is_zero()) continue;
            for (size_t j = 0; j < y.cols(); ++j) r(i, j) += x(i, k) * y(k, j);
        }
    return r;
}

ScalarMatrix operator+(const ScalarMatrix& x, const ScalarMatrix& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols()) throw std::invalid_argument("matrix shape mismatch");
    ScalarMatrix r = x;
    for (size_t i = 0; i < x.rows(); ++i)
        for (size_t j = 0; j < x.cols(); ++j) r(i, j) += y(i, j);
    return r;
}

ScalarMatrix operator-(const ScalarMatrix& x, const ScalarMatrix& y) { return x + CycScalar(-1) * y; }

ScalarMatrix operator*(const CycScalar& c, const ScalarMatrix& x) {
    ScalarMatrix r = x;
    for (size_t i = 0; i < x.rows(); ++i)
        for (size_t j = 0; j < x.cols(); ++j) r(i, j) *= c;
    return r;
}

ScalarMatrix matrix_power(const ScalarMatrix& x, unsigned n) {
    ScalarMatrix r = identity_matrix(x.rows());
    for (unsigned i = 0; i < n; ++i) r = r * x;
    return r;
}

ScalarMatrix kron(const ScalarMatrix& a, const ScalarMatrix& b) {
    ScalarMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t k = 0; k < a.cols(); ++k)
            for (size_t j = 0; j < b.rows(); ++j)
                for (size_t l = 0; l < b.cols(); ++l) r(i * b.rows() + j, k * b.cols() + l) = a(i, k) * b(j, l);
    return r;
}

PolyMatrix to_poly_matrix(const ScalarMatrix& x) {
    PolyMatrix r(x.rows(), x.cols());
    for (size_t i = 0; i < x.rows(); ++i)
        for (size_t j = 0; j < x.cols(); ++j) r(i, j) = Poly(x(i, j));
    return r;
}

PolyMatrix mul(const PolyMatrix& x, const PolyMatrix& y, const Presentation& p) {
    if (x.cols() != y.rows()) throw std::invalid_argument("matrix shape mismatch");
    PolyMatrix r(x.rows(), y.cols());
    for (size_t i = 0; i < x.rows(); ++i)
        for (size_t k = 0; k < x.cols(); ++k) {
            if (x(i, k).is_zero()) continue;
            for (size_t j = 0; j < y.cols(); ++j)
                if (!y(k, j).is_zero()) r(i, j) += p.mul(x(i, k), y(k, j));
        }
    return r;
}

PolyMatrix mul(const ScalarMatrix& x, const PolyMatrix& y) {
    if (x.cols() != y.rows()) throw std::invalid_argument("matrix shape mismatch");
    PolyMatrix r(x.rows(), y.cols());
    for (size_t i = 0; i < x.rows(); ++i)
        for (size_t k = 0; k < x.cols(); ++k) {
            if (x(i, k).is_zero()) continue;
            for (size_t j = 0; j < y.cols(); ++j) r(i, j) += y(k, j) * x(i, k);
        }
    return r;
}

PolyMatrix mul(const PolyMatrix& x, const ScalarMatrix& y) {
    if (x.cols() != y.rows()) throw std::invalid_argument("matrix shape mismatch");
    PolyMatrix r(x.rows(), y.cols());
    for (size_t i = 0; i < x.rows(); ++i)
        for (size_t k = 0; k < x.cols(); ++k)
            for (size_t j = 0; j < y.cols(); ++j)
                if (!y(k, j).is_zero()) r(i, j) += x(i, k) * y(k, j);
    return r;
}

PolyMatrix operator-(const PolyMatrix& x, const PolyMatrix& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols()) throw std::invalid_argument("matrix shape mismatch");
    PolyMatrix r = x;
    for (size_t i = 0; i < x.rows(); ++i)
        for (size_t j = 0; j < x.cols(); ++j) r(i, j) -= y(i, j);
    return r;
}

std::string KronConvention::str() const {
    std::ostringstream os;
    os << "index grades (" << index_grades[0] << "," << index_grades[1] << "), sign "
       << (sign > 0 ? "+" : "-") << ", factor q" << (exponent == 1 ? "" : "^" + std::to_string(exponent));
    return os.str();
}

int index_grade(size_t index, size_t n, const std::array<int, 2>& grades) {
    long g = 0;
    for (size_t span = n; span > 1; span /= 2) {
        if (span % 2) throw std::invalid_argument("index_grade needs a power-of-two dimension");
        g += grades[(index / (span / 2)) % 2];
    }
    return mod3(g);
}

long kron_exponent(const KronConvention& c, size_t i, size_t j, size_t k, size_t l, size_t na, size_t nb) {
    (void)l;
    long ti = index_grade(i, na, c.index_grades);
    long tk = index_grade(k, na, c.index_grades);
    long tj = index_grade(j, nb, c.index_grades);
    return c.exponent * tj * (ti + c.sign * tk);
}

ScalarMatrix graded_kron(const ScalarMatrix& a, const ScalarMatrix& b, const KronConvention& c) {
    ScalarMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t k = 0; k < a.cols(); ++k)
            for (size_t j = 0; j < b.rows(); ++j)
                for (size_t l = 0; l < b.cols(); ++l)
                    r(i * b.rows() + j, k * b.cols() + l) =
                        q_power(kron_exponent(c, i, j, k, l, a.rows(), b.rows())) * a(i, k) * b(j, l);
    return r;
}

PolyMatrix graded_kron(const PolyMatrix& a, const PolyMatrix& b, const Presentation& p, const KronConvention& c) {
    PolyMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero()) continue;
            for (size_t j = 0; j < b.rows(); ++j)
                for (size_t l = 0; l < b.cols(); ++l) {
                    if (b(j, l).is_zero()) continue;
                    r(i * b.rows() + j, k * b.cols() + l) =
                        p.mul(a(i, k), b(j, l)) * q_power(kron_exponent(c, i, j, k, l, a.rows(), b.rows()));
                }
        }
    return r;
}

TensorMatrix dot_tensor(const PolyMatrix& a, const PolyMatrix& b, TensorSpacePtr space) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
    TensorMatrix r(a.rows(), b.cols(), TensorPoly(space));
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t k = 0; k < b.cols(); ++k)
            for (size_t j = 0; j < a.cols(); ++j) r(i, k) += TensorPoly::pure(space, {a(i, j), b(j, k)});
    return r;
}

namespace {

template <class M, class F>
std::string grid(const M& m, F cell) {
    std::vector<std::vector<std::string>> cells(m.rows());
    std::vector<size_t> width(m.cols(), 1);
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) {
            cells[i].push_back(cell(m(i, j)));
            width[j] = std::max(width[j], cells[i][j].size());
        }
    std::string out;
    for (size_t i = 0; i < m.rows(); ++i) {
        out += "[ ";
        for (size_t j = 0; j < m.cols(); ++j) {
            out += cells[i][j] + std::string(width[j] - cells[i][j].size(), ' ');
            out += j + 1 < m.cols() ? " | " : " ]\n";
        }
    }
    return out;
}

}  // namespace

std::string render(const ScalarMatrix& m) {
    return grid(m, [](const CycScalar& c) { return c.str(); });
}

std::string render(const PolyMatrix& m, const Presentation& p) {
    return grid(m, [&](const Poly& x) { return p.render(x); });
}

ScalarMatrix r_hat() {
    CycScalar q = CycScalar::q();
    ScalarMatrix r(4, 4);
    r(0, 0) = q;
    r(1, 2) = 1;
    r(2, 1) = 1;
    r(2, 2) = q - q * q;
    r(3, 3) = q;
    return r;
}

ScalarMatrix permutation_matrix() { return graded_permutation({0, 0}); }

ScalarMatrix graded_permutation(const std::array<int, 2>& grades) {
    ScalarMatrix p(4, 4);
    for (size_t a = 0; a < 2; ++a)
        for (size_t b = 0; b < 2; ++b) p(b * 2 + a, a * 2 + b) = q_power(static_cast<long>(grades[a]) * grades[b]);
    return p;
}

CheckReport p_cube_check(const std::array<int, 2>& grades) {
    CheckReport rep{"graded-permutation-cube"};
    ScalarMatrix pg = graded_permutation(grades);
    ScalarMatrix cube = matrix_power(pg, 3);
    rep.expect_zero("P^3 - P", cube == permutation_matrix(), render(cube - permutation_matrix()));
    if (pg == permutation_matrix()) rep.fail("graded permutation coincides with the plain swap");
    rep.note("basis grades (" + std::to_string(grades[0]) + "," + std::to_string(grades[1]) + ")");
    return rep;
}

CheckReport hecke_check(const ScalarMatrix& r) {
    CheckReport rep{"hecke"};
    ScalarMatrix lhs = r * r;
    ScalarMatrix rhs = CycScalar::lambda() * r + identity_matrix(r.rows());
    rep.expect_zero("R^2 - (q - q^2) R - I", lhs == rhs, render(lhs - rhs));
    return rep;
}

CheckReport ybe_plain_check(const ScalarMatrix& r) {
    CheckReport rep{"braid-relation"};
    ScalarMatrix i2 = identity_matrix(2);
    ScalarMatrix r12 = kron(r, i2), r23 = kron(i2, r);
    ScalarMatrix lhs = r12 * r23 * r12, rhs = r23 * r12 * r23;
    rep.expect_zero("R12 R23 R12 - R23 R12 R23", lhs == rhs, render(lhs - rhs));
    rep.note("plain Kronecker embedding, 8x8");
    return rep;
}

CheckReport ybe_graded_report(const ScalarMatrix& r, const KronConvention& c) {
    CheckReport rep{"braid-relation-graded"};
    rep.status = Status::report;
    ScalarMatrix i2 = identity_matrix(2);
    ScalarMatrix r12 = graded_kron(r, i2, c), r23 = graded_kron(i2, r, c);
    ScalarMatrix lhs = r12 * r23 * r12, rhs = r23 * r12 * r23;
    bool holds = lhs == rhs;
    rep.note(std::string("graded embedding (") + c.str() + "): braid relation " + (holds ? "holds" : "does not hold"));
    if (!holds) rep.residues.push_back("R12 R23 R12 - R23 R12 R23:\n" + render(lhs - rhs));
    return rep;
}

}  // namespace z3qg
