#include "xy/smallmat.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace xy {

namespace {

void check_dim(int n) {
    if (n != 2 && n != 4) throw std::invalid_argument("matrix dimension must be 2 or 4");
}

void check_same(const CMat& a, const CMat& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("matrix dimension mismatch");
}

}  // namespace

CMat::CMat(int n) : n_(n) {
    check_dim(n);
    e_.fill(cplx{});
}

CMat CMat::identity(int n) {
    CMat m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

CMat& CMat::operator+=(const CMat& o) {
    check_same(*this, o);
    for (int i = 0; i < n_ * n_; ++i) e_[i] += o.e_[i];
    return *this;
}

CMat& CMat::operator-=(const CMat& o) {
    check_same(*this, o);
    for (int i = 0; i < n_ * n_; ++i) e_[i] -= o.e_[i];
    return *this;
}

CMat& CMat::operator*=(cplx s) {
    for (int i = 0; i < n_ * n_; ++i) e_[i] *= s;
    return *this;
}

CMat operator+(CMat a, const CMat& b) { return a += b; }
CMat operator-(CMat a, const CMat& b) { return a -= b; }
CMat operator*(cplx s, CMat a) { return a *= s; }
CMat operator*(double s, CMat a) { return a *= cplx(s); }

CMat operator*(const CMat& a, const CMat& b) {
    check_same(a, b);
    const int n = a.dim();
    CMat c(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx{}) continue;
            for (int j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

CMat adjoint(const CMat& a) {
    CMat r(a.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) r(i, j) = std::conj(a(j, i));
    return r;
}

CMat conjugate(const CMat& a) {
    CMat r(a.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) r(i, j) = std::conj(a(i, j));
    return r;
}

CMat transpose(const CMat& a) {
    CMat r(a.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) r(i, j) = a(j, i);
    return r;
}

cplx trace(const CMat& a) {
    cplx t = 0.0;
    for (int i = 0; i < a.dim(); ++i) t += a(i, i);
    return t;
}

double max_abs(const CMat& a) {
    double m = 0.0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) m = std::max(m, std::abs(a(i, j)));
    return m;
}

double inf_norm(const CMat& a) {
    double m = 0.0;
    for (int i = 0; i < a.dim(); ++i) {
        double row = 0.0;
        for (int j = 0; j < a.dim(); ++j) row += std::abs(a(i, j));
        m = std::max(m, row);
    }
    return m;
}

bool is_hermitian(const CMat& a, double tol) {
    for (int i = 0; i < a.dim(); ++i)
        for (int j = i; j < a.dim(); ++j)
            if (std::abs(a(i, j) - std::conj(a(j, i))) > tol) return false;
    return true;
}

const CMat& pauli(int i) {
    static const std::array<CMat, 4> sig = [] {
        std::array<CMat, 4> s{CMat(2), CMat(2), CMat(2), CMat(2)};
        s[0](0, 0) = 1.0; s[0](1, 1) = 1.0;
        s[1](0, 1) = 1.0; s[1](1, 0) = 1.0;
        s[2](0, 1) = cplx(0.0, -1.0); s[2](1, 0) = cplx(0.0, 1.0);
        s[3](0, 0) = 1.0; s[3](1, 1) = -1.0;
        return s;
    }();
    if (i < 0 || i > 3) throw std::invalid_argument("pauli index out of range");
    return sig[i];
}

CMat kron(const CMat& a, const CMat& b) {
    if (a.dim() != 2 || b.dim() != 2) throw std::invalid_argument("kron expects 2x2 factors");
    CMat r(4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l)
                    r(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
    return r;
}

CMat outer(const Vec4& u, const Vec4& v) {
    CMat r(4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r(i, j) = u[i] * std::conj(v[j]);
    return r;
}

cplx qform(const Vec4& u, const CMat& a, const Vec4& v) {
    if (a.dim() != 4) throw std::invalid_argument("qform expects a 4x4 matrix");
    cplx acc = 0.0;
    for (int i = 0; i < 4; ++i) {
        cplx row = 0.0;
        for (int j = 0; j < 4; ++j) row += a(i, j) * v[j];
        acc += std::conj(u[i]) * row;
    }
    return acc;
}

EigenDecomposition eig_hermitian(const CMat& a) {
    const int n = a.dim();
    check_dim(n);
    const double scale = max_abs(a);
    if (!is_hermitian(a, 1e-12 * std::max(1.0, scale)))
        throw std::invalid_argument("eig_hermitian: matrix is not Hermitian");

    CMat w = a;
    CMat v = CMat::identity(n);
    // Symmetrize exactly so rounding asymmetry cannot feed the rotations.
    for (int i = 0; i < n; ++i) {
        w(i, i) = cplx(w(i, i).real(), 0.0);
        for (int j = i + 1; j < n; ++j) {
            const cplx m = 0.5 * (w(i, j) + std::conj(w(j, i)));
            w(i, j) = m;
            w(j, i) = std::conj(m);
        }
    }

    const double thr = 1e-14 * scale;
    if (scale > 0.0) {
        bool converged = false;
        for (int sweep = 0; sweep < 80 && !converged; ++sweep) {
            double off = 0.0;
            for (int p = 0; p < n - 1; ++p)
                for (int q = p + 1; q < n; ++q) off = std::max(off, std::abs(w(p, q)));
            if (off <= thr) { converged = true; break; }

            for (int p = 0; p < n - 1; ++p)
                for (int q = p + 1; q < n; ++q) {
                    const cplx g = w(p, q);
                    const double ag = std::abs(g);
                    if (ag == 0.0) continue;
                    const double alpha = w(p, p).real();
                    const double beta = w(q, q).real();
                    const double zeta = (alpha - beta) / (2.0 * ag);
                    const double t = (zeta >= 0.0 ? 1.0 : -1.0) /
                                     (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                    const double c = 1.0 / std::sqrt(1.0 + t * t);
                    const double s = t * c;
                    const cplx ph = g / ag;        // e^{i phi}
                    const cplx phc = std::conj(ph);

                    // W <- U' W U with U = [[c, -s], [s e^{-i phi}, c e^{-i phi}]]
                    // on the (p,q) plane.
                    std::array<cplx, 4> rp, rq;
                    for (int k = 0; k < n; ++k) { rp[k] = w(p, k); rq[k] = w(q, k); }
                    for (int k = 0; k < n; ++k) {
                        w(p, k) = c * rp[k] + s * ph * rq[k];
                        w(q, k) = -s * rp[k] + c * ph * rq[k];
                    }
                    for (int k = 0; k < n; ++k) { rp[k] = w(k, p); rq[k] = w(k, q); }
                    for (int k = 0; k < n; ++k) {
                        w(k, p) = c * rp[k] + s * phc * rq[k];
                        w(k, q) = -s * rp[k] + c * phc * rq[k];
                    }
                    w(p, q) = 0.0;
                    w(q, p) = 0.0;
                    w(p, p) = cplx(w(p, p).real(), 0.0);
                    w(q, q) = cplx(w(q, q).real(), 0.0);

                    for (int k = 0; k < n; ++k) { rp[k] = v(k, p); rq[k] = v(k, q); }
                    for (int k = 0; k < n; ++k) {
                        v(k, p) = c * rp[k] + s * phc * rq[k];
                        v(k, q) = -s * rp[k] + c * phc * rq[k];
                    }
                }
        }
        if (!converged) throw std::runtime_error("eig_hermitian: Jacobi sweep limit reached");
    }

    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(),
              [&](int i, int j) { return w(i, i).real() > w(j, j).real(); });

    EigenDecomposition d;
    d.values.resize(n);
    d.vectors = CMat(n);
    for (int j = 0; j < n; ++j) {
        d.values[j] = w(idx[j], idx[j]).real();
        for (int i = 0; i < n; ++i) d.vectors(i, j) = v(i, idx[j]);
    }
    return d;
}

CMat expm(const CMat& a) {
    const int n = a.dim();
    check_dim(n);

    double nrm = inf_norm(a);
    int s = 0;
    while (nrm > 0.5 && s < 1100) { nrm *= 0.5; ++s; }

    CMat x(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            x(i, j) = cplx(std::ldexp(a(i, j).real(), -s), std::ldexp(a(i, j).imag(), -s));

    CMat result = CMat::identity(n);
    CMat term = CMat::identity(n);
    for (int k = 1; k <= 64; ++k) {
        term = term * x;
        term *= cplx(1.0 / k);
        result += term;
        if (max_abs(term) <= 1e-18 * max_abs(result)) break;
    }
    for (int i = 0; i < s; ++i) result = result * result;
    return result;
}

std::vector<double> singular_values(const CMat& a) {
    const int n = a.dim();
    check_dim(n);
    CMat b = a;

    bool done = false;
    for (int sweep = 0; sweep < 60 && !done; ++sweep) {
        done = true;
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) {
                cplx g = 0.0;
                double al = 0.0, be = 0.0;
                for (int i = 0; i < n; ++i) {
                    g += std::conj(b(i, p)) * b(i, q);
                    al += std::norm(b(i, p));
                    be += std::norm(b(i, q));
                }
                const double ag = std::abs(g);
                if (al == 0.0 || be == 0.0 || ag <= 1e-15 * std::sqrt(al) * std::sqrt(be))
                    continue;
                done = false;
                const double zeta = (be - al) / (2.0 * ag);
                const double t = (zeta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double sn = t * c;
                const cplx ph = g / ag;
                const cplx phc = std::conj(ph);
                for (int i = 0; i < n; ++i) {
                    const cplx xp = b(i, p);
                    const cplx xq = b(i, q);
                    b(i, p) = c * xp - sn * phc * xq;
                    b(i, q) = sn * ph * xp + c * xq;
                }
            }
    }
    if (!done) throw std::runtime_error("singular_values: Jacobi sweep limit reached");

    std::vector<double> sv(n);
    for (int j = 0; j < n; ++j) {
        double acc = 0.0;
        for (int i = 0; i < n; ++i) acc += std::norm(b(i, j));
        sv[j] = std::sqrt(acc);
    }
    std::sort(sv.begin(), sv.end(), std::greater<>());
    return sv;
}

double trace_norm_hermitian(const CMat& a) {
    const auto d = eig_hermitian(a);
    double acc = 0.0;
    for (double v : d.values) acc += std::abs(v);
    return acc;
}

double trace_distance(const CMat& a, const CMat& b) {
    return 0.5 * trace_norm_hermitian(a - b);
}

}  // namespace xy
