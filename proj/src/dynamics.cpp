#include "qrel/dynamics.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace qrel {

void KossakowskiSpec::validate() const {
    if (gamma_plus < 0.0) throw DomainError("gamma_plus must be non-negative");
    if (std::abs(gamma_minus) > gamma_plus + 1e-12)
        throw DomainError("|gamma_minus| must not exceed gamma_plus");
    const double n = std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2]);
    if (std::abs(n - 1.0) > 1e-12) throw DomainError("r must be a unit vector");
}

Matrix kossakowski_matrix(const KossakowskiSpec& spec) {
    spec.validate();
    static constexpr int levi[3][3] = {{-1, 2, 1}, {2, -1, 0}, {1, 0, -1}};
    static constexpr double sign[3][3] = {{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}};
    Matrix x(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Complex v = (i == j) ? Complex(spec.gamma_plus, 0.0) : Complex{};
            if (i != j)
                v += Complex(0.0, -spec.gamma_minus * sign[i][j]) * spec.r[levi[i][j]];
            v += spec.gamma_zero * spec.r[i] * spec.r[j];
            x(i, j) = v;
        }
    return x;
}

namespace {

const Matrix& collective(int i) {
    static const Matrix j[3] = {
        kron(pauli::x(), pauli::id2()) + kron(pauli::id2(), pauli::x()),
        kron(pauli::y(), pauli::id2()) + kron(pauli::id2(), pauli::y()),
        kron(pauli::z(), pauli::id2()) + kron(pauli::id2(), pauli::z()),
    };
    return j[i];
}

Matrix rhs_raw(const Matrix& rho, const Matrix& x, const std::array<double, 3>& r,
               double epsilon) {
    Matrix h(4, 4);
    for (int j = 0; j < 3; ++j) h += collective(j) * Complex(epsilon / 2.0 * r[j], 0.0);
    Matrix out = (h * rho - rho * h) * Complex(0.0, -1.0);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const Complex c = x(i, j) * 0.5;
            if (c == Complex{}) continue;
            const Matrix& ji = collective(i);
            const Matrix& jj = collective(j);
            const Matrix jij = ji * jj;
            out += (jj * rho * ji * 2.0 - jij * rho - rho * jij) * c;
        }
    return out;
}

// 16x16 superoperator acting on vec(rho), column-stacked row-major.
struct Superop {
    std::array<std::array<Complex, 16>, 16> l{};

    Superop(const KossakowskiSpec& spec, double epsilon) {
        const Matrix x = kossakowski_matrix(spec);
        for (int col = 0; col < 16; ++col) {
            Matrix basis(4, 4);
            basis(col / 4, col % 4) = 1.0;
            const Matrix img = rhs_raw(basis, x, spec.r, epsilon);
            for (int row = 0; row < 16; ++row) l[row][col] = img(row / 4, row % 4);
        }
    }

    void apply(const std::array<Complex, 16>& in, std::array<Complex, 16>& out) const {
        for (int row = 0; row < 16; ++row) {
            Complex acc{};
            for (int col = 0; col < 16; ++col) acc += l[row][col] * in[col];
            out[row] = acc;
        }
    }
};

std::array<Complex, 16> to_vec(const Matrix& m) {
    std::array<Complex, 16> v;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) v[4 * i + j] = m(i, j);
    return v;
}

Matrix to_mat(const std::array<Complex, 16>& v) {
    Matrix m(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m(i, j) = v[4 * i + j];
    return m;
}

double norm_of(const std::array<Complex, 16>& v) {
    double s = 0.0;
    for (const Complex& c : v) s += std::norm(c);
    return std::sqrt(s);
}

}  // namespace

Matrix lindblad_rhs(const DensityMatrix& rho, const KossakowskiSpec& spec, double epsilon) {
    spec.validate();
    const Matrix x = kossakowski_matrix(spec);
    Matrix out = rhs_raw(rho.mat(), x, spec.r, epsilon);
    return (out + out.adjoint()) * Complex(0.5, 0.0);
}

double kappa0_of(const DensityMatrix& rho) {
    double k = 0.0;
    for (int i = 0; i < 3; ++i) {
        const Matrix op = kron(pauli::by_index(i), pauli::by_index(i));
        k += (rho.mat() * op).trace().real();
    }
    return k;
}

EvolutionResult evolve(const DensityMatrix& rho0, const KossakowskiSpec& spec, double epsilon,
                       const EvolutionConfig& cfg) {
    spec.validate();
    const double dt_max = 0.01 / (6.0 * std::max(spec.gamma_plus, 1e-12));
    const double dt = cfg.dt <= 0.0 ? dt_max : cfg.dt;
    if (dt > dt_max * (1.0 + 1e-12)) throw DomainError("dt exceeds the stability bound 0.01/(6 gamma_plus)");
    if (cfg.max_time <= 0.0) throw DomainError("max_time must be positive");

    const Superop sop(spec, epsilon);
    const long sample_stride = std::max(1L, std::lround(std::ceil(0.1 / dt)));

    std::array<Complex, 16> state = to_vec(rho0.mat());
    std::array<Complex, 16> k1, k2, k3, k4, tmp, rhs;

    EvolutionResult res{rho0, {}, false, 0.0};
    auto record = [&](double t) {
        const Matrix m = to_mat(state);
        TrajectorySample s;
        s.t = t;
        s.rho = m;
        s.kappa0 = 0.0;
        for (int i = 0; i < 3; ++i)
            s.kappa0 += (m * kron(pauli::by_index(i), pauli::by_index(i))).trace().real();
        sop.apply(state, rhs);
        s.rhs_norm = norm_of(rhs);
        const double n = s.rhs_norm;
        res.trajectory.push_back(std::move(s));
        return n;
    };

    double t = 0.0;
    double rhs_norm = record(0.0);
    long step = 0;
    while (rhs_norm >= cfg.convergence_tol && t < cfg.max_time) {
        sop.apply(state, k1);
        for (int i = 0; i < 16; ++i) tmp[i] = state[i] + 0.5 * dt * k1[i];
        sop.apply(tmp, k2);
        for (int i = 0; i < 16; ++i) tmp[i] = state[i] + 0.5 * dt * k2[i];
        sop.apply(tmp, k3);
        for (int i = 0; i < 16; ++i) tmp[i] = state[i] + dt * k3[i];
        sop.apply(tmp, k4);
        for (int i = 0; i < 16; ++i)
            state[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);

        // keep the state exactly Hermitian and unit trace
        for (int i = 0; i < 4; ++i)
            for (int j = i; j < 4; ++j) {
                const Complex avg = 0.5 * (state[4 * i + j] + std::conj(state[4 * j + i]));
                state[4 * i + j] = avg;
                state[4 * j + i] = std::conj(avg);
            }
        Complex tr{};
        for (int i = 0; i < 4; ++i) tr += state[5 * i];
        for (Complex& c : state) c /= tr.real();

        t += dt;
        ++step;
        sop.apply(state, rhs);
        rhs_norm = norm_of(rhs);
        if (step % sample_stride == 0) record(t);
    }
    if (res.trajectory.back().t != t) record(t);

    res.converged = rhs_norm < cfg.convergence_tol;
    res.elapsed = t;
    Matrix final = to_mat(state);
    res.rho_final = DensityMatrix((final + final.adjoint()) * Complex(0.5, 0.0));
    return res;
}

void write_trajectory_csv(std::ostream& out, const std::vector<TrajectorySample>& trajectory) {
    out << "t,rho00,rho11,rho22,rho33,"
           "re01,im01,re02,im02,re03,im03,re12,im12,re13,im13,re23,im23,"
           "kappa0,rhs_norm\n";
    char buf[32];
    auto put = [&](double v, char sep) {
        std::snprintf(buf, sizeof buf, "%.17g", v);
        out << buf << sep;
    };
    for (const TrajectorySample& s : trajectory) {
        put(s.t, ',');
        for (int i = 0; i < 4; ++i) put(s.rho(i, i).real(), ',');
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) {
                put(s.rho(i, j).real(), ',');
                put(s.rho(i, j).imag(), ',');
            }
        put(s.kappa0, ',');
        std::snprintf(buf, sizeof buf, "%.17g", s.rhs_norm);
        out << buf << '\n';
    }
}

}  // namespace qrel
