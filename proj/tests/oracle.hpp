// Copyright 2026 The spinnet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

// Reference constructions for tests. Nothing here calls the library's
// embedding or decomposition routines.

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using C = std::complex<double>;
using M = Eigen::MatrixXcd;
using V = Eigen::VectorXcd;

inline M kron(const M &a, const M &b) {
    M out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

// |r><c| on one qubit.
inline M unit(int r, int c) {
    M m = M::Zero(2, 2);
    m(r, c) = 1.0;
    return m;
}

// Kronecker chain over n_qubits with factors[q] on qubit q (qubit 0 rightmost).
inline M chain(const std::vector<M> &factors) {
    M out = M::Identity(1, 1);
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
        out = kron(out, *it);
    }
    return out;
}

inline M embed1(const M &g, int q, int n_qubits) {
    std::vector<M> f(n_qubits, M::Identity(2, 2));
    f[q] = g;
    return chain(f);
}

// Two-qubit gate whose own basis index is bit(q0) + 2 bit(q1), expanded as a
// sum of elementary tensor products.
inline M embed2_lsb_first(const M &g, int q0, int q1, int n_qubits) {
    const Eigen::Index dim = Eigen::Index{1} << n_qubits;
    M out = M::Zero(dim, dim);
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            if (g(r, c) == C(0.0)) {
                continue;
            }
            std::vector<M> f(n_qubits, M::Identity(2, 2));
            f[q0] = unit(r & 1, c & 1);
            f[q1] = unit(r >> 1, c >> 1);
            out += g(r, c) * chain(f);
        }
    }
    return out;
}

// Textbook ket order: first qubit is the most significant bit.
inline M embed2_textbook(const M &g, int first, int second, int n_qubits) {
    return embed2_lsb_first(g, second, first, n_qubits);
}

inline M pauli_x() {
    M m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}
inline M pauli_y() {
    M m(2, 2);
    m << 0, C(0, -1), C(0, 1), 0;
    return m;
}
inline M pauli_z() {
    M m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

// exp(+i theta sigma) for a Pauli matrix by its power series closed form.
inline M rot(const M &pauli, double theta) {
    return std::cos(theta) * M::Identity(2, 2) + C(0, std::sin(theta)) * pauli;
}

inline M random_unitary(int dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    M a(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            a(i, j) = C(g(rng), g(rng));
        }
    }
    Eigen::HouseholderQR<M> qr(a);
    M q = qr.householderQ();
    M r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < dim; ++i) {
        q.col(i) *= std::polar(1.0, std::arg(r(i, i)));
    }
    return q;
}

inline M random_su2(std::mt19937_64 &rng) {
    M u = random_unitary(2, rng);
    return u / std::sqrt(u.determinant());
}

inline V random_state(int dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    V v(dim);
    for (int i = 0; i < dim; ++i) {
        v(i) = C(g(rng), g(rng));
    }
    return v / v.norm();
}

// Minimum over global phases of max |a - e^{i t} b|, via the phase of <b, a>.
inline double phase_distance(const M &a, const M &b) {
    const C overlap = (b.adjoint() * a).trace();
    const C ph = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : C(1.0);
    return (a - ph * b).cwiseAbs().maxCoeff();
}

inline double max_abs(const M &m) {
    return m.cwiseAbs().maxCoeff();
}

}  // namespace oracle
