#pragma once

// Periodic (cyclic) block tridiagonal solves.  The Jacobian of the discrete
// gradient and the descent preconditioner both have this structure: N x N
// blocks on three diagonals plus the two periodic corner blocks.

#include <cmath>
#include <cstring>
#include <span>
#include <vector>

namespace plap::detail {

// Gaussian elimination with partial pivoting; A is n x n row-major and is
// destroyed, B holds k right-hand sides (n x k row-major) and receives the
// solution.  Returns false on a vanishing pivot.
inline bool gauss_solve(int n, std::vector<double>& A, std::vector<double>& B, int k) {
  for (int col = 0; col < n; ++col) {
    int piv = col;
    double best = std::abs(A[static_cast<std::size_t>(col) * n + col]);
    for (int rr = col + 1; rr < n; ++rr) {
      const double v = std::abs(A[static_cast<std::size_t>(rr) * n + col]);
      if (v > best) {
        best = v;
        piv = rr;
      }
    }
    if (!(best > 1e-300)) return false;
    if (piv != col) {
      for (int c = 0; c < n; ++c)
        std::swap(A[static_cast<std::size_t>(piv) * n + c],
                  A[static_cast<std::size_t>(col) * n + c]);
      for (int c = 0; c < k; ++c)
        std::swap(B[static_cast<std::size_t>(piv) * k + c],
                  B[static_cast<std::size_t>(col) * k + c]);
    }
    const double d = A[static_cast<std::size_t>(col) * n + col];
    for (int rr = col + 1; rr < n; ++rr) {
      const double f = A[static_cast<std::size_t>(rr) * n + col] / d;
      if (f == 0.0) continue;
      for (int c = col; c < n; ++c)
        A[static_cast<std::size_t>(rr) * n + c] -= f * A[static_cast<std::size_t>(col) * n + c];
      for (int c = 0; c < k; ++c)
        B[static_cast<std::size_t>(rr) * k + c] -= f * B[static_cast<std::size_t>(col) * k + c];
    }
  }
  for (int col = n - 1; col >= 0; --col) {
    const double d = A[static_cast<std::size_t>(col) * n + col];
    for (int c = 0; c < k; ++c) {
      double s = B[static_cast<std::size_t>(col) * k + c];
      for (int j = col + 1; j < n; ++j)
        s -= A[static_cast<std::size_t>(col) * n + j] * B[static_cast<std::size_t>(j) * k + c];
      B[static_cast<std::size_t>(col) * k + c] = s / d;
    }
  }
  return true;
}

// Solves the cyclic block tridiagonal system
//   C_i x_{i-1} + A_i x_i + B_i x_{i+1} = r_i   (indices mod M)
// by bordering on the last block unknown.  Blocks are N x N row-major,
// stored contiguously per diagonal.  rhs (M*N) receives the solution.
// Returns false on pivot breakdown.
inline bool solve_cyclic_block_tridiag(int M, int N, const std::vector<double>& sub,
                                       const std::vector<double>& diag,
                                       const std::vector<double>& sup,
                                       std::vector<double>& rhs) {
  const int Mr = M - 1;          // reduced chain x_0 .. x_{M-2}
  const int K = 1 + N;           // vector column + coupling columns to x_{M-1}
  const std::size_t NN = static_cast<std::size_t>(N) * N;

  auto blk = [&](const std::vector<double>& a, int i) { return a.data() + NN * i; };

  std::vector<double> W(static_cast<std::size_t>(Mr) * NN, 0.0);   // P_i^{-1} B_i
  std::vector<double> Z(static_cast<std::size_t>(Mr) * N * K, 0.0);  // P_i^{-1} R_i
  std::vector<double> P(NN), R(static_cast<std::size_t>(N) * K);

  for (int i = 0; i < Mr; ++i) {
    // P = A_i - C_i W_{i-1}
    std::memcpy(P.data(), blk(diag, i), NN * sizeof(double));
    if (i > 0) {
      const double* C = blk(sub, i);
      const double* Wp = &W[NN * (i - 1)];
      for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
          double s = 0.0;
          for (int c = 0; c < N; ++c) s += C[a * N + c] * Wp[static_cast<std::size_t>(c) * N + b];
          P[static_cast<std::size_t>(a) * N + b] -= s;
        }
    }
    // R = [r_i | y-coupling] - C_i Z_{i-1}
    for (int a = 0; a < N; ++a) {
      R[static_cast<std::size_t>(a) * K] = rhs[static_cast<std::size_t>(i) * N + a];
      for (int b = 0; b < N; ++b) R[static_cast<std::size_t>(a) * K + 1 + b] = 0.0;
    }
    if (i == 0) {
      const double* C0 = blk(sub, 0);  // couples x_0 to x_{-1} = x_{M-1}
      for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b)
          R[static_cast<std::size_t>(a) * K + 1 + b] -= C0[a * N + b];
    }
    if (i == Mr - 1) {
      const double* Bl = blk(sup, i);  // couples x_{M-2} to x_{M-1}
      for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b)
          R[static_cast<std::size_t>(a) * K + 1 + b] -= Bl[a * N + b];
    }
    if (i > 0) {
      const double* C = blk(sub, i);
      const double* Zp = &Z[static_cast<std::size_t>(N) * K * (i - 1)];
      for (int a = 0; a < N; ++a)
        for (int c = 0; c < K; ++c) {
          double s = 0.0;
          for (int b = 0; b < N; ++b) s += C[a * N + b] * Zp[static_cast<std::size_t>(b) * K + c];
          R[static_cast<std::size_t>(a) * K + c] -= s;
        }
    }
    // Solve P [W_i | Z_i] = [B_i | R]
    std::vector<double> Pm = P;
    std::vector<double> BR(static_cast<std::size_t>(N) * (N + K));
    const double* Bi = blk(sup, i);
    for (int a = 0; a < N; ++a) {
      for (int b = 0; b < N; ++b) BR[static_cast<std::size_t>(a) * (N + K) + b] = Bi[a * N + b];
      for (int c = 0; c < K; ++c)
        BR[static_cast<std::size_t>(a) * (N + K) + N + c] = R[static_cast<std::size_t>(a) * K + c];
    }
    if (!gauss_solve(N, Pm, BR, N + K)) return false;
    for (int a = 0; a < N; ++a) {
      for (int b = 0; b < N; ++b)
        W[NN * i + static_cast<std::size_t>(a) * N + b] = BR[static_cast<std::size_t>(a) * (N + K) + b];
      for (int c = 0; c < K; ++c)
        Z[static_cast<std::size_t>(N) * K * i + static_cast<std::size_t>(a) * K + c] =
            BR[static_cast<std::size_t>(a) * (N + K) + N + c];
    }
  }

  // Back substitution on the reduced chain: X_i = Z_i - W_i X_{i+1}.
  std::vector<double> X(static_cast<std::size_t>(Mr) * N * K);
  for (int i = Mr - 1; i >= 0; --i) {
    double* Xi = &X[static_cast<std::size_t>(N) * K * i];
    const double* Zi = &Z[static_cast<std::size_t>(N) * K * i];
    std::memcpy(Xi, Zi, static_cast<std::size_t>(N) * K * sizeof(double));
    if (i < Mr - 1) {
      const double* Wi = &W[NN * i];
      const double* Xn = &X[static_cast<std::size_t>(N) * K * (i + 1)];
      for (int a = 0; a < N; ++a)
        for (int c = 0; c < K; ++c) {
          double s = 0.0;
          for (int b = 0; b < N; ++b) s += Wi[static_cast<std::size_t>(a) * N + b] * Xn[static_cast<std::size_t>(b) * K + c];
          Xi[static_cast<std::size_t>(a) * K + c] -= s;
        }
    }
  }

  // Closing equation: C_{M-1} x_{M-2} + A_{M-1} y + B_{M-1} x_0 = r_{M-1},
  // with x_i = u_i + V_i y split stored in X columns.
  std::vector<double> Ay(NN);
  std::vector<double> ry(static_cast<std::size_t>(N));
  std::memcpy(Ay.data(), blk(diag, M - 1), NN * sizeof(double));
  for (int a = 0; a < N; ++a) ry[a] = rhs[static_cast<std::size_t>(M - 1) * N + a];
  const double* Clast = blk(sub, M - 1);   // couples to x_{M-2}
  const double* Blast = blk(sup, M - 1);   // couples to x_0
  const double* Xl = &X[static_cast<std::size_t>(N) * K * (Mr - 1)];
  const double* X0 = &X[0];
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) {
      double su = 0.0, sm = 0.0;
      for (int c = 0; c < N; ++c) {
        su += Clast[a * N + c] * Xl[static_cast<std::size_t>(c) * K];
        sm += Clast[a * N + c] * Xl[static_cast<std::size_t>(c) * K + 1 + b];
      }
      if (b == 0) ry[a] -= su;
      Ay[static_cast<std::size_t>(a) * N + b] += sm;
    }
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) {
      double su = 0.0, sm = 0.0;
      for (int c = 0; c < N; ++c) {
        su += Blast[a * N + c] * X0[static_cast<std::size_t>(c) * K];
        sm += Blast[a * N + c] * X0[static_cast<std::size_t>(c) * K + 1 + b];
      }
      if (b == 0) ry[a] -= su;
      Ay[static_cast<std::size_t>(a) * N + b] += sm;
    }
  if (!gauss_solve(N, Ay, ry, 1)) return false;

  // Assemble the solution into rhs.
  for (int a = 0; a < N; ++a) rhs[static_cast<std::size_t>(M - 1) * N + a] = ry[a];
  for (int i = 0; i < Mr; ++i) {
    const double* Xi = &X[static_cast<std::size_t>(N) * K * i];
    for (int a = 0; a < N; ++a) {
      double s = Xi[static_cast<std::size_t>(a) * K];
      for (int b = 0; b < N; ++b) s += Xi[static_cast<std::size_t>(a) * K + 1 + b] * ry[b];
      rhs[static_cast<std::size_t>(i) * N + a] = s;
    }
  }
  return true;
}

}  // namespace plap::detail
