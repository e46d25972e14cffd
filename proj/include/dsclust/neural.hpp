#pragma once

// Hopfield-style relaxation network whose stable states encode partitions.
// Rows are pieces of evidence, columns are clusters. Connection strengths
// come from pairwise evidential weights -log(1 - c_jk), so the network
// minimizes the pairwise surrogate of the metaconflict, not Mcf itself.
//
// Synchronous update, all neurons from the iteration-t voltages:
//   u'[m][n] = u[m][n] + eta * ( sum_{i!=m} (-dt*w[i][m] + gi) * v[i][n]
//                              + sum_{j!=n} (ri + gi) * v[m][j]
//                              + eb - u[m][n] )
//   v'[m][n] = (1 + tanh(u'[m][n] / u0)) / 2

#include <functional>
#include <span>
#include <vector>

#include "dsclust/evidence.hpp"
#include "dsclust/rng.hpp"

namespace dsclust {

// A decode is treated as crisp when every row has a winner at or above
// this output voltage.
inline constexpr double kCrispThreshold = 0.9;

struct NetworkParams {
    // Defaults for eta, dt, gi, ri and eb come from the shipped calibration
    // (see tools/calibrate.cpp and params/default_network.json).
    double eta = 0.05;          // gain factor, step size of the relaxation
    double u0 = 0.02;           // output-slope constant
    double dt = 1.0;            // scale of the conflict weights, > 0
    double gi = -0.2;           // global inhibition, <= 0
    double ri = -1.0;           // row inhibition, <= 0
    double eb = 0.5;            // excitation bias, >= 0
    double noise_scale = 0.1;   // initialization noise as a fraction of u0
    double conv_epsilon = 1e-4; // per-neuron |dV| threshold
    int conv_window = 3;        // consecutive quiet iterations required
    int max_iters = 1000;
};

// Throws Error when a field is outside its documented range.
void validate_params(const NetworkParams& p);

// Pairwise conflicts and their weights for all evidence pairs; symmetric,
// zero diagonal.
struct ConflictMatrix {
    int n_evidence = 0;
    std::vector<double> c;  // row-major n x n
    std::vector<double> w;  // -log(1 - c), elementwise

    double conflict(int j, int k) const { return c[j * n_evidence + k]; }
    double weight(int j, int k) const { return w[j * n_evidence + k]; }
};

ConflictMatrix build_network(std::span<const SimpleEvidence> evidence);

// Effective connection between rows i and m within one column; grows more
// inhibitory with conflict.
inline double column_weight(const ConflictMatrix& mat, const NetworkParams& p, int i, int m) {
    return -p.dt * mat.weight(i, m) + p.gi;
}

inline double row_weight(const NetworkParams& p) { return p.ri + p.gi; }

struct NetworkState {
    int n_rows = 0;  // evidence
    int n_cols = 0;  // clusters
    std::vector<double> u;  // input voltages, row-major
    std::vector<double> v;  // output voltages in [0,1]
    int t = 0;

    double input(int m, int n) const { return u[m * n_cols + n]; }
    double output(int m, int n) const { return v[m * n_cols + n]; }
};

// Starting input voltage u00 = u0 * atanh(2/r - 1); the degenerate r = 1
// column is pinned at +4*u0 so every output saturates near 1.
double initial_voltage(double u0, int r);

// All neurons at u00 plus uniform noise in [-noise_scale*u0, +noise_scale*u0].
NetworkState init_state(int n_evidence, int r, const NetworkParams& params, Rng& rng);

NetworkState step(const NetworkState& state, const ConflictMatrix& matrix,
                  const NetworkParams& params);

struct RelaxationResult {
    NetworkState state;
    int iterations = 0;
    bool converged = false;
};

// Iterates until every neuron's |dV| stays below conv_epsilon for
// conv_window consecutive iterations, or until max_iters. Non-convergence
// is reported, not thrown. The callback, when set, sees the state after
// every step.
RelaxationResult run_to_convergence(
    NetworkState state, const ConflictMatrix& matrix, const NetworkParams& params,
    const std::function<void(const NetworkState&)>& on_iteration = {});

struct DecodeResult {
    std::vector<int> assignment;  // per row: argmax column, ties to the lowest
    double crispness = 0.0;       // min over rows of the max row voltage
};

DecodeResult decode(const NetworkState& state);

// Surrogate the network actually minimizes, evaluated on a hard decode:
// sum over co-clustered pairs of w[j][k].
double pairwise_surrogate(const ConflictMatrix& matrix, std::span<const int> assignment);

}  // namespace dsclust
