#include "dsclust/neural.hpp"

#include <cmath>

namespace dsclust {

void validate_params(const NetworkParams& p) {
    if (!(p.eta > 0.0)) throw Error("eta must be > 0");
    if (!(p.u0 > 0.0)) throw Error("u0 must be > 0");
    if (!(p.dt > 0.0)) throw Error("dt must be > 0");
    if (p.gi > 0.0) throw Error("gi must be <= 0");
    if (p.ri > 0.0) throw Error("ri must be <= 0");
    if (p.eb < 0.0) throw Error("eb must be >= 0");
    if (p.noise_scale < 0.0) throw Error("noise_scale must be >= 0");
    if (p.conv_window < 1) throw Error("conv_window must be >= 1");
    if (p.max_iters < 0) throw Error("max_iters must be >= 0");
}

ConflictMatrix build_network(std::span<const SimpleEvidence> evidence) {
    const int n = static_cast<int>(evidence.size());
    ConflictMatrix mat;
    mat.n_evidence = n;
    mat.c.assign(static_cast<std::size_t>(n) * n, 0.0);
    mat.w.assign(static_cast<std::size_t>(n) * n, 0.0);
    for (int j = 0; j < n; ++j) {
        for (int k = j + 1; k < n; ++k) {
            const double c = pairwise_conflict(evidence[j], evidence[k]);
            if (c >= 1.0) throw ConflictAtOne();
            const double w = weight_of_conflict(c);
            mat.c[j * n + k] = mat.c[k * n + j] = c;
            mat.w[j * n + k] = mat.w[k * n + j] = w;
        }
    }
    return mat;
}

double initial_voltage(double u0, int r) {
    if (r == 1) return 4.0 * u0;  // atanh(1) diverges
    return u0 * std::atanh(2.0 / r - 1.0);
}

namespace {

double activation(double u, double u0) { return 0.5 * (1.0 + std::tanh(u / u0)); }

}  // namespace

NetworkState init_state(int n_evidence, int r, const NetworkParams& params, Rng& rng) {
    validate_params(params);
    if (r < 1) throw BadSize("need at least one cluster column");

    NetworkState s;
    s.n_rows = n_evidence;
    s.n_cols = r;
    s.u.resize(static_cast<std::size_t>(n_evidence) * r);
    s.v.resize(s.u.size());

    const double u00 = initial_voltage(params.u0, r);
    const double amp = params.noise_scale * params.u0;
    for (double& u : s.u) u = u00 + rng.uniform(-amp, amp);
    for (std::size_t i = 0; i < s.u.size(); ++i) s.v[i] = activation(s.u[i], params.u0);
    return s;
}

NetworkState step(const NetworkState& state, const ConflictMatrix& matrix,
                  const NetworkParams& params) {
    const int rows = state.n_rows;
    const int cols = state.n_cols;

    NetworkState next = state;
    next.t = state.t + 1;

    const double rw = row_weight(params);
    for (int m = 0; m < rows; ++m) {
        double row_sum = 0.0;
        for (int j = 0; j < cols; ++j) row_sum += state.output(m, j);
        for (int n = 0; n < cols; ++n) {
            double col_term = 0.0;
            for (int i = 0; i < rows; ++i) {
                if (i == m) continue;
                col_term += column_weight(matrix, params, i, m) * state.output(i, n);
            }
            const double row_term = rw * (row_sum - state.output(m, n));
            const double u_old = state.input(m, n);
            const double u_new =
                u_old + params.eta * (col_term + row_term + params.eb - u_old);
            next.u[m * cols + n] = u_new;
            next.v[m * cols + n] = activation(u_new, params.u0);
        }
    }
    return next;
}

RelaxationResult run_to_convergence(
    NetworkState state, const ConflictMatrix& matrix, const NetworkParams& params,
    const std::function<void(const NetworkState&)>& on_iteration) {
    validate_params(params);

    const int start_t = state.t;
    int quiet = 0;
    for (int it = 0; it < params.max_iters; ++it) {
        NetworkState next = step(state, matrix, params);
        double max_dv = 0.0;
        for (std::size_t i = 0; i < next.v.size(); ++i)
            max_dv = std::max(max_dv, std::abs(next.v[i] - state.v[i]));
        state = std::move(next);
        if (on_iteration) on_iteration(state);

        quiet = (max_dv < params.conv_epsilon) ? quiet + 1 : 0;
        if (quiet >= params.conv_window) {
            const int iterations = state.t - start_t;
            return {std::move(state), iterations, true};
        }
    }
    const int iterations = state.t - start_t;
    return {std::move(state), iterations, false};
}

DecodeResult decode(const NetworkState& state) {
    DecodeResult out;
    out.assignment.resize(state.n_rows);
    out.crispness = state.n_rows == 0 ? 1.0 : 2.0;
    for (int m = 0; m < state.n_rows; ++m) {
        int arg = 0;
        double best = state.output(m, 0);
        for (int n = 1; n < state.n_cols; ++n) {
            if (state.output(m, n) > best) {
                best = state.output(m, n);
                arg = n;
            }
        }
        out.assignment[m] = arg;
        out.crispness = std::min(out.crispness, best);
    }
    return out;
}

double pairwise_surrogate(const ConflictMatrix& matrix, std::span<const int> assignment) {
    double sum = 0.0;
    for (int j = 0; j < matrix.n_evidence; ++j)
        for (int k = j + 1; k < matrix.n_evidence; ++k)
            if (assignment[j] == assignment[k]) sum += matrix.weight(j, k);
    return sum;
}

}  // namespace dsclust
