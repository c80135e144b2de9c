#include "wordruin/embedded_walk.hpp"

#include <algorithm>

#include "wordruin/errors.hpp"
#include "wordruin/linear_core.hpp"

namespace wordruin {

namespace {

// Q is the look-back transition matrix with the two absorbing columns zeroed.
QSystem fundamental_system(const ZChain& zc, Eigen::VectorXd rhs) {
    QSystem sys;
    sys.q = zc.trans_z;
    sys.q.col(zc.idx_u).setZero();
    sys.q.col(zc.idx_d).setZero();
    sys.rhs = std::move(rhs);
    return sys;
}

}  // namespace

Eigen::VectorXd hitting_probabilities(const ZChain& zc) {
    return solve_fundamental(fundamental_system(zc, zc.trans_z.col(zc.idx_u)));
}

Eigen::VectorXd expected_hitting_times(const ZChain& zc) {
    const Eigen::VectorXd rhs = Eigen::VectorXd::Ones(zc.size()) +
                                zc.trans_z.col(zc.idx_u) +
                                zc.trans_z.col(zc.idx_d);
    return solve_fundamental(fundamental_system(zc, rhs));
}

XChainParams x_chain_params(const ZChain& zc, const Eigen::VectorXd& p) {
    XChainParams params;
    params.t11 = p(zc.idx_u);
    params.tm1 = p(zc.idx_d);
    double q1 = zc.pi_z(zc.idx_u);
    for (int z = 0; z < zc.size(); ++z) {
        if (z != zc.idx_u && z != zc.idx_d) q1 += zc.pi_z(z) * p(z);
    }
    params.q1 = q1;
    return params;
}

GammaMoments gamma_moments(const ZChain& zc, const Eigen::VectorXd& e) {
    GammaMoments m;
    double g1 = zc.pi_z(zc.idx_u) + zc.pi_z(zc.idx_d);
    for (int z = 0; z < zc.size(); ++z) {
        if (z != zc.idx_u && z != zc.idx_d) g1 += zc.pi_z(z) * e(z);
    }
    m.e_gamma1 = g1;
    m.e2_plus = e(zc.idx_u) - 1.0;
    m.e2_minus = e(zc.idx_d) - 1.0;
    m.a = 0.5 * (m.e2_plus - m.e2_minus);
    m.b = 0.5 * (m.e2_plus + m.e2_minus);
    return m;
}

bool is_aperiodic(const ZChain& zc) {
    // Periodic means the events alternate surely: no win-to-win return
    // avoiding a loss, and no loss-to-loss return avoiding a win.
    return hits_before(zc, zc.idx_u, zc.idx_u, zc.idx_d) ||
           hits_before(zc, zc.idx_d, zc.idx_d, zc.idx_u);
}

namespace {

// w == first^t other^s with t,s >= 1?  Returns {t, s} or {0, 0}.
std::pair<int, int> two_block_split(const Word& w, int first, int other) {
    int t = 0;
    const int len = w.length();
    while (t < len && w.letters[t] == first) ++t;
    if (t == 0 || t == len) return {0, 0};
    for (int i = t; i < len; ++i) {
        if (w.letters[i] != other) return {0, 0};
    }
    return {t, len - t};
}

}  // namespace

bool classify_binary_alternating(int alphabet_size, const Word& u, const Word& d) {
    if (alphabet_size != 2) {
        throw Error("NOT_BINARY", "classifier requires a two-letter alphabet");
    }
    for (int y = 0; y < 2; ++y) {
        const int o = 1 - y;
        const auto [t, s] = two_block_split(u, y, o);
        if (t == 0) continue;
        if (s != 1 && t != 1) continue;
        // d must be the mirrored pair o^s y^t.
        if (d.length() != s + t) continue;
        const auto [s2, t2] = two_block_split(d, o, y);
        if (s2 == s && t2 == t) return true;
    }
    return false;
}

}  // namespace wordruin
