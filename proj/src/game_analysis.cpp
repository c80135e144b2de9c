#include "wordruin/game_analysis.hpp"

#include <stdexcept>
#include <utility>

#include "wordruin/linear_core.hpp"

namespace wordruin {

const char* to_string(GameStatus status) {
    switch (status) {
        case GameStatus::Ok: return "OK";
        case GameStatus::PeriodicInfinite: return "PERIODIC_INFINITE";
        case GameStatus::PeriodicTrivial: return "PERIODIC_TRIVIAL";
    }
    return "?";
}

RuinResult ruin_correlated(const XChainParams& params, int a_target, int b_limit) {
    if (a_target < 1 || b_limit < 1) {
        throw std::invalid_argument("ruin_correlated: targets must be >= 1");
    }

    // Unknowns are indexed by (score, direction of the last event) over the
    // interior scores -B+1..A-1. Unreachable combinations are kept; they stay
    // harmless under the aperiodicity precondition.
    const int n_scores = a_target + b_limit - 1;
    const int dim = 2 * n_scores;
    const auto at = [b_limit](int score, bool up) {
        return 2 * (score + b_limit - 1) + (up ? 0 : 1);
    };

    Eigen::MatrixXd walk = Eigen::MatrixXd::Zero(dim, dim);
    Eigen::VectorXd win = Eigen::VectorXd::Zero(dim);
    for (int score = -b_limit + 1; score <= a_target - 1; ++score) {
        for (const bool up : {true, false}) {
            const double p_up = up ? params.t11 : params.tm1;
            const int row = at(score, up);
            if (score + 1 == a_target) {
                win(row) += p_up;
            } else {
                walk(row, at(score + 1, true)) += p_up;
            }
            if (score - 1 > -b_limit) {
                walk(row, at(score - 1, false)) += 1.0 - p_up;
            }
        }
    }

    Eigen::VectorXd h, m;
    try {
        h = solve_fundamental({walk, win});
        m = solve_fundamental({walk, Eigen::VectorXd::Ones(dim)});
    } catch (const Error& e) {
        if (e.code() == "SINGULAR") {
            throw Error("SINGULAR_WALK",
                        "absorbing solve is singular; the event walk alternates");
        }
        throw;
    }

    RuinResult result;
    result.alpha = params.q1 * (a_target == 1 ? 1.0 : h(at(1, true))) +
                   (1.0 - params.q1) * (b_limit == 1 ? 0.0 : h(at(-1, false)));
    result.e_t = 1.0 + params.q1 * (a_target == 1 ? 0.0 : m(at(1, true))) +
                 (1.0 - params.q1) * (b_limit == 1 ? 0.0 : m(at(-1, false)));
    return result;
}

double expected_tau(const GammaMoments& m, double alpha, double e_t,
                    int a_target, int b_limit) {
    return m.e_gamma1 +
           m.a * ((a_target + b_limit - 2) * alpha - (b_limit - 1)) +
           m.b * (e_t - 1.0);
}

namespace {

ValidationReport validate_all(const LetterChain& chain, const GameSpec& spec) {
    ValidationReport report = validate_letter_chain(chain);
    if (!report.ok()) return report;
    ValidationReport game = validate_game(chain, spec);
    report.failures.insert(report.failures.end(), game.failures.begin(),
                           game.failures.end());
    report.warnings.insert(report.warnings.end(), game.warnings.begin(),
                           game.warnings.end());
    return report;
}

}  // namespace

GameAnalysis analyze(const LetterChain& chain, const GameSpec& spec) {
    ValidationReport report = validate_all(chain, spec);
    if (!report.ok()) throw ValidationError(std::move(report));

    const ZChain zc = build_z_chain(chain, spec.word_u, spec.word_d);
    const Eigen::VectorXd p = hitting_probabilities(zc);
    const Eigen::VectorXd e = expected_hitting_times(zc);

    GameAnalysis out;
    out.params = x_chain_params(zc, p);
    out.moments = gamma_moments(zc, e);

    if (is_aperiodic(zc)) {
        out.status = GameStatus::Ok;
        const RuinResult ruin = ruin_correlated(out.params, spec.a_target, spec.b_limit);
        out.alpha = ruin.alpha;
        out.e_t = ruin.e_t;
        out.e_tau = expected_tau(out.moments, ruin.alpha, ruin.e_t,
                                 spec.a_target, spec.b_limit);
    } else if (spec.a_target == 1 && spec.b_limit == 1) {
        // The first event decides regardless of alternation.
        out.status = GameStatus::PeriodicTrivial;
        out.alpha = out.params.q1;
        out.e_t = 1.0;
        out.e_tau = out.moments.e_gamma1;
    } else {
        out.status = GameStatus::PeriodicInfinite;
    }
    return out;
}

DirectResult analyze_direct(const LetterChain& chain, const GameSpec& spec) {
    ValidationReport report = validate_all(chain, spec);
    if (!report.ok()) throw ValidationError(std::move(report));

    const ZChain zc = build_z_chain(chain, spec.word_u, spec.word_d);
    if (!is_aperiodic(zc)) {
        throw Error("PERIODIC", "game duration is not almost surely finite");
    }

    const int a_target = spec.a_target;
    const int b_limit = spec.b_limit;
    const int n_scores = a_target + b_limit - 1;
    const int dim = zc.size() * n_scores;
    const auto at = [n_scores, b_limit](int z, int score) {
        return z * n_scores + (score + b_limit - 1);
    };

    // One step of the product chain moves the look-back state and adjusts the
    // score by the state just entered; hitting +A or -B absorbs.
    Eigen::MatrixXd transient = Eigen::MatrixXd::Zero(dim, dim);
    Eigen::VectorXd win = Eigen::VectorXd::Zero(dim);
    for (int z = 0; z < zc.size(); ++z) {
        for (int score = -b_limit + 1; score <= a_target - 1; ++score) {
            const int row = at(z, score);
            for (int z2 = 0; z2 < zc.size(); ++z2) {
                const double q = zc.trans_z(z, z2);
                if (q <= 0.0) continue;
                const int next = score + (z2 == zc.idx_u) - (z2 == zc.idx_d);
                if (next == a_target) {
                    win(row) += q;
                } else if (next > -b_limit) {
                    transient(row, at(z2, next)) += q;
                }
            }
        }
    }

    const Eigen::VectorXd h = solve_fundamental({transient, win});
    const Eigen::VectorXd m =
        solve_fundamental({transient, Eigen::VectorXd::Ones(dim)});

    DirectResult result;
    result.e_tau = 1.0;  // the first letter is always consumed
    for (int z = 0; z < zc.size(); ++z) {
        const double w = zc.pi_z(z);
        if (w == 0.0) continue;
        const int first = (z == zc.idx_u) - (z == zc.idx_d);
        if (first == a_target) {
            result.alpha += w;  // absorbed at time 1
        } else if (first > -b_limit) {
            result.alpha += w * h(at(z, first));
            result.e_tau += w * m(at(z, first));
        }
    }
    return result;
}

}  // namespace wordruin
