#include "wordruin/simulator.hpp"

#include <cmath>
#include <stdexcept>

namespace wordruin {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// SplitMix64. Small, fast, and identical on every platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += kGolden;
        return mix64(state_);
    }

    // Uniform in [0, 1) with 53 random bits.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

// Inverse-CDF sampling over one distribution row. Rounding in the cumulative
// sum can leave u past the total; fall back to the last positive entry so a
// zero-probability letter is never produced.
int sample_row(const Eigen::VectorXd& row, double u) {
    double acc = 0.0;
    int last_positive = -1;
    for (int c = 0; c < row.size(); ++c) {
        const double w = row(c);
        if (w <= 0.0) continue;
        last_positive = c;
        acc += w;
        if (u < acc) return c;
    }
    return last_positive;
}

}  // namespace

WordMatcher::WordMatcher(const Word& w, int alphabet_size)
    : length_(w.length()), n_letters_(alphabet_size) {
    if (length_ < 1 || alphabet_size < 1) {
        throw std::invalid_argument("WordMatcher: empty word or alphabet");
    }
    next_.assign(static_cast<std::size_t>(length_ + 1) * n_letters_, 0);
    next_[w.letters[0]] = 1;
    int border = 0;  // automaton state after feeding w[1..s-1]
    for (int s = 1; s <= length_; ++s) {
        for (int c = 0; c < n_letters_; ++c) {
            next_[s * n_letters_ + c] = next_[border * n_letters_ + c];
        }
        if (s < length_) {
            next_[s * n_letters_ + w.letters[s]] = s + 1;
            border = next_[border * n_letters_ + w.letters[s]];
        }
    }
}

std::vector<long long> score_prefix(const std::vector<int>& text, const Word& u,
                                    const Word& d) {
    const auto occurs_at = [&text](const Word& w, std::size_t end) {
        const std::size_t len = w.letters.size();
        if (end + 1 < len) return false;
        for (std::size_t k = 0; k < len; ++k) {
            if (text[end - len + 1 + k] != w.letters[k]) return false;
        }
        return true;
    };

    std::vector<long long> scores(text.size());
    long long s = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        s += (occurs_at(u, i) ? 1 : 0) - (occurs_at(d, i) ? 1 : 0);
        scores[i] = s;
    }
    return scores;
}

std::uint64_t mix_seed(std::uint64_t base_seed, long long trial_index) {
    return mix64(base_seed + (static_cast<std::uint64_t>(trial_index) + 1) * kGolden);
}

TrialOutcome run_trial(const LetterChain& chain, const GameSpec& spec,
                       std::uint64_t seed, long long max_steps) {
    WordMatcher match_u(spec.word_u, chain.alphabet.size());
    WordMatcher match_d(spec.word_d, chain.alphabet.size());
    SplitMix64 rng(seed);

    long long score = 0;
    int letter = sample_row(chain.pi, rng.next_unit());
    for (long long step = 1; step <= max_steps; ++step) {
        if (step > 1) letter = sample_row(chain.trans.row(letter), rng.next_unit());
        match_u.step(letter);
        match_d.step(letter);
        const bool hit_u = match_u.matched();
        const bool hit_d = match_d.matched();
        if (hit_u && hit_d) {
            // Impossible once the subword check passed; a firing here is a bug.
            throw std::logic_error("both words completed at one position");
        }
        score += (hit_u ? 1 : 0) - (hit_d ? 1 : 0);
        if (score == spec.a_target) return {TrialResult::Win, step};
        if (score == -spec.b_limit) return {TrialResult::Lose, step};
    }
    return {TrialResult::Censored, 0};
}

SimReport estimate(const LetterChain& chain, const GameSpec& spec,
                   const SimConfig& cfg) {
    if (cfg.trials < 1) {
        throw std::invalid_argument("estimate: trials must be >= 1");
    }

    SimReport report;
    report.trials = cfg.trials;
    report.base_seed = cfg.base_seed;

    double steps_sum = 0.0;
    double steps_sq_sum = 0.0;
    for (long long i = 0; i < cfg.trials; ++i) {
        const TrialOutcome out =
            run_trial(chain, spec, mix_seed(cfg.base_seed, i), cfg.max_steps);
        switch (out.result) {
            case TrialResult::Win: ++report.wins; break;
            case TrialResult::Lose: ++report.losses; break;
            case TrialResult::Censored: ++report.censored; continue;
        }
        const double s = static_cast<double>(out.steps);
        steps_sum += s;
        steps_sq_sum += s * s;
    }

    const long long absorbed = report.wins + report.losses;
    if (absorbed == 0) {
        throw Error("ALL_CENSORED", "no trial reached a boundary; raise max_steps");
    }

    report.alpha_hat = static_cast<double>(report.wins) / absorbed;
    report.alpha_se =
        std::sqrt(report.alpha_hat * (1.0 - report.alpha_hat) / absorbed);
    report.tau_hat = steps_sum / absorbed;
    if (absorbed >= 2) {
        const double var =
            (steps_sq_sum - absorbed * report.tau_hat * report.tau_hat) /
            (absorbed - 1);
        report.tau_se = std::sqrt(std::max(0.0, var) / absorbed);
    }
    return report;
}

}  // namespace wordruin
