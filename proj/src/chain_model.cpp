#include "wordruin/chain_model.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_set>

#include "wordruin/digraph.hpp"

namespace wordruin {

std::optional<int> Alphabet::index_of(const std::string& symbol) const {
    const auto it = std::find(symbols.begin(), symbols.end(), symbol);
    if (it == symbols.end()) return std::nullopt;
    return static_cast<int>(it - symbols.begin());
}

namespace {

void fail(ValidationReport& report, std::string code, std::string message) {
    report.failures.push_back({std::move(code), std::move(message)});
}

void warn(ValidationReport& report, std::string code, std::string message) {
    report.warnings.push_back({std::move(code), std::move(message)});
}

bool word_indices_valid(const Word& w, int n_letters) {
    if (w.letters.empty()) return false;
    return std::all_of(w.letters.begin(), w.letters.end(),
                       [n_letters](int c) { return c >= 0 && c < n_letters; });
}

// First index i with trans(w_i, w_{i+1}) == 0, or -1 if the path is positive.
int zero_transition_at(const LetterChain& chain, const Word& w) {
    for (int i = 0; i + 1 < w.length(); ++i) {
        if (chain.trans(w.letters[i], w.letters[i + 1]) == 0.0) return i;
    }
    return -1;
}

}  // namespace

ValidationReport validate_letter_chain(const LetterChain& chain) {
    ValidationReport report;
    const int n = chain.alphabet.size();

    if (n < 2) {
        fail(report, "ALPHABET", "alphabet must have at least 2 symbols");
    }
    std::unordered_set<std::string> seen;
    for (const auto& s : chain.alphabet.symbols) {
        if (!seen.insert(s).second) {
            fail(report, "ALPHABET", "duplicate symbol '" + s + "'");
        }
    }

    if (chain.pi.size() != n || chain.trans.rows() != n || chain.trans.cols() != n) {
        fail(report, "DIMENSION",
             "pi must have length " + std::to_string(n) + " and trans must be " +
                 std::to_string(n) + "x" + std::to_string(n));
        return report;  // deeper checks would index out of range
    }

    for (int i = 0; i < n; ++i) {
        double row_sum = 0.0;
        bool negative = false;
        for (int j = 0; j < n; ++j) {
            const double t = chain.trans(i, j);
            if (t < 0.0 || !std::isfinite(t)) negative = true;
            row_sum += t;
        }
        if (negative || std::abs(row_sum - 1.0) > kStochasticTol) {
            fail(report, "NON_STOCHASTIC_ROW",
                 "transition row " + std::to_string(i) + " is not a distribution");
        }
    }

    double pi_sum = 0.0;
    bool pi_bad = false;
    for (int i = 0; i < n; ++i) {
        const double p = chain.pi(i);
        if (p < 0.0 || !std::isfinite(p)) pi_bad = true;
        pi_sum += p;
    }
    if (pi_bad || std::abs(pi_sum - 1.0) > kStochasticTol) {
        fail(report, "BAD_INITIAL", "pi is not a probability distribution");
    }

    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (chain.trans(i, j) > 0.0) adj[i].push_back(j);
        }
    }
    if (strongly_connected_components(adj).count != 1) {
        fail(report, "REDUCIBLE",
             "positive-transition graph is not strongly connected");
    }

    return report;
}

double word_path_probability(const LetterChain& chain, const Word& w) {
    if (!word_indices_valid(w, chain.alphabet.size())) {
        throw Error("BAD_WORD", "word is empty or uses letters outside the alphabet");
    }
    double prob = chain.pi(w.letters.front());
    for (int i = 0; i + 1 < w.length(); ++i) {
        prob *= chain.trans(w.letters[i], w.letters[i + 1]);
    }
    return prob;
}

bool is_contiguous_subword(const Word& needle, const Word& haystack) {
    return std::search(haystack.letters.begin(), haystack.letters.end(),
                       needle.letters.begin(), needle.letters.end()) !=
           haystack.letters.end();
}

ValidationReport validate_game(const LetterChain& chain, const GameSpec& spec) {
    ValidationReport report;
    const int n = chain.alphabet.size();

    if (!word_indices_valid(spec.word_u, n)) {
        fail(report, "BAD_WORD", "word_u is empty or uses unknown letters");
    }
    if (!word_indices_valid(spec.word_d, n)) {
        fail(report, "BAD_WORD", "word_d is empty or uses unknown letters");
    }
    if (spec.a_target < 1 || spec.b_limit < 1) {
        fail(report, "BAD_TARGET", "point targets must be >= 1");
    }
    if (!report.ok()) return report;

    if (spec.word_u == spec.word_d) {
        fail(report, "WORDS_EQUAL", "the two words must differ");
    } else if (is_contiguous_subword(spec.word_u, spec.word_d) ||
               is_contiguous_subword(spec.word_d, spec.word_u)) {
        fail(report, "SUBWORD", "neither word may contain the other");
    }

    const struct {
        const char* name;
        const Word& w;
    } words[] = {{"word_u", spec.word_u}, {"word_d", spec.word_d}};
    for (const auto& [name, w] : words) {
        const int at = zero_transition_at(chain, w);
        if (at >= 0) {
            fail(report, "ZERO_TRANSITION_PATH",
                 std::string(name) + " crosses a zero transition at position " +
                     std::to_string(at));
        } else if (chain.pi(w.letters.front()) == 0.0) {
            // The word still recurs by irreducibility; only its occurrence at
            // the earliest possible time is ruled out.
            warn(report, "CONDITION1_VIOLATED",
                 std::string(name) + " has zero initial mass on its first letter");
        }
    }

    return report;
}

}  // namespace wordruin
