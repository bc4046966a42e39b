#include "apolar/engine.hpp"

#include <algorithm>

#include "apolar/errors.hpp"
#include "apolar/tableaux.hpp"

namespace apolar {

namespace {

void check_formula_input(const Partition& mu, int d) {
    if (mu.empty()) throw std::invalid_argument("need a nonempty multiplicity pattern");
    if (mu.n() > 12)
        throw std::invalid_argument("patterns of weight > 12 are not supported by the closed form");
    if (d < 0) throw DegenerateDegreeError("the degree must be nonnegative");
    if (d > 64) throw DegreeOutOfRangeError("need d <= 64");
}

// d = 0: the span of a nonzero constant is the constants, carrying the
// trivial character in degree 0.
GradedCharacter constant_span_character(int n) {
    GradedCharacter g(n);
    g.add(Partition(std::vector<int>{n}), 0, 1);
    return g;
}

}  // namespace

GradedCharacter graded_character_formula(const Partition& mu, int d) {
    check_formula_input(mu, d);
    if (d == 0) return constant_span_character(mu.n());
    GradedCharacter rmu = r_mu_character(mu);
    int top = n_stat(mu);

    // cumulative multiplicity of each lambda through degree j, j = 0..top
    GradedCharacter out(mu.n());
    for (const auto& [lambda, poly] : rmu.mult()) {
        std::vector<std::int64_t> cum(static_cast<std::size_t>(top + 1), 0);
        std::int64_t run = 0;
        for (int j = 0; j <= top; ++j) {
            run += poly.coeff(j);
            cum[static_cast<std::size_t>(j)] = run;
        }
        for (int k = 0; k <= d; ++k) {
            int cut = std::min(k, d - k);  // middle symmetry
            std::int64_t m = cum[static_cast<std::size_t>(std::min(cut, top))];
            if (m != 0) out.add(lambda, k, m);
        }
    }
    return out;
}

TPoly hilbert_series_formula(const Partition& mu, int d) {
    return graded_character_formula(mu, d).hilbert();
}

std::optional<Int> waring_certificate(const Partition& mu, int d) {
    if (mu.empty()) throw std::invalid_argument("need a nonempty multiplicity pattern");
    if (d >= 2 * n_stat(mu)) return orbit_size(mu);
    return std::nullopt;
}

CharacterReport character_report(const Partition& mu, int d) {
    check_formula_input(mu, d);
    CharacterReport r;
    r.mu = mu;
    r.d = d;
    r.character = graded_character_formula(mu, d);
    r.hilbert = r.character.hilbert();
    r.ell = orbit_size(mu);
    r.n_mu = n_stat(mu);
    r.waring = waring_certificate(mu, d);
    return r;
}

VerificationReport verify(const RationalVector& a, int d, int threads) {
    CoeffTuple tuple(a);
    tuple.require_nonzero_sum();
    if (tuple.n() > 6)
        throw std::invalid_argument("verification cross-checks tuples of length at most 6");

    GradedCharacter formula = graded_character_formula(tuple.mu, d);
    // d = 0: span{F} is the constants, no catalecticants to take
    GradedCharacter oracle = d == 0 ? constant_span_character(tuple.n())
                                    : graded_character_bruteforce(a, d, threads);

    VerificationReport rep;
    rep.a = a;
    rep.mu = tuple.mu;
    rep.d = d;

    auto lambdas = partitions_of(tuple.n());
    for (int k = 0; k <= d; ++k) {
        DegreeComparison cmp;
        cmp.k = k;
        cmp.hilbert_formula = formula.hilbert().coeff(k);
        cmp.hilbert_oracle = oracle.hilbert().coeff(k);
        cmp.agree = cmp.hilbert_formula == cmp.hilbert_oracle;
        for (const Partition& lambda : lambdas) {
            std::int64_t mf = formula.mult_at(lambda, k);
            std::int64_t mo = oracle.mult_at(lambda, k);
            if (mf != mo) {
                cmp.char_diffs.push_back(CharDiff{lambda, mf, mo});
                cmp.agree = false;
            }
        }
        if (!cmp.agree) rep.agree = false;
        rep.degrees.push_back(std::move(cmp));
    }
    return rep;
}

}  // namespace apolar
