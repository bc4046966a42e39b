#include <CLI11.hpp>
#include <cstdint>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "apolar/apolarity.hpp"
#include "apolar/engine.hpp"
#include "apolar/errors.hpp"
#include "apolar/render.hpp"
#include "apolar/tableaux.hpp"

namespace {

using namespace apolar;

RationalVector parse_coeffs(const std::string& text) {
    RationalVector a;
    std::string tok;
    std::stringstream ss(text);
    while (std::getline(ss, tok, ',')) a.push_back(Rational::parse(tok));
    if (a.empty()) throw std::invalid_argument("--coeffs: need at least one value");
    return a;
}

void check_formula_scale(const Partition& mu) {
    if (mu.n() > 12)
        throw std::invalid_argument("patterns of weight > 12 are not supported by the closed form");
}

// Resolves the pattern for commands that accept either flag. With --coeffs
// the tuple must satisfy the nonzero-sum hypothesis of the closed form.
Partition resolve_pattern(const std::string& coeffs, const std::string& mu) {
    if (!coeffs.empty()) {
        CoeffTuple t(parse_coeffs(coeffs));
        t.require_nonzero_sum();
        return t.mu;
    }
    return Partition::parse(mu);
}

// A rational tuple whose pattern is exactly mu: part i gets one repeated
// value. Without a seed the values are 1, 2, ...; with a seed they are
// random rationals, re-drawn until all parts differ and the sum is nonzero.
RationalVector tuple_realizing(const Partition& mu, std::optional<std::uint64_t> seed) {
    if (!seed) {
        RationalVector a;
        for (std::size_t i = 0; i < mu.parts().size(); ++i)
            for (int r = 0; r < mu.parts()[i]; ++r) a.emplace_back(static_cast<long>(i + 1));
        return a;
    }
    std::mt19937_64 gen(*seed);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 4);
    while (true) {
        std::vector<Rational> values;
        for (std::size_t i = 0; i < mu.parts().size(); ++i)
            values.emplace_back(Rational(Int(num(gen)), Int(den(gen))));
        std::set<std::string> distinct;
        for (const Rational& v : values) distinct.insert(v.str());
        if (distinct.size() != values.size()) continue;

        RationalVector a;
        Rational sum;
        for (std::size_t i = 0; i < mu.parts().size(); ++i)
            for (int r = 0; r < mu.parts()[i]; ++r) {
                a.push_back(values[i]);
                sum += values[i];
            }
        if (sum.is_zero()) continue;
        return a;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hilbert functions and graded symmetric-group characters of "
                 "apolarity quotients of orbit sums of powers"};
    app.require_subcommand(1);

    std::string coeffs, mu_text, format = "plain";
    std::string lambda_text, kostka_mu_text;
    int degree = 0;
    std::optional<std::uint64_t> seed;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"plain", "json"}));
    };
    auto add_input = [&](CLI::App* cmd, bool with_degree) {
        auto* c = cmd->add_option("--coeffs", coeffs, "coefficient tuple, e.g. 1,1,2,3 or 1/2,3,-1");
        auto* m = cmd->add_option("--mu", mu_text, "multiplicity pattern, e.g. 2,1,1");
        c->excludes(m);
        m->excludes(c);
        if (with_degree) cmd->add_option("--degree", degree, "power d")->required();
        add_format(cmd);
    };

    CLI::App* character = app.add_subcommand("character", "graded character of the quotient");
    add_input(character, true);
    CLI::App* hilbert = app.add_subcommand("hilbert", "Hilbert function of the quotient");
    add_input(hilbert, true);
    CLI::App* waring = app.add_subcommand("waring", "rank certificate when the degree allows one");
    add_input(waring, true);
    CLI::App* rmu = app.add_subcommand("rmu-char", "graded character of the associated graded quotient");
    add_input(rmu, false);

    CLI::App* kostka = app.add_subcommand("kostka", "Kostka polynomial in the charge grading");
    kostka->add_option("lambda", lambda_text, "shape, e.g. 3,1")->required();
    kostka->add_option("mu", kostka_mu_text, "content, e.g. 2,1,1")->required();
    add_format(kostka);

    CLI::App* verify = app.add_subcommand("verify", "cross-check the closed form against brute force");
    add_input(verify, true);
    verify->add_option("--seed", seed, "draw a random tuple realizing --mu");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*character || *hilbert || *waring) {
            if (coeffs.empty() && mu_text.empty())
                throw std::invalid_argument("need --coeffs or --mu");
            Partition mu = resolve_pattern(coeffs, mu_text);
            check_formula_scale(mu);
            if (*waring) {
                if (format == "json") {
                    std::cout << waring_json_str(mu, degree);
                } else {
                    auto w = waring_certificate(mu, degree);
                    if (w)
                        std::cout << w->get_str() << "\n";
                    else
                        std::cout << "unknown (need degree >= " << 2 * n_stat(mu) << ")\n";
                }
            } else {
                CharacterReport r = character_report(mu, degree);
                if (*character)
                    std::cout << (format == "json" ? character_report_json_str(r)
                                                   : character_table_str(r.character, r.d));
                else
                    std::cout << (format == "json" ? hilbert_json_str(r.mu, r.d, r.hilbert)
                                                   : hilbert_line_str(r.hilbert, r.d));
            }
        } else if (*rmu) {
            if (coeffs.empty() && mu_text.empty())
                throw std::invalid_argument("need --coeffs or --mu");
            Partition mu = resolve_pattern(coeffs, mu_text);
            check_formula_scale(mu);
            GradedCharacter g = r_mu_character(mu);
            int top = n_stat(mu);
            std::cout << (format == "json" ? graded_character_json_str(g, top)
                                           : character_table_str(g, top));
        } else if (*kostka) {
            Partition lambda = Partition::parse(lambda_text);
            Partition mu = Partition::parse(kostka_mu_text);
            check_formula_scale(mu);
            TPoly k = kostka_foulkes(lambda, mu);
            std::cout << (format == "json" ? kostka_json_str(lambda, mu, k) : k.str() + "\n");
        } else if (*verify) {
            RationalVector a;
            if (!coeffs.empty()) {
                if (seed) throw std::invalid_argument("--seed only applies with --mu");
                a = parse_coeffs(coeffs);
            } else if (!mu_text.empty()) {
                a = tuple_realizing(Partition::parse(mu_text), seed);
            } else {
                throw std::invalid_argument("need --coeffs or --mu");
            }
            VerificationReport rep = apolar::verify(a, degree);
            std::cout << (format == "json" ? verification_json_str(rep) : verification_str(rep));
            return rep.agree ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
