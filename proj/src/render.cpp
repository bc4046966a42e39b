#include "apolar/render.hpp"

#include <json.hpp>
#include <sstream>

#include "apolar/partition.hpp"

namespace apolar {

using nlohmann::json;

namespace {

json int_json(const Int& v) {
    // partition weights are capped well below this, but stay honest anyway
    if (v.fits_slong_p()) return json(v.get_si());
    return json(v.get_str());
}

json multiplicity_rows(const GradedCharacter& g, int top) {
    json rows = json::object();
    for (const Partition& lambda : partitions_of(g.n())) {
        json arr = json::array();
        for (int k = 0; k <= top; ++k) arr.push_back(g.mult_at(lambda, k));
        rows[lambda.str()] = std::move(arr);
    }
    return rows;
}

json tpoly_array(const TPoly& h, int top) {
    json arr = json::array();
    for (int k = 0; k <= top; ++k) arr.push_back(h.coeff(k));
    return arr;
}

}  // namespace

std::string degree_term_str(const GradedCharacter& g, int k) {
    std::ostringstream out;
    bool first = true;
    for (const Partition& lambda : partitions_of(g.n())) {
        std::int64_t m = g.mult_at(lambda, k);
        if (m == 0) continue;
        if (!first) out << " + ";
        if (m != 1) out << m << "*";
        out << "X[" << lambda.str() << "]";
        first = false;
    }
    if (first) out << "0";
    return out.str();
}

std::string character_table_str(const GradedCharacter& g, int top) {
    std::ostringstream out;
    for (int k = 0; k <= top; ++k) out << k << ": " << degree_term_str(g, k) << "\n";
    return out.str();
}

std::string hilbert_line_str(const TPoly& h, int top) {
    std::ostringstream out;
    for (int k = 0; k <= top; ++k) {
        if (k) out << " ";
        out << h.coeff(k);
    }
    out << "\n";
    return out.str();
}

std::string verification_str(const VerificationReport& r) {
    std::ostringstream out;
    out << "mu " << r.mu.str() << "  d " << r.d << "\n";
    for (const DegreeComparison& c : r.degrees) {
        out << c.k << ": hilbert " << c.hilbert_formula << " " << c.hilbert_oracle
            << (c.agree ? " ok" : " MISMATCH") << "\n";
        for (const CharDiff& diff : c.char_diffs)
            out << "   X[" << diff.lambda.str() << "]: formula " << diff.formula << " oracle "
                << diff.oracle << "\n";
    }
    out << (r.agree ? "AGREE" : "DISAGREE") << "\n";
    return out.str();
}

std::string character_report_json_str(const CharacterReport& r) {
    json j;
    j["mu"] = r.mu.str();
    j["d"] = r.d;
    j["ell"] = int_json(r.ell);
    j["n_mu"] = r.n_mu;
    j["waring"] = r.waring ? int_json(*r.waring) : json(nullptr);
    j["hilbert"] = tpoly_array(r.hilbert, r.d);
    j["character"] = multiplicity_rows(r.character, r.d);
    return j.dump(2) + "\n";
}

std::string graded_character_json_str(const GradedCharacter& g, int top) {
    json j;
    j["hilbert"] = tpoly_array(g.hilbert(), top);
    j["character"] = multiplicity_rows(g, top);
    return j.dump(2) + "\n";
}

std::string hilbert_json_str(const Partition& mu, int d, const TPoly& h) {
    json j;
    j["mu"] = mu.str();
    j["d"] = d;
    j["hilbert"] = tpoly_array(h, d);
    return j.dump(2) + "\n";
}

std::string kostka_json_str(const Partition& lambda, const Partition& mu, const TPoly& k) {
    json j;
    j["lambda"] = lambda.str();
    j["mu"] = mu.str();
    j["coeffs"] = tpoly_array(k, k.degree() < 0 ? 0 : k.degree());
    return j.dump(2) + "\n";
}

std::string waring_json_str(const Partition& mu, int d) {
    json j;
    j["mu"] = mu.str();
    j["d"] = d;
    j["ell"] = int_json(orbit_size(mu));
    auto w = waring_certificate(mu, d);
    j["waring"] = w ? int_json(*w) : json(nullptr);
    return j.dump(2) + "\n";
}

std::string verification_json_str(const VerificationReport& r) {
    json j;
    j["mu"] = r.mu.str();
    j["d"] = r.d;
    j["agree"] = r.agree;
    json per = json::array();
    for (const DegreeComparison& c : r.degrees) {
        json e;
        e["k"] = c.k;
        e["hilbert_formula"] = c.hilbert_formula;
        e["hilbert_oracle"] = c.hilbert_oracle;
        json diffs = json::array();
        for (const CharDiff& diff : c.char_diffs) {
            json dj;
            dj["lambda"] = diff.lambda.str();
            dj["formula"] = diff.formula;
            dj["oracle"] = diff.oracle;
            diffs.push_back(std::move(dj));
        }
        e["char_diffs"] = std::move(diffs);
        per.push_back(std::move(e));
    }
    j["per_degree"] = std::move(per);
    return j.dump(2) + "\n";
}

}  // namespace apolar
