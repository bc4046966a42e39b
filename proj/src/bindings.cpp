#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "apolar/apolarity.hpp"
#include "apolar/engine.hpp"
#include "apolar/errors.hpp"
#include "apolar/tableaux.hpp"

namespace py = pybind11;
using namespace apolar;

namespace {

Partition as_partition(const std::vector<int>& parts) { return Partition(parts); }

py::int_ as_pyint(const Int& v) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

// coefficients arrive as python ints or strings like "3/2" / "0.25";
// floats are rejected to keep the arithmetic exact
RationalVector as_coeffs(const py::sequence& seq) {
    RationalVector a;
    for (py::handle h : seq) {
        if (py::isinstance<py::int_>(h)) {
            a.push_back(Rational::parse(py::str(h).cast<std::string>()));
        } else if (py::isinstance<py::str>(h)) {
            a.push_back(Rational::parse(h.cast<std::string>()));
        } else {
            throw py::type_error("coefficients must be ints or strings such as '3/2' or '0.25'");
        }
    }
    return a;
}

py::list tpoly_list(const TPoly& h, int top) {
    py::list out;
    for (int k = 0; k <= top; ++k) out.append(h.coeff(k));
    return out;
}

py::dict character_dict(const GradedCharacter& g, int top) {
    py::dict rows;
    for (const Partition& lambda : partitions_of(g.n())) {
        py::list arr;
        for (int k = 0; k <= top; ++k) arr.append(g.mult_at(lambda, k));
        rows[py::str(lambda.str())] = arr;
    }
    return rows;
}

py::dict report_dict(const CharacterReport& r) {
    py::dict out;
    out["mu"] = r.mu.str();
    out["d"] = r.d;
    out["ell"] = as_pyint(r.ell);
    out["n_mu"] = r.n_mu;
    out["waring"] = r.waring ? py::object(as_pyint(*r.waring)) : py::none();
    out["hilbert"] = tpoly_list(r.hilbert, r.d);
    out["character"] = character_dict(r.character, r.d);
    return out;
}

py::dict verification_dict(const VerificationReport& r) {
    py::dict out;
    out["mu"] = r.mu.str();
    out["d"] = r.d;
    out["agree"] = r.agree;
    py::list per;
    for (const DegreeComparison& c : r.degrees) {
        py::dict e;
        e["k"] = c.k;
        e["hilbert_formula"] = c.hilbert_formula;
        e["hilbert_oracle"] = c.hilbert_oracle;
        py::list diffs;
        for (const CharDiff& diff : c.char_diffs) {
            py::dict dj;
            dj["lambda"] = diff.lambda.str();
            dj["formula"] = diff.formula;
            dj["oracle"] = diff.oracle;
            diffs.append(dj);
        }
        e["char_diffs"] = diffs;
        per.append(e);
    }
    out["per_degree"] = per;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Hilbert functions and graded symmetric-group characters of "
              "apolarity quotients of orbit sums of powers";

    m.def(
        "character_report",
        [](const std::vector<int>& mu, int d) { return report_dict(character_report(as_partition(mu), d)); },
        py::arg("mu"), py::arg("d"),
        "Closed-form graded character, Hilbert function, orbit size, and "
        "rank certificate for the pattern mu at power d.");

    m.def(
        "graded_character_formula",
        [](const std::vector<int>& mu, int d) {
            return character_dict(graded_character_formula(as_partition(mu), d), d);
        },
        py::arg("mu"), py::arg("d"));

    m.def(
        "hilbert_series_formula",
        [](const std::vector<int>& mu, int d) {
            return tpoly_list(hilbert_series_formula(as_partition(mu), d), d);
        },
        py::arg("mu"), py::arg("d"));

    m.def(
        "waring_certificate",
        [](const std::vector<int>& mu, int d) -> py::object {
            auto w = waring_certificate(as_partition(mu), d);
            return w ? py::object(as_pyint(*w)) : py::none();
        },
        py::arg("mu"), py::arg("d"));

    m.def(
        "graded_character_bruteforce",
        [](const py::sequence& a, int d, int threads) {
            return character_dict(graded_character_bruteforce(as_coeffs(a), d, threads), d);
        },
        py::arg("a"), py::arg("d"), py::arg("threads") = 0,
        "Exact catalecticant-rank oracle; independent of the closed form.");

    m.def(
        "hilbert_function_bruteforce",
        [](const py::sequence& a, int d) {
            return tpoly_list(hilbert_function_bruteforce(as_coeffs(a), d), d);
        },
        py::arg("a"), py::arg("d"));

    m.def(
        "verify",
        [](const py::sequence& a, int d, int threads) {
            return verification_dict(verify(as_coeffs(a), d, threads));
        },
        py::arg("a"), py::arg("d"), py::arg("threads") = 0,
        "Run both paths and compare every multiplicity in every degree.");

    m.def(
        "kostka_foulkes",
        [](const std::vector<int>& lambda, const std::vector<int>& mu) {
            TPoly k = kostka_foulkes(as_partition(lambda), as_partition(mu));
            return tpoly_list(k, k.degree() < 0 ? 0 : k.degree());
        },
        py::arg("lambda_"), py::arg("mu"),
        "Coefficient list of the Kostka polynomial in the charge grading.");

    m.def(
        "r_mu_character",
        [](const std::vector<int>& mu) {
            Partition p = as_partition(mu);
            return character_dict(r_mu_character(p), n_stat(p));
        },
        py::arg("mu"));

    m.def(
        "charge", [](const std::vector<int>& word) { return charge(word); }, py::arg("word"));

    m.def(
        "ssyt_enumerate",
        [](const std::vector<int>& shape, const std::vector<int>& content) {
            py::list out;
            for (const Tableau& t : ssyt_enumerate(as_partition(shape), as_partition(content)))
                out.append(t.rows);
            return out;
        },
        py::arg("shape"), py::arg("content"));

    m.def(
        "syt_count",
        [](const std::vector<int>& lambda) { return as_pyint(syt_count(as_partition(lambda))); },
        py::arg("lambda_"));

    m.def(
        "irr_char_value",
        [](const std::vector<int>& lambda, const std::vector<int>& rho) {
            return as_pyint(irr_char_value(as_partition(lambda), as_partition(rho)));
        },
        py::arg("lambda_"), py::arg("rho"));

    m.def(
        "orbit_size",
        [](const std::vector<int>& mu) { return as_pyint(orbit_size(as_partition(mu))); },
        py::arg("mu"));

    m.def(
        "n_stat", [](const std::vector<int>& mu) { return n_stat(as_partition(mu)); },
        py::arg("mu"));

    py::register_exception<ZeroCoefficientSumError>(m, "ZeroCoefficientSumError", PyExc_ValueError);
}
