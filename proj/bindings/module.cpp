#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tildeiso/serialize.hpp"
#include "tildeiso/survey.hpp"

namespace py = pybind11;
using namespace tildeiso;

namespace {

Word parse(const std::string& text, const std::string& alphabet = "01") {
    return Word::parse(text, Alphabet{alphabet});
}

py::object json_to_py(const Json& j) {
    switch (j.type()) {
        case Json::value_t::null: return py::none();
        case Json::value_t::boolean: return py::bool_(j.get<bool>());
        case Json::value_t::number_integer: return py::int_(j.get<std::int64_t>());
        case Json::value_t::number_unsigned: return py::int_(j.get<std::uint64_t>());
        case Json::value_t::number_float: return py::float_(j.get<double>());
        case Json::value_t::string: return py::str(j.get<std::string>());
        case Json::value_t::array: {
            py::list out;
            for (const Json& item : j) out.append(json_to_py(item));
            return out;
        }
        case Json::value_t::object: {
            py::dict out;
            for (auto it = j.begin(); it != j.end(); ++it) {
                out[py::str(it.key())] = json_to_py(it.value());
            }
            return out;
        }
        default: return py::none();
    }
}

std::vector<std::string> op_strings(const std::vector<EditOp>& ops) {
    std::vector<std::string> out;
    out.reserve(ops.size());
    for (const EditOp& op : ops) out.push_back(op.to_string());
    return out;
}

py::dict transformation_to_py(const Transformation& t) {
    py::dict out;
    out["ops"] = op_strings(t.ops);
    py::list words;
    for (const Word& w : t.intermediates) words.append(w.str());
    out["words"] = words;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "swap-and-mismatch (tilde) edit distance and isometric-word toolkit";

    // Translators are consulted newest-first, so the subclass goes last.
    py::register_exception<Error>(m, "TildeIsoError", PyExc_ValueError);
    py::register_exception<BudgetExceededError>(m, "BudgetExceeded", PyExc_RuntimeError);

    m.def(
        "reverse", [](const std::string& w, const std::string& alphabet) {
            return reverse(parse(w, alphabet)).str();
        },
        py::arg("w"), py::arg("alphabet") = "01");
    m.def(
        "complement", [](const std::string& w) { return complement(parse(w)).str(); },
        py::arg("w"));
    m.def(
        "is_factor",
        [](const std::string& f, const std::string& w, const std::string& alphabet) {
            return is_factor(parse(f, alphabet), parse(w, alphabet));
        },
        py::arg("f"), py::arg("w"), py::arg("alphabet") = "01");
    m.def(
        "prefix",
        [](const std::string& w, int len, const std::string& alphabet) {
            return prefix(parse(w, alphabet), len).str();
        },
        py::arg("w"), py::arg("len"), py::arg("alphabet") = "01");
    m.def(
        "suffix",
        [](const std::string& w, int len, const std::string& alphabet) {
            return suffix(parse(w, alphabet), len).str();
        },
        py::arg("w"), py::arg("len"), py::arg("alphabet") = "01");

    m.def(
        "hamming_distance",
        [](const std::string& u, const std::string& v, const std::string& alphabet) {
            return hamming_distance(parse(u, alphabet), parse(v, alphabet));
        },
        py::arg("u"), py::arg("v"), py::arg("alphabet") = "01");
    m.def(
        "tilde_distance",
        [](const std::string& u, const std::string& v) {
            return tilde_distance(parse(u), parse(v));
        },
        py::arg("u"), py::arg("v"));
    m.def(
        "tilde_distance_oracle",
        [](const std::string& u, const std::string& v, const std::string& alphabet) {
            return tilde_distance_oracle(parse(u, alphabet), parse(v, alphabet));
        },
        py::arg("u"), py::arg("v"), py::arg("alphabet") = "01");
    m.def(
        "minimal_op_sets",
        [](const std::string& u, const std::string& v) {
            std::vector<std::vector<std::string>> out;
            for (const OpSet& s : minimal_op_sets(parse(u), parse(v))) out.push_back(op_strings(s.ops));
            return out;
        },
        py::arg("u"), py::arg("v"));

    m.def(
        "enumerate_minimal_transformations",
        [](const std::string& u, const std::string& v, std::uint64_t limit) {
            py::list out;
            for (const Transformation& t :
                 enumerate_minimal_transformations(parse(u), parse(v), limit)) {
                out.append(transformation_to_py(t));
            }
            return out;
        },
        py::arg("u"), py::arg("v"), py::arg("limit") = 0);
    m.def(
        "exists_f_free_minimal_transformation",
        [](const std::string& u, const std::string& v, const std::string& f) -> py::object {
            auto t = exists_f_free_minimal_transformation(parse(u), parse(v), parse(f));
            if (!t) return py::none();
            return transformation_to_py(*t);
        },
        py::arg("u"), py::arg("v"), py::arg("f"));
    m.def(
        "is_witness_pair",
        [](const std::string& f, const std::string& u, const std::string& v) {
            return json_to_py(to_json(is_witness_pair(parse(f), parse(u), parse(v))));
        },
        py::arg("f"), py::arg("u"), py::arg("v"));

    m.def(
        "error_overlaps",
        [](const std::string& f) {
            const Word w = parse(f);
            py::list out;
            for (const ErrorOverlap& eo : error_overlaps(w)) out.append(json_to_py(to_json(eo, w)));
            return out;
        },
        py::arg("f"));
    m.def(
        "ham_error_overlaps",
        [](const std::string& f) { return ham_error_overlaps(parse(f)); }, py::arg("f"));
    m.def(
        "ham_isometric", [](const std::string& f) { return ham_isometric(parse(f)); },
        py::arg("f"));

    m.def(
        "construct_witnesses",
        [](const std::string& f) -> py::object {
            auto c = construct_witnesses(parse(f));
            if (!c) return py::none();
            return json_to_py(to_json(*c));
        },
        py::arg("f"));
    m.def(
        "classify",
        [](const std::string& f, int max_len, int jobs) {
            return json_to_py(to_json(classify(parse(f), max_len, jobs)));
        },
        py::arg("f"), py::arg("max_len") = 0, py::arg("jobs") = 1);
    m.def(
        "brute_force_isometric",
        [](const std::string& f, int max_len, int jobs) {
            BruteForceResult r = brute_force_isometric(parse(f), max_len, jobs);
            py::dict out;
            if (r.witness) {
                out["witness"] = py::make_tuple(r.witness->first.str(), r.witness->second.str());
            } else {
                out["witness"] = py::none();
                out["max_len"] = r.certificate.max_len;
                out["pairs_checked"] = r.certificate.pairs_checked;
            }
            return out;
        },
        py::arg("f"), py::arg("max_len"), py::arg("jobs") = 1);
    m.def(
        "audit_prop2",
        [](int len, int max_len, int jobs) {
            std::vector<std::string> out;
            for (const Word& w : audit_prop2(len, max_len, jobs)) out.push_back(w.str());
            return out;
        },
        py::arg("len"), py::arg("max_len") = 0, py::arg("jobs") = 1);
    m.def(
        "audit_subgraph_distances",
        [](const std::string& f, int len) {
            py::list out;
            for (const SubgraphCounterexample& cex : audit_subgraph_distances(parse(f), len)) {
                py::dict d;
                d["u"] = cex.u.str();
                d["v"] = cex.v.str();
                d["graph_distance"] = cex.graph_distance < 0 ? py::object(py::none())
                                                             : py::object(py::int_(cex.graph_distance));
                d["tilde_distance"] = cex.tilde;
                out.append(d);
            }
            return out;
        },
        py::arg("f"), py::arg("len"));
    m.def(
        "survey",
        [](int len, int max_len, int jobs) {
            return json_to_py(Json::parse(survey_to_json(run_survey(len, max_len, jobs))));
        },
        py::arg("len"), py::arg("max_len") = 0, py::arg("jobs") = 1);

    m.attr("__version__") = "0.1.0";
}
