#include "rht/blowup.hpp"
#include "rht/cohom.hpp"
#include "rht/errors.hpp"
#include "rht/expr.hpp"
#include "rht/json_io.hpp"
#include "rht/massey.hpp"
#include "rht/models.hpp"
#include "rht/symp.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

namespace py = pybind11;

namespace {

using rht::Json;

rht::DgaPtr model_from_json_text(const std::string& text) {
    return rht::dga_from_json(Json::parse(text));
}

std::string family_json(const std::string& family, int n, int m) {
    rht::DgaPtr d;
    if (family == "heisenberg")
        d = rht::chevalley_eilenberg(rht::heisenberg());
    else if (family == "kodaira-thurston")
        d = rht::kodaira_thurston();
    else if (family == "vn")
        d = rht::chevalley_eilenberg(rht::vn(n));
    else if (family == "cpn")
        d = rht::cpn(m);
    else if (family == "abelian")
        d = rht::abelian_model(n);
    else if (family == "point")
        d = rht::point_model();
    else
        throw rht::Error("BadModel", "unknown family '" + family + "'");
    return rht::dga_to_json(*d).dump();
}

std::vector<int> betti(const std::string& model, int max_degree) {
    auto d = model_from_json_text(model);
    rht::Cohomology H(d);
    return H.betti_profile(max_degree < 0 ? d->degree_cap() : max_degree);
}

std::string ring(const std::string& model, int max_degree) {
    auto d = model_from_json_text(model);
    rht::Cohomology H(d);
    int top = max_degree < 0 ? d->degree_cap() : max_degree;
    return rht::ring_to_json(H, H.ring_table(top), H.betti_profile(top)).dump();
}

std::string cup(const std::string& model, const std::string& a, const std::string& b) {
    auto d = model_from_json_text(model);
    rht::Cohomology H(d);
    auto C = H.cup(H.class_of(rht::parse_element(a, d->algebra_ptr())),
                   H.class_of(rht::parse_element(b, d->algebra_ptr())));
    Json j;
    j["degree"] = C.degree;
    j["representative"] = C.representative.str();
    j["is_zero"] = C.representative.is_zero();
    return j.dump();
}

std::string massey(const std::string& model, const std::string& a, const std::string& b,
                   const std::string& c) {
    auto d = model_from_json_text(model);
    rht::Cohomology H(d);
    auto v = rht::triple_massey(H, H.class_of(rht::parse_element(a, d->algebra_ptr())),
                                H.class_of(rht::parse_element(b, d->algebra_ptr())),
                                H.class_of(rht::parse_element(c, d->algebra_ptr())));
    return rht::verdict_to_json(v).dump();
}

std::string formality_scan(const std::string& model, int max_degree) {
    auto d = model_from_json_text(model);
    rht::Cohomology H(d);
    int top = max_degree < 0 ? d->degree_cap() : max_degree;
    auto hits = rht::formality_scan(H, top);
    Json j;
    j["max_degree"] = top;
    j["count"] = hits.size();
    j["hits"] = Json::array();
    for (const auto& h : hits) {
        Json hj;
        hj["a"] = Json{{"degree", h.deg_a}, {"index", h.ia}};
        hj["b"] = Json{{"degree", h.deg_b}, {"index", h.ib}};
        hj["c"] = Json{{"degree", h.deg_c}, {"index", h.ic}};
        hj["verdict"] = rht::verdict_to_json(h.verdict);
        j["hits"].push_back(hj);
    }
    return j.dump();
}

std::string symplectic(const std::string& model, const std::string& form_text, bool lefschetz,
                       bool harmonic) {
    auto d = model_from_json_text(model);
    rht::SymplecticForm F(d, rht::parse_element(form_text, d->algebra_ptr()));
    rht::Cohomology H(d);
    Json j;
    j["closed"] = F.closed();
    j["nondegenerate"] = F.nondegenerate();
    int n = F.half_dim();
    if (lefschetz) {
        auto rep = rht::hard_lefschetz(H, H.class_of(F.element()), n);
        j["lefschetz"] = rht::lefschetz_to_json(rep);
        j["hard_lefschetz"] = rep.all_iso;
    }
    if (harmonic) {
        auto rep = rht::harmonic_report(F, H);
        j["harmonic_classes"] = rht::harmonic_to_json(rep);
        j["all_representable"] = rep.all_representable;
    }
    return j.dump();
}

std::string projectivize(const std::string& model, int k, const std::vector<std::string>& chern) {
    auto base = model_from_json_text(model);
    std::vector<rht::Element> cs;
    for (const auto& c : chern) cs.push_back(rht::parse_element(c, base->algebra_ptr()));
    auto pm = rht::projectivize(base, k, std::move(cs));
    rht::Cohomology H(pm.total);
    int top = std::min(pm.total->degree_cap(), base->degree_cap() + 2 * k - 2);
    Json j;
    j["model"] = rht::dga_to_json(*pm.total);
    j["betti"] = H.betti_profile(top);
    return j.dump();
}

std::string blowup_betti(int N, const std::vector<int>& y_betti, int k) {
    return rht::blowup_to_json(rht::blowup_betti(N, y_betti, k)).dump();
}

std::string lemma1(int m, int k) { return rht::verdict_to_json(rht::lemma1_check(m, k)).dump(); }

std::string lemma2(const std::string& target, int k) {
    rht::Lemma2Target t;
    if (target == "kt")
        t = rht::Lemma2Target::kodaira_thurston;
    else if (target == "m4")
        t = rht::Lemma2Target::m4;
    else
        throw rht::Error("BadModel", "target must be kt or m4");
    return rht::verdict_to_json(rht::lemma2_check(t, k)).dump();
}

} // namespace

PYBIND11_MODULE(_core, mod) {
    mod.doc() = "exact rational homotopy computations on free graded-commutative models";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const rht::ParseError& e) {
            PyErr_SetString(PyExc_ValueError,
                            (e.kind() + " at position " + std::to_string(e.position()) + ": " +
                             e.what())
                                .c_str());
        } catch (const rht::Error& e) {
            PyErr_SetString(PyExc_ValueError, (e.kind() + ": " + e.what()).c_str());
        }
    });

    mod.def("family_json", &family_json, py::arg("family"), py::arg("n") = 0, py::arg("m") = 0,
            "JSON text of a named model family");
    mod.def("betti", &betti, py::arg("model_json"), py::arg("max_degree") = -1,
            "Betti numbers b_0..b_max of a model given as JSON text");
    mod.def("ring", &ring, py::arg("model_json"), py::arg("max_degree") = -1);
    mod.def("cup", &cup, py::arg("model_json"), py::arg("a"), py::arg("b"));
    mod.def("massey", &massey, py::arg("model_json"), py::arg("a"), py::arg("b"), py::arg("c"),
            "triple product verdict as JSON text");
    mod.def("formality_scan", &formality_scan, py::arg("model_json"), py::arg("max_degree") = -1);
    mod.def("symplectic", &symplectic, py::arg("model_json"), py::arg("form"),
            py::arg("lefschetz") = true, py::arg("harmonic") = true);
    mod.def("projectivize", &projectivize, py::arg("model_json"), py::arg("k"),
            py::arg("chern") = std::vector<std::string>{});
    mod.def("blowup_betti", &blowup_betti, py::arg("N"), py::arg("y_betti"), py::arg("k"));
    mod.def("lemma1", &lemma1, py::arg("m"), py::arg("k"));
    mod.def("lemma2", &lemma2, py::arg("target"), py::arg("k"));
    mod.def("conn_sum_survives", &rht::massey_survives_connected_sum, py::arg("q"),
            py::arg("dim"));
}
