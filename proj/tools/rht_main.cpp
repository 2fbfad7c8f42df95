#include "rht/blowup.hpp"
#include "rht/cohom.hpp"
#include "rht/errors.hpp"
#include "rht/expr.hpp"
#include "rht/json_io.hpp"
#include "rht/massey.hpp"
#include "rht/models.hpp"
#include "rht/symp.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using rht::Json;

struct ModelArgs {
    std::string family;
    int n = 0;
    int m = 0;
    std::string from_file;

    void attach(CLI::App* cmd, bool require = true) {
        auto* fam = cmd->add_option("--family", family,
                                    "heisenberg|kodaira-thurston|vn|cpn|abelian|point");
        cmd->add_option("--n", n, "dimension parameter for vn/abelian");
        auto* mopt = cmd->add_option("--m", m, "parameter for cpn (and the standard form)");
        auto* file = cmd->add_option("--from-file", from_file, "load a model from JSON");
        file->excludes(fam);
        if (require) {
            // one of the two sources must be present; fail at parse time (exit 2)
            cmd->parse_complete_callback([this]() {
                if (family.empty() && from_file.empty())
                    throw CLI::ValidationError("model",
                                               "need --family or --from-file");
            });
        }
        (void)mopt;
    }

    rht::DgaPtr build() const {
        rht::DgaPtr model;
        if (!from_file.empty()) {
            std::ifstream in(from_file);
            if (!in)
                throw rht::Error("BadModel", "cannot open '" + from_file + "'");
            Json j = Json::parse(in); // throws nlohmann parse_error
            model = rht::dga_from_json(j);
        } else if (family == "heisenberg") {
            model = rht::chevalley_eilenberg(rht::heisenberg());
        } else if (family == "kodaira-thurston") {
            model = rht::kodaira_thurston();
        } else if (family == "vn") {
            if (n < 3) throw rht::Error("BadDimension", "vn needs --n >= 3");
            model = rht::chevalley_eilenberg(rht::vn(n));
        } else if (family == "cpn") {
            if (m < 1) throw rht::Error("BadDimension", "cpn needs --m >= 1");
            model = rht::cpn(m);
        } else if (family == "abelian") {
            if (n < 0) throw rht::Error("BadDimension", "abelian needs --n >= 0");
            model = rht::abelian_model(n);
        } else if (family == "point") {
            model = rht::point_model();
        } else {
            throw rht::Error("BadModel", "unknown family '" + family + "'");
        }
        if (const char* cap = std::getenv("RHT_MAX_DEGREE")) {
            try {
                model = model->with_cap(std::stoi(cap));
            } catch (const std::invalid_argument&) {
                throw rht::Error("BadDimension", "RHT_MAX_DEGREE is not an integer");
            }
        }
        return model;
    }
};

struct Output {
    bool pretty = false;
    std::string path;

    void attach(CLI::App* cmd) {
        cmd->add_flag("--pretty", pretty, "indent the JSON report");
        cmd->add_option("--out", path, "write the report to a file instead of stdout");
    }

    void emit(const Json& j) const {
        std::string text = pretty ? j.dump(2) : j.dump();
        text += '\n';
        if (path.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(path);
            if (!out) throw rht::Error("BadModel", "cannot write '" + path + "'");
            out << text;
        }
    }
};

std::vector<rht::Element> parse_chern(const std::string& list, const rht::AlgebraPtr& alg) {
    std::vector<rht::Element> out;
    if (list.empty()) return out;
    std::size_t start = 0;
    while (start <= list.size()) {
        std::size_t comma = list.find(',', start);
        std::string piece =
            comma == std::string::npos ? list.substr(start) : list.substr(start, comma - start);
        out.push_back(rht::parse_element(piece, alg));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

Json cohom_class_json(const rht::CohomClass& c) {
    Json j;
    j["degree"] = c.degree;
    j["representative"] = c.representative.str();
    return j;
}

int run(int argc, char** argv) {
    CLI::App app{"rational homotopy workbench for differential graded algebras"};
    app.require_subcommand(1);

    // model
    auto* cmd_model = app.add_subcommand("model", "build a model and dump it as JSON");
    ModelArgs model_model;
    Output model_out;
    model_model.attach(cmd_model);
    model_out.attach(cmd_model);
    cmd_model->final_callback([&]() {
        auto d = model_model.build();
        model_out.emit(rht::dga_to_json(*d));
    });

    // betti
    auto* cmd_betti = app.add_subcommand("betti", "Betti numbers b_0..b_D");
    ModelArgs betti_model;
    Output betti_out;
    int betti_maxdeg = -1;
    betti_model.attach(cmd_betti);
    betti_out.attach(cmd_betti);
    cmd_betti->add_option("--max-degree", betti_maxdeg, "top degree (default: the cap)");
    cmd_betti->final_callback([&]() {
        auto d = betti_model.build();
        rht::Cohomology H(d);
        int top = betti_maxdeg < 0 ? d->degree_cap() : betti_maxdeg;
        betti_out.emit(rht::betti_to_json(H.betti_profile(top)));
    });

    // ring
    auto* cmd_ring = app.add_subcommand("ring", "cohomology ring structure constants");
    ModelArgs ring_model;
    Output ring_out;
    int ring_maxdeg = -1;
    ring_model.attach(cmd_ring);
    ring_out.attach(cmd_ring);
    cmd_ring->add_option("--max-degree", ring_maxdeg, "top degree (default: the cap)");
    cmd_ring->final_callback([&]() {
        auto d = ring_model.build();
        rht::Cohomology H(d);
        int top = ring_maxdeg < 0 ? d->degree_cap() : ring_maxdeg;
        ring_out.emit(rht::ring_to_json(H, H.ring_table(top), H.betti_profile(top)));
    });

    // cup
    auto* cmd_cup = app.add_subcommand("cup", "cup product of two classes");
    ModelArgs cup_model;
    Output cup_out;
    std::string cup_a, cup_b;
    cup_model.attach(cmd_cup);
    cup_out.attach(cmd_cup);
    cmd_cup->add_option("--a", cup_a, "first representative")->required();
    cmd_cup->add_option("--b", cup_b, "second representative")->required();
    cmd_cup->final_callback([&]() {
        auto d = cup_model.build();
        rht::Cohomology H(d);
        auto A = H.class_of(rht::parse_element(cup_a, d->algebra_ptr()));
        auto B = H.class_of(rht::parse_element(cup_b, d->algebra_ptr()));
        auto C = H.cup(A, B);
        Json j;
        j["degree"] = C.degree;
        j["representative"] = C.representative.str();
        j["is_zero"] = C.representative.is_zero();
        cup_out.emit(j);
    });

    // massey
    auto* cmd_massey = app.add_subcommand("massey", "triple product <a,b,c>");
    ModelArgs massey_model;
    Output massey_out;
    std::string ma, mb, mc;
    massey_model.attach(cmd_massey);
    massey_out.attach(cmd_massey);
    cmd_massey->add_option("--a", ma, "first representative")->required();
    cmd_massey->add_option("--b", mb, "second representative")->required();
    cmd_massey->add_option("--c", mc, "third representative")->required();
    cmd_massey->final_callback([&]() {
        auto d = massey_model.build();
        rht::Cohomology H(d);
        auto A = H.class_of(rht::parse_element(ma, d->algebra_ptr()));
        auto B = H.class_of(rht::parse_element(mb, d->algebra_ptr()));
        auto C = H.class_of(rht::parse_element(mc, d->algebra_ptr()));
        massey_out.emit(rht::verdict_to_json(rht::triple_massey(H, A, B, C)));
    });

    // formality-scan
    auto* cmd_scan = app.add_subcommand("formality-scan", "search for nontrivial triple products");
    ModelArgs scan_model;
    Output scan_out;
    int scan_maxdeg = -1;
    scan_model.attach(cmd_scan);
    scan_out.attach(cmd_scan);
    cmd_scan->add_option("--max-degree", scan_maxdeg, "top target degree (default: the cap)");
    cmd_scan->final_callback([&]() {
        auto d = scan_model.build();
        rht::Cohomology H(d);
        int top = scan_maxdeg < 0 ? d->degree_cap() : scan_maxdeg;
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
        scan_out.emit(j);
    });

    // symplectic
    auto* cmd_symp = app.add_subcommand("symplectic", "closedness, nondegeneracy, Lefschetz, harmonicity");
    ModelArgs symp_model;
    Output symp_out;
    std::string symp_form;
    bool standard_omega = false, do_lef = false, do_harm = false;
    int half_dim = -1;
    symp_model.attach(cmd_symp, false);
    symp_out.attach(cmd_symp);
    cmd_symp->add_option("--form", symp_form, "degree-2 form expression");
    cmd_symp->add_flag("--standard-omega", standard_omega,
                       "use the odd-coefficient form on the vn(2m) model");
    cmd_symp->add_flag("--lefschetz", do_lef, "report the Lefschetz map ranks");
    cmd_symp->add_flag("--harmonic", do_harm, "report harmonic representability per degree");
    cmd_symp->add_option("--half-dim", half_dim, "override n when it cannot be inferred");
    cmd_symp->final_callback([&]() {
        rht::DgaPtr d;
        std::optional<rht::SymplecticForm> F;
        rht::Element form{rht::point_model()->algebra_ptr()};
        int n = 0;
        if (standard_omega) {
            if (symp_model.m < 2)
                throw rht::Error("BadDimension", "--standard-omega needs --m >= 2");
            F = rht::omega_standard(symp_model.m);
            d = F->dga();
            form = F->element();
            n = symp_model.m;
        } else {
            if (symp_form.empty())
                throw rht::Error("BadModel", "need --form or --standard-omega");
            if (symp_model.family.empty() && symp_model.from_file.empty())
                throw rht::Error("BadModel", "need a model for --form");
            d = symp_model.build();
            form = rht::parse_element(symp_form, d->algebra_ptr());
            bool degree_one = true;
            for (std::size_t i = 0; i < d->algebra().generator_count(); ++i)
                if (d->algebra().generator(i).degree != 1) degree_one = false;
            if (degree_one) {
                F = rht::SymplecticForm(d, form);
                n = F->half_dim();
            } else if (half_dim > 0) {
                n = half_dim;
            } else if (symp_model.family == "cpn") {
                n = symp_model.m;
            } else {
                throw rht::Error("BadDimension", "cannot infer the half-dimension; pass --half-dim");
            }
        }
        rht::Cohomology H(d);
        Json j;
        if (F) {
            j["closed"] = F->closed();
            j["nondegenerate"] = F->nondegenerate();
        } else {
            // even-generator models: nondegeneracy means [w]^n survives in H^{2n}
            j["closed"] = d->differential(form).is_zero();
            j["nondegenerate"] = !form.pow(n).is_zero() && !H.is_exact(form.pow(n));
        }
        if (do_lef) {
            auto w = H.class_of(form);
            auto rep = rht::hard_lefschetz(H, w, n);
            j["lefschetz"] = rht::lefschetz_to_json(rep);
            j["hard_lefschetz"] = rep.all_iso;
        }
        if (do_harm) {
            rht::HarmonicReport rep;
            if (F)
                rep = rht::harmonic_report(*F, H);
            else
                rep = rht::harmonic_by_class_powers(H, H.class_of(form), n);
            j["harmonic_classes"] = rht::harmonic_to_json(rep);
            j["all_representable"] = rep.all_representable;
        }
        symp_out.emit(j);
    });

    // projectivize
    auto* cmd_proj = app.add_subcommand("projectivize", "total model of a projectivized bundle");
    ModelArgs proj_model;
    Output proj_out;
    int proj_k = 0;
    std::string proj_chern;
    proj_model.attach(cmd_proj);
    proj_out.attach(cmd_proj);
    cmd_proj->add_option("--k", proj_k, "fiber rank")->required();
    cmd_proj->add_option("--chern", proj_chern, "comma-separated c_1,...,c_k over the base");
    cmd_proj->final_callback([&]() {
        auto base = proj_model.build();
        auto chern = parse_chern(proj_chern, base->algebra_ptr());
        auto pm = rht::projectivize(base, proj_k, chern);
        rht::Cohomology H(pm.total);
        int top = std::min(pm.total->degree_cap(), base->degree_cap() + 2 * proj_k - 2);
        Json j;
        j["model"] = rht::dga_to_json(*pm.total);
        j["betti"] = H.betti_profile(top);
        proj_out.emit(j);
    });

    // blowup-betti
    auto* cmd_blow = app.add_subcommand("blowup-betti", "Betti profile of a projective blow-up");
    ModelArgs blow_model;
    Output blow_out;
    int blow_N = 0;
    blow_model.attach(cmd_blow);
    blow_out.attach(cmd_blow);
    cmd_blow->add_option("--N", blow_N, "ambient projective dimension")->required();
    cmd_blow->final_callback([&]() {
        auto d = blow_model.build();
        rht::Cohomology H(d);
        int dim_y = d->degree_cap();
        auto y_betti = H.betti_profile(dim_y);
        int k = blow_N - dim_y / 2;
        blow_out.emit(rht::blowup_to_json(rht::blowup_betti(blow_N, y_betti, k)));
    });

    // lemma
    auto* cmd_lemma = app.add_subcommand("lemma", "nonformality checks on projectivized models");
    Output lemma_out;
    int lemma_which = 0, lemma_m = 0, lemma_k = 0;
    std::string lemma_target, lemma_chern;
    lemma_out.attach(cmd_lemma);
    cmd_lemma->add_option("--which", lemma_which, "1 or 2")->required();
    cmd_lemma->add_option("--m", lemma_m, "base family parameter (lemma 1)");
    cmd_lemma->add_option("--target", lemma_target, "kt or m4 (lemma 2)");
    cmd_lemma->add_option("--k", lemma_k, "fiber rank")->required();
    cmd_lemma->add_option("--chern", lemma_chern, "comma-separated Chern classes over the base");
    cmd_lemma->final_callback([&]() {
        Json j;
        j["which"] = lemma_which;
        rht::MasseyVerdict v;
        if (lemma_which == 1) {
            if (lemma_m < 2) throw rht::Error("BadDimension", "lemma 1 needs --m >= 2");
            auto base = rht::chevalley_eilenberg(rht::vn(2 * lemma_m));
            auto chern = parse_chern(lemma_chern, base->algebra_ptr());
            j["m"] = lemma_m;
            j["k"] = lemma_k;
            v = rht::lemma1_check(lemma_m, lemma_k, chern);
        } else if (lemma_which == 2) {
            rht::Lemma2Target t;
            if (lemma_target == "kt")
                t = rht::Lemma2Target::kodaira_thurston;
            else if (lemma_target == "m4")
                t = rht::Lemma2Target::m4;
            else
                throw rht::Error("BadModel", "lemma 2 needs --target kt or m4");
            auto base = t == rht::Lemma2Target::kodaira_thurston
                            ? rht::kodaira_thurston()
                            : rht::chevalley_eilenberg(rht::vn(4));
            auto chern = parse_chern(lemma_chern, base->algebra_ptr());
            j["target"] = lemma_target;
            j["k"] = lemma_k;
            v = rht::lemma2_check(t, lemma_k, chern);
        } else {
            throw rht::Error("BadModel", "--which must be 1 or 2");
        }
        Json chern_out = Json::array();
        {
            // echo the inputs (zero-padded to k entries)
            std::vector<std::string> pieces;
            std::size_t start = 0;
            if (!lemma_chern.empty()) {
                while (start <= lemma_chern.size()) {
                    std::size_t comma = lemma_chern.find(',', start);
                    pieces.push_back(comma == std::string::npos
                                         ? lemma_chern.substr(start)
                                         : lemma_chern.substr(start, comma - start));
                    if (comma == std::string::npos) break;
                    start = comma + 1;
                }
            }
            for (int i = 0; i < lemma_k; ++i)
                chern_out.push_back(i < static_cast<int>(pieces.size()) ? pieces[i] : "0");
        }
        j["chern"] = chern_out;
        Json vj = rht::verdict_to_json(v);
        for (auto& [key, val] : vj.items()) j[key] = val;
        lemma_out.emit(j);
    });

    // conn-sum-survival
    auto* cmd_conn = app.add_subcommand("conn-sum-survival", "degree bookkeeping for connected sums");
    Output conn_out;
    int conn_q = 0, conn_dim = 0;
    conn_out.attach(cmd_conn);
    cmd_conn->add_option("--q", conn_q, "product degree")->required();
    cmd_conn->add_option("--dim", conn_dim, "manifold dimension")->required();
    cmd_conn->final_callback([&]() {
        Json j;
        j["q"] = conn_q;
        j["dim"] = conn_dim;
        j["survives"] = rht::massey_survives_connected_sum(conn_q, conn_dim);
        conn_out.emit(j);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        // usage mistakes are parse errors; --help and friends stay 0
        return code == 0 ? 0 : 2;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const rht::ParseError& e) {
        Json j;
        j["error"] = {{"kind", e.kind()},
                      {"message", e.what()},
                      {"line", 1},
                      {"column", e.position() + 1}};
        std::cerr << j.dump() << '\n';
        return 2;
    } catch (const nlohmann::json::parse_error& e) {
        Json j;
        j["error"] = {{"kind", "SyntaxError"}, {"message", e.what()}, {"byte", e.byte}};
        std::cerr << j.dump() << '\n';
        return 2;
    } catch (const rht::Error& e) {
        Json j;
        j["error"] = {{"kind", e.kind()}, {"message", e.what()}};
        std::cerr << j.dump() << '\n';
        return 1;
    } catch (const std::exception& e) {
        Json j;
        j["error"] = {{"kind", "Internal"}, {"message", e.what()}};
        std::cerr << j.dump() << '\n';
        return 1;
    }
}
