#include "rht/json_io.hpp"

#include "rht/errors.hpp"
#include "rht/expr.hpp"

namespace rht {

Json dga_to_json(const DGA& d) {
    Json j;
    j["generators"] = Json::array();
    const auto& alg = d.algebra();
    for (std::size_t i = 0; i < alg.generator_count(); ++i) {
        const auto& g = alg.generator(i);
        Json gj;
        gj["name"] = g.name;
        gj["degree"] = g.degree;
        if (g.weight) gj["weight"] = *g.weight;
        j["generators"].push_back(gj);
    }
    Json diff = Json::object();
    for (std::size_t i = 0; i < alg.generator_count(); ++i) {
        const auto& img = d.d_of_generator(i);
        if (!img.is_zero()) diff[alg.generator(i).name] = img.str();
    }
    j["differential"] = diff;
    j["degree_cap"] = d.degree_cap();
    return j;
}

DgaPtr dga_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("generators") || !j.at("generators").is_array())
        throw Error("BadModel", "model JSON needs a generators array");
    std::vector<GeneratorSpec> gens;
    for (const auto& gj : j.at("generators")) {
        if (!gj.is_object() || !gj.contains("name") || !gj.at("name").is_string() ||
            !gj.contains("degree") || !gj.at("degree").is_number_integer())
            throw Error("BadModel", "each generator needs a string name and an integer degree");
        GeneratorSpec g;
        g.name = gj.at("name").get<std::string>();
        g.degree = gj.at("degree").get<int>();
        if (gj.contains("weight")) {
            if (!gj.at("weight").is_number_integer())
                throw Error("BadModel", "generator weight must be an integer");
            g.weight = gj.at("weight").get<int>();
        }
        gens.push_back(std::move(g));
    }
    auto alg = GradedAlgebra::make(std::move(gens));
    std::vector<Element> d(alg->generator_count(), Element(alg));
    if (j.contains("differential")) {
        if (!j.at("differential").is_object())
            throw Error("BadModel", "differential must map generator names to expressions");
        for (const auto& [name, expr] : j.at("differential").items()) {
            auto idx = alg->index_of(name);
            if (!idx)
                throw Error("UnknownGenerator", "differential names unknown generator '" + name + "'");
            if (!expr.is_string())
                throw Error("BadModel", "differential entries must be expression strings");
            d[*idx] = parse_element(expr.get<std::string>(), alg);
        }
    }
    std::optional<int> cap;
    if (j.contains("degree_cap")) {
        if (!j.at("degree_cap").is_number_integer())
            throw Error("BadModel", "degree_cap must be an integer");
        cap = j.at("degree_cap").get<int>();
    }
    return DGA::make(alg, std::move(d), cap);
}

Json lie_to_json(const LieAlgebra& L) {
    Json j;
    j["dim"] = L.dim();
    j["brackets"] = Json::array();
    for (const auto& [pair, terms] : L.table()) {
        Json bj;
        bj["i"] = pair.first;
        bj["j"] = pair.second;
        bj["terms"] = Json::array();
        for (const auto& [k, c] : terms) {
            Json t;
            t["k"] = k;
            t["c"] = rational_to_string(c);
            bj["terms"].push_back(t);
        }
        j["brackets"].push_back(bj);
    }
    return j;
}

LieAlgebra lie_from_json(const Json& j) {
    LieAlgebra L(j.at("dim").get<int>());
    if (j.contains("brackets")) {
        for (const auto& bj : j.at("brackets")) {
            int i = bj.at("i").get<int>();
            int jj = bj.at("j").get<int>();
            for (const auto& t : bj.at("terms"))
                L.add_bracket(i, jj, t.at("k").get<int>(),
                              rational_from_string(t.at("c").get<std::string>()));
        }
    }
    return L;
}

Json verdict_to_json(const MasseyVerdict& v) {
    Json j;
    j["defined"] = v.defined;
    j["nontrivial"] = v.nontrivial;
    j["degree"] = v.degree;
    if (v.representative) j["representative"] = v.representative->str();
    j["indeterminacy_dim"] = v.indeterminacy.dim();
    if (v.g && v.h) {
        j["primitives"] = Json::object();
        j["primitives"]["g"] = v.g->str();
        j["primitives"]["h"] = v.h->str();
    }
    return j;
}

Json betti_to_json(const std::vector<int>& profile) {
    Json j;
    j["betti"] = profile;
    return j;
}

Json ring_to_json(const Cohomology& H, const Cohomology::RingTable& t,
                  const std::vector<int>& profile) {
    Json j;
    j["betti"] = profile;
    j["classes"] = Json::array();
    std::vector<CohomClass> reps;
    for (const auto& [deg, idx] : t.classes) {
        auto cb = H.class_basis(deg);
        Json cj;
        cj["degree"] = deg;
        cj["representative"] = cb[idx].representative.str();
        j["classes"].push_back(cj);
    }
    j["ring"] = Json::array();
    for (const auto& e : t.entries) {
        Json ej;
        ej["a"] = e.a;
        ej["b"] = e.b;
        Json prod = Json::array();
        for (const auto& c : e.product) prod.push_back(rational_to_string(c));
        ej["product"] = prod;
        j["ring"].push_back(ej);
    }
    return j;
}

Json lefschetz_to_json(const LefschetzReport& r) {
    Json arr = Json::array();
    for (const auto& s : r.steps) {
        Json sj;
        sj["k"] = s.k;
        sj["rank"] = s.rank;
        sj["source_dim"] = s.source_dim;
        sj["target_dim"] = s.target_dim;
        sj["iso"] = s.iso;
        arr.push_back(sj);
    }
    return arr;
}

Json harmonic_to_json(const HarmonicReport& r) {
    Json arr = Json::array();
    for (const auto& d : r.degrees) {
        Json dj;
        dj["degree"] = d.degree;
        dj["representable"] = d.representable;
        dj["total"] = d.total;
        arr.push_back(dj);
    }
    return arr;
}

Json blowup_to_json(const BlowupBettiProfile& p) {
    Json j;
    j["N"] = p.N;
    j["k"] = p.k;
    j["y_betti"] = p.y_betti;
    j["betti"] = p.betti;
    j["euler"] = p.euler;
    j["duality"] = p.duality;
    return j;
}

} // namespace rht
