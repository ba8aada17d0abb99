#include "sqc/json_io.hpp"

#include <exception>

#include "sqc/errors.hpp"

namespace sqc {

namespace {

/// Wraps a nlohmann access so type errors surface as parse_error.
template <typename F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string(what) + ": " + e.what());
    }
}

const Json& expect_field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw parse_error(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

void expect_array(const Json& j, std::size_t size, const char* what) {
    if (!j.is_array() || j.size() != size)
        throw parse_error(std::string(what) + ": expected an array of length " +
                          std::to_string(size));
}

} // namespace

Json parse_document(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw parse_error("malformed JSON document");
    return j;
}

Json scalar_to_json(const Scalar& a) {
    Json j = Json::array();
    for (std::size_t k = 0; k < 4; ++k) j.push_back(rational_to_string(a[k]));
    return j;
}

Scalar scalar_from_json(const Json& j) {
    expect_array(j, 4, "Scalar");
    std::array<Rational, 4> c;
    for (std::size_t k = 0; k < 4; ++k) {
        if (!j[k].is_string()) throw parse_error("Scalar coefficients must be strings");
        c[k] = rational_from_string(j[k].get<std::string>());
    }
    return Scalar(c);
}

Json matrix_to_json(const Matrix& m) {
    Json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    Json entries = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) entries.push_back(scalar_to_json(m.at(r, c)));
    j["entries"] = entries;
    return j;
}

Matrix matrix_from_json(const Json& j) {
    return guarded("Matrix", [&] {
        std::size_t rows = expect_field(j, "rows").get<std::size_t>();
        std::size_t cols = expect_field(j, "cols").get<std::size_t>();
        const Json& entries = expect_field(j, "entries");
        if (!entries.is_array() || entries.size() != rows * cols)
            throw parse_error("Matrix entries must hold rows*cols scalars");
        Matrix m(rows, cols);
        std::size_t idx = 0;
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = scalar_from_json(entries[idx++]);
        return m;
    });
}

Json kelem_to_json(const KElem& k) {
    return Json::array({scalar_to_json(k.left), scalar_to_json(k.right)});
}

KElem kelem_from_json(const Json& j) {
    expect_array(j, 2, "KElem");
    return {scalar_from_json(j[0]), scalar_from_json(j[1])};
}

Json alg_elem_to_json(const AlgElem& a) {
    Json j;
    j["k0"] = kelem_to_json(a.k[0]);
    j["k1"] = kelem_to_json(a.k[1]);
    j["k2"] = kelem_to_json(a.k[2]);
    j["k3"] = kelem_to_json(a.k[3]);
    return j;
}

AlgElem alg_elem_from_json(const Json& j) {
    AlgElem a;
    a.k[0] = kelem_from_json(expect_field(j, "k0"));
    a.k[1] = kelem_from_json(expect_field(j, "k1"));
    a.k[2] = kelem_from_json(expect_field(j, "k2"));
    a.k[3] = kelem_from_json(expect_field(j, "k3"));
    return a;
}

Json aut_factors_to_json(const AutFactors& f) {
    Json j;
    j["r1"] = kelem_to_json(f.r1);
    j["r2"] = kelem_to_json(f.r2);
    j["psi"] = (f.psi == KTwist::identity) ? "id" : "neg_s";
    j["sigma"] = Json::array({f.sigma.img[0], f.sigma.img[1], f.sigma.img[2]});
    return j;
}

AutFactors aut_factors_from_json(const Json& j) {
    return guarded("AutFactors", [&] {
        AutFactors f;
        f.r1 = kelem_from_json(expect_field(j, "r1"));
        f.r2 = kelem_from_json(expect_field(j, "r2"));
        std::string psi = expect_field(j, "psi").get<std::string>();
        if (psi == "id")
            f.psi = KTwist::identity;
        else if (psi == "neg_s")
            f.psi = KTwist::exchange;
        else
            throw parse_error("psi must be \"id\" or \"neg_s\"");
        const Json& sigma = expect_field(j, "sigma");
        expect_array(sigma, 3, "sigma");
        for (std::size_t i = 0; i < 3; ++i) f.sigma.img[i] = sigma[i].get<std::size_t>();
        if (!f.sigma.is_valid()) throw parse_error("sigma must be a permutation of {1,2,3}");
        return f;
    });
}

Json group_to_json(const AbGroup& g) {
    Json j;
    j["free"] = g.free_rank;
    j["torsion"] = g.torsion;
    return j;
}

AbGroup group_from_json(const Json& j) {
    return guarded("AbGroup", [&] {
        AbGroup g;
        g.free_rank = expect_field(j, "free").get<std::size_t>();
        g.torsion = expect_field(j, "torsion").get<std::vector<long long>>();
        if (!g.is_valid()) throw parse_error("torsion orders must all be >= 2");
        return g;
    });
}

Json group_elem_to_json(const GroupElem& e) { return Json(e.coords); }

GroupElem group_elem_from_json(const Json& j) {
    return guarded("GroupElem", [&] {
        if (!j.is_array()) throw parse_error("GroupElem must be an array of integers");
        return GroupElem{j.get<std::vector<long long>>()};
    });
}

Json grading_to_json(const Grading& g) {
    Json j;
    j["group"] = group_to_json(g.group);
    Json comps = Json::array();
    for (const auto& comp : g.components) {
        Json c;
        c["degree"] = group_elem_to_json(comp.degree);
        Json basis = Json::array();
        for (std::size_t r = 0; r < comp.space.dim(); ++r)
            basis.push_back(alg_elem_to_json(AlgElem::from_coords(comp.space.basis_vector(r))));
        c["basis"] = basis;
        comps.push_back(c);
    }
    j["components"] = comps;
    return j;
}

Grading grading_from_json(const Json& j) {
    return guarded("Grading", [&] {
        Grading g;
        g.group = group_from_json(expect_field(j, "group"));
        const Json& comps = expect_field(j, "components");
        if (!comps.is_array()) throw parse_error("components must be an array");
        for (const Json& c : comps) {
            GroupElem degree = group_elem_from_json(expect_field(c, "degree"));
            const Json& basis = expect_field(c, "basis");
            if (!basis.is_array()) throw parse_error("component basis must be an array");
            std::vector<std::vector<Scalar>> rows;
            for (const Json& b : basis) rows.push_back(alg_elem_from_json(b).coord_vector());
            g.components.push_back({std::move(degree), Subspace::span(8, rows)});
        }
        return g;
    });
}

Json family_params_to_json(const FamilyParams& p) {
    Json j = Json::array();
    for (const auto& s : p.scalars) j.push_back(scalar_to_json(s));
    for (const auto& e : p.elems) j.push_back(group_elem_to_json(e));
    return j;
}

Json classification_to_json(const Classification& c) {
    Json j;
    j["family"] = family_tag(c.family);
    j["params"] = family_params_to_json(c.params);
    j["witness"] = aut_factors_to_json(c.witness);
    Json support = Json::array();
    for (const auto& d : c.support) support.push_back(group_elem_to_json(d));
    j["support"] = support;
    return j;
}

} // namespace sqc
