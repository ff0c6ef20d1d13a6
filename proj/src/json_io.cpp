#include "fpf/json_io.hpp"

namespace fpf {

using nlohmann::json;

namespace {

json scalar_to_json(const Scalar& v) {
    if (v.fits_slong_p()) return json(v.get_si());
    return json(v.get_str());
}

Scalar scalar_from_json(const json& j) {
    if (j.is_number_integer()) return Scalar(static_cast<long>(j.get<long long>()));
    if (j.is_string()) {
        try {
            return Scalar(j.get<std::string>());
        } catch (const std::invalid_argument&) {
            throw SchemaError("not an integer literal: " + j.dump());
        }
    }
    throw SchemaError("expected an integer, got " + j.dump());
}

Mat cols_from_json(const json& j, const RingSpec& ring, int rows,
                   const char* what) {
    if (!j.is_array()) throw SchemaError(std::string(what) + ": expected array");
    Mat m(ring, rows, static_cast<int>(j.size()));
    int c = 0;
    for (const auto& col : j) {
        if (!col.is_array() || static_cast<int>(col.size()) != rows)
            throw SchemaError(std::string(what) + ": column of wrong length");
        for (int i = 0; i < rows; ++i) m.set(i, c, scalar_from_json(col[i]));
        ++c;
    }
    return m;
}

json cols_to_json(const Mat& m) {
    json cols = json::array();
    for (int j = 0; j < m.cols(); ++j) {
        json col = json::array();
        for (int i = 0; i < m.rows(); ++i) col.push_back(scalar_to_json(m.at(i, j)));
        cols.push_back(col);
    }
    return cols;
}

}  // namespace

json ring_to_json(const RingSpec& ring) {
    json j;
    switch (ring.kind) {
        case RingKind::integers: j["kind"] = "Z"; break;
        case RingKind::integers_mod:
            j["kind"] = "Zmod";
            j["n"] = scalar_to_json(ring.modulus);
            break;
        case RingKind::prime_field:
            j["kind"] = "GFp";
            j["p"] = scalar_to_json(ring.modulus);
            break;
    }
    if (ring.side == Side::right) j["side"] = "R";
    return j;
}

RingSpec ring_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw SchemaError("ring: expected {\"kind\":...}");
    std::string kind = j["kind"].get<std::string>();
    Side side = Side::left;
    if (j.contains("side")) {
        std::string s = j["side"].get<std::string>();
        if (s == "R")
            side = Side::right;
        else if (s != "L")
            throw SchemaError("ring: side must be \"L\" or \"R\"");
    }
    try {
        if (kind == "Z") return ring_z(side);
        if (kind == "Zmod") {
            if (!j.contains("n")) throw SchemaError("ring: Zmod needs n");
            return ring_zmod(scalar_from_json(j["n"]), side);
        }
        if (kind == "GFp") {
            if (!j.contains("p")) throw SchemaError("ring: GFp needs p");
            return ring_gfp(scalar_from_json(j["p"]), side);
        }
    } catch (const std::invalid_argument& e) {
        throw SchemaError(std::string("ring: ") + e.what());
    }
    throw SchemaError("ring: unknown kind " + kind);
}

RingSpec ring_from_string(const std::string& s) {
    if (!s.empty() && s.front() == '{') {
        json j = json::parse(s, nullptr, false);
        if (j.is_discarded()) throw SchemaError("ring: malformed JSON");
        return ring_from_json(j);
    }
    if (s == "Z") return ring_z();
    auto colon = s.find(':');
    if (colon != std::string::npos) {
        std::string head = s.substr(0, colon);
        std::string num = s.substr(colon + 1);
        try {
            if (head == "Zmod") return ring_zmod(Scalar(num));
            if (head == "GFp") return ring_gfp(Scalar(num));
        } catch (const std::invalid_argument& e) {
            throw SchemaError(std::string("ring: ") + e.what());
        }
    }
    throw SchemaError("ring: expected Z, Zmod:<n>, GFp:<p> or JSON, got " + s);
}

json module_to_json(const FpModule& m) {
    json j;
    j["gens"] = m.gens;
    j["rel"] = cols_to_json(m.rel);
    return j;
}

FpModule module_from_json(const json& j, const RingSpec& ring) {
    if (!j.is_object() || !j.contains("gens") || !j.contains("rel"))
        throw SchemaError("module: expected {\"gens\":g,\"rel\":[[...]]}");
    if (!j["gens"].is_number_integer() || j["gens"].get<long long>() < 0)
        throw SchemaError("module: gens must be a non-negative integer");
    int gens = j["gens"].get<int>();
    return FpModule{ring, gens, cols_from_json(j["rel"], ring, gens, "module.rel")};
}

json functor_to_json(const FpFunctor& f) {
    json j;
    switch (f.tag.kind) {
        case ProvenanceKind::representable:
            j["rep"] = module_to_json(*f.tag.of);
            return j;
        case ProvenanceKind::tensor:
            j["tensor"] = module_to_json(*f.tag.of);
            return j;
        case ProvenanceKind::ext1:
            j["ext1"] = module_to_json(*f.tag.of);
            return j;
        case ProvenanceKind::derived: break;
    }
    json arrow;
    arrow["X"] = module_to_json(f.x());
    arrow["Y"] = module_to_json(f.y());
    arrow["phi"] = cols_to_json(f.arrow.phi);
    j["arrow"] = arrow;
    if (f.known_half_exact) j["half_exact"] = true;
    return j;
}

FpFunctor functor_from_json(const json& j, const RingSpec& ring) {
    if (!j.is_object()) throw SchemaError("functor: expected an object");
    if (j.contains("rep")) return rep_functor(module_from_json(j["rep"], ring));
    if (j.contains("tensor"))
        return tensor_functor(module_from_json(j["tensor"], ring));
    if (j.contains("ext1"))
        return ext1_functor(module_from_json(j["ext1"], ring));
    if (j.contains("arrow")) {
        const json& a = j["arrow"];
        if (!a.contains("X") || !a.contains("Y") || !a.contains("phi"))
            throw SchemaError("functor.arrow: expected X, Y, phi");
        FpModule x = module_from_json(a["X"], ring);
        FpModule y = module_from_json(a["Y"], ring);
        Mat phi = cols_from_json(a["phi"], ring, y.gens, "functor.arrow.phi");
        if (phi.cols() != x.gens)
            throw SchemaError("functor.arrow.phi: expected one column per X generator");
        auto arrow = validate_morphism(x, y, phi);
        if (!arrow)
            throw SchemaError("functor.arrow.phi: not a well defined morphism");
        FpFunctor f = functor_of_arrow(*arrow);
        if (j.contains("half_exact") && j["half_exact"].is_boolean())
            f.known_half_exact = j["half_exact"].get<bool>();
        return f;
    }
    throw SchemaError("functor: expected rep/tensor/ext1/arrow");
}

json invariants_to_json(const InvariantFactors& inv) {
    json j = json::array();
    for (const auto& d : inv.factors) j.push_back(scalar_to_json(d));
    return j;
}

}  // namespace fpf
