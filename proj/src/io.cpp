#include "bott/io.hpp"

#include "bott/error.hpp"

namespace bott {

namespace {

Rat rat_from_json(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rat(j.get<long>());
    if (j.is_number()) return parse_rational(j.dump());
    throw Error(ErrorCode::InvalidArgument, "expected a rational");
}

Int int_from_json(const Json& j) {
    if (j.is_string()) return Int(j.get<std::string>(), 10);
    if (j.is_number_integer()) return Int(j.get<long>());
    throw Error(ErrorCode::InvalidArgument, "expected an integer");
}

}  // namespace

Json int_json(const Int& z) {
    if (z.fits_slong_p()) return Json(z.get_si());
    return Json(z.get_str());
}

Json to_json(const BottMatrix& A) {
    Json j;
    j["n"] = A.n();
    j["rows"] = A.rows();
    return j;
}

BottMatrix matrix_from_json(const Json& j) {
    try {
        if (j.is_object() && j.contains("stage3")) {
            auto v = j["stage3"].get<std::vector<std::int64_t>>();
            if (v.size() != 3) throw Error(ErrorCode::InvalidArgument, "stage3 needs three entries");
            return BottMatrix::stage3(v[0], v[1], v[2]);
        }
        const Json& rows = j.is_object() ? j.at("rows") : j;
        auto m = BottMatrix::from_rows(rows.get<std::vector<std::vector<std::int64_t>>>());
        if (j.is_object() && j.contains("n") && j["n"].get<int>() != m.n())
            throw Error(ErrorCode::InvalidArgument, "n does not match the rows");
        return m;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::InvalidArgument, std::string("matrix: ") + e.what());
    }
}

Json to_json(const CohomologyClass& c) {
    Json j;
    j["n"] = c.n();
    Json terms = Json::array();
    for (std::uint32_t S = 0; S < c.size(); ++S) {
        if (c[S] == 0) continue;
        std::vector<int> mono;
        for (int k = 0; k < c.n(); ++k)
            if (S >> k & 1u) mono.push_back(k + 1);
        terms.push_back({{"monomial", mono}, {"coeff", c[S].get_str()}});
    }
    j["terms"] = terms;
    return j;
}

CohomologyClass class_from_json(const Json& j) {
    try {
        CohomologyClass c(j.at("n").get<int>());
        for (const auto& t : j.at("terms")) {
            std::uint32_t S = 0;
            for (int k : t.at("monomial").get<std::vector<int>>()) {
                if (k < 1 || k > c.n()) throw Error(ErrorCode::InvalidArgument, "monomial index out of range");
                S |= 1u << (k - 1);
            }
            c[S] += int_from_json(t.at("coeff"));
        }
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::InvalidArgument, std::string("class: ") + e.what());
    }
}

Json to_json(const Mod2Class& w) {
    Json j;
    j["n"] = w.n;
    Json terms = Json::array();
    for (std::uint32_t S = 0; S < w.bits.size(); ++S) {
        if (!w.bits[S]) continue;
        std::vector<int> mono;
        for (int k = 0; k < w.n; ++k)
            if (S >> k & 1u) mono.push_back(k + 1);
        terms.push_back(mono);
    }
    j["terms_mod2"] = terms;
    return j;
}

Json to_json(const Inequality& q) {
    Json coeffs = Json::array();
    for (const auto& c : q.coeffs) coeffs.push_back(to_string(c));
    return {{"coeffs", coeffs}, {"rhs", to_string(q.rhs)}, {"strict", q.strict}};
}

Inequality inequality_from_json(const Json& j) {
    Inequality q;
    for (const auto& c : j.at("coeffs")) q.coeffs.push_back(rat_from_json(c));
    q.rhs = rat_from_json(j.at("rhs"));
    q.strict = j.at("strict").get<bool>();
    return q;
}

Json to_json(const Poly& p) {
    Json a = Json::array();
    for (const auto& c : p.coeffs()) a.push_back(to_string(c));
    return a;
}

Poly poly_from_json(const Json& j) {
    std::vector<Rat> c;
    for (const auto& v : j) c.push_back(rat_from_json(v));
    return Poly(std::move(c));
}

Json to_json(const AdmissibleData& d) {
    Json comps = Json::array();
    for (const auto& c : d.components) comps.push_back({{"d", c.d}, {"s", to_string(c.s)}, {"r", to_string(c.r)}});
    return {{"components", comps}};
}

AdmissibleData admissible_from_json(const Json& j) {
    try {
        AdmissibleData d;
        for (const auto& c : j.at("components"))
            d.components.push_back({c.at("d").get<int>(), rat_from_json(c.at("s")), rat_from_json(c.at("r"))});
        d.validate();
        return d;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::InvalidArgument, std::string("admissible data: ") + e.what());
    }
}

}  // namespace bott
