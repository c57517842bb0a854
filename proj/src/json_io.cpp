#include "wlp/json_io.hpp"

#include <cmath>

#include "wlp/error.hpp"

namespace wlp {

json number(double v) {
    if (std::isfinite(v)) return v;
    if (std::isnan(v)) return "nan";
    return v > 0 ? "inf" : "-inf";
}

GroupPtr builtin_group(const std::string& name) {
    if (name == "S3") return std::make_shared<const FiniteGroup>(FiniteGroup::symmetric3());
    if (name.size() > 2 && name.rfind("Z_", 0) == 0) {
        std::size_t used = 0;
        int n = 0;
        try {
            n = std::stoi(name.substr(2), &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == name.size() - 2 && n >= 1 && n <= 12)
            return std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(static_cast<std::size_t>(n)));
    }
    throw ParameterError("unknown built-in group '" + name + "' (expected Z_1..Z_12 or S3)");
}

GroupPtr group_from_json(const json& j) {
    try {
        if (j.is_string()) return builtin_group(j.get<std::string>());
        if (j.contains("builtin")) return builtin_group(j.at("builtin").get<std::string>());
        const auto order = j.at("order").get<std::size_t>();
        std::vector<Element> table;
        for (const auto& row : j.at("table")) {
            if (row.size() != order) throw ParameterError("Cayley table row has the wrong length");
            for (const auto& v : row) table.push_back(v.get<Element>());
        }
        return std::make_shared<const FiniteGroup>(order, std::move(table), j.value("name", std::string{}));
    } catch (const json::exception& e) {
        throw ParameterError(std::string("malformed group descriptor: ") + e.what());
    }
}

json group_to_json(const FiniteGroup& G) {
    json rows = json::array();
    for (Element x = 0; x < G.order(); ++x) {
        json row = json::array();
        for (Element y = 0; y < G.order(); ++y) row.push_back(G.mul(x, y));
        rows.push_back(std::move(row));
    }
    return {{"name", G.name()}, {"order", G.order()}, {"table", std::move(rows)}};
}

Weight weight_from_json(const json& j) {
    try {
        const auto family = weight_family_from_string(j.at("family").get<std::string>());
        const json params = j.value("params", json::object());
        GroupPtr group;
        if (j.contains("domain") && j.at("domain").is_object()) group = group_from_json(j.at("domain").at("group"));
        else if (j.contains("domain") && j.at("domain") != "Z")
            throw ParameterError("weight domain must be \"Z\" or {\"group\": ...}");

        switch (family) {
        case WeightFamily::Constant:
            return Weight::constant(group);
        case WeightFamily::Tabulated: {
            auto values = params.at("values").get<std::vector<double>>();
            if (group) return Weight::tabulated(group, std::move(values));
            return Weight::tabulated(params.at("lo").get<std::int64_t>(), std::move(values));
        }
        default:
            break;
        }
        if (group) throw ParameterError("only constant and tabulated weights live on finite groups");
        switch (family) {
        case WeightFamily::Polynomial: return Weight::polynomial(params.at("a").get<double>());
        case WeightFamily::SubExp: return Weight::subexp(params.at("gamma").get<double>());
        case WeightFamily::ExpPoly: return Weight::exppoly(params.at("a").get<double>());
        default: break;
        }
        throw ParameterError("unsupported weight family");
    } catch (const json::exception& e) {
        throw ParameterError(std::string("malformed weight descriptor: ") + e.what());
    }
}

json weight_to_json(const Weight& w) {
    json j;
    j["family"] = to_string(w.family());
    json params = json::object();
    switch (w.family()) {
    case WeightFamily::Polynomial:
    case WeightFamily::ExpPoly: params["a"] = w.parameter(); break;
    case WeightFamily::SubExp: params["gamma"] = w.parameter(); break;
    case WeightFamily::Tabulated:
        if (w.on_integers()) params["lo"] = w.table_lo();
        params["values"] = std::vector<double>(w.table().begin(), w.table().end());
        break;
    case WeightFamily::Constant: break;
    }
    j["params"] = std::move(params);
    if (w.on_integers()) j["domain"] = "Z";
    else j["domain"] = {{"group", group_to_json(*w.group())}};
    return j;
}

TruncSeq truncseq_from_json(const json& j) {
    try {
        std::vector<cplx> values;
        for (const auto& v : j.at("values")) {
            if (v.is_number()) values.emplace_back(v.get<double>(), 0.0);
            else if (v.is_array() && v.size() == 2) values.emplace_back(v[0].get<double>(), v[1].get<double>());
            else throw ParameterError("sequence values must be numbers or [re, im] pairs");
        }
        return TruncSeq(j.at("lo").get<std::int64_t>(), std::move(values));
    } catch (const json::exception& e) {
        throw ParameterError(std::string("malformed sequence descriptor: ") + e.what());
    }
}

json truncseq_to_json(const TruncSeq& f) {
    json values = json::array();
    for (const auto& v : f.values()) values.push_back({v.real(), v.imag()});
    return {{"lo", f.is_zero() ? 0 : f.lo()}, {"values", std::move(values)}};
}

json to_json(const SubmultiplicativityReport& r) {
    return {{"max_excess", number(r.max_excess)}, {"x", r.x}, {"y", r.y},
            {"submultiplicative", r.submultiplicative}, {"exact", r.exact},
            {"max_ratio", number(r.max_ratio)}};
}

json to_json(const AlgebraConstant& c) {
    return {{"constant", number(c.constant)}, {"argmax", c.argmax}, {"q", number(c.q)},
            {"tail_bound", number(c.tail_bound)}, {"certified_window", c.certified_window},
            {"norm_bound", number(c.norm_bound())}};
}

json to_json(const BlowupRow& row) {
    return {{"n", row.n}, {"ratio", number(row.ratio)}, {"model_value", number(row.model_value)},
            {"k_n", row.k_n}, {"coeff_at_k_n", number(row.coeff_at_k_n)},
            {"single_coeff_ratio", number(row.single_coeff_ratio)}, {"scaled_coeff", number(row.scaled_coeff)}};
}

json to_json(const DistortionReport& rep) {
    return {{"r", rep.r}, {"N", rep.N}, {"norm_fwd", number(rep.norm_fwd)}, {"norm_inv", number(rep.norm_inv)},
            {"distortion", number(rep.distortion)}, {"k_bound_fwd", number(rep.k_bound_fwd)},
            {"k_bound_inv", number(rep.k_bound_inv)}, {"lambda_param", rep.lambda_param},
            {"within_k_bound", rep.within_k_bound}, {"column1_support", rep.column1_support}};
}

json to_json(const ChainRuleReport& rep) {
    return {{"residual_l1", number(rep.residual_l1)}, {"lhs_l1", number(rep.lhs_l1)}, {"tol", rep.tol}};
}

json to_json(const AutomorphismCensus& census) {
    json j = {{"n", census.n},
              {"total", census.total},
              {"standard_count", census.standard_count},
              {"max_homomorphism_defect", number(census.max_homomorphism_defect)},
              {"max_isometry_defect", number(census.max_isometry_defect)}};
    if (census.nonstandard_example) {
        j["nonstandard_example"] = *census.nonstandard_example;
        json rows = json::array();
        const auto& M = census.nonstandard_matrix;
        for (Eigen::Index i = 0; i < M.rows(); ++i) {
            json row = json::array();
            for (Eigen::Index k = 0; k < M.cols(); ++k) row.push_back({M(i, k).real(), M(i, k).imag()});
            rows.push_back(std::move(row));
        }
        j["nonstandard_matrix"] = std::move(rows);
    } else {
        j["nonstandard_example"] = nullptr;
    }
    return j;
}

json to_json(const KaltonWoodReport& rep) {
    return {{"n", rep.n},
            {"total", rep.total},
            {"threshold", rep.threshold},
            {"min_nonstandard_norm", rep.min_nonstandard_norm ? number(*rep.min_nonstandard_norm) : json(nullptr)},
            {"max_standard_norm", number(rep.max_standard_norm)},
            {"all_below_threshold_standard", rep.all_below_threshold_standard}};
}

} // namespace wlp
