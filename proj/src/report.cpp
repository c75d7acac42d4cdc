#include "sqdet/report.hpp"

namespace sqdet {

Json poly_json(const IntPoly& p) {
    Json out = Json::array();
    for (const auto& c : p.coeffs()) out.push_back(c.get_str());
    return out;
}

Json constant_matrix_json(const PolyMatrix& m) {
    Json out = Json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.size(); ++j) row.push_back(m(i, j).coeff(0).get_str());
        out.push_back(std::move(row));
    }
    return out;
}

Json poly_matrix_json(const PolyMatrix& m) {
    Json out = Json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.size(); ++j) row.push_back(poly_json(m(i, j)));
        out.push_back(std::move(row));
    }
    return out;
}

Json factors_json(const std::vector<RhsFactor>& factors) {
    Json out = Json::array();
    for (const auto& f : factors) {
        Json fj;
        fj["flat"] = f.labels;
        fj["base"] = f.base;
        fj["beta"] = f.beta.get_str();
        fj["mu_plus"] = f.mu_plus.get_str();
        if (f.exponent.fits_slong_p())
            fj["exponent"] = f.exponent.get_si();
        else
            fj["exponent"] = f.exponent.get_str();
        out.push_back(std::move(fj));
    }
    return out;
}

Json verdict_json(const Verification& v) {
    Json out;
    out["n_topes"] = v.S.topes.size();
    out["det_S"] = v.theorem.lhs.coeff(0).get_str();
    out["rhs_S"] = v.theorem.rhs.coeff(0).get_str();
    out["det_Sq"] = poly_json(v.conjecture.lhs);
    out["rhs_Sq"] = poly_json(v.conjecture.rhs);
    out["factors"] = factors_json(v.conjecture.rhs_factors);
    out["theorem_match"] = v.theorem.match;
    out["conjecture_match"] = v.conjecture.match;
    return out;
}

} // namespace sqdet
