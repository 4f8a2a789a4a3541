#include "hypell/jsonio.hpp"

namespace hypell {

std::string real_str(const Real& x) { return real_to_string(x); }

Json cplx_to_json(const Cplx& z) { return Json::array({real_str(z.re), real_str(z.im)}); }

Cplx cplx_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2) throw BadInputError("expected [re, im] pair");
    return Cplx(parse_real(j[0].get<std::string>()), parse_real(j[1].get<std::string>()));
}

Json cmat_to_json(const CMat& m) {
    Json re = Json::array(), im = Json::array();
    for (int i = 0; i < m.n; ++i) {
        Json rrow = Json::array(), irow = Json::array();
        for (int j = 0; j < m.n; ++j) {
            rrow.push_back(real_str(m(i, j).re));
            irow.push_back(real_str(m(i, j).im));
        }
        re.push_back(rrow);
        im.push_back(irow);
    }
    return Json{{"g", m.n}, {"re", re}, {"im", im}};
}

CMat cmat_from_json(const Json& j) {
    if (!j.contains("re") || !j.contains("im")) throw BadInputError("matrix document needs re and im");
    const Json& re = j["re"];
    const Json& im = j["im"];
    int n = static_cast<int>(re.size());
    if (n < 1 || im.size() != re.size()) throw BadInputError("matrix document shape mismatch");
    CMat m(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(re[static_cast<size_t>(i)].size()) != n ||
            static_cast<int>(im[static_cast<size_t>(i)].size()) != n)
            throw BadInputError("matrix document shape mismatch");
        for (int k = 0; k < n; ++k)
            m(i, k) = Cplx(parse_real(re[static_cast<size_t>(i)][static_cast<size_t>(k)].get<std::string>()),
                           parse_real(im[static_cast<size_t>(i)][static_cast<size_t>(k)].get<std::string>()));
    }
    return m;
}

CurveDocument curve_from_json(const Json& j) {
    if (!j.contains("genus") || !j.contains("roots")) throw BadInputError("curve document needs genus and roots");
    int g = j["genus"].get<int>();
    bool inf = j.value("has_infinity", false);
    std::vector<PValue> pts;
    for (const Json& r : j["roots"]) pts.emplace_back(cplx_from_json(r));
    if (inf) pts.push_back(PValue::infinity());

    CurveDocument doc;
    doc.branch = BranchSet(g, std::move(pts));
    if (j.contains("rational_roots")) {
        std::vector<Rat> rs;
        for (const Json& r : j["rational_roots"]) rs.push_back(parse_rat(r.get<std::string>()));
        doc.rational = RationalBranchSet(g, std::move(rs), inf);
    } else {
        // recover exactness when every root is written as a plain decimal
        bool ok = true;
        std::vector<Rat> rs;
        for (const Json& r : j["roots"]) {
            try {
                if (parse_rat(r[1].get<std::string>()) != 0) {
                    ok = false;
                    break;
                }
                rs.push_back(parse_rat(r[0].get<std::string>()));
            } catch (const BadInputError&) {
                ok = false;
                break;
            }
        }
        if (ok) doc.rational = RationalBranchSet(g, std::move(rs), inf);
    }
    return doc;
}

Json curve_to_json(const CurveDocument& c) {
    Json roots = Json::array();
    for (const PValue& p : c.branch.points)
        if (!p.is_inf()) roots.push_back(cplx_to_json(p.z));
    Json out{{"genus", c.branch.g}, {"roots", roots}, {"has_infinity", c.branch.has_infinity()}};
    if (c.rational) {
        Json rs = Json::array();
        for (const Rat& r : c.rational->finite) rs.push_back(rat_to_string(r));
        out["rational_roots"] = rs;
    }
    return out;
}

Json char_to_json(const Char& m) {
    Json mp = Json::array(), md = Json::array();
    for (int k = 0; k < m.g; ++k) {
        mp.push_back(m.mp_bit(k) ? 1 : 0);
        md.push_back(m.md_bit(k) ? 1 : 0);
    }
    return Json{{"m_prime_halves", mp}, {"m_double_halves", md}};
}

Json period_data_to_json(const PeriodData& P, const CharacteristicDictionary& D) {
    Json branch = Json::array();
    for (const Real& b : P.sorted_branch) branch.push_back(real_str(b));
    Json dict = Json::array();
    if (P.g == 2) {
        for (int i = 0; i < 6; ++i)
            dict.push_back(Json{{"label", i + 1}, {"characteristic", char_to_json(D.odd_image_g2(i))}});
    } else if (P.g == 3) {
        for (int i = 0; i < 8; ++i)
            for (int j = i + 1; j < 8; ++j)
                dict.push_back(Json{{"labels", Json::array({i + 1, j + 1})},
                                    {"characteristic", char_to_json(D.odd_image_g3(i, j))}});
    }
    return Json{{"g", P.g},
                {"sorted_branch_points", branch},
                {"has_infinity", P.with_infinity},
                {"Omega1", cmat_to_json(P.Omega1)},
                {"Omega2", cmat_to_json(P.Omega2)},
                {"Z", cmat_to_json(P.Z.Z)},
                {"dictionary", dict},
                {"shift", char_to_json(D.delta)}};
}

RiemannMatrix riemann_from_json(const Json& j, int expected_genus) {
    const Json& src = j.contains("Z") ? j["Z"] : j;
    CMat m = cmat_from_json(src);
    if (expected_genus > 0 && m.n != expected_genus)
        throw BadInputError("matrix size does not match the requested genus");
    return RiemannMatrix(m.n, m, pow(Real(10), -static_cast<int>(working_digits()) / 2));
}

Json model_to_json(const SymmetricModel& m) {
    Json coeffs = Json::array();
    for (const Cplx& c : m.coefficients) coeffs.push_back(cplx_to_json(c));
    Json roots = Json::array();
    roots.push_back(cplx_to_json(Cplx(Real(0))));
    for (const Cplx& r : m.roots) roots.push_back(cplx_to_json(r));
    return Json{{"genus", m.g},
                {"coefficients", coeffs},
                {"linear_sign", m.linear_sign},
                {"roots", roots}};
}

Json report_to_json(const IdentityReport& r) {
    Json out{{"identity", r.identity},
             {"params", r.params},
             {"lhs", cplx_to_json(r.lhs)},
             {"rhs", cplx_to_json(r.rhs)},
             {"residual", real_str(r.residual)},
             {"tolerance", real_str(r.tolerance)},
             {"passed", r.passed}};
    if (r.aux_residual) out["aux_residual"] = real_str(*r.aux_residual);
    return out;
}

Json reports_to_json(const std::vector<IdentityReport>& rs) {
    Json arr = Json::array();
    for (const IdentityReport& r : rs) arr.push_back(report_to_json(r));
    return arr;
}

}  // namespace hypell
