#include "hwz/serialize.hpp"

namespace hwz {

using nlohmann::json;

json to_json(const BigRat& q) { return q.get_str(); }

json to_json(const IntPartition& mu) { return mu.parts(); }

json to_json(const RatFunc& f) {
    json num = json::array(), den = json::array();
    for (const auto& c : f.num().coeffs()) num.push_back(to_json(c));
    for (const auto& c : f.den().coeffs()) den.push_back(to_json(c));
    return {{"num", num}, {"den", den}, {"var", std::string(1, f.var())}};
}

json to_json(const CumulantSeries& s) {
    json coeffs = json::array();
    for (const auto& a : s.coeffs) coeffs.push_back(to_json(a));
    return {{"gmax", s.gmax}, {"coeffs", coeffs}, {"exact", s.exact}};
}

json to_json(const IdentityReport& r) {
    json witnesses = json::array();
    for (const auto& w : r.witnesses)
        witnesses.push_back({{"input", w.input}, {"expected", w.expected}, {"actual", w.actual}});
    return {{"name", r.name},           {"parameters", r.parameters}, {"status", to_string(r.status)},
            {"checked", r.checked},     {"witnesses", witnesses},     {"notes", r.notes}};
}

json to_json(const Limits& lim) {
    return {{"max_n_dfs", lim.max_n_dfs}, {"max_n_groupalgebra", lim.max_n_groupalgebra}, {"max_bell", lim.max_bell}};
}

BigRat rational_from_json(const json& j) {
    if (j.is_number_integer()) return BigRat(j.get<long>());
    return parse_rational(j.get<std::string>());
}

IntPartition partition_from_json(const json& j) { return IntPartition(j.get<std::vector<int>>()); }

RatFunc ratfunc_from_json(const json& j) {
    auto poly = [](const json& cs) {
        std::vector<BigRat> v;
        for (const auto& c : cs) v.push_back(rational_from_json(c));
        return Poly(std::move(v));
    };
    const std::string var = j.at("var").get<std::string>();
    if (var.size() != 1) throw std::invalid_argument("variable name must be one character");
    return RatFunc(poly(j.at("num")), poly(j.at("den")), var[0]);
}

CumulantSeries series_from_json(const json& j) {
    CumulantSeries s;
    s.gmax = j.at("gmax").get<int>();
    s.exact = j.at("exact").get<bool>();
    for (const auto& a : j.at("coeffs")) s.coeffs.push_back(ratfunc_from_json(a));
    return s;
}

}  // namespace hwz
