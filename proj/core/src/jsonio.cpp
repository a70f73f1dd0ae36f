#include "loopalg/jsonio.hpp"

namespace loopalg {

namespace {

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer())
        return Rational(j.get<long>());
    if (j.is_string())
        return rat_parse(j.get<std::string>());
    throw std::invalid_argument("rational entries must be integers or \"p/q\" strings");
}

Tensor2 tensor2_from_json(const Signature& sig, const Json& j) {
    if (!j.is_array())
        throw std::invalid_argument("tensor value must be an array of [p, q, coeff] triples");
    Tensor2 t;
    for (const Json& triple : j) {
        if (!triple.is_array() || triple.size() != 3)
            throw std::invalid_argument("tensor term must be a [p, q, coeff] triple");
        Word p = parse_path(sig, triple[0].get<std::string>());
        Word q = parse_path(sig, triple[1].get<std::string>());
        t.add({p, q}, rational_from_json(triple[2]));
    }
    return t;
}

Json tensor2_to_json(const Signature& sig, const Tensor2& t) {
    Json out = Json::array();
    for (const auto& [pq, q] : t.terms())
        out.push_back({show(sig, pq.first), show(sig, pq.second), rat_str(q)});
    return out;
}

} // namespace

Json to_json(const Signature& sig, const AlgElem& x) {
    Json out = Json::array();
    for (const auto& [w, q] : x.terms())
        out.push_back({show(sig, w), rat_str(q)});
    return out;
}

Json to_json(const Signature& sig, const Tensor2& t) { return tensor2_to_json(sig, t); }

Json to_json(const Signature& sig, const TraceTensor2& t) {
    Json out = Json::array();
    for (const auto& [uv, q] : t.terms())
        out.push_back({show(sig, uv.first), show(sig, uv.second), rat_str(q)});
    return out;
}

Json to_json(const Signature& sig, const TripleTrace& t) {
    Json left = Json::array(), right = Json::array();
    for (const auto& [xy, q] : t.left.terms())
        left.push_back({show(sig, xy.first), show(sig, xy.second), rat_str(q)});
    for (const auto& [xy, q] : t.right.terms())
        right.push_back({show(sig, xy.first), show(sig, xy.second), rat_str(q)});
    return Json{{"left", left}, {"right", right}};
}

Json to_json(const Signature& sig, const OneForm& omega) {
    Json out = Json::object();
    for (const auto& [c, t] : omega.coeffs)
        out[sig.gen_name(c)] = tensor2_to_json(sig, t);
    return out;
}

DoubleDerivation theta_table_from_json(const Signature& sig, const Json& j) {
    if (!j.is_object())
        throw std::invalid_argument("theta table must be an object keyed by generator names");
    DoubleDerivation theta;
    for (const auto& [key, value] : j.items()) {
        Word gen = parse_path(sig, key);
        if (gen.size() != 1 || gen.letter(0).exp != 1)
            throw std::invalid_argument("theta table key '" + key + "' is not a generator");
        int id = gen.letter(0).gen;
        const Generator& g = sig.gen(id);
        Tensor2 t = tensor2_from_json(sig, value);
        for (const auto& [pq, q] : t.terms()) {
            (void)q;
            if (pq.first.source() != g.source || pq.second.target() != g.target)
                throw std::invalid_argument(
                    "theta value at '" + key + "' is ill-typed: need source(p) = " +
                    std::to_string(g.source) + " and target(q) = " + std::to_string(g.target));
        }
        if (!t.is_zero())
            theta.gen_values.emplace(id, std::move(t));
    }
    return theta;
}

Json theta_table_to_json(const Signature& sig, const DoubleDerivation& theta) {
    Json out = Json::object();
    for (const auto& [id, t] : theta.gen_values)
        out[sig.gen_name(id)] = tensor2_to_json(sig, t);
    return out;
}

PairingMatrix pairing_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("entries"))
        throw std::invalid_argument("pairing matrix needs {\"dim\": m, \"entries\": [[...]]}");
    int dim = j.at("dim").get<int>();
    PairingMatrix p = PairingMatrix::zero(dim);
    const Json& rows = j.at("entries");
    if (!rows.is_array() || int(rows.size()) != dim)
        throw std::invalid_argument("pairing matrix entries must be a dim x dim array");
    for (int i = 0; i < dim; ++i) {
        const Json& row = rows[std::size_t(i)];
        if (!row.is_array() || int(row.size()) != dim)
            throw std::invalid_argument("pairing matrix entries must be a dim x dim array");
        for (int k = 0; k < dim; ++k)
            p.set(i + 1, k + 1, rational_from_json(row[std::size_t(k)]));
    }
    return p;
}

Json pairing_to_json(const PairingMatrix& p) {
    Json rows = Json::array();
    for (int i = 1; i <= p.dim; ++i) {
        Json row = Json::array();
        for (int j = 1; j <= p.dim; ++j)
            row.push_back(rat_str(p.at(i, j)));
        rows.push_back(row);
    }
    return Json{{"dim", p.dim}, {"entries", rows}};
}

DoubleBracket bracket_table_from_json(const Signature& sig, const Json& j) {
    if (!j.is_object())
        throw std::invalid_argument("bracket table must be an object keyed by 'c1,c2'");
    DoubleBracket::Table table;
    for (const auto& [key, value] : j.items()) {
        auto comma = key.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("bracket table key '" + key + "' is not 'c1,c2'");
        Word g1 = parse_path(sig, key.substr(0, comma));
        Word g2 = parse_path(sig, key.substr(comma + 1));
        if (g1.size() != 1 || g2.size() != 1)
            throw std::invalid_argument("bracket table key '" + key + "' is not a generator pair");
        Tensor2 t = tensor2_from_json(sig, value);
        if (!t.is_zero())
            table.emplace(std::make_pair(int(g1.letter(0).gen), int(g2.letter(0).gen)),
                          std::move(t));
    }
    return DoubleBracket(std::move(table));
}

Json bracket_table_to_json(const Signature& sig, const DoubleBracket& pi) {
    Json out = Json::object();
    for (const auto& [cc, t] : pi.table())
        out[sig.gen_name(cc.first) + "," + sig.gen_name(cc.second)] = tensor2_to_json(sig, t);
    return out;
}

} // namespace loopalg
