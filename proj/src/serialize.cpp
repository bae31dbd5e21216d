#include "orbint/serialize.hpp"

namespace orbint {

namespace {

json vec_to_json(const std::vector<Rational>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(rational_to_string(x));
    return a;
}

std::vector<Rational> vec_from_json(const json& j) {
    std::vector<Rational> v;
    for (const auto& x : j) v.push_back(rational_from_json(x));
    return v;
}

json ext_to_json(const QuadExt& z) { return json{{"a", rational_to_string(z.re())}, {"b", rational_to_string(z.im())}}; }

QuadExt ext_from_json(const json& j, long epsilon) {
    if (!j.is_object()) return QuadExt(rational_from_json(j));
    Rational a = rational_from_json(j.at("a"));
    Rational b = j.contains("b") ? rational_from_json(j.at("b")) : Rational(0);
    return b == 0 ? QuadExt(a) : QuadExt(a, b, epsilon);
}

}  // namespace

std::string rational_to_string(const Rational& x) { return x.get_num().get_str() + "/" + x.get_den().get_str(); }

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) throw std::invalid_argument("expected a rational as \"num/den\"");
    Rational r;
    if (r.set_str(j.get<std::string>(), 10) != 0)
        throw std::invalid_argument("malformed rational: " + j.get<std::string>());
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + j.get<std::string>());
    r.canonicalize();
    return r;
}

json to_json_value(const QMat& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rational_to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json to_json_value(const FMat& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(ext_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

QMat qmat_from_json(const json& j) {
    const std::size_t r = j.size();
    const std::size_t c = r ? j.at(0).size() : 0;
    QMat m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (j.at(i).size() != c) throw std::invalid_argument("ragged matrix");
        for (std::size_t k = 0; k < c; ++k) m(i, k) = rational_from_json(j.at(i).at(k));
    }
    return m;
}

FMat fmat_from_json(const json& j, long epsilon) {
    const std::size_t r = j.size();
    const std::size_t c = r ? j.at(0).size() : 0;
    FMat m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (j.at(i).size() != c) throw std::invalid_argument("ragged matrix");
        for (std::size_t k = 0; k < c; ++k) m(i, k) = ext_from_json(j.at(i).at(k), epsilon);
    }
    return m;
}

json to_json_value(const GLOrbitDatum& x) {
    std::vector<Rational> u1, u2;
    for (std::size_t i = 0; i < x.n(); ++i) {
        u1.push_back(x.u1(i, 0));
        u2.push_back(x.u2(0, i));
    }
    return json{{"n", x.n()}, {"gamma", to_json_value(x.gamma)}, {"u1", vec_to_json(u1)}, {"u2", vec_to_json(u2)}};
}

json to_json_value(const UOrbitDatum& y, long epsilon) {
    json u = json::array();
    for (std::size_t i = 0; i < y.n(); ++i) u.push_back(ext_to_json(y.u(i, 0)));
    return json{{"n", y.n()},
                {"epsilon", epsilon},
                {"J", to_json_value(y.J)},
                {"alpha", to_json_value(y.alpha)},
                {"u", std::move(u)}};
}

json to_json_value(const OrbitInvariants& inv) {
    return json{{"charpoly", vec_to_json(inv.charpoly)}, {"moments", vec_to_json(inv.moments)}};
}

json to_json_value(const LaurentPoly& f) {
    json o = json::object();
    for (const auto& [d, c] : f.coefficients()) o[std::to_string(d)] = c;
    return o;
}

json to_json_value(const OrbResult& r) {
    return json{{"poly", to_json_value(r.poly)},
                {"value_at_0", r.value_at_0},
                {"derivative_normalized", r.derivative_normalized},
                {"lattice_count", r.lattice_count},
                {"omega", r.omega}};
}

GLOrbitDatum gl_datum_from_json(const json& j) {
    QMat gamma = qmat_from_json(j.at("gamma"));
    auto u1 = vec_from_json(j.at("u1"));
    auto u2 = vec_from_json(j.at("u2"));
    GLOrbitDatum x{gamma, QMat::column(u1), QMat::row(u2)};
    if (j.contains("n") && j.at("n").get<std::size_t>() != x.n())
        throw std::invalid_argument("GL datum: n does not match gamma");
    validate(x);
    return x;
}

UOrbitDatum u_datum_from_json(const json& j, long default_epsilon) {
    const long eps = j.contains("epsilon") ? j.at("epsilon").get<long>() : default_epsilon;
    UOrbitDatum y;
    y.J = fmat_from_json(j.at("J"), eps);
    y.alpha = fmat_from_json(j.at("alpha"), eps);
    const auto& u = j.at("u");
    y.u = FMat(u.size(), 1);
    for (std::size_t i = 0; i < u.size(); ++i) y.u(i, 0) = ext_from_json(u.at(i), eps);
    if (j.contains("n") && j.at("n").get<std::size_t>() != y.n())
        throw std::invalid_argument("U datum: n does not match J");
    validate(y);
    return y;
}

OrbitInvariants invariants_from_json(const json& j) {
    return OrbitInvariants{vec_from_json(j.at("charpoly")), vec_from_json(j.at("moments"))};
}

LaurentPoly laurent_from_json(const json& j) {
    LaurentPoly f;
    for (const auto& [k, v] : j.items()) f.add_term(v.get<long long>(), std::stoi(k));
    return f;
}

OrbResult orb_result_from_json(const json& j) {
    OrbResult r;
    r.poly = laurent_from_json(j.at("poly"));
    r.value_at_0 = j.at("value_at_0").get<long long>();
    r.derivative_normalized = j.at("derivative_normalized").get<long long>();
    r.lattice_count = j.at("lattice_count").get<std::size_t>();
    r.omega = j.at("omega").get<int>();
    return r;
}

}  // namespace orbint
