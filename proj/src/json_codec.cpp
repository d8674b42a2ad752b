#include "eulerchi/json_codec.hpp"

namespace eulerchi {

using nlohmann::json;

json to_json(const Rational& v)
{
    return json{{"num", v.num().to_decimal()}, {"den", v.den().to_decimal()}};
}

namespace {

json poly_to_json(const UniPoly<Rational>& p)
{
    json arr = json::array();
    for (int i = 0; i <= p.degree(); ++i) arr.push_back(to_json(p.coeff(i)));
    return arr;
}

UniPoly<Rational> poly_from_json(const json& j)
{
    std::vector<Rational> coeffs;
    for (const auto& c : j) coeffs.push_back(rational_from_json(c));
    return UniPoly<Rational>(std::move(coeffs));
}

} // namespace

json to_json(const RatFunc& v)
{
    return json{{"num", poly_to_json(v.num())}, {"den", poly_to_json(v.den())}};
}

json to_json(const ExtFunc& v)
{
    return json{{"a", to_json(v.rational_part())}, {"b", to_json(v.radical_part())}, {"d", 3}};
}

json to_json(const PiRational& v)
{
    return json{{"coeff", to_json(v.coeff())}, {"pi_half_exp", v.half_exp()}};
}

json to_json(const PiGraded<RatFunc>& v)
{
    return json{{"coeff", to_json(v.coeff())}, {"pi_half_exp", v.half_exp()}};
}

Rational rational_from_json(const json& j)
{
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    return Rational(BigInt::from_decimal(j.at("num").get<std::string>()),
                    BigInt::from_decimal(j.at("den").get<std::string>()));
}

RatFunc ratfunc_from_json(const json& j)
{
    return RatFunc(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

PiRational pigraded_from_json(const json& j)
{
    return PiRational::with_half_exp(rational_from_json(j.at("coeff")), j.at("pi_half_exp").get<int>());
}

HypersurfaceModel model_from_json(const json& j)
{
    std::string variant = j.at("variant").get<std::string>();
    HypersurfaceModel model;
    model.ambient.c = j.contains("c") ? rational_from_json(j.at("c")) : Rational(1);

    if (variant == "geodesic_sphere") {
        GeodesicSphere gs;
        gs.radius = rational_from_json(j.at("r"));
        model.ambient.ambient_dim = j.at("n").get<int>() + 1;
        model.shape = gs;
        return model;
    }
    if (variant == "clifford") {
        CliffordProduct cp;
        cp.p = j.at("p").get<int>();
        cp.q = j.at("q").get<int>();
        if (j.contains("r2"))
            cp.r_squared = rational_from_json(j.at("r2"));
        else {
            Rational r = rational_from_json(j.at("r"));
            cp.r_squared = r * r;
        }
        model.ambient.c = Rational(1);
        model.ambient.ambient_dim = cp.p + cp.q + 1;
        model.shape = cp;
        return model;
    }
    if (variant == "abstract_cpc") {
        AbstractCPC cpc;
        cpc.curvatures.c = model.ambient.c;
        for (const auto& entry : j.at("curvatures"))
            cpc.curvatures.entries.push_back(
                {rational_from_json(entry.at("value")), entry.at("multiplicity").get<int>()});
        cpc.volume = pigraded_from_json(j.at("vol"));
        model.ambient.ambient_dim = cpc.curvatures.dimension() + 1;
        model.shape = cpc;
        return model;
    }
    if (variant == "ellipsoid") {
        EllipsoidNumeric e;
        e.ax = j.at("a").get<double>();
        e.ay = j.at("b").get<double>();
        e.az = j.at("c_axis").get<double>();
        if (j.contains("resolution")) e.resolution = j.at("resolution").get<int>();
        model.ambient.c = Rational(0);
        model.ambient.ambient_dim = 3;
        model.shape = e;
        return model;
    }
    fail(errc::parse_error, "unknown model variant: " + variant);
}

} // namespace eulerchi
