#include "agq/serialize.hpp"

#include "agq/errors.hpp"

#include <fstream>
#include <ostream>

namespace agq {

namespace {

Json complex_pair(const Complex& z)
{
    return Json::array({to_decimal(z.real()), to_decimal(z.imag())});
}

Json complex_list(const std::vector<Complex>& v)
{
    Json a = Json::array();
    for (const auto& z : v)
        a.push_back(complex_pair(z));
    return a;
}

const Json& field(const Json& doc, const char* key)
{
    if (!doc.is_object() || !doc.contains(key))
        throw ParseError(std::string("missing field '") + key + "'", 0);
    return doc.at(key);
}

Real real_field(const Json& j, const char* what)
{
    if (!j.is_string())
        throw ParseError(std::string(what) + ": expected a decimal string", 0);
    return parse_decimal(j.get<std::string>());
}

int int_field(const Json& doc, const char* key)
{
    const auto& j = field(doc, key);
    if (!j.is_number_integer())
        throw ParseError(std::string("field '") + key + "' must be an integer", 0);
    return j.get<int>();
}

std::string string_field(const Json& doc, const char* key)
{
    const auto& j = field(doc, key);
    if (!j.is_string())
        throw ParseError(std::string("field '") + key + "' must be a string", 0);
    return j.get<std::string>();
}

Complex parse_pair(const Json& j, const char* what)
{
    if (!j.is_array() || j.size() != 2)
        throw ParseError(std::string(what) + ": expected [re, im]", 0);
    return {real_field(j[0], what), real_field(j[1], what)};
}

std::vector<Complex> parse_list(const Json& doc, const char* key)
{
    const auto& j = field(doc, key);
    if (!j.is_array())
        throw ParseError(std::string("field '") + key + "' must be an array", 0);
    std::vector<Complex> out;
    for (const auto& e : j)
        out.push_back(parse_pair(e, key));
    return out;
}

} // namespace

unsigned json_precision(const Json& doc)
{
    const int p = int_field(doc, "precision_digits");
    if (p < 10)
        throw ParseError("precision_digits must be at least 10", 0);
    return static_cast<unsigned>(p);
}

Json rule_to_json(const QuadratureRule& rule, const ErrorCertificate& cert)
{
    Json doc;
    doc["descriptor"] = rule.descriptor;
    doc["kind"] = to_string(rule.kind);
    doc["N"] = rule.N;
    doc["d"] = rule.d;
    doc["epsilon"] = to_decimal(rule.epsilon);
    doc["residual_2"] = to_decimal(rule.residual_2);
    doc["precision_digits"] = rule.precision_digits;
    doc["nodes"] = complex_list(rule.nodes);
    doc["weights"] = complex_list(rule.weights);
    doc["poly"] = complex_list(cert.polynomial().coefficients());
    Json pruned = Json::array();
    for (const auto& [x, w] : rule.pruned)
        pruned.push_back(Json::array({complex_pair(x), complex_pair(w)}));
    doc["pruned"] = pruned;
    return doc;
}

StoredRule rule_from_json(const Json& doc)
{
    StoredRule s;
    auto& r = s.rule;
    r.descriptor = string_field(doc, "descriptor");
    r.kind = moment_kind_from_string(string_field(doc, "kind"));
    r.N = int_field(doc, "N");
    r.d = int_field(doc, "d");
    r.epsilon = real_field(field(doc, "epsilon"), "epsilon");
    r.residual_2 = doc.contains("residual_2") ? real_field(doc.at("residual_2"), "residual_2")
                                              : r.epsilon;
    r.precision_digits = json_precision(doc);
    r.nodes = parse_list(doc, "nodes");
    r.weights = parse_list(doc, "weights");
    if (r.nodes.size() != r.weights.size())
        throw ParseError("nodes and weights differ in length", 0);
    if (doc.contains("pruned")) {
        for (const auto& e : doc.at("pruned")) {
            if (!e.is_array() || e.size() != 2)
                throw ParseError("pruned: expected [[re, im], [re, im]]", 0);
            r.pruned.emplace_back(parse_pair(e[0], "pruned"), parse_pair(e[1], "pruned"));
        }
    }
    const auto poly = parse_list(doc, "poly");
    if (static_cast<int>(poly.size()) != r.d + 2)
        throw ParseError("poly must hold d+2 coefficients", 0);
    try {
        s.certificate = ErrorCertificate(Polynomial(poly), r.epsilon, r.N);
    } catch (const ContractError& e) {
        throw ParseError(std::string("poly: ") + e.what(), 0);
    }
    return s;
}

Json expsum_to_json(const ExpSumApprox& approx)
{
    Json doc;
    doc["descriptor"] = approx.descriptor;
    doc["kind"] = to_string(MomentKind::trigonometric);
    doc["a"] = to_decimal(approx.a);
    doc["b"] = to_decimal(approx.b);
    doc["M"] = approx.M;
    doc["N"] = approx.N;
    doc["d"] = approx.d;
    doc["epsilon"] = to_decimal(approx.epsilon);
    doc["residual_2"] = to_decimal(approx.residual_2);
    doc["max_sample_residual"] = to_decimal(approx.max_sample_residual);
    doc["precision_digits"] = approx.precision_digits;
    doc["pruned"] = approx.pruned;
    doc["alpha"] = complex_list(approx.alpha);
    doc["beta"] = complex_list(approx.beta);
    doc["nodes"] = complex_list(approx.nodes);
    doc["weights"] = complex_list(approx.weights);
    doc["poly"] = complex_list(approx.poly.coefficients());
    doc["warnings"] = approx.warnings;
    return doc;
}

ExpSumApprox expsum_from_json(const Json& doc)
{
    ExpSumApprox e;
    e.descriptor = string_field(doc, "descriptor");
    e.a = real_field(field(doc, "a"), "a");
    e.b = real_field(field(doc, "b"), "b");
    e.M = int_field(doc, "M");
    e.N = int_field(doc, "N");
    e.d = int_field(doc, "d");
    e.epsilon = real_field(field(doc, "epsilon"), "epsilon");
    e.residual_2 = real_field(field(doc, "residual_2"), "residual_2");
    e.max_sample_residual = real_field(field(doc, "max_sample_residual"), "max_sample_residual");
    e.precision_digits = json_precision(doc);
    e.pruned = int_field(doc, "pruned");
    e.alpha = parse_list(doc, "alpha");
    e.beta = parse_list(doc, "beta");
    if (e.alpha.size() != e.beta.size())
        throw ParseError("alpha and beta differ in length", 0);
    e.nodes = parse_list(doc, "nodes");
    e.weights = parse_list(doc, "weights");
    const auto poly = parse_list(doc, "poly");
    if (!poly.empty())
        e.poly = Polynomial(poly);
    if (doc.contains("warnings"))
        for (const auto& w : doc.at("warnings"))
            e.warnings.push_back(w.get<std::string>());
    return e;
}

Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open '" + path + "'", 0);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ParseError("'" + path + "': " + e.what(), 0);
    }
}

void write_json_file(const std::string& path, const Json& doc)
{
    std::ofstream out(path);
    if (!out)
        throw ParseError("cannot write '" + path + "'", 0);
    out << doc.dump(2) << '\n';
}

void write_residual_csv(std::ostream& out, const ResidualReport& report)
{
    out << "x,abs_error\n";
    for (std::size_t i = 0; i < report.x.size(); ++i)
        out << to_decimal(report.x[i]) << ',' << to_decimal(report.residual[i]) << '\n';
}

} // namespace agq
