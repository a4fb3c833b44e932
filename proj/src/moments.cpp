#include "agq/moments.hpp"

#include "agq/errors.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace agq {

std::string to_string(MomentKind kind)
{
    return kind == MomentKind::power ? "power" : "trigonometric";
}

MomentKind moment_kind_from_string(const std::string& s)
{
    if (s == "power")
        return MomentKind::power;
    if (s == "trigonometric")
        return MomentKind::trigonometric;
    throw ParseError("unknown moment kind '" + s + "'", 0);
}

void MomentSequence::validate() const
{
    if (values.empty())
        throw ContractError("moment sequence is empty");
    for (std::size_t n = 0; n < values.size(); ++n)
        if (!isfinite(values[n].real()) || !isfinite(values[n].imag()))
            throw ContractError("moment " + std::to_string(n) + " is not finite");
}

bool MomentSequence::is_zero() const
{
    for (const auto& v : values)
        if (v.real() != 0 || v.imag() != 0)
            return false;
    return true;
}

void SampleGrid::validate() const
{
    if (!(b > a))
        throw ContractError("sample grid needs b > a");
    if (M < 2)
        throw ContractError("sample grid needs M >= 2");
    if (samples.size() != static_cast<std::size_t>(M) + 1)
        throw ContractError("sample grid needs M+1 samples");
    for (const auto& s : samples)
        if (!isfinite(s.real()) || !isfinite(s.imag()))
            throw ContractError("sample grid holds a non-finite sample");
}

namespace {

void check_length(int L)
{
    if (L < 0)
        throw ContractError("moment count L must be nonnegative");
}

Complex real_value(const Real& x) { return {x, Real(0)}; }

} // namespace

MomentSequence lebesgue_pm1(int L)
{
    check_length(L);
    MomentSequence m{MomentKind::power, {}, "lebesgue_pm1"};
    m.values.reserve(L + 1);
    for (int n = 0; n <= L; ++n)
        m.values.push_back(real_value(n % 2 == 0 ? Real(2) / (n + 1) : Real(0)));
    return m;
}

MomentSequence lebesgue_01(int L)
{
    check_length(L);
    MomentSequence m{MomentKind::power, {}, "lebesgue_01"};
    m.values.reserve(L + 1);
    for (int n = 0; n <= L; ++n)
        m.values.push_back(real_value(Real(1) / (n + 1)));
    return m;
}

MomentSequence chebyshev1(int L)
{
    check_length(L);
    MomentSequence m{MomentKind::power, {}, "chebyshev1"};
    m.values.reserve(L + 1);
    // mu_{2j} = pi binom(2j, j) / 4^j, advanced by the ratio (2j+1)/(2j+2).
    Real even = pi();
    for (int n = 0; n <= L; ++n) {
        if (n % 2 == 1) {
            m.values.push_back(real_value(Real(0)));
            continue;
        }
        m.values.push_back(real_value(even));
        even = even * (n + 1) / (n + 2);
    }
    return m;
}

MomentSequence logweight_01(int L)
{
    check_length(L);
    MomentSequence m{MomentKind::power, {}, "logweight_01"};
    m.values.reserve(L + 1);
    for (int n = 0; n <= L; ++n) {
        const Real k(n + 1);
        m.values.push_back(real_value(-1 / (k * k)));
    }
    return m;
}

MomentSequence trig_lebesgue_pm1(int L)
{
    check_length(L);
    MomentSequence m{MomentKind::trigonometric, {}, "trig_lebesgue_pm1"};
    m.values.reserve(L + 1);
    m.values.push_back(real_value(Real(2)));
    for (int n = 1; n <= L; ++n)
        m.values.push_back(real_value(2 * sin(Real(n)) / n));
    return m;
}

MomentSequence custom_moments(int L, MomentKind kind, const std::function<Complex(int)>& moment,
                              std::string descriptor)
{
    check_length(L);
    MomentSequence m{kind, {}, std::move(descriptor)};
    m.values.reserve(L + 1);
    for (int n = 0; n <= L; ++n)
        m.values.push_back(moment(n));
    m.validate();
    return m;
}

MomentSequence discrete_measure(int L, const std::vector<std::pair<Complex, Complex>>& atoms,
                                MomentKind kind)
{
    check_length(L);
    if (atoms.empty())
        throw ContractError("discrete measure needs at least one atom");
    MomentSequence m{kind, std::vector<Complex>(L + 1, Complex(0)), "atoms"};
    std::vector<Complex> power(atoms.size(), Complex(1));
    for (int n = 0; n <= L; ++n) {
        for (std::size_t i = 0; i < atoms.size(); ++i) {
            m.values[n] += atoms[i].second * power[i];
            power[i] *= atoms[i].first;
        }
    }
    return m;
}

MomentSequence moments_from_samples(const SampleGrid& grid)
{
    grid.validate();
    MomentSequence m{MomentKind::trigonometric, grid.samples, {}};
    m.descriptor = "samples(a=" + to_decimal(grid.a) + ",b=" + to_decimal(grid.b) +
                   ",M=" + std::to_string(grid.M) + ")";
    return m;
}

MomentSequence measure_from_name(const std::string& name, int L)
{
    MomentSequence m;
    if (name == "lebesgue_pm1")
        m = lebesgue_pm1(L);
    else if (name == "lebesgue_01")
        m = lebesgue_01(L);
    else if (name == "chebyshev1")
        m = chebyshev1(L);
    else if (name == "logweight_01")
        m = logweight_01(L);
    else if (name == "trig_lebesgue_pm1")
        m = trig_lebesgue_pm1(L);
    else if (name.rfind("atoms:", 0) == 0) {
        std::vector<std::pair<Complex, Complex>> atoms;
        std::stringstream list(name.substr(6));
        std::string item;
        while (std::getline(list, item, ',')) {
            const auto colon = item.find(':');
            if (colon == std::string::npos)
                throw ParseError("atom '" + item + "' is not <x>:<w>", 0);
            atoms.emplace_back(Complex(parse_decimal(item.substr(0, colon))),
                               Complex(parse_decimal(item.substr(colon + 1))));
        }
        m = discrete_measure(L, atoms);
    } else {
        throw ParseError("unknown measure '" + name + "'", 0);
    }
    m.descriptor = name;
    return m;
}

namespace {

std::pair<std::string, std::string> split_pair(const std::string& line, std::size_t lineno)
{
    const auto comma = line.find(',');
    if (comma == std::string::npos)
        return {line, {}};
    if (line.find(',', comma + 1) != std::string::npos)
        throw ParseError("too many fields", lineno);
    return {line.substr(0, comma), line.substr(comma + 1)};
}

Real parse_field(const std::string& text, std::size_t lineno)
{
    try {
        return parse_decimal(text);
    } catch (const ParseError& e) {
        throw ParseError(e.what(), lineno);
    }
}

} // namespace

SampleGrid read_samples_csv(std::istream& in)
{
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        lines.push_back(line);
    }
    if (lines.empty())
        throw ParseError("empty sample file", 0);

    auto header = [&](std::size_t idx, const char* key) {
        if (idx >= lines.size())
            throw ParseError(std::string("missing header '") + key + "'", idx + 1);
        const auto [k, v] = split_pair(lines[idx], idx + 1);
        if (k != key || v.empty())
            throw ParseError(std::string("expected '") + key + ",<value>'", idx + 1);
        return v;
    };

    SampleGrid g;
    g.a = parse_field(header(0, "a"), 1);
    g.b = parse_field(header(1, "b"), 2);
    const auto mtext = header(2, "M");
    if (mtext.find_first_not_of("0123456789") != std::string::npos || mtext.size() > 9)
        throw ParseError("M must be a nonnegative integer", 3);
    g.M = std::stoi(mtext);
    if (g.M < 2)
        throw ParseError("M must be at least 2", 3);
    if (!(g.b > g.a))
        throw ParseError("b must exceed a", 2);

    const std::size_t first = 3;
    const std::size_t count = static_cast<std::size_t>(g.M) + 1;
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t idx = first + i;
        if (idx >= lines.size())
            throw ParseError("expected " + std::to_string(count) + " samples, found " +
                                 std::to_string(i),
                             idx + 1);
        const auto [re, im] = split_pair(lines[idx], idx + 1);
        const bool has_im = lines[idx].find(',') != std::string::npos;
        g.samples.emplace_back(parse_field(re, idx + 1),
                               has_im ? parse_field(im, idx + 1) : Real(0));
    }
    for (std::size_t idx = first + count; idx < lines.size(); ++idx)
        if (!lines[idx].empty() || idx + 1 != lines.size())
            throw ParseError("unexpected content after the last sample", idx + 1);
    return g;
}

SampleGrid load_samples_csv(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open sample file '" + path + "'", 0);
    return read_samples_csv(in);
}

void write_samples_csv(std::ostream& out, const SampleGrid& grid)
{
    out << "a," << to_decimal(grid.a) << '\n';
    out << "b," << to_decimal(grid.b) << '\n';
    out << "M," << grid.M << '\n';
    for (const auto& s : grid.samples) {
        out << to_decimal(s.real());
        if (s.imag() != 0)
            out << ',' << to_decimal(s.imag());
        out << '\n';
    }
}

void save_samples_csv(const std::string& path, const SampleGrid& grid)
{
    std::ofstream out(path);
    if (!out)
        throw ParseError("cannot write sample file '" + path + "'", 0);
    write_samples_csv(out, grid);
}

} // namespace agq
