#include "adelic/serialize.hpp"

#include <cstdio>
#include <sstream>
#include <vector>

namespace adelic {

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

double parseDouble(const std::string& s) {
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw ArgumentError("not a number: '" + s + "'");
    }
    if (used != s.size()) throw ArgumentError("not a number: '" + s + "'");
    return v;
}

std::vector<std::string> words(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    for (std::string w; in >> w;) out.push_back(w);
    return out;
}

std::string formatCoefficient(const Cyclotomic& c) {
    if (c.isRational()) return toString(c.rationalValue());
    // Written as a sum of weighted roots of unity in the power basis.
    const std::int64_t n = conductor(c.prime(), c.level());
    std::string out;
    for (const auto& [k, q] : c.coefficients()) {
        if (!out.empty()) out += "+";
        out += toString(q) + "@" + toString(makeRational(static_cast<long>(k), static_cast<long>(n)));
    }
    return out;
}

}  // namespace

Complex parseComplex(std::string_view text) {
    const std::string s = trim(text);
    const auto comma = s.find(',');
    if (comma == std::string::npos) return {parseDouble(s), 0.0};
    return {parseDouble(trim(s.substr(0, comma))), parseDouble(trim(s.substr(comma + 1)))};
}

Cyclotomic parseCoefficient(std::string_view text) {
    Cyclotomic sum;
    std::string s = trim(text);
    // Sums "q@phase+q@phase" as printed by formatCoefficient; a leading sign
    // belongs to the first weight.
    std::size_t start = 0;
    for (std::size_t i = 1; i <= s.size(); ++i) {
        if (i < s.size() && !(s[i] == '+' && s[i - 1] != '@' && s[i - 1] != '/')) continue;
        const std::string part = s.substr(start, i - start);
        const auto at = part.find('@');
        if (at == std::string::npos)
            sum += Cyclotomic(parseRational(part));
        else
            sum += Cyclotomic::rootOfUnity(parseRational(part.substr(at + 1)), parseRational(part.substr(0, at)));
        start = i + 1;
    }
    return sum;
}

SchwartzBruhat parseSchwartzBruhat(std::string_view text) {
    const std::string whole = trim(text);
    if (whole == "vacuum") return SchwartzBruhat(ElementaryFunction::vacuum());
    if (whole.rfind("state:", 0) == 0) {
        const double n = parseDouble(whole.substr(6));
        if (n < 0 || n != static_cast<int>(n)) throw ArgumentError("state index must be a nonnegative integer");
        return SchwartzBruhat(ElementaryFunction::oscillatorState(static_cast<int>(n)));
    }

    SchwartzBruhat out;
    std::vector<Complex> realCoeffs;
    std::map<Prime, std::vector<TestTerm>> balls;
    Complex weight = 1;
    bool open = false;
    auto flush = [&] {
        if (!open) return;
        ElementaryFunction e{RealTestFunction(realCoeffs.empty() ? std::vector<Complex>{1.0} : realCoeffs), {}};
        for (auto& [p, terms] : balls) e.primes.emplace(p, PAdicTestFunction(p, std::move(terms)));
        out.terms.emplace_back(weight, std::move(e));
        realCoeffs.clear();
        balls.clear();
        open = false;
    };

    std::string normalized(whole);
    for (char& c : normalized)
        if (c == ';') c = '\n';
    std::istringstream in(normalized);
    int lineNo = 0;
    for (std::string line; std::getline(in, line);) {
        ++lineNo;
        auto w = words(line);
        if (w.empty() || w[0][0] == '#') continue;
        const std::string where = " (directive " + std::to_string(lineNo) + ")";
        if (w[0] == "term") {
            if (w.size() != 2) throw ArgumentError("term takes one coefficient" + where);
            flush();
            weight = parseComplex(w[1]);
            open = true;
        } else if (w[0] == "real") {
            if (w.size() != 3) throw ArgumentError("real takes a degree and a coefficient" + where);
            if (!open) throw ArgumentError("real before term" + where);
            const double deg = parseDouble(w[1]);
            if (deg < 0 || deg != static_cast<int>(deg)) throw ArgumentError("bad Hermite degree" + where);
            const auto n = static_cast<std::size_t>(deg);
            if (realCoeffs.size() <= n) realCoeffs.resize(n + 1, 0.0);
            realCoeffs[n] += parseComplex(w[2]);
        } else if (w[0] == "ball") {
            if (w.size() != 5 && w.size() != 6) throw ArgumentError("ball takes p coef center k [freq]" + where);
            if (!open) throw ArgumentError("ball before term" + where);
            const Rational pr = parseRational(w[1]);
            if (pr.get_den() != 1 || !pr.get_num().fits_slong_p()) throw ArgumentError("bad prime" + where);
            const Prime p = pr.get_num().get_si();
            requirePrime(p);
            const Rational k = parseRational(w[4]);
            if (k.get_den() != 1 || !k.get_num().fits_slong_p()) throw ArgumentError("bad radius exponent" + where);
            const Rational freq = w.size() == 6 ? parseRational(w[5]) : Rational(0);
            balls[p].push_back({parseCoefficient(w[2]), freq, Ball(p, parseRational(w[3]), k.get_num().get_si())});
        } else if (w[0] == "end") {
            flush();
        } else {
            throw ArgumentError("unknown directive '" + w[0] + "'" + where);
        }
    }
    flush();
    if (out.terms.empty()) throw ArgumentError("empty Schwartz-Bruhat function");
    return out;
}

std::string formatSchwartzBruhat(const SchwartzBruhat& phi) {
    std::ostringstream os;
    for (const auto& [c, e] : phi.terms) {
        if (!e.real.isHermite()) throw ArgumentError("only Hermite real factors can be serialized");
        os << "term " << formatReal(c.real()) << "," << formatReal(c.imag()) << "\n";
        const auto& h = e.real.hermiteCoefficients();
        for (std::size_t n = 0; n < h.size(); ++n)
            if (h[n] != 0.0) os << "real " << n << " " << formatReal(h[n].real()) << "," << formatReal(h[n].imag()) << "\n";
        for (const auto& [p, f] : e.primes)
            for (const auto& t : f.terms()) {
                os << "ball " << p << " " << formatCoefficient(t.coefficient) << " " << toString(t.ball.center()) << " "
                   << t.ball.radiusExp();
                if (t.frequency != 0) os << " " << toString(t.frequency);
                os << "\n";
            }
        os << "end\n";
    }
    return os.str();
}

std::string formatReal(double x) {
    if (x == 0) return "0";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

std::string formatComplex(Complex z) {
    const double re = z.real() == 0 ? 0.0 : z.real();
    const double im = z.imag() == 0 ? 0.0 : z.imag();
    std::string out = formatReal(re);
    out += std::signbit(im) ? "-" : "+";
    out += formatReal(std::fabs(im)) + "i";
    return out;
}

}  // namespace adelic
