#include "gaprecover/sequence_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <numbers>
#include <ostream>
#include <vector>

#include "gaprecover/errors.hpp"

namespace gaprecover {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

template <typename T>
bool parse_number(std::string_view s, T& out) {
    s = trim(s);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    if (s.empty()) return false;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size();
}

}  // namespace

FiniteSequence read_sequence_csv(std::istream& in) {
    std::string line;
    std::size_t row = 0;
    bool have_header = false;
    while (!have_header && std::getline(in, line)) {
        ++row;
        const auto body = trim(line);
        if (body.empty()) continue;
        if (body != "t,re,im") throw CsvError(row, "expected header 't,re,im'");
        have_header = true;
    }
    if (!have_header) throw CsvError(row + 1, "missing header 't,re,im'");

    FiniteSequence x;
    bool first = true;
    Index previous = 0;
    while (std::getline(in, line)) {
        ++row;
        const auto body = trim(line);
        if (body.empty()) continue;
        const auto c1 = body.find(',');
        const auto c2 = c1 == std::string_view::npos ? c1 : body.find(',', c1 + 1);
        if (c2 == std::string_view::npos || body.find(',', c2 + 1) != std::string_view::npos) {
            throw CsvError(row, "expected three fields t,re,im");
        }
        Index t = 0;
        double re = 0.0, im = 0.0;
        if (!parse_number(body.substr(0, c1), t)) throw CsvError(row, "bad index");
        if (!parse_number(body.substr(c1 + 1, c2 - c1 - 1), re) || !parse_number(body.substr(c2 + 1), im)) {
            throw CsvError(row, "bad numeric value");
        }
        if (!std::isfinite(re) || !std::isfinite(im)) throw CsvError(row, "non-finite value");
        if (!first && t <= previous) throw CsvError(row, "indices must be strictly increasing");
        x.set(t, {re, im});
        previous = t;
        first = false;
    }
    return x;
}

FiniteSequence read_sequence_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open " + path);
    return read_sequence_csv(in);
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_values_csv(std::ostream& out, Index start, std::span<const Complex> values) {
    out << "t,re,im\n";
    Index t = start;
    for (const auto& v : values) out << t++ << ',' << format_double(v.real()) << ',' << format_double(v.imag()) << '\n';
}

void write_sequence_csv(std::ostream& out, const FiniteSequence& x) { write_values_csv(out, x.start(), x.values()); }

void write_sequence_csv_file(const std::string& path, const FiniteSequence& x) {
    std::ofstream out(path);
    if (!out) throw InvalidArgument("cannot write " + path);
    write_sequence_csv(out, x);
}

double parse_angle(std::string_view text) {
    auto s = trim(text);
    if (s.empty()) throw InvalidArgument("empty angle");
    if (s.size() >= 2 && s.substr(s.size() - 2) == "pi") {
        auto coef_text = trim(s.substr(0, s.size() - 2));
        if (!coef_text.empty() && coef_text.back() == '*') coef_text = trim(coef_text.substr(0, coef_text.size() - 1));
        double coef = 1.0;
        if (coef_text == "-") {
            coef = -1.0;
        } else if (!coef_text.empty() && coef_text != "+" && !parse_number(coef_text, coef)) {
            throw InvalidArgument("bad angle '" + std::string(text) + "'");
        }
        return coef == 1.0 ? std::numbers::pi : coef * std::numbers::pi;
    }
    double radians = 0.0;
    if (!parse_number(s, radians) || !std::isfinite(radians)) throw InvalidArgument("bad angle '" + std::string(text) + "'");
    return radians;
}

}  // namespace gaprecover
