#include "heckeq/report.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace heckeq {

namespace {

std::string esc(const std::string& s) {
    std::string o = "\"";
    for (char c : s) {
        switch (c) {
            case '"': o += "\\\""; break;
            case '\\': o += "\\\\"; break;
            case '\n': o += "\\n"; break;
            case '\r': o += "\\r"; break;
            case '\t': o += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    o += buf;
                } else {
                    o += c;
                }
        }
    }
    o += '"';
    return o;
}

void emit_string_map(std::string& out, const std::map<std::string, std::string>& m) {
    out += '{';
    bool first = true;
    for (const auto& [k, v] : m) {
        if (!first) out += ", ";
        first = false;
        out += esc(k);
        out += ": ";
        out += esc(v);
    }
    out += '}';
}

bool parse_full_double(const std::string& s, double& out) {
    if (s.empty()) return false;
    const char* b = s.data();
    const char* e = b + s.size();
    auto [p, ec] = std::from_chars(b, e, out);
    return ec == std::errc{} && p == e;
}

}  // namespace

void finalize_report(SuiteReport& r) {
    r.residual = 0.0;
    r.tolerance = 0.0;
    r.pass = true;
    bool first = true;
    for (auto& p : r.points) {
        p.pass = p.residual <= p.tolerance;
        r.pass = r.pass && p.pass;
        if (first) {
            r.residual = p.residual;
            r.tolerance = p.tolerance;
            first = false;
        } else {
            r.residual = std::max(r.residual, p.residual);
            r.tolerance = std::max(r.tolerance, p.tolerance);
        }
    }
}

std::string format_double(double v) {
    if (std::isinf(v)) return v > 0 ? "1e999" : "-1e999";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string format_complex(cplx v) {
    if (v.imag() == 0.0) return format_double(v.real());
    const std::string im = format_double(std::abs(v.imag()));
    const char sign = v.imag() < 0 ? '-' : '+';
    if (v.real() == 0.0) return (sign == '-' ? "-" : "") + im + "i";
    return format_double(v.real()) + sign + im + "i";
}

bool parse_complex(const std::string& text, cplx& out) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) return false;
    const char last = s.back();
    if (last != 'i' && last != 'I') {
        double v;
        if (!parse_full_double(s, v)) return false;
        out = {v, 0.0};
        return true;
    }
    s.pop_back();
    // split before the last sign that is not an exponent sign
    std::size_t split = std::string::npos;
    for (std::size_t i = 1; i < s.size(); ++i)
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') split = i;
    auto coeff = [&](const std::string& t, double& v) {
        if (t.empty() || t == "+") {
            v = 1.0;
            return true;
        }
        if (t == "-") {
            v = -1.0;
            return true;
        }
        return parse_full_double(t[0] == '+' ? t.substr(1) : t, v);
    };
    if (split == std::string::npos) {
        double b;
        if (!coeff(s, b)) return false;
        out = {0.0, b};
        return true;
    }
    double a, b;
    if (!parse_full_double(s[0] == '+' ? s.substr(1, split - 1) : s.substr(0, split), a))
        return false;
    if (!coeff(s.substr(split), b)) return false;
    out = {a, b};
    return true;
}

std::string to_json(const SuiteReport& r) {
    std::string o;
    o += "{\n";
    o += "  \"identity\": " + esc(r.identity) + ",\n";
    o += "  \"grid\": " + esc(r.grid) + ",\n";
    o += "  \"points\": [\n";
    for (std::size_t i = 0; i < r.points.size(); ++i) {
        const auto& p = r.points[i];
        o += "    {\"params\": ";
        emit_string_map(o, p.params);
        o += ", \"lhs_re\": " + format_double(p.lhs.real());
        o += ", \"lhs_im\": " + format_double(p.lhs.imag());
        o += ", \"rhs_re\": " + format_double(p.rhs.real());
        o += ", \"rhs_im\": " + format_double(p.rhs.imag());
        o += ", \"residual\": " + format_double(p.residual);
        o += ", \"tolerance\": " + format_double(p.tolerance);
        o += std::string(", \"pass\": ") + (p.pass ? "true" : "false") + "}";
        if (i + 1 < r.points.size()) o += ',';
        o += '\n';
    }
    o += "  ],\n";
    o += "  \"residual\": " + format_double(r.residual) + ",\n";
    o += "  \"tolerance\": " + format_double(r.tolerance) + ",\n";
    o += std::string("  \"pass\": ") + (r.pass ? "true" : "false") + ",\n";
    o += "  \"settings\": ";
    emit_string_map(o, r.settings);
    if (r.include_runtime) {
        o += ",\n  \"runtime_ms\": " + format_double(r.runtime_ms) + "\n";
    } else {
        o += "\n";
    }
    o += "}\n";
    return o;
}

std::string to_csv(const SuiteReport& r) {
    std::string o = "params,lhs_re,lhs_im,rhs_re,rhs_im,residual,tolerance,pass\n";
    for (const auto& p : r.points) {
        std::string joined;
        for (const auto& [k, v] : p.params) {
            if (!joined.empty()) joined += ';';
            joined += k + "=" + v;
        }
        std::string quoted = "\"";
        for (char c : joined) {
            quoted += c;
            if (c == '"') quoted += '"';
        }
        quoted += '"';
        o += quoted;
        o += ',' + format_double(p.lhs.real());
        o += ',' + format_double(p.lhs.imag());
        o += ',' + format_double(p.rhs.real());
        o += ',' + format_double(p.rhs.imag());
        o += ',' + format_double(p.residual);
        o += ',' + format_double(p.tolerance);
        o += std::string(",") + (p.pass ? "true" : "false") + "\n";
    }
    return o;
}

SuiteReport from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw io_error(std::string("report parse failed: ") + e.what());
    }
    try {
        SuiteReport r;
        r.identity = j.at("identity").get<std::string>();
        r.grid = j.at("grid").get<std::string>();
        for (const auto& jp : j.at("points")) {
            PointResult p;
            for (const auto& [k, v] : jp.at("params").items())
                p.params[k] = v.get<std::string>();
            p.lhs = {jp.at("lhs_re").get<double>(), jp.at("lhs_im").get<double>()};
            p.rhs = {jp.at("rhs_re").get<double>(), jp.at("rhs_im").get<double>()};
            p.residual = jp.at("residual").get<double>();
            p.tolerance = jp.at("tolerance").get<double>();
            p.pass = jp.at("pass").get<bool>();
            r.points.push_back(std::move(p));
        }
        r.residual = j.at("residual").get<double>();
        r.tolerance = j.at("tolerance").get<double>();
        r.pass = j.at("pass").get<bool>();
        for (const auto& [k, v] : j.at("settings").items())
            r.settings[k] = v.get<std::string>();
        if (j.contains("runtime_ms")) {
            r.runtime_ms = j.at("runtime_ms").get<double>();
            r.include_runtime = true;
        } else {
            r.include_runtime = false;
        }
        return r;
    } catch (const io_error&) {
        throw;
    } catch (const std::exception& e) {
        throw io_error(std::string("report fields invalid: ") + e.what());
    }
}

void write_report_file(const SuiteReport& r, const std::string& format,
                       const std::string& path) {
    std::string body;
    if (format == "json") {
        body = to_json(r);
    } else if (format == "csv") {
        body = to_csv(r);
    } else {
        throw io_error("unknown report format: " + format);
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot open report file: " + path);
    out << body;
    out.flush();
    if (!out) throw io_error("write failed: " + path);
}

}  // namespace heckeq
