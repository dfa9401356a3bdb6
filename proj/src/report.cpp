#include "zeta/report.hpp"

#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace zeta::report {

namespace {

using nlohmann::ordered_json;

std::string num(double v, const char* format = "%.12g") {
    char buf[64];
    std::snprintf(buf, sizeof buf, format, v);
    return buf;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string join_params(
    const std::vector<std::pair<std::string, double>>& params) {
    std::string out;
    for (const auto& [name, v] : params) {
        if (!out.empty()) out += ';';
        out += name + "=" + num(v, "%.10g");
    }
    return out;
}

ordered_json params_json(
    const std::vector<std::pair<std::string, double>>& params) {
    ordered_json o = ordered_json::object();
    for (const auto& [name, v] : params) o[name] = v;
    return o;
}

std::string records_csv(const std::vector<Record>& recs) {
    std::string out = "method,params,value,valid,evidence\n";
    for (const auto& r : recs) {
        out += r.method + "," + csv_field(join_params(r.params)) + "," +
               num(r.value) + "," + (r.valid ? "1" : "0") + "," +
               csv_field(r.evidence) + "\n";
    }
    return out;
}

std::string records_json(const std::vector<Record>& recs) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : recs) {
        ordered_json o;
        o["method"] = r.method;
        o["params"] = params_json(r.params);
        o["value"] = r.value;
        o["valid"] = r.valid;
        if (!r.evidence.empty()) o["evidence"] = r.evidence;
        arr.push_back(std::move(o));
    }
    return arr.dump(2) + "\n";
}

std::string records_pretty(const std::vector<Record>& recs) {
    std::string out;
    for (const auto& r : recs) {
        out += r.method + "(" ;
        std::string ps;
        for (const auto& [name, v] : r.params) {
            if (!ps.empty()) ps += ", ";
            ps += name + "=" + num(v, "%.10g");
        }
        out += ps + ") = " + num(r.value, "%.8f") +
               (r.valid ? "" : "  [invalid/trivial]");
        if (!r.evidence.empty()) out += "  " + r.evidence;
        out += "\n";
    }
    return out;
}

}  // namespace

Format parse_format(const std::string& name) {
    if (name == "csv") return Format::csv;
    if (name == "json") return Format::json;
    if (name == "pretty") return Format::pretty;
    throw std::invalid_argument("unknown format: " + name);
}

std::string render_records(const std::vector<Record>& recs, Format f) {
    switch (f) {
        case Format::csv: return records_csv(recs);
        case Format::json: return records_json(recs);
        case Format::pretty: return records_pretty(recs);
    }
    return {};
}

std::string render_table33(const std::vector<tables::Row33>& rows, Format f) {
    if (f == Format::pretty) {
        std::string out = "k, b, a, value\n";
        for (const auto& r : rows)
            out += std::to_string(r.k) + ", " + num(r.b, "%.6g") + ", " +
                   num(r.a, "%.6g") + ", " + num(r.value, "%.5f") + "\n";
        return out;
    }
    std::vector<Record> recs;
    for (const auto& r : rows)
        recs.push_back({"T4",
                        {{"k", static_cast<double>(r.k)}, {"b", r.b},
                         {"a", r.a}},
                        r.value,
                        true,
                        {}});
    return render_records(recs, f);
}

std::string render_table42(const std::vector<tables::Row42>& rows, Format f) {
    if (f == Format::pretty) {
        std::string out = "k, b_neg, b_pos, t7_value, b0, t6_value, best\n";
        for (const auto& r : rows)
            out += std::to_string(r.k) + ", " + num(r.b_neg, "%.8f") + ", " +
                   num(r.b_pos, "%.8f") + ", " + num(r.t7_value, "%.8f") +
                   ", " + num(r.b0, "%.8f") + ", " + num(r.t6_value, "%.8f") +
                   ", " + num(r.best, "%.8f") + "\n";
        return out;
    }
    std::vector<Record> recs;
    for (const auto& r : rows) {
        bool t7_best = r.t7_value > r.t6_value;
        recs.push_back({"T7",
                        {{"k", static_cast<double>(r.k)},
                         {"b_neg", r.b_neg},
                         {"b_pos", r.b_pos}},
                        r.t7_value,
                        true,
                        t7_best ? "best" : ""});
        recs.push_back({"T6",
                        {{"k", static_cast<double>(r.k)}, {"b0", r.b0}},
                        r.t6_value,
                        true,
                        t7_best ? "" : "best"});
    }
    return render_records(recs, f);
}

std::string render_table66(const std::vector<tables::Row66>& rows, Format f) {
    if (f == Format::pretty) {
        std::string out = "m, k, value, r\n";
        for (const auto& r : rows)
            out += std::to_string(r.m) + ", " + std::to_string(r.k) + ", " +
                   num(r.value, "%.6f") + ", " + std::to_string(r.r) + "\n";
        return out;
    }
    std::vector<Record> recs;
    for (const auto& r : rows)
        recs.push_back({"T10",
                        {{"k", static_cast<double>(r.k)},
                         {"m", static_cast<double>(r.m)},
                         {"r", static_cast<double>(r.r)}},
                        r.value,
                        r.value > 1.0,
                        {}});
    return render_records(recs, f);
}

std::string render_diff(const tables::DiffReport& rep,
                        const std::string& label, Format f) {
    if (f == Format::pretty) {
        std::string out = "diff " + label + ": rows_checked=" +
                          std::to_string(rep.rows_checked) + " rows_skipped=" +
                          std::to_string(rep.rows_skipped) + " max_dev=" +
                          num(rep.max_dev, "%.3e") +
                          (rep.pass ? "  PASS" : "  FAIL") + "\n";
        for (const auto& line : rep.failures) out += "  " + line + "\n";
        return out;
    }
    if (f == Format::json) {
        ordered_json o;
        o["method"] = "diff." + label;
        o["params"] = {{"rows_checked", rep.rows_checked},
                       {"rows_skipped", rep.rows_skipped}};
        o["value"] = rep.max_dev;
        o["valid"] = rep.pass;
        o["evidence"] = rep.failures;
        return o.dump(2) + "\n";
    }
    std::string evidence;
    for (const auto& line : rep.failures) {
        if (!evidence.empty()) evidence += "; ";
        evidence += line;
    }
    std::vector<Record> recs{
        {"diff." + label,
         {{"rows_checked", static_cast<double>(rep.rows_checked)},
          {"rows_skipped", static_cast<double>(rep.rows_skipped)}},
         rep.max_dev,
         rep.pass,
         evidence}};
    return records_csv(recs);
}

std::string render_suite(
    const verify::SuiteReport& rep,
    const std::vector<std::pair<std::string, double>>& params, Format f) {
    int passed = 0;
    for (const auto& c : rep.checks) passed += c.pass ? 1 : 0;
    if (f == Format::pretty) {
        std::string out = "suite " + rep.suite + ": " +
                          std::to_string(passed) + "/" +
                          std::to_string(rep.checks.size()) +
                          " checks passed" + (rep.pass ? "" : "  FAIL") + "\n";
        for (const auto& c : rep.checks)
            out += std::string(c.pass ? "  [pass] " : "  [FAIL] ") + c.name +
                   ": " + c.evidence + "\n";
        return out;
    }
    if (f == Format::json) {
        ordered_json o;
        o["method"] = "verify." + rep.suite;
        o["params"] = params_json(params);
        o["value"] = passed;
        o["valid"] = rep.pass;
        ordered_json checks = ordered_json::array();
        for (const auto& c : rep.checks) {
            ordered_json cj;
            cj["check"] = c.name;
            cj["pass"] = c.pass;
            cj["evidence"] = c.evidence;
            checks.push_back(std::move(cj));
        }
        o["evidence"] = std::move(checks);
        return o.dump(2) + "\n";
    }
    std::vector<Record> recs;
    for (const auto& c : rep.checks) {
        auto p = params;
        recs.push_back({"verify." + rep.suite + "." + c.name, p,
                        c.pass ? 1.0 : 0.0, c.pass, c.evidence});
    }
    return records_csv(recs);
}

}  // namespace zeta::report
