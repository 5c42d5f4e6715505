#include "strtherm/report.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>

#include "json.hpp"

namespace strtherm {

namespace {

using Json = nlohmann::ordered_json;

Json number_or_null(std::optional<double> v) {
    if (!v || !std::isfinite(*v)) {
        return nullptr;
    }
    return *v;
}

std::string csv_cell(std::optional<double> v) {
    return v ? format_number(*v) : std::string{};
}

std::string fixed(std::optional<double> v, int precision) {
    if (!v) {
        return "undefined";
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", precision, *v);
    return buf;
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string format_number(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[64];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, end);
}

std::string report_json(const AnalysisResult& r) {
    const ThermoReport& t = r.report;
    Json j;
    j["report_version"] = kReportVersion;
    j["input"] = r.input;
    j["mode"] = std::string(to_string(r.mode));
    j["bit_order"] = std::string(to_string(r.bit_order));
    j["m"] = r.bits;
    j["n"] = r.histogram.observations;
    j["particles"] = r.particles.observations;
    if (r.mode == EnsembleMode::self) {
        j["k"] = r.set_bits;
    }
    j["distinct_values"] = r.histogram.entries.size();
    j["c_bar"] = r.model.c_bar;
    j["c_bar_empirical"] = !r.mean_identity.has_value();
    j["mean_identity"] = r.mean_identity ? Json(*r.mean_identity) : Json(nullptr);
    j["k_factor"] = r.model.k_factor;
    j["sigma2"] = r.model.sigma2;
    j["t"] = t.temperature;
    j["u_bar"] = t.u_bar;
    j["u_bar_eq"] = number_or_null(t.u_bar_eq);
    j["s_thermo"] = t.s_thermo;
    j["s_thermo_eq"] = number_or_null(t.s_thermo_eq);
    j["s_micro"] = t.s_micro;
    j["s_micro_per_bit"] = t.s_micro_per_bit;
    j["s_micro_eq_per_bit"] = number_or_null(t.s_micro_eq_per_bit);
    j["z"] = number_or_null(t.z);
    j["s_nats"] = number_or_null(t.s_nats);
    j["f"] = number_or_null(t.free_energy);
    j["p"] = number_or_null(t.pressure);
    j["v"] = t.volume;
    j["degenerate"] = t.degenerate;
    j["fit_quality"] = number_or_null(t.fit_quality);
    j["units"] = {
        {"s_thermo", "bits/particle"},  {"s_thermo_eq", "bits/particle"},
        {"s_micro", "bits/particle"},   {"s_micro_per_bit", "bits/bit"},
        {"s_micro_eq_per_bit", "bits/bit"}, {"s_nats", "nats"},
    };
    return j.dump(2) + "\n";
}

std::string report_csv_header() {
    return "input,mode,bit_order,m,n,k,c_bar,t,u_bar,u_bar_eq,s_thermo,s_thermo_eq,s_micro,"
           "s_micro_per_bit,s_micro_eq_per_bit,z,s_nats,f,p,v,degenerate,fit_quality\n";
}

std::string report_csv_row(const AnalysisResult& r) {
    const ThermoReport& t = r.report;
    std::ostringstream out;
    out << csv_quote(r.input) << ',' << to_string(r.mode) << ',' << to_string(r.bit_order) << ','
        << r.bits << ',' << r.histogram.observations << ','
        << (r.mode == EnsembleMode::self ? std::to_string(r.set_bits) : std::string{}) << ','
        << format_number(r.model.c_bar) << ',' << format_number(t.temperature) << ','
        << format_number(t.u_bar) << ',' << csv_cell(t.u_bar_eq) << ','
        << format_number(t.s_thermo) << ',' << csv_cell(t.s_thermo_eq) << ','
        << format_number(t.s_micro) << ',' << format_number(t.s_micro_per_bit) << ','
        << csv_cell(t.s_micro_eq_per_bit) << ',' << csv_cell(t.z) << ','
        << csv_cell(t.s_nats) << ',' << csv_cell(t.free_energy) << ','
        << csv_cell(t.pressure) << ',' << format_number(t.volume) << ','
        << (t.degenerate ? "true" : "false") << ',' << csv_cell(t.fit_quality) << '\n';
    return out.str();
}

std::string report_human(const AnalysisResult& r) {
    const ThermoReport& t = r.report;
    std::ostringstream out;
    out << "input            " << r.input << '\n'
        << "mode             " << to_string(r.mode) << " (bit order " << to_string(r.bit_order)
        << ")\n"
        << "M                " << r.bits << " bits\n"
        << "N                " << r.histogram.observations
        << (r.full_ensemble ? " (full ensemble)" : " (partial ensemble, mean is empirical)")
        << '\n'
        << "particles        " << r.particles.observations
        << (r.particles.observations < r.histogram.observations ? " (zero shift excluded)" : "")
        << '\n';
    if (r.mode == EnsembleMode::self) {
        out << "k                " << r.set_bits << " set bits\n";
    }
    if (r.mean_identity) {
        out << "mean identity    " << (*r.mean_identity ? "holds" : "VIOLATED") << '\n';
    }
    out << "distinct values  " << r.histogram.entries.size() << '\n'
        << "C_bar            " << fixed(r.model.c_bar, 4) << '\n'
        << "K                " << fixed(r.model.k_factor, 6) << '\n'
        << "T                " << fixed(t.temperature, 6) << '\n'
        << "U                " << fixed(t.u_bar, 6) << "   (equilibrium "
        << fixed(t.u_bar_eq, 6) << ")\n"
        << "S_thermo         " << fixed(t.s_thermo, 4) << " bits/particle   (equilibrium "
        << fixed(t.s_thermo_eq, 4) << ")\n"
        << "S_micro          " << fixed(t.s_micro, 4) << " bits/particle\n"
        << "S_micro / M      " << fixed(t.s_micro_per_bit, 6) << " bits/bit   (equilibrium "
        << fixed(t.s_micro_eq_per_bit, 6) << ")\n"
        << "Z                " << fixed(t.z, 4) << '\n'
        << "S (ensemble)     " << fixed(t.s_nats, 4) << " nats\n"
        << "F                " << fixed(t.free_energy, 4) << '\n'
        << "P                " << fixed(t.pressure, 4) << '\n'
        << "V                " << fixed(t.volume, 4) << '\n'
        << "fit quality      " << fixed(t.fit_quality, 6) << '\n'
        << "state            "
        << (t.degenerate ? "degenerate" : "see fit quality (0 = exact equilibrium)") << '\n';
    return out.str();
}

std::string render_report(const AnalysisResult& r, OutputFormat format) {
    switch (format) {
        case OutputFormat::json: return report_json(r);
        case OutputFormat::csv: return report_csv_header() + report_csv_row(r);
        case OutputFormat::human: return report_human(r);
    }
    return {};
}

std::string histogram_csv(const Histogram& h) {
    std::string out = "C,N_count\n";
    for (const auto& e : h.entries) {
        out += std::to_string(e.value) + ',' + std::to_string(e.count) + '\n';
    }
    return out;
}

std::string histogram_json(const Histogram& h) {
    Json arr = Json::array();
    for (const auto& e : h.entries) {
        arr.push_back({{"c", e.value}, {"n", e.count}});
    }
    return arr.dump() + "\n";
}

std::string curves_csv(const std::vector<CurvePoint>& curve) {
    std::string out = "C,N_normal,N_binomial\n";
    for (const auto& p : curve) {
        out += std::to_string(p.value) + ',' + format_number(p.normal) + ',' +
               format_number(p.binomial) + '\n';
    }
    return out;
}

std::string summary_csv(const std::vector<SummaryRow>& rows) {
    std::ostringstream out;
    out << "input,u_bar,u_bar_eq,s_thermo,s_thermo_eq,s_micro_per_bit,s_micro_eq_per_bit,"
           "fit_quality,error\n";
    for (const auto& row : rows) {
        out << csv_quote(row.input) << ',';
        if (row.result) {
            const ThermoReport& t = row.result->report;
            out << format_number(t.u_bar) << ',' << csv_cell(t.u_bar_eq) << ','
                << format_number(t.s_thermo) << ',' << csv_cell(t.s_thermo_eq) << ','
                << format_number(t.s_micro_per_bit) << ',' << csv_cell(t.s_micro_eq_per_bit)
                << ',' << csv_cell(t.fit_quality) << ",\n";
        } else {
            out << ",,,,,,," << csv_quote(row.error) << '\n';
        }
    }
    return out.str();
}

std::string summary_human(const std::vector<SummaryRow>& rows) {
    std::ostringstream out;
    char line[512];
    std::snprintf(line, sizeof line, "%-32s %10s %10s %10s %10s %10s %10s %10s\n", "input", "U",
                  "U_eq", "S_thermo", "S_th_eq", "S_micro/M", "S_mi_eq/M", "fit");
    out << line;
    std::snprintf(line, sizeof line, "%-32s %10s %10s %10s %10s %10s %10s %10s\n", "", "", "",
                  "bits/ptcl", "bits/ptcl", "bits/bit", "bits/bit", "");
    out << line;
    for (const auto& row : rows) {
        if (!row.result) {
            out << row.input << "  ERROR " << row.error << '\n';
            continue;
        }
        const ThermoReport& t = row.result->report;
        std::snprintf(line, sizeof line, "%-32s %10s %10s %10s %10s %10s %10s %10s\n",
                      row.input.c_str(), fixed(t.u_bar, 4).c_str(), fixed(t.u_bar_eq, 4).c_str(),
                      fixed(t.s_thermo, 3).c_str(), fixed(t.s_thermo_eq, 3).c_str(),
                      fixed(t.s_micro_per_bit, 4).c_str(),
                      fixed(t.s_micro_eq_per_bit, 4).c_str(), fixed(t.fit_quality, 4).c_str());
        out << line;
    }
    return out.str();
}

}  // namespace strtherm
