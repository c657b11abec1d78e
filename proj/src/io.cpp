#include "qpwalk/io.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace qpwalk {

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v,
                             std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

namespace {

std::size_t write_out(const std::string& path, const std::string& payload) {
    if (path == "-" || path.empty()) {
        std::cout << payload;
        std::cout.flush();
        return payload.size();
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f << payload;
    if (!f) throw std::runtime_error("write failed: " + path);
    return payload.size();
}

}  // namespace

std::size_t emit_csv(const std::string& path,
                     const std::vector<std::string>& header,
                     const std::vector<std::vector<std::string>>& rows) {
    std::ostringstream os;
    for (size_t i = 0; i < header.size(); ++i)
        os << header[i] << (i + 1 < header.size() ? "," : "");
    os << "\n";
    for (const auto& r : rows) {
        for (size_t i = 0; i < r.size(); ++i)
            os << r[i] << (i + 1 < r.size() ? "," : "");
        os << "\n";
    }
    return write_out(path, os.str());
}

std::size_t emit_text(const std::string& path, const std::string& payload) {
    return write_out(path, payload);
}

std::vector<std::vector<std::string>> table_rows(const AbsorptionTable& t) {
    std::vector<std::vector<std::string>> rows;
    rows.reserve(t.horizon + 1);
    const bool exact = (t.mode == DpMode::exact);
    for (int k = 0; k <= t.horizon; ++k) {
        if (exact) {
            ExactProb ptau{t.p_S_num[k] + t.p_T_num[k], k};
            rows.push_back({std::to_string(k),
                            t.exact_p_S(k).to_fraction_string(),
                            t.exact_p_T(k).to_fraction_string(),
                            ptau.to_fraction_string(),
                            t.exact_survival(k).to_fraction_string()});
        } else {
            rows.push_back({std::to_string(k), format_double(t.p_S[k]),
                            format_double(t.p_T[k]), format_double(t.p_tau[k]),
                            format_double(t.survival[k])});
        }
    }
    return rows;
}

std::vector<std::vector<std::string>> site_rows(const AbsorptionTable& t) {
    if (!t.has_sites) throw std::runtime_error("site_rows: table has no site data");
    std::vector<std::vector<std::string>> rows;
    const bool exact = (t.mode == DpMode::exact);
    for (int k = 0; k <= t.horizon; ++k) {
        for (size_t i = 1; i < t.site_hits_x[k].size(); ++i) {
            if (t.site_hits_x[k][i] == 0.0) continue;
            rows.push_back({std::to_string(k), "x", std::to_string(i),
                            exact ? ExactProb{t.site_hits_x_num[k][i],
                                              k}.to_fraction_string()
                                  : format_double(t.site_hits_x[k][i])});
        }
        for (size_t j = 1; j < t.site_hits_y[k].size(); ++j) {
            if (t.site_hits_y[k][j] == 0.0) continue;
            rows.push_back({std::to_string(k), "y", std::to_string(j),
                            exact ? ExactProb{t.site_hits_y_num[k][j],
                                              k}.to_fraction_string()
                                  : format_double(t.site_hits_y[k][j])});
        }
    }
    return rows;
}

std::string mc_summary_json(const McSummary& s) {
    nlohmann::ordered_json j;
    j["trials"] = s.trials;
    j["seed"] = s.seed;
    j["cap"] = s.cap;
    j["kmax"] = s.kmax;
    j["truncated"] = s.truncated;
    j["beyond_kmax"] = s.beyond_kmax;
    nlohmann::ordered_json pmf = nlohmann::ordered_json::array();
    for (int k = 0; k <= s.kmax; ++k)
        pmf.push_back({k, s.pmf[k]});
    j["pmf"] = pmf;
    j["mean"] = s.mean;
    return j.dump(2) + "\n";
}

}  // namespace qpwalk
