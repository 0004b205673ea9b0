#include "perceptronium/serialization.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

namespace perceptronium {

nlohmann::json matrix_to_json(const Matrix& a) {
    require_square(a, "matrix_to_json");
    nlohmann::json entries = nlohmann::json::array();
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            entries.push_back({a(i, j).real(), a(i, j).imag()});
    return {{"dim", a.rows()}, {"entries", std::move(entries)}};
}

Matrix matrix_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("entries"))
        throw std::invalid_argument("matrix_from_json: expected {dim, entries}");
    const Eigen::Index n = j.at("dim").get<Eigen::Index>();
    const auto& entries = j.at("entries");
    if (n < 1 || !entries.is_array() || static_cast<Eigen::Index>(entries.size()) != n * n)
        throw std::invalid_argument("matrix_from_json: entries size != dim^2");
    Matrix a(n, n);
    Eigen::Index idx = 0;
    for (const auto& e : entries) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("matrix_from_json: entry is not [re, im]");
        a(idx / n, idx % n) = Complex(e[0].get<double>(), e[1].get<double>());
        ++idx;
    }
    return a;
}

nlohmann::json separability_report_to_json(const SeparabilityReport& report) {
    return {{"norms", report.norms},
            {"integration_energy", report.integration_energy},
            {"permutation", report.permutation}};
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string CsvDocument::metadata_value(const std::string& key,
                                        const std::string& fallback) const {
    for (const auto& [k, v] : metadata)
        if (k == key) return v;
    return fallback;
}

void write_csv(std::ostream& os, const CsvDocument& doc) {
    for (const auto& [key, value] : doc.metadata) os << "# " << key << ": " << value << "\n";
    for (std::size_t i = 0; i < doc.header.size(); ++i)
        os << (i ? "," : "") << doc.header[i];
    os << "\n";
    for (const auto& row : doc.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
        os << "\n";
    }
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ',')) out.push_back(field);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

}  // namespace

CsvDocument read_csv(std::istream& is) {
    CsvDocument doc;
    std::string line;
    bool header_seen = false;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::string body = line.substr(1);
            const std::size_t start = body.find_first_not_of(' ');
            if (start == std::string::npos) continue;
            body = body.substr(start);
            const std::size_t colon = body.find(':');
            if (colon == std::string::npos) {
                doc.metadata.emplace_back(body, "");
            } else {
                std::string value = body.substr(colon + 1);
                const std::size_t vstart = value.find_first_not_of(' ');
                doc.metadata.emplace_back(body.substr(0, colon),
                                          vstart == std::string::npos ? ""
                                                                      : value.substr(vstart));
            }
            continue;
        }
        if (!header_seen) {
            doc.header = split_csv_line(line);
            header_seen = true;
        } else {
            doc.rows.push_back(split_csv_line(line));
        }
    }
    return doc;
}

}  // namespace perceptronium
