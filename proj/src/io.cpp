#include "netsel/io.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace netsel {

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ',')) out.push_back(trim(field));
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

double parse_double(const std::string& text, std::size_t line, const std::string& column) {
    double v = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (text.empty() || ec != std::errc{} || ptr != last)
        throw ParseError("line " + std::to_string(line) + ", column '" + column + "': '" + text +
                         "' is not a number");
    return v;
}

const std::vector<std::string>& matrix_header() {
    static const std::vector<std::string> h{"rat", "cb", "s", "dr", "d", "j", "plr"};
    return h;
}

void write_weight_row(std::ostream& out, const std::string& name, const WeightVector& w) {
    out << name;
    for (Eigen::Index j = 0; j < w.size(); ++j) out << ',' << format_number(w[j]);
    out << '\n';
}

}  // namespace

std::string format_number(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc{}) return "nan";
    return std::string(buf, ptr);
}

DecisionMatrix read_matrix_csv(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    // Header: skip blank lines first.
    while (std::getline(in, line)) {
        ++line_no;
        if (!trim(line).empty()) break;
    }
    if (trim(line).empty()) throw ParseError("matrix CSV is empty");
    const auto header = split_csv_line(line);
    const auto& expected = matrix_header();
    for (std::size_t k = 0; k < expected.size(); ++k) {
        if (k >= header.size())
            throw ParseError("header is missing column '" + expected[k] + "'");
        std::string got = header[k];
        for (auto& c : got) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        if (got != expected[k])
            throw ParseError("header column " + std::to_string(k + 1) + ": expected '" + expected[k] +
                             "', found '" + header[k] + "'");
    }
    if (header.size() > expected.size())
        throw ParseError("header has unexpected extra column '" + header[expected.size()] + "'");

    std::vector<std::array<double, kAttributeCount>> rows;
    std::vector<CandidateLabel> labels;
    std::array<int, 4> seen{};
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        const auto fields = split_csv_line(line);
        if (fields.size() != expected.size())
            throw ParseError("line " + std::to_string(line_no) + ": expected " +
                             std::to_string(expected.size()) + " fields, found " +
                             std::to_string(fields.size()));
        Rat rat{};
        try {
            rat = parse_rat(fields[0]);
        } catch (const std::invalid_argument& e) {
            throw ParseError("line " + std::to_string(line_no) + ", column 'rat': " + e.what());
        }
        std::array<double, kAttributeCount> row{};
        for (std::size_t j = 0; j < kAttributeCount; ++j)
            row[j] = parse_double(fields[j + 1], line_no, expected[j + 1]);
        rows.push_back(row);
        labels.push_back({rat, seen[static_cast<std::size_t>(rat)]++});
    }
    if (rows.empty()) throw ParseError("matrix CSV has no candidate rows");

    Eigen::MatrixXd values(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(kAttributeCount));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < kAttributeCount; ++j)
            values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
    return DecisionMatrix(std::move(values), std::move(labels));
}

DecisionMatrix read_matrix_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open matrix file '" + path + "'");
    return read_matrix_csv(in);
}

void write_matrix_csv(std::ostream& out, const DecisionMatrix& dm) {
    const auto& h = matrix_header();
    for (std::size_t k = 0; k < h.size(); ++k) out << (k ? "," : "") << h[k];
    out << '\n';
    for (Eigen::Index i = 0; i < dm.rows(); ++i) {
        out << to_string(dm.labels()[static_cast<std::size_t>(i)].rat);
        for (Eigen::Index j = 0; j < dm.cols(); ++j) out << ',' << format_number(dm(i, j));
        out << '\n';
    }
}

void write_weights_csv(std::ostream& out, const std::vector<NamedWeights>& rows) {
    out << "name";
    for (const auto& a : kAttributes) out << ',' << a.key;
    out << '\n';
    for (const auto& r : rows) write_weight_row(out, r.name, r.weights);
}

void write_weights_json(std::ostream& out, const std::vector<NamedWeights>& rows) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& r : rows) {
        nlohmann::ordered_json w = nlohmann::ordered_json::object();
        for (std::size_t k = 0; k < kAttributeCount; ++k)
            w[std::string(kAttributes[k].key)] = r.weights[static_cast<Eigen::Index>(k)];
        j[r.name] = std::move(w);
    }
    out << j.dump(2) << '\n';
}

void write_stats_csv(std::ostream& out, const std::vector<RrpStats>& stats) {
    out << "method,weighting,class,removal,iterations,incidence,step_ratio\n";
    for (const auto& s : stats) {
        out << to_string(s.key.method) << ',' << to_string(s.key.weighting) << ','
            << to_string(s.key.traffic_class) << ',' << to_string(s.key.removal) << ','
            << s.total_iterations << ',' << format_number(s.incidence()) << ','
            << format_number(s.step_ratio()) << '\n';
    }
}

void write_stats_json(std::ostream& out, const std::vector<RrpStats>& stats, const ExperimentConfig& cfg) {
    using nlohmann::ordered_json;
    ordered_json j;
    j["metrics"] = {
        {"incidence", "fraction of iterations with at least one rank reversal along the removal chain"},
        {"step_ratio", "fraction of removal steps that produced a rank reversal"},
        {"note", "two candidate definitions of the rank-reversal ratio; both are reported"},
    };
    j["config"] = {
        {"iterations", cfg.iterations},
        {"seed", cfg.seed},
        {"networks", cfg.scenario.networks_per_iteration},
        {"chain", cfg.chain},
        {"reweight_per_step", cfg.reweight_per_step},
        {"alpha", cfg.hybrid.alpha},
        {"beta", cfg.hybrid.beta},
        {"pack_size", cfg.gwo.pack_size},
        {"gwo_iters", cfg.gwo.iterations},
        {"penalty", cfg.gwo.penalty_coeff},
    };
    ordered_json rows = ordered_json::array();
    for (const auto& s : stats) {
        rows.push_back({
            {"method", to_string(s.key.method)},
            {"weighting", to_string(s.key.weighting)},
            {"class", to_string(s.key.traffic_class)},
            {"removal", to_string(s.key.removal)},
            {"iterations", s.total_iterations},
            {"iterations_with_reversal", s.iterations_with_reversal},
            {"total_steps", s.total_steps},
            {"reversal_steps", s.reversal_steps},
            {"incidence", s.incidence()},
            {"step_ratio", s.step_ratio()},
        });
    }
    j["stats"] = std::move(rows);
    out << j.dump(2) << '\n';
}

}  // namespace netsel
