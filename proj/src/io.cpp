#include "zclass/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace zclass {
namespace {

using nlohmann::json;

std::string trim(const std::string& s) {
    std::size_t first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return "";
    std::size_t last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

mpz_class parse_integer(const std::string& text, const std::string& original) {
    std::string s = text;
    if (!s.empty() && s.front() == '+') s.erase(s.begin());
    if (s.empty()) throw input_error("bad rational entry '" + original + "'");
    std::size_t start = (s.front() == '-') ? 1 : 0;
    if (start == s.size()) throw input_error("bad rational entry '" + original + "'");
    for (std::size_t i = start; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw input_error("bad rational entry '" + original + "'");
    return mpz_class(s);
}

Rat entry_from_json(const json& e) {
    if (e.is_string()) return rat_parse(e.get<std::string>());
    if (e.is_number_integer()) return rat_parse(e.dump());
    throw input_error("matrix entries must be integer or \"p/q\" strings");
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : line) {
        if (ch == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    return parts;
}

}  // namespace

Rat rat_parse(const std::string& text) {
    std::string s = trim(text);
    if (s.empty()) throw input_error("empty rational entry");
    std::size_t slash = s.find('/');
    if (slash == std::string::npos) return Rat(parse_integer(s, text));
    mpz_class num = parse_integer(s.substr(0, slash), text);
    mpz_class den = parse_integer(s.substr(slash + 1), text);
    if (den == 0) throw input_error("zero denominator in '" + text + "'");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

std::string rat_str(const Rat& x) { return x.get_str(); }

std::string rat_decimal(const Rat& x, int places) {
    if (places < 0) places = 0;
    mpz_class pow10 = 1;
    for (int i = 0; i < places; ++i) pow10 *= 10;
    mpz_class scaled_num = x.get_num() * pow10;
    if (!mpz_divisible_p(scaled_num.get_mpz_t(), x.get_den().get_mpz_t()))
        return rat_str(x);
    mpz_class scaled = scaled_num / x.get_den();
    bool negative = scaled < 0;
    mpz_class mag = abs(scaled);
    std::string digits = mag.get_str();
    const std::size_t frac = static_cast<std::size_t>(places);
    if (digits.size() <= frac) digits = std::string(frac + 1 - digits.size(), '0') + digits;
    std::string integer_part = digits.substr(0, digits.size() - frac);
    std::string fraction_part = digits.substr(digits.size() - frac);
    while (!fraction_part.empty() && fraction_part.back() == '0') fraction_part.pop_back();
    std::string out = negative ? "-" : "";
    out += integer_part;
    if (!fraction_part.empty()) out += "." + fraction_part;
    return out;
}

json matrix_to_json(const RatMatrix& m) {
    json data = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rat_str(m(i, j)));
        data.push_back(std::move(row));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

RatMatrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("data"))
        throw input_error("matrix JSON must have rows, cols and data");
    auto nonneg_int = [](const json& v) {
        return v.is_number_integer() && (v.is_number_unsigned() || v.get<long long>() >= 0);
    };
    if (!nonneg_int(j["rows"]) || !nonneg_int(j["cols"]))
        throw input_error("rows and cols must be nonnegative integers");
    const std::size_t rows = j["rows"].get<std::size_t>();
    const std::size_t cols = j["cols"].get<std::size_t>();
    if (rows == 0 || cols == 0) throw input_error("matrix must have positive dimensions");
    const json& data = j["data"];
    if (!data.is_array() || data.size() != rows)
        throw input_error("data must be an array of " + std::to_string(rows) + " rows");
    RatMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const json& row = data[i];
        if (!row.is_array() || row.size() != cols)
            throw input_error("row " + std::to_string(i) + " must have " + std::to_string(cols) +
                              " entries");
        for (std::size_t k = 0; k < cols; ++k) m(i, k) = entry_from_json(row[k]);
    }
    return m;
}

std::string matrix_to_csv(const RatMatrix& m) {
    std::ostringstream out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out << ',';
            out << rat_str(m(i, j));
        }
        out << '\n';
    }
    return out.str();
}

RatMatrix matrix_from_csv(const std::string& text) {
    std::vector<std::vector<Rat>> grid;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (trim(line).empty()) continue;
        std::vector<Rat> row;
        for (const std::string& cell : split(line, ',')) row.push_back(rat_parse(cell));
        grid.push_back(std::move(row));
    }
    if (grid.empty()) throw input_error("CSV matrix has no rows");
    const std::size_t cols = grid.front().size();
    RatMatrix m(grid.size(), cols);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (grid[i].size() != cols) throw input_error("CSV rows have mixed widths");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = grid[i][j];
    }
    return m;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw input_error("cannot write '" + path + "'");
    out << content;
    if (!out) throw input_error("write failed for '" + path + "'");
}

RatMatrix read_matrix_file(const std::string& path) {
    std::string text = read_text_file(path);
    if (path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0)
        return matrix_from_csv(text);
    try {
        return matrix_from_json(json::parse(text));
    } catch (const json::parse_error& e) {
        throw input_error("cannot parse '" + path + "': " + e.what());
    }
}

std::vector<Rat> vector_from_json(const json& j) {
    const json* arr = nullptr;
    if (j.is_array())
        arr = &j;
    else if (j.is_object() && j.contains("data") && j["data"].is_array())
        arr = &j["data"];
    else
        throw input_error("vector JSON must be an array or {\"data\": [...]}");
    std::vector<Rat> v;
    v.reserve(arr->size());
    for (const json& e : *arr) v.push_back(entry_from_json(e));
    if (v.empty()) throw input_error("vector must be nonempty");
    return v;
}

std::vector<Rat> read_vector_file(const std::string& path) {
    try {
        return vector_from_json(json::parse(read_text_file(path)));
    } catch (const json::parse_error& e) {
        throw input_error("cannot parse '" + path + "': " + e.what());
    }
}

json vector_to_json(const std::vector<Rat>& v) {
    json arr = json::array();
    for (const Rat& e : v) arr.push_back(rat_str(e));
    return arr;
}

json report_to_json(const ClassReport& report) {
    json classes = json::object();
    json witnesses = json::object();
    for (const auto& [label, verdict] : report.verdicts) {
        std::string name = class_label_name(label);
        classes[name] = verdict.value;
        if (!verdict.witness.empty()) witnesses[name] = verdict.witness;
    }
    return json{{"class", std::move(classes)}, {"witnesses", std::move(witnesses)}};
}

json pseudo_inverse_to_json(const PseudoInverseResult& res) {
    json j = matrix_to_json(res.pinv);
    j["method"] = res.method;
    j["checks"] = json{{"AXA", res.checks[0]},
                       {"XAX", res.checks[1]},
                       {"AX_symmetric", res.checks[2]},
                       {"XA_symmetric", res.checks[3]}};
    return j;
}

json group_inverse_to_json(const GroupInverseResult& res, const RatMatrix& source) {
    json j;
    j["exists"] = res.exists;
    j["certificate"] = res.certificate;
    if (res.exists && res.ginv) {
        const RatMatrix& x = *res.ginv;
        json body = matrix_to_json(x);
        for (auto& [key, value] : body.items()) j[key] = value;
        j["method"] = "frf";
        j["checks"] = json{{"AXA", (source * x) * source == source},
                           {"XAX", (x * source) * x == x},
                           {"commutes", source * x == x * source}};
    }
    return j;
}

json lcp_outcome_to_json(const LCPOutcome& outcome) {
    json solutions = json::array();
    for (const LCPSolution& s : outcome.solutions) {
        json support = json::array();
        for (std::size_t i : s.support) support.push_back(i);
        solutions.push_back(json{{"x", vector_to_json(s.x)},
                                 {"y", vector_to_json(s.y)},
                                 {"support", std::move(support)},
                                 {"degenerate", s.degenerate}});
    }
    return json{{"feasible", outcome.feasible},
                {"feasible_witness", vector_to_json(outcome.feasible_witness)},
                {"solutions", std::move(solutions)}};
}

json lcp_props_to_json(const BoolWitness& r0, const BoolWitness& semimonotone,
                       const Q0NecessaryWitness& q0) {
    return json{{"r0", json{{"value", r0.value}, {"witness", vector_to_json(r0.witness)}}},
                {"semimonotone", json{{"value", semimonotone.value},
                                      {"witness", vector_to_json(semimonotone.witness)}}},
                {"q0_necessary",
                 json{{"exists", q0.exists}, {"y", vector_to_json(q0.y)}}}};
}

json region_to_json(const CirculantPoint& pt, int trace_class, const RegionVerdict& verdict) {
    return json{{"a", rat_str(pt.a)},
                {"t", rat_str(pt.t)},
                {"class", class_label_name(verdict.label)},
                {"trace", trace_class},
                {"in_region", verdict.in_region},
                {"boundary", verdict.boundary}};
}

json cross_check_to_json(const CrossCheckReport& report) {
    json rows = json::array();
    for (const CrossCheckRecord& rec : report.disagreements)
        rows.push_back(json{{"a", rat_str(rec.point.a)},
                            {"t", rat_str(rec.point.t)},
                            {"class", class_label_name(rec.label)},
                            {"region", rec.region_verdict},
                            {"direct", rec.direct_verdict},
                            {"boundary", rec.boundary}});
    return json{{"points", report.points},
                {"comparisons", report.comparisons},
                {"disagreements", std::move(rows)}};
}

json border_to_json(const BorderResult& res) {
    return json{{"matrix", matrix_to_json(res.m)}, {"q", rat_str(res.q)},
                {"t", rat_str(res.t)},           {"gamma", rat_str(res.gamma)},
                {"delta", rat_str(res.delta)},   {"alpha", rat_str(res.alpha)}};
}

json ostrowski_report_to_json(const OstrowskiProbeReport& report) {
    json rows = json::array();
    for (const OstrowskiCounterexample& c : report.counterexamples)
        rows.push_back(json{{"matrix", matrix_to_json(c.a)},
                            {"i", c.i},
                            {"j", c.j},
                            {"comparison_inverse_entry", rat_str(c.comparison_inverse_entry)},
                            {"abs_inverse_entry", rat_str(c.abs_inverse_entry)}});
    return json{{"probe", "reverse-ostrowski"},
                {"seed", report.seed},
                {"trials", report.trials},
                {"tested", report.tested},
                {"skipped", report.skipped},
                {"counterexamples", std::move(rows)}};
}

json fan_report_to_json(const FanProbeReport& report) {
    json rows = json::array();
    for (const FanRecord& rec : report.records)
        rows.push_back(json{{"matrix", matrix_to_json(rec.a)},
                            {"a_minus_i_f0", rec.a_minus_i_f0},
                            {"i_minus_ainv_f0", rec.i_minus_ainv_f0}});
    return json{{"probe", "fan-f0"},
                {"seed", report.seed},
                {"trials", report.trials},
                {"tested", report.tested},
                {"skipped", report.skipped},
                {"records", std::move(rows)}};
}

}  // namespace zclass
