#include "zclass/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <ostream>

#include "CLI11.hpp"
#include "zclass/circulant.hpp"
#include "zclass/classify.hpp"
#include "zclass/construct.hpp"
#include "zclass/geninv.hpp"
#include "zclass/io.hpp"
#include "zclass/lcp.hpp"
#include "zclass/linalg.hpp"

namespace zclass {
namespace {

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty())
        out << text;
    else
        write_text_file(out_path, text);
}

std::string dumped(const nlohmann::json& j) { return j.dump(2) + "\n"; }

std::vector<Rat> parse_rat_list(const std::string& text) {
    std::vector<Rat> values;
    std::string cur;
    auto flush = [&] {
        values.push_back(rat_parse(cur));
        cur.clear();
    };
    for (char ch : text) {
        if (ch == ',')
            flush();
        else
            cur += ch;
    }
    flush();
    return values;
}

ClassLabel label_from_cli(const std::string& name) {
    auto label = class_label_from_name(name);
    if (!label) throw input_error("unknown class name '" + name + "'");
    return *label;
}

std::vector<ClassLabel> labels_from_cli(const std::string& csv, int trace_class) {
    if (csv.empty()) {
        if (trace_class == -1)
            return {ClassLabel::F0, ClassLabel::InverseN0, ClassLabel::InverseF0, ClassLabel::N0};
        return {ClassLabel::InverseM, ClassLabel::M};
    }
    std::vector<ClassLabel> labels;
    std::string cur;
    auto flush = [&] {
        labels.push_back(label_from_cli(cur));
        cur.clear();
    };
    for (char ch : csv) {
        if (ch == ',')
            flush();
        else
            cur += ch;
    }
    flush();
    return labels;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact classifier and toolkit for Z-matrix subclasses"};
    app.name("zclass");
    app.require_subcommand(1);

    std::string matrix_path, q_path, out_path, method = "frf";
    std::string class_name, labels_csv, a_text, b_path, c_path, alpha_text;
    std::string a_value, t_value, amin = "-2", amax = "3", tmin = "-3", tmax = "3", step = "1/4";
    int trace_class = -1;
    int decimal_places = 6;
    std::uint64_t seed = 0;
    std::size_t gen_n = 3, probe_n = 0, count = 1, trials = 100;

    auto add_out = [&](CLI::App* cmd) {
        cmd->add_option("--out", out_path, "Write the result to this file instead of stdout");
    };
    auto add_matrix = [&](CLI::App* cmd) {
        cmd->add_option("--matrix", matrix_path, "Matrix file (.json or .csv)")->required();
    };
    auto add_seed = [&](CLI::App* cmd) {
        cmd->add_option("--seed", seed, "RNG seed")->envname("ZCLASS_SEED");
    };

    CLI::App* classify_cmd = app.add_subcommand("classify", "Class membership report");
    add_matrix(classify_cmd);
    add_out(classify_cmd);

    CLI::App* inverse_cmd = app.add_subcommand("inverse", "Exact inverse");
    add_matrix(inverse_cmd);
    add_out(inverse_cmd);

    CLI::App* pinv_cmd = app.add_subcommand("pinv", "Moore-Penrose inverse");
    add_matrix(pinv_cmd);
    pinv_cmd->add_option("--method", method, "frf or greville")
        ->check(CLI::IsMember({"frf", "greville"}));
    add_out(pinv_cmd);

    CLI::App* ginv_cmd = app.add_subcommand("ginv", "Group inverse");
    add_matrix(ginv_cmd);
    add_out(ginv_cmd);

    CLI::App* lcp_cmd = app.add_subcommand("lcp", "Linear complementarity tools");
    lcp_cmd->require_subcommand(1);
    CLI::App* lcp_solve_cmd = lcp_cmd->add_subcommand("solve", "Enumerate all solutions");
    add_matrix(lcp_solve_cmd);
    lcp_solve_cmd->add_option("--q", q_path, "Vector file (JSON array)")->required();
    add_out(lcp_solve_cmd);
    CLI::App* lcp_props_cmd = lcp_cmd->add_subcommand("props", "R0 / semimonotone / Q0 witness");
    add_matrix(lcp_props_cmd);
    add_out(lcp_props_cmd);

    CLI::App* circ_cmd = app.add_subcommand("circulant", "3x3 circulant class regions");
    circ_cmd->require_subcommand(1);
    CLI::App* region_cmd = circ_cmd->add_subcommand("region", "Point membership");
    region_cmd->add_option("--class", class_name, "Class label, e.g. f0 or inverse-n0")->required();
    region_cmd->add_option("--trace", trace_class, "Trace class: -1 or 1")
        ->check(CLI::IsMember({-1, 1}));
    region_cmd->add_option("--a", a_value, "Real part a")->required();
    region_cmd->add_option("--t", t_value, "Scaled imaginary part t = sqrt(3) b")->required();
    add_out(region_cmd);
    CLI::App* grid_cmd = circ_cmd->add_subcommand("grid", "CSV region sweep");
    grid_cmd->add_option("--amin", amin, "Grid lower bound for a");
    grid_cmd->add_option("--amax", amax, "Grid upper bound for a");
    grid_cmd->add_option("--tmin", tmin, "Grid lower bound for t");
    grid_cmd->add_option("--tmax", tmax, "Grid upper bound for t");
    grid_cmd->add_option("--step", step, "Grid step (positive rational)");
    grid_cmd->add_option("--labels", labels_csv, "Comma list of class labels");
    grid_cmd->add_option("--trace", trace_class, "Trace class: -1 or 1")
        ->check(CLI::IsMember({-1, 1}));
    grid_cmd->add_option("--decimal-places", decimal_places,
                         "Decimal rendering width, exact p/q fallback");
    add_out(grid_cmd);

    CLI::App* construct_cmd = app.add_subcommand("construct", "Constructors and generators");
    construct_cmd->require_subcommand(1);
    CLI::App* typed_cmd = construct_cmd->add_subcommand("type-d", "Matrix from a_1 < ... < a_n");
    typed_cmd->add_option("--a", a_text, "Comma list, e.g. \"-3,-2,-1,1\"")->required();
    add_out(typed_cmd);
    CLI::App* border_cmd =
        construct_cmd->add_subcommand("border", "Border an invertible M-matrix into an N-matrix");
    add_matrix(border_cmd);
    border_cmd->add_option("--alpha", alpha_text, "Border weight, default midpoint");
    add_out(border_cmd);
    CLI::App* singf0_cmd =
        construct_cmd->add_subcommand("singular-f0", "Assemble [[A, b], [c^T, 0]]");
    singf0_cmd->add_option("--a", matrix_path, "N0 block file")->required();
    singf0_cmd->add_option("--b", b_path, "Nonpositive column file")->required();
    singf0_cmd->add_option("--c", c_path, "Nonpositive row file")->required();
    add_out(singf0_cmd);
    CLI::App* rand_cmd = construct_cmd->add_subcommand("rand", "Random verified class instances");
    rand_cmd->add_option("--class", class_name, "Generator label")
        ->required()
        ->check(CLI::IsMember({"z", "invertible-m", "n0", "f0-singular-reducible",
                               "f0-singular-irreducible-3x3", "h", "type-d-inv-n0",
                               "type-d-inv-f0"}));
    rand_cmd->add_option("--n", gen_n, "Matrix order")->required();
    add_seed(rand_cmd);
    rand_cmd->add_option("--count", count, "Number of instances");
    add_out(rand_cmd);

    CLI::App* probe_cmd = app.add_subcommand("probe", "Randomized conjecture probes");
    probe_cmd->require_subcommand(1);
    CLI::App* ostrow_cmd =
        probe_cmd->add_subcommand("reverse-ostrowski", "Entrywise bound on comparison inverses");
    ostrow_cmd->add_option("--trials", trials, "Number of sampled matrices");
    add_seed(ostrow_cmd);
    ostrow_cmd->add_option("--n", probe_n, "Matrix order (<= 6)");
    add_out(ostrow_cmd);
    CLI::App* fan_cmd = probe_cmd->add_subcommand("fan-f0", "Shifted-F0 truth table");
    fan_cmd->add_option("--trials", trials, "Number of sampled matrices");
    add_seed(fan_cmd);
    fan_cmd->add_option("--n", probe_n, "Matrix order (>= 3)");
    add_out(fan_cmd);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::Success& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (classify_cmd->parsed()) {
            emit(dumped(report_to_json(classify_all(read_matrix_file(matrix_path)))), out_path,
                 out);
        } else if (inverse_cmd->parsed()) {
            emit(dumped(matrix_to_json(inverse(read_matrix_file(matrix_path)))), out_path, out);
        } else if (pinv_cmd->parsed()) {
            RatMatrix m = read_matrix_file(matrix_path);
            PseudoInverseResult res =
                (method == "greville") ? moore_penrose_greville(m) : moore_penrose(m);
            emit(dumped(pseudo_inverse_to_json(res)), out_path, out);
        } else if (ginv_cmd->parsed()) {
            RatMatrix m = read_matrix_file(matrix_path);
            GroupInverseResult res = group_inverse(m);
            if (!res.exists) throw domain_error("group inverse does not exist: " + res.certificate);
            emit(dumped(group_inverse_to_json(res, m)), out_path, out);
        } else if (lcp_solve_cmd->parsed()) {
            LCPInstance inst{read_matrix_file(matrix_path), read_vector_file(q_path)};
            emit(dumped(lcp_outcome_to_json(solve_enumerate(inst))), out_path, out);
        } else if (lcp_props_cmd->parsed()) {
            RatMatrix m = read_matrix_file(matrix_path);
            emit(dumped(lcp_props_to_json(is_R0(m), is_semimonotone(m), q0_necessary_witness(m))),
                 out_path, out);
        } else if (region_cmd->parsed()) {
            CirculantPoint pt{rat_parse(a_value), rat_parse(t_value)};
            RegionVerdict verdict = region(pt, label_from_cli(class_name), trace_class);
            emit(dumped(region_to_json(pt, trace_class, verdict)), out_path, out);
        } else if (grid_cmd->parsed()) {
            GridBounds bounds{rat_parse(amin), rat_parse(amax), rat_parse(tmin), rat_parse(tmax)};
            std::string csv = emit_region_grid(bounds, rat_parse(step),
                                               labels_from_cli(labels_csv, trace_class),
                                               trace_class, decimal_places);
            emit(csv, out_path, out);
        } else if (typed_cmd->parsed()) {
            emit(dumped(matrix_to_json(make_type_d({parse_rat_list(a_text)}))), out_path, out);
        } else if (border_cmd->parsed()) {
            BorderSpec spec{read_matrix_file(matrix_path), std::nullopt};
            if (!alpha_text.empty()) spec.alpha = rat_parse(alpha_text);
            emit(dumped(border_to_json(border_m_to_n(spec))), out_path, out);
        } else if (singf0_cmd->parsed()) {
            SingularF0Result res = make_singular_f0(
                read_matrix_file(matrix_path), read_vector_file(b_path), read_vector_file(c_path));
            if (!res.accepted) throw domain_error("rejected: " + res.reject_reason);
            emit(dumped(nlohmann::json{{"accepted", true},
                                       {"matrix", matrix_to_json(res.form->assemble())}}),
                 out_path, out);
        } else if (rand_cmd->parsed()) {
            GenLabel label = *gen_label_from_name(class_name);
            std::vector<RatMatrix> instances = rand_instances(label, gen_n, seed, count);
            nlohmann::json arr = nlohmann::json::array();
            for (const RatMatrix& m : instances) arr.push_back(matrix_to_json(m));
            emit(dumped(nlohmann::json{{"class", class_name},
                                       {"n", gen_n},
                                       {"seed", seed},
                                       {"count", count},
                                       {"instances", std::move(arr)}}),
                 out_path, out);
        } else if (ostrow_cmd->parsed()) {
            if (probe_n == 0) probe_n = 4;
            emit(dumped(ostrowski_report_to_json(probe_reverse_ostrowski(seed, trials, probe_n))),
                 out_path, out);
        } else if (fan_cmd->parsed()) {
            if (probe_n == 0) probe_n = 3;
            emit(dumped(fan_report_to_json(probe_fan_f0(seed, trials, probe_n))), out_path, out);
        }
    } catch (const input_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace zclass
