#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wrpoly/errors.hpp"
#include "wrpoly/physics.hpp"
#include "wrpoly/racah.hpp"
#include "wrpoly/wilson.hpp"

namespace {

using json = nlohmann::ordered_json;

constexpr double kPi = 3.14159265358979323846;

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::fputs(text.c_str(), stdout);
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw wr::ParamError("cannot open output file: " + out_path);
    f << text;
}

std::vector<double> parse_csv_doubles(const std::string& text, size_t count, const char* flag) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
        char* end = nullptr;
        const double v = std::strtod(piece.c_str(), &end);
        if (piece.empty() || end != piece.c_str() + piece.size()) {
            throw wr::ParamError(std::string(flag) + ": expected comma-separated numbers, got '" +
                                 text + "'");
        }
        out.push_back(v);
    }
    if (out.size() != count) {
        throw wr::ParamError(std::string(flag) + ": expected " + std::to_string(count) +
                             " numbers, got " + std::to_string(out.size()));
    }
    return out;
}

struct GridSpec {
    double lo = 0.0;
    double hi = 0.0;
    int count = 0;
};

GridSpec parse_grid(const std::string& text) {
    std::vector<std::string> pieces;
    std::stringstream ss(text);
    std::string piece;
    while (std::getline(ss, piece, ':')) pieces.push_back(piece);
    if (pieces.size() != 3) throw wr::ParamError("--grid: expected lo:hi:count, got '" + text + "'");
    GridSpec g;
    char* end = nullptr;
    g.lo = std::strtod(pieces[0].c_str(), &end);
    if (pieces[0].empty() || end != pieces[0].c_str() + pieces[0].size()) {
        throw wr::ParamError("--grid: lo is not a number");
    }
    g.hi = std::strtod(pieces[1].c_str(), &end);
    if (pieces[1].empty() || end != pieces[1].c_str() + pieces[1].size()) {
        throw wr::ParamError("--grid: hi is not a number");
    }
    const long n = std::strtol(pieces[2].c_str(), &end, 10);
    if (pieces[2].empty() || end != pieces[2].c_str() + pieces[2].size()) {
        throw wr::ParamError("--grid: count is not an integer");
    }
    if (!(g.hi > g.lo)) throw wr::ParamError("--grid: hi > lo violated");
    if (n < 2 || n > 10000000) throw wr::ParamError("--grid: 2 <= count <= 1e7 violated");
    g.count = static_cast<int>(n);
    return g;
}

std::vector<double> make_grid(const GridSpec& g) {
    std::vector<double> x(static_cast<size_t>(g.count));
    for (int i = 0; i < g.count; ++i) {
        x[static_cast<size_t>(i)] = g.lo + (g.hi - g.lo) * i / (g.count - 1);
    }
    return x;
}

struct EvalOptions {
    std::string family;
    int n = 0;
    double y2 = 0.0;
    int m = 0;
    std::string params = "0.7,0.2,0.5,0.3";
    std::string racah_params = "0.7,10.3,0.5";
    int N = 10;
    bool normalized = false;
    std::string format = "csv";
    std::string out;
};

int run_eval(const EvalOptions& o, bool have_y2, bool have_m) {
    std::string text;
    if (o.family == "wilson") {
        if (!have_y2) throw wr::ParamError("eval: --y2 is required for --family wilson");
        if (o.n < 0) throw wr::ParamError("eval: --n >= 0 violated");
        const std::vector<double> v = parse_csv_doubles(o.params, 4, "--params");
        const wr::WilsonParams p{v[0], v[1], v[2], v[3]};
        wr::validate_wilson_params(p);
        wr::WilsonValueTable table = wr::wilson_recursion(o.n, o.y2, p);
        if (o.normalized) table = wr::wilson_normalize(table);
        if (o.format == "json") {
            json doc;
            doc["family"] = "wilson";
            doc["params"] = {{"mu", p.mu}, {"nu", p.nu}, {"a", p.a}, {"b", p.b}};
            doc["y2"] = o.y2;
            doc["normalized"] = o.normalized;
            doc["columns"] = {"n", "value"};
            json rows = json::array();
            for (int n = 0; n <= o.n; ++n) {
                rows.push_back(json::array({n, table.values[static_cast<size_t>(n)]}));
            }
            doc["rows"] = rows;
            text = doc.dump(2) + "\n";
        } else {
            text += "# family=wilson\n";
            text += "# mu=" + fmt(p.mu) + "\n";
            text += "# nu=" + fmt(p.nu) + "\n";
            text += "# a=" + fmt(p.a) + "\n";
            text += "# b=" + fmt(p.b) + "\n";
            text += "# y2=" + fmt(o.y2) + "\n";
            text += std::string("# normalized=") + (o.normalized ? "1" : "0") + "\n";
            text += "n,value\n";
            for (int n = 0; n <= o.n; ++n) {
                text += std::to_string(n) + "," + fmt(table.values[static_cast<size_t>(n)]) + "\n";
            }
        }
    } else {
        if (!have_m) throw wr::ParamError("eval: --m is required for --family racah");
        const std::vector<double> v = parse_csv_doubles(o.racah_params, 3, "--racah-params");
        const wr::RacahParams r = wr::make_racah_params(v[0], v[1], v[2], o.N);
        if (o.m < 0 || o.m > r.N) throw wr::ParamError("eval: 0 <= m <= N violated");
        if (o.n < 0 || o.n > r.N) throw wr::ParamError("eval: 0 <= n <= N violated");
        std::vector<double> column;
        std::vector<int> signs;
        if (o.normalized) {
            const wr::RacahTable table = wr::racah_normalize(r);
            for (int n = 0; n <= o.n; ++n) {
                column.push_back(table.value(n, o.m));
                signs.push_back(table.row_signs[static_cast<size_t>(n)]);
            }
        } else {
            column = wr::racah_recursion(r, o.m);
            column.resize(static_cast<size_t>(o.n) + 1);
        }
        if (o.format == "json") {
            json doc;
            doc["family"] = "racah";
            doc["params"] = {{"alpha", r.alpha}, {"beta", r.beta}, {"gamma", r.gamma},
                             {"delta", r.delta}, {"N", r.N}};
            doc["m"] = o.m;
            doc["normalized"] = o.normalized;
            doc["columns"] = o.normalized ? json{"n", "value", "metric_sign"} : json{"n", "value"};
            json rows = json::array();
            for (int n = 0; n <= o.n; ++n) {
                if (o.normalized) {
                    rows.push_back(json::array({n, column[static_cast<size_t>(n)],
                                                signs[static_cast<size_t>(n)]}));
                } else {
                    rows.push_back(json::array({n, column[static_cast<size_t>(n)]}));
                }
            }
            doc["rows"] = rows;
            text = doc.dump(2) + "\n";
        } else {
            text += "# family=racah\n";
            text += "# alpha=" + fmt(r.alpha) + "\n";
            text += "# beta=" + fmt(r.beta) + "\n";
            text += "# gamma=" + fmt(r.gamma) + "\n";
            text += "# delta=" + fmt(r.delta) + "\n";
            text += "# N=" + std::to_string(r.N) + "\n";
            text += "# m=" + std::to_string(o.m) + "\n";
            text += std::string("# normalized=") + (o.normalized ? "1" : "0") + "\n";
            text += o.normalized ? "n,value,metric_sign\n" : "n,value\n";
            for (int n = 0; n <= o.n; ++n) {
                text += std::to_string(n) + "," + fmt(column[static_cast<size_t>(n)]);
                if (o.normalized) text += "," + std::to_string(signs[static_cast<size_t>(n)]);
                text += "\n";
            }
        }
    }
    emit(text, o.out);
    return 0;
}

struct CheckOptions {
    std::string relation;
    int nmax = -1;
    double tol = -1.0;
    std::string params;
    std::string racah_params = "0.7,10.3,0.5";
    int N = 10;
    std::string out;
};

int run_check(const CheckOptions& o, double working_tol) {
    double residual = 0.0;
    double tolerance = 0.0;
    json pjson;
    if (o.relation == "a4") {
        const std::string text = o.params.empty() ? "0.7,0.2,0.5,0.3" : o.params;
        const std::vector<double> v = parse_csv_doubles(text, 4, "--params");
        const wr::WilsonParams p{v[0], v[1], v[2], v[3]};
        const int nmax = o.nmax < 0 ? 8 : o.nmax;
        residual = wr::wilson_orthogonality_matrix(nmax, p, working_tol).max_deviation;
        tolerance = o.tol > 0.0 ? o.tol : 1e-6;
        pjson = {{"mu", p.mu}, {"nu", p.nu}, {"a", p.a}, {"b", p.b}, {"n_max", nmax}};
    } else if (o.relation == "eq7") {
        const std::string text = o.params.empty() ? "-0.5,1.2,1.0,0.8" : o.params;
        const std::vector<double> v = parse_csv_doubles(text, 4, "--params");
        const wr::WilsonParams p{v[0], v[1], v[2], v[3]};
        const int nmax = o.nmax < 0 ? 4 : o.nmax;
        residual = wr::mixed_orthogonality_check(p, nmax, working_tol);
        tolerance = o.tol > 0.0 ? o.tol : 1e-6;
        pjson = {{"mu", p.mu}, {"nu", p.nu}, {"a", p.a}, {"b", p.b}, {"n_max", nmax}};
    } else {
        const std::vector<double> v = parse_csv_doubles(o.racah_params, 3, "--racah-params");
        const wr::RacahParams r = wr::make_racah_params(v[0], v[1], v[2], o.N);
        pjson = {{"alpha", r.alpha}, {"beta", r.beta}, {"gamma", r.gamma}, {"delta", r.delta},
                 {"N", r.N}};
        if (o.relation == "a13") {
            residual = wr::racah_orthogonality_check(r).primal;
            tolerance = o.tol > 0.0 ? o.tol : 1e-9;
        } else if (o.relation == "a18") {
            residual = wr::racah_orthogonality_check(r).dual;
            tolerance = o.tol > 0.0 ? o.tol : 1e-9;
        } else {
            residual = wr::racah_gram_deviation(wr::racah_normalize(r));
            tolerance = o.tol > 0.0 ? o.tol : 1e-10;
        }
    }
    const bool pass = residual <= tolerance;
    json doc;
    doc["relation"] = o.relation;
    doc["params"] = pjson;
    doc["residual"] = residual;
    doc["tolerance"] = tolerance;
    doc["pass"] = pass;
    emit(doc.dump(2) + "\n", o.out);
    return pass ? 0 : 1;
}

struct FigureOptions {
    int id = 0;
    std::string grid;
    std::string format = "csv";
    std::string out;
};

std::string render_table(const std::vector<std::string>& header,
                         const std::vector<std::string>& columns,
                         const std::vector<std::vector<double>>& rows) {
    std::string text;
    for (const std::string& h : header) text += "# " + h + "\n";
    for (size_t c = 0; c < columns.size(); ++c) {
        text += columns[c];
        text += c + 1 < columns.size() ? "," : "\n";
    }
    for (const std::vector<double>& row : rows) {
        for (size_t c = 0; c < row.size(); ++c) {
            text += fmt(row[c]);
            text += c + 1 < row.size() ? "," : "\n";
        }
    }
    return text;
}

int run_figure(const FigureOptions& o) {
    std::vector<std::string> header;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    json pjson;
    if (o.id == 1) {
        const wr::WilsonParams p{0.7, 0.2, 0.5, 0.3};
        const GridSpec g = o.grid.empty() ? GridSpec{0.01, 5.0, 500} : parse_grid(o.grid);
        const std::vector<double> ys = make_grid(g);
        header = {"figure=1", "mu=" + fmt(p.mu), "nu=" + fmt(p.nu), "a=" + fmt(p.a),
                  "b=" + fmt(p.b)};
        columns = {"y", "delta_over_pi"};
        for (double y : ys) rows.push_back({y, wr::phase_shift(y, p) / kPi});
        pjson = {{"mu", p.mu}, {"nu", p.nu}, {"a", p.a}, {"b", p.b}};
    } else {
        const wr::RacahParams r = wr::make_racah_params(0.7, 10.3, 0.5, 10);
        wr::BasisSpec spec;
        GridSpec g;
        std::string coord;
        if (o.id == 2) {
            spec.kind = wr::BasisKind::hermite1d;
            g = {-6.0, 6.0, 481};
            coord = "x";
        } else {
            spec.kind = wr::BasisKind::laguerre_radial;
            spec.ell = 1;
            g = {0.0, 16.0, 481};
            coord = "r";
        }
        spec.lambda = 1.0;
        if (!o.grid.empty()) g = parse_grid(o.grid);
        const std::vector<double> xs = make_grid(g);
        std::vector<wr::WavefunctionGrid> states;
        for (int m = 0; m < 4; ++m) states.push_back(wr::synthesize_bound_state(r, m, spec, xs));
        header = {"figure=" + std::to_string(o.id), "alpha=" + fmt(r.alpha), "beta=" + fmt(r.beta),
                  "gamma=" + fmt(r.gamma), "delta=" + fmt(r.delta), "N=" + std::to_string(r.N),
                  std::string("basis=") + (o.id == 2 ? "hermite1d" : "laguerre_radial"),
                  "lambda=" + fmt(spec.lambda)};
        if (o.id == 3) header.push_back("ell=" + std::to_string(spec.ell));
        columns = {coord, "psi0", "psi1", "psi2", "psi3"};
        for (size_t i = 0; i < xs.size(); ++i) {
            std::vector<double> row = {xs[i]};
            for (int m = 0; m < 4; ++m) row.push_back(states[static_cast<size_t>(m)].values[i]);
            rows.push_back(row);
        }
        pjson = {{"alpha", r.alpha}, {"beta", r.beta}, {"gamma", r.gamma}, {"delta", r.delta},
                 {"N", r.N}, {"basis", o.id == 2 ? "hermite1d" : "laguerre_radial"},
                 {"lambda", spec.lambda}};
        if (o.id == 3) pjson["ell"] = spec.ell;
    }
    std::string text;
    if (o.format == "json") {
        json doc;
        doc["figure"] = o.id;
        doc["params"] = pjson;
        doc["columns"] = columns;
        json jrows = json::array();
        for (const std::vector<double>& row : rows) jrows.push_back(row);
        doc["rows"] = jrows;
        text = doc.dump(2) + "\n";
    } else {
        text = render_table(header, columns, rows);
    }
    emit(text, o.out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Wilson and Racah polynomial toolkit"};
    app.require_subcommand(1);

    EvalOptions eo;
    CheckOptions co;
    FigureOptions fo;

    CLI::App* eval_cmd = app.add_subcommand("eval", "Tabulate one family member per index");
    eval_cmd->add_option("--family", eo.family, "wilson or racah")
        ->required()
        ->check(CLI::IsMember({"wilson", "racah"}));
    eval_cmd->add_option("--n", eo.n, "largest index; rows cover 0..n")->required();
    CLI::Option* y2_opt = eval_cmd->add_option("--y2", eo.y2, "argument y^2 (wilson)");
    CLI::Option* m_opt = eval_cmd->add_option("--m", eo.m, "grid point m (racah)");
    eval_cmd->add_option("--params", eo.params, "mu,nu,a,b (wilson)");
    eval_cmd->add_option("--racah-params", eo.racah_params, "alpha,beta,gamma (racah)");
    eval_cmd->add_option("--N", eo.N, "racah top index");
    eval_cmd->add_flag("--normalized", eo.normalized, "orthonormalized values");
    eval_cmd->add_option("--format", eo.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    eval_cmd->add_option("--out", eo.out, "output path (default stdout)");

    CLI::App* check_cmd = app.add_subcommand("check", "Evaluate one orthogonality relation");
    check_cmd->add_option("--relation", co.relation, "a4, a13, a17, a18 or eq7")
        ->required()
        ->check(CLI::IsMember({"a4", "a13", "a17", "a18", "eq7"}));
    check_cmd->add_option("--nmax", co.nmax, "largest index in the pair sweep");
    check_cmd->add_option("--tol", co.tol, "pass threshold (per-relation default)");
    check_cmd->add_option("--params", co.params, "mu,nu,a,b (a4, eq7)");
    check_cmd->add_option("--racah-params", co.racah_params, "alpha,beta,gamma (a13, a17, a18)");
    check_cmd->add_option("--N", co.N, "racah top index");
    check_cmd->add_option("--out", co.out, "report path (default stdout)");

    CLI::App* fig_cmd = app.add_subcommand("figure", "Emit reference figure data");
    fig_cmd->add_option("--id", fo.id, "1: phase shift; 2: oscillator states; 3: radial states")
        ->required()
        ->check(CLI::Range(1, 3));
    fig_cmd->add_option("--grid", fo.grid, "lo:hi:count");
    fig_cmd->add_option("--format", fo.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    fig_cmd->add_option("--out", fo.out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    double working_tol = 1e-8;
    if (const char* env = std::getenv("WR_TOL")) {
        char* end = nullptr;
        working_tol = std::strtod(env, &end);
        if (end == env || *end != '\0' || !(working_tol > 0.0)) {
            std::fprintf(stderr, "wr: WR_TOL must be a positive number\n");
            return 2;
        }
    }

    try {
        if (eval_cmd->parsed()) return run_eval(eo, y2_opt->count() > 0, m_opt->count() > 0);
        if (check_cmd->parsed()) return run_check(co, working_tol);
        return run_figure(fo);
    } catch (const wr::Error& e) {
        std::fprintf(stderr, "wr: %s\n", e.what());
        return 2;
    }
}
