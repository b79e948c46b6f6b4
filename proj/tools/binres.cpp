#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "binres/inverse_system.hpp"
#include "binres/normal_form.hpp"
#include "binres/resultant.hpp"
#include "binres/rewrite.hpp"
#include "binres/selftest.hpp"
#include "binres/system_io.hpp"

using namespace binres;

namespace {

struct Options {
    bool json = false;
    std::uint64_t seed = 1;

    std::string file;
    unsigned lambda = 2;
    unsigned order = 0;  // 0: take the file's order, else cyclic shift 1..n
    bool dense = false;
    std::string kind = "C";
    std::size_t n = 0;
    bool full = false;
    std::string spec;
    std::string poly;
    std::string which = "G";
    std::vector<std::string> p;
    std::vector<std::string> point;
    unsigned k = 2;
    std::size_t n_max = 5;
};

std::vector<Rational> rationals(const std::vector<std::string>& v, std::size_t want, const std::string& what) {
    std::vector<Rational> out;
    for (const auto& s : v) out.push_back(parse_rational(s));
    if (want && out.size() != want)
        throw DimensionMismatchError(what + " needs " + std::to_string(want) + " values, got " + std::to_string(out.size()));
    return out;
}

DualKind dual_kind(const std::string& s) {
    if (s == "F") return DualKind::F;
    if (s == "G") return DualKind::G;
    throw ValidationError("--which must be F or G");
}

IndexOrder pick_order(const SystemSpec& spec, unsigned k) {
    if (k) return IndexOrder::cyclic(spec.n, k);
    return spec.order ? *spec.order : IndexOrder::identity(spec.n);
}

Json strings(const std::vector<RationalXPoly>& v, const std::vector<std::string>& names) {
    Json out = Json::array();
    for (const auto& f : v) out.push_back(f.str(names));
    return out;
}

Json matrix_json(const RationalMatrix& m) {
    Json out = Json::array();
    for (const auto& row : m) {
        Json r = Json::array();
        for (const auto& x : row) r.push_back(to_string(x));
        out.push_back(std::move(r));
    }
    return out;
}

void emit(const Options& o, const Json& j, const std::string& text) {
    if (o.json) std::cout << j.dump(2) << "\n";
    else std::cout << text;
}

std::string join(const std::vector<std::size_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

int cmd_resultant(const Options& o) {
    const auto spec = parse_system(read_file(o.file));
    const auto sys = spec.system();
    const auto r = resultant_details(sys);
    Json j;
    j["n"] = spec.n;
    j["resultant"] = r.value.str();
    j["degree"] = r.value.degree();
    j["factored"] = factored_to_json(r.value);
    Json per = Json::array();
    for (std::size_t i = 0; i < r.orders.size(); ++i) per.push_back({{"order", r.orders[i].str()}, {"delta", r.deltas[i].str()}});
    j["delta_top"] = std::move(per);
    std::string text = r.value.str() + "\n";
    if (sys.is_specialized()) {
        const Rational v = r.value.evaluate(sys.assignment());
        j["value"] = to_string(v);
        text += "value = " + to_string(v) + "\n";
    }
    emit(o, j, text);
    return 0;
}

int cmd_delta(const Options& o) {
    const auto spec = parse_system(read_file(o.file));
    if (o.lambda < 2 || o.lambda > spec.n + 1) throw DegreeRangeError("--lambda must be in 2..n+1");
    const auto order = pick_order(spec, o.order);
    const auto d = delta(spec.system().pattern(), o.lambda, order);
    emit(o, {{"lambda", o.lambda},
             {"order", order.str()},
             {"delta", d.str()},
             {"degree", d.degree()},
             {"factored", factored_to_json(d)}}, d.str() + "\n");
    return 0;
}

int cmd_matrix(const Options& o) {
    const auto spec = parse_system(read_file(o.file));
    const auto order = pick_order(spec, o.order);
    const auto sys = spec.system().pattern();
    if (o.kind != "C" && o.kind != "Cprime") throw ValidationError("--kind must be C or Cprime");
    const auto cm = o.kind == "C" ? build_c(sys, o.lambda, order) : build_cprime(sys, o.lambda, order);
    const auto names = default_names(spec.n);
    std::vector<std::string> rows, cols;
    for (const auto& r : cm.row_frame.rows) rows.push_back(r.multiplier.str(names) + " * f" + std::to_string(r.generator + 1));
    for (std::size_t c = 0; c < cm.cols(); ++c) cols.push_back(cm.column_frame.columns[c].str(names));
    auto entry = [](const SparseEntry& e) { return (e.sign < 0 ? "-" : "") + e.value.str(); };

    Json j;
    j["kind"] = o.kind;
    j["lambda"] = o.lambda;
    j["order"] = order.str();
    j["rows"] = rows;
    j["columns"] = cols;
    std::string text = o.kind + "(" + std::to_string(o.lambda) + "), order (" + order.str() + "), " +
                       std::to_string(cm.rows()) + " x " + std::to_string(cm.cols()) + "\n";
    if (o.dense) {
        Json m = Json::array();
        text += "columns: ";
        for (std::size_t c = 0; c < cols.size(); ++c) text += (c ? " " : "") + cols[c];
        text += "\n";
        for (std::size_t r = 0; r < cm.rows(); ++r) {
            std::vector<std::string> row(cm.cols(), "0");
            for (const auto& e : cm.matrix.row(r)) row[e.col] = entry(e);
            text += rows[r] + ":";
            for (const auto& x : row) text += " " + x;
            text += "\n";
            m.push_back(row);
        }
        j["dense"] = std::move(m);
    } else {
        Json m = Json::array();
        for (std::size_t r = 0; r < cm.rows(); ++r)
            for (const auto& e : cm.matrix.row(r)) {
                m.push_back({r + 1, e.col + 1, entry(e)});
                text += rows[r] + " | " + cols[e.col] + " : " + entry(e) + "\n";
            }
        j["entries"] = std::move(m);
    }
    emit(o, j, text);
    return 0;
}

int cmd_frames(const Options& o) {
    if (o.n < 1) throw ValidationError("--n is required");
    const auto order = IndexOrder::cyclic(o.n, o.order ? o.order : 1);
    const auto f = build_frame(o.n, o.lambda, order);
    const auto names = default_names(o.n);
    Json j;
    j["n"] = o.n;
    j["lambda"] = o.lambda;
    j["order"] = order.str();
    Json sets = Json::array();
    std::string text = "n = " + std::to_string(o.n) + ", lambda = " + std::to_string(o.lambda) + ", order (" + order.str() + ")\n";
    for (std::size_t i = 0; i < f.sets.size(); ++i) {
        Json s;
        s["j"] = i + 1;
        s["size"] = f.sets[i].size();
        text += "M" + std::to_string(i + 1) + ": " + std::to_string(f.sets[i].size());
        if (o.full) {
            std::vector<std::string> ms;
            for (const auto& m : f.sets[i]) ms.push_back(m.str(names));
            s["monomials"] = ms;
            text += " {";
            for (std::size_t k = 0; k < ms.size(); ++k) text += (k ? ", " : "") + ms[k];
            text += "}";
        }
        text += "\n";
        sets.push_back(std::move(s));
    }
    j["sets"] = std::move(sets);
    emit(o, j, text);
    return 0;
}

int cmd_normal_form(const Options& o) {
    const auto file = parse_quadratic_space(read_file(o.file));
    const std::size_t n = file.forms.front().nvars();
    const auto names = file.variables.empty() ? default_names(n) : file.variables;
    const QuadraticSpace V(n, file.forms);
    const auto r = to_normal_form(V, o.seed);
    Json j;
    j["seed"] = o.seed;
    j["variables"] = names;
    j["forms"] = strings(r.forms, names);
    j["change_of_variables"] = matrix_json(r.change_of_variables);
    j["basis_change"] = matrix_json(r.basis_change);
    Json subs = Json::array();
    std::string text;
    for (const auto& f : r.forms) text += f.str(names) + "\n";
    for (const auto& s : r.substitution_params) {
        std::vector<std::string> vals;
        std::string line = s.kind + " (m = " + std::to_string(s.step) + "):";
        for (const auto& v : s.values) {
            vals.push_back(to_string(v));
            line += " " + to_string(v);
        }
        subs.push_back({{"kind", s.kind}, {"step", s.step}, {"values", vals}});
        text += line + "\n";
    }
    j["substitution_params"] = std::move(subs);
    emit(o, j, text);
    return 0;
}

BinomialSystem specialized_system(const std::string& path) {
    const auto spec = parse_system(read_file(path));
    if (!spec.specialized()) throw MissingParameterError("a_i, b_i (the system file carries no values)");
    return spec.system();
}

int cmd_rewrite(const Options& o) {
    const auto sys = specialized_system(o.spec);
    const auto names = default_names(sys.n());
    const auto f = parse_rational_poly(o.poly, sys.n());
    const auto r = reduce(sys, f);
    emit(o, {{"input", f.str(names)}, {"normal_form", r.str(names)}}, r.str(names) + "\n");
    return 0;
}

int cmd_hilbert(const Options& o) {
    const auto sys = specialized_system(o.spec);
    const auto h = hilbert_function(sys);
    std::size_t total = 0;
    for (auto x : h) total += x;
    const bool finite = h.size() <= sys.n() + 1;
    Json j{{"hilbert", h}};
    j["dimension"] = finite ? Json(total) : Json("infinite");
    emit(o, j, join(h) + (finite ? "\ndim = " + std::to_string(total) : "\ndim = infinite") + "\n");
    return 0;
}

DualForm dual_from(const Options& o) { return builtin_dual(dual_kind(o.which), rationals(o.p, 5, "--p")); }

int cmd_dual(const Options& o) {
    const auto F = dual_from(o);
    const auto s = F.poly.str(dual_variable_names());
    emit(o, {{"which", o.which}, {"form", s}}, s + "\n");
    return 0;
}

int cmd_dual_hilbert(const Options& o) {
    const auto h = catalecticant_hilbert(dual_from(o));
    emit(o, {{"which", o.which}, {"hilbert", h}}, join(h) + "\n");
    return 0;
}

int cmd_ann_gens(const Options& o) {
    const auto c = ann_generator_counts(dual_from(o));
    std::size_t total = 0;
    for (auto x : c) total += x;
    emit(o, {{"which", o.which}, {"counts", c}, {"total", total}}, join(c) + "\ntotal = " + std::to_string(total) + "\n");
    return 0;
}

int cmd_hessian(const Options& o) {
    const auto F = dual_from(o);
    const auto& names = dual_variable_names();
    const auto h = hessian(F, o.k);
    if (!o.point.empty()) {
        const auto v = hess_det_eval(F, o.k, rationals(o.point, 5, "--point"));
        emit(o, {{"k", o.k}, {"size", h.basis.size()}, {"determinant", to_string(v)}}, to_string(v) + "\n");
        return 0;
    }
    Json j;
    j["k"] = o.k;
    std::vector<std::string> basis;
    for (const auto& m : h.basis) basis.push_back(m.str(names));
    j["basis"] = basis;
    Json rows = Json::array();
    std::string text;
    for (std::size_t r = 0; r < h.entries.size(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < h.entries[r].size(); ++c) {
            const auto s = h.entries[r][c].str(names);
            row.push_back(s);
            text += "[" + basis[r] + ", " + basis[c] + "] " + s + "\n";
        }
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    emit(o, j, text);
    return 0;
}

int cmd_hess2_order(const Options& o) {
    const auto p = rationals(o.p, 4, "--p");
    std::vector<Rational> point;
    if (o.point.empty()) {
        std::mt19937_64 rng(o.seed);
        point = random_point(5, rng);
    } else {
        point = rationals(o.point, 5, "--point");
    }
    const auto line = hess2_along_line(dual_kind(o.which), {p[0], p[1], p[2], p[3]}, point);
    if (line.is_zero()) throw DegenerateSampleError("hess^2 vanishes identically along the sampled line; resample");
    const unsigned order = static_cast<unsigned>(line.valuation());
    std::vector<std::string> pt;
    for (const auto& x : point) pt.push_back(to_string(x));
    emit(o, {{"which", o.which}, {"point", pt}, {"order", order}, {"degree", line.degree()}},
         "order = " + std::to_string(order) + "\n");
    return 0;
}

int cmd_selftest(const Options& o) {
    const auto rows = run_selftest(o.seed, o.n_max);
    bool ok = true;
    Json j;
    j["seed"] = o.seed;
    Json arr = Json::array();
    std::string text = "selftest seed " + std::to_string(o.seed) + "\n";
    for (const auto& r : rows) {
        ok = ok && r.passed;
        arr.push_back({{"check", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        text += std::string(r.passed ? "PASS  " : "FAIL  ") + r.name + "  (" + r.detail + ")\n";
    }
    j["checks"] = std::move(arr);
    emit(o, j, text);
    return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"binres: resultants of quadratic binomial systems and related checks"};
    app.name("binres");
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_flag("--json", o.json, "JSON output");
    app.add_option("--seed", o.seed, "session seed")->capture_default_str();

    auto file_arg = [&](CLI::App* c) { c->add_option("file", o.file, "system file (JSON or line grammar)")->required(); };
    auto order_opt = [&](CLI::App* c) { c->add_option("--order", o.order, "cyclic order k (1..n); default: file order or identity"); };
    auto p_opt = [&](CLI::App* c, bool four = false) {
        c->add_option("--which", o.which, "F or G")->capture_default_str();
        c->add_option("--p", o.p, four ? "p1,...,p4 (p5 moves along the line)" : "p1,...,p5")->delimiter(',')->required();
    };

    auto* res = app.add_subcommand("resultant", "factored resultant of a system");
    file_arg(res);
    auto* del = app.add_subcommand("delta", "one factored Delta_lambda");
    file_arg(del);
    del->add_option("--lambda", o.lambda, "degree, 2..n+1")->required();
    order_opt(del);
    auto* mat = app.add_subcommand("matrix", "coefficient matrix with row/column labels");
    file_arg(mat);
    mat->add_option("--lambda", o.lambda, "degree, >= 2")->required();
    order_opt(mat);
    mat->add_option("--kind", o.kind, "C or Cprime")->capture_default_str();
    auto* sparse = mat->add_flag("--sparse", "list nonzero entries (default)");
    mat->add_flag("--dense", o.dense, "print the full matrix")->excludes(sparse);
    auto* fr = app.add_subcommand("frames", "monomial frame sizes");
    fr->add_option("--n", o.n, "number of variables")->required();
    fr->add_option("--lambda", o.lambda, "degree")->required();
    order_opt(fr);
    fr->add_flag("--full", o.full, "list the monomials");
    auto* nf = app.add_subcommand("normal-form", "reduce a quadratic space to normal form");
    nf->add_option("file", o.file, "quadratic-space file")->required();
    auto* rw = app.add_subcommand("rewrite", "square-free normal form of a polynomial");
    rw->add_option("--spec", o.spec, "specialized system file")->required();
    rw->add_option("--poly", o.poly, "homogeneous polynomial in x1..xn")->required();
    auto* hf = app.add_subcommand("hilbert", "Hilbert function of R/I");
    hf->add_option("--spec", o.spec, "specialized system file")->required();
    auto* du = app.add_subcommand("dual", "print the dual quintic");
    p_opt(du);
    auto* dh = app.add_subcommand("dual-hilbert", "Hilbert function from catalecticant ranks");
    p_opt(dh);
    auto* ag = app.add_subcommand("ann-gens", "minimal generator counts of the annihilator by degree");
    p_opt(ag);
    auto* he = app.add_subcommand("hessian", "k-th Hessian matrix, or its determinant at --point");
    p_opt(he);
    he->add_option("--k", o.k, "order")->capture_default_str();
    he->add_option("--point", o.point, "v,w,x,y,z")->delimiter(',');
    auto* ho = app.add_subcommand("hess2-order", "vanishing order of hess^2 transversally to 1 + p1...p5 = 0");
    p_opt(ho, true);
    ho->add_option("--point", o.point, "v,w,x,y,z (default: seeded random)")->delimiter(',');
    auto* st = app.add_subcommand("selftest", "run the oracle sweep");
    st->add_option("--n-max", o.n_max, "largest n")->capture_default_str();
    st->add_option("--seed", o.seed, "session seed");

    // CLI11 reports a stray word as a missing subcommand; name it instead.
    for (int i = 1; i < argc; ++i) {
        const std::string a = argv[i];
        if (a == "--seed") {
            ++i;
            continue;
        }
        if (a.rfind("-", 0) == 0) continue;
        if (!app.get_subcommand_no_throw(a)) {
            std::cerr << "binres: unknown subcommand '" << a << "'\n\n" << app.help();
            return 1;
        }
        break;
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "binres: " << e.what() << "\n\n" << app.help();
        return 1;
    }

    const std::vector<std::pair<CLI::App*, int (*)(const Options&)>> table = {
        {res, cmd_resultant}, {del, cmd_delta},         {mat, cmd_matrix},        {fr, cmd_frames},
        {nf, cmd_normal_form}, {rw, cmd_rewrite},       {hf, cmd_hilbert},        {du, cmd_dual},
        {dh, cmd_dual_hilbert}, {ag, cmd_ann_gens},     {he, cmd_hessian},        {ho, cmd_hess2_order},
        {st, cmd_selftest}};
    try {
        for (const auto& [sub, fn] : table)
            if (sub->parsed()) return fn(o);
    } catch (const InternalCheckError& e) {
        std::cerr << "binres: internal check failed: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "binres: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "binres: unexpected failure: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
