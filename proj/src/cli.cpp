#include "bott/cli.hpp"

#include "bott/admissible.hpp"
#include "bott/almostkahler.hpp"
#include "bott/cohomology.hpp"
#include "bott/error.hpp"
#include "bott/fan.hpp"
#include "bott/symplectic.hpp"
#include "bott/topology3.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

namespace bott {

namespace {

struct MatrixInput {
    std::vector<std::int64_t> stage3;
    std::string matrix;
    std::string file;

    void attach(CLI::App* sub) {
        sub->add_option("--stage3", stage3, "M3(a,b,c) shorthand")->expected(3);
        sub->add_option("--matrix", matrix, "matrix JSON: {\"n\":..,\"rows\":..} or rows");
        sub->add_option("--matrix-file", file, "file holding matrix JSON");
    }

    BottMatrix get() const {
        if (!stage3.empty()) return BottMatrix::stage3(stage3[0], stage3[1], stage3[2]);
        std::string text = matrix;
        if (!file.empty()) {
            std::ifstream in(file);
            if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open " + file);
            std::stringstream ss;
            ss << in.rdbuf();
            text = ss.str();
        }
        if (text.empty()) throw CLI::ValidationError("one of --stage3, --matrix, --matrix-file is required");
        Json j;
        try {
            j = Json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            throw CLI::ValidationError(std::string("matrix JSON: ") + e.what());
        }
        return matrix_from_json(j);
    }
};

std::vector<Rat> parse_rats(const std::vector<std::string>& v) {
    std::vector<Rat> out;
    for (const auto& s : v) out.push_back(parse_rational(s));
    return out;
}

AdmissibleData ks_data(const Rat& r1, const Rat& r2) {
    AdmissibleData d{{{1, 2, r1}, {1, -2, r2}}};
    d.validate();
    return d;
}

Json roots_json(const std::vector<CscRoot>& roots) {
    Json a = Json::array();
    for (const auto& r : roots)
        a.push_back({{"r_minus", r.value.get_d()}, {"bracket", {to_string(r.lo), to_string(r.hi)}}});
    return a;
}

BasisChoice parse_basis(const std::string& s, int n) {
    if (static_cast<int>(s.size()) != n) throw Error(ErrorCode::InvalidArgument, "basis needs one letter per stage");
    BasisChoice c;
    for (char ch : s) {
        if (ch == 'u' || ch == 'U') c.push_back(Ray::U);
        else if (ch == 'v' || ch == 'V') c.push_back(Ray::V);
        else throw Error(ErrorCode::InvalidArgument, "basis letters must be u or v");
    }
    return c;
}

std::string basis_name(const BasisChoice& c) {
    std::string s;
    for (auto r : c) s += r == Ray::U ? 'u' : 'v';
    return s;
}

Json cone_json(const KahlerCone& k) {
    Json ineqs = Json::array();
    for (const auto& q : k.inequalities) ineqs.push_back(to_json(q));
    return {{"basis", basis_name(k.basis)}, {"inequalities", ineqs}, {"first_orthant", k.first_orthant}};
}

std::string fmt_double(double v) {
    std::ostringstream os;
    os.precision(15);
    os << v;
    return os.str();
}

}  // namespace

bool stage3_reductive_closed_form(std::int64_t a, std::int64_t b, std::int64_t c) {
    return (a == 0 && b * c < 0) || (a == 0 && b == 0 && c == 0);
}

bool stage3_fano_closed_form(std::int64_t a, std::int64_t b, std::int64_t c) {
    if (a == 0) return b >= -1 && b <= 1 && c >= -1 && c <= 1;
    if (a == 1) return (b == 0 && c == 0) || (b == 1 && c == 1) || (b == -1 && c == -1);
    if (a == -1) return b == 0 && c >= -1 && c <= 1;
    return false;
}

std::string csc_family_csv(int m, const Rat& from, const Rat& to, const Rat& step, const Rat& tol,
                           bool second_only) {
    if (!(step > 0)) throw Error(ErrorCode::InvalidArgument, "sweep step must be positive");
    std::ostringstream os;
    os << "m,r_plus,r_minus\n";
    for (Rat rp = from; rp < to; rp += step) {
        if (!(rp > 0 && rp < 1)) continue;
        auto roots = second_only ? csc_second_family(m, rp, tol) : csc_family_solve(m, rp, tol);
        for (const auto& r : roots) os << m << "," << fmt_double(rp.get_d()) << "," << fmt_double(r.value.get_d()) << "\n";
    }
    return os.str();
}

std::string cproj_trajectory_csv(const Rat& r, int steps) {
    if (steps < 1) throw Error(ErrorCode::InvalidArgument, "steps must be positive");
    Rat target = (2 * r - 1) / (1 - r + r * r);
    std::ostringstream os;
    os << "step,r1,r2\n";
    for (int i = 0; i <= steps; ++i) {
        Rat alpha = target * (Rat(i) / steps);
        os << i << "," << fmt_double(cproj_r(r, alpha, 1).get_d()) << ","
           << fmt_double(cproj_r(r - 1, alpha, 1).get_d()) << "\n";
    }
    return os.str();
}

Json envelope(const CommandResult& r) {
    return {{"command", r.command}, {"inputs", r.inputs}, {"payload", r.payload}, {"exit_code", r.exit_code}};
}

CommandResult run(const std::vector<std::string>& args) { return run(args, load_config()); }

CommandResult run(const std::vector<std::string>& args, const Config& config) {
    CommandResult res;
    CLI::App app{"Bott tower invariants", "bottcli"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    bool want_envelope = false, want_csv = false, want_json = false;
    app.add_flag("--envelope", want_envelope, "print the full command record");
    app.add_flag("--csv", want_csv, "CSV output where supported");
    app.add_flag("--json", want_json, "JSON output (default)");

    MatrixInput mi;
    int bound = 0;
    auto matrix_cmd = [&](const char* name, const char* help) {
        auto* s = app.add_subcommand(name, help);
        mi.attach(s);
        return s;
    };
    auto* c_twist = matrix_cmd("twist", "number of nonzero rows of A - I");
    auto* c_cotwist = matrix_cmd("cotwist", "number of nonzero columns of A - I");
    auto* c_orbit = matrix_cmd("orbit", "equivalence orbit and canonical form");
    c_orbit->add_option("--bound", bound, "stage bound");
    auto* c_coh = matrix_cmd("cohomology", "generators, q-triviality, square-zero primitives");
    auto* c_classes = matrix_cmd("classes", "Chern, Pontrjagin and Stiefel-Whitney classes");
    auto* c_cone = matrix_cmd("cone", "Kahler cone inequalities");
    std::string basis;
    bool all_bases = false;
    c_cone->add_option("--basis", basis, "one letter u/v per stage, first u");
    c_cone->add_flag("--all", all_bases, "every generator basis");
    auto* c_roots = matrix_cmd("roots", "Demazure roots");
    c_roots->add_option("--bound", bound, "stage bound");
    auto* c_red = matrix_cmd("reductive", "reductivity and CSC obstruction");
    c_red->add_option("--bound", bound, "stage bound");
    auto* c_fano = matrix_cmd("fano", "Fano test");
    bool with_ke = false;
    c_fano->add_flag("--ke", with_ke, "also report Kahler-Einstein status (stages 3, 4)");

    auto* c_cl3 = app.add_subcommand("classify3", "stage-3 diffeomorphism invariants");
    std::vector<std::int64_t> abc;
    c_cl3->add_option("abc", abc, "a b c")->expected(3)->required();

    auto* c_t1 = app.add_subcommand("twist1-diffeo", "twist-1 diffeomorphism test");
    std::vector<std::int64_t> k1v, k2v;
    c_t1->add_option("--k", k1v, "first k vector")->required();
    c_t1->add_option("--kp", k2v, "second k vector");

    auto* c_sc = app.add_subcommand("symplectic-count", "compatible Bott structures on (S^2)^3");
    std::vector<std::string> kstr;
    bool enumerate = false;
    c_sc->add_option("k", kstr, "k1 k2 k3")->expected(3)->required();
    c_sc->add_flag("--enumerate", enumerate, "list representatives");
    auto* c_ce = app.add_subcommand("compat-enumerate", "list compatible M3(2a,2b,2c)");
    c_ce->add_option("k", kstr, "k1 k2 k3")->expected(3)->required();

    auto* c_ext = app.add_subcommand("extremal-poly", "extremal polynomial of admissible data");
    std::string data_file, r1s, r2s;
    c_ext->add_option("--data", data_file, "admissible data JSON file");
    c_ext->add_option("--r1", r1s, "d=(1,1), s=(2,-2): first r");
    c_ext->add_option("--r2", r2s, "second r");

    auto* c_csc = app.add_subcommand("csc-family", "roots of the CSC condition in (-1,0)");
    int m = 1;
    std::string sweep = "1/100", rplus, from, to = "1", tol = config.csc_tolerance;
    bool second_only = false;
    c_csc->add_option("--m", m, "fiber dimension parameter")->required();
    c_csc->add_option("--sweep", sweep, "r_plus step for CSV sweeps");
    c_csc->add_option("--from", from, "first r_plus (default: one step)");
    c_csc->add_option("--to", to, "sweep upper limit (exclusive)");
    c_csc->add_option("--r-plus", rplus, "single r_plus; prints JSON");
    c_csc->add_option("--tol", tol, "root tolerance");
    c_csc->add_flag("--second", second_only, "only roots off r_minus = -r_plus");

    auto* c_cp = app.add_subcommand("cproj", "c-projective transform");
    std::string alpha_s, beta_s = "1", rtraj;
    int steps = 10;
    bool trajectory = false;
    c_cp->add_option("--alpha", alpha_s, "alpha");
    c_cp->add_option("--beta", beta_s, "beta");
    c_cp->add_option("--data", data_file, "admissible data JSON file (F from the extremal solver)");
    c_cp->add_option("--r1", r1s, "d=(1,1), s=(2,-2): first r");
    c_cp->add_option("--r2", r2s, "second r");
    c_cp->add_flag("--trajectory", trajectory, "CSV path from (r, r-1) to (1-r, -r)");
    c_cp->add_option("--r", rtraj, "r for --trajectory");
    c_cp->add_option("--steps", steps, "trajectory steps");

    auto* c_ak = app.add_subcommand("ak-solve", "square-fiber almost-Kahler system");
    std::vector<std::string> pstr;
    int grid = config.ak_grid, levels = config.ak_max_levels;
    c_ak->add_option("p", pstr, "p0 p1 p2")->expected(3)->required();
    c_ak->add_option("--grid", grid, "integrability samples per axis");
    c_ak->add_option("--levels", levels, "positivity refinement cap");

    auto* c_scan = app.add_subcommand("scan", "exhaustive stage-3 scan against closed forms");
    std::string kind = "reductive";
    int range = 2;
    c_scan->add_option("--kind", kind, "reductive | fano | diffeo")->check(CLI::IsMember({"reductive", "fano", "diffeo"}));
    c_scan->add_option("--range", range, "|a|,|b|,|c| <= range");

    std::vector<std::string> argv{"bott"};
    argv.insert(argv.end(), args.begin(), args.end());
    std::vector<const char*> cargs;
    for (auto& s : argv) cargs.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(cargs.size()), cargs.data());
    } catch (const CLI::CallForHelp&) {
        res.out = app.help();
        return res;
    } catch (const CLI::ParseError& e) {
        res.exit_code = 2;
        res.err = Json{{"error", "ParseError"}, {"message", e.what()}}.dump() + "\n";
        return res;
    }

    CLI::App* sub = app.get_subcommands().front();
    res.command = sub->get_name();
    res.inputs = Json::object();
    for (const auto* opt : sub->get_options()) {
        if (opt->count() == 0 || opt->get_name() == "--help") continue;
        auto r = opt->results();
        res.inputs[opt->get_name()] = r.size() == 1 ? Json(r[0]) : Json(r);
    }
    int orbit_bound = bound > 0 ? bound : config.orbit_stage_bound;
    int root_bound = bound > 0 ? bound : config.root_stage_bound;
    std::string csv;

    try {
        Json& p = res.payload;
        if (sub == c_twist) {
            p = twist(mi.get());
        } else if (sub == c_cotwist) {
            p = cotwist(mi.get());
        } else if (sub == c_orbit) {
            auto rep = equivalence_orbit(mi.get(), orbit_bound);
            Json reps = Json::array(), moves = Json::array();
            for (const auto& B : rep.representatives) reps.push_back(to_json(B));
            for (const auto& e : rep.moves) {
                Json mv{{"from", e.from}, {"to", e.to}};
                if (e.move.kind == EquivalenceMove::Kind::FiberInversion) {
                    mv["kind"] = "FiberInversion";
                    mv["k"] = e.move.k;
                } else {
                    mv["kind"] = "PermutationConjugation";
                    std::vector<int> s1;
                    for (int s : e.move.sigma) s1.push_back(s + 1);
                    mv["sigma"] = s1;
                }
                moves.push_back(mv);
            }
            p = {{"size", rep.representatives.size()}, {"canonical", to_json(rep.canonical)},
                 {"representatives", reps}, {"moves", moves}};
        } else if (sub == c_coh) {
            BottMatrix A = mi.get();
            Json xs = Json::array(), ys = Json::array(), as = Json::array(), prim = Json::array();
            for (int k = 1; k <= A.n(); ++k) {
                xs.push_back(to_json(x(A, k)));
                ys.push_back(to_json(y(A, k)));
                as.push_back(to_json(alpha(A, k)));
            }
            for (const auto& s : square_zero_primitives(A)) prim.push_back({{"j", s.j}, {"beta", to_json(s.beta)}});
            p = {{"n", A.n()}, {"rank", std::int64_t{1} << A.n()}, {"x", xs}, {"y", ys}, {"alpha", as},
                 {"q_trivial", is_q_trivial(A)}, {"twist", twist(A)},
                 {"topological_twist", topological_twist(A)}, {"square_zero_primitives", prim}};
        } else if (sub == c_classes) {
            BottMatrix A = mi.get();
            p = {{"c", to_json(chern_total(A))}, {"c1", to_json(chern_1(A))},
                 {"p", to_json(pontrjagin_total(A))}, {"p1", to_json(pontrjagin(A, 1))},
                 {"w2", to_json(stiefel_whitney_2(A))}};
        } else if (sub == c_cone) {
            BottMatrix A = mi.get();
            if (all_bases) {
                p = Json::array();
                for (const auto& b : generator_bases(A.n())) p.push_back(cone_json(kahler_cone(A, b)));
            } else {
                BasisChoice b = basis.empty() ? BasisChoice(A.n(), Ray::U) : parse_basis(basis, A.n());
                p = cone_json(kahler_cone(A, b));
            }
        } else if (sub == c_roots) {
            auto R = demazure_roots(mi.get(), root_bound);
            p = {{"count", R.roots.size()}, {"roots", R.roots}};
        } else if (sub == c_red) {
            BottMatrix A = mi.get();
            auto ob = csc_obstructed(A);
            p = {{"reductive", is_reductive(A, root_bound)}, {"csc_obstructed", ob.obstructed},
                 {"witness_row", ob.witness_row}, {"twisted_block", ob.twisted_block}};
        } else if (sub == c_fano) {
            BottMatrix A = mi.get();
            if (with_ke) p = {{"fano", is_fano(A)}, {"kahler_einstein", ke_name(kahler_einstein_stage34(A, orbit_bound))}};
            else p = is_fano(A);
        } else if (sub == c_cl3) {
            auto inv = stage3_invariants(abc[0], abc[1], abc[2]);
            p = {{"a", abc[0]}, {"b", abc[1]}, {"c", abc[2]}, {"p", int_json(inv.p)},
                 {"w2", w2_name(inv.w2)}, {"q_trivial", inv.q_trivial},
                 {"q_trivial_type", inv.q_trivial_type ? Json(qtype_name(*inv.q_trivial_type)) : Json(nullptr)},
                 {"diffeo_key", inv.diffeo_key}};
        } else if (sub == c_t1) {
            p = Json::object();
            if (!k2v.empty()) p["diffeomorphic"] = twist1_diffeomorphic(k1v, k2v);
            try {
                p["class_count"] = twist1_class_count(k1v);
                p["generic"] = true;
            } catch (const Error& e) {
                if (e.code() != ErrorCode::NonGeneric) throw;
                p["class_count"] = twist1_class_count_bruteforce(k1v);
                p["generic"] = false;
            }
        } else if (sub == c_sc || sub == c_ce) {
            auto k = parse_rats(kstr);
            auto list_json = [&] {
                Json reps = Json::array();
                for (const auto& c : enumerate_compatible(k[0], k[1], k[2]))
                    reps.push_back({{"tower", {2 * c.a, 2 * c.b, 2 * c.c}}, {"canonical", to_json(c.canonical)}});
                return reps;
            };
            if (sub == c_ce) {
                p = list_json();
            } else {
                auto n = count_compatible(k[0], k[1], k[2]);
                p = {{"N_B0", int_json(n.n_b0)}, {"N_Bne0", int_json(n.n_bne0)}, {"N_B", int_json(n.n_b)}};
                if (enumerate) p["representatives"] = list_json();
            }
        } else if (sub == c_ext) {
            AdmissibleData data;
            if (!data_file.empty()) {
                std::ifstream in(data_file);
                if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open " + data_file);
                data = admissible_from_json(Json::parse(in));
            } else if (!r1s.empty()) {
                Rat r1 = parse_rational(r1s);
                data = ks_data(r1, r2s.empty() ? Rat(r1 - 1) : parse_rational(r2s));
            } else {
                throw CLI::ValidationError("need --data or --r1");
            }
            auto prof = extremal_polynomial(data);
            p = {{"data", to_json(data)}, {"F", to_json(prof.F)}, {"F_text", prof.F.str()},
                 {"A1", to_string(prof.A1)}, {"A3", to_string(prof.A3)}, {"csc", is_csc(prof)},
                 {"positive", is_positive_on_interval(prof.F)}};
        } else if (sub == c_csc) {
            Rat t = parse_rational(tol);
            if (!rplus.empty()) {
                Rat rp = parse_rational(rplus);
                auto roots = second_only ? csc_second_family(m, rp, t) : csc_family_solve(m, rp, t);
                p = {{"m", m}, {"r_plus", to_string(rp)}, {"roots", roots_json(roots)}};
            } else {
                Rat step = parse_rational(sweep);
                csv = csc_family_csv(m, from.empty() ? step : parse_rational(from), parse_rational(to), step, t,
                                     second_only);
            }
        } else if (sub == c_cp) {
            if (trajectory) {
                if (rtraj.empty()) throw CLI::ValidationError("--trajectory needs --r");
                csv = cproj_trajectory_csv(parse_rational(rtraj), steps);
            } else {
                AdmissibleData data;
                if (!data_file.empty()) {
                    std::ifstream in(data_file);
                    if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open " + data_file);
                    data = admissible_from_json(Json::parse(in));
                } else if (!r1s.empty()) {
                    Rat r1 = parse_rational(r1s);
                    data = ks_data(r1, r2s.empty() ? Rat(r1 - 1) : parse_rational(r2s));
                } else {
                    throw CLI::ValidationError("need --data or --r1");
                }
                if (alpha_s.empty()) throw CLI::ValidationError("need --alpha");
                auto prof = extremal_polynomial(data);
                auto out = cproj_transform(prof.F, data, parse_rational(alpha_s), parse_rational(beta_s));
                p = {{"F_in", to_json(prof.F)}, {"F_in_text", prof.F.str()}, {"data_in", to_json(data)},
                     {"F_out", to_json(out.F)}, {"F_out_text", out.F.str()}, {"data_out", to_json(out.data)}};
            }
        } else if (sub == c_ak) {
            auto pv = parse_rats(pstr);
            SquareFiberData d{pv[0], pv[1], pv[2]};
            auto s = solve_ak(d);
            Json pos;
            try {
                pos = check_positivity(d, s, levels);
            } catch (const Error& e) {
                if (e.code() != ErrorCode::Inconclusive) throw;
                pos = "Inconclusive";
            }
            p = {{"a11", to_string(s.a11)}, {"a12", to_string(s.a12)}, {"a22", to_string(s.a22)},
                 {"A1", to_string(s.A1)}, {"A2", to_string(s.A2)}, {"A3", to_string(s.A3)},
                 {"determinant", to_string(ak_determinant(d))}, {"positive", pos},
                 {"integrable", check_integrability(d, s, grid)}, {"boundary", boundary_conditions_check(d, s)}};
        } else if (sub == c_scan) {
            long checked = 0;
            Json mismatches = Json::array();
            for (std::int64_t a = -range; a <= range; ++a)
                for (std::int64_t b = -range; b <= range; ++b)
                    for (std::int64_t c = -range; c <= range; ++c) {
                        ++checked;
                        BottMatrix A = BottMatrix::stage3(a, b, c);
                        bool got, want;
                        if (kind == "reductive") {
                            got = is_reductive(A, root_bound);
                            want = stage3_reductive_closed_form(a, b, c);
                        } else if (kind == "fano") {
                            got = is_fano(A);
                            want = stage3_fano_closed_form(a, b, c);
                        } else {
                            // Every orbit member must share the diffeomorphism key.
                            auto key = stage3_invariants(a, b, c).diffeo_key;
                            got = want = true;
                            for (const auto& B : equivalence_orbit(A, orbit_bound).representatives)
                                if (stage3_invariants(B(1, 0), B(2, 0), B(2, 1)).diffeo_key != key) got = false;
                        }
                        if (got != want) mismatches.push_back({a, b, c});
                    }
            p = {{"kind", kind}, {"range", range}, {"checked", checked}, {"mismatches", mismatches.size()},
                 {"mismatch_list", mismatches}};
        }
    } catch (const Error& e) {
        res.exit_code = 1;
        res.payload = nullptr;
        res.err = Json{{"error", error_name(e.code())}, {"message", e.what()}}.dump() + "\n";
        return res;
    } catch (const CLI::ValidationError& e) {
        res.exit_code = 2;
        res.payload = nullptr;
        res.err = Json{{"error", "ParseError"}, {"message", e.what()}}.dump() + "\n";
        return res;
    } catch (const nlohmann::json::exception& e) {
        res.exit_code = 2;
        res.payload = nullptr;
        res.err = Json{{"error", "ParseError"}, {"message", e.what()}}.dump() + "\n";
        return res;
    }

    if (!csv.empty()) {
        if (want_json && !want_csv && !want_envelope) {
            // Re-emit the CSV rows as a JSON array of objects.
            Json rows = Json::array();
            std::istringstream is(csv);
            std::string header, line;
            std::getline(is, header);
            std::vector<std::string> cols;
            std::stringstream hs(header);
            for (std::string c; std::getline(hs, c, ',');) cols.push_back(c);
            while (std::getline(is, line)) {
                Json row;
                std::stringstream ls(line);
                size_t i = 0;
                for (std::string c; std::getline(ls, c, ',') && i < cols.size(); ++i) row[cols[i]] = std::stod(c);
                rows.push_back(row);
            }
            res.payload = rows;
        } else {
            res.payload = csv;
            res.out = csv;
            if (!want_envelope) return res;
        }
    }
    res.out = (want_envelope ? envelope(res) : res.payload).dump() + "\n";
    return res;
}

}  // namespace bott
