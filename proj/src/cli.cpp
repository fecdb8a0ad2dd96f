#include "weylcrest/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "weylcrest/chains.hpp"
#include "weylcrest/errors.hpp"
#include "weylcrest/json_io.hpp"
#include "weylcrest/oracle.hpp"

namespace weylcrest {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    return parts;
}

std::map<std::string, std::string> load_config() {
    std::map<std::string, std::string> m;
    const char* path = std::getenv("WEYLCREST_CONFIG");
    if (!path || !*path) return m;
    std::ifstream in(path);
    if (!in) return m;
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        size_t eq = line.find('=');
        if (eq == std::string::npos) continue;
        m[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return m;
}

// Option values with CLI > config file > default precedence.
struct Opts {
    std::map<std::string, std::string> cli;
    std::map<std::string, std::string> config;

    std::string get(const std::string& key, const std::string& dflt) const {
        auto c = cli.find(key);
        if (c != cli.end()) return c->second;
        auto f = config.find(key);
        if (f != config.end()) return f->second;
        return dflt;
    }
    bool has(const std::string& key) const { return cli.count(key) || config.count(key); }
};

long long parse_ll(const std::string& s, const std::string& what) {
    try {
        size_t pos = 0;
        long long v = std::stoll(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw std::invalid_argument(what + " must be an integer, got '" + s + "'");
    }
}

RootSystem make_system(const Opts& o) {
    std::string type = o.get("type", "");
    if (type.empty()) throw std::invalid_argument("missing --type");
    if (type.size() == 1) {
        std::string rank = o.get("rank", "");
        if (rank.empty()) throw std::invalid_argument("--type " + type + " needs --rank");
        return build_root_system(type[0], static_cast<int>(parse_ll(rank, "--rank")));
    }
    return build_root_system(type);
}

Vec parse_weight(const std::string& s, int rank, const std::string& what) {
    std::vector<std::string> parts = split(s, ',');
    if (static_cast<int>(parts.size()) != rank)
        throw std::invalid_argument(what + " needs " + std::to_string(rank) +
                                    " comma-separated coordinates");
    Vec v;
    for (const std::string& p : parts) v.push_back(parse_rat(trim(p)));
    return v;
}

IVec parse_root_coords(const std::string& s, int rank, const std::string& what) {
    std::vector<std::string> parts = split(s, ',');
    if (static_cast<int>(parts.size()) != rank)
        throw std::invalid_argument(what + " needs " + std::to_string(rank) +
                                    " comma-separated integers");
    IVec v;
    for (const std::string& p : parts) v.push_back(parse_ll(trim(p), what));
    return v;
}

SubsetJ parse_subset(const std::string& s, int rank, const std::string& what) {
    SubsetJ J;
    if (trim(s).empty()) return J;
    for (const std::string& p : split(s, ',')) {
        long long i = parse_ll(trim(p), what);
        if (i < 1 || i > rank)
            throw std::invalid_argument(what + " index " + std::to_string(i) +
                                        " out of range 1.." + std::to_string(rank));
        J.insert(static_cast<int>(i - 1));
    }
    return J;
}

std::pair<Family, SubsetJ> parse_family(const std::string& s, int rank) {
    std::string name = s;
    std::string arg;
    size_t colon = s.find(':');
    if (colon != std::string::npos) {
        name = s.substr(0, colon);
        arg = s.substr(colon + 1);
    }
    SubsetJ J = parse_subset(arg, rank, "--family subset");
    if (name == "verma") return {Family::VERMA, {}};
    if (name == "parabolic") return {Family::PARABOLIC, J};
    if (name == "simple") return {Family::SIMPLE, {}};
    if (name == "generic") return {Family::GENERIC, J};
    throw std::invalid_argument("unknown family '" + name +
                                "' (expected verma, parabolic:J, simple, or generic:J)");
}

HWModuleDesc make_desc(const RootSystem& rs, const Opts& o) {
    std::string ls = o.get("lambda", "");
    if (ls.empty()) throw std::invalid_argument("missing --lambda");
    Vec lambda = parse_weight(ls, rs.rank, "--lambda");
    auto [family, J] = parse_family(o.get("family", "verma"), rs.rank);
    return describe_module(rs, lambda, family, J);
}

CoefficientGroup parse_coeff(const std::string& s) {
    CoefficientGroup c;
    if (s == "int") {
        c.tag = CoeffTag::INT;
    } else if (s == "rat") {
        c.tag = CoeffTag::RAT;
    } else if (s.rfind("scaled:", 0) == 0) {
        c.tag = CoeffTag::SCALED;
        c.scale = parse_rat(s.substr(7));
    } else {
        throw std::invalid_argument("unknown coefficient group '" + s +
                                    "' (expected int, rat, or scaled:a)");
    }
    return c;
}

std::string subset_text(const SubsetJ& J) { return subset_str(J); }

std::string word_text(const WeylElement& w) {
    std::string s = "[";
    bool first = true;
    for (int i : w.word) {
        if (!first) s += ",";
        s += std::to_string(i + 1);
        first = false;
    }
    return s + "]";
}

void emit(std::ostream& out, const json& j, const std::string& format,
          const std::function<void(std::ostream&)>& text_writer) {
    if (format == "text") {
        text_writer(out);
    } else if (format == "json") {
        out << j.dump(2) << "\n";
    } else {
        throw std::invalid_argument("unknown format '" + format + "' (expected json or text)");
    }
}

int cmd_describe(const Opts& o, std::ostream& out) {
    RootSystem rs = make_system(o);
    HWModuleDesc desc = make_desc(rs, o);
    SubsetJ jl = j_lambda(rs, desc.lambda);
    bool wcf = check_wcf_hypothesis(rs, desc.lambda);
    json fp = json::array();
    for (const IVec& r : fernando_parabolic(rs, desc)) {
        json row = json::array();
        for (long long c : r) row.push_back(c);
        fp.push_back(row);
    }
    json j{{"system", rootsystem_to_json(rs)},
           {"family", family_str(desc.family)},
           {"lambda", weight_to_json(desc.lambda)},
           {"j_lambda", subset_to_json(jl)},
           {"j_v", subset_to_json(desc.jv)},
           {"weight_formula_valid", desc.weight_formula_valid},
           {"simply_regular", is_simply_regular(rs, desc.lambda)},
           {"wcf_hypothesis", wcf},
           {"fernando_parabolic", fp}};
    emit(out, j, o.get("format", "json"), [&](std::ostream& t) {
        t << "family " << family_str(desc.family) << "\n";
        t << "lambda " << vec_str(desc.lambda) << "\n";
        t << "j_lambda " << subset_text(jl) << "\n";
        t << "j_v " << subset_text(desc.jv) << "\n";
        t << "weight_formula_valid " << (desc.weight_formula_valid ? "true" : "false") << "\n";
        t << "simply_regular " << (is_simply_regular(rs, desc.lambda) ? "true" : "false")
          << "\n";
        t << "wcf_hypothesis " << (wcf ? "true" : "false") << "\n";
    });
    return 0;
}

int cmd_weights(const Opts& o, std::ostream& out) {
    RootSystem rs = make_system(o);
    HWModuleDesc desc = make_desc(rs, o);
    long long depth = parse_ll(o.get("depth", "8"), "--depth");
    WeightSet S;
    if (o.has("j")) {
        SubsetJ J = parse_subset(o.get("j", ""), rs.rank, "--j");
        S = wt_J(rs, desc, J, depth);
    } else {
        S = module_weights(rs, desc, depth);
    }
    json rows = json::array();
    for (const Vec& w : S.weights)
        rows.push_back(json{{"weight", weight_to_json(w)}, {"multiplicity", 1}});
    emit(out, rows, o.get("format", "json"), [&](std::ostream& t) {
        for (const Vec& w : S.weights) t << vec_str(w) << " mult=1\n";
    });
    return 0;
}

int cmd_character(const Opts& o, std::ostream& out) {
    RootSystem rs = make_system(o);
    HWModuleDesc desc = make_desc(rs, o);
    long long depth = parse_ll(o.get("depth", "8"), "--depth");
    FormalCharacter ch = truncated_character(rs, desc, depth);
    emit(out, character_to_json(ch), o.get("format", "json"), [&](std::ostream& t) {
        for (const auto& [w, m] : ch.mult) t << vec_str(w) << " mult=" << m << "\n";
    });
    return 0;
}

int cmd_hull(const Opts& o, std::ostream& out) {
    RootSystem rs = make_system(o);
    HWModuleDesc desc = make_desc(rs, o);
    Polyhedron poly = hull_of_module(rs, desc);
    SubsetJ stab = stabilizer_parabolic(rs, desc);
    json j = hull_to_json(rs, poly);
    j["stabilizer"] = subset_to_json(stab);
    emit(out, j, o.get("format", "json"), [&](std::ostream& t) {
        for (const Vec& v : poly.vertices) t << "vertex " << vec_str(v) << "\n";
        for (const Vec& c : poly.cone_generators) t << "cone " << vec_str(c) << "\n";
        t << "stabilizer " << subset_text(stab) << "\n";
    });
    return 0;
}

int cmd_faces(const Opts& o, bool positive, std::ostream& out) {
    RootSystem rs = make_system(o);
    HWModuleDesc desc = make_desc(rs, o);
    std::string format = o.get("format", "json");
    if (!o.has("y")) {
        std::vector<FaceDescriptor> faces = enumerate_faces(rs, desc);
        emit(out, face_list_to_json(faces), format, [&](std::ostream& t) {
            for (const FaceDescriptor& f : faces)
                t << "w=" << word_text(f.w) << " J=" << subset_text(f.J) << "\n";
        });
        return 0;
    }
    long long depth = parse_ll(o.get("depth", "8"), "--depth");
    std::vector<Vec> Y;
    for (const std::string& part : split(o.get("y", ""), ';'))
        Y.push_back(parse_weight(trim(part), rs.rank, "--y entry"));
    WeightSet X = module_weights(rs, desc, depth);
    FaceQuery q;
    q.X = X.weights;
    q.Y = Y;
    q.coeff = parse_coeff(o.get("coeff", "int"));
    q.bound = parse_ll(o.get("bound", "6"), "--bound");
    FaceVerdict v = positive ? is_positive_weak_face(q) : is_weak_face(q);
    std::optional<FaceDescriptor> cls = classify_weak_face(rs, desc, Y, depth);
    json j = verdict_to_json(v);
    if (cls)
        j["face"] = json{{"w", word_to_json(cls->w)}, {"J", subset_to_json(cls->J)}};
    else
        j["face"] = nullptr;
    emit(out, j, format, [&](std::ostream& t) {
        t << "result " << (v.result ? "true" : "false") << "\n";
        t << "bound " << v.bound << "\n";
        if (cls)
            t << "face w=" << word_text(cls->w) << " J=" << subset_text(cls->J) << "\n";
        else
            t << "face none\n";
    });
    return 0;
}

int cmd_face_eq(const Opts& o, std::ostream& out) {
    RootSystem rs = make_system(o);
    HWModuleDesc desc = make_desc(rs, o);
    if (!o.has("j")) throw std::invalid_argument("missing --j");
    SubsetJ J = parse_subset(o.get("j", ""), rs.rank, "--j");
    FaceInterval iv = face_interval(rs, desc, J);
    json j{{"j_min", subset_to_json(iv.j_min)}, {"j_max", subset_to_json(iv.j_max)}};
    bool eq = false;
    bool have_j2 = o.has("j2");
    if (have_j2) {
        SubsetJ J2 = parse_subset(o.get("j2", ""), rs.rank, "--j2");
        eq = faces_equal(rs, desc, J, J2);
        j["result"] = eq;
    }
    emit(out, j, o.get("format", "json"), [&](std::ostream& t) {
        t << "j_min " << subset_text(iv.j_min) << "\n";
        t << "j_max " << subset_text(iv.j_max) << "\n";
        if (have_j2) t << "result " << (eq ? "true" : "false") << "\n";
    });
    return 0;
}

int cmd_chain(const Opts& o, bool root_mode, std::ostream& out) {
    RootSystem rs = make_system(o);
    std::string format = o.get("format", "json");
    if (root_mode) {
        if (!o.has("mu") || !o.has("mu2"))
            throw std::invalid_argument("chain --root needs --mu and --mu2 root coordinates");
        IVec mu = parse_root_coords(o.get("mu", ""), rs.rank, "--mu");
        IVec mu2 = parse_root_coords(o.get("mu2", ""), rs.rank, "--mu2");
        auto chain = root_chain(rs, mu, mu2);
        json j;
        if (chain) {
            json rows = json::array();
            for (const IVec& r : *chain) {
                json row = json::array();
                for (long long c : r) row.push_back(c);
                rows.push_back(json{{"root", row}, {"fw", weight_to_json(rs.root_to_fw(r))["fw"]}});
            }
            j["chain"] = rows;
        } else {
            j["chain"] = nullptr;
        }
        emit(out, j, format, [&](std::ostream& t) {
            if (!chain) {
                t << "chain none\n";
                return;
            }
            for (const IVec& r : *chain) {
                t << "root";
                for (long long c : r) t << " " << c;
                t << "\n";
            }
        });
        return 0;
    }
    HWModuleDesc desc = make_desc(rs, o);
    if (!o.has("mu") || !o.has("mu2"))
        throw std::invalid_argument("chain needs --mu (lower) and --mu2 (upper)");
    Vec mu = parse_weight(o.get("mu", ""), rs.rank, "--mu");
    Vec mu2 = parse_weight(o.get("mu2", ""), rs.rank, "--mu2");
    long long depth = parse_ll(o.get("depth", "8"), "--depth");
    ChainResult res = find_chain(rs, desc, mu, mu2, depth);
    json j{{"covered", res.covered}, {"hypothesis", res.hypothesis}};
    j["chain"] = res.chain ? chain_to_json(*res.chain) : json(nullptr);
    emit(out, j, format, [&](std::ostream& t) {
        t << "covered " << (res.covered ? "true" : "false") << "\n";
        t << "hypothesis " << res.hypothesis << "\n";
        if (res.chain)
            for (const Vec& w : *res.chain) t << vec_str(w) << "\n";
        else
            t << "chain none\n";
    });
    return 0;
}

std::vector<RootSystem> verify_systems(int max_rank) {
    std::vector<RootSystem> out;
    for (int n = 1; n <= max_rank; ++n) out.push_back(build_root_system('A', n));
    for (int n = 2; n <= max_rank; ++n) out.push_back(build_root_system('B', n));
    for (int n = 3; n <= max_rank; ++n) out.push_back(build_root_system('C', n));
    for (int n = 4; n <= max_rank; ++n) out.push_back(build_root_system('D', n));
    for (int n = 6; n <= std::min(8, max_rank); ++n) out.push_back(build_root_system('E', n));
    if (max_rank >= 4) out.push_back(build_root_system('F', 4));
    if (max_rank >= 2) out.push_back(build_root_system('G', 2));
    return out;
}

int cmd_verify(const Opts& o, std::ostream& out) {
    int max_rank = static_cast<int>(parse_ll(o.get("max-rank", "2"), "--max-rank"));
    long long depth = parse_ll(o.get("depth", "4"), "--depth");
    int failures = 0;
    auto report = [&](bool ok, const std::string& what) {
        out << (ok ? "[ok] " : "[FAIL] ") << what << "\n";
        if (!ok) ++failures;
    };
    for (const RootSystem& rs : verify_systems(max_rank)) {
        std::string tag = std::string(1, rs.kind) + std::to_string(rs.rank);
        Vec rho = rho_weight(rs);
        HWModuleDesc simple = describe_module(rs, rho, Family::SIMPLE);
        bool ok = true;
        std::string note;
        try {
            WeightSet ws = module_weights(rs, simple, depth);
            WeightSet oracle = lattice_hull_points(rs, simple, depth);
            ok = ws.weights == oracle.weights;
        } catch (const std::exception& e) {
            ok = false;
            note = std::string(": ") + e.what();
        }
        report(ok, tag + " weight formulas agree with hull lattice points" + note);

        ok = true;
        note.clear();
        try {
            HWModuleDesc verma = describe_module(rs, rho, Family::VERMA);
            FormalCharacter ch = truncated_character(rs, verma, depth);
            FormalCharacter raw = verma_character_raw(rs, rho, depth);
            ok = ch.mult == raw.mult;
        } catch (const std::exception& e) {
            ok = false;
            note = std::string(": ") + e.what();
        }
        report(ok, tag + " verma character matches the raw enumerator" + note);

        ok = true;
        note.clear();
        try {
            WeylElement w0 = longest_element(rs, rs.full_index_set());
            long long H = to_ll(height(rs, vec_sub(rho, apply(rs, w0, rho))));
            if (H <= 16) {
                FormalCharacter ch = truncated_character(rs, simple, H);
                long long total = 0;
                for (const auto& [mu, m] : ch.mult) {
                    if (freudenthal_mult(rs, rho, mu) != m) ok = false;
                    total += m;
                }
                if (total != weyl_dim(rs, rho)) ok = false;
            }
        } catch (const std::exception& e) {
            ok = false;
            note = std::string(": ") + e.what();
        }
        report(ok, tag + " simple character matches Freudenthal and the dimension" + note);

        ok = true;
        note.clear();
        try {
            for (const IVec& r : rs.positive_roots) {
                long long h = 0;
                for (long long c : r) h += c;
                if (h != 1) continue;
                for (const IVec& rp : rs.positive_roots) {
                    bool cmp = true;
                    for (int k = 0; k < rs.rank; ++k)
                        if (r[k] > rp[k]) cmp = false;
                    if (!cmp) continue;
                    if (!root_chain(rs, r, rp)) ok = false;
                }
            }
        } catch (const std::exception& e) {
            ok = false;
            note = std::string(": ") + e.what();
        }
        report(ok, tag + " root chains reach every comparable positive root" + note);
    }
    if (max_rank >= 2) {
        bool ok = true;
        std::string note;
        try {
            RootSystem a2 = build_root_system('A', 2);
            HWModuleDesc adj =
                describe_module(a2, a2.root_to_fw(a2.highest_root), Family::SIMPLE);
            ok = enumerate_faces(a2, adj).size() == 13;
        } catch (const std::exception& e) {
            ok = false;
            note = std::string(": ") + e.what();
        }
        report(ok, "A2 adjoint face lattice has 13 faces" + note);
    }
    out << (failures == 0 ? "verify passed" : "verify failed") << "\n";
    return failures == 0 ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{
        "Exact rational computations for weight sets, hulls, weak faces, characters, "
        "and chains of highest weight modules"};
    app.name("weylcrest");
    app.require_subcommand(1);

    Opts o;
    o.config = load_config();

    auto bind = [&o](CLI::App* sub, const std::string& flag, const std::string& key,
                     const std::string& desc_text) {
        sub->add_option_function<std::string>(
            flag, [&o, key](const std::string& v) { o.cli[key] = v; }, desc_text);
    };
    auto add_common = [&](CLI::App* sub) {
        bind(sub, "--type", "type", "Root system type, e.g. A2, or a letter with --rank");
        bind(sub, "--rank", "rank", "Rank when --type is a single letter");
        bind(sub, "--lambda", "lambda",
             "Highest weight, comma-separated rational fundamental coordinates");
        bind(sub, "--family", "family", "verma | parabolic:J | simple | generic:J (1-based J)");
        bind(sub, "--format", "format", "json (default) or text");
    };

    CLI::App* describe = app.add_subcommand(
        "describe", "Module descriptor: integrability, validity, Fernando set");
    add_common(describe);

    CLI::App* weights =
        app.add_subcommand("weights", "Truncated weight set, or a slice with --j");
    add_common(weights);
    bind(weights, "--depth", "depth", "Height truncation (default 8)");
    bind(weights, "--j", "j", "Slice subset, 1-based comma list");

    CLI::App* character = app.add_subcommand("character", "Truncated formal character");
    add_common(character);
    bind(character, "--depth", "depth", "Height truncation (default 8)");

    CLI::App* hull = app.add_subcommand("hull", "Convex hull data and stabilizer");
    add_common(hull);

    CLI::App* faces =
        app.add_subcommand("faces", "Enumerate faces, or test a candidate with --y");
    add_common(faces);
    bind(faces, "--depth", "depth", "Height truncation for --y (default 8)");
    bind(faces, "--y", "y", "Candidate subset, weights separated by ';'");
    bind(faces, "--coeff", "coeff", "Coefficient group: int (default), rat, scaled:a");
    bind(faces, "--bound", "bound", "Total-coefficient search bound (default 6)");
    bool positive = false;
    faces->add_flag("--positive", positive, "Test the positive weak face property");

    CLI::App* face_eq = app.add_subcommand("face-eq", "Face equality and interval");
    add_common(face_eq);
    bind(face_eq, "--j", "j", "First subset, 1-based comma list");
    bind(face_eq, "--j2", "j2", "Second subset, 1-based comma list");

    CLI::App* chain = app.add_subcommand("chain", "Saturated chain between weights");
    add_common(chain);
    bind(chain, "--depth", "depth", "Height truncation (default 8)");
    bind(chain, "--mu", "mu", "Lower weight (or root coordinates with --root)");
    bind(chain, "--mu2", "mu2", "Upper weight (or root coordinates with --root)");
    bool root_mode = false;
    chain->add_flag("--root", root_mode, "Chain of positive roots in root coordinates");

    CLI::App* verify = app.add_subcommand("verify", "Cross-check suite over small ranks");
    bind(verify, "--max-rank", "max-rank", "Largest rank to check (default 2)");
    bind(verify, "--depth", "depth", "Height truncation (default 4)");

    std::vector<const char*> argv;
    argv.push_back("weylcrest");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (describe->parsed()) return cmd_describe(o, out);
        if (weights->parsed()) return cmd_weights(o, out);
        if (character->parsed()) return cmd_character(o, out);
        if (hull->parsed()) return cmd_hull(o, out);
        if (faces->parsed()) return cmd_faces(o, positive, out);
        if (face_eq->parsed()) return cmd_face_eq(o, out);
        if (chain->parsed()) return cmd_chain(o, root_mode, out);
        if (verify->parsed()) return cmd_verify(o, out);
        err << "usage error: no subcommand\n";
        return 2;
    } catch (const domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const internal_error& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace weylcrest
