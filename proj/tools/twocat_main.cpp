// twocat -- command-line front end for the finite 2-category calculator.
//
// Every command loads structure files (see the io module for the
// format), runs one library operation and prints a report.  Exit codes:
//   0  the operation succeeded and the verdict, if any, is positive;
//   1  the operation ran but the verdict is negative (a law fails, a
//      filler does not exist, an equivalence breaks, ...);
//   2  the input is unusable (missing file, schema error, unknown cell,
//      out-of-range data, enumeration bound too small).

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "twocat/cat2.hpp"
#include "twocat/elevator.hpp"
#include "twocat/io.hpp"
#include "twocat/kan.hpp"
#include "twocat/model.hpp"
#include "twocat/pro.hpp"
#include "twocat/shape.hpp"

using namespace twocat;

namespace {

// ---- report plumbing ------------------------------------------------------

/// Accumulated command output: ordered key/value fields plus the final
/// verdict.  `text` prints "key: value" lines (multiline values
/// indented), `structured` prints one JSON object.
struct CmdReport {
    std::vector<std::pair<std::string, std::string>> fields;
    bool ok = true;

    void add(const std::string& key, const std::string& value) {
        fields.emplace_back(key, value);
    }
    void add(const std::string& key, int value) {
        add(key, std::to_string(value));
    }
    void add_yesno(const std::string& key, bool value) {
        add(key, value ? "yes" : "no");
    }
    /// Folds a validation report in: "ok" or the violation list, and
    /// the verdict joins the command verdict.
    void add_check(const std::string& key, const ValidationReport& r) {
        add(key, r.ok() ? "ok" : "\n" + r.to_string());
        ok = ok && r.ok();
    }

    int finish(const std::string& format) const {
        if (format == "structured") {
            nlohmann::json j;
            for (const auto& [k, v] : fields) j[k] = v;
            j["ok"] = ok;
            std::cout << j.dump(2) << "\n";
        } else {
            for (const auto& [k, v] : fields) {
                if (v.find('\n') == std::string::npos) {
                    std::cout << k << ": " << v << "\n";
                    continue;
                }
                std::cout << k << ":";
                std::istringstream lines(v);
                std::string line;
                while (std::getline(lines, line))
                    if (!line.empty()) std::cout << "\n  " << line;
                std::cout << "\n";
            }
            std::cout << "verdict: " << (ok ? "pass" : "fail") << "\n";
        }
        return ok ? 0 : 1;
    }
};

// ---- shared lookups ------------------------------------------------------

int named_ob(const TwoCat& c, const std::string& n, const std::string& ctx) {
    int i = c.object_index(n);
    if (i < 0) throw InputError(ctx + ": unknown object '" + n + "'");
    return i;
}

int named_one(const TwoCat& c, const std::string& n, const std::string& ctx) {
    int f = c.one_index(n);
    if (f < 0) throw InputError(ctx + ": unknown 1-cell '" + n + "'");
    return f;
}

int named_two(const TwoCat& c, const std::string& n, const std::string& ctx) {
    int a = c.two_index(n);
    if (a < 0) throw InputError(ctx + ": unknown 2-cell '" + n + "'");
    return a;
}

/// An object t every hom category I(i, t) of which is equivalent to the
/// point (nonempty, exactly one morphism between any two objects); -1
/// when there is none.
int find_2terminal(const TwoCat& I) {
    for (int t = 0; t < I.ob_count(); ++t) {
        bool good = true;
        for (int i = 0; i < I.ob_count() && good; ++i) {
            HomCat h = hom_category(I, i, t);
            if (h.cat.ob_count() == 0) good = false;
            for (int x = 0; x < h.cat.ob_count() && good; ++x)
                for (int y = 0; y < h.cat.ob_count() && good; ++y)
                    if (h.cat.hom(x, y).size() != 1) good = false;
        }
        if (good) return t;
    }
    return -1;
}

/// The two file-loading conveniences the commands share.
const TwoCat& want_twocat(Workspace& ws, const std::string& path) {
    std::string kind = peek_kind(path);
    if (kind != "twocat")
        throw InputError(path + ": expected a twocat file, found kind '" +
                         kind + "'");
    return load_twocat(ws, path);
}

const FinCat& want_fincat(Workspace& ws, const std::string& path) {
    std::string kind = peek_kind(path);
    if (kind != "category")
        throw InputError(path + ": expected a category file, found kind '" +
                         kind + "'");
    return load_fincat(ws, path);
}

// ---- commands -------------------------------------------------------------

int cmd_validate(const std::string& path, const std::string& format) {
    Workspace ws;
    CmdReport out;
    std::string kind = peek_kind(path);
    out.add("kind", kind);
    if (kind == "category") {
        const FinCat& c = load_fincat(ws, path);
        out.add("objects", c.ob_count());
        out.add("morphisms", c.mor_count());
        out.add_check("laws", validate_fincat(c));
    } else if (kind == "twocat") {
        const TwoCat& c = load_twocat(ws, path);
        out.add("objects", c.ob_count());
        out.add("one_cells", c.one_count());
        out.add("two_cells", c.two_count());
        out.add_check("laws", validate_twocat(c));
    } else if (kind == "functor") {
        out.add_check("laws", validate_functor(load_functor(ws, path)));
    } else if (kind == "diagram") {
        Cat2Functor F = load_diagram(ws, path);
        out.add_check("laws", validate_cat2functor(F));
    } else if (kind == "pseudofunctor") {
        const PseudoFunctor& F = load_pseudofunctor(ws, path);
        out.add_yesno("strict", F.is_strict());
        out.add_check("laws", validate_pseudofunctor(F));
    } else if (kind == "nattrans") {
        NatTrans t = load_nattrans(ws, path);
        out.add_check("laws", validate_nattrans(t));
    } else if (kind == "proobject") {
        ProObject X = load_pro_object(ws, path);
        out.add_check("laws", validate_pro_object(X));
    } else if (kind == "classes") {
        LoadedClasses lc = load_classes(ws, path);
        out.add("fibrations", (int)lc.classes.fibrations.size());
        out.add("cofibrations", (int)lc.classes.cofibrations.size());
        out.add("weak_equivalences",
                (int)lc.classes.weak_equivalences.size());
        out.add("laws", "ok");
    } else if (kind == "square") {
        LoadedSquare ls = load_square(ws, path);
        out.add_check("laws",
                      validate_lifting_square(*ls.twocat, ls.square));
    } else if (kind == "retract") {
        LoadedSquare ls = load_square(ws, path);
        try {
            bool holds = check_retract(*ls.twocat, ls.retract);
            out.add_yesno("equation", holds);
            out.ok = out.ok && holds;
        } catch (const InputError& e) {
            out.add("equation", std::string("malformed: ") + e.what());
            out.ok = false;
        }
    } else if (kind == "factorization") {
        LoadedSquare ls = load_square(ws, path);
        // frame checking happens while assembling the canonical square
        try {
            LiftingSquare sq =
                first_factor_square(*ls.twocat, ls.cell, ls.factorization);
            out.add_check("laws", validate_lifting_square(*ls.twocat, sq));
        } catch (const InputError& e) {
            out.add("laws", std::string("malformed: ") + e.what());
            out.ok = false;
        }
    } else {
        throw InputError(path + ": no validator for kind '" + kind + "'");
    }
    return out.finish(format);
}

int cmd_check_filtered(const std::string& path, const std::string& format) {
    Workspace ws;
    CmdReport out;
    out.add_check("filtered", check_2filtered(want_twocat(ws, path)));
    return out.finish(format);
}

int cmd_check_cofinal(const std::string& path, const std::string& format) {
    Workspace ws;
    std::string kind = peek_kind(path);
    if (kind != "pseudofunctor")
        throw InputError(path + ": expected a pseudofunctor file, found '" +
                         kind + "'");
    const PseudoFunctor& F = load_pseudofunctor(ws, path);
    CmdReport out;
    out.add_check("laws", validate_pseudofunctor(F));
    out.add_check("cofinal", check_2cofinal(F));
    return out.finish(format);
}

int cmd_colim(const std::string& path, bool oracle,
              const std::string& format) {
    Workspace ws;
    Cat2Functor F = load_diagram(ws, path);
    validate_cat2functor(F).expect_ok("colim");
    LLColimit L = ll_colimit(F);
    CmdReport out;
    out.add("objects", L.cat.ob_count());
    out.add("morphisms", L.cat.mor_count());
    out.add("colimit", "\n" + describe(L.cat));
    if (oracle) {
        const TwoCat& I = *F.dom;
        int t = find_2terminal(I);
        if (t < 0) {
            out.add("terminal", "none");
            out.ok = false;
        } else {
            out.add("terminal", I.objects[t]);
            TwoCat T = terminal_twocat();
            PseudoFunctor R =
                make_strict(T, I, {t}, {I.id1[t]}, {I.id2[I.id1[t]]});
            Cat2Functor GR = reindex_cat2(F, R);
            LLColimit LR = ll_colimit(GR);
            CatFunctor h = comparison_functor(LR, L, R);
            EquivalenceVerdict v = explain_equivalence(h);
            out.add_yesno("equivalence", v.ok);
            if (!v.ok) out.add("reason", v.reason);
            out.ok = out.ok && v.ok;
        }
    }
    return out.finish(format);
}

int cmd_lim(const std::string& path, const std::string& format) {
    Workspace ws;
    Cat2Functor F = load_diagram(ws, path);
    validate_cat2functor(F).expect_ok("lim");
    DescentCat D = pseudo_limit_cat(F);
    CmdReport out;
    out.add("objects", D.cat.ob_count());
    out.add("morphisms", D.cat.mor_count());
    out.add("limit", "\n" + describe(D.cat));
    return out.finish(format);
}

int cmd_factor(const std::string& path, const std::string& cell,
               const std::string& classes_path, const std::string& format) {
    Workspace ws;
    const TwoCat& c = want_twocat(ws, path);
    int f = named_one(c, cell, "factor");
    std::optional<ModelClasses> cls;
    if (!classes_path.empty()) {
        LoadedClasses lc = load_classes(ws, classes_path);
        if (lc.twocat != &c)
            throw InputError("factor: the classes file presents a different "
                             "2-category (reference the same file)");
        cls = lc.classes;
    }
    std::vector<char> fib(c.one_count(), 0), cof(c.one_count(), 0),
        weq(c.one_count(), 0);
    if (cls) {
        for (int m : cls->fibrations) fib[m] = 1;
        for (int m : cls->cofibrations) cof[m] = 1;
        for (int m : cls->weak_equivalences) weq[m] = 1;
    }
    CmdReport out;
    int found = 0, kind1 = 0, kind2 = 0;
    for (int i = 0; i < c.one_count(); ++i) {
        if (c.src1[i] != c.src1[f]) continue;
        for (int p = 0; p < c.one_count(); ++p) {
            if (!c.composable1(p, i) || c.tgt1[p] != c.tgt1[f]) continue;
            int pi = c.hcomp1[p][i];
            if (pi < 0) continue;
            for (int gamma : c.two_hom(pi, f)) {
                if (!c.is_invertible2(gamma)) continue;
                std::string tag = c.one_cells[p] + " after " +
                                  c.one_cells[i] + " via " +
                                  c.two_cells[gamma];
                if (cls) {
                    bool k1 = cof[i] && weq[i] && fib[p];
                    bool k2 = cof[i] && fib[p] && weq[p];
                    kind1 += k1;
                    kind2 += k2;
                    if (k1) tag += " [cofibration-and-weak-equivalence, "
                                   "fibration]";
                    if (k2) tag += " [cofibration, "
                                   "fibration-and-weak-equivalence]";
                }
                out.add("factorization." + std::to_string(found++), tag);
            }
        }
    }
    out.add("factorizations", found);
    if (cls) {
        out.add("trivial_cofibration_then_fibration", kind1);
        out.add("cofibration_then_trivial_fibration", kind2);
        out.ok = kind1 > 0 && kind2 > 0;
    } else {
        out.ok = found > 0;
    }
    return out.finish(format);
}

int cmd_compare(const std::string& diag, const std::string& pfun,
                const std::string& format) {
    Workspace ws;
    Cat2Functor G = load_diagram(ws, diag);
    validate_cat2functor(G).expect_ok("compare");
    const PseudoFunctor& R = load_pseudofunctor(ws, pfun);
    if (R.cod != G.dom)
        throw InputError("compare: the reindexing does not land in the "
                         "diagram's index (reference the same index file)");
    validate_pseudofunctor(R).expect_ok("compare");
    CmdReport out;
    out.add_check("cofinal", check_2cofinal(R));
    Cat2Functor GR = reindex_cat2(G, R);
    LLColimit LR = ll_colimit(GR);
    LLColimit LG = ll_colimit(G);
    CatFunctor h = comparison_functor(LR, LG, R);
    out.add("restricted_objects", LR.cat.ob_count());
    out.add("original_objects", LG.cat.ob_count());
    EquivalenceVerdict v = explain_equivalence(h);
    out.add_yesno("equivalence", v.ok);
    if (!v.ok) out.add("reason", v.reason);
    out.ok = out.ok && v.ok;
    return out.finish(format);
}

int cmd_mj(const std::string& path, int bound, int slack,
           const std::string& format) {
    Workspace ws;
    MJPoset M = build_MJ(want_twocat(ws, path), bound);
    CmdReport out;
    out.add("classes", (int)M.elems.size());
    out.add_check("well_defined", M.report);
    out.add_check("filtered", check_MJ_filtered(M, slack));
    out.add_check("cofinal", check_phi_cofinal(M, slack));
    return out.finish(format);
}

int cmd_hat(const std::string& path, int bound, const std::string& format) {
    Workspace ws;
    const FinCat& A = want_fincat(ws, path);
    HatTwoCat hat = build_hat(A, bound);
    CmdReport out;
    out.add("objects", hat.cat.ob_count());
    out.add("one_cells", hat.cat.one_count());
    out.add("two_cells", hat.cat.two_count());
    out.add_check("laws", validate_twocat(hat.cat));
    TwoCat A2 = discrete2(A);
    PseudoFunctor unit = hat_unit(hat, A2);
    out.add_check("unit", validate_pseudofunctor(unit));
    out.add_check("unit_cofinal", check_2cofinal(unit));
    return out.finish(format);
}

int cmd_pro_hom(const std::string& xpath, const std::string& ypath,
                const std::string& format) {
    Workspace ws;
    ProObject X = load_pro_object(ws, xpath);
    ProObject Y = load_pro_object(ws, ypath);
    ProHom E = pro_hom(X, Y);
    CmdReport out;
    out.add("pro_morphisms", E.cat().ob_count());
    out.add("pro_two_cells", E.cat().mor_count());
    out.add("levels", (int)E.level.size());
    out.add("category", "\n" + describe(E.cat()));
    return out.finish(format);
}

int cmd_represent(const std::string& xpath, const std::string& ypath, int f,
                  const std::string& level, const std::string& format) {
    Workspace ws;
    ProObject X = load_pro_object(ws, xpath);
    ProObject Y = load_pro_object(ws, ypath);
    ProHom E = pro_hom(X, Y);
    if (f < 0 || f >= E.cat().ob_count())
        throw InputError("represent: pro-morphism " + std::to_string(f) +
                         " out of range (category has " +
                         std::to_string(E.cat().ob_count()) + " objects)");
    int j = named_ob(*Y.index, level, "represent");
    Representative rep = find_representative(E, f, j);
    CmdReport out;
    out.add("source_level", X.index->objects[rep.i]);
    out.add("target_level", Y.index->objects[rep.j]);
    out.add("cell", X.target->one_cells[rep.r]);
    out.add("witness_class", rep.phi);
    out.add_yesno("represents", check_represents(E, rep, f));
    out.ok = out.ok && check_represents(E, rep, f);
    return out.finish(format);
}

int cmd_straighten(const std::string& xpath, const std::string& at, int m,
                   const std::string& format) {
    Workspace ws;
    ProObject X = load_pro_object(ws, xpath);
    int d = named_ob(*X.target, at, "straighten");
    HomLevel L = hom_level(X, d);
    if (m < 0 || m >= L.colim->cat.mor_count())
        throw InputError("straighten: class " + std::to_string(m) +
                         " out of range (level has " +
                         std::to_string(L.colim->cat.mor_count()) +
                         " classes)");
    Straightened s = straighten(L, m);
    CmdReport out;
    out.add("apex", X.index->objects[s.k]);
    out.add("left", X.index->one_cells[s.u]);
    out.add("right", X.index->one_cells[s.v]);
    out.add("cell", X.target->two_cells[s.theta]);
    return out.finish(format);
}

int cmd_equalize(const std::string& xpath, const std::string& at,
                 const std::vector<std::string>& pair_specs,
                 const std::string& format) {
    Workspace ws;
    ProObject X = load_pro_object(ws, xpath);
    int i = named_ob(*X.index, at, "equalize");
    std::vector<std::pair<int, int>> pairs;
    for (const std::string& spec : pair_specs) {
        size_t comma = spec.find(',');
        if (comma == std::string::npos)
            throw InputError("equalize: --pair takes 'theta,eta' "
                             "(two ambient 2-cell names)");
        pairs.emplace_back(
            named_two(*X.target, spec.substr(0, comma), "equalize"),
            named_two(*X.target, spec.substr(comma + 1), "equalize"));
    }
    int u = equalize(X, i, pairs);
    CmdReport out;
    out.add("equalizer", X.index->one_cells[u]);
    out.add("to", X.index->objects[X.index->tgt1[u]]);
    return out.finish(format);
}

int cmd_mf(const std::string& xpath, const std::string& ypath, int f,
           int bound, const std::string& format) {
    Workspace ws;
    ProObject X = load_pro_object(ws, xpath);
    ProObject Y = load_pro_object(ws, ypath);
    ProHom E = pro_hom(X, Y);
    if (f < 0 || f >= E.cat().ob_count())
        throw InputError("mf: pro-morphism " + std::to_string(f) +
                         " out of range (category has " +
                         std::to_string(E.cat().ob_count()) + " objects)");
    MfTruncation M = build_Mf(E, f, bound);
    CmdReport out;
    out.add("objects", M.cells->ob_count());
    out.add("one_cells", M.cells->one_count());
    out.add("two_cells", M.cells->two_count());
    out.add_check("filtered", M.filtered);
    out.add_check("source_cofinal", M.source_cofinal);
    out.add_check("target_cofinal", M.target_cofinal);
    return out.finish(format);
}

int cmd_kx(const std::string& jpath, const std::string& xpath, int bound,
           const std::string& format) {
    Workspace ws;
    const TwoCat& J = want_twocat(ws, jpath);
    ProObject X = load_pro_object(ws, xpath);
    ProDiagram D = constant_pro_diagram(J, X);
    validate_pro_diagram(D).expect_ok("kx");
    KXTruncation K = build_KX(D, bound);
    CmdReport out;
    out.add("objects", K.cells->ob_count());
    out.add("one_cells", K.cells->one_count());
    out.add("two_cells", K.cells->two_count());
    out.add_check("filtered", K.filtered);
    out.add_check("total", validate_pro_object(K.total));
    return out.finish(format);
}

int cmd_reindex(const std::string& xpath, const std::string& fpath,
                const std::string& format) {
    Workspace ws;
    ProObject X = load_pro_object(ws, xpath);
    const PseudoFunctor& F = load_pseudofunctor(ws, fpath);
    ReindexResult R = reindex_pro(X, F);
    CmdReport out;
    out.add_check("restricted", validate_pro_object(R.object));
    for (const ReindexCertificate& cert : R.certificate) {
        std::string key =
            "level." + X.target->objects[cert.target_ob];
        out.add_yesno(key, cert.verdict.ok);
        if (!cert.verdict.ok) out.add(key + ".reason", cert.verdict.reason);
    }
    out.add_yesno("equivalence", R.equivalent());
    out.ok = out.ok && R.equivalent();
    return out.finish(format);
}

int cmd_lift(const std::string& path, const std::string& format) {
    Workspace ws;
    LoadedSquare ls = load_square(ws, path);
    if (ls.kind != "square")
        throw InputError(path + ": lift expects a square file, found kind '" +
                         ls.kind + "'");
    const TwoCat& c = *ls.twocat;
    std::optional<Filler> fill = solve_lifting(c, ls.square);
    CmdReport out;
    if (fill) {
        out.add("filler", "(" + c.one_cells[fill->f] + ", " +
                              c.two_cells[fill->lambda] + ", " +
                              c.two_cells[fill->rho] + ")");
    } else {
        out.add("filler", "none");
        out.ok = false;
    }
    return out.finish(format);
}

int cmd_retract(const std::string& path, const std::string& via,
                const std::string& format) {
    Workspace ws;
    LoadedSquare ls = load_square(ws, path);
    if (ls.kind != "factorization")
        throw InputError(path + ": retract expects a factorization file, "
                         "found kind '" + ls.kind + "'");
    const TwoCat& c = *ls.twocat;
    RetractData d =
        via == "first"
            ? retract_of_first_factor(c, ls.cell, ls.factorization)
            : retract_of_second_factor(c, ls.cell, ls.factorization);
    CmdReport out;
    out.add("retract_of", c.one_cells[d.g]);
    out.add("sections", "(" + c.one_cells[d.theta0] + ", " +
                            c.one_cells[d.theta1] + ", " +
                            c.two_cells[d.theta_m] + ")");
    out.add("retractions", "(" + c.one_cells[d.eta0] + ", " +
                               c.one_cells[d.eta1] + ", " +
                               c.two_cells[d.eta_m] + ")");
    out.add("counits", "(" + c.two_cells[d.mu0] + ", " +
                           c.two_cells[d.mu1] + ")");
    bool holds = check_retract(c, d);
    out.add_yesno("equation", holds);
    out.ok = out.ok && holds;
    return out.finish(format);
}

int cmd_model_check(const std::string& path, const std::string& format) {
    Workspace ws;
    LoadedClasses lc = load_classes(ws, path);
    AxiomReport report = check_model_axioms(*lc.twocat, lc.classes);
    CmdReport out;
    for (const AxiomVerdict& v : report.verdicts) {
        std::string value = !v.checked ? "not checked"
                            : v.holds  ? "holds"
                                       : "fails";
        for (const std::string& note : v.notes) value += "\n" + note;
        out.add(v.axiom, value);
    }
    out.ok = report.ok();
    return out.finish(format);
}

int cmd_export_dot(const std::string& path, const std::string& outfile) {
    Workspace ws;
    std::string kind = peek_kind(path);
    std::string dot;
    if (kind == "category") {
        dot = export_dot(load_fincat(ws, path));
    } else if (kind == "twocat") {
        dot = export_dot(load_twocat(ws, path));
    } else {
        throw InputError(path + ": export-dot expects a category or twocat "
                         "file, found kind '" + kind + "'");
    }
    if (outfile.empty()) {
        std::cout << dot;
    } else {
        std::ofstream out(outfile);
        if (!out) throw InputError(outfile + ": cannot open for writing");
        out << dot;
    }
    return 0;
}

int cmd_eval(const std::string& path, const std::string& lhs,
             const std::string& rhs, const std::string& format) {
    Workspace ws;
    const TwoCat& c = want_twocat(ws, path);
    CmdReport out;
    if (rhs.empty()) {
        int cell = eval_elevator(c, lhs);
        out.add("cell", c.two_cells[cell]);
        out.add("src", c.one_cells[c.src2[cell]]);
        out.add("tgt", c.one_cells[c.tgt2[cell]]);
    } else {
        out.add("left", c.two_cells[eval_elevator(c, lhs)]);
        out.add("right", c.two_cells[eval_elevator(c, rhs)]);
        bool eq = elevator_equal(c, lhs, rhs);
        out.add_yesno("equal", eq);
        out.ok = eq;
    }
    return out.finish(format);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite 2-category calculator"};
    app.require_subcommand(1);

    int bound = 4;
    int slack = 1;
    unsigned long seed = 0;
    std::string format = "text";
    app.add_option("--bound", bound, "enumeration cap for truncations")
        ->capture_default_str();
    app.add_option("--slack", slack,
                   "extra search depth for filtered/cofinal witnesses")
        ->capture_default_str();
    app.add_option("--seed", seed, "seed for sampling commands (reserved)")
        ->capture_default_str();
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "structured"}))
        ->capture_default_str();

    std::string file, file2, cell, classes_path, outfile, level, at, via,
        lhs, rhs;
    std::vector<std::string> pair_specs;
    int mor = -1;
    bool oracle = false;

    CLI::App* validate =
        app.add_subcommand("validate", "check the laws of a structure file");
    validate->add_option("file", file)->required();

    CLI::App* filtered = app.add_subcommand(
        "check-filtered", "2-filteredness of a 2-category");
    filtered->add_option("file", file)->required();

    CLI::App* cofinal = app.add_subcommand(
        "check-cofinal", "2-cofinality of a pseudo-functor");
    cofinal->add_option("file", file)->required();

    CLI::App* colim = app.add_subcommand(
        "colim", "filtered pseudo-colimit of a diagram of categories");
    colim->add_option("file", file)->required();
    colim->add_flag("--check-terminal-oracle", oracle,
                    "compare against the value at a 2-terminal object");

    CLI::App* lim = app.add_subcommand(
        "lim", "pseudo-limit of a diagram of categories");
    lim->add_option("file", file)->required();

    CLI::App* factor = app.add_subcommand(
        "factor", "factorizations of a 1-cell up to invertible 2-cell");
    factor->add_option("file", file)->required();
    factor->add_option("--cell", cell, "1-cell to factor")->required();
    factor->add_option("--classes", classes_path,
                       "classes file; demands both model kinds");

    CLI::App* compare = app.add_subcommand(
        "compare", "colimit comparison along a reindexing pseudo-functor");
    compare->add_option("diagram", file)->required();
    compare->add_option("reindex", file2)->required();

    CLI::App* mj = app.add_subcommand(
        "mj", "poset of diagram classes with its projection");
    mj->add_option("file", file)->required();

    CLI::App* hat = app.add_subcommand(
        "hat", "tuple 2-category of a category with its unit");
    hat->add_option("file", file)->required();

    CLI::App* prohom = app.add_subcommand(
        "pro-hom", "category of pro-morphisms between two pro-objects");
    prohom->add_option("source", file)->required();
    prohom->add_option("target", file2)->required();

    CLI::App* represent = app.add_subcommand(
        "represent", "single-cell representative of a pro-morphism");
    represent->add_option("source", file)->required();
    represent->add_option("target", file2)->required();
    represent->add_option("--mor", mor, "pro-morphism (object number)")
        ->required();
    represent->add_option("--level", level, "target index object")
        ->required();

    CLI::App* straight = app.add_subcommand(
        "straighten", "cospan presentation of a hom-level class");
    straight->add_option("source", file)->required();
    straight->add_option("--at", at, "target object of the hom level")
        ->required();
    straight->add_option("--class", mor, "class (morphism number)")
        ->required();

    CLI::App* equalizec = app.add_subcommand(
        "equalize", "one index 1-cell identifying ambient 2-cell pairs");
    equalizec->add_option("source", file)->required();
    equalizec->add_option("--at", at, "index object the cells live over")
        ->required();
    equalizec->add_option("--pair", pair_specs,
                          "ambient 2-cell pair 'theta,eta' (repeatable)")
        ->required();

    CLI::App* mf = app.add_subcommand(
        "mf", "representative 2-category of a pro-morphism");
    mf->add_option("source", file)->required();
    mf->add_option("target", file2)->required();
    mf->add_option("--mor", mor, "pro-morphism (object number)")->required();

    CLI::App* kx = app.add_subcommand(
        "kx", "glued index of the constant pro-diagram over an outer shape");
    kx->add_option("shape", file)->required();
    kx->add_option("source", file2)->required();

    CLI::App* reindex = app.add_subcommand(
        "reindex", "restrict a pro-object along a 2-cofinal pseudo-functor");
    reindex->add_option("source", file)->required();
    reindex->add_option("functor", file2)->required();

    CLI::App* lift = app.add_subcommand(
        "lift", "solve a lifting square for an invertible-triangle filler");
    lift->add_option("file", file)->required();

    CLI::App* retract = app.add_subcommand(
        "retract", "present a 1-cell as a retract of one factor");
    retract->add_option("file", file)->required();
    retract->add_option("--via", via, "which factor carries the retract")
        ->check(CLI::IsMember({"first", "second"}))
        ->required();

    CLI::App* model = app.add_subcommand(
        "model-check", "closed 2-bmodel axiom verdicts for class data");
    model->add_option("file", file)->required();

    CLI::App* dot = app.add_subcommand(
        "export-dot", "DOT digraph of a category or 2-category");
    dot->add_option("file", file)->required();
    dot->add_option("-o,--output", outfile, "write to a file");

    CLI::App* eval = app.add_subcommand(
        "eval", "evaluate elevator expressions over a 2-category");
    eval->add_option("file", file)->required();
    eval->add_option("expr", lhs, "expression")->required();
    eval->add_option("rhs", rhs, "optional second expression to compare");

    for (CLI::App* sub :
         {validate, filtered, cofinal, colim, lim, factor, compare, mj, hat,
          prohom, represent, straight, equalizec, mf, kx, reindex, lift,
          retract, model, dot, eval})
        sub->fallthrough(); // --bound and friends may follow the subcommand

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2; // command-line misuse is an input error
    }

    try {
        if (validate->parsed()) return cmd_validate(file, format);
        if (filtered->parsed()) return cmd_check_filtered(file, format);
        if (cofinal->parsed()) return cmd_check_cofinal(file, format);
        if (colim->parsed()) return cmd_colim(file, oracle, format);
        if (lim->parsed()) return cmd_lim(file, format);
        if (factor->parsed())
            return cmd_factor(file, cell, classes_path, format);
        if (compare->parsed()) return cmd_compare(file, file2, format);
        if (mj->parsed()) return cmd_mj(file, bound, slack, format);
        if (hat->parsed()) return cmd_hat(file, bound, format);
        if (prohom->parsed()) return cmd_pro_hom(file, file2, format);
        if (represent->parsed())
            return cmd_represent(file, file2, mor, level, format);
        if (straight->parsed()) return cmd_straighten(file, at, mor, format);
        if (equalizec->parsed())
            return cmd_equalize(file, at, pair_specs, format);
        if (mf->parsed()) return cmd_mf(file, file2, mor, bound, format);
        if (kx->parsed()) return cmd_kx(file, file2, bound, format);
        if (reindex->parsed()) return cmd_reindex(file, file2, format);
        if (lift->parsed()) return cmd_lift(file, format);
        if (retract->parsed()) return cmd_retract(file, via, format);
        if (model->parsed()) return cmd_model_check(file, format);
        if (dot->parsed()) return cmd_export_dot(file, outfile);
        if (eval->parsed()) return cmd_eval(file, lhs, rhs, format);
    } catch (const HypothesisFails& e) {
        std::cerr << "hypothesis fails: " << e.what() << "\n";
        return 1;
    } catch (const NoFiller& e) {
        std::cerr << "no filler: " << e.what() << "\n";
        return 1;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
