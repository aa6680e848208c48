#include <doctest.h>

#include "support/fixtures.hpp"
#include "twocat/io.hpp"

#include <filesystem>
#include <fstream>
#include <string>

using namespace twocat;

namespace {

namespace fs = std::filesystem;

/// A scratch directory for structure files, wiped per test case.
fs::path scratch() {
    fs::path dir = fs::temp_directory_path() / "twocat_io_test";
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string put(const fs::path& dir, const std::string& name,
                const std::string& text) {
    fs::path p = dir / name;
    std::ofstream out(p);
    out << text;
    return p.string();
}

/// The pseudo-functor that wraps the walking composable pair around the
/// suspended cyclic group: strict everywhere except on the one genuine
/// composite, whose compositor is the generator.
PseudoFunctor wrap_pair(const TwoCat& A2, const TwoCat& Z) {
    int s = Z.object_index("s");
    int e = Z.id1[s];
    std::vector<int> ob(A2.ob_count(), s);
    std::vector<int> one(A2.one_count(), e);
    std::vector<int> two(A2.two_count(), Z.id2[e]);
    PseudoFunctor F = make_strict(A2, Z, ob, one, two);
    F.compositor[A2.one_index("a12")][A2.one_index("a01")] =
        Z.two_index("r1");
    return F;
}

TEST_SUITE("io") {

TEST_CASE("category files round-trip byte for byte") {
    fs::path dir = scratch();
    for (const FinCat& c : {chain3_cat(), parallel_pair_cat(), cospan_cat(),
                            isopair_cat(), terminal_cat()}) {
        std::string text = write_fincat(c);
        std::string path = put(dir, "c.cat", text);
        Workspace ws;
        const FinCat& back = load_fincat(ws, path);
        CHECK(write_fincat(back) == text);
        CHECK(back.ob_count() == c.ob_count());
        CHECK(back.mor_count() == c.mor_count());
        CHECK(validate_fincat(back).ok() == validate_fincat(c).ok());
    }
    Workspace ws;
    std::string path = put(dir, "two.cat", write_fincat(chain3_cat()));
    const FinCat& a = load_fincat(ws, path);
    const FinCat& b = load_fincat(ws, "two.cat" == path ? path : path);
    CHECK(&a == &b); // same canonical path, one instance
}

TEST_CASE("twocat files round-trip and regenerate forced tables") {
    fs::path dir = scratch();
    TwoCat cats[] = {fixtures::suspension_z3(), fixtures::cell2_inv(),
                     fixtures::idempotent_monoid2(), terminal_twocat()};
    for (const TwoCat& c : cats) {
        REQUIRE(validate_twocat(c).ok());
        std::string text = write_twocat(c);
        std::string path = put(dir, "c.2cat", text);
        Workspace ws;
        const TwoCat& back = load_twocat(ws, path);
        CHECK(write_twocat(back) == text);
        CHECK(validate_twocat(back).ok());
        CHECK(back.two_count() == c.two_count());
    }
    // Forced entries are regenerated, not stored: the suspension's
    // vcomp/hcomp2 tables are total again after a round trip.
    Workspace ws;
    std::string path = put(dir, "z3.2cat", write_twocat(fixtures::suspension_z3()));
    const TwoCat& z = load_twocat(ws, path);
    int r1 = z.two_index("r1");
    int r2 = z.two_index("r2");
    CHECK(z.vcompose(r1, r1) == r2);
    CHECK(z.hcompose2(r2, r2) == r1);
}

TEST_CASE("functor and nattrans files round-trip") {
    fs::path dir = scratch();
    FinCat A = arrow_cat();
    FinCat B = chain3_cat();
    CatFunctor F;
    F.dom = &A;
    F.cod = &B;
    F.ob = {B.object_index("0"), B.object_index("2")};
    F.mor.assign(A.mor_count(), -1);
    F.mor[A.id_of[0]] = B.id_of[F.ob[0]];
    F.mor[A.id_of[1]] = B.id_of[F.ob[1]];
    F.mor[A.morphism_index("a01")] = B.morphism_index("a02");
    REQUIRE(validate_functor(F).ok());
    std::string ftext = write_functor(F);
    std::string fpath = put(dir, "f.fun", ftext);
    Workspace ws;
    const CatFunctor& Fb = load_functor(ws, fpath);
    CHECK(write_functor(Fb) == ftext);
    CHECK(validate_functor(Fb).ok());
    CHECK(Fb(Fb.dom->morphism_index("a01")) ==
          Fb.cod->morphism_index("a02"));

    FinCat T = terminal_cat();
    CatFunctor c0;
    c0.dom = &T;
    c0.cod = &A;
    c0.ob = {0};
    c0.mor = {A.id_of[0]};
    CatFunctor c1;
    c1.dom = &T;
    c1.cod = &A;
    c1.ob = {1};
    c1.mor = {A.id_of[1]};
    NatTrans t;
    t.src = &c0;
    t.tgt = &c1;
    t.component = {A.morphism_index("a01")};
    REQUIRE(validate_nattrans(t).ok());
    std::string ntext = write_nattrans(t);
    std::string npath = put(dir, "t.nat", ntext);
    NatTrans tb = load_nattrans(ws, npath);
    CHECK(write_nattrans(tb) == ntext);
    CHECK(validate_nattrans(tb).ok());
    CHECK(tb.at(0) == tb.src->cod->morphism_index("a01"));
}

TEST_CASE("pseudofunctor files keep only the non-identity coherence") {
    fs::path dir = scratch();
    TwoCat A2 = discrete2(chain3_cat());
    TwoCat Z = fixtures::suspension_z3();
    PseudoFunctor F = wrap_pair(A2, Z);
    REQUIRE(validate_pseudofunctor(F).ok());
    std::string text = write_pseudofunctor(F);
    // only the non-identity coherence is spelled out
    CHECK(text.find("r1") != std::string::npos);
    CHECK(text.find("\"unitor\": {}") != std::string::npos);
    std::string path = put(dir, "f.pfun", text);
    Workspace ws;
    const PseudoFunctor& Fb = load_pseudofunctor(ws, path);
    CHECK(write_pseudofunctor(Fb) == text);
    CHECK(validate_pseudofunctor(Fb).ok());
    CHECK_FALSE(Fb.is_strict());
    const TwoCat& dom = *Fb.dom;
    CHECK(Fb.compositor[dom.one_index("a12")][dom.one_index("a01")] ==
          Fb.cod->two_index("r1"));
    // strict identity on the suspension stays strict through a file
    PseudoFunctor I = identity_pseudofunctor(Z);
    std::string ipath = put(dir, "i.pfun", write_pseudofunctor(I));
    const PseudoFunctor& Ib = load_pseudofunctor(ws, ipath);
    CHECK(Ib.is_strict());
    CHECK(write_pseudofunctor(Ib) == write_pseudofunctor(I));
    CHECK(write_pseudofunctor(I).find("\"compositor\": []") !=
          std::string::npos);
}

TEST_CASE("diagram files round-trip") {
    fs::path dir = scratch();
    TwoCat I = discrete2(arrow_cat());
    Cat2Functor F;
    F.dom = &I;
    F.value.push_back(std::make_unique<FinCat>(terminal_cat()));
    F.value.push_back(std::make_unique<FinCat>(arrow_cat()));
    F.fmap.resize(I.one_count());
    F.fmap[I.id1[0]] = identity_functor(*F.value[0]);
    F.fmap[I.id1[1]] = identity_functor(*F.value[1]);
    int a01 = I.one_index("a01");
    CatFunctor leg;
    leg.dom = F.value[0].get();
    leg.cod = F.value[1].get();
    leg.ob = {0};
    leg.mor = {F.value[1]->id_of[0]};
    F.fmap[a01] = leg;
    F.nmap.resize(I.two_count());
    for (int f = 0; f < I.one_count(); ++f) {
        const FinCat& vi = *F.value[I.src1[f]];
        const FinCat& vj = *F.value[I.tgt1[f]];
        std::vector<int> comp(vi.ob_count());
        for (int x = 0; x < vi.ob_count(); ++x)
            comp[x] = vj.id_of[F.fmap[f].ob[x]];
        F.nmap[I.id2[f]] = comp;
    }
    REQUIRE(validate_cat2functor(F).ok());
    std::string text = write_diagram(F);
    std::string path = put(dir, "d.fun", text);
    Workspace ws;
    Cat2Functor Fb = load_diagram(ws, path);
    CHECK(write_diagram(Fb) == text);
    CHECK(validate_cat2functor(Fb).ok());
    CHECK(Fb.value[1]->mor_count() == 3);
    CHECK(Fb.fmap[a01].ob[0] == 0);
}

TEST_CASE("pro-object files share a target referenced by path") {
    fs::path dir = scratch();
    put(dir, "c.2cat", write_twocat(fixtures::cell2_inv()));
    std::string index_text = write_twocat(terminal_twocat());
    put(dir, "pt.2cat", index_text);
    auto pro_text = [&](const std::string& value) {
        return std::string("{\n")
            + "  \"format_version\": 1,\n"
            + "  \"kind\": \"proobject\",\n"
            + "  \"index\": \"pt.2cat\",\n"
            + "  \"target\": \"c.2cat\",\n"
            + "  \"ob\": {\"*\": \"" + value + "\"},\n"
            + "  \"one\": {},\n"
            + "  \"two\": {}\n"
            + "}\n";
    };
    std::string xpath = put(dir, "x.pro", pro_text("A"));
    std::string ypath = put(dir, "y.pro", pro_text("B"));
    Workspace ws;
    ProObject X = load_pro_object(ws, xpath);
    ProObject Y = load_pro_object(ws, ypath);
    CHECK(X.target == Y.target); // deduplicated through the canonical path
    CHECK(X.index == Y.index);
    REQUIRE(validate_pro_object(X).ok());
    REQUIRE(validate_pro_object(Y).ok());
    ProHom E = pro_hom(X, Y);
    // morphisms of constant pro-objects are plain hom categories:
    // two 1-cells A -> B, so two colimit objects
    CHECK(E.cat().ob_count() == 2);

    // inline form written by the library round-trips byte for byte
    TwoCat C = fixtures::cell2_inv();
    ProObject Z = constant_pro_object(C, C.object_index("A"));
    std::string ztext = write_pro_object(Z);
    std::string zpath = put(dir, "z.pro", ztext);
    ProObject Zb = load_pro_object(ws, zpath);
    CHECK(write_pro_object(Zb) == ztext);
    CHECK(Zb.ob(0) == C.object_index("A"));
}

TEST_CASE("classes, squares, retracts and factorizations round-trip") {
    fs::path dir = scratch();
    TwoCat C = fixtures::isopair2();
    ModelClasses cls;
    for (int f = 0; f < C.one_count(); ++f) {
        cls.fibrations.push_back(f);
        cls.weak_equivalences.push_back(f);
    }
    cls.cofibrations = {C.one_index("a")};
    std::string ctext = write_classes(C, cls);
    std::string cpath = put(dir, "c.classes", ctext);
    Workspace ws;
    LoadedClasses lc = load_classes(ws, cpath);
    CHECK(write_classes(*lc.twocat, lc.classes) == ctext);
    CHECK(lc.classes.cofibrations.size() == 1);
    CHECK(lc.classes.fibrations.size() == (size_t)C.one_count());
    CHECK(peek_kind(cpath) == "classes");

    // the invertible-pair square: both verticals are a, the filler is b
    LiftingSquare sq;
    sq.i = C.one_index("a");
    sq.p = C.one_index("a");
    sq.a = C.id1[C.object_index("0")];
    sq.b = C.id1[C.object_index("1")];
    sq.gamma = C.id2[C.one_index("a")];
    REQUIRE(validate_lifting_square(C, sq).ok());
    std::string stext = write_square(C, sq);
    std::string spath = put(dir, "s.sq", stext);
    LoadedSquare ls = load_square(ws, spath);
    CHECK(ls.kind == "square");
    CHECK(write_square(*ls.twocat, ls.square) == stext);
    auto fill = solve_lifting(*ls.twocat, ls.square);
    REQUIRE(fill.has_value());
    CHECK(fill->f == ls.twocat->one_index("b"));

    RetractData d = identity_retract(C, C.one_index("a"));
    std::string rtext = write_retract(C, d);
    std::string rpath = put(dir, "r.sq", rtext);
    LoadedSquare lr = load_square(ws, rpath);
    CHECK(lr.kind == "retract");
    CHECK(write_retract(*lr.twocat, lr.retract) == rtext);
    CHECK(check_retract(*lr.twocat, lr.retract));

    Factorization fac;
    fac.i = C.one_index("a");
    fac.p = C.one_index("b");
    fac.gamma = C.id2[C.id1[0]];
    int cell = C.id1[0];
    std::string ttext = write_factorization(C, cell, fac);
    std::string tpath = put(dir, "t.sq", ttext);
    LoadedSquare lt = load_square(ws, tpath);
    CHECK(lt.kind == "factorization");
    CHECK(lt.cell == C.id1[0]);
    CHECK(write_factorization(*lt.twocat, lt.cell, lt.factorization) == ttext);
    RetractData viaf = retract_of_first_factor(*lt.twocat, lt.cell,
                                               lt.factorization);
    CHECK(check_retract(*lt.twocat, viaf));
}

TEST_CASE("schema and name errors carry the offending location") {
    fs::path dir = scratch();
    Workspace ws;
    CHECK_THROWS_AS(load_fincat(ws, (dir / "absent.cat").string()),
                    SchemaError);
    std::string bad = put(dir, "bad.cat", "{\"kind\": \"category\"}\n");
    CHECK_THROWS_WITH_AS(load_fincat(ws, bad),
                         doctest::Contains("format_version"), SchemaError);
    std::string vsn = put(
        dir, "vsn.cat",
        "{\"format_version\": 2, \"kind\": \"category\", \"objects\": []}\n");
    CHECK_THROWS_AS(load_fincat(ws, vsn), SchemaError);
    std::string wrong = put(dir, "wrong.cat", write_twocat(terminal_twocat()));
    CHECK_THROWS_WITH_AS(load_fincat(ws, wrong),
                         doctest::Contains("expected kind 'category'"),
                         SchemaError);
    std::string dup = put(dir, "dup.cat",
                          "{\"format_version\": 1, \"kind\": \"category\",\n"
                          " \"objects\": [\"x\", \"x\"], \"morphisms\": [],\n"
                          " \"compose\": []}\n");
    CHECK_THROWS_WITH_AS(load_fincat(ws, dup),
                         doctest::Contains("duplicate cell name"),
                         SchemaError);
    std::string ghost =
        put(dir, "ghost.cat",
            "{\"format_version\": 1, \"kind\": \"category\",\n"
            " \"objects\": [\"x\"], \"morphisms\": [],\n"
            " \"compose\": [[\"id_x\", \"id_x\", \"phantom\"]]}\n");
    CHECK_THROWS_WITH_AS(load_fincat(ws, ghost),
                         doctest::Contains("unknown morphism 'phantom'"),
                         UnknownName);
    std::string junk = put(dir, "junk.cat", "not json at all\n");
    CHECK_THROWS_AS(load_fincat(ws, junk), SchemaError);
    CHECK_THROWS_AS(peek_kind(junk), SchemaError);
    std::string nosq = put(dir, "nosq.sq", write_twocat(terminal_twocat()));
    CHECK_THROWS_WITH_AS(load_square(ws, nosq),
                         doctest::Contains("expected kind 'square'"),
                         SchemaError);
    // a functor file missing one morphism image
    std::string part =
        put(dir, "part.fun",
            "{\"format_version\": 1, \"kind\": \"functor\",\n"
            " \"dom\": " + write_fincat(arrow_cat()) +
            ",\n \"cod\": " + write_fincat(arrow_cat()) +
            ",\n \"ob\": {\"0\": \"0\", \"1\": \"1\"}, \"mor\": {}}\n");
    CHECK_THROWS_WITH_AS(load_functor(ws, part),
                         doctest::Contains("'a01' has no image"), SchemaError);
}

TEST_CASE("dot export is deterministic and shows two-cells as dashed edges") {
    FinCat c = chain3_cat();
    std::string d1 = export_dot(c);
    std::string d2 = export_dot(c);
    CHECK(d1 == d2);
    CHECK(d1.find("digraph category {") == 0);
    CHECK(d1.find("\"0\" -> \"1\" [label=\"a01\"]") != std::string::npos);
    CHECK(d1.find("id_0") == std::string::npos);

    TwoCat t = fixtures::cell2();
    std::string d3 = export_dot(t);
    CHECK(d3.find("digraph twocat {") == 0);
    CHECK(d3.find("\"A\" -> \"B\" [label=\"f\"]") != std::string::npos);
    CHECK(d3.find("[style=dashed, label=\"mu : f => g\"]") !=
          std::string::npos);
}

} // TEST_SUITE

} // namespace
