#include "twocat/io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include <json.hpp>

namespace twocat {

namespace {

namespace fs = std::filesystem;
using njson = nlohmann::json;

// ---- reading ------------------------------------------------------------

njson parse_structure(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError(path, "cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return njson::parse(buf.str());
    } catch (const njson::parse_error& e) {
        throw SchemaError(path, e.what());
    }
}

const njson& need(const njson& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key))
        throw SchemaError(where, std::string("missing field '") + key + "'");
    return j.at(key);
}

std::string string_at(const njson& v, const std::string& where) {
    if (!v.is_string()) throw SchemaError(where, "expected a string");
    return v.get<std::string>();
}

std::string need_string(const njson& j, const char* key,
                        const std::string& where) {
    return string_at(need(j, key, where), where + ": " + key);
}

const njson& need_array(const njson& j, const char* key,
                        const std::string& where) {
    const njson& v = need(j, key, where);
    if (!v.is_array())
        throw SchemaError(where, std::string("field '") + key +
                                     "' is not an array");
    return v;
}

const njson& need_map(const njson& j, const char* key,
                      const std::string& where) {
    const njson& v = need(j, key, where);
    if (!v.is_object())
        throw SchemaError(where, std::string("field '") + key +
                                     "' is not an object");
    return v;
}

void check_kind(const njson& j, const std::string& kind,
                const std::string& where) {
    if (!j.is_object())
        throw SchemaError(where, "structure file is not an object");
    const njson& v = need(j, "format_version", where);
    if (!v.is_number_integer() || v.get<int>() != 1)
        throw SchemaError(where, "unsupported format_version");
    std::string k = need_string(j, "kind", where);
    if (k != kind)
        throw SchemaError(where,
                          "expected kind '" + kind + "', found '" + k + "'");
}

// ---- name resolution ------------------------------------------------------

int ob_of(const FinCat& c, const std::string& n, const std::string& where) {
    int i = c.object_index(n);
    if (i < 0) throw UnknownName(where, "unknown object '" + n + "'");
    return i;
}

int mor_of(const FinCat& c, const std::string& n, const std::string& where) {
    int m = c.morphism_index(n);
    if (m < 0) throw UnknownName(where, "unknown morphism '" + n + "'");
    return m;
}

int ob2_of(const TwoCat& c, const std::string& n, const std::string& where) {
    int i = c.object_index(n);
    if (i < 0) throw UnknownName(where, "unknown object '" + n + "'");
    return i;
}

int one_of(const TwoCat& c, const std::string& n, const std::string& where) {
    int f = c.one_index(n);
    if (f < 0) throw UnknownName(where, "unknown 1-cell '" + n + "'");
    return f;
}

int two_of(const TwoCat& c, const std::string& n, const std::string& where) {
    int a = c.two_index(n);
    if (a < 0) throw UnknownName(where, "unknown 2-cell '" + n + "'");
    return a;
}

// ---- structure bodies ------------------------------------------------------

FinCat fincat_from_json(const njson& j, const std::string& where) {
    check_kind(j, "category", where);
    FinCat c;
    std::set<std::string> used;
    auto claim = [&](const std::string& n) {
        if (!used.insert(n).second)
            throw SchemaError(where, "duplicate cell name '" + n + "'");
    };
    for (const njson& o : need_array(j, "objects", where)) {
        std::string name = string_at(o, where + ": objects");
        claim(name);
        claim("id_" + name);
        c.add_object(name);
    }
    for (const njson& m : need_array(j, "morphisms", where)) {
        std::string name = need_string(m, "name", where + ": morphisms");
        claim(name);
        int s = ob_of(c, need_string(m, "src", where), where + ": " + name);
        int t = ob_of(c, need_string(m, "tgt", where), where + ": " + name);
        c.add_morphism(name, s, t);
    }
    for (const njson& e : need_array(j, "compose", where)) {
        if (!e.is_array() || e.size() != 3)
            throw SchemaError(where, "compose entries are [g, f, gf] triples");
        std::string ctx = where + ": compose";
        int g = mor_of(c, string_at(e[0], ctx), ctx);
        int f = mor_of(c, string_at(e[1], ctx), ctx);
        int gf = mor_of(c, string_at(e[2], ctx), ctx);
        c.set_comp(g, f, gf);
    }
    c.fill_identity_composites();
    return c;
}

TwoCat twocat_from_json(const njson& j, const std::string& where) {
    check_kind(j, "twocat", where);
    TwoCat c;
    std::set<std::string> used;
    auto claim = [&](const std::string& n) {
        if (!used.insert(n).second)
            throw SchemaError(where, "duplicate cell name '" + n + "'");
    };
    for (const njson& o : need_array(j, "objects", where)) {
        std::string name = string_at(o, where + ": objects");
        claim(name);
        claim("id_" + name);
        claim("id_id_" + name);
        c.add_object(name);
    }
    for (const njson& m : need_array(j, "one_cells", where)) {
        std::string name = need_string(m, "name", where + ": one_cells");
        claim(name);
        claim("id_" + name);
        int s = ob2_of(c, need_string(m, "src", where), where + ": " + name);
        int t = ob2_of(c, need_string(m, "tgt", where), where + ": " + name);
        c.add_one_cell(name, s, t);
    }
    for (const njson& m : need_array(j, "two_cells", where)) {
        std::string name = need_string(m, "name", where + ": two_cells");
        claim(name);
        int s = one_of(c, need_string(m, "src", where), where + ": " + name);
        int t = one_of(c, need_string(m, "tgt", where), where + ": " + name);
        c.add_two_cell(name, s, t);
    }
    auto table = [&](const char* key, auto resolve, auto set) {
        for (const njson& e : need_array(j, key, where)) {
            if (!e.is_array() || e.size() != 3)
                throw SchemaError(where, std::string(key) +
                                             " entries are three-name triples");
            std::string ctx = where + ": " + key;
            set(resolve(string_at(e[0], ctx), ctx),
                resolve(string_at(e[1], ctx), ctx),
                resolve(string_at(e[2], ctx), ctx));
        }
    };
    auto r1 = [&](const std::string& n, const std::string& w) {
        return one_of(c, n, w);
    };
    auto r2 = [&](const std::string& n, const std::string& w) {
        return two_of(c, n, w);
    };
    table("hcomp1", r1, [&](int g, int f, int v) { c.set_hcomp1(g, f, v); });
    table("vcomp", r2, [&](int b, int a, int v) { c.set_vcomp(b, a, v); });
    table("hcomp2", r2, [&](int b, int a, int v) { c.set_hcomp2(b, a, v); });
    c.fill_identity_composites();
    return c;
}

CatFunctor functor_from_json(const njson& j, const FinCat& dom,
                             const FinCat& cod, const std::string& where) {
    CatFunctor F;
    F.dom = &dom;
    F.cod = &cod;
    F.ob.assign(dom.ob_count(), -1);
    F.mor.assign(dom.mor_count(), -1);
    const njson& obm = need_map(j, "ob", where);
    for (auto it = obm.begin(); it != obm.end(); ++it) {
        int x = ob_of(dom, it.key(), where + ": ob");
        F.ob[x] = ob_of(cod, string_at(it.value(), where + ": ob"),
                        where + ": ob." + it.key());
    }
    for (int x = 0; x < dom.ob_count(); ++x) {
        if (F.ob[x] < 0)
            throw SchemaError(where,
                              "object '" + dom.objects[x] + "' has no image");
        F.mor[dom.id_of[x]] = cod.id_of[F.ob[x]];
    }
    const njson& mm = need_map(j, "mor", where);
    for (auto it = mm.begin(); it != mm.end(); ++it) {
        int m = mor_of(dom, it.key(), where + ": mor");
        F.mor[m] = mor_of(cod, string_at(it.value(), where + ": mor"),
                          where + ": mor." + it.key());
    }
    for (int m = 0; m < dom.mor_count(); ++m)
        if (F.mor[m] < 0)
            throw SchemaError(
                where, "morphism '" + dom.morphisms[m] + "' has no image");
    return F;
}

// ---- structure references ----------------------------------------------

std::string canonical_key(const std::string& path) {
    std::error_code ec;
    fs::path c = fs::weakly_canonical(fs::path(path), ec);
    if (ec) c = fs::absolute(fs::path(path)).lexically_normal();
    return c.string();
}

const FinCat& resolve_fincat(Workspace& ws, const njson& v,
                             const fs::path& base, const std::string& where) {
    if (v.is_string())
        return load_fincat(ws, (base / v.get<std::string>()).string());
    return ws.own(fincat_from_json(v, where));
}

const TwoCat& resolve_twocat(Workspace& ws, const njson& v,
                             const fs::path& base, const std::string& where) {
    if (v.is_string())
        return load_twocat(ws, (base / v.get<std::string>()).string());
    return ws.own(twocat_from_json(v, where));
}

// ---- writing --------------------------------------------------------------

std::string dump(const njson& j) { return j.dump(2) + "\n"; }

njson fincat_to_json(const FinCat& c) {
    njson j;
    j["format_version"] = 1;
    j["kind"] = "category";
    j["objects"] = njson::array();
    for (const std::string& n : c.objects) j["objects"].push_back(n);
    std::vector<char> isid(c.mor_count(), 0);
    for (int x = 0; x < c.ob_count(); ++x) isid[c.id_of[x]] = 1;
    njson mors = njson::array();
    for (int m = 0; m < c.mor_count(); ++m) {
        if (isid[m]) continue;
        njson e;
        e["name"] = c.morphisms[m];
        e["src"] = c.objects[c.src[m]];
        e["tgt"] = c.objects[c.tgt[m]];
        mors.push_back(e);
    }
    j["morphisms"] = mors;
    njson comp = njson::array();
    for (int g = 0; g < c.mor_count(); ++g)
        for (int f = 0; f < c.mor_count(); ++f) {
            int v = c.comp[g][f];
            if (v < 0) continue;
            if (g == c.id_of[c.tgt[f]] && v == f) continue;
            if (f == c.id_of[c.src[g]] && v == g) continue;
            comp.push_back(njson::array(
                {c.morphisms[g], c.morphisms[f], c.morphisms[v]}));
        }
    j["compose"] = comp;
    return j;
}

njson twocat_to_json(const TwoCat& c) {
    njson j;
    j["format_version"] = 1;
    j["kind"] = "twocat";
    j["objects"] = njson::array();
    for (const std::string& n : c.objects) j["objects"].push_back(n);
    std::vector<char> isid1(c.one_count(), 0);
    for (int x = 0; x < c.ob_count(); ++x) isid1[c.id1[x]] = 1;
    std::vector<char> isid2(c.two_count(), 0);
    for (int f = 0; f < c.one_count(); ++f) isid2[c.id2[f]] = 1;
    njson ones = njson::array();
    for (int f = 0; f < c.one_count(); ++f) {
        if (isid1[f]) continue;
        njson e;
        e["name"] = c.one_cells[f];
        e["src"] = c.objects[c.src1[f]];
        e["tgt"] = c.objects[c.tgt1[f]];
        ones.push_back(e);
    }
    j["one_cells"] = ones;
    njson twos = njson::array();
    for (int a = 0; a < c.two_count(); ++a) {
        if (isid2[a]) continue;
        njson e;
        e["name"] = c.two_cells[a];
        e["src"] = c.one_cells[c.src2[a]];
        e["tgt"] = c.one_cells[c.tgt2[a]];
        twos.push_back(e);
    }
    j["two_cells"] = twos;
    njson h1 = njson::array();
    for (int g = 0; g < c.one_count(); ++g)
        for (int f = 0; f < c.one_count(); ++f) {
            int v = c.hcomp1[g][f];
            if (v < 0) continue;
            if (g == c.id1[c.tgt1[f]] && v == f) continue;
            if (f == c.id1[c.src1[g]] && v == g) continue;
            h1.push_back(njson::array(
                {c.one_cells[g], c.one_cells[f], c.one_cells[v]}));
        }
    j["hcomp1"] = h1;
    njson vc = njson::array();
    for (int b = 0; b < c.two_count(); ++b)
        for (int a = 0; a < c.two_count(); ++a) {
            int v = c.vcomp[b][a];
            if (v < 0) continue;
            if (b == c.id2[c.tgt2[a]] && v == a) continue;
            if (a == c.id2[c.src2[b]] && v == b) continue;
            vc.push_back(njson::array(
                {c.two_cells[b], c.two_cells[a], c.two_cells[v]}));
        }
    j["vcomp"] = vc;
    njson h2 = njson::array();
    for (int b = 0; b < c.two_count(); ++b)
        for (int a = 0; a < c.two_count(); ++a) {
            int v = c.hcomp2[b][a];
            if (v < 0) continue;
            if (b == c.id2[c.id1[c.tgt1[c.src2[a]]]] && v == a) continue;
            if (a == c.id2[c.id1[c.src1[c.src2[b]]]] && v == b) continue;
            h2.push_back(njson::array(
                {c.two_cells[b], c.two_cells[a], c.two_cells[v]}));
        }
    j["hcomp2"] = h2;
    return j;
}

void functor_body_to_json(njson& j, const CatFunctor& F) {
    const FinCat& dom = *F.dom;
    const FinCat& cod = *F.cod;
    njson ob;
    for (int x = 0; x < dom.ob_count(); ++x)
        ob[dom.objects[x]] = cod.objects[F.ob[x]];
    j["ob"] = std::move(ob);
    std::vector<char> isid(dom.mor_count(), 0);
    for (int x = 0; x < dom.ob_count(); ++x) isid[dom.id_of[x]] = 1;
    njson mor = njson::object();
    for (int m = 0; m < dom.mor_count(); ++m)
        if (!isid[m]) mor[dom.morphisms[m]] = cod.morphisms[F.mor[m]];
    j["mor"] = std::move(mor);
}

// The compositor entry a pseudo-functor file may omit: the identity on
// F(g)F(f), available exactly when that composite already equals F(gf).
int default_compositor(const PseudoFunctor& F, int g, int f) {
    const TwoCat& dom = *F.dom;
    const TwoCat& cod = *F.cod;
    int gf = dom.hcomp1[g][f];
    if (gf < 0) return -1;
    int c1 = cod.hcomp1[F.one[g]][F.one[f]];
    if (c1 < 0 || c1 != F.one[gf]) return -1;
    return cod.id2[c1];
}

int default_unitor(const PseudoFunctor& F, int x) {
    const TwoCat& cod = *F.cod;
    if (F.one[F.dom->id1[x]] != cod.id1[F.ob[x]]) return -1;
    return cod.id2[cod.id1[F.ob[x]]];
}

} // namespace

// ---- workspace --------------------------------------------------------

const FinCat& Workspace::own(FinCat c) {
    cats.push_back(std::make_unique<FinCat>(std::move(c)));
    return *cats.back();
}

const TwoCat& Workspace::own(TwoCat c) {
    twocats.push_back(std::make_unique<TwoCat>(std::move(c)));
    return *twocats.back();
}

std::string peek_kind(const std::string& path) {
    njson j = parse_structure(path);
    if (!j.is_object())
        throw SchemaError(path, "structure file is not an object");
    return need_string(j, "kind", path);
}

// ---- loaders ------------------------------------------------------------

const FinCat& load_fincat(Workspace& ws, const std::string& path) {
    std::string key = canonical_key(path);
    auto it = ws.cat_by_path.find(key);
    if (it != ws.cat_by_path.end()) return *it->second;
    const FinCat& c = ws.own(fincat_from_json(parse_structure(path), path));
    ws.cat_by_path[key] = &c;
    return c;
}

const TwoCat& load_twocat(Workspace& ws, const std::string& path) {
    std::string key = canonical_key(path);
    auto it = ws.twocat_by_path.find(key);
    if (it != ws.twocat_by_path.end()) return *it->second;
    const TwoCat& c = ws.own(twocat_from_json(parse_structure(path), path));
    ws.twocat_by_path[key] = &c;
    return c;
}

const CatFunctor& load_functor(Workspace& ws, const std::string& path) {
    njson j = parse_structure(path);
    check_kind(j, "functor", path);
    fs::path base = fs::path(path).parent_path();
    const FinCat& dom = resolve_fincat(ws, need(j, "dom", path), base, path);
    const FinCat& cod = resolve_fincat(ws, need(j, "cod", path), base, path);
    ws.functors.push_back(
        std::make_unique<CatFunctor>(functor_from_json(j, dom, cod, path)));
    return *ws.functors.back();
}

Cat2Functor load_diagram(Workspace& ws, const std::string& path) {
    njson j = parse_structure(path);
    check_kind(j, "diagram", path);
    fs::path base = fs::path(path).parent_path();
    const TwoCat& dom = resolve_twocat(ws, need(j, "dom", path), base, path);
    Cat2Functor F;
    F.dom = &dom;
    const njson& vals = need_array(j, "value", path);
    if (static_cast<int>(vals.size()) != dom.ob_count())
        throw SchemaError(path, "value: expected one category per object");
    for (const njson& v : vals) {
        if (v.is_string()) {
            std::string sub = (base / v.get<std::string>()).string();
            F.value.push_back(std::make_unique<FinCat>(
                fincat_from_json(parse_structure(sub), sub)));
        } else {
            F.value.push_back(
                std::make_unique<FinCat>(fincat_from_json(v, path)));
        }
    }
    F.fmap.resize(dom.one_count());
    F.nmap.resize(dom.two_count());
    std::vector<char> have1(dom.one_count(), 0);
    const njson& fm = need_map(j, "fmap", path);
    for (auto it = fm.begin(); it != fm.end(); ++it) {
        int f = one_of(dom, it.key(), path + ": fmap");
        F.fmap[f] = functor_from_json(it.value(), *F.value[dom.src1[f]],
                                      *F.value[dom.tgt1[f]],
                                      path + ": fmap." + it.key());
        have1[f] = 1;
    }
    for (int x = 0; x < dom.ob_count(); ++x)
        if (!have1[dom.id1[x]]) {
            F.fmap[dom.id1[x]] = identity_functor(*F.value[x]);
            have1[dom.id1[x]] = 1;
        }
    for (int f = 0; f < dom.one_count(); ++f)
        if (!have1[f])
            throw SchemaError(
                path, "1-cell '" + dom.one_cells[f] + "' has no functor");
    std::vector<char> have2(dom.two_count(), 0);
    const njson& nm = need_map(j, "nmap", path);
    for (auto it = nm.begin(); it != nm.end(); ++it) {
        int a = two_of(dom, it.key(), path + ": nmap");
        const FinCat& vi = *F.value[dom.src1[dom.src2[a]]];
        const FinCat& vj = *F.value[dom.tgt1[dom.src2[a]]];
        if (!it.value().is_object())
            throw SchemaError(path, "nmap." + it.key() + " is not an object");
        std::vector<int> comp(vi.ob_count(), -1);
        for (auto ce = it.value().begin(); ce != it.value().end(); ++ce) {
            std::string ctx = path + ": nmap." + it.key();
            int x = ob_of(vi, ce.key(), ctx);
            comp[x] = mor_of(vj, string_at(ce.value(), ctx), ctx);
        }
        for (int x = 0; x < vi.ob_count(); ++x)
            if (comp[x] < 0)
                throw SchemaError(path, "nmap." + it.key() +
                                            ": object '" + vi.objects[x] +
                                            "' has no component");
        F.nmap[a] = std::move(comp);
        have2[a] = 1;
    }
    for (int f = 0; f < dom.one_count(); ++f)
        if (!have2[dom.id2[f]]) {
            const FinCat& vi = *F.value[dom.src1[f]];
            const FinCat& vj = *F.value[dom.tgt1[f]];
            std::vector<int> comp(vi.ob_count());
            for (int x = 0; x < vi.ob_count(); ++x)
                comp[x] = vj.id_of[F.fmap[f].ob[x]];
            F.nmap[dom.id2[f]] = std::move(comp);
            have2[dom.id2[f]] = 1;
        }
    for (int a = 0; a < dom.two_count(); ++a)
        if (!have2[a])
            throw SchemaError(path, "2-cell '" + dom.two_cells[a] +
                                        "' has no transformation");
    return F;
}

const PseudoFunctor& load_pseudofunctor(Workspace& ws,
                                        const std::string& path) {
    njson j = parse_structure(path);
    check_kind(j, "pseudofunctor", path);
    fs::path base = fs::path(path).parent_path();
    const TwoCat& dom = resolve_twocat(ws, need(j, "dom", path), base, path);
    const TwoCat& cod = resolve_twocat(ws, need(j, "cod", path), base, path);
    PseudoFunctor F;
    F.dom = &dom;
    F.cod = &cod;
    F.ob.assign(dom.ob_count(), -1);
    F.one.assign(dom.one_count(), -1);
    F.two.assign(dom.two_count(), -1);
    const njson& obm = need_map(j, "ob", path);
    for (auto it = obm.begin(); it != obm.end(); ++it)
        F.ob[ob2_of(dom, it.key(), path + ": ob")] =
            ob2_of(cod, string_at(it.value(), path + ": ob"), path + ": ob");
    for (int x = 0; x < dom.ob_count(); ++x)
        if (F.ob[x] < 0)
            throw SchemaError(path,
                              "object '" + dom.objects[x] + "' has no image");
    const njson& om = need_map(j, "one", path);
    for (auto it = om.begin(); it != om.end(); ++it)
        F.one[one_of(dom, it.key(), path + ": one")] =
            one_of(cod, string_at(it.value(), path + ": one"), path + ": one");
    for (int x = 0; x < dom.ob_count(); ++x)
        if (F.one[dom.id1[x]] < 0) F.one[dom.id1[x]] = cod.id1[F.ob[x]];
    for (int f = 0; f < dom.one_count(); ++f)
        if (F.one[f] < 0)
            throw SchemaError(path,
                              "1-cell '" + dom.one_cells[f] + "' has no image");
    const njson& tm = need_map(j, "two", path);
    for (auto it = tm.begin(); it != tm.end(); ++it)
        F.two[two_of(dom, it.key(), path + ": two")] =
            two_of(cod, string_at(it.value(), path + ": two"), path + ": two");
    for (int f = 0; f < dom.one_count(); ++f)
        if (F.two[dom.id2[f]] < 0) F.two[dom.id2[f]] = cod.id2[F.one[f]];
    for (int a = 0; a < dom.two_count(); ++a)
        if (F.two[a] < 0)
            throw SchemaError(path,
                              "2-cell '" + dom.two_cells[a] + "' has no image");
    F.compositor.assign(dom.one_count(),
                        std::vector<int>(dom.one_count(), -1));
    for (int g = 0; g < dom.one_count(); ++g)
        for (int f = 0; f < dom.one_count(); ++f)
            F.compositor[g][f] = default_compositor(F, g, f);
    for (const njson& e : need_array(j, "compositor", path)) {
        if (!e.is_array() || e.size() != 3)
            throw SchemaError(path,
                              "compositor entries are [g, f, cell] triples");
        std::string ctx = path + ": compositor";
        int g = one_of(dom, string_at(e[0], ctx), ctx);
        int f = one_of(dom, string_at(e[1], ctx), ctx);
        if (dom.hcomp1[g][f] < 0)
            throw SchemaError(ctx, "'" + dom.one_cells[g] + "' after '" +
                                       dom.one_cells[f] +
                                       "' is not composable");
        F.compositor[g][f] = two_of(cod, string_at(e[2], ctx), ctx);
    }
    F.unitor.assign(dom.ob_count(), -1);
    for (int x = 0; x < dom.ob_count(); ++x)
        F.unitor[x] = default_unitor(F, x);
    const njson& um = need_map(j, "unitor", path);
    for (auto it = um.begin(); it != um.end(); ++it)
        F.unitor[ob2_of(dom, it.key(), path + ": unitor")] = two_of(
            cod, string_at(it.value(), path + ": unitor"), path + ": unitor");
    ws.pseudofunctors.push_back(
        std::make_unique<PseudoFunctor>(std::move(F)));
    return *ws.pseudofunctors.back();
}

NatTrans load_nattrans(Workspace& ws, const std::string& path) {
    njson j = parse_structure(path);
    check_kind(j, "nattrans", path);
    fs::path base = fs::path(path).parent_path();
    const FinCat& dom = resolve_fincat(ws, need(j, "dom", path), base, path);
    const FinCat& cod = resolve_fincat(ws, need(j, "cod", path), base, path);
    ws.functors.push_back(std::make_unique<CatFunctor>(functor_from_json(
        need_map(j, "src", path), dom, cod, path + ": src")));
    const CatFunctor* sp = ws.functors.back().get();
    ws.functors.push_back(std::make_unique<CatFunctor>(functor_from_json(
        need_map(j, "tgt", path), dom, cod, path + ": tgt")));
    const CatFunctor* tp = ws.functors.back().get();
    NatTrans t;
    t.src = sp;
    t.tgt = tp;
    t.component.assign(dom.ob_count(), -1);
    const njson& cm = need_map(j, "component", path);
    for (auto it = cm.begin(); it != cm.end(); ++it)
        t.component[ob_of(dom, it.key(), path + ": component")] =
            mor_of(cod, string_at(it.value(), path + ": component"),
                   path + ": component");
    for (int x = 0; x < dom.ob_count(); ++x)
        if (t.component[x] < 0)
            throw SchemaError(
                path, "object '" + dom.objects[x] + "' has no component");
    return t;
}

ProObject load_pro_object(Workspace& ws, const std::string& path) {
    njson j = parse_structure(path);
    check_kind(j, "proobject", path);
    fs::path base = fs::path(path).parent_path();
    const TwoCat& index =
        resolve_twocat(ws, need(j, "index", path), base, path);
    const TwoCat& target =
        resolve_twocat(ws, need(j, "target", path), base, path);
    std::vector<int> ob(index.ob_count(), -1);
    const njson& obm = need_map(j, "ob", path);
    for (auto it = obm.begin(); it != obm.end(); ++it)
        ob[ob2_of(index, it.key(), path + ": ob")] =
            ob2_of(target, string_at(it.value(), path + ": ob"), path + ": ob");
    for (int i = 0; i < index.ob_count(); ++i)
        if (ob[i] < 0)
            throw SchemaError(path,
                              "object '" + index.objects[i] + "' has no value");
    std::vector<int> one(index.one_count(), -1);
    const njson& om = need_map(j, "one", path);
    for (auto it = om.begin(); it != om.end(); ++it)
        one[one_of(index, it.key(), path + ": one")] =
            one_of(target, string_at(it.value(), path + ": one"),
                   path + ": one");
    for (int i = 0; i < index.ob_count(); ++i)
        if (one[index.id1[i]] < 0) one[index.id1[i]] = target.id1[ob[i]];
    for (int u = 0; u < index.one_count(); ++u)
        if (one[u] < 0)
            throw SchemaError(
                path, "1-cell '" + index.one_cells[u] + "' has no value");
    std::vector<int> two(index.two_count(), -1);
    const njson& tm = need_map(j, "two", path);
    for (auto it = tm.begin(); it != tm.end(); ++it)
        two[two_of(index, it.key(), path + ": two")] =
            two_of(target, string_at(it.value(), path + ": two"),
                   path + ": two");
    for (int u = 0; u < index.one_count(); ++u)
        if (two[index.id2[u]] < 0) two[index.id2[u]] = target.id2[one[u]];
    for (int a = 0; a < index.two_count(); ++a)
        if (two[a] < 0)
            throw SchemaError(
                path, "2-cell '" + index.two_cells[a] + "' has no value");
    return make_pro_object(index, target, std::move(ob), std::move(one),
                           std::move(two));
}

LoadedClasses load_classes(Workspace& ws, const std::string& path) {
    njson j = parse_structure(path);
    check_kind(j, "classes", path);
    fs::path base = fs::path(path).parent_path();
    LoadedClasses out;
    out.twocat = &resolve_twocat(ws, need(j, "twocat", path), base, path);
    auto cells = [&](const char* key) {
        std::vector<int> v;
        for (const njson& n : need_array(j, key, path))
            v.push_back(one_of(*out.twocat,
                               string_at(n, path + ": " + key),
                               path + ": " + key));
        return v;
    };
    out.classes.fibrations = cells("fibrations");
    out.classes.cofibrations = cells("cofibrations");
    out.classes.weak_equivalences = cells("weak_equivalences");
    return out;
}

LoadedSquare load_square(Workspace& ws, const std::string& path) {
    njson j = parse_structure(path);
    if (!j.is_object())
        throw SchemaError(path, "structure file is not an object");
    std::string kind = need_string(j, "kind", path);
    if (kind != "square" && kind != "retract" && kind != "factorization")
        throw SchemaError(path, "expected kind 'square', 'retract' or "
                                "'factorization', found '" + kind + "'");
    check_kind(j, kind, path);
    fs::path base = fs::path(path).parent_path();
    LoadedSquare out;
    out.kind = kind;
    out.twocat = &resolve_twocat(ws, need(j, "twocat", path), base, path);
    const TwoCat& c = *out.twocat;
    auto cell1 = [&](const char* key) {
        return one_of(c, need_string(j, key, path), path + ": " + key);
    };
    auto cell2 = [&](const char* key) {
        return two_of(c, need_string(j, key, path), path + ": " + key);
    };
    if (kind == "square") {
        out.square.i = cell1("i");
        out.square.p = cell1("p");
        out.square.a = cell1("a");
        out.square.b = cell1("b");
        out.square.gamma = cell2("gamma");
    } else if (kind == "retract") {
        out.retract.f = cell1("f");
        out.retract.g = cell1("g");
        out.retract.theta0 = cell1("theta0");
        out.retract.theta1 = cell1("theta1");
        out.retract.theta_m = cell2("theta_m");
        out.retract.eta0 = cell1("eta0");
        out.retract.eta1 = cell1("eta1");
        out.retract.eta_m = cell2("eta_m");
        out.retract.mu0 = cell2("mu0");
        out.retract.mu1 = cell2("mu1");
    } else {
        out.cell = cell1("cell");
        out.factorization.i = cell1("i");
        out.factorization.p = cell1("p");
        out.factorization.gamma = cell2("gamma");
    }
    return out;
}

// ---- writers ------------------------------------------------------------

std::string write_fincat(const FinCat& c) { return dump(fincat_to_json(c)); }

std::string write_twocat(const TwoCat& c) { return dump(twocat_to_json(c)); }

std::string write_functor(const CatFunctor& F) {
    njson j;
    j["format_version"] = 1;
    j["kind"] = "functor";
    j["dom"] = fincat_to_json(*F.dom);
    j["cod"] = fincat_to_json(*F.cod);
    functor_body_to_json(j, F);
    return dump(j);
}

std::string write_diagram(const Cat2Functor& F) {
    const TwoCat& dom = *F.dom;
    njson j;
    j["format_version"] = 1;
    j["kind"] = "diagram";
    j["dom"] = twocat_to_json(dom);
    njson vals = njson::array();
    for (const auto& v : F.value) vals.push_back(fincat_to_json(*v));
    j["value"] = std::move(vals);
    std::vector<char> isid1(dom.one_count(), 0);
    for (int x = 0; x < dom.ob_count(); ++x) isid1[dom.id1[x]] = 1;
    std::vector<char> isid2(dom.two_count(), 0);
    for (int f = 0; f < dom.one_count(); ++f) isid2[dom.id2[f]] = 1;
    njson fm = njson::object();
    for (int f = 0; f < dom.one_count(); ++f) {
        if (isid1[f]) continue;
        njson e;
        functor_body_to_json(e, F.fmap[f]);
        fm[dom.one_cells[f]] = std::move(e);
    }
    j["fmap"] = std::move(fm);
    njson nm = njson::object();
    for (int a = 0; a < dom.two_count(); ++a) {
        if (isid2[a]) continue;
        const FinCat& vi = *F.value[dom.src1[dom.src2[a]]];
        const FinCat& vj = *F.value[dom.tgt1[dom.src2[a]]];
        njson e;
        for (int x = 0; x < vi.ob_count(); ++x)
            e[vi.objects[x]] = vj.morphisms[F.nmap[a][x]];
        nm[dom.two_cells[a]] = std::move(e);
    }
    j["nmap"] = std::move(nm);
    return dump(j);
}

std::string write_pseudofunctor(const PseudoFunctor& F) {
    const TwoCat& dom = *F.dom;
    const TwoCat& cod = *F.cod;
    njson j;
    j["format_version"] = 1;
    j["kind"] = "pseudofunctor";
    j["dom"] = twocat_to_json(dom);
    j["cod"] = twocat_to_json(cod);
    njson ob;
    for (int x = 0; x < dom.ob_count(); ++x)
        ob[dom.objects[x]] = cod.objects[F.ob[x]];
    j["ob"] = std::move(ob);
    std::vector<char> isid1(dom.one_count(), 0);
    for (int x = 0; x < dom.ob_count(); ++x) isid1[dom.id1[x]] = 1;
    std::vector<char> isid2(dom.two_count(), 0);
    for (int f = 0; f < dom.one_count(); ++f) isid2[dom.id2[f]] = 1;
    njson one = njson::object();
    for (int f = 0; f < dom.one_count(); ++f) {
        if (isid1[f] && F.one[f] == cod.id1[F.ob[dom.src1[f]]]) continue;
        one[dom.one_cells[f]] = cod.one_cells[F.one[f]];
    }
    j["one"] = std::move(one);
    njson two = njson::object();
    for (int a = 0; a < dom.two_count(); ++a) {
        if (isid2[a] && F.two[a] == cod.id2[F.one[dom.src2[a]]]) continue;
        two[dom.two_cells[a]] = cod.two_cells[F.two[a]];
    }
    j["two"] = std::move(two);
    njson comp = njson::array();
    for (int g = 0; g < dom.one_count(); ++g)
        for (int f = 0; f < dom.one_count(); ++f) {
            int v = F.compositor[g][f];
            if (v < 0 || v == default_compositor(F, g, f)) continue;
            comp.push_back(njson::array(
                {dom.one_cells[g], dom.one_cells[f], cod.two_cells[v]}));
        }
    j["compositor"] = std::move(comp);
    njson uni = njson::object();
    for (int x = 0; x < dom.ob_count(); ++x) {
        int v = F.unitor[x];
        if (v < 0 || v == default_unitor(F, x)) continue;
        uni[dom.objects[x]] = cod.two_cells[v];
    }
    j["unitor"] = std::move(uni);
    return dump(j);
}

std::string write_nattrans(const NatTrans& t) {
    const FinCat& dom = *t.src->dom;
    const FinCat& cod = *t.src->cod;
    njson j;
    j["format_version"] = 1;
    j["kind"] = "nattrans";
    j["dom"] = fincat_to_json(dom);
    j["cod"] = fincat_to_json(cod);
    njson s, g;
    functor_body_to_json(s, *t.src);
    functor_body_to_json(g, *t.tgt);
    j["src"] = std::move(s);
    j["tgt"] = std::move(g);
    njson comp;
    for (int x = 0; x < dom.ob_count(); ++x)
        comp[dom.objects[x]] = cod.morphisms[t.component[x]];
    j["component"] = std::move(comp);
    return dump(j);
}

std::string write_pro_object(const ProObject& X) {
    const TwoCat& index = *X.index;
    const TwoCat& target = *X.target;
    njson j;
    j["format_version"] = 1;
    j["kind"] = "proobject";
    j["index"] = twocat_to_json(index);
    j["target"] = twocat_to_json(target);
    njson ob;
    for (int i = 0; i < index.ob_count(); ++i)
        ob[index.objects[i]] = target.objects[X.ob(i)];
    j["ob"] = std::move(ob);
    std::vector<char> isid1(index.one_count(), 0);
    for (int i = 0; i < index.ob_count(); ++i) isid1[index.id1[i]] = 1;
    std::vector<char> isid2(index.two_count(), 0);
    for (int u = 0; u < index.one_count(); ++u) isid2[index.id2[u]] = 1;
    njson one = njson::object();
    for (int u = 0; u < index.one_count(); ++u) {
        if (isid1[u] && X.one(u) == target.id1[X.ob(index.src1[u])]) continue;
        one[index.one_cells[u]] = target.one_cells[X.one(u)];
    }
    j["one"] = std::move(one);
    njson two = njson::object();
    for (int a = 0; a < index.two_count(); ++a) {
        if (isid2[a] && X.two(a) == target.id2[X.one(index.src2[a])]) continue;
        two[index.two_cells[a]] = target.two_cells[X.two(a)];
    }
    j["two"] = std::move(two);
    return dump(j);
}

std::string write_classes(const TwoCat& c, const ModelClasses& cls) {
    njson j;
    j["format_version"] = 1;
    j["kind"] = "classes";
    j["twocat"] = twocat_to_json(c);
    auto names = [&](std::vector<int> v) {
        std::sort(v.begin(), v.end());
        njson a = njson::array();
        for (int f : v) a.push_back(c.one_cells[f]);
        return a;
    };
    j["fibrations"] = names(cls.fibrations);
    j["cofibrations"] = names(cls.cofibrations);
    j["weak_equivalences"] = names(cls.weak_equivalences);
    return dump(j);
}

std::string write_square(const TwoCat& c, const LiftingSquare& sq) {
    njson j;
    j["format_version"] = 1;
    j["kind"] = "square";
    j["twocat"] = twocat_to_json(c);
    j["i"] = c.one_cells[sq.i];
    j["p"] = c.one_cells[sq.p];
    j["a"] = c.one_cells[sq.a];
    j["b"] = c.one_cells[sq.b];
    j["gamma"] = c.two_cells[sq.gamma];
    return dump(j);
}

std::string write_retract(const TwoCat& c, const RetractData& d) {
    njson j;
    j["format_version"] = 1;
    j["kind"] = "retract";
    j["twocat"] = twocat_to_json(c);
    j["f"] = c.one_cells[d.f];
    j["g"] = c.one_cells[d.g];
    j["theta0"] = c.one_cells[d.theta0];
    j["theta1"] = c.one_cells[d.theta1];
    j["theta_m"] = c.two_cells[d.theta_m];
    j["eta0"] = c.one_cells[d.eta0];
    j["eta1"] = c.one_cells[d.eta1];
    j["eta_m"] = c.two_cells[d.eta_m];
    j["mu0"] = c.two_cells[d.mu0];
    j["mu1"] = c.two_cells[d.mu1];
    return dump(j);
}

std::string write_factorization(const TwoCat& c, int f,
                                const Factorization& fac) {
    njson j;
    j["format_version"] = 1;
    j["kind"] = "factorization";
    j["twocat"] = twocat_to_json(c);
    j["cell"] = c.one_cells[f];
    j["i"] = c.one_cells[fac.i];
    j["p"] = c.one_cells[fac.p];
    j["gamma"] = c.two_cells[fac.gamma];
    return dump(j);
}

// ---- graph export ---------------------------------------------------------

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out.push_back('\\');
        out.push_back(ch);
    }
    return out;
}

} // namespace

std::string export_dot(const FinCat& c) {
    std::ostringstream out;
    out << "digraph category {\n  rankdir=LR;\n";
    for (int x = 0; x < c.ob_count(); ++x)
        out << "  \"" << dot_escape(c.objects[x]) << "\";\n";
    std::vector<char> isid(c.mor_count(), 0);
    for (int x = 0; x < c.ob_count(); ++x) isid[c.id_of[x]] = 1;
    for (int m = 0; m < c.mor_count(); ++m) {
        if (isid[m]) continue;
        out << "  \"" << dot_escape(c.objects[c.src[m]]) << "\" -> \""
            << dot_escape(c.objects[c.tgt[m]]) << "\" [label=\""
            << dot_escape(c.morphisms[m]) << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

std::string export_dot(const TwoCat& c) {
    std::ostringstream out;
    out << "digraph twocat {\n  rankdir=LR;\n";
    for (int x = 0; x < c.ob_count(); ++x)
        out << "  \"" << dot_escape(c.objects[x]) << "\";\n";
    std::vector<char> isid1(c.one_count(), 0);
    for (int x = 0; x < c.ob_count(); ++x) isid1[c.id1[x]] = 1;
    std::vector<char> isid2(c.two_count(), 0);
    for (int f = 0; f < c.one_count(); ++f) isid2[c.id2[f]] = 1;
    for (int f = 0; f < c.one_count(); ++f) {
        if (isid1[f]) continue;
        out << "  \"" << dot_escape(c.objects[c.src1[f]]) << "\" -> \""
            << dot_escape(c.objects[c.tgt1[f]]) << "\" [label=\""
            << dot_escape(c.one_cells[f]) << "\"];\n";
    }
    for (int a = 0; a < c.two_count(); ++a) {
        if (isid2[a]) continue;
        int f = c.src2[a];
        out << "  \"" << dot_escape(c.objects[c.src1[f]]) << "\" -> \""
            << dot_escape(c.objects[c.tgt1[f]]) << "\" [style=dashed, label=\""
            << dot_escape(c.two_cells[a] + " : " + c.one_cells[f] + " => " +
                          c.one_cells[c.tgt2[a]])
            << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace twocat
