#include "twocat/twocat.hpp"

#include <algorithm>

namespace twocat {

int TwoCat::object_index(const std::string& id) const {
    auto it = std::find(objects.begin(), objects.end(), id);
    return it == objects.end() ? -1 : static_cast<int>(it - objects.begin());
}

int TwoCat::one_index(const std::string& id) const {
    auto it = std::find(one_cells.begin(), one_cells.end(), id);
    return it == one_cells.end() ? -1 : static_cast<int>(it - one_cells.begin());
}

int TwoCat::two_index(const std::string& id) const {
    auto it = std::find(two_cells.begin(), two_cells.end(), id);
    return it == two_cells.end() ? -1 : static_cast<int>(it - two_cells.begin());
}

int TwoCat::hcompose1(int g, int f) const {
    if (f < 0 || f >= one_count() || g < 0 || g >= one_count())
        throw UnknownCell("hcompose1: 1-cell index out of range");
    if (!composable1(g, f))
        throw NotComposable("hcompose1: " + one_cells[g] + " after " +
                            one_cells[f]);
    int r = hcomp1[g][f];
    if (r < 0)
        throw Error("hcompose1: entry missing for " + one_cells[g] + " after " +
                    one_cells[f]);
    return r;
}

int TwoCat::vcompose(int b, int a) const {
    if (a < 0 || a >= two_count() || b < 0 || b >= two_count())
        throw UnknownCell("vcompose: 2-cell index out of range");
    if (!vcomposable(b, a))
        throw NotComposable("vcompose: " + two_cells[b] + " after " +
                            two_cells[a]);
    int r = vcomp[b][a];
    if (r < 0)
        throw Error("vcompose: entry missing for " + two_cells[b] + " after " +
                    two_cells[a]);
    return r;
}

int TwoCat::hcompose2(int beta, int alpha) const {
    if (alpha < 0 || alpha >= two_count() || beta < 0 || beta >= two_count())
        throw UnknownCell("hcompose2: 2-cell index out of range");
    if (!hcomposable(beta, alpha))
        throw NotComposable("hcompose2: " + two_cells[beta] + " beside " +
                            two_cells[alpha]);
    int r = hcomp2[beta][alpha];
    if (r < 0)
        throw Error("hcompose2: entry missing for " + two_cells[beta] +
                    " beside " + two_cells[alpha]);
    return r;
}

int TwoCat::whisker_left(int h, int a) const { return hcompose2(id2[h], a); }

int TwoCat::whisker_right(int a, int h) const { return hcompose2(a, id2[h]); }

int TwoCat::inverse2(int a) const {
    for (int b : two_hom(tgt2[a], src2[a]))
        if (vcomp[b][a] == id2[src2[a]] && vcomp[a][b] == id2[tgt2[a]])
            return b;
    return -1;
}

std::vector<int> TwoCat::one_hom(int x, int y) const {
    std::vector<int> out;
    for (int f = 0; f < one_count(); ++f)
        if (src1[f] == x && tgt1[f] == y) out.push_back(f);
    return out;
}

std::vector<int> TwoCat::two_hom(int f, int g) const {
    std::vector<int> out;
    for (int a = 0; a < two_count(); ++a)
        if (src2[a] == f && tgt2[a] == g) out.push_back(a);
    return out;
}

int TwoCat::add_object(const std::string& name) {
    int ob = ob_count();
    objects.push_back(name);
    int one = add_one_cell("id_" + name, ob, ob);
    id1.push_back(one);
    return ob;
}

int TwoCat::add_one_cell(const std::string& name, int src_ob, int tgt_ob) {
    int f = one_count();
    one_cells.push_back(name);
    src1.push_back(src_ob);
    tgt1.push_back(tgt_ob);
    for (auto& row : hcomp1) row.push_back(-1);
    hcomp1.emplace_back(one_cells.size(), -1);
    int a = add_two_cell("id_" + name, f, f);
    id2.push_back(a);
    return f;
}

int TwoCat::add_two_cell(const std::string& name, int src_one, int tgt_one) {
    int a = two_count();
    two_cells.push_back(name);
    src2.push_back(src_one);
    tgt2.push_back(tgt_one);
    for (auto& row : vcomp) row.push_back(-1);
    vcomp.emplace_back(two_cells.size(), -1);
    for (auto& row : hcomp2) row.push_back(-1);
    hcomp2.emplace_back(two_cells.size(), -1);
    return a;
}

void TwoCat::set_hcomp1(int g, int f, int gf) { hcomp1[g][f] = gf; }
void TwoCat::set_vcomp(int b, int a, int ba) { vcomp[b][a] = ba; }
void TwoCat::set_hcomp2(int beta, int alpha, int r) { hcomp2[beta][alpha] = r; }

void TwoCat::fill_identity_composites() {
    for (int f = 0; f < one_count(); ++f) {
        if (hcomp1[id1[tgt1[f]]][f] < 0) hcomp1[id1[tgt1[f]]][f] = f;
        if (hcomp1[f][id1[src1[f]]] < 0) hcomp1[f][id1[src1[f]]] = f;
    }
    for (int a = 0; a < two_count(); ++a) {
        if (vcomp[id2[tgt2[a]]][a] < 0) vcomp[id2[tgt2[a]]][a] = a;
        if (vcomp[a][id2[src2[a]]] < 0) vcomp[a][id2[src2[a]]] = a;
        int iu = id2[id1[tgt1[src2[a]]]]; // identity cell that absorbs on the left
        int il = id2[id1[src1[src2[a]]]]; // ... and on the right
        if (hcomp2[iu][a] < 0) hcomp2[iu][a] = a;
        if (hcomp2[a][il] < 0) hcomp2[a][il] = a;
    }
}

void TwoCat::fill_hcomp2_from_whiskers() {
    for (int beta = 0; beta < two_count(); ++beta)
        for (int alpha = 0; alpha < two_count(); ++alpha) {
            if (!hcomposable(beta, alpha) || hcomp2[beta][alpha] >= 0) continue;
            // beta alpha := (beta f') ∘ (g alpha), alpha: f => f', beta: g => g'
            int gout = src2[beta];
            int fin2 = tgt2[alpha];
            int left = hcomp2[beta][id2[fin2]];
            int right = hcomp2[id2[gout]][alpha];
            if (left < 0 || right < 0)
                throw Error("fill_hcomp2_from_whiskers: whisker entries for " +
                            two_cells[beta] + " beside " + two_cells[alpha] +
                            " are missing");
            if (!vcomposable(left, right) || vcomp[left][right] < 0)
                throw Error("fill_hcomp2_from_whiskers: cannot stack whiskers "
                            "for " + two_cells[beta] + " beside " +
                            two_cells[alpha]);
            hcomp2[beta][alpha] = vcomp[left][right];
        }
}

FinCat underlying_onecat(const TwoCat& c) {
    FinCat u;
    u.objects = c.objects;
    u.morphisms = c.one_cells;
    u.src = c.src1;
    u.tgt = c.tgt1;
    u.id_of = c.id1;
    u.comp = c.hcomp1;
    return u;
}

HomCat hom_category(const TwoCat& c, int x, int y) {
    HomCat h;
    h.ob_of_one.assign(c.one_count(), -1);
    h.mor_of_two.assign(c.two_count(), -1);
    for (int f : c.one_hom(x, y)) {
        h.ob_of_one[f] = static_cast<int>(h.one_of_ob.size());
        h.one_of_ob.push_back(f);
        h.cat.objects.push_back(c.one_cells[f]);
    }
    for (int a = 0; a < c.two_count(); ++a) {
        int f = c.src2[a];
        if (c.src1[f] != x || c.tgt1[f] != y) continue;
        h.mor_of_two[a] = static_cast<int>(h.two_of_mor.size());
        h.two_of_mor.push_back(a);
        h.cat.morphisms.push_back(c.two_cells[a]);
        h.cat.src.push_back(h.ob_of_one[c.src2[a]]);
        h.cat.tgt.push_back(h.ob_of_one[c.tgt2[a]]);
    }
    for (int f : h.one_of_ob) h.cat.id_of.push_back(h.mor_of_two[c.id2[f]]);
    int n = static_cast<int>(h.two_of_mor.size());
    h.cat.comp.assign(n, std::vector<int>(n, -1));
    for (int b = 0; b < n; ++b)
        for (int a = 0; a < n; ++a) {
            int amb = c.vcomp[h.two_of_mor[b]][h.two_of_mor[a]];
            if (amb >= 0) h.cat.comp[b][a] = h.mor_of_two[amb];
        }
    return h;
}

namespace {

/// Range and shape checks shared by validate_twocat; returns false (and
/// reports) when deeper checks would read out of range.
bool check_shapes(const TwoCat& c, ValidationReport& rep) {
    int nob = c.ob_count(), n1 = c.one_count(), n2 = c.two_count();
    auto sized = [&](const char* what, size_t got, int want) {
        if (static_cast<int>(got) != want) {
            rep.add("shape", what, "table size mismatch");
            return false;
        }
        return true;
    };
    if (!sized("src1", c.src1.size(), n1) || !sized("tgt1", c.tgt1.size(), n1) ||
        !sized("id1", c.id1.size(), nob) || !sized("src2", c.src2.size(), n2) ||
        !sized("tgt2", c.tgt2.size(), n2) || !sized("id2", c.id2.size(), n1) ||
        !sized("hcomp1", c.hcomp1.size(), n1) ||
        !sized("vcomp", c.vcomp.size(), n2) ||
        !sized("hcomp2", c.hcomp2.size(), n2))
        return false;
    for (int g = 0; g < n1; ++g)
        if (!sized("hcomp1 row", c.hcomp1[g].size(), n1)) return false;
    for (int b = 0; b < n2; ++b)
        if (!sized("vcomp row", c.vcomp[b].size(), n2) ||
            !sized("hcomp2 row", c.hcomp2[b].size(), n2))
            return false;

    bool ok = true;
    for (int f = 0; f < n1; ++f)
        if (c.src1[f] < 0 || c.src1[f] >= nob || c.tgt1[f] < 0 ||
            c.tgt1[f] >= nob) {
            rep.add("dangling-1", c.one_cells[f], "endpoint out of range");
            ok = false;
        }
    for (int x = 0; x < nob; ++x)
        if (c.id1[x] < 0 || c.id1[x] >= n1) {
            rep.add("dangling-id1", c.objects[x], "identity 1-cell out of range");
            ok = false;
        }
    for (int a = 0; a < n2; ++a)
        if (c.src2[a] < 0 || c.src2[a] >= n1 || c.tgt2[a] < 0 ||
            c.tgt2[a] >= n1) {
            rep.add("dangling-2", c.two_cells[a], "boundary 1-cell out of range");
            ok = false;
        }
    for (int f = 0; f < n1; ++f)
        if (c.id2[f] < 0 || c.id2[f] >= n2) {
            rep.add("dangling-id2", c.one_cells[f], "identity 2-cell out of range");
            ok = false;
        }
    for (int g = 0; g < n1 && ok; ++g)
        for (int f = 0; f < n1; ++f)
            if (c.hcomp1[g][f] >= n1) {
                rep.add("dangling-hcomp1", c.one_cells[g] + "∘" + c.one_cells[f],
                        "entry out of range");
                ok = false;
            }
    for (int b = 0; b < n2 && ok; ++b)
        for (int a = 0; a < n2; ++a) {
            if (c.vcomp[b][a] >= n2) {
                rep.add("dangling-vcomp", c.two_cells[b] + "∘" + c.two_cells[a],
                        "entry out of range");
                ok = false;
            }
            if (c.hcomp2[b][a] >= n2) {
                rep.add("dangling-hcomp2", c.two_cells[b] + " " + c.two_cells[a],
                        "entry out of range");
                ok = false;
            }
        }
    return ok;
}

} // namespace

ValidationReport validate_twocat(const TwoCat& c) {
    ValidationReport rep;
    if (!check_shapes(c, rep)) return rep;
    int n1 = c.one_count(), n2 = c.two_count();

    // Globularity: every 2-cell runs between parallel 1-cells, identities
    // have the right boundaries.
    for (int x = 0; x < c.ob_count(); ++x)
        if (c.src1[c.id1[x]] != x || c.tgt1[c.id1[x]] != x)
            rep.add("id1-endpoints", c.objects[x],
                    "identity 1-cell is not an endo-cell");
    for (int f = 0; f < n1; ++f)
        if (c.src2[c.id2[f]] != f || c.tgt2[c.id2[f]] != f)
            rep.add("id2-endpoints", c.one_cells[f],
                    "identity 2-cell does not sit on its 1-cell");
    for (int a = 0; a < n2; ++a)
        if (c.src1[c.src2[a]] != c.src1[c.tgt2[a]] ||
            c.tgt1[c.src2[a]] != c.tgt1[c.tgt2[a]])
            rep.add("globular", c.two_cells[a],
                    "boundary 1-cells are not parallel");
    if (!rep.ok()) return rep;

    ValidationReport under = validate_fincat(underlying_onecat(c));
    rep.merge(under, "1-cells: ");

    // Vertical structure: definedness exactly on matching pairs, boundary of
    // results, units, associativity.  This is each hom category, checked in
    // the global tables.
    for (int b = 0; b < n2; ++b)
        for (int a = 0; a < n2; ++a) {
            int r = c.vcomp[b][a];
            if (c.vcomposable(b, a)) {
                if (r < 0)
                    rep.add("vcomp-missing", c.two_cells[b] + "∘" + c.two_cells[a],
                            "stackable pair has no composite");
                else if (c.src2[r] != c.src2[a] || c.tgt2[r] != c.tgt2[b])
                    rep.add("vcomp-boundary", c.two_cells[b] + "∘" + c.two_cells[a],
                            "composite " + c.two_cells[r] + " has wrong boundary");
            } else if (r >= 0) {
                rep.add("vcomp-spurious", c.two_cells[b] + "∘" + c.two_cells[a],
                        "non-stackable pair has an entry");
            }
        }
    if (!rep.ok()) return rep;

    for (int a = 0; a < n2; ++a) {
        if (c.vcomp[c.id2[c.tgt2[a]]][a] != a)
            rep.add("vcomp-unit-left", c.two_cells[a], "id∘a != a");
        if (c.vcomp[a][c.id2[c.src2[a]]] != a)
            rep.add("vcomp-unit-right", c.two_cells[a], "a∘id != a");
    }
    for (int cc = 0; cc < n2; ++cc)
        for (int b = 0; b < n2; ++b) {
            if (!c.vcomposable(cc, b)) continue;
            for (int a = 0; a < n2; ++a) {
                if (!c.vcomposable(b, a)) continue;
                if (c.vcomp[cc][c.vcomp[b][a]] != c.vcomp[c.vcomp[cc][b]][a])
                    rep.add("vcomp-assoc",
                            c.two_cells[cc] + "∘" + c.two_cells[b] + "∘" +
                                c.two_cells[a],
                            "vertical composition is not associative here");
            }
        }

    // Juxtaposition: definedness, boundaries, functoriality on identities,
    // associativity, absorption by identity 1-cells.
    for (int b = 0; b < n2; ++b)
        for (int a = 0; a < n2; ++a) {
            int r = c.hcomp2[b][a];
            if (c.hcomposable(b, a)) {
                if (r < 0) {
                    rep.add("hcomp2-missing", c.two_cells[b] + " " + c.two_cells[a],
                            "composable pair has no juxtaposition");
                } else {
                    int sf = c.hcomp1[c.src2[b]][c.src2[a]];
                    int tf = c.hcomp1[c.tgt2[b]][c.tgt2[a]];
                    if (c.src2[r] != sf || c.tgt2[r] != tf)
                        rep.add("hcomp2-boundary",
                                c.two_cells[b] + " " + c.two_cells[a],
                                "result " + c.two_cells[r] + " has wrong boundary");
                }
            } else if (r >= 0) {
                rep.add("hcomp2-spurious", c.two_cells[b] + " " + c.two_cells[a],
                        "non-composable pair has an entry");
            }
        }
    if (!rep.ok()) return rep;

    for (int g = 0; g < n1; ++g)
        for (int f = 0; f < n1; ++f) {
            if (!c.composable1(g, f)) continue;
            if (c.hcomp2[c.id2[g]][c.id2[f]] != c.id2[c.hcomp1[g][f]])
                rep.add("hcomp2-id", c.one_cells[g] + " " + c.one_cells[f],
                        "id2(g) id2(f) != id2(g∘f)");
        }
    for (int a = 0; a < n2; ++a) {
        int f = c.src2[a];
        if (c.hcomp2[c.id2[c.id1[c.tgt1[f]]]][a] != a)
            rep.add("hcomp2-unit-left", c.two_cells[a],
                    "juxtaposing the identity of an identity 1-cell changed the cell");
        if (c.hcomp2[a][c.id2[c.id1[c.src1[f]]]] != a)
            rep.add("hcomp2-unit-right", c.two_cells[a],
                    "juxtaposing the identity of an identity 1-cell changed the cell");
    }
    for (int g3 = 0; g3 < n2; ++g3)
        for (int g2 = 0; g2 < n2; ++g2) {
            if (!c.hcomposable(g3, g2)) continue;
            for (int g1 = 0; g1 < n2; ++g1) {
                if (!c.hcomposable(g2, g1)) continue;
                if (c.hcomp2[g3][c.hcomp2[g2][g1]] !=
                    c.hcomp2[c.hcomp2[g3][g2]][g1])
                    rep.add("hcomp2-assoc",
                            c.two_cells[g3] + " " + c.two_cells[g2] + " " +
                                c.two_cells[g1],
                            "juxtaposition is not associative here");
            }
        }

    // Interchange on every 2x2 grid: alpha: f=>f', alpha': f'=>f'' beside
    // beta: g=>g', beta': g'=>g''.
    for (int bp = 0; bp < n2; ++bp)
        for (int b = 0; b < n2; ++b) {
            if (!c.vcomposable(bp, b)) continue;
            for (int ap = 0; ap < n2; ++ap) {
                if (!c.hcomposable(bp, ap)) continue;
                for (int a = 0; a < n2; ++a) {
                    if (!c.vcomposable(ap, a) || !c.hcomposable(b, a)) continue;
                    int lhs = c.hcomp2[c.vcomp[bp][b]][c.vcomp[ap][a]];
                    int rhs = c.vcomp[c.hcomp2[bp][ap]][c.hcomp2[b][a]];
                    if (lhs != rhs)
                        rep.add("interchange",
                                "(" + c.two_cells[bp] + "∘" + c.two_cells[b] +
                                    ") (" + c.two_cells[ap] + "∘" +
                                    c.two_cells[a] + ")",
                                "stack-then-juxtapose gives " + c.two_cells[lhs] +
                                    " but juxtapose-then-stack gives " +
                                    c.two_cells[rhs]);
                }
            }
        }
    return rep;
}

TwoCat op(const TwoCat& c) {
    TwoCat o = c;
    o.src1 = c.tgt1;
    o.tgt1 = c.src1;
    for (int g = 0; g < c.one_count(); ++g)
        for (int f = 0; f < c.one_count(); ++f)
            o.hcomp1[g][f] = c.hcomp1[f][g];
    for (int b = 0; b < c.two_count(); ++b)
        for (int a = 0; a < c.two_count(); ++a)
            o.hcomp2[b][a] = c.hcomp2[a][b];
    return o;
}

TwoCat discrete2(const FinCat& c) {
    TwoCat d;
    d.objects = c.objects;
    d.one_cells = c.morphisms;
    d.src1 = c.src;
    d.tgt1 = c.tgt;
    d.id1 = c.id_of;
    d.hcomp1 = c.comp;
    int n = c.mor_count();
    d.two_cells.reserve(n);
    for (int f = 0; f < n; ++f) {
        d.two_cells.push_back("id_" + c.morphisms[f]);
        d.src2.push_back(f);
        d.tgt2.push_back(f);
        d.id2.push_back(f);
    }
    d.vcomp.assign(n, std::vector<int>(n, -1));
    d.hcomp2.assign(n, std::vector<int>(n, -1));
    for (int a = 0; a < n; ++a) d.vcomp[a][a] = a;
    for (int b = 0; b < n; ++b)
        for (int a = 0; a < n; ++a)
            if (c.tgt[a] == c.src[b]) d.hcomp2[b][a] = c.comp[b][a];
    return d;
}

TwoCat terminal_twocat() {
    TwoCat t;
    t.add_object("*");
    t.fill_identity_composites();
    return t;
}

std::string describe(const TwoCat& c) {
    std::string out = "2-category with " + std::to_string(c.ob_count()) +
                      " objects, " + std::to_string(c.one_count()) +
                      " 1-cells, " + std::to_string(c.two_count()) +
                      " 2-cells\n";
    out += "objects:";
    for (const auto& o : c.objects) out += " " + o;
    out += "\n1-cells:";
    for (int f = 0; f < c.one_count(); ++f)
        out += " " + c.one_cells[f] + ":" + c.objects[c.src1[f]] + "->" +
               c.objects[c.tgt1[f]];
    out += "\n2-cells:";
    for (int a = 0; a < c.two_count(); ++a)
        out += " " + c.two_cells[a] + ":" + c.one_cells[c.src2[a]] + "=>" +
               c.one_cells[c.tgt2[a]];
    out += "\n";
    return out;
}

} // namespace twocat
