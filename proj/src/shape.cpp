#include "twocat/shape.hpp"

#include <algorithm>

#include "twocat/cat2.hpp"

namespace twocat {

// ---------------------------------------------------------------------------
// Filteredness and cofinality checkers
// ---------------------------------------------------------------------------

ValidationReport check_2filtered(const TwoCat& I) {
    ValidationReport rep;
    if (I.ob_count() == 0) {
        rep.add("non-empty", "", "the 2-category has no objects");
        return rep;
    }
    for (int c = 0; c < I.ob_count(); ++c)
        for (int d = 0; d < I.ob_count(); ++d) {
            bool found = false;
            for (int e = 0; e < I.ob_count() && !found; ++e)
                found = !I.one_hom(c, e).empty() && !I.one_hom(d, e).empty();
            if (!found)
                rep.add("F0", I.objects[c] + ", " + I.objects[d],
                        "no object receives 1-cells from both");
        }
    for (int f = 0; f < I.one_count(); ++f)
        for (int g = 0; g < I.one_count(); ++g) {
            if (I.src1[f] != I.src1[g] || I.tgt1[f] != I.tgt1[g]) continue;
            bool found = false;
            for (int h = 0; h < I.one_count() && !found; ++h) {
                if (I.src1[h] != I.tgt1[f]) continue;
                for (int al : I.two_hom(I.hcomp1[h][f], I.hcomp1[h][g]))
                    if (I.is_invertible2(al)) {
                        found = true;
                        break;
                    }
            }
            if (!found)
                rep.add("F1", I.one_cells[f] + ", " + I.one_cells[g],
                        "no 1-cell joins them up to an invertible 2-cell");
        }
    for (int a = 0; a < I.two_count(); ++a)
        for (int b = a + 1; b < I.two_count(); ++b) {
            if (I.src2[a] != I.src2[b] || I.tgt2[a] != I.tgt2[b]) continue;
            bool found = false;
            for (int h = 0; h < I.one_count() && !found; ++h) {
                if (I.src1[h] != I.tgt1[I.src2[a]]) continue;
                found = I.whisker_left(h, a) == I.whisker_left(h, b);
            }
            if (!found)
                rep.add("F2", I.two_cells[a] + ", " + I.two_cells[b],
                        "no 1-cell equalizes them by whiskering");
        }
    return rep;
}

ValidationReport check_2cofinal(const PseudoFunctor& F) {
    ValidationReport rep;
    const TwoCat& I = *F.dom;
    const TwoCat& J = *F.cod;
    for (int j = 0; j < J.ob_count(); ++j) {
        bool found = false;
        for (int i = 0; i < I.ob_count() && !found; ++i)
            found = !J.one_hom(j, F.ob[i]).empty();
        if (!found)
            rep.add("CF0", J.objects[j], "no 1-cell into any value object");
    }
    for (int i = 0; i < I.ob_count(); ++i)
        for (int a = 0; a < J.one_count(); ++a) {
            if (J.tgt1[a] != F.ob[i]) continue;
            for (int b = 0; b < J.one_count(); ++b) {
                if (J.tgt1[b] != F.ob[i] || J.src1[b] != J.src1[a]) continue;
                bool found = false;
                for (int u = 0; u < I.one_count() && !found; ++u) {
                    if (I.src1[u] != i) continue;
                    int fu = F.one[u];
                    for (int al :
                         J.two_hom(J.hcomp1[fu][a], J.hcomp1[fu][b]))
                        if (J.is_invertible2(al)) {
                            found = true;
                            break;
                        }
                }
                if (!found)
                    rep.add("CF1",
                            J.one_cells[a] + ", " + J.one_cells[b] +
                                " into value of " + I.objects[i],
                            "no 1-cell out of " + I.objects[i] +
                                " joins them up to an invertible 2-cell");
            }
        }
    for (int i = 0; i < I.ob_count(); ++i)
        for (int a = 0; a < J.two_count(); ++a) {
            if (J.tgt1[J.src2[a]] != F.ob[i]) continue;
            for (int b = a + 1; b < J.two_count(); ++b) {
                if (J.src2[a] != J.src2[b] || J.tgt2[a] != J.tgt2[b]) continue;
                bool found = false;
                for (int u = 0; u < I.one_count() && !found; ++u) {
                    if (I.src1[u] != i) continue;
                    found = J.whisker_left(F.one[u], a) ==
                            J.whisker_left(F.one[u], b);
                }
                if (!found)
                    rep.add("CF2",
                            J.two_cells[a] + ", " + J.two_cells[b] +
                                " into value of " + I.objects[i],
                            "no 1-cell out of " + I.objects[i] +
                                " equalizes them by whiskering");
            }
        }
    return rep;
}

// ---------------------------------------------------------------------------
// Diagrams and the subdiagram order
// ---------------------------------------------------------------------------

int diagram_cells(const MJElement& d) {
    return d.shape.ob_count() +
           (d.shape.mor_count() - d.shape.ob_count());
}

ValidationReport validate_diagram(const TwoCat& J, const MJElement& d) {
    ValidationReport rep;
    rep.merge(validate_fincat(d.shape), "shape: ");
    if (!rep.ok()) return rep;
    if ((int)d.ob.size() != d.shape.ob_count() ||
        (int)d.mor.size() != d.shape.mor_count()) {
        rep.add("shape", "tables", "value table sizes differ from the shape");
        return rep;
    }
    FinCat UJ = underlying_onecat(J);
    CatFunctor f;
    f.dom = &d.shape;
    f.cod = &UJ;
    f.ob = d.ob;
    f.mor = d.mor;
    rep.merge(validate_functor(f), "values: ");
    if (d.star < 0 || d.star >= d.shape.ob_count()) {
        rep.add("star", "", "chosen final object is out of range");
        return rep;
    }
    auto fin = d.shape.final_objects();
    if (std::find(fin.begin(), fin.end(), d.star) == fin.end())
        rep.add("star", d.shape.objects[d.star],
                "chosen object is not final in the shape");
    return rep;
}

namespace {

bool is_id_mor(const FinCat& c, int m) { return c.id_of[c.src[m]] == m; }

// Backtracking search for injective functors a.shape -> b.shape commuting
// with the values.  Objects are assigned in index order, identities are
// forced, then the non-identity morphisms; functoriality is verified on
// every complete assignment.  With `star_images` null the search stops at
// the first embedding found; otherwise it runs exhaustively and collects
// the distinct images of a.star (in discovery order).
struct InjectionSearch {
    const MJElement* a = nullptr;
    const MJElement* b = nullptr;
    std::vector<int>* star_images = nullptr;
    std::vector<int> ob_map, mor_map, nonid;
    std::vector<char> ob_used, mor_used;
    bool found = false;

    bool run() {
        const FinCat& sa = a->shape;
        const FinCat& sb = b->shape;
        if (sa.ob_count() > sb.ob_count() || sa.mor_count() > sb.mor_count())
            return false;
        ob_map.assign(sa.ob_count(), -1);
        mor_map.assign(sa.mor_count(), -1);
        ob_used.assign(sb.ob_count(), 0);
        mor_used.assign(sb.mor_count(), 0);
        nonid.clear();
        for (int r = 0; r < sa.mor_count(); ++r)
            if (!is_id_mor(sa, r)) nonid.push_back(r);
        next_object(0);
        return found;
    }

    bool done() const { return found && star_images == nullptr; }

    void next_object(int x) {
        const FinCat& sa = a->shape;
        const FinCat& sb = b->shape;
        if (x == sa.ob_count()) {
            for (int y = 0; y < sa.ob_count(); ++y) {
                mor_map[sa.id_of[y]] = sb.id_of[ob_map[y]];
                mor_used[sb.id_of[ob_map[y]]] = 1;
            }
            next_morphism(0);
            for (int y = 0; y < sa.ob_count(); ++y) {
                mor_used[sb.id_of[ob_map[y]]] = 0;
                mor_map[sa.id_of[y]] = -1;
            }
            return;
        }
        for (int y = 0; y < sb.ob_count(); ++y) {
            if (ob_used[y] || b->ob[y] != a->ob[x]) continue;
            ob_map[x] = y;
            ob_used[y] = 1;
            next_object(x + 1);
            ob_map[x] = -1;
            ob_used[y] = 0;
            if (done()) return;
        }
    }

    void next_morphism(int k) {
        const FinCat& sa = a->shape;
        const FinCat& sb = b->shape;
        if (k == (int)nonid.size()) {
            for (int p = 0; p < sa.mor_count(); ++p)
                for (int q = 0; q < sa.mor_count(); ++q) {
                    if (sa.tgt[p] != sa.src[q]) continue;
                    if (mor_map[sa.comp[q][p]] !=
                        sb.comp[mor_map[q]][mor_map[p]])
                        return;
                }
            found = true;
            if (star_images) {
                int s = ob_map[a->star];
                if (std::find(star_images->begin(), star_images->end(), s) ==
                    star_images->end())
                    star_images->push_back(s);
            }
            return;
        }
        int r = nonid[k];
        for (int m = 0; m < sb.mor_count(); ++m) {
            if (mor_used[m] || b->mor[m] != a->mor[r]) continue;
            if (sb.src[m] != ob_map[sa.src[r]] || sb.tgt[m] != ob_map[sa.tgt[r]])
                continue;
            mor_map[r] = m;
            mor_used[m] = 1;
            next_morphism(k + 1);
            mor_map[r] = -1;
            mor_used[m] = 0;
            if (done()) return;
        }
    }
};

bool embeds(const MJElement& a, const MJElement& b,
            std::vector<int>* star_images = nullptr) {
    InjectionSearch s;
    s.a = &a;
    s.b = &b;
    s.star_images = star_images;
    return s.run();
}

} // namespace

bool diagram_leq(const TwoCat& J, const MJElement& a, const MJElement& b) {
    (void)J; // values are compared through the stored index tables
    return embeds(a, b);
}

bool diagram_iso(const TwoCat& J, const MJElement& a, const MJElement& b) {
    (void)J;
    // An injection between equinumerous diagrams is bijective, and the
    // inverse of a bijective functor is again a functor.
    return a.shape.ob_count() == b.shape.ob_count() &&
           a.shape.mor_count() == b.shape.mor_count() && embeds(a, b);
}

// ---------------------------------------------------------------------------
// Enumeration of diagram classes
// ---------------------------------------------------------------------------

namespace {

// Appends every category on `o` objects and `m` non-identity arrows with the
// given source/target assignment that has a final object.  Skips assignments
// where no object can be final (exactly one incoming arrow from every other
// object, none from itself) before enumerating composition tables.
void shapes_on_graph(int o, int m, const std::vector<int>& st,
                     std::vector<FinCat>& out) {
    bool has_final = false;
    for (int f = 0; f < o && !has_final; ++f) {
        std::vector<int> into(o, 0);
        for (int i = 0; i < m; ++i)
            if (st[2 * i + 1] == f) ++into[st[2 * i]];
        bool good = into[f] == 0;
        for (int x = 0; x < o && good; ++x)
            if (x != f) good = into[x] == 1;
        has_final = good;
    }
    if (!has_final) return;

    FinCat skel;
    for (int x = 0; x < o; ++x) skel.add_object("x" + std::to_string(x));
    for (int i = 0; i < m; ++i)
        skel.add_morphism("r" + std::to_string(i), st[2 * i], st[2 * i + 1]);

    std::vector<std::pair<int, int>> pairs; // (first arrow, second arrow)
    std::vector<std::vector<int>> cand;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            int r = o + i, s = o + j;
            if (skel.tgt[r] != skel.src[s]) continue;
            std::vector<int> cs;
            for (int t = 0; t < skel.mor_count(); ++t)
                if (skel.src[t] == skel.src[r] && skel.tgt[t] == skel.tgt[s])
                    cs.push_back(t);
            if (cs.empty()) return; // no composite available at all
            pairs.emplace_back(r, s);
            cand.push_back(std::move(cs));
        }

    std::vector<int> pick(pairs.size(), 0);
    while (true) {
        FinCat c = skel;
        for (size_t p = 0; p < pairs.size(); ++p)
            c.set_comp(pairs[p].second, pairs[p].first, cand[p][pick[p]]);
        c.fill_identity_composites();
        if (validate_fincat(c).ok()) out.push_back(std::move(c));
        size_t k = 0;
        while (k < pick.size() && pick[k] + 1 == (int)cand[k].size()) {
            pick[k] = 0;
            ++k;
        }
        if (k == pick.size()) break;
        ++pick[k];
    }
}

std::vector<FinCat> enumerate_final_shapes(int max_cells) {
    std::vector<FinCat> out;
    for (int o = 1; o <= max_cells; ++o)
        for (int m = 0; o + m <= max_cells; ++m) {
            std::vector<int> st(2 * m, 0);
            while (true) {
                shapes_on_graph(o, m, st, out);
                int k = 0;
                while (k < 2 * m && st[k] == o - 1) {
                    st[k] = 0;
                    ++k;
                }
                if (k == 2 * m) break;
                ++st[k];
            }
        }
    return out;
}

} // namespace

int MJPoset::find_class(const MJElement& d) const {
    for (int i = 0; i < (int)elems.size(); ++i)
        if (diagram_iso(*J, elems[i], d)) return i;
    return -1;
}

int MJPoset::downset_size(int x) const {
    int n = 0;
    for (int y = 0; y < (int)elems.size(); ++y)
        if (leq[y][x]) ++n;
    return n;
}

MJPoset build_MJ(const TwoCat& J, int bound) {
    if (bound < 1) throw InputError("build_MJ: the cell bound must be at least 1");
    MJPoset M;
    M.J = &J;
    M.bound = bound;
    FinCat UJ = underlying_onecat(J);

    for (const FinCat& sh : enumerate_final_shapes(bound)) {
        int star = sh.final_objects().front();
        for (const CatFunctor& f : all_functors(sh, UJ)) {
            MJElement d;
            d.shape = sh;
            d.ob = f.ob;
            d.mor = f.mor;
            d.star = star;
            bool fresh = true;
            for (const MJElement& e : M.elems)
                if (diagram_iso(J, e, d)) {
                    fresh = false;
                    break;
                }
            if (fresh) M.elems.push_back(std::move(d));
        }
    }
    std::stable_sort(M.elems.begin(), M.elems.end(),
                     [](const MJElement& x, const MJElement& y) {
                         return diagram_cells(x) < diagram_cells(y);
                     });

    int n = (int)M.elems.size();
    M.leq.assign(n, std::vector<char>(n, 0));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            M.leq[x][y] = diagram_leq(J, M.elems[x], M.elems[y]) ? 1 : 0;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (M.leq[x][y] && M.leq[y][x])
                M.report.add("order",
                             "D" + std::to_string(x) + ", D" + std::to_string(y),
                             "distinct classes embed into each other");

    for (int x = 0; x < n; ++x) M.poset.add_object("D" + std::to_string(x));
    std::vector<std::vector<int>> le(n, std::vector<int>(n, -1));
    for (int x = 0; x < n; ++x) le[x][x] = M.poset.id_of[x];
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (x != y && M.leq[x][y])
                le[x][y] = M.poset.add_morphism(
                    "le" + std::to_string(x) + "_" + std::to_string(y), x, y);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (x != y && y != z && M.leq[x][y] && M.leq[y][z])
                    M.poset.set_comp(le[y][z], le[x][y], le[x][z]);
    M.poset.fill_identity_composites();
    validate_fincat(M.poset).expect_ok("diagram order category");
    M.as2 = std::make_unique<TwoCat>(discrete2(M.poset));

    // Projection onto J: a class goes to the value of its chosen final
    // object, a relation x <= y to the value of the connecting morphism
    // h(star_x) -> star_y for an embedding h.  All embeddings are compared;
    // disagreeing values are reported as "phi-welldef".
    PseudoFunctor& phi = M.phi;
    phi.dom = M.as2.get();
    phi.cod = &J;
    phi.ob.resize(n);
    for (int x = 0; x < n; ++x) phi.ob[x] = M.elems[x].ob[M.elems[x].star];
    phi.one.assign(M.as2->one_count(), -1);
    for (int u = 0; u < M.as2->one_count(); ++u) {
        int x = M.as2->src1[u], y = M.as2->tgt1[u];
        const MJElement& ex = M.elems[x];
        const MJElement& ey = M.elems[y];
        std::vector<int> stars;
        embeds(ex, ey, &stars);
        std::vector<int> values;
        for (int s : stars) {
            int r = ey.shape.hom(s, ey.star).front(); // unique by finality
            values.push_back(ey.mor[r]);
        }
        if (u == M.as2->id1[x]) {
            phi.one[u] = J.id1[phi.ob[x]];
            for (int v : values)
                if (v != phi.one[u])
                    M.report.add("phi-welldef", M.poset.objects[x],
                                 "a self-embedding carries the final object to " +
                                     J.one_cells[v] + " instead of the identity");
        } else {
            phi.one[u] = values.front();
            for (int v : values)
                if (v != phi.one[u])
                    M.report.add("phi-welldef", M.poset.morphisms[u],
                                 "embeddings disagree: " +
                                     J.one_cells[phi.one[u]] + " vs " +
                                     J.one_cells[v]);
        }
    }
    phi.two.resize(M.as2->two_count());
    for (int t = 0; t < M.as2->two_count(); ++t)
        phi.two[t] = J.id2[phi.one[M.as2->src2[t]]];
    phi.unitor.resize(n);
    for (int x = 0; x < n; ++x) phi.unitor[x] = J.id2[J.id1[phi.ob[x]]];
    phi.compositor.assign(M.as2->one_count(),
                          std::vector<int>(M.as2->one_count(), -1));
    for (int f = 0; f < M.as2->one_count(); ++f)
        for (int g = 0; g < M.as2->one_count(); ++g) {
            if (!M.as2->composable1(g, f)) continue;
            int direct = phi.one[M.as2->hcomp1[g][f]];
            int juxt = J.hcompose1(phi.one[g], phi.one[f]);
            if (juxt == direct) {
                phi.compositor[g][f] = J.id2[direct];
                continue;
            }
            int cell = -1;
            for (int al : J.two_hom(juxt, direct))
                if (J.is_invertible2(al)) {
                    cell = al;
                    break;
                }
            if (cell < 0) {
                M.report.add("phi-compositor",
                             M.poset.morphisms[g] + " after " +
                                 M.poset.morphisms[f],
                             "no invertible 2-cell " + J.one_cells[juxt] +
                                 " => " + J.one_cells[direct]);
                cell = J.id2[juxt];
            }
            phi.compositor[g][f] = cell;
        }
    M.report.merge(validate_pseudofunctor(M.phi), "phi: ");
    return M;
}

// ---------------------------------------------------------------------------
// Directedness and cofinality of the truncation
// ---------------------------------------------------------------------------

namespace {

// Bookkeeping for building an extension diagram: shape plus value tables
// tracked in parallel, with identities filled at the end.
struct DiagramBuilder {
    MJElement d;
    std::vector<int> obv;                      // object -> J object
    std::vector<std::pair<int, int>> morv;     // (non-id morphism, J 1-cell)

    int add_object(const std::string& name, int value) {
        int x = d.shape.add_object(name);
        obv.push_back(value);
        return x;
    }
    int add_arrow(const std::string& name, int s, int t, int value) {
        int m = d.shape.add_morphism(name, s, t);
        morv.emplace_back(m, value);
        return m;
    }
    // Copies the objects and non-identity arrows of `src` with a name
    // prefix; composites among the copied arrows are set.  Returns the
    // object and morphism index maps.
    void copy(const MJElement& src, const std::string& prefix,
              std::vector<int>& ob_map, std::vector<int>& mor_map) {
        const FinCat& s = src.shape;
        ob_map.assign(s.ob_count(), -1);
        mor_map.assign(s.mor_count(), -1);
        for (int x = 0; x < s.ob_count(); ++x)
            ob_map[x] = add_object(prefix + s.objects[x], src.ob[x]);
        for (int x = 0; x < s.ob_count(); ++x)
            mor_map[s.id_of[x]] = d.shape.id_of[ob_map[x]];
        for (int r = 0; r < s.mor_count(); ++r)
            if (!is_id_mor(s, r))
                mor_map[r] = add_arrow(prefix + s.morphisms[r],
                                       ob_map[s.src[r]], ob_map[s.tgt[r]],
                                       src.mor[r]);
        for (int p = 0; p < s.mor_count(); ++p)
            for (int q = 0; q < s.mor_count(); ++q) {
                if (s.tgt[p] != s.src[q]) continue;
                if (is_id_mor(s, p) || is_id_mor(s, q)) continue;
                d.shape.set_comp(mor_map[q], mor_map[p], mor_map[s.comp[q][p]]);
            }
    }
    MJElement finish(int star) {
        d.shape.fill_identity_composites();
        d.star = star;
        d.ob = obv;
        d.mor.assign(d.shape.mor_count(), -1);
        for (auto& [m, v] : morv) d.mor[m] = v;
        return std::move(d);
    }
};

// Identity values cannot be filled inside DiagramBuilder::finish without
// the ambient category, so callers pass it here.
MJElement finish_with_identities(DiagramBuilder& bld, const FinCat& UJ,
                                 int star) {
    MJElement d = bld.finish(star);
    for (int x = 0; x < d.shape.ob_count(); ++x)
        d.mor[d.shape.id_of[x]] = UJ.id_of[d.ob[x]];
    return d;
}

// The unique shape arrow from `c` into the chosen final object.
int arrow_to_star(const MJElement& d, int c) {
    return d.shape.hom(c, d.star).front();
}

// Disjoint union of A and B plus one arrow from every A-object into B's
// final object, valued by composing a connecting 1-cell with the value of
// the arrow into A's final object.  Only a category when B's final object
// has no outgoing non-identity arrows; the caller validates.
MJElement graft_diagram(const FinCat& UJ, const MJElement& A,
                        const MJElement& B, int conn) {
    DiagramBuilder bld;
    std::vector<int> aob, amor, bob, bmor;
    bld.copy(A, "a.", aob, amor);
    bld.copy(B, "b.", bob, bmor);
    int star = bob[B.star];
    std::vector<int> glue(A.shape.ob_count(), -1);
    for (int c = 0; c < A.shape.ob_count(); ++c) {
        int val = UJ.compose(conn, A.mor[arrow_to_star(A, c)]);
        glue[c] = bld.add_arrow("g." + A.shape.objects[c], aob[c], star, val);
    }
    for (int r = 0; r < A.shape.mor_count(); ++r) {
        if (is_id_mor(A.shape, r)) continue;
        bld.d.shape.set_comp(glue[A.shape.tgt[r]], amor[r], glue[A.shape.src[r]]);
    }
    return finish_with_identities(bld, UJ, star);
}

// Disjoint union of A and B under a fresh final object over a cospan
// (u : A-star-value -> k, v : B-star-value -> k) in J.
MJElement join_under_fresh(const FinCat& UJ, const MJElement& A,
                           const MJElement& B, int k, int u, int v) {
    DiagramBuilder bld;
    std::vector<int> aob, amor, bob, bmor;
    bld.copy(A, "a.", aob, amor);
    bld.copy(B, "b.", bob, bmor);
    int star = bld.add_object("t", k);
    std::vector<int> ga(A.shape.ob_count(), -1), gb(B.shape.ob_count(), -1);
    for (int c = 0; c < A.shape.ob_count(); ++c)
        ga[c] = bld.add_arrow("ga." + A.shape.objects[c], aob[c], star,
                              UJ.compose(u, A.mor[arrow_to_star(A, c)]));
    for (int c = 0; c < B.shape.ob_count(); ++c)
        gb[c] = bld.add_arrow("gb." + B.shape.objects[c], bob[c], star,
                              UJ.compose(v, B.mor[arrow_to_star(B, c)]));
    for (int r = 0; r < A.shape.mor_count(); ++r)
        if (!is_id_mor(A.shape, r))
            bld.d.shape.set_comp(ga[A.shape.tgt[r]], amor[r],
                                 ga[A.shape.src[r]]);
    for (int r = 0; r < B.shape.mor_count(); ++r)
        if (!is_id_mor(B.shape, r))
            bld.d.shape.set_comp(gb[B.shape.tgt[r]], bmor[r],
                                 gb[B.shape.src[r]]);
    return finish_with_identities(bld, UJ, star);
}

// A plus a fresh final object with value at the target of h, every old
// object attached by h composed with its arrow into A's final object.
MJElement extend_with_final(const FinCat& UJ, const MJElement& A, int h) {
    DiagramBuilder bld;
    std::vector<int> aob, amor;
    bld.copy(A, "a.", aob, amor);
    int star = bld.add_object("t", UJ.tgt[h]);
    std::vector<int> ga(A.shape.ob_count(), -1);
    for (int c = 0; c < A.shape.ob_count(); ++c)
        ga[c] = bld.add_arrow("ga." + A.shape.objects[c], aob[c], star,
                              UJ.compose(h, A.mor[arrow_to_star(A, c)]));
    for (int r = 0; r < A.shape.mor_count(); ++r)
        if (!is_id_mor(A.shape, r))
            bld.d.shape.set_comp(ga[A.shape.tgt[r]], amor[r],
                                 ga[A.shape.src[r]]);
    return finish_with_identities(bld, UJ, star);
}

bool accepts_extension(const TwoCat& J, const MJElement& A, const MJElement& B,
                       const MJElement& W) {
    return validate_diagram(J, W).ok() && diagram_leq(J, A, W) &&
           diagram_leq(J, B, W);
}

bool try_graft(const TwoCat& J, const FinCat& UJ, const MJElement& A,
               const MJElement& B, int budget) {
    if (diagram_cells(A) + diagram_cells(B) + A.shape.ob_count() > budget)
        return false;
    int va = A.ob[A.star], vb = B.ob[B.star];
    for (int conn : UJ.hom(va, vb)) {
        MJElement W = graft_diagram(UJ, A, B, conn);
        if (accepts_extension(J, A, B, W)) return true;
    }
    return false;
}

bool try_fresh_join(const TwoCat& J, const FinCat& UJ, const MJElement& A,
                    const MJElement& B, int budget) {
    if (diagram_cells(A) + diagram_cells(B) + A.shape.ob_count() +
            B.shape.ob_count() + 1 >
        budget)
        return false;
    int va = A.ob[A.star], vb = B.ob[B.star];
    for (int k = 0; k < UJ.ob_count(); ++k)
        for (int u : UJ.hom(va, k))
            for (int v : UJ.hom(vb, k)) {
                MJElement W = join_under_fresh(UJ, A, B, k, u, v);
                if (accepts_extension(J, A, B, W)) return true;
            }
    return false;
}

} // namespace

ValidationReport check_MJ_filtered(const MJPoset& M, int slack) {
    ValidationReport rep;
    const TwoCat& J = *M.J;
    int n = (int)M.elems.size();
    if (n == 0) {
        rep.add("non-empty", "", "no diagram classes were enumerated");
        return rep;
    }
    FinCat UJ = underlying_onecat(J);
    int budget = M.bound + slack;
    for (int x = 0; x < n; ++x)
        for (int y = x; y < n; ++y) {
            bool ok = false;
            for (int z = 0; z < n && !ok; ++z) ok = M.leq[x][z] && M.leq[y][z];
            const MJElement& A = M.elems[x];
            const MJElement& B = M.elems[y];
            if (!ok) ok = try_graft(J, UJ, A, B, budget);
            if (!ok) ok = try_graft(J, UJ, B, A, budget);
            if (!ok) ok = try_fresh_join(J, UJ, A, B, budget);
            if (!ok)
                rep.add("filtered",
                        "D" + std::to_string(x) + ", D" + std::to_string(y),
                        "no common extension within " + std::to_string(budget) +
                            " cells");
        }
    return rep;
}

ValidationReport check_phi_cofinal(const MJPoset& M, int slack) {
    ValidationReport rep;
    const TwoCat& J = *M.J;
    int n = (int)M.elems.size();
    FinCat UJ = underlying_onecat(J);
    int budget = M.bound + slack;

    for (int j = 0; j < J.ob_count(); ++j) {
        bool ok = false;
        for (int x = 0; x < n && !ok; ++x)
            ok = !J.one_hom(j, M.phi.ob[x]).empty();
        if (!ok) rep.add("CF0", J.objects[j], "no 1-cell into any projected class");
    }

    // The projection value on an enumerated relation x <= y.
    auto edge = [&](int x, int y) { return M.phi.one[M.poset.hom(x, y).front()]; };

    for (int x = 0; x < n; ++x) {
        const MJElement& A = M.elems[x];
        int t = M.phi.ob[x];
        int ext_cells = diagram_cells(A) + A.shape.ob_count() + 1;
        for (int a = 0; a < J.one_count(); ++a) {
            if (J.tgt1[a] != t) continue;
            for (int b = 0; b < J.one_count(); ++b) {
                if (J.tgt1[b] != t || J.src1[b] != J.src1[a]) continue;
                bool ok = false;
                for (int y = 0; y < n && !ok; ++y) {
                    if (!M.leq[x][y]) continue;
                    int e = edge(x, y);
                    for (int al : J.two_hom(J.hcomp1[e][a], J.hcomp1[e][b]))
                        if (J.is_invertible2(al)) {
                            ok = true;
                            break;
                        }
                }
                if (!ok && ext_cells <= budget)
                    for (int h = 0; h < J.one_count() && !ok; ++h) {
                        if (J.src1[h] != t) continue;
                        bool inv = false;
                        for (int al : J.two_hom(J.hcomp1[h][a], J.hcomp1[h][b]))
                            if (J.is_invertible2(al)) {
                                inv = true;
                                break;
                            }
                        if (!inv) continue;
                        MJElement W = extend_with_final(UJ, A, h);
                        ok = validate_diagram(J, W).ok() && diagram_leq(J, A, W);
                    }
                if (!ok)
                    rep.add("CF1",
                            J.one_cells[a] + ", " + J.one_cells[b] + " into D" +
                                std::to_string(x),
                            "no extension within " + std::to_string(budget) +
                                " cells joins them up to an invertible 2-cell");
            }
        }
        for (int a = 0; a < J.two_count(); ++a) {
            if (J.tgt1[J.src2[a]] != t) continue;
            for (int b = a + 1; b < J.two_count(); ++b) {
                if (J.src2[a] != J.src2[b] || J.tgt2[a] != J.tgt2[b]) continue;
                bool ok = false;
                for (int y = 0; y < n && !ok; ++y) {
                    if (!M.leq[x][y]) continue;
                    int e = edge(x, y);
                    ok = J.whisker_left(e, a) == J.whisker_left(e, b);
                }
                if (!ok && ext_cells <= budget)
                    for (int h = 0; h < J.one_count() && !ok; ++h) {
                        if (J.src1[h] != t) continue;
                        if (J.whisker_left(h, a) != J.whisker_left(h, b))
                            continue;
                        MJElement W = extend_with_final(UJ, A, h);
                        ok = validate_diagram(J, W).ok() && diagram_leq(J, A, W);
                    }
                if (!ok)
                    rep.add("CF2",
                            J.two_cells[a] + ", " + J.two_cells[b] + " into D" +
                                std::to_string(x),
                            "no extension within " + std::to_string(budget) +
                                " cells equalizes them by whiskering");
            }
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// The path 2-category of a base category
// ---------------------------------------------------------------------------

int HatTwoCat::tuple_cell(int src_ob, const std::vector<int>& factors) const {
    for (int u = 0; u < (int)tuple_factors.size(); ++u)
        if (tuple_src[u] == src_ob && tuple_factors[u] == factors) return u;
    return -1;
}

int HatTwoCat::composite_of(int one_cell) const {
    const std::vector<int>& fac = tuple_factors[one_cell];
    if (fac.empty()) return base->id_of[tuple_src[one_cell]];
    return base->compose_chain(fac);
}

namespace {

std::string tuple_name(const FinCat& A, const std::vector<int>& fac) {
    std::string s = "(";
    for (size_t i = 0; i < fac.size(); ++i) {
        if (i) s += ",";
        s += A.morphisms[fac[i]];
    }
    return s + ")";
}

} // namespace

HatTwoCat build_hat(const FinCat& A, int max_len) {
    if (max_len < 1)
        throw InputError("build_hat: the length bound must be at least 1");
    validate_fincat(A).expect_ok("path base");

    HatTwoCat H;
    H.base = &A;
    for (int x = 0; x < A.ob_count(); ++x) H.cat.add_object(A.objects[x]);
    H.tuple_src.resize(H.cat.one_count());
    H.tuple_factors.resize(H.cat.one_count());
    for (int x = 0; x < A.ob_count(); ++x) H.tuple_src[H.cat.id1[x]] = x;

    std::vector<std::vector<int>> level;
    for (int f = 0; f < A.mor_count(); ++f)
        if (!is_id_mor(A, f)) level.push_back({f});
    for (int len = 1; len <= max_len && !level.empty(); ++len) {
        for (const std::vector<int>& t : level) {
            H.cat.add_one_cell(tuple_name(A, t), A.src[t.front()],
                               A.tgt[t.back()]);
            H.tuple_src.push_back(A.src[t.front()]);
            H.tuple_factors.push_back(t);
        }
        std::vector<std::vector<int>> next;
        if (len < max_len)
            for (const std::vector<int>& t : level)
                for (int g = 0; g < A.mor_count(); ++g)
                    if (!is_id_mor(A, g) && A.src[g] == A.tgt[t.back()]) {
                        std::vector<int> e = t;
                        e.push_back(g);
                        next.push_back(std::move(e));
                    }
        level = std::move(next);
    }

    int one = H.cat.one_count();
    for (int f = 0; f < one; ++f)
        for (int g = 0; g < one; ++g) {
            if (!H.cat.composable1(g, f)) continue;
            std::vector<int> cc = H.tuple_factors[f];
            cc.insert(cc.end(), H.tuple_factors[g].begin(),
                      H.tuple_factors[g].end());
            if ((int)cc.size() > max_len)
                throw BoundTooSmall(
                    "build_hat: the concatenation of " + H.cat.one_cells[f] +
                    " and " + H.cat.one_cells[g] + " needs length " +
                    std::to_string(cc.size()) + " but the bound is " +
                    std::to_string(max_len) +
                    " (bases with composable cycles have no finite bound)");
            int r = H.tuple_cell(H.cat.src1[f], cc);
            if (r < 0)
                throw Error("build_hat: enumerated tuples are not closed "
                            "under concatenation");
            H.cat.set_hcomp1(g, f, r);
        }

    H.theta.assign(one, std::vector<int>(one, -1));
    for (int s = 0; s < one; ++s) H.theta[s][s] = H.cat.id2[s];
    for (int s = 0; s < one; ++s)
        for (int t = 0; t < one; ++t) {
            if (s == t) continue;
            if (H.cat.src1[s] != H.cat.src1[t] || H.cat.tgt1[s] != H.cat.tgt1[t])
                continue;
            if (H.composite_of(s) != H.composite_of(t)) continue;
            H.theta[s][t] = H.cat.add_two_cell(
                "th" + H.cat.one_cells[s] + "->" + H.cat.one_cells[t], s, t);
        }
    for (int a = 0; a < H.cat.two_count(); ++a)
        for (int b = 0; b < H.cat.two_count(); ++b) {
            if (H.cat.vcomposable(b, a))
                H.cat.set_vcomp(b, a, H.theta[H.cat.src2[a]][H.cat.tgt2[b]]);
            if (H.cat.hcomposable(b, a))
                H.cat.set_hcomp2(
                    b, a,
                    H.theta[H.cat.hcomp1[H.cat.src2[b]][H.cat.src2[a]]]
                           [H.cat.hcomp1[H.cat.tgt2[b]][H.cat.tgt2[a]]]);
        }
    validate_twocat(H.cat).expect_ok("path 2-category");
    return H;
}

PseudoFunctor hat_unit(const HatTwoCat& hat, const TwoCat& A2) {
    const FinCat& A = *hat.base;
    if (A2.ob_count() != A.ob_count() || A2.one_count() != A.mor_count() ||
        A2.two_count() != A.mor_count())
        throw InputError("hat_unit: A2 is not the discrete shell of the base");
    PseudoFunctor T;
    T.dom = &A2;
    T.cod = &hat.cat;
    T.ob.resize(A.ob_count());
    for (int x = 0; x < A.ob_count(); ++x) T.ob[x] = x;
    T.one.assign(A2.one_count(), -1);
    for (int f = 0; f < A2.one_count(); ++f)
        T.one[f] = is_id_mor(A, f) ? hat.cat.id1[A.src[f]]
                                   : hat.tuple_cell(A.src[f], {f});
    T.two.resize(A2.two_count());
    for (int t = 0; t < A2.two_count(); ++t)
        T.two[t] = hat.cat.id2[T.one[A2.src2[t]]];
    T.unitor.resize(A.ob_count());
    for (int x = 0; x < A.ob_count(); ++x)
        T.unitor[x] = hat.cat.id2[hat.cat.id1[x]];
    T.compositor.assign(A2.one_count(), std::vector<int>(A2.one_count(), -1));
    for (int f = 0; f < A2.one_count(); ++f)
        for (int g = 0; g < A2.one_count(); ++g) {
            if (!A2.composable1(g, f)) continue;
            int juxt = hat.cat.hcomp1[T.one[g]][T.one[f]];
            int direct = T.one[A2.hcomp1[g][f]];
            T.compositor[g][f] = hat.theta[juxt][direct];
        }
    return T;
}

HatTransport transport_along_hat(const HatTwoCat& hat, const PseudoFunctor& F) {
    const FinCat& A = *hat.base;
    const TwoCat& C = *F.cod;
    if (F.dom->ob_count() != A.ob_count() ||
        F.dom->one_count() != A.mor_count())
        throw InputError("transport_along_hat: the source map is not defined "
                         "on the discrete shell of the base");
    HatTransport t;
    t.hat = &hat;
    t.source = &F;
    t.apply_obj = F.ob;
    int one = hat.cat.one_count();
    std::vector<int> theta_cell(one, -1); // value(u) => F(composite of u)
    t.apply1.assign(one, -1);
    for (int u = 0; u < one; ++u) {
        const std::vector<int>& fac = hat.tuple_factors[u];
        if (fac.empty()) {
            t.apply1[u] = C.id1[F.ob[hat.tuple_src[u]]];
            theta_cell[u] = F.unitor[hat.tuple_src[u]];
        } else if (fac.size() == 1) {
            t.apply1[u] = F.one[fac.front()];
            theta_cell[u] = C.id2[t.apply1[u]];
        } else {
            std::vector<int> prefix(fac.begin(), fac.end() - 1);
            int pu = hat.tuple_cell(hat.tuple_src[u], prefix);
            int f = fac.back();
            int comparison = F.compositor[f][hat.composite_of(pu)];
            if (comparison < 0)
                throw Error("transport_along_hat: missing coherence cell for " +
                            hat.cat.one_cells[u]);
            int whisk = C.whisker_left(F.one[f], theta_cell[pu]);
            t.apply1[u] = C.hcompose1(F.one[f], t.apply1[pu]);
            theta_cell[u] = C.vcompose(comparison, whisk);
        }
    }
    t.apply2.assign(hat.cat.two_count(), -1);
    for (int a = 0; a < hat.cat.two_count(); ++a) {
        int s = hat.cat.src2[a], tt = hat.cat.tgt2[a];
        int inv = C.inverse2(theta_cell[tt]);
        if (inv < 0)
            throw Error("transport_along_hat: the comparison cell of " +
                        hat.cat.one_cells[tt] + " is not invertible");
        t.apply2[a] = C.vcompose(inv, theta_cell[s]);
    }
    return t;
}

ValidationReport check_transport(const HatTwoCat& hat, const HatTransport& t) {
    ValidationReport rep;
    const TwoCat& H = hat.cat;
    const PseudoFunctor& F = *t.source;
    const TwoCat& C = *F.cod;
    const FinCat& A = *hat.base;
    if ((int)t.apply_obj.size() != H.ob_count() ||
        (int)t.apply1.size() != H.one_count() ||
        (int)t.apply2.size() != H.two_count()) {
        rep.add("shape", "tables", "value table sizes differ from the index");
        return rep;
    }
    for (int u = 0; u < H.one_count(); ++u)
        if (C.src1[t.apply1[u]] != t.apply_obj[H.src1[u]] ||
            C.tgt1[t.apply1[u]] != t.apply_obj[H.tgt1[u]])
            rep.add("boundary", H.one_cells[u],
                    "1-cell image endpoints do not match");
    for (int a = 0; a < H.two_count(); ++a)
        if (C.src2[t.apply2[a]] != t.apply1[H.src2[a]] ||
            C.tgt2[t.apply2[a]] != t.apply1[H.tgt2[a]])
            rep.add("boundary", H.two_cells[a],
                    "2-cell image endpoints do not match");
    if (!rep.ok()) return rep;

    for (int x = 0; x < H.ob_count(); ++x)
        if (t.apply1[H.id1[x]] != C.id1[t.apply_obj[x]])
            rep.add("identity-1", H.objects[x],
                    "the empty tuple does not go to the identity");
    for (int u = 0; u < H.one_count(); ++u)
        if (t.apply2[H.id2[u]] != C.id2[t.apply1[u]])
            rep.add("identity-2", H.one_cells[u],
                    "the identity 2-cell is not preserved");
    for (int f = 0; f < H.one_count(); ++f)
        for (int g = 0; g < H.one_count(); ++g) {
            if (!H.composable1(g, f)) continue;
            if (t.apply1[H.hcomp1[g][f]] !=
                C.hcompose1(t.apply1[g], t.apply1[f]))
                rep.add("concat", H.one_cells[g] + " after " + H.one_cells[f],
                        "concatenation is not sent to composition");
        }
    for (int a = 0; a < H.two_count(); ++a)
        for (int b = 0; b < H.two_count(); ++b) {
            if (H.vcomposable(b, a) &&
                t.apply2[H.vcomp[b][a]] !=
                    C.vcompose(t.apply2[b], t.apply2[a]))
                rep.add("vertical", H.two_cells[b] + " after " + H.two_cells[a],
                        "vertical pasting is not preserved");
            if (H.hcomposable(b, a) &&
                t.apply2[H.hcomp2[b][a]] !=
                    C.hcompose2(t.apply2[b], t.apply2[a]))
                rep.add("horizontal",
                        H.two_cells[b] + " beside " + H.two_cells[a],
                        "horizontal pasting is not preserved");
        }

    for (int x = 0; x < A.ob_count(); ++x)
        if (t.apply_obj[x] != F.ob[x])
            rep.add("restriction-0", A.objects[x],
                    "object value differs from the source map");
    for (int f = 0; f < A.mor_count(); ++f) {
        if (is_id_mor(A, f)) continue;
        int u = hat.tuple_cell(A.src[f], {f});
        if (t.apply1[u] != F.one[f])
            rep.add("restriction-1", A.morphisms[f],
                    "singleton tuple value differs from the source map");
    }
    for (int f = 0; f < A.mor_count(); ++f)
        for (int g = 0; g < A.mor_count(); ++g) {
            if (is_id_mor(A, f) || is_id_mor(A, g)) continue;
            if (A.tgt[f] != A.src[g]) continue;
            int s = hat.tuple_cell(A.src[f], {f, g});
            if (s < 0) continue; // not materialized at this bound
            int gf = A.comp[g][f];
            if (is_id_mor(A, gf)) continue;
            int tt = hat.tuple_cell(A.src[f], {gf});
            if (t.apply2[hat.theta[s][tt]] != F.compositor[g][f])
                rep.add("coherence",
                        A.morphisms[g] + " after " + A.morphisms[f],
                        "the comparison with the composite tuple does not "
                        "recover the coherence cell");
        }
    return rep;
}

} // namespace twocat
