#include "twocat/fincat.hpp"

#include <algorithm>

namespace twocat {

int FinCat::object_index(const std::string& id) const {
    auto it = std::find(objects.begin(), objects.end(), id);
    return it == objects.end() ? -1 : static_cast<int>(it - objects.begin());
}

int FinCat::morphism_index(const std::string& id) const {
    auto it = std::find(morphisms.begin(), morphisms.end(), id);
    return it == morphisms.end() ? -1 : static_cast<int>(it - morphisms.begin());
}

int FinCat::compose(int g, int f) const {
    if (f < 0 || f >= mor_count() || g < 0 || g >= mor_count())
        throw UnknownCell("compose: morphism index out of range");
    if (!composable(g, f))
        throw NotComposable("compose: " + morphisms[g] + " after " +
                            morphisms[f] + " (tgt " + objects[tgt[f]] +
                            " != src " + objects[src[g]] + ")");
    int r = comp[g][f];
    if (r < 0)
        throw Error("compose: table entry missing for " + morphisms[g] +
                    " after " + morphisms[f]);
    return r;
}

int FinCat::compose_chain(const std::vector<int>& application_order) const {
    if (application_order.empty())
        throw Error("compose_chain: empty chain");
    int acc = application_order.front();
    for (size_t i = 1; i < application_order.size(); ++i)
        acc = compose(application_order[i], acc);
    return acc;
}

std::vector<int> FinCat::hom(int x, int y) const {
    std::vector<int> out;
    for (int m = 0; m < mor_count(); ++m)
        if (src[m] == x && tgt[m] == y) out.push_back(m);
    return out;
}

bool FinCat::is_iso(int m) const { return inverse(m) >= 0; }

int FinCat::inverse(int m) const {
    for (int n : hom(tgt[m], src[m]))
        if (comp[n][m] == id_of[src[m]] && comp[m][n] == id_of[tgt[m]])
            return n;
    return -1;
}

std::vector<int> FinCat::final_objects() const {
    std::vector<int> out;
    for (int t = 0; t < ob_count(); ++t) {
        bool fin = true;
        for (int x = 0; x < ob_count() && fin; ++x)
            fin = hom(x, t).size() == 1;
        if (fin) out.push_back(t);
    }
    return out;
}

int FinCat::add_object(const std::string& name) {
    int ob = ob_count();
    objects.push_back(name);
    int id = add_morphism("id_" + name, ob, ob);
    id_of.push_back(id);
    return ob;
}

int FinCat::add_morphism(const std::string& name, int src_ob, int tgt_ob) {
    int m = mor_count();
    morphisms.push_back(name);
    src.push_back(src_ob);
    tgt.push_back(tgt_ob);
    for (auto& row : comp) row.push_back(-1);
    comp.emplace_back(morphisms.size(), -1);
    return m;
}

void FinCat::set_comp(int g, int f, int gf) { comp[g][f] = gf; }

void FinCat::fill_identity_composites() {
    for (int m = 0; m < mor_count(); ++m) {
        int il = id_of[tgt[m]], ir = id_of[src[m]];
        if (comp[il][m] < 0) comp[il][m] = m;
        if (comp[m][ir] < 0) comp[m][ir] = m;
    }
}

ValidationReport validate_fincat(const FinCat& c) {
    ValidationReport rep;
    int nob = c.ob_count(), nmor = c.mor_count();

    // Table shapes and index ranges first; later checks assume them.
    if (static_cast<int>(c.src.size()) != nmor ||
        static_cast<int>(c.tgt.size()) != nmor) {
        rep.add("shape", "src/tgt", "src/tgt table size differs from morphism count");
        return rep;
    }
    if (static_cast<int>(c.id_of.size()) != nob) {
        rep.add("shape", "id_of", "id_of table size differs from object count");
        return rep;
    }
    if (static_cast<int>(c.comp.size()) != nmor) {
        rep.add("shape", "comp", "comp table row count differs from morphism count");
        return rep;
    }
    for (int g = 0; g < nmor; ++g)
        if (static_cast<int>(c.comp[g].size()) != nmor) {
            rep.add("shape", "comp[" + c.morphisms[g] + "]",
                    "comp table row size differs from morphism count");
            return rep;
        }

    bool dangling = false;
    for (int m = 0; m < nmor; ++m) {
        if (c.src[m] < 0 || c.src[m] >= nob) {
            rep.add("dangling-src", c.morphisms[m], "source index out of range");
            dangling = true;
        }
        if (c.tgt[m] < 0 || c.tgt[m] >= nob) {
            rep.add("dangling-tgt", c.morphisms[m], "target index out of range");
            dangling = true;
        }
    }
    for (int x = 0; x < nob; ++x) {
        if (c.id_of[x] < 0 || c.id_of[x] >= nmor) {
            rep.add("dangling-id", c.objects[x], "identity index out of range");
            dangling = true;
        }
    }
    for (int g = 0; g < nmor && !dangling; ++g)
        for (int f = 0; f < nmor; ++f)
            if (c.comp[g][f] >= nmor) {
                rep.add("dangling-comp",
                        c.morphisms[g] + "∘" + c.morphisms[f],
                        "composite index out of range");
                dangling = true;
            }
    if (dangling) return rep;

    for (int x = 0; x < nob; ++x) {
        int i = c.id_of[x];
        if (c.src[i] != x || c.tgt[i] != x)
            rep.add("id-endpoints", c.objects[x],
                    "identity " + c.morphisms[i] + " is not an endomorphism of " +
                        c.objects[x]);
    }

    // comp defined exactly on composable pairs, with matching boundaries.
    for (int g = 0; g < nmor; ++g)
        for (int f = 0; f < nmor; ++f) {
            int r = c.comp[g][f];
            if (c.composable(g, f)) {
                if (r < 0)
                    rep.add("comp-missing",
                            c.morphisms[g] + "∘" + c.morphisms[f],
                            "composable pair has no composite");
                else if (c.src[r] != c.src[f] || c.tgt[r] != c.tgt[g])
                    rep.add("comp-boundary",
                            c.morphisms[g] + "∘" + c.morphisms[f],
                            "composite " + c.morphisms[r] +
                                " has wrong endpoints");
            } else if (r >= 0) {
                rep.add("comp-spurious",
                        c.morphisms[g] + "∘" + c.morphisms[f],
                        "non-composable pair has an entry");
            }
        }
    if (!rep.ok()) return rep; // unit/assoc below would read bad entries

    for (int m = 0; m < nmor; ++m) {
        if (c.comp[c.id_of[c.tgt[m]]][m] != m)
            rep.add("unit-left", c.morphisms[m],
                    "id∘" + c.morphisms[m] + " != " + c.morphisms[m]);
        if (c.comp[m][c.id_of[c.src[m]]] != m)
            rep.add("unit-right", c.morphisms[m],
                    c.morphisms[m] + "∘id != " + c.morphisms[m]);
    }

    for (int h = 0; h < nmor; ++h)
        for (int g = 0; g < nmor; ++g) {
            if (!c.composable(h, g)) continue;
            for (int f = 0; f < nmor; ++f) {
                if (!c.composable(g, f)) continue;
                int left = c.comp[h][c.comp[g][f]];
                int right = c.comp[c.comp[h][g]][f];
                if (left != right)
                    rep.add("assoc",
                            c.morphisms[h] + "∘" + c.morphisms[g] + "∘" +
                                c.morphisms[f],
                            "(h∘g)∘f = " + c.morphisms[right] +
                                " but h∘(g∘f) = " + c.morphisms[left]);
            }
        }
    return rep;
}

FinCat terminal_cat() {
    FinCat c;
    c.add_object("*");
    c.fill_identity_composites();
    return c;
}

FinCat arrow_cat() {
    FinCat c;
    c.add_object("0");
    c.add_object("1");
    c.add_morphism("a01", 0, 1);
    c.fill_identity_composites();
    return c;
}

FinCat cospan_cat() {
    FinCat c;
    c.add_object("0");
    c.add_object("1");
    c.add_object("2");
    c.add_morphism("a02", 0, 2);
    c.add_morphism("a12", 1, 2);
    c.fill_identity_composites();
    return c;
}

FinCat isopair_cat() {
    FinCat c;
    c.add_object("0");
    c.add_object("1");
    int a = c.add_morphism("a", 0, 1);
    int b = c.add_morphism("b", 1, 0);
    c.set_comp(b, a, c.id_of[0]);
    c.set_comp(a, b, c.id_of[1]);
    c.fill_identity_composites();
    return c;
}

FinCat chain3_cat() {
    FinCat c;
    c.add_object("0");
    c.add_object("1");
    c.add_object("2");
    int a = c.add_morphism("a01", 0, 1);
    int b = c.add_morphism("a12", 1, 2);
    int ab = c.add_morphism("a02", 0, 2);
    c.set_comp(b, a, ab);
    c.fill_identity_composites();
    return c;
}

FinCat parallel_pair_cat() {
    FinCat c;
    c.add_object("0");
    c.add_object("1");
    c.add_morphism("a", 0, 1);
    c.add_morphism("b", 0, 1);
    c.fill_identity_composites();
    return c;
}

std::string describe(const FinCat& c) {
    std::string out = "category with " + std::to_string(c.ob_count()) +
                      " objects, " + std::to_string(c.mor_count()) +
                      " morphisms\n";
    out += "objects:";
    for (const auto& o : c.objects) out += " " + o;
    out += "\nmorphisms:";
    for (int m = 0; m < c.mor_count(); ++m)
        out += " " + c.morphisms[m] + ":" + c.objects[c.src[m]] + "->" +
               c.objects[c.tgt[m]];
    out += "\n";
    return out;
}

} // namespace twocat
