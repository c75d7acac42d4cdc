#include "sqdet/matroid.hpp"

#include "sqdet/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace sqdet {

namespace {

// Drop the positions in `removed` from `m`, shifting the survivors down.
Mask squeeze(Mask m, Mask removed) {
    Mask out = 0;
    int pos = 0;
    for (int i = 0; i < kMaxGround; ++i) {
        if (contains(removed, i)) continue;
        if (contains(m, i)) out |= bit(pos);
        ++pos;
    }
    return out;
}

Matroid drop_elements(const Matroid& m, Mask removed, const std::vector<Mask>& bases_before) {
    std::vector<std::string> ground;
    for (int i = 0; i < m.size(); ++i)
        if (!contains(removed, i)) ground.push_back(m.ground()[static_cast<std::size_t>(i)]);
    std::set<Mask> uniq;
    for (Mask b : bases_before) uniq.insert(squeeze(b, removed));
    return Matroid(std::move(ground), std::vector<Mask>(uniq.begin(), uniq.end()));
}

} // namespace

Matroid::Matroid(std::vector<std::string> ground, std::vector<Mask> bases)
    : ground_(std::move(ground)), bases_(std::move(bases)) {
    if (ground_.size() > static_cast<std::size_t>(kMaxGround))
        throw InputError("matroid: ground set larger than 64 elements");
    if (bases_.empty()) throw InputError("matroid: empty basis list");
    std::set<std::string> labels(ground_.begin(), ground_.end());
    if (labels.size() != ground_.size()) throw InputError("matroid: duplicate element label");
    rank_ = popcount(bases_.front());
    for (Mask b : bases_) {
        if (!is_subset(b, full())) throw InputError("matroid: basis uses an element outside the ground set");
        if (popcount(b) != rank_) throw InputError("matroid: bases of different cardinalities");
    }
    std::sort(bases_.begin(), bases_.end(), lex_less);
    if (std::adjacent_find(bases_.begin(), bases_.end()) != bases_.end())
        throw InputError("matroid: duplicate basis");
    if (size() <= 12) {
        for (Mask b1 : bases_)
            for (Mask b2 : bases_)
                for (int x : elements(b1 & ~b2)) {
                    bool ok = false;
                    for (int y : elements(b2 & ~b1))
                        if (is_basis((b1 & ~bit(x)) | bit(y))) {
                            ok = true;
                            break;
                        }
                    if (!ok) throw InputError("matroid: basis exchange axiom fails");
                }
    }
}

Matroid Matroid::uniform(int r, int n) {
    std::vector<std::string> ground;
    for (int i = 1; i <= n; ++i) ground.push_back(std::to_string(i));
    return Matroid(std::move(ground), k_subsets(n, r));
}

bool Matroid::is_basis(Mask b) const { return std::binary_search(bases_.begin(), bases_.end(), b, lex_less); }

bool Matroid::is_independent(Mask s) const {
    return std::any_of(bases_.begin(), bases_.end(), [s](Mask b) { return is_subset(s, b); });
}

int Matroid::index_of(std::string_view label) const {
    for (std::size_t i = 0; i < ground_.size(); ++i)
        if (ground_[i] == label) return static_cast<int>(i);
    throw InputError("element '" + std::string(label) + "' is not in the ground set");
}

Mask Matroid::mask_of(const std::vector<std::string>& labels) const {
    Mask m = 0;
    for (const auto& l : labels) m |= bit(index_of(l));
    return m;
}

std::vector<std::string> Matroid::labels_of(Mask s) const {
    std::vector<std::string> out;
    for (int i : elements(s)) out.push_back(ground_[static_cast<std::size_t>(i)]);
    return out;
}

bool flat_less(const Flat& a, const Flat& b) {
    if (a.rank != b.rank) return a.rank < b.rank;
    return lex_less(a.elements, b.elements);
}

int rank(const Matroid& m, Mask s) {
    if (!is_subset(s, m.full())) throw InputError("rank: subset is not contained in the ground set");
    int best = 0;
    for (Mask b : m.bases()) best = std::max(best, popcount(b & s));
    return best;
}

Flat closure(const Matroid& m, Mask s) {
    const int r = rank(m, s);
    Mask cl = s;
    for (int e = 0; e < m.size(); ++e)
        if (!contains(s, e) && rank(m, s | bit(e)) == r) cl |= bit(e);
    return {cl, r};
}

bool is_flat(const Matroid& m, Mask s) { return is_subset(s, m.full()) && closure(m, s).elements == s; }

std::vector<Flat> flats(const Matroid& m, std::size_t max_flats) {
    std::vector<Flat> out{closure(m, 0)};
    std::unordered_set<Mask> seen{out.front().elements};
    for (std::size_t head = 0; head < out.size(); ++head) {
        const Flat f = out[head];
        for (int e = 0; e < m.size(); ++e) {
            if (contains(f.elements, e)) continue;
            Flat g = closure(m, f.elements | bit(e));
            if (seen.insert(g.elements).second) {
                out.push_back(g);
                if (out.size() > max_flats) throw SizeError("flats: more than " + std::to_string(max_flats) + " flats");
            }
        }
    }
    std::sort(out.begin(), out.end(), flat_less);
    return out;
}

FlatLattice::FlatLattice(const Matroid& m) : flats_(sqdet::flats(m)), mobius_(flats_.size()) {
    has_loops_ = flats_.front().elements != 0;
    if (has_loops_) return;
    for (std::size_t i = 0; i < flats_.size(); ++i) {
        if (i == 0) {
            mobius_[i] = 1;
            continue;
        }
        BigInt acc = 0;
        for (std::size_t j = 0; j < i; ++j)
            if (flats_[j].elements != flats_[i].elements && is_subset(flats_[j].elements, flats_[i].elements))
                acc += mobius_[j];
        mobius_[i] = -acc;
    }
}

std::size_t FlatLattice::index_of(Mask k) const {
    for (std::size_t i = 0; i < flats_.size(); ++i)
        if (flats_[i].elements == k) return i;
    throw InputError("subset is not a flat");
}

BigInt FlatLattice::mobius_plus(std::size_t idx) const {
    return flats_[idx].rank % 2 == 0 ? mobius_[idx] : BigInt(-mobius_[idx]);
}

BigInt mobius_plus(const Matroid& m, Mask k) {
    if (!is_flat(m, k)) throw InputError("mobius_plus: argument is not a flat");
    FlatLattice lat(m);
    return lat.mobius_plus(lat.index_of(k));
}

BigInt mobius_plus(const Matroid& m) { return mobius_plus(m, m.full()); }

Mask fundamental_circuit(const Matroid& m, Mask b, int e) {
    Mask c = bit(e);
    for (int x : elements(b))
        if (m.is_independent((b & ~bit(x)) | bit(e))) c |= bit(x);
    return c;
}

BigInt nbc_basis_count(const Matroid& m, Mask k) {
    if (!is_flat(m, k)) throw InputError("nbc_basis_count: argument is not a flat");
    const int rk = rank(m, k);
    std::set<Mask> restricted;
    for (Mask b : m.bases())
        if (popcount(b & k) == rk) restricted.insert(b & k);
    BigInt count = 0;
    for (Mask b : restricted) {
        bool nbc = true;
        for (int e : elements(k & ~b)) {
            // b contains a broken circuit iff some outside e is the least
            // element of its fundamental circuit.
            Mask c = fundamental_circuit(m, b, e);
            if (std::countr_zero(c) == e) {
                nbc = false;
                break;
            }
        }
        if (nbc) ++count;
    }
    return count;
}

std::vector<Mask> circuits(const Matroid& m) {
    std::vector<Mask> out;
    for (int k = 1; k <= std::min(m.rank() + 1, m.size()); ++k)
        for (Mask s : k_subsets(m.size(), k)) {
            if (m.is_independent(s)) continue;
            bool minimal = true;
            for (int x : elements(s))
                if (!m.is_independent(s & ~bit(x))) {
                    minimal = false;
                    break;
                }
            if (minimal) out.push_back(s);
        }
    return out;
}

bool is_loop(const Matroid& m, int e) {
    return std::none_of(m.bases().begin(), m.bases().end(), [e](Mask b) { return contains(b, e); });
}

bool is_coloop(const Matroid& m, int e) {
    return std::all_of(m.bases().begin(), m.bases().end(), [e](Mask b) { return contains(b, e); });
}

Matroid deletion(const Matroid& m, int e) {
    std::vector<Mask> bases;
    const bool coloop = is_coloop(m, e);
    for (Mask b : m.bases())
        if (coloop)
            bases.push_back(b & ~bit(e));
        else if (!contains(b, e))
            bases.push_back(b);
    return drop_elements(m, bit(e), bases);
}

Matroid contraction(const Matroid& m, int e) {
    if (is_loop(m, e)) return deletion(m, e);
    std::vector<Mask> bases;
    for (Mask b : m.bases())
        if (contains(b, e)) bases.push_back(b & ~bit(e));
    return drop_elements(m, bit(e), bases);
}

Matroid contraction(const Matroid& m, Mask k) {
    const int rk = rank(m, k);
    std::vector<Mask> bases;
    for (Mask b : m.bases())
        if (popcount(b & k) == rk) bases.push_back(b & ~k);
    return drop_elements(m, k, bases);
}

Matroid restriction(const Matroid& m, Mask s) {
    const int rs = rank(m, s);
    std::vector<Mask> bases;
    for (Mask b : m.bases())
        if (popcount(b & s) == rs) bases.push_back(b & s);
    return drop_elements(m, m.full() & ~s, bases);
}

Matroid dual(const Matroid& m) {
    std::vector<Mask> bases;
    for (Mask b : m.bases()) bases.push_back(m.full() & ~b);
    return Matroid(m.ground(), bases);
}

bool is_connected(const Matroid& m) {
    const int n = m.size();
    if (n <= 1) return true;
    std::vector<int> parent(m.ground().size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    const Mask b0 = m.bases().front();
    for (int e : elements(m.full() & ~b0)) {
        for (int x : elements(fundamental_circuit(m, b0, e))) parent[find(x)] = find(e);
    }
    const int root = find(0);
    for (int i = 1; i < n; ++i)
        if (find(i) != root) return false;
    return true;
}

BigInt beta(const Matroid& m) {
    const int n = m.size();
    if (n == 0) return 0;
    if (n == 1) return is_coloop(m, 0) ? 1 : 0;
    if (!is_connected(m)) return 0;
    for (int e = 0; e < n; ++e)
        if (!is_loop(m, e) && !is_coloop(m, e)) return beta(deletion(m, e)) + beta(contraction(m, e));
    throw InternalError("beta: connected matroid with every element a loop or coloop");
}

BigInt beta_sum(const Matroid& m, Mask k) {
    if (!is_flat(m, k)) throw InputError("beta_sum: argument is not a flat");
    FlatLattice lat(m);
    BigInt acc = 0;
    for (std::size_t i = 0; i < lat.flats().size(); ++i)
        if (is_subset(lat.flats()[i].elements, k)) acc += lat.mobius(i) * lat.flats()[i].rank;
    return rank(m, k) % 2 == 0 ? acc : BigInt(-acc);
}

std::vector<Flat> coloop_free_flats(const Matroid& m) {
    std::vector<Flat> out;
    for (const Flat& f : flats(m)) {
        bool ok = true;
        for (int e : elements(f.elements))
            if (rank(m, f.elements & ~bit(e)) < f.rank) {
                ok = false;
                break;
            }
        if (ok) out.push_back(f);
    }
    return out;
}

} // namespace sqdet
